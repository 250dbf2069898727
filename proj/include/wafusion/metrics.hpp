#pragma once

#include "wafusion/image.hpp"

#include <utility>
#include <vector>

namespace wafusion {

// Similarity scores, higher = more similar = accepted by the verifier.
struct ScoreSet {
    std::vector<double> bonafide;
    std::vector<double> attack;
};

struct RocPoint {
    double threshold;
    double apcer;  // fraction of attacks with score >= threshold
    double bpcer;  // fraction of bona fide with score < threshold
};

// Points ordered by ascending threshold: -inf sentinel (1,0), midpoints of
// consecutive distinct scores, +inf sentinel (0,1).
struct RocCurve {
    std::vector<RocPoint> points;
};

struct MetricReport {
    double auc = 0.0;
    double eer = 0.0;
    double eer_threshold = 0.0;
    double apcer_at_bpcer_5 = 0.0;
    double apcer_at_bpcer_10 = 0.0;
    double apcer_at_bpcer_30 = 0.0;
    double bpcer_at_apcer_5 = 0.0;
    double bpcer_at_apcer_10 = 0.0;
    double bpcer_at_apcer_30 = 0.0;
};

// Mean over non-overlapping window x window tiles (ragged edges included) of
// the standard SSIM term with C1=(k1 peak)^2, C2=(k2 peak)^2.
double ssim(const ImageBuffer& x, const ImageBuffer& y, double k1 = 0.01, double k2 = 0.03,
            double peak = 1.0, uint32_t window = 8);

// 10*log10(peak^2/MSE); +inf for identical inputs.
double psnr(const ImageBuffer& x, const ImageBuffer& y, double peak = 1.0);

RocCurve roc(const ScoreSet& s);

// Verifier-convention AUC: trapezoidal area of (1-BPCER) vs APCER, equal to
// P(bonafide > attack) + P(tie)/2 on finite samples. 1.0 when every bona fide
// outscores every attack, 0.5 for identical score multisets.
double auc(const RocCurve& c);

// (rate, threshold) at the ROC threshold minimizing |APCER-BPCER|, ties going
// to the lower threshold; rate is the mean of the two errors there.
std::pair<double, double> eer(const ScoreSet& s);

// APCER at the smallest threshold whose BPCER reaches the target budget.
double apcer_at_bpcer(const ScoreSet& s, double target);
// BPCER at the largest threshold whose APCER reaches the target budget.
double bpcer_at_apcer(const ScoreSet& s, double target);

MetricReport compute_report(const ScoreSet& s);

class Embedder {
public:
    virtual ~Embedder() = default;
    virtual std::vector<double> embed(const ImageBuffer& img) const = 0;
};

// Downsample to an 8x8 grid of block means per channel, zero-mean, unit-norm.
class BaselineEmbedder final : public Embedder {
public:
    std::vector<double> embed(const ImageBuffer& img) const override;
};

// Cosine similarity of embeddings; symmetric, in [-1,1] for the baseline.
// Two zero embeddings compare as 1.0 (indistinguishable), one zero as 0.0.
double embedding_similarity(const ImageBuffer& a, const ImageBuffer& b, const Embedder& emb);

// Attack score for morph i = min(sim(morph, probes_a[i]), sim(morph, probes_b[i]))
// (the morph must fool the verifier against both contributors); bona fide
// scores come from mated genuine pairs.
ScoreSet build_score_set(const std::vector<ImageBuffer>& morphs,
                         const std::vector<ImageBuffer>& probes_a,
                         const std::vector<ImageBuffer>& probes_b,
                         const std::vector<std::pair<ImageBuffer, ImageBuffer>>& bonafide_pairs,
                         const Embedder& emb);

}  // namespace wafusion
