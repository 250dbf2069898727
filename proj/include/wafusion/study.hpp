#pragma once

#include "wafusion/metrics.hpp"
#include "wafusion/pipeline.hpp"

#include <vector>

namespace wafusion {

struct StudyOptions {
    uint32_t max_bonafide_pairs = 60;
    uint32_t max_same_identity_pairs = 30;
    uint32_t max_distant_identity_pairs = 30;
    double gamma = 0.5;
    MorphMode mode = MorphMode::ll_only;
    uint64_t seed = 0;
};

// Mated-morph vulnerability study on a labeled toy dataset: bona fide scores
// from same-identity sample pairs; attack scores from morphs probed against
// other samples of each contributing identity (min over the two). Morphs are
// split into same-identity pairs and distant (different-identity) pairs so
// the two EERs can be compared.
struct StudyResult {
    ScoreSet overall;
    ScoreSet same_identity;
    ScoreSet distant_identity;
    MetricReport report_overall;
    MetricReport report_same_identity;
    MetricReport report_distant_identity;
    double mean_morph_ssim = 0.0;  // morph vs the preprocessed contributors
    uint32_t n_bonafide = 0;
    uint32_t n_same_identity_morphs = 0;
    uint32_t n_distant_identity_morphs = 0;
};

StudyResult run_vulnerability_study(const std::vector<LabeledImage>& data,
                                    const ModelBundle& bundle, const StudyOptions& opts);

}  // namespace wafusion
