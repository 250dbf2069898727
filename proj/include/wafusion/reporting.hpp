#pragma once

#include "wafusion/metrics.hpp"

#include <filesystem>
#include <optional>

namespace wafusion {

inline constexpr int kScoresCsvVersion = 1;
inline constexpr int kReportJsonVersion = 1;

// CSV with header `label,score`; label in {bonafide, attack}; scores are
// locale-independent decimal literals with round-trip precision.
ScoreSet read_scores(const std::filesystem::path& path);
void write_scores(const std::filesystem::path& path, const ScoreSet& s);

// JSON with fixed keys: auc, eer, eer_threshold, apcer_at_bpcer_5/10/30,
// bpcer_at_apcer_5/10/30. Non-finite thresholds serialize as "inf"/"-inf".
void write_report(const MetricReport& report, const std::filesystem::path& path);

// CSV `threshold,apcer,bpcer` (one row per curve point, sentinels included)
// plus an optional self-contained SVG with the APCER/BPCER trade-off and the
// bona fide acceptance curve.
void emit_curves(const RocCurve& curve, const std::filesystem::path& csv_path,
                 const std::optional<std::filesystem::path>& svg_path = std::nullopt);

}  // namespace wafusion
