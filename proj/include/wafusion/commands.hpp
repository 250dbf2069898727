#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace wafusion::cmd {

// File-level command implementations shared by the CLI (through the C API).
// Every command writes a reproducibility run log (effective config echo,
// seed, file-format versions); re-running a log's config reproduces
// bit-identical artifacts.

void decompose(const std::filesystem::path& in_pgm, const std::filesystem::path& out_dir);
void reconstruct_subbands(const std::filesystem::path& subband_dir,
                          const std::filesystem::path& out_pgm);
void make_dataset(uint32_t n, uint32_t size, uint32_t identities, uint64_t seed,
                  const std::filesystem::path& out_dir);
void train(const std::filesystem::path& config_json, const std::filesystem::path& data_dir,
           const std::filesystem::path& out_bundle_dir);
void morph(const std::filesystem::path& a_pgm, const std::filesystem::path& b_pgm,
           const std::filesystem::path& bundle_dir, double gamma, const std::string& mode,
           const std::filesystem::path& out_pgm);
void batch_morph(const std::filesystem::path& manifest_csv,
                 const std::filesystem::path& bundle_dir);
void evaluate(const std::filesystem::path& scores_csv, const std::filesystem::path& report_json,
              const std::optional<std::filesystem::path>& roc_csv,
              const std::optional<std::filesystem::path>& svg);
void vulnerability(const std::filesystem::path& bundle_dir, const std::filesystem::path& data_dir,
                   const std::filesystem::path& report_json,
                   const std::optional<std::filesystem::path>& roc_csv);

}  // namespace wafusion::cmd
