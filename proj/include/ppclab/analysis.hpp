#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ppclab/points.hpp"
#include "ppclab/verification.hpp"

namespace ppclab {

enum class OutputFormat { Json, Csv };

struct AnalysisConfig {
    std::optional<std::string> input_file;
    std::optional<std::string> family;
    std::size_t max_freq = 0; // 0 = default rule max(1e4, 100 N^2), capped at 1e7
    std::optional<double> delta;
    std::vector<double> s_grid = {0.5, 1.0, 2.0, 4.0};
    OutputFormat format = OutputFormat::Json;
    std::size_t cap_n = 64;            // corollary1 difference-set cap on N
    std::size_t cassels_exact_cap = 128;
    double work_budget = 0.0; // 0 = PPCLAB_MAX_WORK env var, else 4e9

    double effective_budget() const;
    /// Spectral truncation after defaults and the O(NK + N^2) work guard.
    std::size_t effective_freq(std::size_t n) const;
    double delta_or_default() const { return delta.value_or(0.3); }
};

// "family:key=value,..." with families equispaced | kronecker | vdc |
// random | perturbed. Errors carry the character position.
PointSet make_family(const std::string& spec);

// Same grammar, but values may be '|'-separated lists; expands the cartesian
// product in declaration order (last key fastest). An empty list gives an
// empty expansion.
std::vector<PointSet> make_family_range(const std::string& spec);

PointSet load_input(const AnalysisConfig& config);

nlohmann::ordered_json analyze(const PointSet& p, const AnalysisConfig& config);
std::string analyze_csv(const nlohmann::ordered_json& report);

// Full verification battery over one input set, sorted by record name.
std::vector<VerificationRecord> verify_suite(const PointSet& p, const AnalysisConfig& config);
/// 0 iff no non-informational record failed.
int verify_exit_code(const std::vector<VerificationRecord>& records);

std::string sweep_csv(const std::string& range_spec, const AnalysisConfig& config);

} // namespace ppclab
