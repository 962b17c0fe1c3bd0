#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsc/problems.hpp"

namespace fsc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr std::string_view kCsvHeader =
    "N,cond_fsc,cond_pfsc,iters_fsc,iters_pfsc,err_fsc,err_pfsc";

enum class SolverKind { direct, bicgstab };

/// One line of a sweep; iteration counts are empty when the solve did not converge.
struct SweepRow {
    int n = 0;
    double cond_fsc = 0.0;
    double cond_pfsc = 0.0;
    std::optional<double> iters_fsc;
    std::optional<double> iters_pfsc;
    double err_fsc = 0.0;
    double err_pfsc = 0.0;
};

struct SweepOptions {
    SolverKind solver = SolverKind::bicgstab;
    double tol = 1e-9;
    /// <= 0 selects maxit = system dimension.
    int maxit = 0;
    NodeFamily nodes = NodeFamily::automatic;
};

/// Parses "8,16,32" or range items "8:1024:x2" (geometric), "10:50:+10" / "10:50:10"
/// (arithmetic). The result must be strictly increasing; throws UsageError otherwise.
std::vector<int> parse_n_list(std::string_view text);

/// Condition numbers, BiCGSTAB iteration counts and max nodal errors for both schemes.
SweepRow compute_sweep_row(const ProblemSpec& spec, int n, const SweepOptions& options);

/// Header plus one line per row: %.16e reals, `nc` for non-converged iterations, LF endings.
std::string format_csv(const std::vector<SweepRow>& rows);

/// Inverse of format_csv; throws UsageError on an empty or malformed document.
std::vector<SweepRow> parse_csv(std::string_view text);

/// Gnuplot script with three panels (conditioning, iterations, errors) reading `csv_path`.
std::string plot_script(std::string_view csv_path);

/// Entry point shared by the `fsc` executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fsc::cli
