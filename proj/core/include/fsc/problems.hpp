#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsc/birkhoff.hpp"
#include "fsc/fracops.hpp"
#include "fsc/linsolve.hpp"
#include "fsc/power_sum.hpp"

namespace fsc {

enum class ProblemKind {
    /// RL D^nu u + a u = f, nu in (0,1), u(-1) = 0.
    ivp,
    /// RL D^nu u + a u' + b u = f, nu in (1,2), u(-1) = u(1) = 0.
    bvp,
};

enum class Scheme { fsc, pfsc };

/// Collocation (x) node family. `automatic` uses Gauss-Jacobi(-mu, mu) points for
/// the IVP and Chebyshev points of the second kind for the BVP.
enum class NodeFamily { automatic, gauss_jacobi, chebyshev };

using ScalarFunction = std::function<double(double)>;

struct ProblemSpec {
    ProblemKind kind = ProblemKind::ivp;
    double nu = 0.5;
    std::string name;
    ScalarFunction a;
    /// Only used by the BVP.
    ScalarFunction b;
    ScalarFunction rhs;
    std::optional<GeneralizedPowerSum> exact;

    /// Throws ParameterError if nu is outside the range of `kind` or the exact
    /// solution violates the homogeneous conditions by more than 1e-12.
    void validate() const;
};

/// u = e^{x+1} - 1 + (x+1)^{46/7}, a = 2 + sin(25x), f manufactured; any nu in (0,1).
ProblemSpec ivp_spec(double nu);

/// u = e^{x+1} - x - 2 - (e^2-3)/4 (x+1)^2 + (x+1)^{46/7} - 2 (x+1)^{39/7},
/// a = 2 + sin(4 pi x), b = 2 + cos x, f manufactured; any nu in (1,2).
ProblemSpec bvp_spec(double nu);

/// ivp_spec(0.8).
ProblemSpec example1_spec();

/// bvp_spec(1.9).
ProblemSpec example2_spec();

struct AssembledSystem {
    Scheme scheme = Scheme::fsc;
    Matrix matrix;
    Vector rhs;
    /// u = recovery * v for PFSC systems.
    std::optional<Matrix> recovery;
    /// Interpolation basis; for the BVP it spans all N nodes including x_N = 1.
    FracBasis basis;
    /// Positions of the unknowns u_i (first N-1 basis nodes for the BVP).
    std::vector<double> x_nodes;
    std::vector<double> y_nodes;

    [[nodiscard]] int dimension() const noexcept { return static_cast<int>(matrix.rows()); }
};

/// Collocation nodes (x) and test nodes (y) as used by the assemblers.
struct NodePair {
    /// All basis nodes; for the BVP the last one is x_N = 1.
    std::vector<double> x;
    /// Set when x is exactly a Gauss-Jacobi(-mu, mu) rule (closed-form basis applies).
    std::optional<QuadratureRule> x_rule;
    /// Gauss-Legendre (IVP) or Gauss-Jacobi(1,1) (BVP) test nodes.
    QuadratureRule y_rule;
};

NodePair ivp_nodes(double nu, int n, NodeFamily family);
NodePair bvp_nodes(double nu, int n, NodeFamily family);

AssembledSystem assemble_ivp(const ProblemSpec& spec, int n, Scheme scheme,
                             NodeFamily family = NodeFamily::automatic);
AssembledSystem assemble_bvp(const ProblemSpec& spec, int n, Scheme scheme,
                             NodeFamily family = NodeFamily::automatic);
AssembledSystem assemble(const ProblemSpec& spec, int n, Scheme scheme,
                         NodeFamily family = NodeFamily::automatic);

/// u = B v; throws UsageError for FSC systems.
Vector recover(const AssembledSystem& system, const Vector& v);

/// Nodal solution from the raw solution of `system` (identity for FSC).
Vector nodal_solution(const AssembledSystem& system, const Vector& solution);

/// max_i |u_i - u(x_i)|; throws UsageError without an exact solution.
double max_error(std::span<const double> u_numeric, const ProblemSpec& spec,
                 std::span<const double> x_nodes);

/// Max error of the fractional interpolant of the nodal solution on a uniform grid
/// of `points` points over [-1, 1].
double max_error_on_grid(const AssembledSystem& system, const Vector& u_nodal,
                         const ProblemSpec& spec, int points = 1000);

} // namespace fsc
