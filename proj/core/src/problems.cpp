#include "fsc/problems.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fsc/errors.hpp"

namespace fsc {

namespace {

constexpr double kBoundaryTolerance = 1e-12;

Vector sample(const ScalarFunction& fn, std::span<const double> pts) {
    Vector out(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = fn ? fn(pts[i]) : 0.0;
    }
    return out;
}

std::string kind_name(ProblemKind kind) { return kind == ProblemKind::ivp ? "ivp" : "bvp"; }

} // namespace

void ProblemSpec::validate() const {
    const bool ivp = kind == ProblemKind::ivp;
    if (ivp && !(nu > 0.0 && nu < 1.0)) {
        throw ParameterError("IVP requires nu in (0, 1), got " + std::to_string(nu));
    }
    if (!ivp && !(nu > 1.0 && nu < 2.0)) {
        throw ParameterError("BVP requires nu in (1, 2), got " + std::to_string(nu));
    }
    if (!rhs) {
        throw ParameterError("problem '" + name + "' has no right-hand side");
    }
    if (exact) {
        if (std::abs((*exact)(-1.0)) > kBoundaryTolerance) {
            throw ParameterError("exact solution violates u(-1) = 0");
        }
        if (!ivp && std::abs((*exact)(1.0)) > kBoundaryTolerance) {
            throw ParameterError("exact solution violates u(1) = 0");
        }
    }
}

ProblemSpec ivp_spec(double nu) {
    GeneralizedPowerSum u = GeneralizedPowerSum::exp_shifted() +
                            GeneralizedPowerSum({{-1.0, 0.0}, {1.0, 46.0 / 7.0}});
    ProblemSpec spec;
    spec.kind = ProblemKind::ivp;
    spec.nu = nu;
    spec.name = "ivp(nu=" + std::to_string(nu) + ")";
    spec.a = [](double x) { return 2.0 + std::sin(25.0 * x); };
    const GeneralizedPowerSum du = rl_power_rule(nu, u);
    spec.rhs = [u, du, a = spec.a](double x) { return du(x) + a(x) * u(x); };
    spec.exact = std::move(u);
    spec.validate();
    return spec;
}

ProblemSpec bvp_spec(double nu) {
    const double e2 = std::exp(2.0);
    // -x - 2 = -(x+1) - 1, so the series terms k = 0, 1 of exp(x+1) cancel exactly.
    GeneralizedPowerSum u = GeneralizedPowerSum::exp_shifted() +
                            GeneralizedPowerSum({{-1.0, 1.0},
                                                 {-1.0, 0.0},
                                                 {-(e2 - 3.0) / 4.0, 2.0},
                                                 {1.0, 46.0 / 7.0},
                                                 {-2.0, 39.0 / 7.0}});
    if (u.coefficient(0.0) != 0.0) {
        throw AssemblyError("bvp_spec: constant term of the exact solution did not cancel");
    }
    ProblemSpec spec;
    spec.kind = ProblemKind::bvp;
    spec.nu = nu;
    spec.name = "bvp(nu=" + std::to_string(nu) + ")";
    spec.a = [](double x) { return 2.0 + std::sin(4.0 * std::numbers::pi * x); };
    spec.b = [](double x) { return 2.0 + std::cos(x); };
    const GeneralizedPowerSum du = rl_power_rule(nu, u);
    const GeneralizedPowerSum u1 = u.derivative();
    spec.rhs = [u, du, u1, a = spec.a, b = spec.b](double x) {
        return du(x) + a(x) * u1(x) + b(x) * u(x);
    };
    spec.exact = std::move(u);
    spec.validate();
    return spec;
}

ProblemSpec example1_spec() {
    ProblemSpec spec = ivp_spec(0.8);
    spec.name = "example 1";
    return spec;
}

ProblemSpec example2_spec() {
    ProblemSpec spec = bvp_spec(1.9);
    spec.name = "example 2";
    return spec;
}

NodePair ivp_nodes(double nu, int n, NodeFamily family) {
    if (n < 1) {
        throw ParameterError("IVP requires N >= 1");
    }
    NodePair nodes;
    if (family == NodeFamily::chebyshev) {
        if (n == 1) {
            nodes.x = {1.0};
        } else {
            const auto cheb = chebyshev_lobatto(n);
            nodes.x.assign(cheb.begin() + 1, cheb.end());
        }
    } else {
        nodes.x_rule = gauss_jacobi(n, {-nu, nu});
        nodes.x = nodes.x_rule->nodes;
    }
    nodes.y_rule = gauss_legendre(n);
    return nodes;
}

NodePair bvp_nodes(double nu, int n, NodeFamily family) {
    if (n < 3) {
        throw ParameterError("BVP requires N >= 3");
    }
    const double mu = nu - 1.0;
    NodePair nodes;
    if (family == NodeFamily::gauss_jacobi) {
        nodes.x = gauss_jacobi(n - 1, {-mu, mu}).nodes;
        nodes.x.push_back(1.0);
    } else {
        const auto cheb = chebyshev_lobatto(n);
        nodes.x.assign(cheb.begin() + 1, cheb.end());
    }
    nodes.y_rule = gauss_jacobi(n - 1, {1.0, 1.0});
    return nodes;
}

AssembledSystem assemble_ivp(const ProblemSpec& spec, int n, Scheme scheme, NodeFamily family) {
    if (spec.kind != ProblemKind::ivp) {
        throw UsageError("assemble_ivp called with a " + kind_name(spec.kind) + " problem");
    }
    spec.validate();
    const double nu = spec.nu;
    NodePair nodes = ivp_nodes(nu, n, family);
    const std::vector<double>& y = nodes.y_rule.nodes;

    AssembledSystem sys;
    sys.scheme = scheme;
    sys.basis = nodes.x_rule ? build_basis_gj(nu, *nodes.x_rule) : build_basis(nu, nodes.x);
    sys.x_nodes = nodes.x;
    sys.y_nodes = y;
    sys.rhs = sample(spec.rhs, y);
    const Vector a = sample(spec.a, y);

    if (scheme == Scheme::fsc) {
        sys.matrix = frac_deriv_matrix(sys.basis, y).entries +
                     a.asDiagonal() * value_matrix(sys.basis, y).entries;
    } else {
        const BirkhoffBasis birk = birkhoff_basis_case1_gl(nu, nodes.y_rule);
        sys.matrix = Matrix::Identity(n, n) + a.asDiagonal() * birkhoff_matrix(birk, y);
        sys.recovery = birkhoff_matrix(birk, nodes.x);
    }
    return sys;
}

AssembledSystem assemble_bvp(const ProblemSpec& spec, int n, Scheme scheme, NodeFamily family) {
    if (spec.kind != ProblemKind::bvp) {
        throw UsageError("assemble_bvp called with a " + kind_name(spec.kind) + " problem");
    }
    spec.validate();
    const double nu = spec.nu;
    const double mu = nu - 1.0;
    NodePair nodes = bvp_nodes(nu, n, family);
    const std::vector<double>& y = nodes.y_rule.nodes;
    const int m = n - 1;

    AssembledSystem sys;
    sys.scheme = scheme;
    sys.basis = build_basis(mu, nodes.x);
    sys.x_nodes.assign(nodes.x.begin(), nodes.x.end() - 1);
    sys.y_nodes = y;
    sys.rhs = sample(spec.rhs, y);
    const Vector a = sample(spec.a, y);
    const Vector b = sample(spec.b, y);

    if (scheme == Scheme::fsc) {
        // Column N (the x_N = 1 node) multiplies u(1) = 0 and is dropped.
        sys.matrix = frac_deriv1p_matrix(sys.basis, y).entries.leftCols(m) +
                     a.asDiagonal() * deriv1_matrix(sys.basis, y).entries.leftCols(m) +
                     b.asDiagonal() * value_matrix(sys.basis, y).entries.leftCols(m);
    } else {
        const BirkhoffBasis birk = birkhoff_basis_case2_gj(nu, nodes.y_rule);
        sys.matrix = Matrix::Identity(m, m) + a.asDiagonal() * birkhoff_deriv_matrix(birk, y) +
                     b.asDiagonal() * birkhoff_matrix(birk, y);
        sys.recovery = birkhoff_matrix(birk, sys.x_nodes);
    }
    return sys;
}

AssembledSystem assemble(const ProblemSpec& spec, int n, Scheme scheme, NodeFamily family) {
    return spec.kind == ProblemKind::ivp ? assemble_ivp(spec, n, scheme, family)
                                         : assemble_bvp(spec, n, scheme, family);
}

Vector recover(const AssembledSystem& system, const Vector& v) {
    if (!system.recovery) {
        throw UsageError("recover: only PFSC systems carry a recovery matrix");
    }
    if (v.size() != system.recovery->cols()) {
        throw UsageError("recover: vector length does not match the system");
    }
    return *system.recovery * v;
}

Vector nodal_solution(const AssembledSystem& system, const Vector& solution) {
    return system.scheme == Scheme::pfsc ? recover(system, solution) : solution;
}

double max_error(std::span<const double> u_numeric, const ProblemSpec& spec,
                 std::span<const double> x_nodes) {
    if (!spec.exact) {
        throw UsageError("max_error: problem '" + spec.name + "' has no exact solution");
    }
    if (u_numeric.size() != x_nodes.size()) {
        throw UsageError("max_error: solution and node counts differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < x_nodes.size(); ++i) {
        worst = std::max(worst, std::abs(u_numeric[i] - (*spec.exact)(x_nodes[i])));
    }
    return worst;
}

double max_error_on_grid(const AssembledSystem& system, const Vector& u_nodal,
                         const ProblemSpec& spec, int points) {
    if (!spec.exact) {
        throw UsageError("max_error_on_grid: problem '" + spec.name + "' has no exact solution");
    }
    if (points < 2) {
        throw UsageError("max_error_on_grid: need at least two grid points");
    }
    Vector full = Vector::Zero(system.basis.size());
    if (u_nodal.size() > full.size()) {
        throw UsageError("max_error_on_grid: solution longer than the basis");
    }
    full.head(u_nodal.size()) = u_nodal;

    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[i] = -1.0 + 2.0 * i / (points - 1);
    }
    const Vector approx = value_matrix(system.basis, grid).entries * full;
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        worst = std::max(worst, std::abs(approx(i) - (*spec.exact)(grid[i])));
    }
    return worst;
}

} // namespace fsc
