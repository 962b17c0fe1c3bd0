#pragma once

#include <span>
#include <vector>

#include "fsc/orthopoly.hpp"

namespace fsc {

/// Collocation points: strictly increasing, first point > -1, last point <= 1.
class NodeSet {
public:
    NodeSet() = default;

    /// Validates the ordering/range and throws ParameterError when violated.
    explicit NodeSet(std::vector<double> points);

    [[nodiscard]] std::span<const double> points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] const std::vector<double>& vector() const noexcept { return points_; }

private:
    std::vector<double> points_;
};

/// Gauss rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1].
struct QuadratureRule {
    JacobiParams params;
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(nodes.size()); }
    [[nodiscard]] NodeSet node_set() const { return NodeSet(nodes); }
};

/// Nodes are the zeros of P_n^{(alpha,beta)}, found by Newton iteration with
/// deflation; throws NumericalFailure if a root does not converge in 100 steps.
QuadratureRule gauss_jacobi(int n, const JacobiParams& params);

QuadratureRule gauss_legendre(int n);

/// x_j = -cos(j*pi/N), j = 0..N, exactly antisymmetric about 0.
std::vector<double> chebyshev_lobatto(int n);

/// Integral of (1-x)^alpha (1+x)^beta over [-1, 1].
double jacobi_weight_integral(const JacobiParams& params);

} // namespace fsc
