#pragma once

#include <span>
#include <vector>

#include "fsc/linsolve.hpp"
#include "fsc/orthopoly.hpp"

namespace fsc::detail {

/// out(i, k) = P_{first+k}^{(a,b)}(y_i), k = 0..count-1.
inline Matrix jacobi_rows(const JacobiParams& params, int first, int count,
                          std::span<const double> y) {
    Matrix out(static_cast<Eigen::Index>(y.size()), count);
    std::vector<double> buf(static_cast<std::size_t>(first + count) + 1);
    for (std::size_t i = 0; i < y.size(); ++i) {
        jacobi_eval_all(params, first + count, y[i], buf.data());
        for (int k = 0; k < count; ++k) {
            out(static_cast<Eigen::Index>(i), k) = buf[static_cast<std::size_t>(first + k)];
        }
    }
    return out;
}

/// Derivatives d/dx P_{first+k}^{(a,b)}(y_i), via the (a+1, b+1) family.
inline Matrix jacobi_deriv_rows(const JacobiParams& params, int first, int count,
                                std::span<const double> y) {
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(y.size()), count);
    const JacobiParams shifted{params.alpha + 1.0, params.beta + 1.0};
    const int top = first + count - 1;
    if (top < 1) {
        return out;
    }
    std::vector<double> buf(static_cast<std::size_t>(top));
    for (std::size_t i = 0; i < y.size(); ++i) {
        jacobi_eval_all(shifted, top - 1, y[i], buf.data());
        for (int k = 0; k < count; ++k) {
            const int n = first + k;
            if (n == 0) {
                continue;
            }
            out(static_cast<Eigen::Index>(i), k) =
                0.5 * (n + params.alpha + params.beta + 1.0) * buf[static_cast<std::size_t>(n - 1)];
        }
    }
    return out;
}

} // namespace fsc::detail
