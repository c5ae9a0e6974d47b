#pragma once

#include <Eigen/Dense>
#include <complex>

namespace expp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Complex = std::complex<double>;

// Matrix-shaped view over a flat column-major point.
inline Eigen::Map<const Matrix> as_matrix(const Vector& x, int n, int r) {
    return Eigen::Map<const Matrix>(x.data(), n, r);
}

inline Vector as_vector(const Matrix& X) {
    return Eigen::Map<const Vector>(X.data(), X.size());
}

}  // namespace expp
