#include "expp/hull_projections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace expp {

Vector clip_box(const Vector& z, const Vector& a, const Vector& b) {
    if (a.size() != z.size() || b.size() != z.size())
        throw std::invalid_argument("clip_box: bound dimensions do not match");
    if ((a.array() > b.array()).any())
        throw std::invalid_argument("clip_box: lower bound exceeds upper bound");
    return z.cwiseMax(a).cwiseMin(b);
}

Vector clip_box(const Vector& z, double a, double b) {
    if (a > b) throw std::invalid_argument("clip_box: lower bound exceeds upper bound");
    return z.cwiseMax(a).cwiseMin(b);
}

Vector project_simplex(const Vector& z) {
    const int n = static_cast<int>(z.size());
    std::vector<double> u(z.data(), z.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0, tau = 0.0;
    for (int j = 0; j < n; ++j) {
        cum += u[j];
        const double t = (cum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) tau = t;
    }
    return (z.array() - tau).max(0.0).matrix();
}

Vector project_capped_simplex(const Vector& z, int kappa, double eps) {
    const int n = static_cast<int>(z.size());
    if (kappa < 1 || kappa > n)
        throw std::invalid_argument("project_capped_simplex: kappa out of range");
    auto shifted_sum = [&](double tau) {
        return (z.array() - tau).max(0.0).min(1.0).sum();
    };
    double lo = z.minCoeff() - 1.0;   // sum = n >= kappa
    double hi = z.maxCoeff();         // sum = 0 <= kappa
    // monotone non-increasing sum; bisect until the column sum matches
    double tau = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        tau = 0.5 * (lo + hi);
        const double s = shifted_sum(tau);
        if (std::abs(s - kappa) <= eps) break;
        if (s > kappa)
            lo = tau;
        else
            hi = tau;
    }
    return (z.array() - tau).max(0.0).min(1.0).matrix();
}

Vector project_l2_ball(const Vector& z) {
    const double nrm = z.norm();
    if (nrm <= 1.0) return z;
    return z / nrm;
}

namespace {

// Sign-fix the SVD factors: first nonzero entry of each left singular vector
// nonnegative, compensating in V.
void fix_svd_signs(Matrix& U, Matrix& V) {
    for (int j = 0; j < U.cols(); ++j) {
        for (int i = 0; i < U.rows(); ++i) {
            const double u = U(i, j);
            if (u != 0.0) {
                if (u < 0.0) {
                    U.col(j) = -U.col(j);
                    V.col(j) = -V.col(j);
                }
                break;
            }
        }
    }
}

}  // namespace

Matrix project_spectral_ball(const Matrix& Z) {
    if (Z.rows() < Z.cols())
        throw std::invalid_argument("project_spectral_ball: requires n >= r");
    Eigen::JacobiSVD<Matrix> svd(Z, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Matrix U = svd.matrixU();
    Matrix V = svd.matrixV();
    fix_svd_signs(U, V);
    Vector s = svd.singularValues().cwiseMin(1.0).cwiseMax(0.0);
    return U * s.asDiagonal() * V.transpose();
}

Complex project_mpsk_hull(Complex z, int m) {
    if (m < 3) throw std::invalid_argument("project_mpsk_hull: m must be >= 3");
    const double pi = std::numbers::pi;
    const double sector = 2.0 * pi / m;
    const double half = pi / m;
    const double k = std::floor((std::arg(z) + half) / sector);
    const Complex rot = std::polar(1.0, -k * sector);
    const Complex y = z * rot;
    const double re = std::clamp(y.real(), 0.0, std::cos(half));
    const double im = std::clamp(y.imag(), -std::sin(half), std::sin(half));
    return Complex(re, im) * std::conj(rot);
}

Vector project_row_cap(const Vector& z) {
    Vector x = clip_box(z, 0.0, 1.0);
    if (x.sum() <= 1.0) return x;
    return project_capped_simplex(z, 1);
}

DykstraNoConvergence::DykstraNoConvergence(Matrix last, double res, int iters)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "dykstra: no convergence after " << iters
             << " iterations, residual " << res;
          return os.str();
      }()),
      last_iterate(std::move(last)),
      residual(res),
      iterations(iters) {}

Matrix dykstra(const MatrixProjector& project_a, const MatrixProjector& project_b,
               const Matrix& Z, const DykstraConfig& cfg) {
    if (cfg.max_iter < 1 || cfg.tol <= 0.0)
        throw std::invalid_argument("dykstra: invalid config");
    Matrix x = Z;
    Matrix p = Matrix::Zero(Z.rows(), Z.cols());
    Matrix q = Matrix::Zero(Z.rows(), Z.cols());
    // correction-term increments equal the inter-sequence gaps ||x-y|| and
    // ||y-x_next||; both vanish exactly when Dykstra converges
    double change = 0.0;
    for (int it = 0; it < cfg.max_iter; ++it) {
        const Matrix y = project_a(x + p);
        const double gap_a = (x - y).norm();
        p = x + p - y;
        const Matrix x_next = project_b(y + q);
        q = y + q - x_next;
        change = std::max(gap_a, (y - x_next).norm());
        x = x_next;
        if (change < cfg.tol) return x;
    }
    // a float-level stall still within the documented membership envelope
    if (change <= 10.0 * cfg.tol) return x;
    throw DykstraNoConvergence(x, change, cfg.max_iter);
}

Matrix project_assignment_hull(const Matrix& Z, const std::vector<int>& kappa,
                               const DykstraConfig& cfg) {
    const int n = static_cast<int>(Z.rows());
    const int r = static_cast<int>(Z.cols());
    if (static_cast<int>(kappa.size()) != r)
        throw std::invalid_argument("project_assignment_hull: kappa size != columns");
    int total = 0;
    for (int kj : kappa) {
        if (kj < 1 || kj > n)
            throw std::invalid_argument("project_assignment_hull: kappa entry out of range");
        total += kj;
    }
    if (total > n)
        throw std::invalid_argument("project_assignment_hull: sum(kappa) > n");

    auto columns = [&](const Matrix& M) {
        Matrix out(n, r);
        for (int j = 0; j < r; ++j)
            out.col(j) = project_capped_simplex(M.col(j), kappa[j]);
        return out;
    };
    auto rows = [&](const Matrix& M) {
        Matrix out(n, r);
        for (int i = 0; i < n; ++i)
            out.row(i) = project_row_cap(M.row(i).transpose()).transpose();
        return out;
    };
    return dykstra(columns, rows, Z, cfg);
}

Matrix project_nonneg_spectral_ball(const Matrix& Z, const DykstraConfig& cfg) {
    auto ball = [](const Matrix& M) { return project_spectral_ball(M); };
    auto orthant = [](const Matrix& M) { return M.cwiseMax(0.0).eval(); };
    return dykstra(ball, orthant, Z, cfg);
}

}  // namespace expp
