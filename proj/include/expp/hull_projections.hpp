#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "expp/types.hpp"

namespace expp {

// Component-wise clip of z to [a, b]. Throws if a > b anywhere.
Vector clip_box(const Vector& z, const Vector& a, const Vector& b);
Vector clip_box(const Vector& z, double a, double b);

// Euclidean projection onto the unit simplex, sort-and-threshold, O(n log n).
Vector project_simplex(const Vector& z);

// Projection onto {x in [0,1]^n | 1'x = kappa} by bisection on the shift tau,
// bracket [min(z)-1, max(z)], terminating on |1'x - kappa| <= eps.
Vector project_capped_simplex(const Vector& z, int kappa, double eps = 1e-10);

// Radial projection onto the unit l2 ball.
Vector project_l2_ball(const Vector& z);

// Projection onto the unit spectral norm ball: SVD with singular values
// clipped to [0,1]. Left singular vectors are sign-fixed (first nonzero
// entry nonnegative) so repeated inputs give identical outputs.
Matrix project_spectral_ball(const Matrix& Z);

// Exact projection onto the convex hull of the m-point PSK constellation:
// rotate into sector k = floor((angle(z)+pi/m)/(2pi/m)), clip the real part
// to [0, cos(pi/m)] and the imaginary part to [-sin(pi/m), sin(pi/m)],
// rotate back.
Complex project_mpsk_hull(Complex z, int m);

// Projection onto {x in [0,1]^r | 1'x <= 1}.
Vector project_row_cap(const Vector& z);

struct DykstraConfig {
    int max_iter = 5000;
    double tol = 1e-10;  // successive-change threshold, Frobenius norm
};

class DykstraNoConvergence : public std::runtime_error {
public:
    DykstraNoConvergence(Matrix last, double residual, int iters);
    Matrix last_iterate;
    double residual;
    int iterations;
};

using MatrixProjector = std::function<Matrix(const Matrix&)>;

// Dykstra's alternating projections onto A and B with correction terms.
// Requires exact projectors onto closed convex sets with non-empty
// intersection. Throws DykstraNoConvergence when the successive change
// stays above cfg.tol for cfg.max_iter rounds.
Matrix dykstra(const MatrixProjector& project_a, const MatrixProjector& project_b,
               const Matrix& Z, const DykstraConfig& cfg = {});

// Projection onto {X in [0,1]^{n x r} | X'1 = kappa, X1 <= 1} via Dykstra
// between per-column capped simplices and per-row caps. kappa.size() == r
// and sum(kappa) <= n. The partial permutation hull is kappa = (1,...,1).
Matrix project_assignment_hull(const Matrix& Z, const std::vector<int>& kappa,
                               const DykstraConfig& cfg = {});

// Projection onto B+ = {X | sigma_1(X) <= 1, X >= 0} via Dykstra between
// the spectral ball and the nonnegative orthant. The default budget is much
// larger than for the assignment hulls: when a singular value sits exactly at
// 1 against an active zero pattern the alternating tail is slow, and rare
// inputs need a few 10^5 rounds to reach the 1e-10 change threshold.
Matrix project_nonneg_spectral_ball(const Matrix& Z,
                                    const DykstraConfig& cfg = {1000000, 1e-10});

}  // namespace expp
