#include "expp/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace expp {

Vector gaussian_vector(int dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gauss(rng);
    return v;
}

Vector sample_hull(const CMSetSpec& spec, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    if (unif(rng) < 0.5) {
        // random-radius Gaussian, projected
        Vector g = gaussian_vector(spec.ambient_dim(), rng);
        const double target = (0.2 + 1.8 * unif(rng)) * std::sqrt(spec.modulus_sq());
        if (g.norm() > 0.0) g *= target / g.norm();
        return project_hull(spec, g);
    }
    return sample_conv_combination(spec, rng);
}

Vector sample_conv_combination(const CMSetSpec& spec, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> count(1, 4);
    const int k = count(rng);
    Vector x = Vector::Zero(spec.ambient_dim());
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
        const double w = unif(rng) + 1e-3;
        x += w * sample_member(spec, rng);
        total += w;
    }
    x /= total;
    // combinations of exact members can graze the hull boundary from outside
    // at float level; one projection pass settles them
    return spec.family == Family::NonnegSemiOrthogonal ? x : project_hull(spec, x);
}

Vector sample_member(const CMSetSpec& spec, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    switch (spec.family) {
        case Family::Binary: {
            Vector v(spec.n);
            for (int i = 0; i < spec.n; ++i) v[i] = unif(rng) < 0.5 ? -1.0 : 1.0;
            return v;
        }
        case Family::MPSK: {
            std::uniform_int_distribution<int> pick(0, spec.m - 1);
            const double ang =
                2.0 * std::numbers::pi * pick(rng) / spec.m + std::numbers::pi / spec.m;
            return Vector{{std::cos(ang), std::sin(ang)}};
        }
        case Family::UnitSphere: {
            Vector g = gaussian_vector(spec.n, rng);
            while (g.norm() == 0.0) g = gaussian_vector(spec.n, rng);
            return g / g.norm();
        }
        case Family::SemiOrthogonal: {
            Matrix G(spec.n, spec.r);
            for (int j = 0; j < spec.r; ++j) G.col(j) = gaussian_vector(spec.n, rng);
            Eigen::HouseholderQR<Matrix> qr(G);
            Matrix Q = qr.householderQ() * Matrix::Identity(spec.n, spec.r);
            const Matrix R = qr.matrixQR().topRows(spec.r).triangularView<Eigen::Upper>();
            for (int j = 0; j < spec.r; ++j)
                if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
            return as_vector(Q);
        }
        case Family::UnitVector: {
            std::uniform_int_distribution<int> pick(0, spec.n - 1);
            return Vector::Unit(spec.n, pick(rng));
        }
        case Family::SelectionVector: {
            std::vector<int> idx(spec.n);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            Vector v = Vector::Zero(spec.n);
            for (int i = 0; i < spec.kappa[0]; ++i) v[idx[i]] = 1.0;
            return v;
        }
        case Family::PartialPermutation:
        case Family::SizeAssignment: {
            std::vector<int> idx(spec.n);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            Matrix Y = Matrix::Zero(spec.n, spec.r);
            int at = 0;
            for (int j = 0; j < spec.r; ++j) {
                const int kj = spec.family == Family::PartialPermutation ? 1 : spec.kappa[j];
                for (int t = 0; t < kj; ++t) Y(idx[at++], j) = 1.0;
            }
            return as_vector(Y);
        }
        case Family::NonnegSemiOrthogonal: {
            std::vector<int> idx(spec.n);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            // disjoint supports: the first r shuffled rows seed one column each,
            // remaining rows join a random column
            std::vector<std::vector<int>> support(spec.r);
            for (int j = 0; j < spec.r; ++j) support[j].push_back(idx[j]);
            std::uniform_int_distribution<int> pick(0, spec.r - 1);
            for (int t = spec.r; t < spec.n; ++t)
                if (unif(rng) < 0.7) support[pick(rng)].push_back(idx[t]);
            Matrix Y = Matrix::Zero(spec.n, spec.r);
            for (int j = 0; j < spec.r; ++j) {
                double nrm2 = 0.0;
                for (int i : support[j]) {
                    Y(i, j) = std::abs(gaussian_vector(1, rng)[0]) + 1e-3;
                    nrm2 += Y(i, j) * Y(i, j);
                }
                for (int i : support[j]) Y(i, j) /= std::sqrt(nrm2);
            }
            return as_vector(Y);
        }
        case Family::Product: {
            Vector v(spec.ambient_dim());
            int off = 0;
            for (const auto& f : spec.factors) {
                const int d = f.ambient_dim();
                v.segment(off, d) = sample_member(f, rng);
                off += d;
            }
            return v;
        }
    }
    throw std::logic_error("sample_member: unknown family");
}

}  // namespace expp
