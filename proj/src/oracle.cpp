#include "expp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace expp {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return std::round(c);
}

// Lexicographic k-subsets of `pool`, invoking f on each.
template <typename F>
void for_each_subset(const std::vector<int>& pool, int k, std::vector<int>& chosen, int start,
                     F&& f) {
    if (static_cast<int>(chosen.size()) == k) {
        f(chosen);
        return;
    }
    const int need = k - static_cast<int>(chosen.size());
    for (int i = start; i + need <= static_cast<int>(pool.size()); ++i) {
        chosen.push_back(pool[i]);
        for_each_subset(pool, k, chosen, i + 1, f);
        chosen.pop_back();
    }
}

void enumerate_assignment(const CMSetSpec& spec, const std::vector<int>& kappa, int col,
                          std::vector<bool>& taken, Matrix& work,
                          std::vector<Vector>& out, std::size_t cap) {
    const int n = spec.n;
    const int r = static_cast<int>(kappa.size());
    if (col == r) {
        if (out.size() >= cap) throw std::runtime_error("enumerate_set: budget exceeded");
        out.push_back(as_vector(work));
        return;
    }
    std::vector<int> free_rows;
    for (int i = 0; i < n; ++i)
        if (!taken[i]) free_rows.push_back(i);
    std::vector<int> chosen;
    for_each_subset(free_rows, kappa[col], chosen, 0, [&](const std::vector<int>& rows) {
        for (int i : rows) {
            work(i, col) = 1.0;
            taken[i] = true;
        }
        enumerate_assignment(spec, kappa, col + 1, taken, work, out, cap);
        for (int i : rows) {
            work(i, col) = 0.0;
            taken[i] = false;
        }
    });
}

}  // namespace

double member_count(const CMSetSpec& spec) {
    switch (spec.family) {
        case Family::Binary:
            return std::pow(2.0, spec.n);
        case Family::MPSK:
            return spec.m;
        case Family::UnitVector:
            return spec.n;
        case Family::SelectionVector:
            return binomial(spec.n, spec.kappa[0]);
        case Family::PartialPermutation: {
            double c = 1.0;
            for (int i = 0; i < spec.r; ++i) c *= spec.n - i;
            return c;
        }
        case Family::SizeAssignment: {
            double c = 1.0;
            int left = spec.n;
            for (int kj : spec.kappa) {
                c *= binomial(left, kj);
                left -= kj;
            }
            return c;
        }
        case Family::Product: {
            double c = 1.0;
            for (const auto& f : spec.factors) c *= member_count(f);
            return c;
        }
        case Family::UnitSphere:
        case Family::SemiOrthogonal:
        case Family::NonnegSemiOrthogonal:
            throw std::invalid_argument("member_count: family is not finite");
    }
    throw std::logic_error("member_count: unknown family");
}

std::vector<Vector> enumerate_set(const CMSetSpec& spec, const EnumerationBudget& budget) {
    spec.validate();
    if (!spec.finite_family())
        throw std::invalid_argument("enumerate_set: family is not finite");
    if (member_count(spec) > static_cast<double>(budget.max_points))
        throw std::runtime_error("enumerate_set: budget exceeded");

    std::vector<Vector> out;
    switch (spec.family) {
        case Family::Binary: {
            const std::size_t total = std::size_t{1} << spec.n;
            out.reserve(total);
            for (std::size_t bits = 0; bits < total; ++bits) {
                Vector v(spec.n);
                for (int j = 0; j < spec.n; ++j)
                    v[j] = (bits >> (spec.n - 1 - j)) & 1u ? 1.0 : -1.0;
                out.push_back(std::move(v));
            }
            break;
        }
        case Family::MPSK: {
            out.reserve(spec.m);
            for (int l = 0; l < spec.m; ++l) {
                const Complex p = std::polar(1.0, 2.0 * kPi * l / spec.m + kPi / spec.m);
                out.push_back(Vector{{p.real(), p.imag()}});
            }
            break;
        }
        case Family::UnitVector: {
            out.reserve(spec.n);
            for (int i = 0; i < spec.n; ++i) out.push_back(Vector::Unit(spec.n, i));
            break;
        }
        case Family::SelectionVector: {
            std::vector<int> pool(spec.n);
            std::iota(pool.begin(), pool.end(), 0);
            std::vector<int> chosen;
            for_each_subset(pool, spec.kappa[0], chosen, 0, [&](const std::vector<int>& rows) {
                Vector v = Vector::Zero(spec.n);
                for (int i : rows) v[i] = 1.0;
                out.push_back(std::move(v));
            });
            break;
        }
        case Family::PartialPermutation:
        case Family::SizeAssignment: {
            const std::vector<int> kappa = spec.family == Family::PartialPermutation
                                               ? std::vector<int>(spec.r, 1)
                                               : spec.kappa;
            std::vector<bool> taken(spec.n, false);
            Matrix work = Matrix::Zero(spec.n, spec.r);
            enumerate_assignment(spec, kappa, 0, taken, work, out, budget.max_points);
            break;
        }
        case Family::Product: {
            std::vector<std::vector<Vector>> parts;
            parts.reserve(spec.factors.size());
            for (const auto& f : spec.factors) parts.push_back(enumerate_set(f, budget));
            const int dim = spec.ambient_dim();
            std::vector<std::size_t> idx(parts.size(), 0);
            while (true) {
                Vector v(dim);
                int off = 0;
                for (std::size_t p = 0; p < parts.size(); ++p) {
                    const Vector& piece = parts[p][idx[p]];
                    v.segment(off, piece.size()) = piece;
                    off += static_cast<int>(piece.size());
                }
                if (out.size() >= budget.max_points)
                    throw std::runtime_error("enumerate_set: budget exceeded");
                out.push_back(std::move(v));
                // odometer increment, last factor fastest
                std::size_t p = parts.size();
                while (p > 0) {
                    --p;
                    if (++idx[p] < parts[p].size()) break;
                    idx[p] = 0;
                    if (p == 0) return out;
                }
            }
        }
        default:
            throw std::logic_error("enumerate_set: unhandled family");
    }
    return out;
}

BruteMinResult brute_min(const ProblemSpec& prob, const CMSetSpec& spec,
                         const EnumerationBudget& budget) {
    const auto members = enumerate_set(spec, budget);
    BruteMinResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (const auto& v : members) {
        const double f = eval(prob, v).value;
        if (f < best.value) {
            best.value = f;
            best.x = v;
        }
    }
    return best;
}

double brute_dist(const CMSetSpec& spec, const Vector& x, const EnumerationBudget& budget) {
    const auto members = enumerate_set(spec, budget);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : members) best = std::min(best, (x - v).norm());
    return best;
}

namespace {

struct PartitionState {
    std::vector<double> pos_sq;   // per column: sum of squared positive entries
    std::vector<double> max_val;  // per column: max raw entry over assigned rows
    std::vector<int> count;
    std::vector<int> assign;      // per row: column index or -1
};

// Maximize sum over columns of max x_j'y_j; remember the argmax assignment.
void partition_search(const Matrix& X, int row, PartitionState& st, double& best,
                      std::vector<int>& best_assign) {
    const int n = static_cast<int>(X.rows());
    const int r = static_cast<int>(X.cols());
    int empty = 0;
    for (int j = 0; j < r; ++j) empty += st.count[j] == 0;
    if (empty > n - row) return;  // not enough rows left to fill empty columns
    if (row == n) {
        double total = 0.0;
        for (int j = 0; j < r; ++j)
            total += st.pos_sq[j] > 0.0 ? std::sqrt(st.pos_sq[j]) : st.max_val[j];
        if (total > best) {
            best = total;
            best_assign = st.assign;
        }
        return;
    }
    partition_search(X, row + 1, st, best, best_assign);  // row unused
    for (int j = 0; j < r; ++j) {
        const double v = X(row, j);
        const double save_sq = st.pos_sq[j];
        const double save_max = st.max_val[j];
        if (v > 0.0) st.pos_sq[j] += v * v;
        st.max_val[j] = std::max(st.max_val[j], v);
        ++st.count[j];
        st.assign[row] = j;
        partition_search(X, row + 1, st, best, best_assign);
        st.assign[row] = -1;
        st.pos_sq[j] = save_sq;
        st.max_val[j] = save_max;
        --st.count[j];
    }
}

}  // namespace

double nonneg_semiorth_dist(const Matrix& X, const EnumerationBudget& budget) {
    const int n = static_cast<int>(X.rows());
    const int r = static_cast<int>(X.cols());
    if (n < r) throw std::invalid_argument("nonneg_semiorth_dist: requires n >= r");
    if (std::pow(r + 1.0, n) > static_cast<double>(budget.max_points))
        throw std::runtime_error("nonneg_semiorth_dist: budget exceeded");
    PartitionState st{std::vector<double>(r, 0.0),
                      std::vector<double>(r, -std::numeric_limits<double>::infinity()),
                      std::vector<int>(r, 0), std::vector<int>(n, -1)};
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_assign(n, -1);
    partition_search(X, 0, st, best, best_assign);

    // rebuild the nearest member on the winning support pattern and measure
    // the distance directly (the inner-product form cancels catastrophically
    // near members)
    Matrix Y = Matrix::Zero(n, r);
    for (int j = 0; j < r; ++j) {
        double nrm2 = 0.0;
        for (int i = 0; i < n; ++i)
            if (best_assign[i] == j && X(i, j) > 0.0) nrm2 += X(i, j) * X(i, j);
        if (nrm2 > 0.0) {
            for (int i = 0; i < n; ++i)
                if (best_assign[i] == j && X(i, j) > 0.0) Y(i, j) = X(i, j) / std::sqrt(nrm2);
        } else {
            int pick = -1;
            for (int i = 0; i < n; ++i)
                if (best_assign[i] == j && (pick < 0 || X(i, j) > X(pick, j))) pick = i;
            Y(pick, j) = 1.0;
        }
    }
    return (X - Y).norm();
}

CounterexampleGap counterexample_gap(double phi, Complex x) {
    if (!(phi > 0.0 && phi <= kPi / 2.0))
        throw std::invalid_argument("counterexample_gap: phi must be in (0, pi/2]");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    if (std::abs(x.real() - c) > 1e-9 || std::abs(x.imag()) > s + 1e-9)
        throw std::invalid_argument("counterexample_gap: x is not on the segment");
    const Complex hi = std::polar(1.0, phi);
    const Complex lo = std::polar(1.0, -phi);
    CounterexampleGap g;
    g.dist = std::min(std::abs(x - hi), std::abs(x - lo));
    g.lower = (1.0 - std::norm(x)) / (2.0 * s);
    if (g.dist < g.lower - 1e-12)
        throw std::runtime_error("counterexample_gap: lower bound violated");
    return g;
}

double fd_gradient_check(const ProblemSpec& prob, const Vector& x, double h) {
    const auto at = eval(prob, x);
    double worst = 0.0;
    Vector probe = x;
    for (int i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double fp = eval(prob, probe).value;
        probe[i] = x[i] - h;
        const double fm = eval(prob, probe).value;
        probe[i] = x[i];
        const double fd = (fp - fm) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - at.grad[i]) / std::max(1.0, std::abs(at.grad[i])));
    }
    return worst;
}

}  // namespace expp
