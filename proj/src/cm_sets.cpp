#include "expp/cm_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "expp/hull_projections.hpp"
#include "expp/oracle.hpp"

namespace expp {

namespace {

constexpr double kPi = std::numbers::pi;

// Size threshold below which distance_to_set enumerates instead of bounding.
constexpr double kBruteDistThreshold = 2e5;

[[noreturn]] void bad_dims(const char* op) {
    throw std::invalid_argument(std::string(op) + ": point dimension does not match spec");
}

void require_dims(const CMSetSpec& spec, const Vector& x, const char* op) {
    if (x.size() != spec.ambient_dim()) bad_dims(op);
}

Complex as_complex(const Vector& x) { return Complex(x[0], x[1]); }

Complex mpsk_point(int m, int l) {
    return std::polar(1.0, 2.0 * kPi * l / m + kPi / m);
}

bool near_binary01(double v, double tol) {
    return std::abs(v) <= tol || std::abs(v - 1.0) <= tol;
}

// Deterministic top-k index selection: by value descending, index ascending.
std::vector<int> top_k_indices(const Vector& x, int k) {
    std::vector<int> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] > x[b]; });
    idx.resize(k);
    return idx;
}

Vector singular_values(const Matrix& X) {
    Eigen::JacobiSVD<Matrix> svd(X);
    return svd.singularValues();
}

// Column-wise top-kappa_j selection followed by greedy row-conflict repair.
Matrix repair_assignment(const Matrix& X, const std::vector<int>& kappa) {
    const int n = static_cast<int>(X.rows());
    const int r = static_cast<int>(X.cols());
    Matrix Y = Matrix::Zero(n, r);
    for (int j = 0; j < r; ++j)
        for (int i : top_k_indices(X.col(j), kappa[j])) Y(i, j) = 1.0;

    std::vector<std::pair<int, int>> displaced;  // (column, former row)
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (int j = 0; j < r; ++j) count += Y(i, j) > 0.5;
        if (count <= 1) continue;
        int keep = -1;
        double best = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < r; ++j)
            if (Y(i, j) > 0.5 && X(i, j) > best) {
                best = X(i, j);
                keep = j;
            }
        for (int j = 0; j < r; ++j)
            if (Y(i, j) > 0.5 && j != keep) {
                Y(i, j) = 0.0;
                displaced.emplace_back(j, i);
            }
    }

    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j)
            if (Y(i, j) > 0.5) used[i] = true;

    for (auto [j, from] : displaced) {
        (void)from;
        int pick = -1;
        double best = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            if (!used[i] && X(i, j) > best) {
                best = X(i, j);
                pick = i;
            }
        if (pick < 0) throw std::logic_error("repair_assignment: no free row left");
        Y(pick, j) = 1.0;
        used[pick] = true;
    }
    return Y;
}

// Feasible member of the non-negative semi-orthogonal set: assign each row to
// its best column, normalize each column's clipped entries; empty columns are
// given a spare row.
Matrix nonneg_semiorth_round(const Matrix& X) {
    const int n = static_cast<int>(X.rows());
    const int r = static_cast<int>(X.cols());
    const Matrix Xp = X.cwiseMax(0.0);
    std::vector<int> owner(n, -1);
    for (int i = 0; i < n; ++i) {
        int jbest = -1;
        double best = 0.0;
        for (int j = 0; j < r; ++j)
            if (Xp(i, j) > best) {
                best = Xp(i, j);
                jbest = j;
            }
        owner[i] = jbest;
    }
    std::vector<std::vector<int>> support(r);
    for (int i = 0; i < n; ++i)
        if (owner[i] >= 0) support[owner[i]].push_back(i);

    for (int j = 0; j < r; ++j) {
        while (support[j].empty()) {
            int pick = -1;
            for (int i = 0; i < n; ++i)
                if (owner[i] == -1) {
                    pick = i;
                    break;
                }
            if (pick >= 0) {
                owner[pick] = j;
                support[j].push_back(pick);
                break;
            }
            // no free row: take the weakest row of the best-stocked column
            int donor = -1;
            std::size_t most = 1;
            for (int jj = 0; jj < r; ++jj)
                if (support[jj].size() > most) {
                    most = support[jj].size();
                    donor = jj;
                }
            if (donor < 0) throw std::logic_error("nonneg rounding: no donor column");
            int weakest = support[donor][0];
            for (int i : support[donor])
                if (Xp(i, donor) < Xp(weakest, donor)) weakest = i;
            std::erase(support[donor], weakest);
            owner[weakest] = j;
            support[j].push_back(weakest);
        }
    }

    Matrix Y = Matrix::Zero(n, r);
    for (int j = 0; j < r; ++j) {
        double nrm2 = 0.0;
        for (int i : support[j]) nrm2 += Xp(i, j) * Xp(i, j);
        if (nrm2 > 0.0) {
            const double inv = 1.0 / std::sqrt(nrm2);
            for (int i : support[j]) Y(i, j) = Xp(i, j) * inv;
        } else {
            Y(*std::min_element(support[j].begin(), support[j].end()), j) = 1.0;
        }
    }
    return Y;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Binary: return "binary";
        case Family::MPSK: return "mpsk";
        case Family::UnitSphere: return "unit_sphere";
        case Family::SemiOrthogonal: return "semi_orthogonal";
        case Family::UnitVector: return "unit_vector";
        case Family::SelectionVector: return "selection_vector";
        case Family::PartialPermutation: return "partial_permutation";
        case Family::SizeAssignment: return "size_assignment";
        case Family::NonnegSemiOrthogonal: return "nonneg_semi_orthogonal";
        case Family::Product: return "product";
    }
    throw std::logic_error("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    static const std::pair<const char*, Family> table[] = {
        {"binary", Family::Binary},
        {"mpsk", Family::MPSK},
        {"unit_sphere", Family::UnitSphere},
        {"semi_orthogonal", Family::SemiOrthogonal},
        {"unit_vector", Family::UnitVector},
        {"selection_vector", Family::SelectionVector},
        {"partial_permutation", Family::PartialPermutation},
        {"size_assignment", Family::SizeAssignment},
        {"nonneg_semi_orthogonal", Family::NonnegSemiOrthogonal},
        {"product", Family::Product},
    };
    for (const auto& [key, fam] : table)
        if (name == key) return fam;
    throw std::invalid_argument("unknown CM family: " + name);
}

void CMSetSpec::validate() const {
    switch (family) {
        case Family::Binary:
        case Family::UnitSphere:
        case Family::UnitVector:
            if (n < 1) throw std::invalid_argument("spec: n must be positive");
            break;
        case Family::MPSK:
            if (m < 3) throw std::invalid_argument("spec: MPSK requires m >= 3");
            break;
        case Family::SemiOrthogonal:
        case Family::NonnegSemiOrthogonal:
        case Family::PartialPermutation:
            if (n < 1 || r < 1) throw std::invalid_argument("spec: n, r must be positive");
            if (n < r) throw std::invalid_argument("spec: requires n >= r");
            break;
        case Family::SelectionVector:
            if (n < 1) throw std::invalid_argument("spec: n must be positive");
            if (kappa.size() != 1 || kappa[0] < 1 || kappa[0] > n)
                throw std::invalid_argument("spec: selection vector requires 1 <= kappa <= n");
            break;
        case Family::SizeAssignment: {
            if (n < 1 || r < 1) throw std::invalid_argument("spec: n, r must be positive");
            if (n < r) throw std::invalid_argument("spec: requires n >= r");
            if (static_cast<int>(kappa.size()) != r)
                throw std::invalid_argument("spec: kappa must have one size per column");
            int total = 0;
            for (int kj : kappa) {
                if (kj < 1 || kj > n)
                    throw std::invalid_argument("spec: kappa entries must be in 1..n");
                total += kj;
            }
            if (total > n) throw std::invalid_argument("spec: sum(kappa) must be <= n");
            break;
        }
        case Family::Product:
            if (factors.empty()) throw std::invalid_argument("spec: product needs factors");
            for (const auto& f : factors) f.validate();
            break;
    }
}

int CMSetSpec::ambient_dim() const {
    switch (family) {
        case Family::Binary:
        case Family::UnitSphere:
        case Family::UnitVector:
        case Family::SelectionVector:
            return n;
        case Family::MPSK:
            return 2;
        case Family::SemiOrthogonal:
        case Family::PartialPermutation:
        case Family::SizeAssignment:
        case Family::NonnegSemiOrthogonal:
            return n * r;
        case Family::Product: {
            int d = 0;
            for (const auto& f : factors) d += f.ambient_dim();
            return d;
        }
    }
    throw std::logic_error("ambient_dim: unknown family");
}

double CMSetSpec::modulus_sq() const {
    switch (family) {
        case Family::Binary: return static_cast<double>(n);
        case Family::MPSK: return 1.0;
        case Family::UnitSphere: return 1.0;
        case Family::SemiOrthogonal: return static_cast<double>(r);
        case Family::UnitVector: return 1.0;
        case Family::SelectionVector: return static_cast<double>(kappa[0]);
        case Family::PartialPermutation: return static_cast<double>(r);
        case Family::SizeAssignment:
            return static_cast<double>(std::accumulate(kappa.begin(), kappa.end(), 0));
        case Family::NonnegSemiOrthogonal: return static_cast<double>(r);
        case Family::Product: {
            double c = 0.0;
            for (const auto& f : factors) c += f.modulus_sq();
            return c;
        }
    }
    throw std::logic_error("modulus_sq: unknown family");
}

bool CMSetSpec::finite_family() const {
    switch (family) {
        case Family::Binary:
        case Family::MPSK:
        case Family::UnitVector:
        case Family::SelectionVector:
        case Family::PartialPermutation:
        case Family::SizeAssignment:
            return true;
        case Family::UnitSphere:
        case Family::SemiOrthogonal:
        case Family::NonnegSemiOrthogonal:
            return false;
        case Family::Product:
            return std::all_of(factors.begin(), factors.end(),
                               [](const CMSetSpec& f) { return f.finite_family(); });
    }
    throw std::logic_error("finite_family: unknown family");
}

namespace {
CMSetSpec make_spec(Family family, int n = 0, int r = 0) {
    CMSetSpec s;
    s.family = family;
    s.n = n;
    s.r = r;
    return s;
}
}  // namespace

CMSetSpec CMSetSpec::binary(int n) { return make_spec(Family::Binary, n); }
CMSetSpec CMSetSpec::mpsk(int m) {
    CMSetSpec s = make_spec(Family::MPSK);
    s.m = m;
    return s;
}
CMSetSpec CMSetSpec::unit_sphere(int n) { return make_spec(Family::UnitSphere, n); }
CMSetSpec CMSetSpec::semi_orthogonal(int n, int r) {
    return make_spec(Family::SemiOrthogonal, n, r);
}
CMSetSpec CMSetSpec::unit_vector(int n) { return make_spec(Family::UnitVector, n); }
CMSetSpec CMSetSpec::selection_vector(int n, int kappa) {
    CMSetSpec s = make_spec(Family::SelectionVector, n);
    s.kappa = {kappa};
    return s;
}
CMSetSpec CMSetSpec::partial_permutation(int n, int r) {
    return make_spec(Family::PartialPermutation, n, r);
}
CMSetSpec CMSetSpec::size_assignment(int n, std::vector<int> kappa) {
    CMSetSpec s = make_spec(Family::SizeAssignment, n, static_cast<int>(kappa.size()));
    s.kappa = std::move(kappa);
    return s;
}
CMSetSpec CMSetSpec::nonneg_semi_orthogonal(int n, int r) {
    return make_spec(Family::NonnegSemiOrthogonal, n, r);
}
CMSetSpec CMSetSpec::product(std::vector<CMSetSpec> factors) {
    CMSetSpec s = make_spec(Family::Product);
    s.factors = std::move(factors);
    return s;
}

double modulus_sq(const CMSetSpec& spec) { return spec.modulus_sq(); }

double max_k_sum(const Vector& x, int k) {
    std::vector<double> v(x.data(), x.data() + x.size());
    std::partial_sort(v.begin(), v.begin() + k, v.end(), std::greater<double>());
    return std::accumulate(v.begin(), v.begin() + k, 0.0);
}

bool contains(const CMSetSpec& spec, const Vector& x, double tol) {
    require_dims(spec, x, "contains");
    switch (spec.family) {
        case Family::Binary:
            return ((x.array().abs() - 1.0).abs() <= tol).all();
        case Family::MPSK: {
            const Complex z = as_complex(x);
            for (int l = 0; l < spec.m; ++l) {
                const Complex p = mpsk_point(spec.m, l);
                if (std::abs(z.real() - p.real()) <= tol &&
                    std::abs(z.imag() - p.imag()) <= tol)
                    return true;
            }
            return false;
        }
        case Family::UnitSphere:
            return std::abs(x.norm() - 1.0) <= tol;
        case Family::SemiOrthogonal: {
            const auto X = as_matrix(x, spec.n, spec.r);
            return (X.transpose() * X - Matrix::Identity(spec.r, spec.r)).norm() <= tol;
        }
        case Family::UnitVector:
        case Family::SelectionVector: {
            const int k = spec.family == Family::UnitVector ? 1 : spec.kappa[0];
            int ones = 0;
            for (int i = 0; i < spec.n; ++i) {
                if (!near_binary01(x[i], tol)) return false;
                ones += std::abs(x[i] - 1.0) <= tol;
            }
            return ones == k;
        }
        case Family::PartialPermutation:
        case Family::SizeAssignment: {
            const auto X = as_matrix(x, spec.n, spec.r);
            for (int j = 0; j < spec.r; ++j) {
                const int kj = spec.family == Family::PartialPermutation ? 1 : spec.kappa[j];
                int ones = 0;
                for (int i = 0; i < spec.n; ++i) {
                    if (!near_binary01(X(i, j), tol)) return false;
                    ones += std::abs(X(i, j) - 1.0) <= tol;
                }
                if (ones != kj) return false;
            }
            for (int i = 0; i < spec.n; ++i) {
                int ones = 0;
                for (int j = 0; j < spec.r; ++j) ones += std::abs(X(i, j) - 1.0) <= tol;
                if (ones > 1) return false;
            }
            return true;
        }
        case Family::NonnegSemiOrthogonal: {
            const auto X = as_matrix(x, spec.n, spec.r);
            if (X.minCoeff() < -tol) return false;
            return (X.transpose() * X - Matrix::Identity(spec.r, spec.r)).norm() <= tol;
        }
        case Family::Product: {
            int off = 0;
            for (const auto& f : spec.factors) {
                const int d = f.ambient_dim();
                if (!contains(f, x.segment(off, d), tol)) return false;
                off += d;
            }
            return true;
        }
    }
    throw std::logic_error("contains: unknown family");
}

Vector round_to_set(const CMSetSpec& spec, const Vector& x) {
    require_dims(spec, x, "round_to_set");
    switch (spec.family) {
        case Family::Binary: {
            Vector y(spec.n);
            for (int i = 0; i < spec.n; ++i) y[i] = x[i] >= 0.0 ? 1.0 : -1.0;
            return y;
        }
        case Family::MPSK: {
            const Complex z = as_complex(x);
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (int l = 0; l < spec.m; ++l) {
                const double d = std::norm(z - mpsk_point(spec.m, l));
                if (d < best_d - 1e-15) {
                    best_d = d;
                    best = l;
                }
            }
            const Complex p = mpsk_point(spec.m, best);
            return Vector{{p.real(), p.imag()}};
        }
        case Family::UnitSphere: {
            const double nrm = x.norm();
            if (nrm == 0.0) return Vector::Unit(spec.n, 0);
            return x / nrm;
        }
        case Family::SemiOrthogonal: {
            const auto X = as_matrix(x, spec.n, spec.r);
            Eigen::JacobiSVD<Matrix> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
            return as_vector(svd.matrixU() * svd.matrixV().transpose());
        }
        case Family::UnitVector: {
            int best = 0;
            for (int i = 1; i < spec.n; ++i)
                if (x[i] > x[best]) best = i;
            return Vector::Unit(spec.n, best);
        }
        case Family::SelectionVector: {
            Vector y = Vector::Zero(spec.n);
            for (int i : top_k_indices(x, spec.kappa[0])) y[i] = 1.0;
            return y;
        }
        case Family::PartialPermutation: {
            const auto X = as_matrix(x, spec.n, spec.r);
            return as_vector(repair_assignment(X, std::vector<int>(spec.r, 1)));
        }
        case Family::SizeAssignment: {
            const auto X = as_matrix(x, spec.n, spec.r);
            return as_vector(repair_assignment(X, spec.kappa));
        }
        case Family::NonnegSemiOrthogonal: {
            const auto X = as_matrix(x, spec.n, spec.r);
            return as_vector(nonneg_semiorth_round(X));
        }
        case Family::Product: {
            Vector y(x.size());
            int off = 0;
            for (const auto& f : spec.factors) {
                const int d = f.ambient_dim();
                y.segment(off, d) = round_to_set(f, x.segment(off, d));
                off += d;
            }
            return y;
        }
    }
    throw std::logic_error("round_to_set: unknown family");
}

DistanceResult distance_to_set(const CMSetSpec& spec, const Vector& x) {
    require_dims(spec, x, "distance_to_set");
    switch (spec.family) {
        case Family::Binary:
        case Family::MPSK:
        case Family::UnitSphere:
        case Family::SemiOrthogonal:
        case Family::UnitVector:
        case Family::SelectionVector:
            return {(x - round_to_set(spec, x)).norm(), true};
        case Family::PartialPermutation:
        case Family::SizeAssignment: {
            if (member_count(spec) <= kBruteDistThreshold)
                return {brute_dist(spec, x), true};
            return {(x - round_to_set(spec, x)).norm(), false};
        }
        case Family::NonnegSemiOrthogonal: {
            if (std::pow(spec.r + 1.0, spec.n) <= kBruteDistThreshold)
                return {nonneg_semiorth_dist(as_matrix(x, spec.n, spec.r)), true};
            return {(x - round_to_set(spec, x)).norm(), false};
        }
        case Family::Product: {
            double sq = 0.0;
            bool exact = true;
            int off = 0;
            for (const auto& f : spec.factors) {
                const int d = f.ambient_dim();
                const auto sub = distance_to_set(f, x.segment(off, d));
                sq += sub.value * sub.value;
                exact = exact && sub.exact;
                off += d;
            }
            return {std::sqrt(sq), exact};
        }
    }
    throw std::logic_error("distance_to_set: unknown family");
}

bool hull_contains(const CMSetSpec& spec, const Vector& x, double tol) {
    require_dims(spec, x, "hull_contains");
    switch (spec.family) {
        case Family::Binary:
            return x.minCoeff() >= -1.0 - tol && x.maxCoeff() <= 1.0 + tol;
        case Family::MPSK: {
            const Complex z = as_complex(x);
            const double cap = std::cos(kPi / spec.m) + tol;
            for (int l = 0; l < spec.m; ++l)
                if ((std::polar(1.0, 2.0 * kPi * l / spec.m) * z).real() > cap) return false;
            return true;
        }
        case Family::UnitSphere:
            return x.norm() <= 1.0 + tol;
        case Family::SemiOrthogonal: {
            const auto X = as_matrix(x, spec.n, spec.r);
            return singular_values(X)[0] <= 1.0 + tol;
        }
        case Family::UnitVector:
            return x.minCoeff() >= -tol && std::abs(x.sum() - 1.0) <= tol;
        case Family::SelectionVector:
            return x.minCoeff() >= -tol && x.maxCoeff() <= 1.0 + tol &&
                   std::abs(x.sum() - spec.kappa[0]) <= tol;
        case Family::PartialPermutation:
        case Family::SizeAssignment: {
            const auto X = as_matrix(x, spec.n, spec.r);
            if (X.minCoeff() < -tol || X.maxCoeff() > 1.0 + tol) return false;
            for (int j = 0; j < spec.r; ++j) {
                const int kj = spec.family == Family::PartialPermutation ? 1 : spec.kappa[j];
                if (std::abs(X.col(j).sum() - kj) > tol) return false;
            }
            for (int i = 0; i < spec.n; ++i)
                if (X.row(i).sum() > 1.0 + tol) return false;
            return true;
        }
        case Family::NonnegSemiOrthogonal: {
            const auto X = as_matrix(x, spec.n, spec.r);
            if (X.minCoeff() < -tol) return false;
            return singular_values(X)[0] <= 1.0 + tol;
        }
        case Family::Product: {
            int off = 0;
            for (const auto& f : spec.factors) {
                const int d = f.ambient_dim();
                if (!hull_contains(f, x.segment(off, d), tol)) return false;
                off += d;
            }
            return true;
        }
    }
    throw std::logic_error("hull_contains: unknown family");
}

Vector project_hull(const CMSetSpec& spec, const Vector& z) {
    require_dims(spec, z, "project_hull");
    switch (spec.family) {
        case Family::Binary:
            return clip_box(z, -1.0, 1.0);
        case Family::MPSK: {
            const Complex p = project_mpsk_hull(as_complex(z), spec.m);
            return Vector{{p.real(), p.imag()}};
        }
        case Family::UnitSphere:
            return project_l2_ball(z);
        case Family::SemiOrthogonal:
            return as_vector(project_spectral_ball(as_matrix(z, spec.n, spec.r)));
        case Family::UnitVector:
            return project_simplex(z);
        case Family::SelectionVector:
            return project_capped_simplex(z, spec.kappa[0]);
        case Family::PartialPermutation:
            return as_vector(project_assignment_hull(as_matrix(z, spec.n, spec.r),
                                                     std::vector<int>(spec.r, 1)));
        case Family::SizeAssignment:
            return as_vector(project_assignment_hull(as_matrix(z, spec.n, spec.r), spec.kappa));
        case Family::NonnegSemiOrthogonal:
            return as_vector(project_nonneg_spectral_ball(as_matrix(z, spec.n, spec.r)));
        case Family::Product: {
            Vector out(z.size());
            int off = 0;
            for (const auto& f : spec.factors) {
                const int d = f.ambient_dim();
                out.segment(off, d) = project_hull(f, z.segment(off, d));
                off += d;
            }
            return out;
        }
    }
    throw std::logic_error("project_hull: unknown family");
}

double nu_value(const CMSetSpec& spec) {
    switch (spec.family) {
        case Family::Binary: return 1.0;
        case Family::MPSK: return spec.m == 3 ? 2.0 : 1.0 / std::sin(kPi / spec.m);
        case Family::UnitSphere: return 1.0;
        case Family::SemiOrthogonal: return 1.0;
        case Family::UnitVector: return 2.0;
        case Family::SelectionVector: return 2.0;
        case Family::PartialPermutation: return 3.0 * std::sqrt(spec.r);
        case Family::SizeAssignment:
            return 3.0 * std::sqrt(std::accumulate(spec.kappa.begin(), spec.kappa.end(), 0.0));
        case Family::NonnegSemiOrthogonal:
            throw std::domain_error(
                "nu_value: no linear-deficit constant for the non-negative "
                "semi-orthogonal set; only the sqrt-form bound applies");
        case Family::Product: {
            double nu = 0.0;
            for (const auto& f : spec.factors) nu = std::max(nu, nu_value(f));
            return nu;
        }
    }
    throw std::logic_error("nu_value: unknown family");
}

namespace {

void require_hull(const CMSetSpec& spec, const Vector& x, const char* op) {
    if (!hull_contains(spec, x))
        throw std::domain_error(std::string(op) + ": point is outside the hull");
}

double tight_bound_impl(const CMSetSpec& spec, const Vector& x) {
    switch (spec.family) {
        case Family::Binary:
            return spec.n - x.lpNorm<1>();
        case Family::MPSK:
            return nu_value(spec) * (1.0 - x.squaredNorm());
        case Family::UnitSphere:
            return 1.0 - x.norm();
        case Family::SemiOrthogonal:
            return spec.r - singular_values(as_matrix(x, spec.n, spec.r)).sum();
        case Family::UnitVector:
            return 2.0 * (1.0 - x.maxCoeff());
        case Family::SelectionVector:
            return 2.0 * (spec.kappa[0] - max_k_sum(x, spec.kappa[0]));
        case Family::PartialPermutation: {
            const auto X = as_matrix(x, spec.n, spec.r);
            double s = 0.0;
            for (int j = 0; j < spec.r; ++j) s += 1.0 - X.col(j).maxCoeff();
            return 3.0 * std::sqrt(spec.r) * s;
        }
        case Family::SizeAssignment: {
            const auto X = as_matrix(x, spec.n, spec.r);
            double s = 0.0;
            for (int j = 0; j < spec.r; ++j)
                s += spec.kappa[j] - max_k_sum(X.col(j), spec.kappa[j]);
            return nu_value(spec) * s;
        }
        case Family::NonnegSemiOrthogonal:
            return 5.0 * std::pow(spec.r, 0.75) *
                   std::sqrt(std::max(0.0, spec.r - x.squaredNorm()));
        case Family::Product: {
            double s = 0.0;
            int off = 0;
            for (const auto& f : spec.factors) {
                const int d = f.ambient_dim();
                s += tight_bound_impl(f, x.segment(off, d));
                off += d;
            }
            return s;
        }
    }
    throw std::logic_error("error_bound_tight: unknown family");
}

}  // namespace

double error_bound_tight(const CMSetSpec& spec, const Vector& x) {
    require_dims(spec, x, "error_bound_tight");
    require_hull(spec, x, "error_bound_tight");
    return tight_bound_impl(spec, x);
}

double error_bound_norm(const CMSetSpec& spec, const Vector& x) {
    require_dims(spec, x, "error_bound_norm");
    require_hull(spec, x, "error_bound_norm");
    if (spec.family == Family::NonnegSemiOrthogonal)
        return 5.0 * std::pow(spec.r, 0.75) *
               std::sqrt(std::max(0.0, spec.r - x.squaredNorm()));
    return nu_value(spec) * (spec.modulus_sq() - x.squaredNorm());
}

double universal_bound(const CMSetSpec& spec, const Vector& x) {
    require_dims(spec, x, "universal_bound");
    return std::sqrt(std::max(0.0, spec.modulus_sq() - x.squaredNorm()));
}

}  // namespace expp
