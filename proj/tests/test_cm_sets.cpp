#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

#include "expp/cm_sets.hpp"
#include "expp/oracle.hpp"

using namespace expp;
using expp::testing::vec;
using expp::testing::gaussian_matrix;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("modulus table") {
    CHECK(modulus_sq(CMSetSpec::binary(4)) == 4.0);
    CHECK(modulus_sq(CMSetSpec::semi_orthogonal(5, 2)) == 2.0);
    CHECK(modulus_sq(CMSetSpec::product({CMSetSpec::mpsk(8), CMSetSpec::mpsk(8),
                                         CMSetSpec::mpsk(8)})) == 3.0);
    CHECK(modulus_sq(CMSetSpec::selection_vector(5, 3)) == 3.0);
    CHECK(modulus_sq(CMSetSpec::size_assignment(6, {2, 3})) == 5.0);
    CHECK(modulus_sq(CMSetSpec::unit_sphere(7)) == 1.0);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(CMSetSpec::semi_orthogonal(2, 3).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CMSetSpec::selection_vector(3, 4).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CMSetSpec::size_assignment(3, {2, 2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CMSetSpec::mpsk(2).validate(), std::invalid_argument);
    CHECK_NOTHROW(CMSetSpec::size_assignment(4, {2, 2}).validate());
}

TEST_CASE("contains: catalog examples") {
    CHECK(contains(CMSetSpec::binary(2), vec({1.0, -1.0}), 1e-9));
    CHECK_FALSE(contains(CMSetSpec::binary(2), vec({0.9, -1.0}), 1e-9));
    CHECK_FALSE(contains(CMSetSpec::selection_vector(3, 2), vec({1.0, 1.0, 1.0})));
    CHECK(contains(CMSetSpec::selection_vector(3, 2), vec({1.0, 0.0, 1.0})));
    // MPSK m=4 constellation point at l=0: e^{j pi/4}
    CHECK(contains(CMSetSpec::mpsk(4), vec({std::cos(kPi / 4), std::sin(kPi / 4)}), 1e-9));
    CHECK_FALSE(contains(CMSetSpec::mpsk(4), vec({1.0, 0.0}), 1e-9));
    CHECK_THROWS_AS(contains(CMSetSpec::binary(3), vec({1.0, 1.0})), std::invalid_argument);
}

TEST_CASE("round_to_set: exact projections") {
    CHECK((round_to_set(CMSetSpec::unit_sphere(2), vec({3.0, 4.0})) - vec({0.6, 0.8})).norm() <=
          1e-15);
    // polar factor of a positive diagonal is the identity
    Matrix D(2, 2);
    D << 2.0, 0.0, 0.0, 0.5;
    const Vector r = round_to_set(CMSetSpec::semi_orthogonal(2, 2), as_vector(D));
    CHECK((r - as_vector(Matrix::Identity(2, 2))).norm() <= 1e-12);
    // top-2 support vs brute force over all 6 members
    const CMSetSpec sel = CMSetSpec::selection_vector(4, 2);
    const Vector z = vec({0.9, 0.1, 0.8, 0.2});
    const Vector y = round_to_set(sel, z);
    CHECK((y - vec({1.0, 0.0, 1.0, 0.0})).norm() == 0.0);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : enumerate_set(sel)) best = std::min(best, (z - v).norm());
    CHECK((z - y).norm() <= best + 1e-12);
}

TEST_CASE("round_to_set: deterministic tie-breaks") {
    // zero onto the sphere -> e_1
    CHECK((round_to_set(CMSetSpec::unit_sphere(3), Vector::Zero(3)) - vec({1.0, 0.0, 0.0}))
              .norm() == 0.0);
    // equal top-k candidates -> lowest indices win
    CHECK((round_to_set(CMSetSpec::selection_vector(4, 2), vec({0.5, 0.5, 0.5, 0.5})) -
           vec({1.0, 1.0, 0.0, 0.0}))
              .norm() == 0.0);
    // binary zero -> +1
    CHECK(round_to_set(CMSetSpec::binary(1), vec({0.0}))[0] == 1.0);
    // MPSK boundary angle (sector edge) -> lower constellation index
    const CMSetSpec psk = CMSetSpec::mpsk(4);
    const Vector on_axis = vec({1.0, 0.0});  // equidistant to l=0 and l=3
    const Vector p = round_to_set(psk, on_axis);
    CHECK(p[0] == doctest::Approx(std::cos(kPi / 4)).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(std::sin(kPi / 4)).epsilon(1e-12));
    // MPSK zero input -> l=0
    const Vector p0 = round_to_set(psk, vec({0.0, 0.0}));
    CHECK(p0[1] == doctest::Approx(std::sin(kPi / 4)).epsilon(1e-12));
}

TEST_CASE("round_to_set output is always a member") {
    Rng rng(17);
    const std::vector<CMSetSpec> specs = {
        CMSetSpec::binary(5),
        CMSetSpec::mpsk(8),
        CMSetSpec::unit_sphere(4),
        CMSetSpec::semi_orthogonal(4, 2),
        CMSetSpec::unit_vector(5),
        CMSetSpec::selection_vector(6, 3),
        CMSetSpec::partial_permutation(4, 2),
        CMSetSpec::size_assignment(6, {2, 3}),
        CMSetSpec::nonneg_semi_orthogonal(5, 3),
        CMSetSpec::product({CMSetSpec::mpsk(4), CMSetSpec::binary(2)}),
    };
    for (const auto& spec : specs)
        for (int t = 0; t < 200; ++t) {
            const Vector z = 2.0 * gaussian_vector(spec.ambient_dim(), rng);
            CHECK(contains(spec, round_to_set(spec, z), 1e-8));
        }
}

TEST_CASE("assignment rounding: greedy repair resolves row conflicts") {
    // both columns prefer row 0; the larger entry keeps it
    Matrix X(3, 2);
    X << 0.9, 0.8, 0.1, 0.7, 0.2, 0.1;
    const CMSetSpec spec = CMSetSpec::partial_permutation(3, 2);
    const Vector y = round_to_set(spec, as_vector(X));
    const auto Y = as_matrix(y, 3, 2);
    CHECK(Y(0, 0) == 1.0);  // column 0 wins row 0 (0.9 > 0.8)
    CHECK(Y(1, 1) == 1.0);  // column 1 falls back to its best free row
    CHECK(contains(spec, y, 1e-12));
}

TEST_CASE("distance_to_set: closed forms and brute force") {
    CHECK(distance_to_set(CMSetSpec::unit_sphere(3), Vector::Zero(3)).value ==
          doctest::Approx(1.0));
    CHECK(distance_to_set(CMSetSpec::binary(2), Vector::Zero(2)).value ==
          doctest::Approx(std::sqrt(2.0)));
    const Vector third = vec({1.0 / 3, 1.0 / 3, 1.0 / 3});
    const CMSetSpec uv = CMSetSpec::unit_vector(3);
    const double expect = (third - vec({1.0, 0.0, 0.0})).norm();
    CHECK(distance_to_set(uv, third).value == doctest::Approx(expect).epsilon(1e-12));
    CHECK(distance_to_set(uv, third).value ==
          doctest::Approx(brute_dist(uv, third)).epsilon(1e-12));
}

TEST_CASE("distance_to_set agrees with enumeration on assignment families") {
    Rng rng(31);
    const CMSetSpec spec = CMSetSpec::size_assignment(5, {2, 1});
    for (int t = 0; t < 25; ++t) {
        const Vector x = sample_hull(spec, rng);
        const auto d = distance_to_set(spec, x);
        CHECK(d.exact);
        CHECK(d.value == doctest::Approx(brute_dist(spec, x)).epsilon(1e-12));
    }
    // beyond the enumeration threshold the result is only an upper bound
    const CMSetSpec big = CMSetSpec::partial_permutation(11, 6);
    const Vector z = gaussian_vector(big.ambient_dim(), rng);
    const auto d = distance_to_set(big, z);
    CHECK_FALSE(d.exact);
    CHECK(d.value >= 0.0);
}

TEST_CASE("hull membership: catalog examples") {
    CHECK(hull_contains(CMSetSpec::binary(2), vec({0.5, -0.5})));
    CHECK_FALSE(hull_contains(CMSetSpec::binary(2), vec({1.2, 0.0})));
    // 1+0j violates the l=0 half space: Re(x) = 1 > cos(pi/4)
    CHECK_FALSE(hull_contains(CMSetSpec::mpsk(4), vec({1.0, 0.0})));
    CHECK(hull_contains(CMSetSpec::mpsk(4), vec({0.5, 0.2})));
    CHECK(hull_contains(CMSetSpec::semi_orthogonal(2, 2), as_vector(Matrix::Identity(2, 2))));
    CHECK_FALSE(hull_contains(CMSetSpec::semi_orthogonal(2, 2),
                              as_vector(1.5 * Matrix::Identity(2, 2))));
    // B+ surrogate: nonnegativity is part of the test
    CHECK_FALSE(hull_contains(CMSetSpec::nonneg_semi_orthogonal(2, 2),
                              as_vector(-0.5 * Matrix::Identity(2, 2))));
}

TEST_CASE("error bounds: catalog examples") {
    CHECK(error_bound_tight(CMSetSpec::binary(3), vec({1.0, 1.0, 1.0})) ==
          doctest::Approx(0.0));
    CHECK(error_bound_tight(CMSetSpec::unit_vector(3), vec({1.0 / 3, 1.0 / 3, 1.0 / 3})) ==
          doctest::Approx(4.0 / 3));
    CHECK(error_bound_tight(CMSetSpec::selection_vector(4, 2), vec({0.5, 0.5, 0.5, 0.5})) ==
          doctest::Approx(2.0));
    CHECK(error_bound_norm(CMSetSpec::binary(3), Vector::Zero(3)) == doctest::Approx(3.0));
    CHECK(error_bound_norm(CMSetSpec::mpsk(8), Vector::Zero(2)) ==
          doctest::Approx(1.0 / std::sin(kPi / 8)).epsilon(1e-9));
    CHECK(error_bound_norm(CMSetSpec::semi_orthogonal(3, 2), Vector::Zero(6)) ==
          doctest::Approx(2.0));
    // nu for m=3 is 2
    CHECK(error_bound_norm(CMSetSpec::mpsk(3), Vector::Zero(2)) == doctest::Approx(2.0));
}

TEST_CASE("universal bound examples") {
    const CMSetSpec bin = CMSetSpec::binary(4);
    CHECK(universal_bound(bin, vec({1.0, -1.0, 1.0, 1.0})) == doctest::Approx(0.0));
    CHECK(universal_bound(bin, Vector::Zero(4)) == doctest::Approx(2.0));
    CHECK(universal_bound(CMSetSpec::unit_sphere(2), vec({0.6, 0.0})) == doctest::Approx(0.8));
}

TEST_CASE("error bounds require hull membership") {
    CHECK_THROWS_AS(error_bound_tight(CMSetSpec::binary(2), vec({1.5, 0.0})),
                    std::domain_error);
    CHECK_THROWS_AS(error_bound_norm(CMSetSpec::unit_vector(3), vec({0.5, 0.2, 0.1})),
                    std::domain_error);
    CHECK_THROWS_AS(nu_value(CMSetSpec::nonneg_semi_orthogonal(3, 2)), std::domain_error);
}

TEST_CASE("error bound chain on random hull points (spot families)") {
    Rng rng(41);
    const std::vector<CMSetSpec> specs = {
        CMSetSpec::binary(6),
        CMSetSpec::mpsk(3),
        CMSetSpec::unit_sphere(5),
        CMSetSpec::semi_orthogonal(4, 2),
        CMSetSpec::unit_vector(6),
        CMSetSpec::selection_vector(6, 2),
        CMSetSpec::partial_permutation(4, 2),
        CMSetSpec::size_assignment(5, {2, 2}),
        CMSetSpec::nonneg_semi_orthogonal(4, 2),
        CMSetSpec::product({CMSetSpec::mpsk(4), CMSetSpec::mpsk(8)}),
    };
    for (const auto& spec : specs)
        for (int t = 0; t < 50; ++t) {
            const Vector x = sample_hull(spec, rng);
            const auto d = distance_to_set(spec, x);
            REQUIRE(d.exact);
            const double tight = error_bound_tight(spec, x);
            const double norm = error_bound_norm(spec, x);
            CHECK(d.value <= tight + 1e-9);
            CHECK(tight <= norm + 1e-9);
            // the universal bound needs x in conv(V); B+ samples for the
            // nonnegative semi-orthogonal family can sit outside the hull
            if (spec.family != Family::NonnegSemiOrthogonal)
                CHECK(d.value <= universal_bound(spec, x) + 1e-9);
        }
}

TEST_CASE("universal bound on true hull points, including nonneg semi-orthogonal") {
    Rng rng(42);
    const std::vector<CMSetSpec> specs = {CMSetSpec::nonneg_semi_orthogonal(4, 2),
                                          CMSetSpec::binary(5), CMSetSpec::mpsk(8)};
    for (const auto& spec : specs)
        for (int t = 0; t < 100; ++t) {
            const Vector x = sample_conv_combination(spec, rng);
            const auto d = distance_to_set(spec, x);
            CHECK(d.value <= universal_bound(spec, x) + 1e-9);
        }
}

TEST_CASE("bounds vanish on members") {
    Rng rng(43);
    const std::vector<CMSetSpec> specs = {
        CMSetSpec::binary(5),          CMSetSpec::mpsk(8),
        CMSetSpec::unit_sphere(4),     CMSetSpec::semi_orthogonal(4, 3),
        CMSetSpec::selection_vector(6, 3), CMSetSpec::size_assignment(6, {2, 3}),
        CMSetSpec::nonneg_semi_orthogonal(5, 2),
    };
    for (const auto& spec : specs)
        for (int t = 0; t < 50; ++t) {
            const Vector v = sample_member(spec, rng);
            // the sqrt-form bound amplifies float-level norm error to sqrt(eps)
            const double tol =
                spec.family == Family::NonnegSemiOrthogonal ? 1e-6 : 1e-9;
            CHECK(std::abs(error_bound_tight(spec, v)) <= tol);
            CHECK(std::abs(error_bound_norm(spec, v)) <= tol);
        }
}

TEST_CASE("max-k-sum inequality on the capped simplex") {
    Rng rng(47);
    std::uniform_real_distribution<double> unif(-1.0, 2.0);
    for (int t = 0; t < 2000; ++t) {
        const int n = 3 + t % 6;
        const int kap = 1 + t % std::min(n, 3);
        Vector z(n);
        for (int i = 0; i < n; ++i) z[i] = unif(rng);
        const Vector x = expp::project_hull(CMSetSpec::selection_vector(n, kap), z);
        CHECK(max_k_sum(x, kap) >= x.squaredNorm() - 1e-12);
    }
}

TEST_CASE("rounding is distance-minimal where documented exact") {
    Rng rng(53);
    // finite families: compare against full enumeration
    const std::vector<CMSetSpec> finite = {
        CMSetSpec::binary(4),
        CMSetSpec::mpsk(8),
        CMSetSpec::unit_vector(5),
        CMSetSpec::selection_vector(5, 2),
    };
    for (const auto& spec : finite) {
        const auto members = enumerate_set(spec);
        for (int t = 0; t < 100; ++t) {
            const Vector z = 1.5 * gaussian_vector(spec.ambient_dim(), rng);
            const double ours = (z - round_to_set(spec, z)).norm();
            for (const auto& v : members) CHECK(ours <= (z - v).norm() + 1e-12);
        }
    }
    // continuous families: compare against sampled members
    const std::vector<CMSetSpec> cont = {CMSetSpec::unit_sphere(4),
                                         CMSetSpec::semi_orthogonal(4, 2)};
    for (const auto& spec : cont)
        for (int t = 0; t < 100; ++t) {
            const Vector z = 1.5 * gaussian_vector(spec.ambient_dim(), rng);
            const double ours = (z - round_to_set(spec, z)).norm();
            for (int s = 0; s < 50; ++s)
                CHECK(ours <= (z - sample_member(spec, rng)).norm() + 1e-9);
        }
}

TEST_CASE("nonneg semi-orthogonal rounding handles empty columns") {
    // all mass on one column: the other columns must still get a support row
    Matrix X = Matrix::Zero(4, 2);
    X.col(0) = vec({0.9, 0.8, 0.7, 0.6});
    const CMSetSpec spec = CMSetSpec::nonneg_semi_orthogonal(4, 2);
    const Vector y = round_to_set(spec, as_vector(X));
    CHECK(contains(spec, y, 1e-8));
    // entirely nonpositive input still rounds to a member
    const Vector y2 = round_to_set(spec, as_vector(Matrix::Constant(4, 2, -1.0).eval()));
    CHECK(contains(spec, y2, 1e-8));
}
