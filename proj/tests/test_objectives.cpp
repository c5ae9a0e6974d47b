#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

#include <cmath>

#include "expp/objectives.hpp"
#include "expp/oracle.hpp"

using namespace expp;
using expp::testing::gaussian_matrix;
using expp::testing::vec;

TEST_CASE("quadratic: hand-checked value and gradient") {
    const auto prob = ProblemSpec::quadratic(Matrix::Identity(2, 2), vec({0.3, -0.2}));
    const auto r = eval(prob, vec({1.0, -1.0}));
    CHECK(r.value == doctest::Approx(1.13));
    CHECK((r.grad - vec({1.4, -1.6})).norm() <= 1e-12);
    CHECK(r.smooth);
}

TEST_CASE("max-affine: active piece and tie rule") {
    Matrix A(2, 2);
    A << 1.0, 0.0, 0.0, 1.0;
    const auto prob = ProblemSpec::max_affine(A, Vector::Zero(2));
    const auto r = eval(prob, vec({2.0, 1.0}));
    CHECK(r.value == doctest::Approx(2.0));
    CHECK((r.grad - vec({1.0, 0.0})).norm() == 0.0);
    CHECK_FALSE(r.smooth);
    // tie at the kink: lowest index wins
    const auto tie = eval(prob, vec({1.0, 1.0}));
    CHECK((tie.grad - vec({1.0, 0.0})).norm() == 0.0);
}

TEST_CASE("constant objective") {
    const auto r = eval(ProblemSpec::constant(4.2), vec({1.0, 2.0, 3.0}));
    CHECK(r.value == 4.2);
    CHECK(r.grad.norm() == 0.0);
    CHECK(r.smooth);
}

TEST_CASE("trace quadratic matches finite differences") {
    Rng rng(3);
    Matrix G = gaussian_matrix(3, 3, rng);
    const Matrix A = 0.5 * (G + G.transpose());
    Matrix Gb = gaussian_matrix(2, 2, rng);
    const Matrix B = 0.5 * (Gb + Gb.transpose());
    const auto prob = ProblemSpec::trace_quadratic(A, B, gaussian_matrix(3, 2, rng));
    for (int t = 0; t < 10; ++t)
        CHECK(fd_gradient_check(prob, gaussian_vector(6, rng)) <= 1e-5);
}

TEST_CASE("descriptors: catalog examples") {
    const CMSetSpec bin2 = CMSetSpec::binary(2);
    const auto quad = ProblemSpec::quadratic(Matrix::Identity(2, 2), vec({0.0, 0.0}));
    const auto d = descriptors(quad, bin2);
    REQUIRE(d.L.has_value());
    CHECK(*d.L == doctest::Approx(2.0).epsilon(1e-8));

    Matrix A(2, 2);
    A << 3.0, 4.0, 0.0, 1.0;
    const auto ma = ProblemSpec::max_affine(A, Vector::Zero(2));
    const auto dm = descriptors(ma, bin2);
    CHECK_FALSE(dm.L.has_value());
    CHECK(dm.K == doctest::Approx(5.0));

    const auto dc = descriptors(ProblemSpec::constant(1.0), bin2);
    CHECK(*dc.L == 0.0);
    CHECK(dc.K == 0.0);
}

TEST_CASE("gradient agreement at random smooth points") {
    Rng rng(5);
    const auto quad = ProblemSpec::quadratic(gaussian_matrix(5, 4, rng), gaussian_vector(5, rng));
    Matrix G = gaussian_matrix(4, 4, rng);
    const auto qf = ProblemSpec::quad_form(0.5 * (G + G.transpose()), gaussian_vector(4, rng));
    for (int t = 0; t < 50; ++t) {
        CHECK(fd_gradient_check(quad, gaussian_vector(4, rng)) <= 1e-5);
        CHECK(fd_gradient_check(qf, gaussian_vector(4, rng)) <= 1e-5);
    }
}

TEST_CASE("max-affine equals the brute maximum over pieces") {
    Rng rng(7);
    const Matrix A = gaussian_matrix(6, 4, rng);
    const Vector b = gaussian_vector(6, rng);
    const auto prob = ProblemSpec::max_affine(A, b);
    for (int t = 0; t < 1000; ++t) {
        const Vector x = gaussian_vector(4, rng);
        double expect = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 6; ++i) expect = std::max(expect, A.row(i).dot(x) + b[i]);
        CHECK(eval(prob, x).value == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("reported K certifies the Lipschitz bound on hull pairs") {
    Rng rng(9);
    const CMSetSpec spec = CMSetSpec::binary(4);
    const std::vector<ProblemSpec> probs = {
        ProblemSpec::quadratic(gaussian_matrix(4, 4, rng), gaussian_vector(4, rng)),
        ProblemSpec::max_affine(gaussian_matrix(5, 4, rng), gaussian_vector(5, rng)),
    };
    for (const auto& prob : probs) {
        const double K = descriptors(prob, spec).K;
        for (int t = 0; t < 1000; ++t) {
            const Vector x = sample_hull(spec, rng);
            const Vector y = sample_hull(spec, rng);
            const double lhs = std::abs(eval(prob, x).value - eval(prob, y).value);
            CHECK(lhs <= K * (x - y).norm() + 1e-9);
        }
    }
}

TEST_CASE("dimension mismatch raises") {
    const auto prob = ProblemSpec::quadratic(Matrix::Identity(2, 2), vec({0.0, 0.0}));
    CHECK_THROWS_AS(eval(prob, vec({1.0, 2.0, 3.0})), std::invalid_argument);
    CHECK_THROWS_AS(ProblemSpec::quadratic(Matrix::Identity(2, 2), vec({1.0})),
                    std::invalid_argument);
}
