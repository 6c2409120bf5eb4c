#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "riscade/rng.hpp"

using namespace riscade;

TEST_CASE("identical (seed, stream) replays the identical sequence") {
    RngStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStream c(42, 7), d(42, 7);
    const Eigen::VectorXcd x = sample_circ_gauss(c, 64, 2.5);
    const Eigen::VectorXcd y = sample_circ_gauss(d, 64, 2.5);
    CHECK(x == y);
}

TEST_CASE("distinct stream ids diverge") {
    RngStream a(42, 1), b(42, 2);
    int equal = 0;
    for (int i = 0; i < 100; ++i) equal += a.next_u64() == b.next_u64();
    CHECK(equal == 0);
}

TEST_CASE("mix_seed separates nearby inputs") {
    CHECK(mix_seed(1, 0) != mix_seed(0, 1));
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
    CHECK(mix_seed(0, 0) != mix_seed(0, 1));
}

TEST_CASE("sample_circ_gauss: zero variance gives the zero vector") {
    RngStream rng(3, 0);
    const Eigen::VectorXcd x = sample_circ_gauss(rng, 10, 0.0);
    CHECK(x.norm() == 0.0);
}

TEST_CASE("sample_circ_gauss: negative variance throws") {
    RngStream rng(3, 0);
    CHECK_THROWS_AS(sample_circ_gauss(rng, 4, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(rng.circular_gaussian(-0.1), std::invalid_argument);
}

TEST_CASE("sample_circ_gauss: power and pseudo-covariance at n = 1e5") {
    const int n = 100000;
    RngStream rng(2024, 1);
    const Eigen::VectorXcd x = sample_circ_gauss(rng, n, 2.0);

    const double power = x.squaredNorm() / n;
    CHECK(power > 1.96);
    CHECK(power < 2.04);

    // E[x^2] -> 0 for circular symmetry; threshold 4/sqrt(n) at unit variance
    RngStream rng2(2024, 2);
    const Eigen::VectorXcd u = sample_circ_gauss(rng2, n, 1.0);
    std::complex<double> pseudo = 0.0;
    for (int i = 0; i < n; ++i) pseudo += u[i] * u[i];
    CHECK(std::abs(pseudo) / n < 4.0 / std::sqrt(double(n)));

    // real and imaginary parts carry half the variance each
    double re2 = 0.0, im2 = 0.0;
    for (int i = 0; i < n; ++i) {
        re2 += x[i].real() * x[i].real();
        im2 += x[i].imag() * x[i].imag();
    }
    CHECK(re2 / n == doctest::Approx(1.0).epsilon(0.03));
    CHECK(im2 / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("gaussian draws match the requested variance") {
    RngStream rng(5, 0);
    const int n = 100000;
    double s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.gaussian(0.3);
        s2 += z * z;
    }
    CHECK(s2 / n == doctest::Approx(0.09).epsilon(0.03));
}

TEST_CASE("uniform stays in range") {
    RngStream rng(9, 0);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform(-2.0, 3.0);
        CHECK(u >= -2.0);
        CHECK(u < 3.0);
    }
}
