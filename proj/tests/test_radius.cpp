#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "modrad/linalg.hpp"
#include "modrad/radius.hpp"
#include "modrad/rng.hpp"

namespace {

using modrad::CMatrix;
using modrad::Complex;
using modrad::ModuleElement;
using modrad::ModuleShape;
using modrad::RadiusConfig;
using modrad::RadiusResult;

CMatrix mat(std::size_t r, std::size_t c, std::vector<Complex> e) {
    return CMatrix(r, c, std::move(e));
}

ModuleElement random_element(const ModuleShape& shape, std::uint64_t seed) {
    return ModuleElement(shape, modrad::rng::random_ginibre(shape.m, shape.n, seed));
}

// Independent oracle: dense scan of the phase circle for the module radius,
// with the trivial grid-gap bound as its own accuracy estimate.
double omega_dense_oracle(const ModuleElement& x, std::size_t samples) {
    double best = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double angle = 2.0 * std::numbers::pi * double(k) / double(samples);
        const CMatrix b = modrad::assemble(modrad::omega_element(std::polar(1.0, angle), x));
        best = std::max(best, 0.5 * modrad::linalg::operator_norm(b));
    }
    return best;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(modrad::validate_radius_config(RadiusConfig{4, 1e-10, 200}),
                    modrad::UsageError);
    CHECK_THROWS_AS(modrad::validate_radius_config(RadiusConfig{64, 0.0, 200}),
                    modrad::UsageError);
    CHECK_THROWS_AS(modrad::validate_radius_config(RadiusConfig{64, 1e-10, 0}),
                    modrad::UsageError);
    CHECK_NOTHROW(modrad::validate_radius_config(RadiusConfig{}));
}

TEST_CASE("hermitian part extraction") {
    const CMatrix h = mat(2, 2, {1, Complex(0, 1), Complex(0, -1), 2});
    CHECK(modrad::max_abs_diff(modrad::re_part(Complex(1, 0), h), h) <= 1e-15);

    const CMatrix up = mat(2, 2, {0, 2, 0, 0});
    CHECK(modrad::max_abs_diff(modrad::re_part(Complex(1, 0), up),
                               mat(2, 2, {0, 1, 1, 0})) == 0.0);
    CHECK(modrad::max_abs_diff(modrad::re_part(Complex(0, 1), up),
                               mat(2, 2, {0, Complex(0, 1), Complex(0, -1), 0})) == 0.0);

    CHECK_THROWS_AS(modrad::re_part(Complex(1, 0), CMatrix(2, 3)), modrad::NotSquareError);
    CHECK_THROWS_AS(modrad::re_part(Complex(2, 0), CMatrix::identity(2)),
                    modrad::NotUnitModulusError);
}

TEST_CASE("matrix radius on known matrices") {
    const RadiusResult id = modrad::numerical_radius(CMatrix::identity(2));
    CHECK(std::abs(id.value - 1.0) <= id.certificate + 1e-12);
    CHECK(id.value <= 1.0 + 1e-12);

    // Nilpotent Jordan cell scaled by 2: radius is half the norm.
    const RadiusResult nil = modrad::numerical_radius(mat(2, 2, {0, 2, 0, 0}));
    CHECK(std::abs(nil.value - 1.0) <= nil.certificate + 1e-12);

    const RadiusResult diag = modrad::numerical_radius(mat(2, 2, {1, 0, 0, Complex(0, 1)}));
    CHECK(std::abs(diag.value - 1.0) <= diag.certificate + 1e-12);

    const RadiusResult zero = modrad::numerical_radius(CMatrix(3, 3));
    CHECK(zero.value == 0.0);
}

TEST_CASE("matrix radius certificates are sound against a finer scan") {
    for (std::uint64_t k = 0; k < 10; ++k) {
        const std::size_t n = 2 + k % 4;
        const CMatrix m = modrad::rng::random_ginibre(n, n, modrad::rng::derive_seed(81, k));
        const RadiusConfig cfg{256, 1e-10, 60};
        const RadiusResult r = modrad::numerical_radius(m, cfg);
        const double fine = modrad::numerical_radius_bruteforce(m, 2560);
        const double gap = std::numbers::pi * modrad::linalg::operator_norm(m) / 2560.0;
        CAPTURE(k);
        CHECK(fine <= r.value + r.certificate + 1e-12);
        CHECK(r.value <= fine + gap + 1e-12);
        CHECK(r.certificate >= 0.0);
        CHECK(r.argmax_theta >= 0.0);
        CHECK(r.argmax_theta < 2.0 * std::numbers::pi + 1e-12);
    }
}

TEST_CASE("matrix radius sits between half the norm and the norm") {
    for (std::uint64_t k = 0; k < 10; ++k) {
        const std::size_t n = 2 + k % 4;
        const CMatrix m = modrad::rng::random_ginibre(n, n, modrad::rng::derive_seed(82, k));
        const RadiusResult r = modrad::numerical_radius(m);
        const double nrm = modrad::linalg::operator_norm(m);
        CAPTURE(k);
        CHECK(r.value >= 0.5 * nrm - r.certificate - 1e-10);
        CHECK(r.value <= nrm + 1e-10);
        CHECK(r.value >= modrad::linalg::spectral_radius(m) - r.certificate - 1e-9);
    }
}

TEST_CASE("matrix radius of normal matrices equals the operator norm") {
    for (std::uint64_t k = 0; k < 8; ++k) {
        const std::size_t n = 2 + k % 3;
        const CMatrix g = modrad::rng::random_ginibre(n, n, modrad::rng::derive_seed(83, k));
        CMatrix h(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
        const RadiusResult r = modrad::numerical_radius(h);
        const double nrm = modrad::linalg::operator_norm(h);
        CAPTURE(k);
        CHECK(std::abs(r.value - nrm) <= r.certificate + 1e-9);
    }
}

TEST_CASE("brute force scan behaves") {
    CHECK(std::abs(modrad::numerical_radius_bruteforce(CMatrix::identity(2), 64) - 1.0) <= 1e-12);
    CHECK(modrad::numerical_radius_bruteforce(CMatrix(2, 2), 64) == 0.0);
    CHECK(std::abs(modrad::numerical_radius_bruteforce(mat(2, 2, {0, 2, 0, 0}), 1000) - 1.0) <=
          1e-5);
    CHECK_THROWS_AS(modrad::numerical_radius_bruteforce(CMatrix::identity(2), 8),
                    modrad::UsageError);
}

TEST_CASE("module radius on known elements") {
    const ModuleShape s12{1, 2};
    const RadiusResult unit = modrad::omega(ModuleElement(s12, mat(2, 1, {1, 0})));
    CHECK(std::abs(unit.value - 0.5) <= unit.certificate + 1e-12);

    const ModuleShape s22{2, 2};
    const RadiusResult d = modrad::omega(ModuleElement(s22, mat(2, 2, {1, 0, 0, 2})));
    CHECK(std::abs(d.value - 1.0) <= d.certificate + 1e-12);

    const RadiusResult zero = modrad::omega(ModuleElement::zero(s22));
    CHECK(zero.value == 0.0);
    CHECK(zero.certificate <= 1e-15);
}

TEST_CASE("module radius matches a dense independent scan") {
    for (std::uint64_t k = 0; k < 8; ++k) {
        const ModuleShape shape{1 + k % 3, 1 + (k / 3) % 3};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(84, k));
        const RadiusConfig cfg{128, 1e-10, 40};
        const RadiusResult r = modrad::omega(x, cfg);
        const double oracle = omega_dense_oracle(x, 2048);
        const double gap = std::numbers::pi * modrad::module_norm(x) / 2048.0;
        CAPTURE(k);
        CHECK(oracle <= r.value + r.certificate + 1e-12);
        CHECK(r.value <= oracle + gap + 1e-12);
    }
}

TEST_CASE("module radius agrees across both engines") {
    for (std::uint64_t k = 0; k < 8; ++k) {
        const ModuleShape shape{2 + k % 2, 1 + k % 3};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(85, k));
        const RadiusResult a = modrad::omega(x);
        const RadiusResult b = modrad::omega_via_w(x);
        CAPTURE(k);
        CHECK(std::abs(a.value - b.value) <= a.certificate + b.certificate + 1e-10);
    }
    const ModuleShape s11{1, 1};
    const RadiusResult one = modrad::omega_via_w(ModuleElement(s11, mat(1, 1, {1})));
    CHECK(std::abs(one.value - 0.5) <= one.certificate + 1e-12);
}

TEST_CASE("module radius is absolutely homogeneous and subadditive") {
    const ModuleShape shape{2, 3};
    const ModuleElement x = random_element(shape, 91);
    const ModuleElement y = random_element(shape, 92);
    const Complex alpha(0.6, 0.8);
    const RadiusResult rx = modrad::omega(x);
    const RadiusResult ry = modrad::omega(y);
    const RadiusResult rax = modrad::omega(alpha * x);
    const RadiusResult rsum = modrad::omega(x + y);
    CHECK(std::abs(rax.value - std::abs(alpha) * rx.value) <=
          rax.certificate + rx.certificate + 1e-10);
    CHECK(rsum.value <= rx.value + ry.value + rx.certificate + ry.certificate + 1e-10);
}

TEST_CASE("phase profile of the module objective is flat") {
    for (std::uint64_t k = 0; k < 6; ++k) {
        const ModuleShape shape{1 + k % 3, 1 + (k / 2) % 3};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(86, k));
        const RadiusResult r = modrad::omega_with_profile(x, RadiusConfig{128, 1e-10, 40});
        REQUIRE(r.profile_samples.has_value());
        CHECK(r.profile_samples->size() >= 128);
        double lo = 1e300, hi = -1e300;
        for (const auto& [angle, val] : *r.profile_samples) {
            lo = std::min(lo, val);
            hi = std::max(hi, val);
        }
        CAPTURE(k);
        CHECK(hi - lo <= 1e-9 * (1.0 + hi));
        CHECK(std::abs(hi - r.value) <= r.certificate + 1e-12);
    }
}

TEST_CASE("plain module radius leaves the profile empty") {
    const ModuleShape s11{1, 1};
    const RadiusResult r = modrad::omega(ModuleElement(s11, mat(1, 1, {1})));
    CHECK_FALSE(r.profile_samples.has_value());
}
