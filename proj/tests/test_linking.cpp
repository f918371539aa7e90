#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "modrad/linalg.hpp"
#include "modrad/linking.hpp"
#include "modrad/rng.hpp"

namespace {

using modrad::AlgebraElement;
using modrad::CMatrix;
using modrad::Complex;
using modrad::LinkingElement;
using modrad::ModuleElement;
using modrad::ModuleShape;

CMatrix mat(std::size_t r, std::size_t c, std::vector<Complex> e) {
    return CMatrix(r, c, std::move(e));
}

ModuleElement random_element(const ModuleShape& shape, std::uint64_t seed) {
    return ModuleElement(shape, modrad::rng::random_ginibre(shape.m, shape.n, seed));
}

// Entrywise norm of one corner of an assembled block matrix.
double corner_mass(const CMatrix& full, std::size_t r0, std::size_t c0, std::size_t rows,
                   std::size_t cols) {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            worst = std::max(worst, std::abs(full(r0 + i, c0 + j)));
    return worst;
}

}  // namespace

TEST_CASE("assembled layout places the corners") {
    const ModuleShape s{1, 1};
    const LinkingElement e(s, mat(1, 1, {2}), mat(1, 1, {4}), mat(1, 1, {3}), mat(1, 1, {5}));
    CHECK(modrad::max_abs_diff(modrad::assemble(e), mat(2, 2, {2, 4, 3, 5})) == 0.0);

    const ModuleShape s21{2, 1};
    const ModuleElement x(s21, mat(1, 2, {7, 8}));
    const CMatrix full = modrad::assemble(modrad::embed_r(x));
    REQUIRE(full.rows() == 3);
    CHECK(full(2, 0) == Complex(7, 0));
    CHECK(full(2, 1) == Complex(8, 0));
    CHECK(corner_mass(full, 0, 0, 2, 3) == 0.0);
    CHECK(full(2, 2) == Complex(0, 0));
}

TEST_CASE("left multiplication embedding on known input") {
    const ModuleShape s{1, 1};
    const AlgebraElement two(s, mat(1, 1, {2}));
    CHECK(modrad::max_abs_diff(modrad::assemble(modrad::embed_T(two)),
                               mat(2, 2, {2, 0, 0, 0})) == 0.0);

    const ModuleShape s22{2, 2};
    const CMatrix full = modrad::assemble(modrad::embed_T(AlgebraElement::identity(s22)));
    CHECK(full(0, 0) == Complex(1, 0));
    CHECK(full(1, 1) == Complex(1, 0));
    CHECK(corner_mass(full, 2, 2, 2, 2) == 0.0);
}

TEST_CASE("embeddings are isometric") {
    for (std::uint64_t k = 0; k < 20; ++k) {
        const ModuleShape shape{1 + k % 4, 1 + (k / 4) % 4};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(51, k));
        const AlgebraElement a(shape,
                               modrad::rng::random_ginibre(shape.n, shape.n,
                                                           modrad::rng::derive_seed(52, k)));
        CAPTURE(k);
        const double nx = modrad::module_norm(x);
        CHECK(std::abs(modrad::linking_norm(modrad::embed_r(x)) - nx) <= 1e-12 * (1.0 + nx));
        CHECK(std::abs(modrad::linking_norm(modrad::embed_l(x)) - nx) <= 1e-12 * (1.0 + nx));
        const double na = modrad::linalg::operator_norm(a.mat());
        CHECK(std::abs(modrad::linking_norm(modrad::embed_T(a)) - na) <= 1e-12 * (1.0 + na));
    }
}

TEST_CASE("creation embedding on known input") {
    const ModuleShape s{1, 1};
    const ModuleElement three(s, mat(1, 1, {3}));
    CHECK(modrad::max_abs_diff(modrad::assemble(modrad::embed_r(three)),
                               mat(2, 2, {0, 0, 3, 0})) == 0.0);
    CHECK(modrad::max_abs_diff(modrad::assemble(modrad::embed_l(three)),
                               mat(2, 2, {0, 3, 0, 0})) == 0.0);

    const ModuleShape s12{1, 2};
    const ModuleElement v(s12, mat(2, 1, {1, Complex(0, 1)}));
    const CMatrix ann = modrad::assemble(modrad::embed_l(v));
    CHECK(ann(0, 1) == Complex(1, 0));
    CHECK(ann(0, 2) == Complex(0, -1));
}

TEST_CASE("annihilation embedding is the adjoint of creation") {
    for (std::uint64_t k = 0; k < 20; ++k) {
        const ModuleShape shape{1 + k % 3, 1 + (k / 3) % 4};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(53, k));
        CHECK(modrad::max_abs_diff(modrad::assemble(modrad::embed_l(x)),
                                   modrad::adjoint(modrad::assemble(modrad::embed_r(x)))) == 0.0);
        const LinkingElement adj = modrad::adjoint_linking(modrad::embed_r(x));
        CHECK(modrad::max_abs_diff(modrad::assemble(adj),
                                   modrad::assemble(modrad::embed_l(x))) == 0.0);
    }
}

TEST_CASE("rank one embedding lands in the lower right corner") {
    const ModuleShape s12{1, 2};
    const ModuleElement e1(s12, mat(2, 1, {1, 0}));
    const ModuleElement e2(s12, mat(2, 1, {0, 1}));
    const CMatrix full = modrad::assemble(modrad::embed_theta(e1, e2));
    REQUIRE(full.rows() == 3);
    CHECK(full(1, 2) == Complex(1, 0));
    CHECK(corner_mass(full, 0, 0, 1, 3) == 0.0);
    CHECK(full(2, 1) == Complex(0, 0));

    for (std::uint64_t k = 0; k < 10; ++k) {
        const ModuleShape shape{1 + k % 3, 2};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(54, k));
        const ModuleElement y = random_element(shape, modrad::rng::derive_seed(55, k));
        CHECK(modrad::linking_norm(modrad::embed_theta(x, y)) <=
              modrad::module_norm(x) * modrad::module_norm(y) + 1e-10);
    }
}

TEST_CASE("linking norm satisfies the c star identity") {
    for (std::uint64_t k = 0; k < 15; ++k) {
        const ModuleShape shape{1 + k % 3, 1 + (k / 3) % 3};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(56, k));
        const CMatrix e = modrad::assemble(modrad::embed_r(x));
        const double n = modrad::linking_norm(modrad::embed_r(x));
        const double gram = modrad::linalg::operator_norm(modrad::adjoint(e) * e);
        CAPTURE(k);
        CHECK(std::abs(n * n - gram) <= 1e-11 * (1.0 + n * n));
    }
}

TEST_CASE("linking elements add and scale blockwise") {
    const ModuleShape shape{2, 2};
    const ModuleElement x = random_element(shape, 61);
    const ModuleElement y = random_element(shape, 62);
    const LinkingElement sum = modrad::embed_r(x) + modrad::embed_l(y);
    CHECK(modrad::max_abs_diff(modrad::assemble(sum),
                               modrad::assemble(modrad::embed_r(x)) +
                                   modrad::assemble(modrad::embed_l(y))) == 0.0);
    const Complex alpha(0, 2);
    CHECK(modrad::max_abs_diff(modrad::assemble(alpha * modrad::embed_r(x)),
                               alpha * modrad::assemble(modrad::embed_r(x))) == 0.0);
}

TEST_CASE("phase twisted element on known input") {
    const ModuleShape s{1, 1};
    const ModuleElement one(s, mat(1, 1, {1}));
    CHECK(modrad::max_abs_diff(modrad::assemble(modrad::omega_element(Complex(1, 0), one)),
                               mat(2, 2, {0, 1, 1, 0})) == 0.0);
    CHECK(modrad::max_abs_diff(modrad::assemble(modrad::omega_element(Complex(0, 1), one)),
                               mat(2, 2, {0, Complex(0, -1), Complex(0, 1), 0})) == 0.0);
    CHECK_THROWS_AS(modrad::omega_element(Complex(1.1, 0), one), modrad::NotUnitModulusError);
    CHECK_THROWS_AS(modrad::omega_element(Complex(0, 0), one), modrad::NotUnitModulusError);
}

TEST_CASE("phase twisted element is self adjoint and phase linear") {
    for (std::uint64_t k = 0; k < 20; ++k) {
        const ModuleShape shape{1 + k % 3, 1 + (k / 3) % 3};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(57, k));
        const double angle = 2.0 * 3.14159265358979323846 * double(k) / 20.0;
        const Complex lambda = std::polar(1.0, angle);
        const CMatrix b = modrad::assemble(modrad::omega_element(lambda, x));
        CAPTURE(k);
        CHECK(modrad::max_abs_diff(b, modrad::adjoint(b)) <= 1e-15);
        const CMatrix split = lambda * modrad::assemble(modrad::embed_r(x)) +
                              std::conj(lambda) * modrad::assemble(modrad::embed_l(x));
        CHECK(modrad::max_abs_diff(b, split) <= 1e-15);
    }
}

TEST_CASE("products of embedded generators close into the corners") {
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const ModuleShape shape{1 + k % 4, 1 + (k / 4) % 4};
        const ModuleElement x = random_element(shape, modrad::rng::derive_seed(58, k));
        const ModuleElement y = random_element(shape, modrad::rng::derive_seed(59, k));
        const AlgebraElement a(shape,
                               modrad::rng::random_ginibre(shape.n, shape.n,
                                                           modrad::rng::derive_seed(60, k)));
        CAPTURE(k);
        CHECK(modrad::check_product_identities(x, y, a));
        CHECK(modrad::product_identities_deviation(x, y, a) <= modrad::kProductIdentityTol);
    }
}

TEST_CASE("annihilation times creation misses every off corner") {
    const ModuleShape shape{2, 3};
    const ModuleElement x = random_element(shape, 71);
    const ModuleElement y = random_element(shape, 72);
    const CMatrix prod = modrad::assemble(modrad::embed_l(x)) *
                         modrad::assemble(modrad::embed_r(y));
    CHECK(corner_mass(prod, 0, 2, 2, 3) <= 1e-13);
    CHECK(corner_mass(prod, 2, 0, 3, 5) <= 1e-13);

    const CMatrix other = modrad::assemble(modrad::embed_r(x)) *
                          modrad::assemble(modrad::embed_l(y));
    CHECK(corner_mass(other, 0, 0, 2, 5) <= 1e-13);
    CHECK(corner_mass(other, 2, 0, 3, 2) <= 1e-13);
}

TEST_CASE("block validation rejects mismatched corners") {
    const ModuleShape shape{2, 3};
    CHECK_THROWS_AS(LinkingElement(shape, CMatrix(2, 2), CMatrix(2, 3), CMatrix(3, 2),
                                   CMatrix(2, 2)),
                    modrad::ShapeMismatchError);
    CHECK_THROWS_AS(LinkingElement(shape, CMatrix(3, 3), CMatrix(2, 3), CMatrix(3, 2),
                                   CMatrix(3, 3)),
                    modrad::ShapeMismatchError);
    CHECK_NOTHROW(LinkingElement(shape, CMatrix(2, 2), CMatrix(2, 3), CMatrix(3, 2),
                                 CMatrix(3, 3)));
}
