#include "abeta/caratheodory.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace abeta;

namespace {

HerglotzAtoms random_atoms(std::mt19937_64& rng, int max_atoms) {
    std::uniform_int_distribution<int> count(1, max_atoms);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int k = count(rng);
    std::vector<double> w(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto& v : w) total += (v = unit(rng));
    std::vector<HerglotzAtom> atoms;
    for (double v : w) atoms.push_back({std::polar(1.0, angle(rng)), v / total});
    return HerglotzAtoms(std::move(atoms));
}

Complex random_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Complex z;
    do z = Complex(u(rng), u(rng));
    while (std::abs(z) > 1.0);
    return z;
}

} // namespace

TEST_CASE("atoms_to_coeffs") {
    const auto point = atoms_to_coeffs(HerglotzAtoms({{1.0, 1.0}}), 5);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(std::abs(point.c(k) - 2.0) <= 1e-15);

    const auto even = atoms_to_coeffs(HerglotzAtoms({{1.0, 0.5}, {-1.0, 0.5}}), 6);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(std::abs(even.c(k) - (k % 2 ? 0.0 : 2.0)) <= 1e-15);

    const Complex i(0, 1);
    const auto rot = atoms_to_coeffs(HerglotzAtoms({{i, 1.0}}), 4);
    for (std::size_t k = 1; k <= 4; ++k)
        CHECK(std::abs(rot.c(k) - 2.0 * std::pow(i, static_cast<double>(k))) <= 1e-14);
}

TEST_CASE("HerglotzAtoms validation") {
    CHECK_THROWS_AS(HerglotzAtoms({}), std::invalid_argument);
    CHECK_THROWS_AS(HerglotzAtoms({{1.1, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(HerglotzAtoms({{1.0, 0.7}}), std::invalid_argument);
    CHECK_THROWS_AS(HerglotzAtoms({{1.0, 1.5}, {-1.0, -0.5}}), std::invalid_argument);
}

TEST_CASE("atoms_to_coeffs is linear in the weights") {
    const Complex x1 = std::polar(1.0, 0.4), x2 = std::polar(1.0, 2.9);
    const auto a = atoms_to_coeffs(HerglotzAtoms({{x1, 1.0}}), 4);
    const auto b = atoms_to_coeffs(HerglotzAtoms({{x2, 1.0}}), 4);
    const auto mix = atoms_to_coeffs(HerglotzAtoms({{x1, 0.3}, {x2, 0.7}}), 4);
    for (std::size_t k = 1; k <= 4; ++k)
        CHECK(std::abs(mix.c(k) - (0.3 * a.c(k) + 0.7 * b.c(k))) <= 1e-14);
}

TEST_CASE("is_valid_truncation") {
    CHECK(is_valid_truncation(CaratheodoryTruncation({2, 2})));
    CHECK_FALSE(is_valid_truncation(CaratheodoryTruncation({2.5})));
    // [[2,2,0],[2,2,2],[0,2,2]] has determinant -8.
    CHECK_FALSE(is_valid_truncation(CaratheodoryTruncation({2, 0})));
    CHECK(min_toeplitz_eigenvalue(CaratheodoryTruncation({2, 0})) < -0.5);
    CHECK(is_valid_truncation(CaratheodoryTruncation({0, 0, 0})));
}

TEST_CASE("random atomic measures give valid truncations") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = atoms_to_coeffs(random_atoms(rng, 4), 6);
        for (std::size_t k = 1; k <= 6; ++k) CHECK(std::abs(c.c(k)) <= 2.0 + 1e-12);
        CHECK(is_valid_truncation(c));
    }
}

TEST_CASE("coefficient-body parameterization: fixed values") {
    for (Complex x : {Complex(0), Complex(1), Complex(0, -1), Complex(0.3, 0.2)})
        CHECK(std::abs(lz_c2(2.0, x) - 2.0) <= 1e-15);
    CHECK(std::abs(lz_c2(0.0, 1.0) - 2.0) <= 1e-15);
    CHECK(std::abs(lz_c2(0.0, 0.0)) <= 1e-15);

    CHECK(std::abs(lz_c3(0.0, 0.0, 1.0) - 2.0) <= 1e-15);
    for (Complex x : {Complex(0), Complex(-1), Complex(0.5, 0.5)})
        for (Complex z : {Complex(0), Complex(1), Complex(0, 0.7)})
            CHECK(std::abs(lz_c3(2.0, x, z) - 2.0) <= 1e-15);
    for (Complex z : {Complex(0), Complex(1), Complex(-0.6, 0.8)})
        CHECK(std::abs(lz_c3(0.0, 1.0, z)) <= 1e-15);

    const auto aff = lz_c3_affine(0.7, Complex(0.2, -0.4));
    const Complex z(0.1, 0.9);
    CHECK(std::abs(aff.offset + aff.slope * z - lz_c3(0.7, Complex(0.2, -0.4), z)) <= 1e-15);
}

TEST_CASE("coefficient-body parameterization: domain") {
    CHECK_THROWS_AS(lz_c2(-0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(lz_c2(2.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(lz_c2(1.0, 1.01), std::domain_error);
    CHECK_THROWS_AS(lz_c3(1.0, 0.5, Complex(0, 1.01)), std::domain_error);
}

TEST_CASE("random points of the box give valid truncations") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c1d(0.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double c1 = c1d(rng);
        Complex x = random_disk(rng), zeta = random_disk(rng);
        // Put some samples on the boundary circles, where extremizers live.
        if (trial % 4 == 1) x /= std::abs(x);
        if (trial % 4 == 2) zeta /= std::abs(zeta);
        const Complex c2 = lz_c2(c1, x), c3 = lz_c3(c1, x, zeta);
        CHECK(std::abs(c2) <= 2.0 + 1e-12);
        CHECK(std::abs(c3) <= 2.0 + 1e-12);
        CHECK(is_valid_truncation(CaratheodoryTruncation({c1, c2, c3})));
    }
}

TEST_CASE("generator series") {
    const auto g = CaratheodoryTruncation({2, Complex(0, 1)}).generator();
    CHECK(g.order() == 2);
    CHECK(g[0] == Complex(1.0));
    CHECK(g[2] == Complex(0, 1));
}
