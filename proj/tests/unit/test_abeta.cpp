#include "abeta/abeta_function.hpp"
#include "abeta/functionals.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace abeta;

namespace {

const std::array<double, 11> kBetaGrid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

bool close(Complex a, Complex b, double tol = 1e-14) { return std::abs(a - b) <= tol; }

std::vector<double> radii_up_to(double rmax) {
    std::vector<double> r;
    for (int k = 1; k <= 9; ++k) r.push_back(rmax * k / 9.0);
    return r;
}

} // namespace

TEST_CASE("from_caratheodory") {
    const CaratheodoryTruncation c({2, 2, 2});
    const auto f0 = from_caratheodory(0.0, c);
    CHECK(close(f0.a(2), 1.0));
    CHECK(close(f0.a(3), 2.0 / 3));
    CHECK(close(f0.a(4), 0.5));

    const auto fh = from_caratheodory(0.5, c);
    CHECK(close(fh.a(2), 4.0 / 3));
    CHECK(close(fh.a(3), 1.0));
    CHECK(close(fh.a(4), 0.8));

    const auto id = from_caratheodory(0.3, CaratheodoryTruncation({0, 0, 0}));
    CHECK(id.a(1) == Complex(1.0));
    for (std::size_t n = 2; n <= 4; ++n) CHECK(id.a(n) == Complex{});

    CHECK_THROWS_AS(from_caratheodory(-0.1, c), std::invalid_argument);
    CHECK_THROWS_AS(from_caratheodory(1.5, c), std::invalid_argument);
}

TEST_CASE("from_caratheodory is linear in c") {
    const CaratheodoryTruncation u({Complex(1, 0.5), -0.3, Complex(0, 2)});
    const CaratheodoryTruncation v({0.2, Complex(1, -1), 0.9});
    const CaratheodoryTruncation mix({0.25 * u.c(1) + 0.75 * v.c(1), 0.25 * u.c(2) + 0.75 * v.c(2),
                                      0.25 * u.c(3) + 0.75 * v.c(3)});
    for (double beta : kBetaGrid) {
        const auto fu = from_caratheodory(beta, u), fv = from_caratheodory(beta, v);
        const auto fm = from_caratheodory(beta, mix);
        for (std::size_t n = 2; n <= 4; ++n) CHECK(close(fm.a(n), 0.25 * fu.a(n) + 0.75 * fv.a(n)));
    }
}

TEST_CASE("coefficient divisor is at least 1") {
    for (double beta : kBetaGrid)
        for (std::size_t n = 2; n <= 30; ++n) CHECK(coefficient_divisor(n, beta) >= 1.0);
}

TEST_CASE("extremal_f1") {
    const auto f0 = extremal_f1(0.0, 8);
    for (std::size_t n = 2; n <= 9; ++n) CHECK(close(f0.a(n), 2.0 / n));
    const auto f1 = extremal_f1(1.0, 8);
    for (std::size_t n = 2; n <= 9; ++n) CHECK(close(f1.a(n), 2.0));
    CHECK(close(extremal_f1(0.5, 3).a(2), 4.0 / 3));
    CHECK(extremal_f1(0.5, 3).order() == 4);
    // Agrees with the generator route.
    for (double beta : kBetaGrid) {
        const auto direct = extremal_f1(beta, 6), via = from_caratheodory(beta, f1_generator(6));
        for (std::size_t n = 2; n <= 7; ++n) CHECK(close(direct.a(n), via.a(n)));
    }
}

TEST_CASE("extremal_f1 is z (2 2F1(1, 1/(1-b); (2-b)/(1-b); z) - 1)") {
    for (double beta : {0.0, 0.25, 0.5, 0.75}) {
        const auto h = hypergeom_2f1(1.0, 1.0 / (1.0 - beta), (2.0 - beta) / (1.0 - beta), 9);
        const auto f = extremal_f1(beta, 9);
        // z (2h - 1): coefficient of z^n is 2 h_{n-1} for n >= 2, and 2 h_0 - 1 = 1 for n = 1.
        CHECK(std::abs(2.0 * h[0] - 1.0 - 1.0) <= 1e-15);
        for (std::size_t n = 2; n <= 10; ++n) {
            CAPTURE(beta);
            CAPTURE(n);
            CHECK(std::abs(2.0 * h[n - 1] - f.a(n)) <= 1e-12);
        }
    }
}

TEST_CASE("extremal_f2, f3") {
    for (double beta : kBetaGrid) {
        const auto f2 = extremal_f2(beta, 6);
        CHECK(f2.a(2) == Complex{});
        CHECK(f2.a(4) == Complex{});
        CHECK(close(f2.a(3), 2.0 / (3.0 - 2.0 * beta)));
        const auto f3 = extremal_f3(beta, 6);
        CHECK(f3.a(2) == Complex{});
        CHECK(f3.a(3) == Complex{});
        CHECK(close(f3.a(4), 2.0 / (4.0 - 3.0 * beta)));
    }
    CHECK(close(extremal_f2(0.0, 3).a(3), 2.0 / 3));
    CHECK(close(extremal_f2(1.0, 3).a(3), 2.0));
    CHECK(close(extremal_f3(0.0, 3).a(4), 0.5));
    CHECK(close(extremal_f3(1.0, 3).a(4), 2.0));
}

TEST_CASE("extremal_diff_lower") {
    const auto g = diff_lower_generator(0.0, 4);
    CHECK(std::abs(g.c(1) - 2.0 / std::sqrt(3.0)) <= 1e-15);
    CHECK(std::abs(g.c(3) - 2.0 / std::sqrt(3.0)) <= 1e-15);
    CHECK(g.c(2) == Complex(2.0));
    CHECK(g.c(4) == Complex(2.0));

    const auto f = extremal_diff_lower(0.0, 3);
    CHECK(std::abs(succ_diff(2, f.a(2), f.a(3)) + 1.0 / std::sqrt(3.0)) <= 1e-15);
    for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        CAPTURE(beta);
        CHECK(is_valid_truncation(diff_lower_generator(beta, 3)));
        const auto h = extremal_diff_lower(beta, 3);
        CHECK(std::abs(succ_diff(2, h.a(2), h.a(3)) + 1.0 / std::sqrt(3.0 - 2.0 * beta)) <= 1e-14);
    }
}

TEST_CASE("every extremal generator is a valid truncation") {
    for (double beta : kBetaGrid) {
        CAPTURE(beta);
        CHECK(is_valid_truncation(f1_generator(6)));
        CHECK(is_valid_truncation(f2_generator(6)));
        CHECK(is_valid_truncation(f3_generator(6)));
        CHECK(is_valid_truncation(diff_lower_generator(beta, 3)));
    }
}

TEST_CASE("membership_margin") {
    const auto radii = radii_up_to(0.9);
    for (double beta : {0.0, 0.4, 1.0}) {
        const AbetaFunction id(beta, {});
        CHECK(std::abs(membership_margin(id, radii, 32) - 1.0) <= 1e-15);
    }
    CHECK(membership_margin(extremal_f2(0.0, 20), radii, 64) > 0.0);
    CHECK(membership_margin(AbetaFunction(0.0, {5.0}), radii, 64) < 0.0);

    const std::vector<double> bad{0.5, 1.0};
    CHECK_THROWS_AS(membership_margin(AbetaFunction(0.0, {}), bad, 8), std::invalid_argument);
    CHECK_THROWS_AS(membership_margin(AbetaFunction(0.0, {}), radii, 0), std::invalid_argument);
}

TEST_CASE("AbetaFunction invariants") {
    CHECK_THROWS_AS(AbetaFunction(1.01, {}), std::invalid_argument);
    CHECK_THROWS_AS(AbetaFunction(0.5, {Complex(NAN, 0)}), std::invalid_argument);
    const AbetaFunction f(0.5, {1.0, 2.0});
    const auto s = f.series();
    CHECK(s.order() == 3);
    CHECK(s[0] == Complex{});
    CHECK(s[1] == Complex(1.0));
    CHECK(s[3] == Complex(2.0));
    CHECK(f.a(9) == Complex{});
}
