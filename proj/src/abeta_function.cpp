#include "abeta/abeta_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace abeta {

void require_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
}

AbetaFunction::AbetaFunction(double beta, std::vector<Complex> a)
    : beta_(beta), a_(std::move(a)) {
    require_beta(beta_);
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("AbetaFunction: non-finite coefficient");
}

Complex AbetaFunction::a(std::size_t n) const noexcept {
    if (n == 1) return 1.0;
    if (n < 2 || n - 2 >= a_.size()) return {};
    return a_[n - 2];
}

TruncatedSeries AbetaFunction::series() const {
    std::vector<Complex> s(order() + 1);
    for (std::size_t n = 1; n <= order(); ++n) s[n] = a(n);
    return TruncatedSeries(std::move(s));
}

AbetaFunction from_caratheodory(double beta, const CaratheodoryTruncation& c) {
    require_beta(beta);
    std::vector<Complex> a(c.size());
    for (std::size_t n = 2; n <= c.size() + 1; ++n)
        a[n - 2] = c.c(n - 1) / coefficient_divisor(n, beta);
    return AbetaFunction(beta, std::move(a));
}

namespace {

// c_k = 2 when period divides k, else 0.
CaratheodoryTruncation periodic_generator(std::size_t period, std::size_t n) {
    std::vector<Complex> c(n);
    for (std::size_t k = period; k <= n; k += period) c[k - 1] = 2.0;
    return CaratheodoryTruncation(std::move(c));
}

} // namespace

CaratheodoryTruncation f1_generator(std::size_t n) { return periodic_generator(1, n); }
CaratheodoryTruncation f2_generator(std::size_t n) { return periodic_generator(2, n); }
CaratheodoryTruncation f3_generator(std::size_t n) { return periodic_generator(3, n); }

CaratheodoryTruncation diff_lower_generator(double beta, std::size_t n) {
    require_beta(beta);
    const double q = (2.0 - beta) / std::sqrt(3.0 - 2.0 * beta);
    std::vector<Complex> c(n);
    for (std::size_t k = 1; k <= n; ++k) c[k - 1] = (k % 2 == 1) ? q : 2.0;
    return CaratheodoryTruncation(std::move(c));
}

AbetaFunction extremal_f1(double beta, std::size_t n) {
    require_beta(beta);
    std::vector<Complex> a(n);
    for (std::size_t k = 2; k <= n + 1; ++k) a[k - 2] = 2.0 / coefficient_divisor(k, beta);
    return AbetaFunction(beta, std::move(a));
}

AbetaFunction extremal_f2(double beta, std::size_t n) {
    return from_caratheodory(beta, f2_generator(n));
}

AbetaFunction extremal_f3(double beta, std::size_t n) {
    return from_caratheodory(beta, f3_generator(n));
}

AbetaFunction extremal_diff_lower(double beta, std::size_t n) {
    return from_caratheodory(beta, diff_lower_generator(beta, n));
}

double membership_margin(const AbetaFunction& f, std::span<const double> radii,
                         std::size_t angles) {
    if (angles == 0 || radii.empty())
        throw std::invalid_argument("membership_margin: empty sample grid");
    for (double r : radii)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("membership_margin: radii must lie in (0, 1)");

    // beta f/z + (1-beta) f' = 1 + sum_{n>=2} (n - (n-1) beta) a_n z^{n-1}
    const double beta = f.beta();
    double margin = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        for (std::size_t j = 0; j < angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(angles);
            const Complex z = std::polar(r, theta);
            Complex value = 0.0;
            for (std::size_t n = f.order(); n >= 2; --n)
                value = value * z + coefficient_divisor(n, beta) * f.a(n);
            value = 1.0 + value * z;
            margin = std::min(margin, value.real());
        }
    }
    return margin;
}

} // namespace abeta
