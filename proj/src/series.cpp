#include "abeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace abeta {

namespace {

constexpr double kUnitTol = 1e-12;

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// -k when z is the nonpositive integer -k.
std::optional<long> nonpositive_integer(Complex z) {
    if (z.imag() != 0.0 || z.real() > 0.0) return std::nullopt;
    const double r = std::round(z.real());
    if (std::abs(z.real() - r) > 1e-14) return std::nullopt;
    return static_cast<long>(-r);
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    if (!std::all_of(coeffs_.begin(), coeffs_.end(), is_finite))
        throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    TruncatedSeries s(std::max<std::size_t>(order, 1));
    s.coeffs_[1] = 1.0;
    return s;
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::resized(std::size_t n) const {
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = (*this)[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::derivative() const {
    const std::size_t n = order() == 0 ? 0 : order() - 1;
    std::vector<Complex> d(n + 1);
    for (std::size_t k = 1; k <= order(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return TruncatedSeries(std::move(d));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::max(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + Complex(-1.0) * b;
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : c) v *= s;
    return TruncatedSeries(std::move(c));
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    double m = 0.0;
    for (std::size_t k = 0; k <= std::max(a.order(), b.order()); ++k)
        m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n) {
    std::vector<Complex> c(n + 1);
    const std::size_t na = std::min(a.order(), n);
    for (std::size_t i = 0; i <= na; ++i) {
        if (a[i] == Complex{}) continue;
        const std::size_t nb = std::min(b.order(), n - i);
        for (std::size_t j = 0; j <= nb; ++j) c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n) {
    if (b[0] == Complex{}) throw std::invalid_argument("div: divisor has zero constant term");
    std::vector<Complex> q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex acc = a[k];
        for (std::size_t j = 1; j <= std::min(k, b.order()); ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner,
                        std::size_t n) {
    if (std::abs(inner[0]) > kUnitTol)
        throw std::invalid_argument("compose: inner series must have zero constant term");
    std::vector<Complex> ic(inner.coeffs().begin(), inner.coeffs().end());
    ic[0] = 0.0;
    const TruncatedSeries in(std::move(ic));

    // Powers of `in` beyond z^n vanish after truncation, so only outer[0..n] matter.
    const std::size_t top = std::min(outer.order(), n);
    TruncatedSeries acc = TruncatedSeries::constant(outer[top], n);
    for (std::size_t k = top; k-- > 0;) {
        acc = mul(acc, in, n);
        acc = acc + TruncatedSeries::constant(outer[k], n);
    }
    return acc;
}

TruncatedSeries log_unit(const TruncatedSeries& s, std::size_t n) {
    if (std::abs(s[0] - Complex(1.0)) > kUnitTol)
        throw std::invalid_argument("log_unit: constant term must equal 1");
    std::vector<Complex> l(n + 1);
    if (n == 0) return TruncatedSeries(std::move(l));
    const TruncatedSeries q = div(s.derivative(), s, n - 1);
    for (std::size_t k = 1; k <= n; ++k) l[k] = q[k - 1] / static_cast<double>(k);
    return TruncatedSeries(std::move(l));
}

TruncatedSeries revert(const TruncatedSeries& f, std::size_t n) {
    if (std::abs(f[0]) > kUnitTol || std::abs(f[1] - Complex(1.0)) > kUnitTol)
        throw std::invalid_argument("revert: series must be z + O(z^2)");
    const TruncatedSeries w = TruncatedSeries::identity(n).resized(n);
    if (n <= 1) return w;
    const TruncatedSeries df = f.derivative();

    // Each step doubles the number of correct coefficients; two extra sweeps
    // polish rounding.
    TruncatedSeries F = w;
    std::size_t correct = 1;
    int sweeps = 2;
    while (correct < n || sweeps-- > 0) {
        const TruncatedSeries residual = compose(f, F, n) - w;
        const TruncatedSeries slope = compose(df, F, n);
        F = F - div(residual, slope, n);
        correct *= 2;
    }
    return F;
}

TruncatedSeries hypergeom_2f1(Complex a, Complex b, Complex c, std::size_t n) {
    const auto ka = nonpositive_integer(a);
    const auto kb = nonpositive_integer(b);
    if (const auto kc = nonpositive_integer(c)) {
        const bool terminates = (ka && *ka <= *kc) || (kb && *kb <= *kc);
        if (!terminates)
            throw std::domain_error("hypergeom_2f1: c is a nonpositive integer");
    }

    std::vector<Complex> t(n + 1);
    t[0] = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const Complex num = (a + kd) * (b + kd);
        if (t[k] == Complex{} || num == Complex{}) break; // polynomial: tail stays zero
        t[k + 1] = t[k] * num / ((c + kd) * (kd + 1.0));
    }
    return TruncatedSeries(std::move(t));
}

} // namespace abeta
