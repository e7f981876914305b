#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace abeta {

using Complex = std::complex<double>;

/// Power series truncated at z^N, stored as N+1 complex coefficients.
///
/// Operations below treat a series of lower order as a polynomial, i.e. the
/// coefficients past its order are taken to be zero.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// Takes ownership of `coeffs` (index k is the coefficient of z^k).
    /// Throws std::invalid_argument when empty or when an entry is not finite.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries identity(std::size_t order);
    static TruncatedSeries constant(Complex value, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^k; zero past the truncation order.
    Complex operator[](std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }

    /// Copy truncated (or zero-padded) to order n.
    TruncatedSeries resized(std::size_t n) const;

    TruncatedSeries derivative() const;

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex s, const TruncatedSeries& a);

/// Largest |a_k - b_k| over the longer of the two orders.
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at order n.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n);

/// a / b truncated at order n. Requires b(0) != 0.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n);

/// outer(inner(z)) truncated at order n, by Horner's scheme in powers of inner.
/// Requires |inner(0)| <= 1e-12 (the constant term is then treated as zero).
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner,
                        std::size_t n);

/// Formal logarithm of a series with unit constant term: L' = s'/s, L(0) = 0.
TruncatedSeries log_unit(const TruncatedSeries& s, std::size_t n);

/// Compositional inverse F of f = z + ..., so that f(F(w)) = w to order n.
/// Newton iteration F <- F - (f(F) - w) / f'(F).
TruncatedSeries revert(const TruncatedSeries& f, std::size_t n);

/// Gauss hypergeometric series 2F1(a, b; c; z) to order n, built from the
/// term ratio (a+k)(b+k) / ((c+k)(k+1)). Terminates (zero tail) when a or b
/// is a nonpositive integer. Throws std::domain_error when c is a nonpositive
/// integer -k and neither a nor b terminates the series at or before k.
TruncatedSeries hypergeom_2f1(Complex a, Complex b, Complex c, std::size_t n);

} // namespace abeta
