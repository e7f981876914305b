#pragma once

#include "abeta/caratheodory.hpp"
#include "abeta/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace abeta {

/// f(z) = z + a_2 z^2 + ... + a_N z^N with Re(beta f(z)/z + (1-beta) f'(z)) > 0.
class AbetaFunction {
public:
    /// `a` holds (a_2, ..., a_N). Throws std::invalid_argument when beta is
    /// outside [0,1] or a coefficient is not finite.
    AbetaFunction(double beta, std::vector<Complex> a);

    double beta() const noexcept { return beta_; }

    /// Highest retained power N (1 when there are no higher coefficients).
    std::size_t order() const noexcept { return a_.size() + 1; }

    /// a_n for n >= 1 (a_1 = 1); zero past the order.
    Complex a(std::size_t n) const noexcept;

    std::span<const Complex> higher_coeffs() const noexcept { return a_; }

    TruncatedSeries series() const;

private:
    double beta_;
    std::vector<Complex> a_;
};

/// n - (n-1) beta, the factor linking a_n to c_{n-1}; >= 1 on [0,1].
inline double coefficient_divisor(std::size_t n, double beta) {
    const auto nd = static_cast<double>(n);
    return nd - (nd - 1.0) * beta;
}

/// a_n = c_{n-1} / (n - (n-1) beta), n = 2..N+1.
AbetaFunction from_caratheodory(double beta, const CaratheodoryTruncation& c);

// Named extremal functions. `n` is the order of the generator p, so the
// returned function carries a_2 .. a_{n+1}.

/// a_n = 2 / (n - (n-1) beta); generator (1+z)/(1-z).
AbetaFunction extremal_f1(double beta, std::size_t n);
/// Generator (1+z^2)/(1-z^2): a_3 = 2/(3-2 beta), even-power a_n vanish.
AbetaFunction extremal_f2(double beta, std::size_t n);
/// Generator (1+z^3)/(1-z^3): a_2 = a_3 = 0, a_4 = 2/(4-3 beta).
AbetaFunction extremal_f3(double beta, std::size_t n);
/// Generator (1 + q z + z^2)/(1 - z^2), q = (2-beta)/sqrt(3-2 beta); the
/// minimizer of |A_3| - |A_2|.
AbetaFunction extremal_diff_lower(double beta, std::size_t n);

CaratheodoryTruncation f1_generator(std::size_t n);
CaratheodoryTruncation f2_generator(std::size_t n);
CaratheodoryTruncation f3_generator(std::size_t n);
CaratheodoryTruncation diff_lower_generator(double beta, std::size_t n);

/// Minimum of Re(beta f(z)/z + (1-beta) f'(z)) over z = r e^{2 pi i k/angles}
/// for every r in `radii`, using the truncated series. Positive means no
/// sampled point contradicts membership. Radii must lie in (0,1).
double membership_margin(const AbetaFunction& f, std::span<const double> radii,
                         std::size_t angles);

void require_beta(double beta);

} // namespace abeta
