#pragma once

#include "abeta/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace abeta {

/// Coefficients (c_1, ..., c_N) of p(z) = 1 + sum c_n z^n, claimed to extend
/// to a function with positive real part. The claim is checked by
/// is_valid_truncation, not at construction.
class CaratheodoryTruncation {
public:
    explicit CaratheodoryTruncation(std::vector<Complex> c);

    std::size_t size() const noexcept { return c_.size(); }
    std::span<const Complex> coeffs() const noexcept { return c_; }

    /// c_k for 1 <= k <= N, zero past N.
    Complex c(std::size_t k) const noexcept { return k >= 1 && k <= c_.size() ? c_[k - 1] : Complex{}; }

    /// 1 + c_1 z + ... + c_N z^N.
    TruncatedSeries generator() const;

private:
    std::vector<Complex> c_;
};

struct HerglotzAtom {
    Complex point;  // on the unit circle
    double weight;  // nonnegative
};

/// Probability measure with finitely many atoms on the unit circle.
class HerglotzAtoms {
public:
    /// Throws std::invalid_argument unless every |point| = 1 and the weights
    /// are nonnegative and sum to 1 (tolerance 1e-12).
    explicit HerglotzAtoms(std::vector<HerglotzAtom> atoms);

    std::span<const HerglotzAtom> atoms() const noexcept { return atoms_; }

private:
    std::vector<HerglotzAtom> atoms_;
};

/// c_n = 2 sum_k w_k x_k^n, n = 1..N.
CaratheodoryTruncation atoms_to_coeffs(const HerglotzAtoms& atoms, std::size_t n);

/// Smallest eigenvalue of the (N+1)x(N+1) Hermitian Toeplitz matrix with 2 on
/// the diagonal and c_{k-j} above it.
double min_toeplitz_eigenvalue(const CaratheodoryTruncation& c);

inline constexpr double kDefaultValidityTol = 1e-9;

bool is_valid_truncation(const CaratheodoryTruncation& c, double tol = kDefaultValidityTol);

// Coefficient-body parameterization for real c1 in [0,2], |x| <= 1, |zeta| <= 1:
//   2 c2 = c1^2 + x (4 - c1^2)
//   4 c3 = c1^3 + 2 (4 - c1^2) c1 x - c1 (4 - c1^2) x^2 + 2 (4 - c1^2)(1 - |x|^2) zeta
// All throw std::domain_error outside that box.

Complex lz_c2(double c1, Complex x);
Complex lz_c3(double c1, Complex x, Complex zeta);

/// c3 = offset + slope * zeta for fixed (c1, x).
struct AffineInZeta {
    Complex offset;
    double slope;
};
AffineInZeta lz_c3_affine(double c1, Complex x);

} // namespace abeta
