#pragma once

#include "abeta/series.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

namespace abeta {

// Closed forms for the low-order coefficient functionals of
// f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...
//
// They take raw coefficients so they serve any normalized f, not only
// members of A_beta.

struct LogCoeffs {
    Complex gamma1, gamma2, gamma3;
};

struct InverseCoeffs {
    Complex A2, A3, A4;
};

struct LogInverseCoeffs {
    Complex Gamma1, Gamma2, Gamma3;
};

/// |z| without the overflow guard of std::abs (hypot); much faster in the
/// search loops and exact enough for coefficient-sized values.
inline double modulus(Complex z) { return std::sqrt(std::norm(z)); }

/// log(f(z)/z) = 2 sum gamma_n z^n.
inline LogCoeffs log_coeffs(Complex a2, Complex a3, Complex a4) {
    return {0.5 * a2, 0.5 * (a3 - 0.5 * a2 * a2),
            0.5 * (a4 - a2 * a3 + a2 * a2 * a2 / 3.0)};
}

/// f^{-1}(w) = w + sum A_n w^n.
inline InverseCoeffs inverse_coeffs(Complex a2, Complex a3, Complex a4) {
    return {-a2, -a3 + 2.0 * a2 * a2, -a4 + 5.0 * a2 * a3 - 5.0 * a2 * a2 * a2};
}

/// log(f^{-1}(w)/w) = 2 sum Gamma_n w^n.
inline LogInverseCoeffs log_inverse_coeffs(Complex a2, Complex a3, Complex a4) {
    return {-0.5 * a2, -0.5 * (a3 - 1.5 * a2 * a2),
            -0.5 * (a4 - 4.0 * a2 * a3 + (10.0 / 3.0) * a2 * a2 * a2)};
}

// Series pipelines. These recompute the same quantities through the
// truncated series kernel and exist to cross-check the closed forms.

/// gamma_1 .. gamma_{N-1} from f of order N (f(0) = 0, f'(0) = 1).
std::vector<Complex> series_log_coeffs(const TruncatedSeries& f, std::size_t n);
/// A_2 .. A_N.
std::vector<Complex> series_inverse_coeffs(const TruncatedSeries& f, std::size_t n);
/// Gamma_1 .. Gamma_{N-1}.
std::vector<Complex> series_log_inverse_coeffs(const TruncatedSeries& f, std::size_t n);

class FeketeSzegoParams {
public:
    FeketeSzegoParams() = default;
    /// Throws std::invalid_argument when mu < 0.
    FeketeSzegoParams(Complex lambda, double mu);

    Complex lambda() const noexcept { return lambda_; }
    double mu() const noexcept { return mu_; }

private:
    Complex lambda_{0.0};
    double mu_{0.0};
};

/// |a3 - lambda a2^2| - mu |a2|.
inline double fekete_szego(Complex a2, Complex a3, const FeketeSzegoParams& p) {
    return modulus(a3 - p.lambda() * a2 * a2) - p.mu() * modulus(a2);
}

class PsiParams {
public:
    PsiParams() = default;
    /// Throws std::invalid_argument unless B1 > 0 and B3 is real.
    PsiParams(double b1, Complex b2, Complex b3);

    double b1() const noexcept { return b1_; }
    Complex b2() const noexcept { return b2_; }
    double b3() const noexcept { return b3_; }
    /// |4 B2 + 2 B3|.
    double b4() const noexcept { return std::abs(4.0 * b2_ + 2.0 * b3_); }

private:
    double b1_{1.0};
    Complex b2_{0.0};
    double b3_{0.0};
};

/// |B2 c1^2 + B3 c2| - |B1 c1|.
inline double psi_plus(Complex c1, Complex c2, const PsiParams& p) {
    return modulus(p.b2() * c1 * c1 + p.b3() * c2) - p.b1() * modulus(c1);
}

inline double psi_minus(Complex c1, Complex c2, const PsiParams& p) {
    return -psi_plus(c1, c2, p);
}

/// Level 1: |A2| - |A1| = |a2| - 1. Level 2: |A3| - |A2|.
/// Throws std::invalid_argument for any other level.
double succ_diff(int level, Complex a2, Complex a3);

enum class FunctionalId {
    Gamma1, Gamma2, Gamma3,            // |gamma_m|
    A2, A3, A4,                        // |A_n|
    LogInverse1, LogInverse2, LogInverse3, // |Gamma_n|
    Diff21, Diff32,
    FeketeSzego,
    PsiPlus, PsiMinus,
};

inline constexpr std::array kAllFunctionals = {
    FunctionalId::Gamma1, FunctionalId::Gamma2, FunctionalId::Gamma3,
    FunctionalId::A2, FunctionalId::A3, FunctionalId::A4,
    FunctionalId::LogInverse1, FunctionalId::LogInverse2, FunctionalId::LogInverse3,
    FunctionalId::Diff21, FunctionalId::Diff32, FunctionalId::FeketeSzego,
    FunctionalId::PsiPlus, FunctionalId::PsiMinus,
};

/// "gamma1", "A3", "Gamma2", "diff32", "fekete_szego", "psi_plus", ...
std::string_view to_string(FunctionalId id);
std::optional<FunctionalId> parse_functional(std::string_view name);

/// Psi functionals read (c1, c2); everything else reads (a2, a3, a4).
bool reads_caratheodory(FunctionalId id);

struct FunctionalParams {
    FeketeSzegoParams fekete_szego{};
    PsiParams psi{};
};

struct FunctionalValue {
    FunctionalId id;
    double value;                        // modulus for coefficient functionals
    std::optional<Complex> complex_value; // the signed coefficient, when there is one
    std::array<Complex, 3> inputs;       // (a2,a3,a4) or (c1,c2,c3)
};

FunctionalValue evaluate_functional(FunctionalId id, const std::array<Complex, 3>& inputs,
                                    const FunctionalParams& params = {});

/// Real objective value only; the hot path used by the search.
inline double functional_value(FunctionalId id, Complex x1, Complex x2, Complex x3,
                               const FunctionalParams& params) {
    switch (id) {
    case FunctionalId::Gamma1: return 0.5 * modulus(x1);
    case FunctionalId::Gamma2: return modulus(log_coeffs(x1, x2, x3).gamma2);
    case FunctionalId::Gamma3: return modulus(log_coeffs(x1, x2, x3).gamma3);
    case FunctionalId::A2: return modulus(x1);
    case FunctionalId::A3: return modulus(inverse_coeffs(x1, x2, x3).A3);
    case FunctionalId::A4: return modulus(inverse_coeffs(x1, x2, x3).A4);
    case FunctionalId::LogInverse1: return 0.5 * modulus(x1);
    case FunctionalId::LogInverse2: return modulus(log_inverse_coeffs(x1, x2, x3).Gamma2);
    case FunctionalId::LogInverse3: return modulus(log_inverse_coeffs(x1, x2, x3).Gamma3);
    case FunctionalId::Diff21: return modulus(x1) - 1.0;
    case FunctionalId::Diff32: return modulus(-x2 + 2.0 * x1 * x1) - modulus(x1);
    case FunctionalId::FeketeSzego: return fekete_szego(x1, x2, params.fekete_szego);
    case FunctionalId::PsiPlus: return psi_plus(x1, x2, params.psi);
    case FunctionalId::PsiMinus: return psi_minus(x1, x2, params.psi);
    }
    return 0.0;
}

} // namespace abeta
