#pragma once

#include "abeta/functionals.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace abeta {

/// A one- or two-sided bound with the label of the active piecewise branch on
/// each side. A side that the result does not speak to is left empty.
struct BoundResult {
    std::optional<double> lower;
    std::optional<double> upper;
    std::string lower_region;
    std::string upper_region;
};

/// Where the two upper-bound formulas for |A3| - |A2| meet: the smaller root
/// of 4 beta^2 - 7 beta + 2, i.e. (7 - sqrt 17) / 8.
inline double diff32_threshold() { return (7.0 - std::sqrt(17.0)) / 8.0; }

// Upper bound on Psi+ over the Caratheodory class: "dominant" when
// |2B2 + B3| >= |B3| + B1, else "flat".
BoundResult bound_psi_plus(const PsiParams& p);

// Upper bound on Psi- = -Psi+: branches "i", "ii", "iii" tested in that order.
BoundResult bound_psi_minus(const PsiParams& p);

/// Sharp bound on |c2 - v c1^2|.
double bound_ma_minda(double v);
std::string_view ma_minda_region(double v);

/// Whether |c3 - 2B c1 c2 + D c1^3| <= 2 applies: 0 <= B <= 1 and
/// B(2B - 1) <= D <= B.
bool check_ali(double b, double d);

/// |gamma_m| <= 1 / ((m+1) - m beta), m = 1, 2, 3.
double bound_gamma(int m, double beta);

struct InverseBounds {
    double A2;
    double A3;
};
InverseBounds bound_inverse(double beta);

struct LogInverseBounds {
    double Gamma1;
    double Gamma2;
};
LogInverseBounds bound_log_inverse(double beta);

/// -1 <= |A2| - |A1| <= beta / (2 - beta).
BoundResult bound_diff21(double beta);

/// -1/sqrt(3 - 2 beta) <= |A3| - |A2| <= piecewise upper.
BoundResult bound_diff32(double beta);

/// Bounds of |a3 - lambda a2^2| - mu |a2| over the bounded-turning class.
/// Throws std::logic_error if two lower-bound branches apply at once and disagree.
BoundResult bound_fekete_szego(const FeketeSzegoParams& p);

/// (2n)! / (n! (n+1)!).
double loewner_K(unsigned n);

// Individual branch formulas, exposed for continuity audits.
namespace branch {

double diff32_upper_flat(double beta);     // 2 / (3 - 2 beta)
double diff32_upper_dominant(double beta); // (4 + 6b - 6b^2) / ((2-b)^2 (3-2b))

double psi_plus_dominant(const PsiParams& p);
double psi_plus_flat(const PsiParams& p);
double psi_minus_i(const PsiParams& p);
double psi_minus_ii(const PsiParams& p);
double psi_minus_iii(const PsiParams& p);

// t = |2 - 3 lambda|.
double fs_upper_dominant(double t, double mu);
double fs_upper_flat(double t, double mu);
double fs_lower_i(double t, double mu);
double fs_lower_ii(double t, double mu);
double fs_lower_iii(double t, double mu);

double ma_minda_negative(double v);
double ma_minda_middle(double v);
double ma_minda_large(double v);

} // namespace branch

/// Names of the bound quantities, in a fixed order.
inline constexpr std::array<std::string_view, 15> kBoundNames = {
    "gamma1", "gamma2", "gamma3", "A2", "A3", "Gamma1", "Gamma2",
    "diff21_lower", "diff21_upper", "diff32_lower", "diff32_upper",
    "fs_upper", "fs_lower", "psi_plus", "psi_minus",
};

#ifdef ABETA_TESTING_HOOKS
// Test builds only: add `delta` to every value the named bound returns.
namespace testing {
void set_bound_perturbation(std::string_view name, double delta);
void clear_bound_perturbations();
} // namespace testing
#endif

} // namespace abeta
