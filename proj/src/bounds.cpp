#include "abeta/bounds.hpp"

#include "abeta/abeta_function.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef ABETA_TESTING_HOOKS
#include <map>
#endif

namespace abeta {

namespace {

#ifdef ABETA_TESTING_HOOKS
std::map<std::string, double, std::less<>>& perturbations() {
    static std::map<std::string, double, std::less<>> table;
    return table;
}

double adjust(std::string_view name, double value) {
    const auto& table = perturbations();
    const auto it = table.find(name);
    return it == table.end() ? value : value + it->second;
}
#else
constexpr double adjust(std::string_view, double value) { return value; }
#endif

constexpr double kOverlapTol = 1e-12;

} // namespace

#ifdef ABETA_TESTING_HOOKS
namespace testing {
void set_bound_perturbation(std::string_view name, double delta) {
    if (std::find(kBoundNames.begin(), kBoundNames.end(), name) == kBoundNames.end())
        throw std::invalid_argument("unknown bound name");
    perturbations()[std::string(name)] = delta;
}
void clear_bound_perturbations() { perturbations().clear(); }
} // namespace testing
#endif

namespace branch {

double diff32_upper_flat(double beta) { return 2.0 / (3.0 - 2.0 * beta); }

double diff32_upper_dominant(double beta) {
    const double d = 2.0 - beta;
    return (4.0 + 6.0 * beta - 6.0 * beta * beta) / (d * d * (3.0 - 2.0 * beta));
}

double psi_plus_dominant(const PsiParams& p) { return p.b4() - 2.0 * p.b1(); }
double psi_plus_flat(const PsiParams& p) { return 2.0 * std::abs(p.b3()); }

double psi_minus_i(const PsiParams& p) { return 2.0 * p.b1() - p.b4(); }

double psi_minus_ii(const PsiParams& p) {
    const double s = p.b4() + 2.0 * std::abs(p.b3());
    return 2.0 * p.b1() * std::sqrt(2.0 * std::abs(p.b3()) / s);
}

double psi_minus_iii(const PsiParams& p) {
    const double s = p.b4() + 2.0 * std::abs(p.b3());
    return 2.0 * std::abs(p.b3()) + p.b1() * p.b1() / s;
}

double fs_upper_dominant(double t, double mu) { return (t - 3.0 * mu) / 3.0; }
double fs_upper_flat(double, double) { return 2.0 / 3.0; }
double fs_lower_i(double t, double mu) { return -(3.0 * mu - t) / 3.0; }
double fs_lower_ii(double t, double mu) { return -mu * std::sqrt(2.0 / (t + 2.0)); }
double fs_lower_iii(double t, double mu) { return -(8.0 + 9.0 * mu * mu / (t + 2.0)) / 12.0; }

double ma_minda_negative(double v) { return -4.0 * v + 2.0; }
double ma_minda_middle(double) { return 2.0; }
double ma_minda_large(double v) { return 4.0 * v - 2.0; }

} // namespace branch

BoundResult bound_psi_plus(const PsiParams& p) {
    BoundResult r;
    if (std::abs(2.0 * p.b2() + p.b3()) >= std::abs(p.b3()) + p.b1()) {
        r.upper = branch::psi_plus_dominant(p);
        r.upper_region = "dominant";
    } else {
        r.upper = branch::psi_plus_flat(p);
        r.upper_region = "flat";
    }
    r.upper = adjust("psi_plus", *r.upper);
    return r;
}

BoundResult bound_psi_minus(const PsiParams& p) {
    const double b1 = p.b1();
    const double b3 = std::abs(p.b3());
    const double s = p.b4() + 2.0 * b3;
    BoundResult r;
    if (b1 >= s) {
        r.upper = branch::psi_minus_i(p);
        r.upper_region = "i";
    } else if (b1 * b1 <= 2.0 * b3 * s) {
        r.upper = branch::psi_minus_ii(p);
        r.upper_region = "ii";
    } else {
        r.upper = branch::psi_minus_iii(p);
        r.upper_region = "iii";
    }
    r.upper = adjust("psi_minus", *r.upper);
    return r;
}

double bound_ma_minda(double v) {
    if (v < 0.0) return branch::ma_minda_negative(v);
    if (v <= 1.0) return branch::ma_minda_middle(v);
    return branch::ma_minda_large(v);
}

std::string_view ma_minda_region(double v) {
    if (v < 0.0) return "v<0";
    if (v <= 1.0) return "0<=v<=1";
    return "v>1";
}

bool check_ali(double b, double d) {
    return b >= 0.0 && b <= 1.0 && b * (2.0 * b - 1.0) <= d && d <= b;
}

double bound_gamma(int m, double beta) {
    require_beta(beta);
    if (m < 1 || m > 3) throw std::invalid_argument("bound_gamma: m must be 1, 2 or 3");
    static constexpr std::array<std::string_view, 3> names = {"gamma1", "gamma2", "gamma3"};
    return adjust(names[static_cast<std::size_t>(m - 1)], 1.0 / ((m + 1) - m * beta));
}

InverseBounds bound_inverse(double beta) {
    require_beta(beta);
    const double d = 2.0 - beta;
    return {adjust("A2", 2.0 / d),
            adjust("A3", 2.0 * (8.0 - 4.0 * beta - beta * beta) / (d * d * (3.0 - 2.0 * beta)))};
}

LogInverseBounds bound_log_inverse(double beta) {
    require_beta(beta);
    const double d = 2.0 - beta;
    return {adjust("Gamma1", 1.0 / d),
            adjust("Gamma2", (5.0 - 2.0 * beta - beta * beta) / (d * d * (3.0 - 2.0 * beta)))};
}

BoundResult bound_diff21(double beta) {
    require_beta(beta);
    BoundResult r;
    r.lower = adjust("diff21_lower", -1.0);
    r.upper = adjust("diff21_upper", beta / (2.0 - beta));
    r.lower_region = "uniform";
    r.upper_region = "uniform";
    return r;
}

BoundResult bound_diff32(double beta) {
    require_beta(beta);
    BoundResult r;
    r.lower = adjust("diff32_lower", -1.0 / std::sqrt(3.0 - 2.0 * beta));
    r.lower_region = "uniform";
    if (beta < diff32_threshold()) {
        r.upper = branch::diff32_upper_flat(beta);
        r.upper_region = "flat";
    } else {
        r.upper = branch::diff32_upper_dominant(beta);
        r.upper_region = "dominant";
    }
    r.upper = adjust("diff32_upper", *r.upper);
    return r;
}

BoundResult bound_fekete_szego(const FeketeSzegoParams& p) {
    const double t = std::abs(2.0 - 3.0 * p.lambda());
    const double mu = p.mu();
    BoundResult r;

    if (t >= 2.0 + 3.0 * mu) {
        r.upper = branch::fs_upper_dominant(t, mu);
        r.upper_region = "dominant";
    } else {
        r.upper = branch::fs_upper_flat(t, mu);
        r.upper_region = "flat";
    }

    const bool in_i = t <= (3.0 * mu - 4.0) / 2.0;
    const bool in_ii = t >= (9.0 * mu * mu - 16.0) / 8.0;
    if (in_i) {
        r.lower = branch::fs_lower_i(t, mu);
        r.lower_region = "i";
        if (in_ii && std::abs(*r.lower - branch::fs_lower_ii(t, mu)) > kOverlapTol)
            throw std::logic_error("Fekete-Szego lower branches i and ii disagree on overlap");
    } else if (in_ii) {
        r.lower = branch::fs_lower_ii(t, mu);
        r.lower_region = "ii";
    } else {
        r.lower = branch::fs_lower_iii(t, mu);
        r.lower_region = "iii";
    }

    r.upper = adjust("fs_upper", *r.upper);
    r.lower = adjust("fs_lower", *r.lower);
    return r;
}

double loewner_K(unsigned n) {
    if (n == 0) throw std::invalid_argument("loewner_K: n must be positive");
    // Catalan recurrence C_{k+1} = C_k * 2(2k+1) / (k+2).
    double c = 1.0;
    for (unsigned k = 0; k < n; ++k) c = c * 2.0 * (2.0 * k + 1.0) / (k + 2.0);
    return c;
}

} // namespace abeta
