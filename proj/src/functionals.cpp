#include "abeta/functionals.hpp"

#include <stdexcept>

namespace abeta {

namespace {

void require_normalized(const TruncatedSeries& f, std::size_t n) {
    if (n < 2) throw std::invalid_argument("series pipeline needs order >= 2");
    if (std::abs(f[0]) > 1e-12 || std::abs(f[1] - Complex(1.0)) > 1e-12)
        throw std::invalid_argument("series pipeline needs f(0) = 0 and f'(0) = 1");
}

// Half the coefficients 1..n-1 of log(g(z)/z) for g = z + ... of order n.
std::vector<Complex> halved_log_over_z(const TruncatedSeries& g, std::size_t n) {
    std::vector<Complex> shifted(n);
    for (std::size_t k = 0; k < n; ++k) shifted[k] = g[k + 1];
    const TruncatedSeries log = log_unit(TruncatedSeries(std::move(shifted)), n - 1);
    std::vector<Complex> out(n - 1);
    for (std::size_t k = 1; k < n; ++k) out[k - 1] = 0.5 * log[k];
    return out;
}

} // namespace

std::vector<Complex> series_log_coeffs(const TruncatedSeries& f, std::size_t n) {
    require_normalized(f, n);
    return halved_log_over_z(f, n);
}

std::vector<Complex> series_inverse_coeffs(const TruncatedSeries& f, std::size_t n) {
    require_normalized(f, n);
    const TruncatedSeries F = revert(f, n);
    return {F.coeffs().begin() + 2, F.coeffs().end()};
}

std::vector<Complex> series_log_inverse_coeffs(const TruncatedSeries& f, std::size_t n) {
    require_normalized(f, n);
    return halved_log_over_z(revert(f, n), n);
}

FeketeSzegoParams::FeketeSzegoParams(Complex lambda, double mu) : lambda_(lambda), mu_(mu) {
    if (!(mu >= 0.0)) throw std::invalid_argument("Fekete-Szego: mu must be >= 0");
}

PsiParams::PsiParams(double b1, Complex b2, Complex b3) : b1_(b1), b2_(b2), b3_(b3.real()) {
    if (!(b1 > 0.0)) throw std::invalid_argument("Psi: B1 must be > 0");
    if (b3.imag() != 0.0) throw std::invalid_argument("Psi: B3 must be real");
}

double succ_diff(int level, Complex a2, Complex a3) {
    switch (level) {
    case 1: return functional_value(FunctionalId::Diff21, a2, a3, 0.0, {});
    case 2: return functional_value(FunctionalId::Diff32, a2, a3, 0.0, {});
    default: throw std::invalid_argument("succ_diff: level must be 1 or 2");
    }
}

std::string_view to_string(FunctionalId id) {
    switch (id) {
    case FunctionalId::Gamma1: return "gamma1";
    case FunctionalId::Gamma2: return "gamma2";
    case FunctionalId::Gamma3: return "gamma3";
    case FunctionalId::A2: return "A2";
    case FunctionalId::A3: return "A3";
    case FunctionalId::A4: return "A4";
    case FunctionalId::LogInverse1: return "Gamma1";
    case FunctionalId::LogInverse2: return "Gamma2";
    case FunctionalId::LogInverse3: return "Gamma3";
    case FunctionalId::Diff21: return "diff21";
    case FunctionalId::Diff32: return "diff32";
    case FunctionalId::FeketeSzego: return "fekete_szego";
    case FunctionalId::PsiPlus: return "psi_plus";
    case FunctionalId::PsiMinus: return "psi_minus";
    }
    return "unknown";
}

std::optional<FunctionalId> parse_functional(std::string_view name) {
    for (auto id : kAllFunctionals)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

bool reads_caratheodory(FunctionalId id) {
    return id == FunctionalId::PsiPlus || id == FunctionalId::PsiMinus;
}

FunctionalValue evaluate_functional(FunctionalId id, const std::array<Complex, 3>& in,
                                    const FunctionalParams& params) {
    FunctionalValue out{id, functional_value(id, in[0], in[1], in[2], params), std::nullopt, in};
    const auto g = log_coeffs(in[0], in[1], in[2]);
    const auto A = inverse_coeffs(in[0], in[1], in[2]);
    const auto G = log_inverse_coeffs(in[0], in[1], in[2]);
    switch (id) {
    case FunctionalId::Gamma1: out.complex_value = g.gamma1; break;
    case FunctionalId::Gamma2: out.complex_value = g.gamma2; break;
    case FunctionalId::Gamma3: out.complex_value = g.gamma3; break;
    case FunctionalId::A2: out.complex_value = A.A2; break;
    case FunctionalId::A3: out.complex_value = A.A3; break;
    case FunctionalId::A4: out.complex_value = A.A4; break;
    case FunctionalId::LogInverse1: out.complex_value = G.Gamma1; break;
    case FunctionalId::LogInverse2: out.complex_value = G.Gamma2; break;
    case FunctionalId::LogInverse3: out.complex_value = G.Gamma3; break;
    default: break;
    }
    return out;
}

} // namespace abeta
