#include "abeta/caratheodory.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace abeta {

namespace {

constexpr double kAtomTol = 1e-12;
constexpr double kBoxTol = 1e-12;

void check_box(double c1, Complex x) {
    if (!(c1 >= 0.0 && c1 <= 2.0)) throw std::domain_error("c1 must lie in [0, 2]");
    if (!(std::abs(x) <= 1.0 + kBoxTol)) throw std::domain_error("|x| must be <= 1");
}

} // namespace

CaratheodoryTruncation::CaratheodoryTruncation(std::vector<Complex> c) : c_(std::move(c)) {
    for (const auto& v : c_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("CaratheodoryTruncation: non-finite coefficient");
}

TruncatedSeries CaratheodoryTruncation::generator() const {
    std::vector<Complex> s(c_.size() + 1);
    s[0] = 1.0;
    std::copy(c_.begin(), c_.end(), s.begin() + 1);
    return TruncatedSeries(std::move(s));
}

HerglotzAtoms::HerglotzAtoms(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("HerglotzAtoms: no atoms");
    double total = 0.0;
    for (const auto& a : atoms_) {
        if (std::abs(std::abs(a.point) - 1.0) > kAtomTol)
            throw std::invalid_argument("HerglotzAtoms: atom off the unit circle");
        if (!(a.weight >= 0.0)) throw std::invalid_argument("HerglotzAtoms: negative weight");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > kAtomTol)
        throw std::invalid_argument("HerglotzAtoms: weights must sum to 1");
}

CaratheodoryTruncation atoms_to_coeffs(const HerglotzAtoms& atoms, std::size_t n) {
    std::vector<Complex> c(n);
    for (const auto& a : atoms.atoms()) {
        Complex power = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            power *= a.point;
            c[k] += 2.0 * a.weight * power;
        }
    }
    return CaratheodoryTruncation(std::move(c));
}

double min_toeplitz_eigenvalue(const CaratheodoryTruncation& c) {
    const auto dim = static_cast<Eigen::Index>(c.size() + 1);
    Eigen::MatrixXcd t(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        t(j, j) = 2.0;
        for (Eigen::Index k = j + 1; k < dim; ++k) {
            const Complex v = c.c(static_cast<std::size_t>(k - j));
            t(j, k) = v;
            t(k, j) = std::conj(v);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(t, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool is_valid_truncation(const CaratheodoryTruncation& c, double tol) {
    return min_toeplitz_eigenvalue(c) >= -tol;
}

Complex lz_c2(double c1, Complex x) {
    check_box(c1, x);
    return 0.5 * (c1 * c1 + x * (4.0 - c1 * c1));
}

AffineInZeta lz_c3_affine(double c1, Complex x) {
    check_box(c1, x);
    const double s = 4.0 - c1 * c1;
    const Complex offset = 0.25 * (c1 * c1 * c1 + 2.0 * s * c1 * x - c1 * s * x * x);
    const double slope = 0.5 * s * std::max(0.0, 1.0 - std::norm(x));
    return {offset, slope};
}

Complex lz_c3(double c1, Complex x, Complex zeta) {
    if (!(std::abs(zeta) <= 1.0 + kBoxTol)) throw std::domain_error("|zeta| must be <= 1");
    const auto [offset, slope] = lz_c3_affine(c1, x);
    return offset + slope * zeta;
}

} // namespace abeta
