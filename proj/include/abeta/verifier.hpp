#pragma once

#include "abeta/bounds.hpp"
#include "abeta/functionals.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abeta {

enum class Direction { Max, Min };
std::string_view to_string(Direction d);

struct SearchConfig {
    int grid_c1 = 41;   // points on [0, 2]
    int grid_disk = 41; // radii per disk (angles: grid_disk - 1)
    int refine_iters = 200;
    double tol_bound = 1e-9;
    double tol_sharp = 1e-3;
    double tol_sharp_unwitnessed = 5e-3; // sides with no named extremal
    double tol_witness = 1e-10;

    /// Throws std::invalid_argument on grid counts < 2, negative refinement
    /// or non-positive tolerances.
    void validate() const;
};

/// A point of the parameter box: c1 in [0,2], |x| <= 1, |zeta| <= 1.
struct SearchPoint {
    double c1 = 0.0;
    Complex x{};
    Complex zeta{};
};

struct ExtremalSearchResult {
    double optimum = 0.0;
    SearchPoint arg;
    std::size_t evaluations = 0;
    Direction direction = Direction::Max;
};

/// A functional pulled back to the coefficient body of the Caratheodory class
/// through a_n = c_{n-1} / (n - (n-1) beta). Psi functionals read c directly.
struct Objective {
    FunctionalId id = FunctionalId::Gamma1;
    double beta = 0.0;
    FunctionalParams params{};

    /// Real dimension of the searched box: 1 (c1), 3 (+x) or 5 (+zeta).
    int dimension() const;

    double at(Complex c1, Complex c2, Complex c3) const;
    double at(const SearchPoint& p) const;
};

/// Coarse grid over the box followed by a Nelder-Mead refinement from the
/// best cell. Deterministic for fixed inputs.
ExtremalSearchResult search_opt(const Objective& objective, Direction direction,
                                const SearchConfig& cfg = {});

/// Evaluates the objective at `samples` truncations generated from random
/// atomic measures (c1 of arbitrary phase) and returns the largest amount by
/// which any of them beats `optimum` in the given direction (<= 0 when none does).
double rotation_spot_check(const Objective& objective, double optimum, Direction direction,
                           int samples, std::uint64_t seed);

enum class TheoremId { Thm21, Thm22, Thm23, Thm31, Thm32, Thm41, Lemma21 };

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::Thm21, TheoremId::Thm22, TheoremId::Thm23, TheoremId::Thm31,
    TheoremId::Thm32, TheoremId::Thm41, TheoremId::Lemma21,
};

/// "thm2.1", ..., "thm4.1", "lemma2.1".
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

/// Whether the statement is indexed by beta (true for every theorem on A_beta).
bool depends_on_beta(TheoremId id);

/// Parts of a theorem: m = 1,2,3 for thm2.1; n = 2,3 for thm2.2; n = 1,2 for
/// thm2.3; a single part 0 otherwise.
std::vector<int> theorem_parts(TheoremId id);

struct TheoremParams {
    double beta = 0.0;
    int part = 0;
    FeketeSzegoParams fekete_szego{};
    PsiParams psi{};
};

struct VerificationReport {
    TheoremId theorem = TheoremId::Thm21;
    FunctionalId functional = FunctionalId::Gamma1;
    TheoremParams params;
    BoundResult bound;
    std::optional<ExtremalSearchResult> oracle_max;
    std::optional<ExtremalSearchResult> oracle_min;
    std::optional<double> witness_upper;
    std::optional<double> witness_lower;
    std::string witness_upper_name;
    std::string witness_lower_name;
    bool no_violation = false;
    bool sharp = false;
    std::optional<bool> witness_attains; // empty when no side has a witness

    bool pass() const { return no_violation && sharp && witness_attains.value_or(true); }
};

/// Checks one part of a theorem: the bound holds over the searched body, the
/// search optimum reaches it, and the named extremal attains it.
VerificationReport verify_theorem(TheoremId id, const TheoremParams& params,
                                  const SearchConfig& cfg = {});

/// Both Psi bounds; the lower side of the report is -(bound on Psi-), i.e. a
/// lower bound on Psi+.
VerificationReport verify_lemma21(const PsiParams& p, const SearchConfig& cfg = {});

struct BoundaryCheck {
    std::string label;
    double location = 0.0;
    double left = 0.0;
    double right = 0.0;
    double gap() const;
};

struct ContinuityReport {
    std::string target;
    std::vector<BoundaryCheck> checks;
    double tol = 1e-12;
    bool pass() const;
};

/// Evaluates adjacent branch formulas at every case boundary of "thm3.2",
/// "thm4.1", "lemma2.1" or "lemma2.2". Throws std::invalid_argument otherwise.
ContinuityReport verify_branch_continuity(std::string_view target);

} // namespace abeta
