#include "abeta/verifier.hpp"

#include "abeta/abeta_function.hpp"
#include "abeta/caratheodory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

namespace abeta {

std::string_view to_string(Direction d) { return d == Direction::Max ? "max" : "min"; }

void SearchConfig::validate() const {
    if (grid_c1 < 2 || grid_disk < 2) throw std::invalid_argument("grid counts must be >= 2");
    if (refine_iters < 0) throw std::invalid_argument("refine_iters must be >= 0");
    if (!(tol_bound > 0.0 && tol_sharp > 0.0 && tol_sharp_unwitnessed > 0.0 && tol_witness > 0.0))
        throw std::invalid_argument("tolerances must be positive");
}

int Objective::dimension() const {
    switch (id) {
    case FunctionalId::Gamma1:
    case FunctionalId::A2:
    case FunctionalId::LogInverse1:
    case FunctionalId::Diff21: return 1;
    case FunctionalId::Gamma3:
    case FunctionalId::A4:
    case FunctionalId::LogInverse3: return 5;
    default: return 3;
    }
}

namespace {

// Multipliers taking (c1, c2, c3) to the functional's inputs.
std::array<double, 3> input_scale(const Objective& obj) {
    if (reads_caratheodory(obj.id)) return {1.0, 1.0, 1.0};
    return {1.0 / coefficient_divisor(2, obj.beta), 1.0 / coefficient_divisor(3, obj.beta),
            1.0 / coefficient_divisor(4, obj.beta)};
}

} // namespace

double Objective::at(Complex c1, Complex c2, Complex c3) const {
    const auto s = input_scale(*this);
    return functional_value(id, s[0] * c1, s[1] * c2, s[2] * c3, params);
}

double Objective::at(const SearchPoint& p) const {
    return at(p.c1, lz_c2(p.c1, p.x), lz_c3(p.c1, p.x, p.zeta));
}

namespace {

bool better(double a, double b, Direction d) { return d == Direction::Max ? a > b : a < b; }

// Center plus (g-1) rings of g-1 equally spaced angles; the outer ring is the
// unit circle.
std::vector<Complex> disk_grid(int g) {
    const int rings = g - 1;
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(rings * rings + 1));
    pts.emplace_back(0.0, 0.0);
    for (int j = 1; j <= rings; ++j) {
        const double r = static_cast<double>(j) / rings;
        for (int k = 0; k < rings; ++k)
            pts.push_back(std::polar(r, 2.0 * std::numbers::pi * k / rings));
    }
    return pts;
}

struct SliceBest {
    double value;
    SearchPoint point;
    std::size_t evaluations = 0;
};

// One slice c1 = const of the grid. Instantiated per functional so the
// dispatch in functional_value folds away in the inner loop.
template <FunctionalId Id>
SliceBest scan_slice(const Objective& obj, Direction dir, double c1,
                     const std::vector<Complex>& disk) {
    const int dim = obj.dimension();
    const auto [s2, s3, s4] = input_scale(obj);
    const FunctionalParams& params = obj.params;
    SliceBest best{dir == Direction::Max ? -std::numeric_limits<double>::infinity()
                                         : std::numeric_limits<double>::infinity(),
                   {c1, 0.0, 0.0}};
    std::size_t evals = 0;
    auto consider = [&](double v, Complex x, Complex zeta) {
        ++evals;
        if (better(v, best.value, dir)) {
            best.value = v;
            best.point = {c1, x, zeta};
        }
    };

    const Complex a1 = s2 * Complex(c1);
    if (dim == 1) {
        consider(obj.at(SearchPoint{c1, 0.0, 0.0}), 0.0, 0.0);
    } else {
        for (const Complex x : disk) {
            const Complex a2 = s3 * lz_c2(c1, x);
            const auto [offset, slope] = lz_c3_affine(c1, x);
            if (dim == 3) {
                consider(functional_value(Id, a1, a2, s4 * offset, params), x, 0.0);
                continue;
            }
            for (const Complex zeta : disk)
                consider(functional_value(Id, a1, a2, s4 * (offset + slope * zeta), params), x, zeta);
        }
    }
    best.evaluations = evals;
    return best;
}

constexpr int kRestarts = 8;

using ScanFn = SliceBest (*)(const Objective&, Direction, double, const std::vector<Complex>&);

template <std::size_t... I>
constexpr std::array<ScanFn, sizeof...(I)> make_scan_table(std::index_sequence<I...>) {
    return {&scan_slice<static_cast<FunctionalId>(I)>...};
}

constexpr auto kScanTable = make_scan_table(std::make_index_sequence<kAllFunctionals.size()>{});

// Box parameters <-> unconstrained simplex coordinates
// (c1, |x|, arg x, |zeta|, arg zeta), clamped on the way back.
SearchPoint to_point(const std::vector<double>& u) {
    SearchPoint p;
    p.c1 = std::clamp(u[0], 0.0, 2.0);
    if (u.size() >= 3) p.x = std::polar(std::clamp(u[1], 0.0, 1.0), u[2]);
    if (u.size() >= 5) p.zeta = std::polar(std::clamp(u[3], 0.0, 1.0), u[4]);
    return p;
}

std::vector<double> to_coords(const SearchPoint& p, int dim) {
    std::vector<double> u{p.c1};
    if (dim >= 3) {
        u.push_back(std::abs(p.x));
        u.push_back(std::arg(p.x));
    }
    if (dim >= 5) {
        u.push_back(std::abs(p.zeta));
        u.push_back(std::arg(p.zeta));
    }
    return u;
}

// Plain Nelder-Mead minimizer (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) for a fixed number of iterations.
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> start, const std::vector<double>& steps,
                                int iters, std::size_t& evals) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += steps[i];
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);
    evals += n + 1;

    std::vector<std::size_t> order(n + 1);
    auto along = [&](const std::vector<double>& from, const std::vector<double>& to, double t) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = from[i] + t * (to[i] - from[i]);
        return out;
    };

    for (int it = 0; it < iters; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[order[k]][i] / n;

        const auto reflected = along(centroid, simplex[worst], -1.0);
        const double fr = f(reflected);
        ++evals;
        if (fr < fv[best]) {
            const auto expanded = along(centroid, simplex[worst], -2.0);
            const double fe = f(expanded);
            ++evals;
            if (fe < fr) {
                simplex[worst] = expanded;
                fv[worst] = fe;
            } else {
                simplex[worst] = reflected;
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second]) {
            simplex[worst] = reflected;
            fv[worst] = fr;
            continue;
        }
        const bool outside = fr < fv[worst];
        const auto contracted = outside ? along(centroid, reflected, 0.5)
                                        : along(centroid, simplex[worst], 0.5);
        const double fc = f(contracted);
        ++evals;
        if (fc < std::min(fr, fv[worst])) {
            simplex[worst] = contracted;
            fv[worst] = fc;
            continue;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == best) continue;
            simplex[k] = along(simplex[best], simplex[k], 0.5);
            fv[k] = f(simplex[k]);
            ++evals;
        }
    }
    const auto it = std::min_element(fv.begin(), fv.end());
    return simplex[static_cast<std::size_t>(it - fv.begin())];
}

} // namespace

ExtremalSearchResult search_opt(const Objective& objective, Direction direction,
                                const SearchConfig& cfg) {
    cfg.validate();
    const int dim = objective.dimension();
    const auto disk = disk_grid(cfg.grid_disk);
    const int n_c1 = cfg.grid_c1;
    const ScanFn scan = kScanTable[static_cast<std::size_t>(objective.id)];
    auto c1_at = [&](int i) { return 2.0 * i / (n_c1 - 1); };

    // Slices are independent; merging in index order keeps ties on the lowest index.
    std::vector<SliceBest> slices(static_cast<std::size_t>(n_c1));
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(n_c1));
    auto run = [&](unsigned w) {
        for (int i = static_cast<int>(w); i < n_c1; i += static_cast<int>(workers))
            slices[static_cast<std::size_t>(i)] = scan(objective, direction, c1_at(i), disk);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    ExtremalSearchResult result;
    result.direction = direction;
    result.optimum = slices.front().value;
    result.arg = slices.front().point;
    for (const auto& s : slices) {
        result.evaluations += s.evaluations;
        if (better(s.value, result.optimum, direction)) {
            result.optimum = s.value;
            result.arg = s.point;
        }
    }

    if (cfg.refine_iters > 0) {
        const double sign = direction == Direction::Max ? -1.0 : 1.0;
        auto f = [&](const std::vector<double>& u) { return sign * objective.at(to_point(u)); };
        const double ring = 1.0 / (cfg.grid_disk - 1);
        std::vector<double> steps{2.0 / (n_c1 - 1), ring, 2.0 * std::numbers::pi * ring,
                                  ring, 2.0 * std::numbers::pi * ring};
        steps.resize(static_cast<std::size_t>(dim));
        // Restart from the best point with a fresh simplex: a collapsed simplex
        // stalls on the kinks of modulus functionals.
        for (int round = 0; round < kRestarts; ++round) {
            const auto start = to_coords(result.arg, dim);
            auto s = steps;
            // Step inward from the box faces so the initial simplex is not degenerate.
            if (start[0] + s[0] > 2.0) s[0] = -s[0];
            for (std::size_t i = 1; i < start.size(); i += 2)
                if (start[i] + s[i] > 1.0) s[i] = -s[i];

            const auto u = nelder_mead(f, start, s, cfg.refine_iters, result.evaluations);
            const SearchPoint refined = to_point(u);
            const double value = objective.at(refined);
            if (!better(value, result.optimum, direction)) break;
            result.optimum = value;
            result.arg = refined;
            for (double& h : steps) h *= 0.5;
        }
    }
    return result;
}

double rotation_spot_check(const Objective& objective, double optimum, Direction direction,
                           int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double worst = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const int k = count(rng);
        std::vector<double> w(static_cast<std::size_t>(k));
        for (auto& v : w) v = unit(rng) + 1e-3;
        const double total = std::accumulate(w.begin(), w.end(), 0.0);
        std::vector<HerglotzAtom> atoms;
        for (int j = 0; j < k; ++j)
            atoms.push_back({std::polar(1.0, angle(rng)), w[static_cast<std::size_t>(j)] / total});
        // Renormalize against rounding in the division above.
        double sum = 0.0;
        for (const auto& a : atoms) sum += a.weight;
        atoms.back().weight += 1.0 - sum;

        const auto c = atoms_to_coeffs(HerglotzAtoms(std::move(atoms)), 3);
        const double v = objective.at(c.c(1), c.c(2), c.c(3));
        worst = std::max(worst, direction == Direction::Max ? v - optimum : optimum - v);
    }
    return worst;
}

std::string_view to_string(TheoremId id) {
    switch (id) {
    case TheoremId::Thm21: return "thm2.1";
    case TheoremId::Thm22: return "thm2.2";
    case TheoremId::Thm23: return "thm2.3";
    case TheoremId::Thm31: return "thm3.1";
    case TheoremId::Thm32: return "thm3.2";
    case TheoremId::Thm41: return "thm4.1";
    case TheoremId::Lemma21: return "lemma2.1";
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (auto id : kAllTheorems)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

bool depends_on_beta(TheoremId id) { return id != TheoremId::Thm41 && id != TheoremId::Lemma21; }

std::vector<int> theorem_parts(TheoremId id) {
    switch (id) {
    case TheoremId::Thm21: return {1, 2, 3};
    case TheoremId::Thm22: return {2, 3};
    case TheoremId::Thm23: return {1, 2};
    default: return {0};
    }
}

namespace {

struct Witness {
    std::string name;
    std::array<Complex, 3> c;
};

Witness from_generator(std::string name, const CaratheodoryTruncation& g) {
    return {std::move(name), {g.c(1), g.c(2), g.c(3)}};
}

Witness from_point(std::string name, const SearchPoint& p) {
    return {std::move(name), {p.c1, lz_c2(p.c1, p.x), lz_c3(p.c1, p.x, p.zeta)}};
}

void assess(VerificationReport& r, const Objective& obj, const std::optional<Witness>& upper,
            const std::optional<Witness>& lower, const SearchConfig& cfg) {
    r.no_violation = true;
    r.sharp = true;
    auto attains = [&](bool ok) { r.witness_attains = r.witness_attains.value_or(true) && ok; };

    if (r.bound.upper) {
        const double bound = *r.bound.upper;
        r.oracle_max = search_opt(obj, Direction::Max, cfg);
        r.no_violation = r.no_violation && r.oracle_max->optimum <= bound + cfg.tol_bound;
        const double tol = upper ? cfg.tol_sharp : cfg.tol_sharp_unwitnessed;
        r.sharp = r.sharp && std::abs(bound - r.oracle_max->optimum) <= tol;
        if (upper) {
            r.witness_upper = obj.at(upper->c[0], upper->c[1], upper->c[2]);
            r.witness_upper_name = upper->name;
            attains(std::abs(*r.witness_upper - bound) <= cfg.tol_witness);
        }
    }
    if (r.bound.lower) {
        const double bound = *r.bound.lower;
        r.oracle_min = search_opt(obj, Direction::Min, cfg);
        r.no_violation = r.no_violation && r.oracle_min->optimum >= bound - cfg.tol_bound;
        const double tol = lower ? cfg.tol_sharp : cfg.tol_sharp_unwitnessed;
        r.sharp = r.sharp && std::abs(bound - r.oracle_min->optimum) <= tol;
        if (lower) {
            r.witness_lower = obj.at(lower->c[0], lower->c[1], lower->c[2]);
            r.witness_lower_name = lower->name;
            attains(std::abs(*r.witness_lower - bound) <= cfg.tol_witness);
        }
    }
}

// Generators of the named extremal functions (c1, c2, c3 suffice here).
Witness f1() { return from_generator("f1", f1_generator(3)); }
Witness f2() { return from_generator("f2", f2_generator(3)); }
Witness f3() { return from_generator("f3", f3_generator(3)); }

// Maximizer of Psi- (minimizer of Psi+) on the body: c1 at the branch's
// optimal value and x cancelling B2 c1^2 + B3 c2 as far as |x| <= 1 allows.
SearchPoint psi_minus_maximizer(const PsiParams& p, const std::string& region) {
    const double b1 = p.b1();
    const double b3 = std::abs(p.b3());
    const double s = p.b4() + 2.0 * b3;
    double c1 = 2.0;
    if (region == "ii") c1 = std::sqrt(8.0 * b3 / s);
    else if (region == "iii") c1 = 2.0 * b1 / s;
    c1 = std::clamp(c1, 0.0, 2.0);

    Complex x = 0.0;
    const double spread = 0.5 * (4.0 - c1 * c1);
    if (p.b3() != 0.0 && spread > 0.0) {
        x = -(p.b2() + 0.5 * p.b3()) * c1 * c1 / (p.b3() * spread);
        if (std::abs(x) > 1.0) x /= std::abs(x);
    }
    return {c1, x, 0.0};
}

} // namespace

VerificationReport verify_lemma21(const PsiParams& p, const SearchConfig& cfg) {
    cfg.validate();
    VerificationReport r;
    r.theorem = TheoremId::Lemma21;
    r.functional = FunctionalId::PsiPlus;
    r.params.psi = p;

    const auto plus = bound_psi_plus(p);
    const auto minus = bound_psi_minus(p);
    r.bound.upper = plus.upper;
    r.bound.upper_region = plus.upper_region;
    r.bound.lower = -*minus.upper;
    r.bound.lower_region = minus.upper_region;

    Objective obj{FunctionalId::PsiPlus, 0.0, {}};
    obj.params.psi = p;
    const Witness up = plus.upper_region == "dominant"
                           ? from_point("c=(2,2)", {2.0, 1.0, 0.0})
                           : from_point("c=(0,2)", {0.0, 1.0, 0.0});
    const Witness lo = from_point("psi_minus_maximizer", psi_minus_maximizer(p, minus.upper_region));
    assess(r, obj, up, lo, cfg);
    return r;
}

VerificationReport verify_theorem(TheoremId id, const TheoremParams& params,
                                  const SearchConfig& cfg) {
    if (id == TheoremId::Lemma21) return verify_lemma21(params.psi, cfg);
    cfg.validate();

    VerificationReport r;
    r.theorem = id;
    r.params = params;
    if (id == TheoremId::Thm41) r.params.beta = 0.0; // stated for the bounded-turning class
    const double beta = r.params.beta;
    require_beta(beta);

    const auto parts = theorem_parts(id);
    if (std::find(parts.begin(), parts.end(), params.part) == parts.end())
        throw std::invalid_argument("verify_theorem: invalid part for this theorem");

    std::optional<Witness> upper;
    std::optional<Witness> lower;
    switch (id) {
    case TheoremId::Thm21: {
        static constexpr FunctionalId ids[] = {FunctionalId::Gamma1, FunctionalId::Gamma2,
                                               FunctionalId::Gamma3};
        r.functional = ids[params.part - 1];
        r.bound.upper = bound_gamma(params.part, beta);
        r.bound.upper_region = "uniform";
        upper = params.part == 1 ? f1() : params.part == 2 ? f2() : f3();
        break;
    }
    case TheoremId::Thm22: {
        const auto b = bound_inverse(beta);
        r.functional = params.part == 2 ? FunctionalId::A2 : FunctionalId::A3;
        r.bound.upper = params.part == 2 ? b.A2 : b.A3;
        r.bound.upper_region = "uniform";
        upper = f1();
        break;
    }
    case TheoremId::Thm23: {
        const auto b = bound_log_inverse(beta);
        r.functional = params.part == 1 ? FunctionalId::LogInverse1 : FunctionalId::LogInverse2;
        r.bound.upper = params.part == 1 ? b.Gamma1 : b.Gamma2;
        r.bound.upper_region = "uniform";
        upper = f1();
        break;
    }
    case TheoremId::Thm31:
        r.functional = FunctionalId::Diff21;
        r.bound = bound_diff21(beta);
        upper = f1();
        lower = f2();
        break;
    case TheoremId::Thm32:
        r.functional = FunctionalId::Diff32;
        r.bound = bound_diff32(beta);
        upper = r.bound.upper_region == "flat" ? f2() : f1();
        lower = from_generator("diff_lower", diff_lower_generator(beta, 3));
        break;
    case TheoremId::Thm41:
        r.functional = FunctionalId::FeketeSzego;
        r.bound = bound_fekete_szego(params.fekete_szego);
        upper = r.bound.upper_region == "dominant" ? f1() : f2();
        if (r.bound.lower_region == "i") lower = f1();
        break;
    case TheoremId::Lemma21: break;
    }

    Objective obj{r.functional, beta, {}};
    obj.params.fekete_szego = params.fekete_szego;
    assess(r, obj, upper, lower, cfg);
    return r;
}

double BoundaryCheck::gap() const { return std::abs(left - right); }

bool ContinuityReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [&](const BoundaryCheck& c) { return c.gap() <= tol; });
}

ContinuityReport verify_branch_continuity(std::string_view target) {
    ContinuityReport r;
    r.target = std::string(target);
    auto add = [&](std::string label, double at, double left, double right) {
        r.checks.push_back({std::move(label), at, left, right});
    };

    if (target == "thm3.2") {
        const double b = diff32_threshold();
        add("upper flat|dominant at beta*", b, branch::diff32_upper_flat(b),
            branch::diff32_upper_dominant(b));
    } else if (target == "thm4.1") {
        for (double mu : {0.0, 0.5, 1.0, 2.0}) {
            const double t = 2.0 + 3.0 * mu;
            add("upper dominant|flat at t=2+3mu, mu=" + std::to_string(mu), t,
                branch::fs_upper_dominant(t, mu), branch::fs_upper_flat(t, mu));
        }
        for (double mu : {2.0, 3.0}) {
            const double t = (3.0 * mu - 4.0) / 2.0;
            add("lower i|iii at t=(3mu-4)/2, mu=" + std::to_string(mu), t,
                branch::fs_lower_i(t, mu), branch::fs_lower_iii(t, mu));
        }
        for (double mu : {1.5, 2.0, 3.0}) {
            const double t = (9.0 * mu * mu - 16.0) / 8.0;
            add("lower ii|iii at t=(9mu^2-16)/8, mu=" + std::to_string(mu), t,
                branch::fs_lower_ii(t, mu), branch::fs_lower_iii(t, mu));
        }
        const double mu = 4.0 / 3.0;
        add("lower i|ii at t=0, mu=4/3", 0.0, branch::fs_lower_i(0.0, mu),
            branch::fs_lower_ii(0.0, mu));
    } else if (target == "lemma2.1") {
        // B2 = 1/2, B3 = 1 gives |2B2 + B3| = 2, B4 = 4.
        const PsiParams dominant_edge(1.0, 0.5, 1.0);
        add("psi+ dominant|flat at |2B2+B3| = |B3|+B1", 1.0,
            branch::psi_plus_dominant(dominant_edge), branch::psi_plus_flat(dominant_edge));
        const PsiParams i_iii(6.0, 0.5, 1.0);
        add("psi- i|iii at B1 = B4+2|B3|", 6.0, branch::psi_minus_i(i_iii),
            branch::psi_minus_iii(i_iii));
        const double b1 = std::sqrt(12.0);
        const PsiParams ii_iii(b1, 0.5, 1.0);
        add("psi- ii|iii at B1^2 = 2|B3|(B4+2|B3|)", b1, branch::psi_minus_ii(ii_iii),
            branch::psi_minus_iii(ii_iii));
    } else if (target == "lemma2.2") {
        add("v<0|middle at v=0", 0.0, branch::ma_minda_negative(0.0), branch::ma_minda_middle(0.0));
        add("middle|v>1 at v=1", 1.0, branch::ma_minda_middle(1.0), branch::ma_minda_large(1.0));
    } else {
        throw std::invalid_argument("verify_branch_continuity: no piecewise bound for this target");
    }
    return r;
}

} // namespace abeta
