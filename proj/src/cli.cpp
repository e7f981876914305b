#include "abeta/cli.hpp"

#include "abeta/abeta_function.hpp"
#include "abeta/bounds.hpp"
#include "abeta/functionals.hpp"
#include "abeta/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace abeta {

using json = nlohmann::ordered_json;

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double parse_real(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError("not a number: '" + std::string(s) + "'");
    return v;
}

// "v" or "min:max:steps".
struct Range {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    std::vector<double> values() const {
        if (steps == 1) return {min};
        std::vector<double> out;
        for (int i = 0; i < steps; ++i)
            out.push_back(i == steps - 1 ? max : min + (max - min) * i / (steps - 1));
        return out;
    }
};

Range parse_range(const std::string& text, const char* what) {
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    while (true) {
        const auto colon = rest.find(':');
        parts.push_back(rest.substr(0, colon));
        if (colon == std::string_view::npos) break;
        rest.remove_prefix(colon + 1);
    }
    Range r;
    if (parts.size() == 1) {
        r.min = r.max = parse_real(parts[0]);
    } else if (parts.size() == 3) {
        r.min = parse_real(parts[0]);
        r.max = parse_real(parts[1]);
        int steps = 0;
        const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), steps);
        if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size())
            throw UsageError(std::string(what) + ": steps must be an integer");
        r.steps = steps;
    } else {
        throw UsageError(std::string(what) + ": expected a value or min:max:steps");
    }
    if (r.steps < 1) throw UsageError(std::string(what) + ": steps must be >= 1");
    if (r.max < r.min) throw UsageError(std::string(what) + ": max < min");
    return r;
}

Range parse_beta(const std::string& text) {
    const Range r = parse_range(text, "--beta");
    if (r.min < 0.0 || r.max > 1.0) throw UsageError("--beta: range must lie in [0,1]");
    return r;
}

Range parse_mu(const std::string& text) {
    const Range r = parse_range(text, "--mu");
    if (r.min < 0.0) throw UsageError("--mu: must be >= 0");
    return r;
}

Complex complex_from(const std::vector<double>& v) {
    return v.empty() ? Complex{} : Complex(v[0], v.size() > 1 ? v[1] : 0.0);
}

// ---- tables ----

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::vector<Cell>& add_row() { return rows.emplace_back(columns.size()); }

    void set(std::vector<Cell>& row, std::string_view col, Cell value) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == col) {
                row[i] = std::move(value);
                return;
            }
        throw std::logic_error("unknown column " + std::string(col));
    }
};

Cell opt(const std::optional<double>& v) { return v ? Cell(*v) : Cell(); }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::string csv_cell(const Cell& c) {
    struct {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return csv_escape(v); }
    } visit;
    return std::visit(visit, c);
}

json json_number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::strtod(format_number(x).c_str(), nullptr);
}

json json_number(const std::optional<double>& x) { return x ? json_number(*x) : json(nullptr); }

json json_complex(Complex z) { return json::array({json_number(z.real()), json_number(z.imag())}); }

json json_cell(const Cell& c) {
    struct {
        json operator()(std::monostate) const { return nullptr; }
        json operator()(double v) const { return json_number(v); }
        json operator()(long long v) const { return v; }
        json operator()(bool v) const { return v; }
        json operator()(const std::string& v) const { return v; }
    } visit;
    return std::visit(visit, c);
}

void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

json table_rows_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
        rows.push_back(std::move(obj));
    }
    return rows;
}

// ---- commands ----

const std::vector<std::string> kBetaBoundColumns = {
    "beta", "gamma1", "gamma2", "gamma3", "A2", "A3", "Gamma1", "Gamma2",
    "diff21_lower", "diff21_upper", "diff32_lower", "diff32_upper", "diff32_upper_region",
};

const std::vector<std::string> kFsBoundColumns = {
    "lambda_re", "lambda_im", "mu", "upper", "upper_region", "lower", "lower_region",
};

const std::vector<std::string> kVerifyColumns = {
    "theorem", "part", "functional", "beta", "lambda_re", "lambda_im", "mu", "b1", "b2_re",
    "b2_im", "b3", "lower", "lower_region", "upper", "upper_region", "oracle_min", "oracle_max",
    "witness_lower", "witness_upper", "witness_lower_name", "witness_upper_name",
    "no_violation", "sharp", "witness_attains", "status",
};

const std::vector<std::string> kEvalColumns = {
    "source", "beta", "a2_re", "a2_im", "a3_re", "a3_im", "a4_re", "a4_im",
    "gamma1", "gamma2", "gamma3", "A2", "A3", "A4", "Gamma1", "Gamma2", "Gamma3",
    "diff21", "diff32", "lambda_re", "lambda_im", "mu", "fekete_szego",
};

const std::vector<std::string> kSearchColumns = {
    "functional", "beta", "direction", "optimum", "c1", "x_re", "x_im", "zeta_re", "zeta_im",
    "evaluations",
};

Table bounds_beta_table(const Range& beta) {
    Table t{kBetaBoundColumns, {}};
    for (double b : beta.values()) {
        auto& row = t.add_row();
        const auto inv = bound_inverse(b);
        const auto li = bound_log_inverse(b);
        const auto d21 = bound_diff21(b);
        const auto d32 = bound_diff32(b);
        t.set(row, "beta", b);
        t.set(row, "gamma1", bound_gamma(1, b));
        t.set(row, "gamma2", bound_gamma(2, b));
        t.set(row, "gamma3", bound_gamma(3, b));
        t.set(row, "A2", inv.A2);
        t.set(row, "A3", inv.A3);
        t.set(row, "Gamma1", li.Gamma1);
        t.set(row, "Gamma2", li.Gamma2);
        t.set(row, "diff21_lower", opt(d21.lower));
        t.set(row, "diff21_upper", opt(d21.upper));
        t.set(row, "diff32_lower", opt(d32.lower));
        t.set(row, "diff32_upper", opt(d32.upper));
        t.set(row, "diff32_upper_region", d32.upper_region);
    }
    return t;
}

Table bounds_fs_table(Complex lambda, const Range& mu) {
    Table t{kFsBoundColumns, {}};
    for (double m : mu.values()) {
        auto& row = t.add_row();
        const auto b = bound_fekete_szego(FeketeSzegoParams(lambda, m));
        t.set(row, "lambda_re", lambda.real());
        t.set(row, "lambda_im", lambda.imag());
        t.set(row, "mu", m);
        t.set(row, "upper", opt(b.upper));
        t.set(row, "upper_region", b.upper_region);
        t.set(row, "lower", opt(b.lower));
        t.set(row, "lower_region", b.lower_region);
    }
    return t;
}

json search_json(const std::optional<ExtremalSearchResult>& r) {
    if (!r) return nullptr;
    return json{
        {"optimum", json_number(r->optimum)},
        {"arg", {{"c1", json_number(r->arg.c1)},
                 {"x", json_complex(r->arg.x)},
                 {"zeta", json_complex(r->arg.zeta)}}},
        {"evaluations", r->evaluations},
        {"direction", std::string(to_string(r->direction))},
    };
}

json report_json(const VerificationReport& r) {
    json params = json::object();
    if (depends_on_beta(r.theorem)) {
        params["beta"] = json_number(r.params.beta);
        if (theorem_parts(r.theorem).size() > 1) params["part"] = r.params.part;
    } else if (r.theorem == TheoremId::Thm41) {
        params["lambda"] = json_complex(r.params.fekete_szego.lambda());
        params["mu"] = json_number(r.params.fekete_szego.mu());
    } else {
        params["b1"] = json_number(r.params.psi.b1());
        params["b2"] = json_complex(r.params.psi.b2());
        params["b3"] = json_number(r.params.psi.b3());
    }
    return json{
        {"theorem_id", std::string(to_string(r.theorem))},
        {"functional", std::string(to_string(r.functional))},
        {"params", params},
        {"bound", {{"lower", json_number(r.bound.lower)},
                   {"upper", json_number(r.bound.upper)},
                   {"lower_region", r.bound.lower_region},
                   {"upper_region", r.bound.upper_region}}},
        {"oracle_max", search_json(r.oracle_max)},
        {"oracle_min", search_json(r.oracle_min)},
        {"witness_upper", json_number(r.witness_upper)},
        {"witness_lower", json_number(r.witness_lower)},
        {"witness_upper_name", r.witness_upper_name},
        {"witness_lower_name", r.witness_lower_name},
        {"no_violation", r.no_violation},
        {"sharp", r.sharp},
        {"witness_attains", r.witness_attains ? json(*r.witness_attains) : json(nullptr)},
        {"status", r.pass() ? "PASS" : "FAIL"},
    };
}

void report_row(Table& t, const VerificationReport& r) {
    auto& row = t.add_row();
    t.set(row, "theorem", std::string(to_string(r.theorem)));
    if (theorem_parts(r.theorem).size() > 1) t.set(row, "part", static_cast<long long>(r.params.part));
    t.set(row, "functional", std::string(to_string(r.functional)));
    if (depends_on_beta(r.theorem)) t.set(row, "beta", r.params.beta);
    if (r.theorem == TheoremId::Thm41) {
        t.set(row, "lambda_re", r.params.fekete_szego.lambda().real());
        t.set(row, "lambda_im", r.params.fekete_szego.lambda().imag());
        t.set(row, "mu", r.params.fekete_szego.mu());
    }
    if (r.theorem == TheoremId::Lemma21) {
        t.set(row, "b1", r.params.psi.b1());
        t.set(row, "b2_re", r.params.psi.b2().real());
        t.set(row, "b2_im", r.params.psi.b2().imag());
        t.set(row, "b3", r.params.psi.b3());
    }
    t.set(row, "lower", opt(r.bound.lower));
    t.set(row, "lower_region", r.bound.lower_region);
    t.set(row, "upper", opt(r.bound.upper));
    t.set(row, "upper_region", r.bound.upper_region);
    if (r.oracle_min) t.set(row, "oracle_min", r.oracle_min->optimum);
    if (r.oracle_max) t.set(row, "oracle_max", r.oracle_max->optimum);
    t.set(row, "witness_lower", opt(r.witness_lower));
    t.set(row, "witness_upper", opt(r.witness_upper));
    t.set(row, "witness_lower_name", r.witness_lower_name);
    t.set(row, "witness_upper_name", r.witness_upper_name);
    t.set(row, "no_violation", r.no_violation);
    t.set(row, "sharp", r.sharp);
    if (r.witness_attains) t.set(row, "witness_attains", *r.witness_attains);
    t.set(row, "status", std::string(r.pass() ? "PASS" : "FAIL"));
}

std::array<Complex, 3> extremal_coeffs(const std::string& name, double beta) {
    std::optional<AbetaFunction> f;
    if (name == "f1") f = extremal_f1(beta, 3);
    else if (name == "f2") f = extremal_f2(beta, 3);
    else if (name == "f3") f = extremal_f3(beta, 3);
    else if (name == "diff-lower") f = extremal_diff_lower(beta, 3);
    else throw UsageError("--extremal: expected f1, f2, f3 or diff-lower");
    return {f->a(2), f->a(3), f->a(4)};
}

Table eval_table(const std::string& source, std::optional<double> beta,
                 const std::array<Complex, 3>& a, const FeketeSzegoParams& fs) {
    Table t{kEvalColumns, {}};
    auto& row = t.add_row();
    FunctionalParams params;
    params.fekete_szego = fs;
    auto v = [&](FunctionalId id) { return functional_value(id, a[0], a[1], a[2], params); };
    t.set(row, "source", source);
    if (beta) t.set(row, "beta", *beta);
    t.set(row, "a2_re", a[0].real());
    t.set(row, "a2_im", a[0].imag());
    t.set(row, "a3_re", a[1].real());
    t.set(row, "a3_im", a[1].imag());
    t.set(row, "a4_re", a[2].real());
    t.set(row, "a4_im", a[2].imag());
    t.set(row, "gamma1", v(FunctionalId::Gamma1));
    t.set(row, "gamma2", v(FunctionalId::Gamma2));
    t.set(row, "gamma3", v(FunctionalId::Gamma3));
    t.set(row, "A2", v(FunctionalId::A2));
    t.set(row, "A3", v(FunctionalId::A3));
    t.set(row, "A4", v(FunctionalId::A4));
    t.set(row, "Gamma1", v(FunctionalId::LogInverse1));
    t.set(row, "Gamma2", v(FunctionalId::LogInverse2));
    t.set(row, "Gamma3", v(FunctionalId::LogInverse3));
    t.set(row, "diff21", v(FunctionalId::Diff21));
    t.set(row, "diff32", v(FunctionalId::Diff32));
    t.set(row, "lambda_re", fs.lambda().real());
    t.set(row, "lambda_im", fs.lambda().imag());
    t.set(row, "mu", fs.mu());
    t.set(row, "fekete_szego", v(FunctionalId::FeketeSzego));
    return t;
}

struct Options {
    std::string format = "csv";
    std::string out_path;

    std::string beta = "0";
    std::vector<double> lambda{1.0, 0.0};
    std::string mu = "0";
    bool fs = false;

    std::string theorem = "all";
    double b1 = 1.0;
    std::vector<double> b2{1.0, 0.0};
    double b3 = -2.0 / 3.0;

    int grid = 41;
    int refine = 200;
    double tol_bound = 1e-9;
    double tol_sharp = 1e-3;

    std::string extremal;
    std::vector<double> a2, a3, a4;

    std::string functional;
    std::string direction = "max";

    std::vector<std::string> perturb;
};

SearchConfig make_cfg(const Options& o) {
    SearchConfig cfg;
    cfg.grid_c1 = o.grid;
    cfg.grid_disk = o.grid;
    cfg.refine_iters = o.refine;
    cfg.tol_bound = o.tol_bound;
    cfg.tol_sharp = o.tol_sharp;
    cfg.validate();
    return cfg;
}

json cfg_json(const SearchConfig& cfg) {
    return json{{"grid", cfg.grid_c1},
                {"refine", cfg.refine_iters},
                {"tol_bound", json_number(cfg.tol_bound)},
                {"tol_sharp", json_number(cfg.tol_sharp)}};
}

void add_cfg_options(CLI::App* sub, Options& o) {
    sub->add_option("--grid", o.grid, "Grid points per axis")->capture_default_str();
    sub->add_option("--refine", o.refine, "Simplex refinement iterations")->capture_default_str();
    sub->add_option("--tol-bound", o.tol_bound, "Violation tolerance")->capture_default_str();
    sub->add_option("--tol-sharp", o.tol_sharp, "Sharpness tolerance")->capture_default_str();
}

void add_psi_options(CLI::App* sub, Options& o) {
    sub->add_option("--b1", o.b1, "B1 > 0");
    sub->add_option("--b2", o.b2, "B2 as RE [IM]")->expected(1, 2);
    sub->add_option("--b3", o.b3, "B3 (real)");
}

struct Output {
    json doc;
    Table table;
    bool table_is_report = false;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Coefficient bounds for the class A_beta: tables, verification, evaluation",
                 "abeta"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", o.out_path, "Output file (default stdout)");
#ifdef ABETA_TESTING_HOOKS
    app.add_option("--perturb-bound", o.perturb)->expected(2)->group("");
#endif

    auto* bounds = app.add_subcommand("bounds", "Tabulate the closed-form bounds");
    bounds->add_option("--beta", o.beta, "beta or min:max:steps")->capture_default_str();
    bounds->add_flag("--fs", o.fs, "Fekete-Szego bounds over lambda, mu instead");
    bounds->add_option("--lambda", o.lambda, "lambda as RE [IM]")->expected(1, 2);
    bounds->add_option("--mu", o.mu, "mu or min:max:steps")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check bounds against a search over the coefficient body");
    verify->add_option("--theorem", o.theorem, "thm2.1 .. thm4.1, lemma2.1 or all")
        ->capture_default_str();
    verify->add_option("--beta", o.beta, "beta or min:max:steps")->capture_default_str();
    verify->add_option("--lambda", o.lambda, "lambda as RE [IM]")->expected(1, 2);
    verify->add_option("--mu", o.mu, "mu or min:max:steps")->capture_default_str();
    add_psi_options(verify, o);
    add_cfg_options(verify, o);

    auto* eval = app.add_subcommand("eval", "Evaluate the functionals at given coefficients");
    eval->add_option("--extremal", o.extremal, "f1, f2, f3 or diff-lower");
    eval->add_option("--beta", o.beta, "beta (with --extremal)");
    eval->add_option("--a2", o.a2, "a2 as RE [IM]")->expected(1, 2);
    eval->add_option("--a3", o.a3, "a3 as RE [IM]")->expected(1, 2);
    eval->add_option("--a4", o.a4, "a4 as RE [IM]")->expected(1, 2);
    eval->add_option("--lambda", o.lambda, "lambda for the Fekete-Szego value")->expected(1, 2);
    eval->add_option("--mu", o.mu, "mu for the Fekete-Szego value");

    auto* search = app.add_subcommand("search", "Optimize one functional over the coefficient body");
    search->add_option("--functional", o.functional, "gamma1, A3, Gamma2, diff32, ...")->required();
    search->add_option("--beta", o.beta, "beta")->capture_default_str();
    search->add_option("--direction", o.direction, "max or min")
        ->check(CLI::IsMember({"max", "min"}))
        ->capture_default_str();
    search->add_option("--lambda", o.lambda, "lambda as RE [IM]")->expected(1, 2);
    search->add_option("--mu", o.mu, "mu");
    add_psi_options(search, o);
    add_cfg_options(search, o);

    std::vector<std::string> argv_store{"abeta"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "abeta: " << e.what() << '\n';
        return kExitUsage;
    }

#ifdef ABETA_TESTING_HOOKS
    struct Clear {
        ~Clear() { testing::clear_bound_perturbations(); }
    } clear_on_exit;
#endif

    Output output;
    int status = kExitOk;
    try {
#ifdef ABETA_TESTING_HOOKS
        if (!o.perturb.empty()) testing::set_bound_perturbation(o.perturb[0], parse_real(o.perturb[1]));
#endif
        output.doc["command"] = app.get_subcommands().front()->get_name();
        output.doc["params"] = nullptr; // filled below; keeps key order stable
        json params = json::object();

        if (bounds->parsed()) {
            if (o.fs) {
                const Complex lambda = complex_from(o.lambda);
                const Range mu = parse_mu(o.mu);
                params["lambda"] = json_complex(lambda);
                params["mu"] = o.mu;
                output.table = bounds_fs_table(lambda, mu);
            } else {
                params["beta"] = o.beta;
                output.table = bounds_beta_table(parse_beta(o.beta));
            }
        } else if (verify->parsed()) {
            const SearchConfig cfg = make_cfg(o);
            std::vector<TheoremId> ids;
            if (o.theorem == "all") {
                ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
            } else if (auto id = parse_theorem(o.theorem)) {
                ids.push_back(*id);
            } else {
                throw UsageError("--theorem: unknown theorem '" + o.theorem + "'");
            }
            const Range beta = parse_beta(o.beta);
            const Range mu = parse_mu(o.mu);
            const Complex lambda = complex_from(o.lambda);
            const PsiParams psi(o.b1, complex_from(o.b2), o.b3);

            std::vector<VerificationReport> reports;
            for (TheoremId id : ids) {
                if (id == TheoremId::Lemma21) {
                    reports.push_back(verify_lemma21(psi, cfg));
                } else if (id == TheoremId::Thm41) {
                    for (double m : mu.values()) {
                        TheoremParams p;
                        p.fekete_szego = FeketeSzegoParams(lambda, m);
                        reports.push_back(verify_theorem(id, p, cfg));
                    }
                } else {
                    for (double b : beta.values())
                        for (int part : theorem_parts(id)) {
                            TheoremParams p;
                            p.beta = b;
                            p.part = part;
                            reports.push_back(verify_theorem(id, p, cfg));
                        }
                }
            }

            params["theorem"] = o.theorem;
            params["beta"] = o.beta;
            params["lambda"] = json_complex(lambda);
            params["mu"] = o.mu;
            params["b1"] = json_number(psi.b1());
            params["b2"] = json_complex(psi.b2());
            params["b3"] = json_number(psi.b3());
            params["cfg"] = cfg_json(cfg);

            output.table = Table{kVerifyColumns, {}};
            output.table_is_report = true;
            json list = json::array();
            for (const auto& r : reports) {
                report_row(output.table, r);
                list.push_back(report_json(r));
                if (!r.pass()) status = kExitFail;
            }
            output.doc["reports"] = std::move(list);
        } else if (eval->parsed()) {
            const FeketeSzegoParams fs(complex_from(o.lambda), parse_real(o.mu));
            params["lambda"] = json_complex(fs.lambda());
            params["mu"] = json_number(fs.mu());
            if (!o.extremal.empty()) {
                if (!o.a2.empty() || !o.a3.empty() || !o.a4.empty())
                    throw UsageError("--extremal excludes --a2/--a3/--a4");
                const double b = parse_real(o.beta);
                require_beta(b);
                params["extremal"] = o.extremal;
                params["beta"] = json_number(b);
                output.table = eval_table(o.extremal, b, extremal_coeffs(o.extremal, b), fs);
            } else {
                const std::array<Complex, 3> a{complex_from(o.a2), complex_from(o.a3),
                                               complex_from(o.a4)};
                params["a2"] = json_complex(a[0]);
                params["a3"] = json_complex(a[1]);
                params["a4"] = json_complex(a[2]);
                output.table = eval_table("coefficients", std::nullopt, a, fs);
            }
        } else {
            const SearchConfig cfg = make_cfg(o);
            const auto id = parse_functional(o.functional);
            if (!id) throw UsageError("--functional: unknown functional '" + o.functional + "'");
            Objective obj{*id, parse_real(o.beta), {}};
            require_beta(obj.beta);
            obj.params.fekete_szego = FeketeSzegoParams(complex_from(o.lambda), parse_real(o.mu));
            obj.params.psi = PsiParams(o.b1, complex_from(o.b2), o.b3);
            const Direction dir = o.direction == "max" ? Direction::Max : Direction::Min;
            const auto r = search_opt(obj, dir, cfg);

            params["functional"] = o.functional;
            params["beta"] = json_number(obj.beta);
            params["direction"] = o.direction;
            params["cfg"] = cfg_json(cfg);

            output.table = Table{kSearchColumns, {}};
            auto& row = output.table.add_row();
            output.table.set(row, "functional", o.functional);
            output.table.set(row, "beta", obj.beta);
            output.table.set(row, "direction", o.direction);
            output.table.set(row, "optimum", r.optimum);
            output.table.set(row, "c1", r.arg.c1);
            output.table.set(row, "x_re", r.arg.x.real());
            output.table.set(row, "x_im", r.arg.x.imag());
            output.table.set(row, "zeta_re", r.arg.zeta.real());
            output.table.set(row, "zeta_im", r.arg.zeta.imag());
            output.table.set(row, "evaluations", static_cast<long long>(r.evaluations));
        }
        output.doc["params"] = std::move(params);
        if (!output.table_is_report) output.doc["rows"] = table_rows_json(output.table);
    } catch (const std::invalid_argument& e) {
        err << "abeta: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "abeta: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path, std::ios::binary);
        if (!file) {
            err << "abeta: cannot open " << o.out_path << '\n';
            return kExitUsage;
        }
        sink = &file;
    }
    if (o.format == "json") *sink << output.doc.dump(2) << '\n';
    else write_csv(output.table, *sink);
    return status;
}

} // namespace abeta
