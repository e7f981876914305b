#include "abeta/abeta_function.hpp"
#include "abeta/bounds.hpp"
#include "abeta/caratheodory.hpp"
#include "abeta/cli.hpp"
#include "abeta/functionals.hpp"
#include "abeta/series.hpp"
#include "abeta/verifier.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace abeta;

namespace {

std::vector<Complex> coeffs_of(const TruncatedSeries& s) {
    return {s.coeffs().begin(), s.coeffs().end()};
}

FunctionalId functional_id(const std::string& name) {
    if (auto id = parse_functional(name)) return *id;
    throw py::value_error("unknown functional: " + name);
}

TheoremId theorem_id(const std::string& name) {
    if (auto id = parse_theorem(name)) return *id;
    throw py::value_error("unknown theorem: " + name);
}

Direction direction_of(const std::string& d) {
    if (d == "max") return Direction::Max;
    if (d == "min") return Direction::Min;
    throw py::value_error("direction must be 'max' or 'min'");
}

py::dict to_dict(const BoundResult& b) {
    py::dict d;
    d["lower"] = b.lower;
    d["upper"] = b.upper;
    d["lower_region"] = b.lower_region;
    d["upper_region"] = b.upper_region;
    return d;
}

py::dict to_dict(const ExtremalSearchResult& r) {
    py::dict d;
    d["optimum"] = r.optimum;
    d["c1"] = r.arg.c1;
    d["x"] = r.arg.x;
    d["zeta"] = r.arg.zeta;
    d["evaluations"] = r.evaluations;
    d["direction"] = std::string(to_string(r.direction));
    return d;
}

py::dict to_dict(const VerificationReport& r) {
    py::dict d;
    d["theorem"] = std::string(to_string(r.theorem));
    d["functional"] = std::string(to_string(r.functional));
    d["beta"] = r.params.beta;
    d["part"] = r.params.part;
    d["bound"] = to_dict(r.bound);
    d["oracle_max"] = r.oracle_max ? py::object(to_dict(*r.oracle_max)) : py::none();
    d["oracle_min"] = r.oracle_min ? py::object(to_dict(*r.oracle_min)) : py::none();
    d["witness_upper"] = r.witness_upper;
    d["witness_lower"] = r.witness_lower;
    d["witness_upper_name"] = r.witness_upper_name;
    d["witness_lower_name"] = r.witness_lower_name;
    d["no_violation"] = r.no_violation;
    d["sharp"] = r.sharp;
    d["witness_attains"] = r.witness_attains;
    d["status"] = r.pass() ? "PASS" : "FAIL";
    return d;
}

SearchConfig make_config(int grid, int refine) {
    SearchConfig cfg;
    cfg.grid_c1 = cfg.grid_disk = grid;
    cfg.refine_iters = refine;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coefficient bounds and numerical verification for the class A_beta";

    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

    // Series kernel; series are lists of complex coefficients, index k <-> z^k.
    m.def("compose", [](const std::vector<Complex>& outer, const std::vector<Complex>& inner,
                        std::size_t n) {
        return coeffs_of(compose(TruncatedSeries(outer), TruncatedSeries(inner), n));
    }, py::arg("outer"), py::arg("inner"), py::arg("n"));
    m.def("revert", [](const std::vector<Complex>& f, std::size_t n) {
        return coeffs_of(revert(TruncatedSeries(f), n));
    }, py::arg("f"), py::arg("n"));
    m.def("log_unit", [](const std::vector<Complex>& s, std::size_t n) {
        return coeffs_of(log_unit(TruncatedSeries(s), n));
    }, py::arg("s"), py::arg("n"));
    m.def("hypergeom_2f1", [](Complex a, Complex b, Complex c, std::size_t n) {
        return coeffs_of(hypergeom_2f1(a, b, c, n));
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"));

    m.def("is_valid_truncation", [](const std::vector<Complex>& c, double tol) {
        return is_valid_truncation(CaratheodoryTruncation(c), tol);
    }, py::arg("c"), py::arg("tol") = kDefaultValidityTol);
    m.def("min_toeplitz_eigenvalue", [](const std::vector<Complex>& c) {
        return min_toeplitz_eigenvalue(CaratheodoryTruncation(c));
    }, py::arg("c"));
    m.def("lz_c2", &lz_c2, py::arg("c1"), py::arg("x"));
    m.def("lz_c3", &lz_c3, py::arg("c1"), py::arg("x"), py::arg("zeta"));

    m.def("from_caratheodory", [](double beta, const std::vector<Complex>& c) {
        const auto f = from_caratheodory(beta, CaratheodoryTruncation(c));
        return std::vector<Complex>(f.higher_coeffs().begin(), f.higher_coeffs().end());
    }, py::arg("beta"), py::arg("c"), "Returns (a_2, ..., a_{N+1}).");
    m.def("extremal", [](const std::string& name, double beta, std::size_t n) {
        AbetaFunction f = name == "f1"           ? extremal_f1(beta, n)
                          : name == "f2"         ? extremal_f2(beta, n)
                          : name == "f3"         ? extremal_f3(beta, n)
                          : name == "diff-lower" ? extremal_diff_lower(beta, n)
                                                 : throw py::value_error("unknown extremal: " + name);
        return std::vector<Complex>(f.higher_coeffs().begin(), f.higher_coeffs().end());
    }, py::arg("name"), py::arg("beta"), py::arg("n") = 3);

    m.def("functional", [](const std::string& name, Complex x1, Complex x2, Complex x3,
                           Complex lam, double mu, double b1, Complex b2, double b3) {
        FunctionalParams params;
        params.fekete_szego = FeketeSzegoParams(lam, mu);
        params.psi = PsiParams(b1, b2, b3);
        return functional_value(functional_id(name), x1, x2, x3, params);
    }, py::arg("name"), py::arg("x1"), py::arg("x2"), py::arg("x3") = Complex{},
       py::arg("lam") = Complex{}, py::arg("mu") = 0.0, py::arg("b1") = 1.0,
       py::arg("b2") = Complex{}, py::arg("b3") = 0.0,
       "Modulus-type functional of (a2, a3, a4), or of (c1, c2, c3) for psi_plus/psi_minus.");

    m.def("bound_gamma", &bound_gamma, py::arg("m"), py::arg("beta"));
    m.def("bound_inverse", [](double beta) {
        const auto b = bound_inverse(beta);
        return py::make_tuple(b.A2, b.A3);
    }, py::arg("beta"));
    m.def("bound_log_inverse", [](double beta) {
        const auto b = bound_log_inverse(beta);
        return py::make_tuple(b.Gamma1, b.Gamma2);
    }, py::arg("beta"));
    m.def("bound_diff21", [](double beta) { return to_dict(bound_diff21(beta)); }, py::arg("beta"));
    m.def("bound_diff32", [](double beta) { return to_dict(bound_diff32(beta)); }, py::arg("beta"));
    m.def("bound_fekete_szego", [](Complex lam, double mu) {
        return to_dict(bound_fekete_szego(FeketeSzegoParams(lam, mu)));
    }, py::arg("lam"), py::arg("mu"));
    m.def("bound_psi_plus", [](double b1, Complex b2, double b3) {
        return to_dict(bound_psi_plus(PsiParams(b1, b2, b3)));
    }, py::arg("b1"), py::arg("b2"), py::arg("b3"));
    m.def("bound_psi_minus", [](double b1, Complex b2, double b3) {
        return to_dict(bound_psi_minus(PsiParams(b1, b2, b3)));
    }, py::arg("b1"), py::arg("b2"), py::arg("b3"));
    m.def("bound_ma_minda", &bound_ma_minda, py::arg("v"));
    m.def("diff32_threshold", &diff32_threshold);

    m.def("search", [](const std::string& name, double beta, const std::string& direction,
                       Complex lam, double mu, double b1, Complex b2, double b3, int grid,
                       int refine) {
        Objective obj{functional_id(name), beta, {}};
        obj.params.fekete_szego = FeketeSzegoParams(lam, mu);
        obj.params.psi = PsiParams(b1, b2, b3);
        const Direction dir = direction_of(direction);
        ExtremalSearchResult r;
        {
            py::gil_scoped_release release;
            r = search_opt(obj, dir, make_config(grid, refine));
        }
        return to_dict(r);
    }, py::arg("functional"), py::arg("beta") = 0.0, py::arg("direction") = "max",
       py::arg("lam") = Complex{}, py::arg("mu") = 0.0, py::arg("b1") = 1.0,
       py::arg("b2") = Complex{}, py::arg("b3") = 0.0, py::arg("grid") = 41,
       py::arg("refine") = 200);

    m.def("verify", [](const std::string& theorem, double beta, int part, Complex lam, double mu,
                       int grid, int refine) {
        TheoremParams p;
        p.beta = beta;
        p.part = part;
        p.fekete_szego = FeketeSzegoParams(lam, mu);
        const auto id = theorem_id(theorem);
        if (id == TheoremId::Lemma21) throw py::value_error("use verify_lemma21 for lemma2.1");
        return to_dict(verify_theorem(id, p, make_config(grid, refine)));
    }, py::arg("theorem"), py::arg("beta") = 0.0, py::arg("part") = 0,
       py::arg("lam") = Complex{1.0}, py::arg("mu") = 0.0, py::arg("grid") = 41,
       py::arg("refine") = 200);
    m.def("verify_lemma21", [](double b1, Complex b2, double b3, int grid, int refine) {
        return to_dict(verify_lemma21(PsiParams(b1, b2, b3), make_config(grid, refine)));
    }, py::arg("b1"), py::arg("b2"), py::arg("b3"), py::arg("grid") = 41,
       py::arg("refine") = 200);
    m.def("theorem_parts", [](const std::string& theorem) {
        return theorem_parts(theorem_id(theorem));
    }, py::arg("theorem"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
    m.def("format_number", &format_number, py::arg("x"));
}
