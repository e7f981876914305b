#include "abeta/bounds.hpp"
#include "abeta/cli.hpp"
#include "abeta/verifier.hpp"

#include <doctest.h>

#include <sstream>

using namespace abeta;

TEST_CASE("perturbation shifts the named bound only") {
    testing::set_bound_perturbation("gamma2", 0.01);
    CHECK(bound_gamma(2, 0.0) == doctest::Approx(1.0 / 3 + 0.01));
    CHECK(bound_gamma(1, 0.0) == 0.5);
    testing::clear_bound_perturbations();
    CHECK(bound_gamma(2, 0.0) == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(testing::set_bound_perturbation("gamma7", 0.01), std::invalid_argument);
}

TEST_CASE("a perturbed constant fails verification in either direction") {
    TheoremParams p;
    p.beta = 0.25;
    p.part = 3;
    CHECK(verify_theorem(TheoremId::Thm21, p).pass());
    for (double delta : {1e-2, -1e-2}) {
        testing::set_bound_perturbation("gamma3", delta);
        const auto r = verify_theorem(TheoremId::Thm21, p);
        CHECK_FALSE(r.pass());
        // Lowering the bound is caught as a violation; raising it as lost sharpness.
        if (delta < 0) CHECK_FALSE(r.no_violation);
        else CHECK_FALSE(r.sharp);
        testing::clear_bound_perturbations();
    }
}

TEST_CASE("cli accepts the hidden perturbation flag in this build") {
    std::ostringstream out, err;
    CHECK(run_cli({"--perturb-bound", "diff21_upper", "0.01", "verify", "--theorem", "thm3.1"}, out, err) == 1);
    std::ostringstream out2, err2;
    CHECK(run_cli({"verify", "--theorem", "thm3.1"}, out2, err2) == 0);
    std::ostringstream out3, err3;
    CHECK(run_cli({"--perturb-bound", "nope", "0.01", "bounds"}, out3, err3) == 2);
}
