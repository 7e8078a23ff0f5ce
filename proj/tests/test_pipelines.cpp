#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vres/bracket.hpp"
#include "vres/random_ideal.hpp"
#include "vres/shorten.hpp"

using namespace vres;

namespace {
const PrimeField F(32003);
}

TEST_CASE("choose_k is one more than the largest exponent") {
    std::vector<std::string> xy{"x", "y"};
    CHECK(choose_k(parse_ideal("<x^3*y, y^2>", xy)) == 4);
    CHECK(choose_k(parse_ideal("<x*y>", xy)) == 2);
    CHECK_THROWS(choose_k(MonomialIdeal::zero(2)));
}

TEST_CASE("bracket labels factor and nest on p1p1") {
    Fan f = builtin_fan("p1p1");
    MonomialIdeal I = parse_ideal("<x0*x2>", f.ray_names());
    std::uint32_t k = choose_k(I);
    auto labels = bracket_labels(I, f, k);
    CHECK(labels.size() == f.cones().size());
    MonomialIdeal B = f.irrelevant_ideal();
    for (const auto& l : labels) {
        // definition: I_sigma = I intersect <x_sigma-hat^k>, in factored form
        Monomial h = f.complement_monomial(l.sigma).pow(k);
        CHECK(l.cofactor == h);
        CHECK(l.label == intersect(I, MonomialIdeal::make(4, {h})));
        CHECK(l.label == scale(l.quotient, l.cofactor));
        CHECK(I.contains_ideal(l.label));
    }
}

TEST_CASE("bracket pipeline on p1p1 passes every certificate") {
    Fan f = builtin_fan("p1p1");
    MonomialIdeal I = parse_ideal("<x0*x2>", f.ray_names());
    BracketRun run = run_bracket(I, f, 0, F);
    CHECK(run.k == 2);
    CHECK(run.ok());
    for (const auto& c : run.certificates) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    CHECK(run.bracket_ideal == intersect(I, bracket_power(f.irrelevant_ideal(), run.k)));
    CHECK(run.pdim <= std::size_t(f.dim()) + 1);
    CHECK(run.strands.pass);
    CHECK(run.strands.homology_only == 0);
    CHECK(verify_resolution(run.total.tot, run.bracket_ideal, F));
    // both fields give the same totals
    BracketRun run2 = run_bracket(I, f, 0, PrimeField(2));
    CHECK(run2.betti_quotient.totals() == run.betti_quotient.totals());
}

TEST_CASE("bracket preconditions") {
    Fan f = builtin_fan("p1p1");
    auto names = f.ray_names();
    CHECK_THROWS_AS(run_bracket(MonomialIdeal::zero(4), f, 0, F), precondition_error);
    CHECK_THROWS_AS(run_bracket(MonomialIdeal::unit_ideal(4), f, 0, F), precondition_error);
    // not B-saturated: <x0^2*x2, x0*x1*x2> saturates to <x0*x2>
    CHECK_THROWS_AS(run_bracket(parse_ideal("<x0^2*x2, x0*x1*x2>", names), f, 0, F),
                    precondition_error);
    // the irrelevant ideal itself is not saturated either
    CHECK_THROWS_AS(run_bracket(f.irrelevant_ideal(), f, 0, F), precondition_error);
    // k below the safe threshold
    CHECK_THROWS_AS(run_bracket(parse_ideal("<x0^3*x2^3>", names), f, 2, F),
                    precondition_error);
    // with the saturation check off, the unsaturated input is processed
    BracketRun run = run_bracket(parse_ideal("<x0^2*x2, x0*x1*x2>", names), f, 0, F, false);
    CHECK(run.k >= 3);
}

TEST_CASE("stabilization sweep settles immediately on a saturated input") {
    Fan f = builtin_fan("p1p1");
    // the ideal of two torus-fixed points, hence saturated
    MonomialIdeal I = parse_ideal("<x0*x1, x0*x3, x1*x2, x2*x3>", f.ray_names());
    REQUIRE(saturate_by_ideal(I, f.irrelevant_ideal()) == I);
    std::uint32_t k = choose_k(I);
    StabilizationTable st = stabilization_sweep(I, f, k, k + 2, F);
    REQUIRE(st.rows.size() == 3);
    CHECK(st.rows[0].k == k);
    CHECK(st.rows[0].betti_totals == st.rows[1].betti_totals);
    CHECK(st.rows[1].betti_totals == st.rows[2].betti_totals);
    CHECK(st.first_stable_k == k);
}

TEST_CASE("S(sigma) enumeration on p2p1") {
    Fan f = builtin_fan("p2p1");
    int tau = f.ray_index("x0");
    Cone sigma{1, 2, 4};
    auto all = s_of_sigma(f, sigma, tau);
    // every cone inside {x0,x1,x2,x4}
    for (const auto& c : all) CHECK(f.is_cone(c));
    auto maximal = s_of_sigma_maximal(f, sigma, tau);
    CHECK(maximal == std::vector<Cone>{{0, 1, 2}, {1, 2, 4}});
    // sigma + {tau} a cone means [sigma] is not a reduced-complex cell
    CHECK_THROWS_AS(s_of_sigma(f, Cone{1, 2}, tau), precondition_error);
}

TEST_CASE("shortened pipeline on p2p1 passes every certificate") {
    Fan f = builtin_fan("p2p1");
    MonomialIdeal I = parse_ideal("<x2*x3, x0^2*x4^2>", f.ray_names());
    REQUIRE(saturate_by_ideal(I, f.irrelevant_ideal()) == I);
    int tau = default_tau(f);
    REQUIRE(tau == 0);
    ShortRun run = run_short(I, f, tau, F);
    CHECK(run.ok());
    for (const auto& c : run.certificates) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    CHECK(run.pdim <= std::size_t(f.dim()));
    CHECK(report_vpdim_bound(run) == run.pdim);
    CHECK(saturate_by_ideal(run.J, f.irrelevant_ideal()) == I);
    CHECK(I.contains_ideal(run.J));
    CHECK(run.J.contains_ideal(intersect(I, bracket_power(f.irrelevant_ideal(), run.k))));
    CHECK(verify_resolution(run.total.tot, run.J, F));
}

TEST_CASE("shortened pipeline preconditions") {
    Fan f = builtin_fan("p2p1");
    auto names = f.ray_names();
    MonomialIdeal I = parse_ideal("<x2*x3, x0^2*x4^2>", names);
    CHECK_THROWS_AS(run_short(I, f, 99, F), precondition_error);
    CHECK_THROWS_AS(run_short(MonomialIdeal::zero(5), f, 0, F), precondition_error);
    CHECK_THROWS_AS(run_short(parse_ideal("<x0^2*x2, x0*x1*x2>", builtin_fan("p1p1").ray_names()),
                              builtin_fan("p1p1"), 0, F),
                    precondition_error);
}

TEST_CASE("random saturated ideals are reproducible and saturated") {
    Fan f = builtin_fan("p1p1");
    std::mt19937_64 rng1(42), rng2(42);
    MonomialIdeal a = random_b_saturated_ideal(f, rng1);
    MonomialIdeal b = random_b_saturated_ideal(f, rng2);
    CHECK(a == b);
    CHECK(saturate_by_ideal(a, f.irrelevant_ideal()) == a);
    CHECK_FALSE(a.is_zero());
    CHECK_FALSE(a.is_unit());
    CHECK(a.generators().size() <= 12);
    // successive draws differ
    CHECK(random_b_saturated_ideal(f, rng1) != a);
}
