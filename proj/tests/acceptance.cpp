// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures. Expected values are frozen from the bundled worked example and
// from independent hand computations.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "vres/bracket.hpp"
#include "vres/parallel.hpp"
#include "vres/random_ideal.hpp"
#include "vres/shorten.hpp"

using namespace vres;

namespace {

const char* kExampleIdeal =
    "<x2*x3, x1^4*x2^2*x4, x0^2*x1^4*x4, x1^5*x2^2, x0^2*x1^5, x1^4*x3^3*x4, x1^5*x3^3>";

struct Check {
    bool pass = true;
    std::string why;
    void expect(bool cond, const std::string& msg) {
        if (!cond && pass) {
            pass = false;
            why = msg;
        }
    }
};

MonomialIdeal expect_label(const Fan& f, const std::string& cofactor, const std::string& quot) {
    return scale(parse_ideal(quot, f.ray_names()), parse_monomial(cofactor, f.ray_names()));
}

const ConeLabel* find_label(const std::vector<ConeLabel>& labels, const Cone& sigma) {
    for (const auto& l : labels)
        if (l.sigma == sigma) return &l;
    return nullptr;
}

// 1. the six maximal-cone bracket labels of the worked example at k = 6
void criterion1(Check& c) {
    Fan f = builtin_fan("p2p1");
    MonomialIdeal I = parse_ideal(kExampleIdeal, f.ray_names());
    BracketRun run = run_bracket(I, f, 6, PrimeField(32003));
    c.expect(run.k == 6, "k override not honored");
    const std::vector<std::pair<Cone, MonomialIdeal>> expected = {
        {{0, 1, 2}, expect_label(f, "x3^6*x4^6", "<x2, x1^4>")},
        {{0, 2, 3}, expect_label(f, "x1^6*x4^6", "<x2*x3, x2^2, x0^2, x3^3>")},
        {{0, 1, 3}, expect_label(f, "x2^6*x4^6", "<x3, x1^4>")},
        {{1, 2, 4}, expect_label(f, "x0^6*x3^6", "<x2, x1^4*x4, x1^5>")},
        {{2, 3, 4}, expect_label(f, "x0^6*x1^6", "<1>")},
        {{1, 3, 4}, expect_label(f, "x0^6*x2^6", "<x3, x1^4*x4, x1^5>")},
    };
    for (const auto& [sigma, want] : expected) {
        const ConeLabel* l = find_label(run.labels, sigma);
        c.expect(l != nullptr, "missing maximal-cone label");
        if (l) c.expect(l->label == want, "label mismatch on a maximal cone");
    }
    c.expect(run.ok(), "a bracket certificate failed");
}

ShortRun example_short(std::int64_t p) {
    Fan f = builtin_fan("p2p1");
    MonomialIdeal I = parse_ideal(kExampleIdeal, f.ray_names());
    return run_short(I, f, f.ray_index("x0"), PrimeField(p));
}

// 2. the three vertex labels of the shortened pipeline at tau = x0. The
// third label is the one the definitions force: it must lie inside the input
// ideal, and only then are all the pairwise label intersections principal.
void criterion2(Check& c) {
    Fan f = builtin_fan("p2p1");
    ShortRun run = example_short(32003);
    const std::vector<std::pair<Cone, MonomialIdeal>> expected = {
        {{2, 3, 4}, expect_label(f, "x1^6", "<x2*x3, x2^2, x0^2, x3^3>")},
        {{1, 3, 4}, expect_label(f, "x2^6", "<x3, x1^4*x4, x1^5>")},
        {{1, 2, 4}, expect_label(f, "x3^6", "<x2, x1^4*x4, x1^5>")},
    };
    for (const auto& [sigma, want] : expected) {
        const ConeLabel* l = find_label(run.labels, sigma);
        c.expect(l != nullptr, "missing vertex label");
        if (l) {
            c.expect(l->label == want, "vertex label mismatch");
            c.expect(run.input.contains_ideal(l->label), "vertex label escapes the input ideal");
        }
    }
}

// 3. minimal rank vectors per vertex, principal intersections, total ranks
// (10, 14, 5); identical at p = 2 and p = 32003
void criterion3(Check& c) {
    Fan f = builtin_fan("p2p1");
    ShortRun a = example_short(32003);
    ShortRun b = example_short(2);
    const std::vector<std::pair<Cone, std::vector<std::size_t>>> expected = {
        {{2, 3, 4}, {4, 5, 2}},
        {{1, 3, 4}, {3, 3, 1}},
        {{1, 2, 4}, {3, 3, 1}},
    };
    for (const ShortRun* run : {&a, &b}) {
        for (const auto& [sigma, want] : expected) {
            bool found = false;
            for (const auto& cell : run->total.cells)
                if (cell.cone == sigma) {
                    found = true;
                    c.expect(cell.ranks == want, "vertex resolution ranks differ");
                }
            c.expect(found, "missing vertex cell");
        }
        c.expect(run->total.tot.ranks() == std::vector<std::size_t>{10, 14, 5},
                 "total complex ranks differ from (10, 14, 5)");
    }
    c.expect(a.betti_quotient == b.betti_quotient, "betti tables differ between p=2 and p=32003");
    // all pairwise and triple intersections of the vertex labels are principal
    std::vector<MonomialIdeal> J;
    for (const auto& [sigma, unused] : expected)
        J.push_back(find_label(a.labels, sigma)->label);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            c.expect(intersect(J[i], J[j]).generators().size() == 1,
                     "a pairwise intersection is not principal");
    c.expect(intersect(intersect(J[0], J[1]), J[2]).generators().size() == 1,
             "the triple intersection is not principal");
}

// 4. pdim S/J = 3 = n and J : B-infinity recovers the input exactly
void criterion4(Check& c) {
    Fan f = builtin_fan("p2p1");
    ShortRun run = example_short(32003);
    c.expect(run.pdim == 3, "pdim S/J is not 3");
    c.expect(saturate_by_ideal(run.J, f.irrelevant_ideal()) == run.input,
             "J does not saturate back to the input");
    c.expect(run.ok(), "a shortened-pipeline certificate failed");
}

// 5. pdim S/(I n B^[6]) <= 4 with top betti number <= 1
void criterion5(Check& c) {
    Fan f = builtin_fan("p2p1");
    MonomialIdeal I = parse_ideal(kExampleIdeal, f.ray_names());
    BracketRun run = run_bracket(I, f, 6, PrimeField(32003));
    c.expect(run.pdim <= 4, "pdim exceeds n+1");
    auto totals = run.betti_quotient.totals();
    c.expect(totals.size() <= 5, "resolution longer than n+1");
    if (totals.size() == 5) c.expect(totals[4] <= 1, "top betti number exceeds 1");
}

// 6. two small complete intersections in two variables
void criterion6(Check& c) {
    PrimeField F(32003);
    std::vector<std::string> xy{"x", "y"};
    auto totals = [&](const char* text) {
        return betti_numbers(parse_ideal(text, xy), F).to_quotient(2).totals();
    };
    c.expect(totals("<x^2, y^2>") == std::vector<std::size_t>{1, 2, 1},
             "betti of S/<x^2, y^2> differ from (1, 2, 1)");
    c.expect(totals("<x*y^2, x^2*y>") == std::vector<std::size_t>{1, 2, 1},
             "betti of S/<x*y^2, x^2*y> differ from (1, 2, 1)");
}

// 7. randomized property suite: 25 saturated ideals on each bundled surface
// and threefold, all invariants, fixed seed
void criterion7(Check& c) {
    PrimeField F(32003);
    for (const std::string fan_name : {"p1p1", "p2p1", "hirzebruch2"}) {
        Fan f = builtin_fan(fan_name);
        std::mt19937_64 rng(20260823 ^ std::hash<std::string>{}(fan_name));
        std::vector<MonomialIdeal> ideals;
        for (int i = 0; i < 25; ++i) ideals.push_back(random_b_saturated_ideal(f, rng));
        std::vector<std::string> failures(ideals.size());
        parallel_for(ideals.size(), [&](std::size_t i) {
            const MonomialIdeal& I = ideals[i];
            try {
                BracketRun br = run_bracket(I, f, 0, F);
                if (!br.ok()) throw certificate_error("bracket certificates");
                if (br.pdim > std::size_t(f.dim()) + 1) throw certificate_error("bracket length");
                if (br.strands.homology_only > 0)
                    throw certificate_error("a strand needed a homology fallback");
                int tau = default_tau(f);
                ShortRun sr = run_short(I, f, tau, F);
                if (!sr.ok()) throw certificate_error("short certificates");
                if (sr.pdim > std::size_t(f.dim())) throw certificate_error("short length");
                if (sr.strands.homology_only > 0)
                    throw certificate_error("a reduced strand needed a homology fallback");
                if (saturate_by_ideal(sr.J, f.irrelevant_ideal()) != I)
                    throw certificate_error("J saturation");
                StabilizationTable st = stabilization_sweep(I, f, br.k, br.k + 1, F);
                if (st.rows[0].betti_totals != st.rows[1].betti_totals)
                    throw certificate_error("stabilization");
                BettiTable direct = betti_from_minimal(minimize(taylor_complex(I), F));
                if (direct != betti_via_koszul_strands(I, F))
                    throw certificate_error("betti oracle mismatch");
                Polarization pol = polarize(I, f.ray_names());
                if (betti_numbers(pol.ideal, F).totals() != direct.totals())
                    throw certificate_error("polarization betti mismatch");
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        });
        for (std::size_t i = 0; i < ideals.size(); ++i)
            c.expect(failures[i].empty(),
                     fan_name + ": " + format_ideal(ideals[i], f.ray_names()) + ": " + failures[i]);
    }
}

// 8. fan validation: bundled fans pass; each mutation class is detected with
// the matching failure class
void criterion8(Check& c) {
    for (const std::string name : {"p1", "p2", "p1p1", "p2p1", "hirzebruch2"}) {
        FanValidation v = validate_fan(builtin_fan(name), 500, 1);
        c.expect(v.ok(true), "bundled fan " + name + " fails validation");
    }
    auto named = [](const FanValidation& v, const std::string& name) {
        for (const auto& ck : v.checks)
            if (ck.name == name) return ck.pass;
        return false;
    };
    FanValidation dropped = validate_fan(
        parse_fan("dim 2\nray x0 1 0\nray x1 -1 0\nray x2 0 1\nray x3 0 -1\n"
                  "cone x0 x2\ncone x0 x3\ncone x1 x2\n"),
        500, 1);
    c.expect(!dropped.structural_ok && !named(dropped, "facet_pairing"),
             "a dropped maximal cone went undetected");
    FanValidation dependent = validate_fan(
        parse_fan("dim 2\nray a 1 0\nray b -1 0\nray c 0 1\nray d 0 -1\n"
                  "cone a b\ncone b c\ncone a c\ncone a d\ncone b d\n"),
        500, 1);
    c.expect(!dependent.structural_ok && !named(dependent, "simplicial"),
             "dependent rays went undetected");
    FanValidation singular = validate_fan(
        parse_fan("dim 2\nray a 1 0\nray b 0 1\nray c -1 -2\n"
                  "cone a b\ncone b c\ncone a c\n"),
        500, 1);
    c.expect(singular.structural_ok && !singular.smooth && !named(singular, "smooth"),
             "a non-unimodular cone went undetected");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"bracket labels of the worked example at k = 6", criterion1},
        {"shortened vertex labels at tau = x0", criterion2},
        {"rank vectors (4,5,2), (3,3,1), (3,3,1), total (10,14,5), both fields", criterion3},
        {"pdim S/J = 3 = n and J saturates back to the input", criterion4},
        {"pdim of the bracket quotient <= 4 with top betti <= 1", criterion5},
        {"two-variable micro examples, betti (1,2,1)", criterion6},
        {"property suite: 25 random saturated ideals on each bundled fan", criterion7},
        {"fan validation and the three mutation classes", criterion8},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        std::printf("[%s] criterion %zu: %s (%.0f ms)%s%s\n", c.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), ms, c.pass ? "" : " -- ",
                    c.pass ? "" : c.why.c_str());
        if (!c.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures;
}
