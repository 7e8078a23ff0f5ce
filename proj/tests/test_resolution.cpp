#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vres/free_complex.hpp"

using namespace vres;

namespace {
const std::vector<std::string> XY{"x", "y"};
const PrimeField F(32003);

MonomialIdeal ideal(const std::string& s, const std::vector<std::string>& names = XY) {
    return parse_ideal(s, names);
}
}  // namespace

TEST_CASE("taylor complex of three generators") {
    MonomialIdeal I = ideal("<x^2, x*y, y^3>");
    FreeComplex t = taylor_complex(I);
    CHECK(t.ranks() == std::vector<std::size_t>{3, 3, 1});
    CHECK(t.length() == 2);
    check_complex(t, F);
    CHECK(verify_resolution(t, I, F));
    // the top subset carries the lcm of everything
    CHECK(t.basis[2][0] == Multidegree{2, 3});
    // corrupting one scalar must be caught
    FreeComplex bad = t;
    bad.diff[2].set(0, 0, 7);
    CHECK_THROWS_AS(check_complex(bad, F), arithmetic_error);
}

TEST_CASE("minimization reaches the minimal betti numbers") {
    MonomialIdeal I = ideal("<x^2, x*y, y^3>");
    FreeComplex m = minimize(taylor_complex(I), F);
    check_complex(m, F);
    CHECK(m.ranks() == std::vector<std::size_t>{3, 2});
    CHECK(verify_resolution(m, I, F));
    BettiTable b = betti_from_minimal(m);
    CHECK(b.totals() == std::vector<std::size_t>{3, 2});
    // multigraded: first syzygies at x^2*y and x*y^3
    CHECK(b.entries.at({1, Multidegree{2, 1}}) == 1);
    CHECK(b.entries.at({1, Multidegree{1, 3}}) == 1);
    BettiTable q = b.to_quotient(2);
    CHECK(q.totals() == std::vector<std::size_t>{1, 3, 2});
    CHECK(pdim_quotient(I, F) == 2);
}

TEST_CASE("independent betti oracles agree") {
    for (const char* text : {"<x^2, y^2>", "<x*y^2, x^2*y>", "<x^2, x*y, y^3>",
                             "<x^3, x^2*y, x*y^2, y^3>", "<x^4*y, x*y^4, x^2*y^2>"}) {
        CAPTURE(text);
        MonomialIdeal I = ideal(text);
        BettiTable direct = betti_from_minimal(minimize(taylor_complex(I), F));
        CHECK(direct == betti_via_koszul_strands(I, F));
        CHECK(direct == betti_numbers(I, F));
        CHECK(direct == betti_via_koszul_strands(I, PrimeField(2)));
    }
}

TEST_CASE("regular sequence and almost complete intersection") {
    CHECK(betti_numbers(ideal("<x^2, y^2>"), F).to_quotient(2).totals() ==
          std::vector<std::size_t>{1, 2, 1});
    CHECK(betti_numbers(ideal("<x*y^2, x^2*y>"), F).to_quotient(2).totals() ==
          std::vector<std::size_t>{1, 2, 1});
    std::vector<std::string> xyz{"x", "y", "z"};
    CHECK(betti_numbers(ideal("<x, y, z>", xyz), F).to_quotient(3).totals() ==
          std::vector<std::size_t>{1, 3, 3, 1});  // the Koszul complex
    CHECK(pdim_quotient(ideal("<x*y^2, x^2*y>"), F) == 2);
    CHECK_THROWS(pdim_quotient(MonomialIdeal::zero(2), F));
    CHECK_THROWS(pdim_quotient(MonomialIdeal::unit_ideal(2), F));
}

TEST_CASE("verify_resolution rejects a non-resolution") {
    MonomialIdeal I = ideal("<x^2, y^2>");
    FreeComplex m = minimize(taylor_complex(I), F);
    CHECK(verify_resolution(m, I, F));
    CHECK_FALSE(verify_resolution(m, ideal("<x, y^2>"), F));
    // chop off the syzygy: no longer exact
    FreeComplex chopped = m;
    chopped.basis.pop_back();
    chopped.diff.pop_back();
    CHECK_FALSE(verify_resolution(chopped, I, F));
}

TEST_CASE("lifting an inclusion through minimal resolutions") {
    MonomialIdeal small = ideal("<x^2*y^2>");
    MonomialIdeal big = ideal("<x^2, y^2>");
    FreeComplex rs = minimize(taylor_complex(small), F);
    FreeComplex rb = minimize(taylor_complex(big), F);
    ChainMap m = lift_inclusion(rs, rb, F);
    check_chain_map(m, rs, rb, F);
    // a generator outside the target ideal cannot be lifted
    CHECK_THROWS(lift_inclusion(minimize(taylor_complex(ideal("<x>")), F), rb, F));
}

TEST_CASE("taylor comparison map commutes") {
    MonomialIdeal src = ideal("<x^2*y, x*y^2>");
    MonomialIdeal dst = ideal("<x^2, y>");
    ChainMap m = taylor_comparison_map(src, dst, F);
    check_chain_map(m, taylor_complex(src), taylor_complex(dst), F);
}

TEST_CASE("small cellular total complex") {
    Fan f = builtin_fan("p1");
    auto names = f.ray_names();
    CellComplex cc = CellComplex::dual(f);
    std::vector<MonomialIdeal> labels(cc.ncells(), MonomialIdeal::zero(2));
    labels[std::size_t(cc.cell_index(Cone{0}))] = parse_ideal("<x1^2>", names);
    labels[std::size_t(cc.cell_index(Cone{1}))] = parse_ideal("<x0^2>", names);
    labels[std::size_t(cc.cell_index(Cone{}))] = parse_ideal("<x0^2*x1^2>", names);
    LabeledComplex lc(cc, labels);
    TotalComplexResult r = build_cellular_total_complex(lc, F);
    check_complex(r.tot, F);
    CHECK(r.tot.ranks() == std::vector<std::size_t>{2, 1});
    CHECK(verify_resolution(r.tot, parse_ideal("<x0^2, x1^2>", names), F));
    CHECK(r.cells.size() == 3);
}
