#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vres/monomial.hpp"

using namespace vres;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Monomial mono(const std::string& s, const std::vector<std::string>& names = XYZ) {
    return parse_monomial(s, names);
}
MonomialIdeal ideal(const std::string& s, const std::vector<std::string>& names = XYZ) {
    return parse_ideal(s, names);
}
}  // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a = mono("x^2*y");
    Monomial b = mono("y^3*z");
    CHECK(lcm(a, b) == mono("x^2*y^3*z"));
    CHECK(gcd(a, b) == mono("y"));
    CHECK(a.times(b) == mono("x^2*y^4*z"));
    CHECK(a.pow(3) == mono("x^6*y^3"));
    CHECK(a.quotient_by_gcd(b) == mono("x^2"));
    CHECK(b.quotient_by_gcd(a) == mono("y^2*z"));
    CHECK(mono("x*y").divides(a));
    CHECK_FALSE(a.divides(mono("x*y")));
    CHECK(a.zero_on_support(mono("y*z")) == mono("x^2"));
    CHECK(lcm(a, b).divide_exact(a) == mono("y^2*z"));
    CHECK_THROWS_AS(a.divide_exact(b), arithmetic_error);
}

TEST_CASE("overflow is rejected, not wrapped") {
    Monomial big(std::vector<std::uint32_t>{4000000000u});
    CHECK_THROWS_AS(big.times(big), arithmetic_error);
    CHECK_THROWS_AS(big.pow(2), arithmetic_error);
}

TEST_CASE("minimal generators are canonical") {
    // x^2*y is redundant over x*y; generators come out lex-sorted
    MonomialIdeal I = MonomialIdeal::make(
        3, {mono("x^2*y"), mono("x*y"), mono("z^2"), mono("x*y")});
    CHECK(I.generators().size() == 2);
    CHECK(I == ideal("<x*y, z^2>"));
    CHECK(format_ideal(I, XYZ) == "<z^2, x*y>");
    CHECK(I.contains(mono("x^3*y*z")));
    CHECK_FALSE(I.contains(mono("x^3*z")));
}

TEST_CASE("zero and unit ideals") {
    CHECK(MonomialIdeal::zero(3).is_zero());
    CHECK(MonomialIdeal::unit_ideal(3).is_unit());
    CHECK(ideal("<0>") == MonomialIdeal::zero(3));
    CHECK(ideal("<1>") == MonomialIdeal::unit_ideal(3));
    CHECK(sum(ideal("<x>"), ideal("<1>")).is_unit());
    CHECK(intersect(ideal("<x>"), ideal("<0>")).is_zero());
}

TEST_CASE("intersection and sum") {
    MonomialIdeal a = ideal("<x^2, y>");
    MonomialIdeal b = ideal("<x, y^3>");
    CHECK(intersect(a, b) == ideal("<x^2, x*y, y^3>"));
    CHECK(sum(a, b) == ideal("<x, y>"));
    // distributivity spot check
    MonomialIdeal c = ideal("<z>");
    CHECK(intersect(sum(a, c), sum(b, c)).contains_ideal(sum(intersect(a, b), c)));
}

TEST_CASE("colon and saturation") {
    MonomialIdeal I = ideal("<x^2*y, y^2*z, z^3>");
    CHECK(colon(I, mono("y")) == ideal("<x^2, y*z, z^3>"));
    CHECK(colon(I, mono("x^5")) == ideal("<y, z^3>"));
    CHECK(saturate_by_monomial(I, mono("z")) == ideal("<1>"));
    CHECK(saturate_by_monomial(I, mono("x")) == ideal("<y, z^3>"));
    // saturating by an ideal intersects the single-monomial saturations
    MonomialIdeal J = ideal("<x, z>");
    CHECK(saturate_by_ideal(I, J) ==
          intersect(saturate_by_monomial(I, mono("x")), saturate_by_monomial(I, mono("z"))));
    // idempotence
    MonomialIdeal s = saturate_by_ideal(I, J);
    CHECK(saturate_by_ideal(s, J) == s);
}

TEST_CASE("bracket power and scaling") {
    MonomialIdeal I = ideal("<x*y, z^2>");
    CHECK(bracket_power(I, 3) == ideal("<x^3*y^3, z^6>"));
    CHECK(bracket_power(I, 1) == I);
    CHECK(scale(I, mono("x*z")) == ideal("<x^2*y*z, x*z^3>"));
    CHECK(scale(MonomialIdeal::unit_ideal(3), mono("x")) == ideal("<x>"));
}

TEST_CASE("polarization is squarefree and depolarizes back") {
    MonomialIdeal I = ideal("<x^2, x*y, y^3>", XY);
    Polarization p = polarize(I, XY);
    for (const auto& g : p.ideal.generators())
        for (std::size_t v = 0; v < g.nvars(); ++v) CHECK(g[v] <= 1);
    CHECK(depolarize(p, 2) == I);
    CHECK(p.names.size() == p.ideal.nvars());
    CHECK(p.origin.size() == p.ideal.nvars());
}

TEST_CASE("parse and format round trip") {
    MonomialIdeal I = ideal("<x^2*y, z^4, x*y*z>");
    CHECK(parse_ideal(format_ideal(I, XYZ), XYZ) == I);
    CHECK(format_monomial(Monomial::unit(3), XYZ) == "1");
    auto [J, names] = parse_ideal_infer_names("<a^2*b, c>");
    CHECK(names == std::vector<std::string>{"a", "b", "c"});
    CHECK(J.nvars() == 3);
    CHECK_THROWS_AS(ideal("<x^2"), parse_error);
    CHECK_THROWS_AS(ideal("<w>"), parse_error);
    CHECK_THROWS_AS(parse_monomial("x^", XYZ), parse_error);
}
