#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vres/bracket.hpp"
#include "vres/cell_complex.hpp"

using namespace vres;

TEST_CASE("dual complex of p1p1") {
    Fan f = builtin_fan("p1p1");
    CellComplex cc = CellComplex::dual(f);
    CHECK(cc.ncells() == 9);  // 1 + 4 + 4 cones
    int id_origin = cc.cell_index(Cone{});
    REQUIRE(id_origin >= 0);
    CHECK(cc.cell_dim(std::size_t(id_origin)) == 2);
    CHECK(cc.boundary(std::size_t(id_origin)).size() == 4);  // one edge per ray
    for (const Cone& mc : f.maximal_cones()) {
        int id = cc.cell_index(mc);
        REQUIRE(id >= 0);
        CHECK(cc.cell_dim(std::size_t(id)) == 0);
        CHECK(cc.boundary(std::size_t(id)).empty());
    }
    CHECK(cc.cell_index(Cone{0, 1}) == -1);  // not a cone of the fan
}

TEST_CASE("boundary squares to zero and edge boundaries cancel") {
    for (const std::string name : {"p1", "p2", "p1p1", "p2p1", "hirzebruch2"}) {
        CAPTURE(name);
        Fan f = builtin_fan(name);
        CellComplex cc = CellComplex::dual(f);
        CHECK(cc.boundary_squares_to_zero(PrimeField(2)));
        CHECK(cc.boundary_squares_to_zero(PrimeField(32003)));
        // the all-ones augmentation needs each 1-cell's vertex incidences to
        // cancel; this is what the orientation rescaling buys
        for (std::size_t id = 0; id < cc.ncells(); ++id) {
            if (cc.cell_dim(id) != 1) continue;
            int sum = 0;
            for (auto [tgt, sign] : cc.boundary(id)) {
                CHECK(cc.cell_dim(std::size_t(tgt)) == 0);
                sum += sign;
            }
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("reduced subcomplex for p2p1 and tau = x0") {
    Fan f = builtin_fan("p2p1");
    CellComplex t = CellComplex::tilde(f, f.ray_index("x0"));
    CHECK(t.is_tilde());
    CHECK(t.tau() == 0);
    // a triangle: three maximal cones away from x0, three shared facets, and
    // the ray cone {x4} as the single 2-cell
    CHECK(t.ncells() == 7);
    std::size_t by_dim[3] = {0, 0, 0};
    for (std::size_t id = 0; id < t.ncells(); ++id) ++by_dim[t.cell_dim(id)];
    CHECK(by_dim[0] == 3);
    CHECK(by_dim[1] == 3);
    CHECK(by_dim[2] == 1);
    CHECK(t.cell_index(Cone{4}) >= 0);
    CHECK(t.boundary_squares_to_zero(PrimeField(32003)));
    CHECK_THROWS_AS(CellComplex::tilde(f, 99), arithmetic_error);
}

TEST_CASE("labels, strands and contractibility certificates") {
    Fan f = builtin_fan("p1");
    auto names = f.ray_names();
    CellComplex cc = CellComplex::dual(f);
    std::vector<MonomialIdeal> labels(cc.ncells(), MonomialIdeal::zero(2));
    labels[std::size_t(cc.cell_index(Cone{0}))] = parse_ideal("<x1^2>", names);
    labels[std::size_t(cc.cell_index(Cone{1}))] = parse_ideal("<x0^2>", names);
    labels[std::size_t(cc.cell_index(Cone{}))] = parse_ideal("<x0^2*x1^2>", names);
    LabeledComplex lc(cc, labels);
    PrimeField F(32003);

    auto at = [&](const char* m) { return lc.strand(parse_monomial(m, names)); };
    CHECK(at("x0^2*x1^2").size() == 3);
    CHECK(at("x1^2").size() == 1);
    CHECK(at("1").empty());

    CHECK(certify_contractible(cc, at("x0^2*x1^2"), F).kind == CertKind::WholeComplex);
    CHECK(certify_contractible(cc, at("x1^2"), F).kind == CertKind::ClosureOfCell);
    CHECK(certify_contractible(cc, at("1"), F).kind == CertKind::EmptyStrand);

    // two vertices without the edge: not contractible, reduced H_0 = 1
    std::vector<std::size_t> pts{std::size_t(cc.cell_index(Cone{0})),
                                 std::size_t(cc.cell_index(Cone{1}))};
    StrandCertificate cert = certify_contractible(cc, pts, F);
    CHECK(cert.kind == CertKind::NotContractible);
    REQUIRE(!cert.homology.empty());
    CHECK(cert.homology[0] == 1);
    CHECK(homology_dims(cc, pts, F)[0] == 1);

    // probe degrees are the joins of the label generators
    auto probes = lc.probe_degrees();
    CHECK(probes.size() == 3);

    // a label violating containment along a face relation is rejected
    labels[std::size_t(cc.cell_index(Cone{}))] = parse_ideal("<x0>", names);
    CHECK_THROWS_AS(LabeledComplex(cc, labels), arithmetic_error);
}

TEST_CASE("join closure is the lcm lattice") {
    std::vector<std::string> xy{"x", "y"};
    std::vector<Monomial> gens{parse_monomial("x^2", xy), parse_monomial("x*y", xy),
                               parse_monomial("y^3", xy)};
    auto joins = join_closure(gens);
    // x^2, xy, y^3, x^2y, xy^3, x^2y^3
    CHECK(joins.size() == 6);
    CHECK_THROWS_AS(join_closure(gens, 4), arithmetic_error);
}
