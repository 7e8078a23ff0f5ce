#include "vres/shorten.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vres/parallel.hpp"

namespace vres {

namespace {

Cone with_ray(const Cone& sigma, int tau) {
    Cone out = sigma;
    auto it = std::lower_bound(out.begin(), out.end(), tau);
    if (it == out.end() || *it != tau) out.insert(it, tau);
    return out;
}

std::string cone_string(const Fan& f, const Cone& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += f.ray_names()[std::size_t(c[i])];
    }
    return s + "}";
}

}  // namespace

std::vector<Cone> s_of_sigma(const Fan& f, const Cone& sigma, int tau) {
    Cone cap = with_ray(sigma, tau);
    if (f.is_cone(cap))
        throw precondition_error("S(sigma): sigma together with the chosen ray is a cone, so "
                                 "[sigma] is not a cell of the reduced complex");
    std::vector<Cone> out;
    for (const auto& gamma : f.cones())
        if (std::includes(cap.begin(), cap.end(), gamma.begin(), gamma.end())) out.push_back(gamma);
    return out;
}

std::vector<Cone> s_of_sigma_maximal(const Fan& f, const Cone& sigma, int tau) {
    auto all = s_of_sigma(f, sigma, tau);
    std::vector<Cone> out;
    for (const auto& g : all) {
        bool maximal = true;
        for (const auto& h : all)
            if (h.size() > g.size() && std::includes(h.begin(), h.end(), g.begin(), g.end()))
                maximal = false;
        if (maximal) out.push_back(g);
    }
    return out;
}

MonomialIdeal j_tilde(const MonomialIdeal& I, const Fan& f, const Cone& sigma, int tau,
                      std::uint32_t k) {
    MonomialIdeal out = MonomialIdeal::unit_ideal(I.nvars());
    MonomialIdeal colon_form = MonomialIdeal::unit_ideal(I.nvars());
    for (const auto& gamma : s_of_sigma_maximal(f, sigma, tau)) {
        Monomial hat = f.complement_monomial(gamma);
        out = intersect(out, saturate_by_monomial(I, hat));
        colon_form = intersect(colon_form, colon(I, hat.pow(k)));
    }
    if (out != colon_form)
        throw certificate_error("j_tilde: saturation and k-th colon forms disagree at cell " +
                                cone_string(f, sigma));
    return out;
}

ConeLabel j_label(const MonomialIdeal& I, const Fan& f, const Cone& sigma, int tau,
                  std::uint32_t k) {
    // x_(sigma+tau)-hat: sigma + {tau} is deliberately not a cone here, so
    // the complement is built directly
    std::vector<std::uint32_t> e(f.nrays(), 1);
    for (int idx : sigma) e[std::size_t(idx)] = 0;
    e[std::size_t(tau)] = 0;
    Monomial cof = Monomial(std::move(e)).pow(k);
    MonomialIdeal quo = j_tilde(I, f, sigma, tau, k);
    return {sigma, cof, quo, scale(quo, cof)};
}

int default_tau(const Fan& f) {
    for (std::size_t r = 0; r < f.nrays(); ++r) {
        try {
            (void)CellComplex::tilde(f, int(r));
            return int(r);
        } catch (const arithmetic_error&) {
        }
    }
    return -1;
}

bool ShortRun::ok() const {
    return std::all_of(certificates.begin(), certificates.end(),
                       [](const Certificate& c) { return c.pass; });
}

ShortRun run_short(const MonomialIdeal& I, const Fan& f, int tau, const PrimeField& F,
                   std::uint32_t k, bool check_saturated) {
    if (I.is_zero() || I.is_unit())
        throw precondition_error("shorten: the zero and unit ideals are out of scope");
    MonomialIdeal B = f.irrelevant_ideal();
    MonomialIdeal sat = saturate_by_ideal(I, B);
    if (sat.is_unit()) throw precondition_error("shorten: the input ideal is irrelevant");
    if (check_saturated && sat != I)
        throw precondition_error("shorten: input is not B-saturated; its saturation is " +
                                 format_ideal(sat, f.ray_names()) +
                                 " (the pipeline cannot be iterated on unsaturated output)");
    if (tau < 0 || tau >= int(f.nrays()))
        throw precondition_error("shorten: unknown ray index for tau");

    ShortRun run;
    run.input = I;
    run.tau = tau;
    std::uint32_t kmin = choose_k(I);
    run.k = k == 0 ? kmin : k;
    if (run.k < kmin)
        throw precondition_error("shorten: k = " + std::to_string(run.k) +
                                 " is below the safe threshold " + std::to_string(kmin));

    CellComplex tilde = [&] {
        try {
            return CellComplex::tilde(f, tau);
        } catch (const arithmetic_error& e) {
            throw precondition_error(std::string("shorten: ") + e.what());
        }
    }();

    run.labels.resize(tilde.ncells());
    parallel_for(tilde.ncells(), [&](std::size_t id) {
        run.labels[id] = j_label(I, f, tilde.cone_of(id), tau, run.k);
    });

    const int n = f.dim();
    run.J = MonomialIdeal::zero(I.nvars());
    for (const auto& l : run.labels)
        if (int(l.sigma.size()) == n) run.J = sum(run.J, l.label);

    // (a) label intersection law on pairs whose meet is a cell
    {
        bool pass = true;
        std::string witness;
        std::map<Cone, const MonomialIdeal*> by_cone;
        for (const auto& l : run.labels) by_cone[l.sigma] = &l.label;
        for (std::size_t i = 0; i < run.labels.size() && pass; ++i)
            for (std::size_t j = i + 1; j < run.labels.size() && pass; ++j) {
                Cone meet = Fan::intersect_cones(run.labels[i].sigma, run.labels[j].sigma);
                auto it = by_cone.find(meet);
                if (it == by_cone.end()) continue;
                if (intersect(run.labels[i].label, run.labels[j].label) != *it->second) {
                    pass = false;
                    witness = cone_string(f, run.labels[i].sigma) + " vs " +
                              cone_string(f, run.labels[j].sigma);
                }
            }
        run.certificates.push_back({"label_intersection_law", pass,
                                    pass ? "checked all cell pairs with a common cell meet"
                                         : "failed at " + witness});
        if (!pass) return run;
    }

    LabeledComplex lc(tilde, [&] {
        std::vector<MonomialIdeal> labels;
        for (const auto& l : run.labels) labels.push_back(l.label);
        return labels;
    }());

    // (c) strand dichotomy
    run.strands = summarize_strands(lc, F);
    run.certificates.push_back(strand_certificate("strand_dichotomy", run.strands));
    if (!run.certificates.back().pass) return run;

    // (d) sandwich and saturation
    {
        MonomialIdeal bk = intersect(I, bracket_power(B, run.k));
        bool lower = run.J.contains_ideal(bk);
        bool upper = I.contains_ideal(run.J);
        bool satJ = saturate_by_ideal(run.J, B) == I;
        bool pass = lower && upper && satJ;
        std::ostringstream os;
        if (pass)
            os << "bracket intersection within J within I, and J : B^infinity = I";
        else
            os << "lower=" << lower << " upper=" << upper << " saturation=" << satJ;
        run.certificates.push_back({"sandwich_saturation", pass, os.str()});
        if (!pass) return run;
    }

    // (e) total complex, per-cell length bounds, final bound
    run.total = build_cellular_total_complex(lc, F);
    {
        bool pass = true;
        std::string witness;
        for (const auto& cell : run.total.cells) {
            std::size_t cell_pdim = cell.ranks.empty() ? 0 : cell.ranks.size() - 1;
            if (cell_pdim + 1 > cell.cone.size()) {  // pdim J_sigma <= dim sigma - 1
                pass = false;
                witness = cone_string(f, cell.cone);
            }
        }
        run.certificates.push_back({"per_cell_length", pass,
                                    pass ? "every cell resolution fits its cone dimension"
                                         : "failed at " + witness});
        if (!pass) return run;
    }
    bool resolves = verify_resolution(run.total.tot, run.J, F);
    run.certificates.push_back({"total_complex_resolves", resolves,
                                resolves ? "strand-exact resolution of J"
                                         : "strand exactness failed"});
    if (!resolves) return run;

    run.betti_quotient = betti_from_minimal(minimize(run.total.tot, F)).to_quotient(I.nvars());
    auto totals = run.betti_quotient.totals();
    run.pdim = 0;
    for (std::size_t i = 0; i < totals.size(); ++i)
        if (totals[i] > 0) run.pdim = i;
    bool bound = run.pdim <= std::size_t(n);
    run.certificates.push_back({"length_bound", bound,
                                "pdim = " + std::to_string(run.pdim) + ", bound " +
                                    std::to_string(n)});
    return run;
}

std::size_t report_vpdim_bound(const ShortRun& run) {
    if (!run.ok()) throw precondition_error("vpdim bound: the run did not pass its certificates");
    return run.pdim;
}

}  // namespace vres
