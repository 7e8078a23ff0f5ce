#include "vres/bracket.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vres/parallel.hpp"

namespace vres {

std::uint32_t choose_k(const MonomialIdeal& I) {
    if (I.is_zero()) throw precondition_error("choose_k: the zero ideal has no safe exponent");
    std::uint32_t m = 0;
    for (const auto& g : I.generators())
        for (std::size_t i = 0; i < g.nvars(); ++i) m = std::max(m, g[i]);
    return m + 1;
}

std::vector<ConeLabel> bracket_labels(const MonomialIdeal& I, const Fan& f, std::uint32_t k) {
    std::vector<Cone> cones(f.cones().begin(), f.cones().end());
    std::vector<ConeLabel> out(cones.size());
    parallel_for(cones.size(), [&](std::size_t i) {
        Monomial cof = f.complement_monomial(cones[i]).pow(k);
        MonomialIdeal quo = colon(I, cof);
        out[i] = {cones[i], cof, quo, scale(quo, cof)};
    });
    return out;
}

bool BracketRun::ok() const {
    return std::all_of(certificates.begin(), certificates.end(),
                       [](const Certificate& c) { return c.pass; });
}

namespace {

std::string cone_string(const Fan& f, const Cone& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += f.ray_names()[std::size_t(c[i])];
    }
    return s + "}";
}

}  // namespace

Certificate strand_certificate(const std::string& name, const StrandSummary& s) {
    if (!s.pass) return {name, false, "strand at " + s.witness + " is not contractible"};
    std::ostringstream os;
    os << s.nonempty << " nonempty strands over " << s.probes << " probe degrees";
    if (s.homology_only > 0)
        os << "; " << s.homology_only << " fell outside the combinatorial cases and passed by "
           << "homology only";
    return {name, true, os.str()};
}

StrandSummary summarize_strands(const LabeledComplex& lc, const PrimeField& F) {
    auto probes = lc.probe_degrees();
    std::vector<StrandCertificate> certs(probes.size());
    parallel_for(probes.size(), [&](std::size_t i) {
        certs[i] = certify_contractible(lc.complex(), lc.strand(probes[i]), F);
    });
    StrandSummary s;
    s.probes = probes.size();
    s.pass = true;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        switch (certs[i].kind) {
            case CertKind::EmptyStrand: break;
            case CertKind::HomologyOnly:
                ++s.homology_only;
                ++s.nonempty;
                break;
            case CertKind::NotContractible:
                ++s.nonempty;
                if (s.pass) {
                    s.pass = false;
                    s.witness = "probe degree #" + std::to_string(i);
                }
                break;
            default: ++s.nonempty;
        }
    }
    return s;
}

BracketRun run_bracket(const MonomialIdeal& I, const Fan& f, std::uint32_t k, const PrimeField& F,
                       bool check_saturated) {
    if (I.is_zero() || I.is_unit())
        throw precondition_error("bracket: the zero and unit ideals are out of scope");
    MonomialIdeal B = f.irrelevant_ideal();
    MonomialIdeal sat = saturate_by_ideal(I, B);
    if (sat.is_unit()) throw precondition_error("bracket: the input ideal is irrelevant");
    if (check_saturated && sat != I)
        throw precondition_error("bracket: input is not B-saturated; its saturation is " +
                                 format_ideal(sat, f.ray_names()));

    BracketRun run;
    run.input = I;
    std::uint32_t kmin = choose_k(I);
    run.k = k == 0 ? kmin : k;
    if (run.k < kmin)
        throw precondition_error("bracket: k = " + std::to_string(run.k) +
                                 " is below the safe threshold " + std::to_string(kmin));

    run.labels = bracket_labels(I, f, run.k);
    run.bracket_ideal = intersect(I, bracket_power(B, run.k));

    // (a) decomposition over maximal cones
    {
        MonomialIdeal s = MonomialIdeal::zero(I.nvars());
        for (const auto& l : run.labels)
            if (int(l.sigma.size()) == f.dim()) s = sum(s, l.label);
        bool pass = s == run.bracket_ideal;
        run.certificates.push_back(
            {"label_sum_decomposition", pass,
             pass ? "sum of maximal-cone labels equals the bracket intersection"
                  : "sum of maximal-cone labels is " + format_ideal(s, f.ray_names())});
        if (!pass) return run;
    }

    // (b) intersection law on cone pairs
    {
        bool pass = true;
        std::string witness;
        std::map<Cone, const MonomialIdeal*> by_cone;
        for (const auto& l : run.labels) by_cone[l.sigma] = &l.label;
        for (std::size_t i = 0; i < run.labels.size() && pass; ++i)
            for (std::size_t j = i + 1; j < run.labels.size() && pass; ++j) {
                Cone meet = Fan::intersect_cones(run.labels[i].sigma, run.labels[j].sigma);
                MonomialIdeal lhs = intersect(run.labels[i].label, run.labels[j].label);
                if (lhs != *by_cone.at(meet)) {
                    pass = false;
                    witness = cone_string(f, run.labels[i].sigma) + " vs " +
                              cone_string(f, run.labels[j].sigma);
                }
            }
        run.certificates.push_back({"intersection_law", pass,
                                    pass ? "checked all cone pairs" : "failed at " + witness});
        if (!pass) return run;
    }

    // (c) strand certificates, (d) total complex, (e) length bound
    CellComplex dual = CellComplex::dual(f);
    std::vector<MonomialIdeal> labels;
    for (std::size_t id = 0; id < dual.ncells(); ++id) {
        auto it = std::find_if(run.labels.begin(), run.labels.end(),
                               [&](const ConeLabel& l) { return l.sigma == dual.cone_of(id); });
        labels.push_back(it->label);
    }
    LabeledComplex lc(std::move(dual), std::move(labels));
    run.strands = summarize_strands(lc, F);
    run.certificates.push_back(strand_certificate("strand_contractibility", run.strands));
    if (!run.certificates.back().pass) return run;

    run.total = build_cellular_total_complex(lc, F);
    bool resolves = verify_resolution(run.total.tot, run.bracket_ideal, F);
    run.certificates.push_back({"total_complex_resolves", resolves,
                                resolves ? "strand-exact resolution of the bracket intersection"
                                         : "strand exactness failed"});
    if (!resolves) return run;

    run.betti_quotient =
        betti_from_minimal(minimize(run.total.tot, F)).to_quotient(I.nvars());
    auto totals = run.betti_quotient.totals();
    run.pdim = 0;
    for (std::size_t i = 0; i < totals.size(); ++i)
        if (totals[i] > 0) run.pdim = i;
    std::size_t n = std::size_t(f.dim());
    bool bound = run.pdim <= n + 1;
    bool top = totals.size() <= n + 1 || totals[n + 1] <= 1;
    std::ostringstream os;
    os << "pdim = " << run.pdim << ", bound " << n + 1;
    if (totals.size() > n + 1) os << ", top Betti number " << totals[n + 1];
    run.certificates.push_back({"length_bound", bound && top, os.str()});
    return run;
}

StabilizationTable stabilization_sweep(const MonomialIdeal& I, const Fan& f, std::uint32_t kmin,
                                       std::uint32_t kmax, const PrimeField& F) {
    if (I.is_zero() || I.is_unit())
        throw precondition_error("stabilization: the zero and unit ideals are out of scope");
    if (kmin == 0 || kmin > kmax) throw precondition_error("stabilization: bad k range");
    MonomialIdeal B = f.irrelevant_ideal();
    StabilizationTable t;
    t.rows.resize(kmax - kmin + 1);
    parallel_for(t.rows.size(), [&](std::size_t i) {
        std::uint32_t k = kmin + std::uint32_t(i);
        MonomialIdeal bk = intersect(I, bracket_power(B, k));
        t.rows[i] = {k, betti_numbers(bk, F).to_quotient(I.nvars()).totals()};
    });
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        bool stable = true;
        for (std::size_t j = i + 1; j < t.rows.size(); ++j)
            stable = stable && t.rows[j].betti_totals == t.rows[i].betti_totals;
        if (stable) {
            t.first_stable_k = t.rows[i].k;
            break;
        }
    }
    return t;
}

}  // namespace vres
