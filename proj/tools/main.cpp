// vres-workbench: command-line front end for the virtual-resolution toolkit.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vres/bracket.hpp"
#include "vres/parallel.hpp"
#include "vres/random_ideal.hpp"
#include "vres/shorten.hpp"

using nlohmann::json;
using namespace vres;

namespace {

constexpr const char* kExampleIdeal =
    "<x2*x3, x1^4*x2^2*x4, x0^2*x1^4*x4, x1^5*x2^2, x0^2*x1^5, x1^4*x3^3*x4, x1^5*x3^3>";

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCertificate = 4;

struct Options {
    std::string fan;
    std::string ideal;
    std::string ideal_file;
    std::string tau;
    std::string csv;
    std::uint32_t k = 0;
    std::int64_t p = 32003;
    std::uint64_t seed = 0;
    unsigned count = 25;
    bool json_out = false;
    bool require_smooth = false;
    bool unsafe_no_sat_check = false;
};

Fan load_fan(const std::string& which) {
    if (which.empty()) throw parse_error("no fan given; use --fan <builtin|path>");
    if (is_builtin_fan(which)) return builtin_fan(which);
    return load_fan_file(which);
}

MonomialIdeal load_ideal(const Options& o, const std::vector<std::string>& names) {
    std::string text = o.ideal;
    if (!o.ideal_file.empty()) {
        std::ifstream in(o.ideal_file);
        if (!in) throw parse_error("cannot open ideal file " + o.ideal_file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw parse_error("no ideal given; use --ideal or --ideal-file");
    return parse_ideal(text, names);
}

PrimeField field_of(const Options& o) {
    if (!is_prime(o.p)) throw parse_error("--char must be a prime");
    return PrimeField(o.p);
}

json betti_json(const BettiTable& t) {
    json rows = json::array();
    for (const auto& [key, v] : t.entries)
        rows.push_back({{"i", key.first}, {"degree", key.second}, {"value", v}});
    return {{"totals", t.totals()}, {"entries", rows}};
}

json certs_json(const std::vector<Certificate>& certs) {
    json out = json::array();
    for (const auto& c : certs)
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return out;
}

json label_json(const ConeLabel& l, const Fan& f) {
    json cone = json::array();
    for (int r : l.sigma) cone.push_back(f.ray_names()[std::size_t(r)]);
    return {{"cone", cone},
            {"cofactor", format_monomial(l.cofactor, f.ray_names())},
            {"quotient", format_ideal(l.quotient, f.ray_names())},
            {"label", format_ideal(l.label, f.ray_names())}};
}

void emit(const json& j, const Options& o) {
    if (o.json_out) std::cout << j.dump(2) << "\n";
}

std::string cone_names(const Fan& f, const Cone& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += f.ray_names()[std::size_t(c[i])];
    }
    return s + "}";
}

void print_certs(const std::vector<Certificate>& certs) {
    for (const auto& c : certs)
        std::printf("  [%s] %-26s %s\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
}

int resolve_tau(const Fan& f, const Options& o) {
    if (!o.tau.empty()) {
        int t = f.ray_index(o.tau);
        if (t < 0) throw precondition_error("unknown ray name " + o.tau);
        return t;
    }
    int t = default_tau(f);
    if (t < 0)
        throw precondition_error("no ray of this fan yields a nonempty reduced complex");
    return t;
}

// --- commands ---------------------------------------------------------------

int cmd_check_fan(const Options& o) {
    Fan f = load_fan(o.fan);
    FanValidation v = validate_fan(f, 1000, o.seed);
    json checks = json::array();
    for (const auto& c : v.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (!o.json_out)
            std::printf("  [%s] %-14s %s\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                        c.detail.c_str());
    }
    emit({{"schema", 1},
          {"command", "check-fan"},
          {"fan", o.fan},
          {"checks", checks},
          {"structural_ok", v.structural_ok},
          {"smooth", v.smooth}},
         o);
    return v.ok(o.require_smooth) ? 0 : 1;
}

int cmd_saturate(const Options& o) {
    Fan f = load_fan(o.fan);
    MonomialIdeal I = load_ideal(o, f.ray_names());
    if (I.is_zero()) {
        std::fprintf(stderr, "the zero ideal has no meaningful saturation here\n");
        return 1;
    }
    MonomialIdeal sat = saturate_by_ideal(I, f.irrelevant_ideal());
    std::string text = format_ideal(sat, f.ray_names());
    if (o.json_out)
        emit({{"schema", 1}, {"command", "saturate"}, {"saturation", text},
              {"already_saturated", sat == I}}, o);
    else
        std::printf("%s\n", text.c_str());
    return 0;
}

int cmd_betti(const Options& o) {
    PrimeField F = field_of(o);
    MonomialIdeal I = MonomialIdeal::zero(0);
    std::vector<std::string> names;
    if (o.fan.empty()) {
        // affine mode: variables inferred from the literal
        if (o.ideal.empty()) throw parse_error("no ideal given; use --ideal");
        auto [ideal, inferred] = parse_ideal_infer_names(o.ideal);
        I = ideal;
        names = inferred;
    } else {
        Fan f = load_fan(o.fan);
        names = f.ray_names();
        I = load_ideal(o, names);
    }
    if (I.is_zero() || I.is_unit())
        throw precondition_error("betti: the zero and unit ideals are out of scope");
    BettiTable t = betti_numbers(I, F).to_quotient(I.nvars());
    if (!o.json_out) {
        auto totals = t.totals();
        std::printf("betti totals of S/I:");
        for (auto b : totals) std::printf(" %zu", b);
        std::printf("\npdim S/I = %zu\n", totals.size() - 1);
        for (const auto& [key, v] : t.entries) {
            if (key.first == 0) continue;
            std::printf("  beta_%zu at %s = %zu\n", key.first,
                        format_monomial(Monomial(key.second), names).c_str(), v);
        }
    }
    emit({{"schema", 1}, {"command", "betti"}, {"betti", betti_json(t)},
          {"pdim", t.totals().size() - 1}}, o);
    return 0;
}

int cmd_bracket(const Options& o) {
    Fan f = load_fan(o.fan);
    PrimeField F = field_of(o);
    MonomialIdeal I = load_ideal(o, f.ray_names());
    BracketRun run = run_bracket(I, f, o.k, F, !o.unsafe_no_sat_check);
    if (!o.json_out) {
        std::printf("k = %u\n", run.k);
        for (const auto& l : run.labels)
            if (int(l.sigma.size()) == f.dim())
                std::printf("  %s -> %s * %s\n", cone_names(f, l.sigma).c_str(),
                            format_monomial(l.cofactor, f.ray_names()).c_str(),
                            format_ideal(l.quotient, f.ray_names()).c_str());
        print_certs(run.certificates);
        std::printf("pdim S/(I n B^[k]) = %zu (bound %d)\n", run.pdim, f.dim() + 1);
    }
    json labels = json::array();
    for (const auto& l : run.labels) labels.push_back(label_json(l, f));
    emit({{"schema", 1},
          {"command", "bracket"},
          {"bracket",
           {{"k", run.k},
            {"labels", labels},
            {"betti", betti_json(run.betti_quotient)},
            {"pdim", run.pdim},
            {"certificates", certs_json(run.certificates)}}}},
         o);
    return run.ok() ? 0 : kExitCertificate;
}

int cmd_shorten(const Options& o) {
    Fan f = load_fan(o.fan);
    PrimeField F = field_of(o);
    MonomialIdeal I = load_ideal(o, f.ray_names());
    int tau = resolve_tau(f, o);
    ShortRun run = run_short(I, f, tau, F, o.k, !o.unsafe_no_sat_check);
    if (!o.json_out) {
        std::printf("tau = %s, k = %u\n", f.ray_names()[std::size_t(tau)].c_str(), run.k);
        for (const auto& l : run.labels)
            if (int(l.sigma.size()) == f.dim())
                std::printf("  %s -> %s * %s\n", cone_names(f, l.sigma).c_str(),
                            format_monomial(l.cofactor, f.ray_names()).c_str(),
                            format_ideal(l.quotient, f.ray_names()).c_str());
        std::printf("J = %s\n", format_ideal(run.J, f.ray_names()).c_str());
        print_certs(run.certificates);
        std::printf("pdim S/J = %zu (bound %d); vpdim S/I <= %zu\n", run.pdim, f.dim(),
                    run.ok() ? report_vpdim_bound(run) : run.pdim);
    }
    json vertex_labels = json::array(), cell_labels = json::array();
    for (const auto& l : run.labels) {
        cell_labels.push_back(label_json(l, f));
        if (int(l.sigma.size()) == f.dim()) vertex_labels.push_back(label_json(l, f));
    }
    emit({{"schema", 1},
          {"command", "shorten"},
          {"short",
           {{"tau", f.ray_names()[std::size_t(tau)]},
            {"k", run.k},
            {"vertex_labels", vertex_labels},
            {"cell_labels", cell_labels},
            {"J", format_ideal(run.J, f.ray_names())},
            {"betti", betti_json(run.betti_quotient)},
            {"pdim", run.pdim},
            {"vpdim_upper_bound", run.pdim},
            {"saturation_ok", run.ok()},
            {"certificates", certs_json(run.certificates)}}}},
         o);
    return run.ok() ? 0 : kExitCertificate;
}

int cmd_verify(const Options& o) {
    Fan f = load_fan(o.fan);
    PrimeField F = field_of(o);
    MonomialIdeal I = load_ideal(o, f.ray_names());
    int tau = resolve_tau(f, o);

    BracketRun br = run_bracket(I, f, o.k, F, !o.unsafe_no_sat_check);
    ShortRun sr = run_short(I, f, tau, F, o.k, !o.unsafe_no_sat_check);
    StabilizationTable st = stabilization_sweep(I, f, br.k, br.k + 1, F);
    Certificate stab{"stabilization", st.rows[0].betti_totals == st.rows[1].betti_totals,
                     "total betti numbers at k and k+1"};
    if (!stab.pass) stab.detail += " differ";

    std::vector<Certificate> all = br.certificates;
    all.insert(all.end(), sr.certificates.begin(), sr.certificates.end());
    all.push_back(stab);
    bool pass = br.ok() && sr.ok() && stab.pass;
    if (!o.json_out) {
        print_certs(all);
        std::printf("pdim S/(I n B^[k]) = %zu, pdim S/J = %zu, verdict: %s\n", br.pdim, sr.pdim,
                    pass ? "pass" : "FAIL");
    }
    emit({{"schema", 1},
          {"command", "verify"},
          {"pass", pass},
          {"bracket", {{"k", br.k}, {"pdim", br.pdim}, {"certificates", certs_json(br.certificates)}}},
          {"short",
           {{"tau", f.ray_names()[std::size_t(tau)]},
            {"pdim", sr.pdim},
            {"certificates", certs_json(sr.certificates)}}},
          {"stabilization",
           {{"k", br.k}, {"pass", stab.pass}}}},
         o);
    return pass ? 0 : kExitCertificate;
}

struct CorpusRow {
    std::string fan;
    std::string ideal;
    std::size_t hash = 0;
    int n = 0;
    std::uint32_t k = 0;
    std::size_t pdim_bracket = 0, pdim_short = 0;
    std::uint32_t stabilized_k = 0;
    bool pass = false;
    std::string failure;
};

CorpusRow corpus_instance(const Fan& f, const std::string& fan_name, const MonomialIdeal& I,
                          const PrimeField& F) {
    CorpusRow row;
    row.fan = fan_name;
    row.ideal = format_ideal(I, f.ray_names());
    row.hash = std::hash<std::string>{}(row.ideal);
    row.n = f.dim();
    try {
        BracketRun br = run_bracket(I, f, 0, F);
        row.k = br.k;
        row.pdim_bracket = br.pdim;
        if (!br.ok() || br.strands.homology_only > 0) {
            row.failure = "bracket";
            return row;
        }
        int tau = default_tau(f);
        if (tau < 0) {
            row.failure = "no usable tau";
            return row;
        }
        ShortRun sr = run_short(I, f, tau, F);
        row.pdim_short = sr.pdim;
        if (!sr.ok() || sr.strands.homology_only > 0) {
            row.failure = "short";
            return row;
        }
        StabilizationTable st = stabilization_sweep(I, f, br.k, br.k + 1, F);
        if (st.rows[0].betti_totals != st.rows[1].betti_totals) {
            row.failure = "stabilization";
            return row;
        }
        row.stabilized_k = st.first_stable_k;
        // oracle equivalence and polarization invariance
        BettiTable direct = betti_from_minimal(minimize(taylor_complex(I), F));
        if (direct != betti_via_koszul_strands(I, F)) {
            row.failure = "betti oracle mismatch";
            return row;
        }
        Polarization pol = polarize(I, f.ray_names());
        if (betti_numbers(pol.ideal, F).totals() != direct.totals()) {
            row.failure = "polarization betti mismatch";
            return row;
        }
        row.pass = true;
    } catch (const std::exception& e) {
        row.failure = e.what();
    }
    return row;
}

int cmd_corpus(const Options& o) {
    PrimeField F = field_of(o);
    std::vector<std::string> fans =
        o.fan.empty() ? std::vector<std::string>{"p1p1", "p2p1", "hirzebruch2"}
                      : std::vector<std::string>{o.fan};
    std::vector<CorpusRow> rows;
    for (const auto& fan_name : fans) {
        Fan f = load_fan(fan_name);
        std::mt19937_64 rng(o.seed ^ std::hash<std::string>{}(fan_name));
        std::vector<MonomialIdeal> ideals;
        for (unsigned i = 0; i < o.count; ++i) ideals.push_back(random_b_saturated_ideal(f, rng));
        std::vector<CorpusRow> batch(ideals.size());
        parallel_for(ideals.size(),
                     [&](std::size_t i) { batch[i] = corpus_instance(f, fan_name, ideals[i], F); });
        rows.insert(rows.end(), batch.begin(), batch.end());
    }
    std::size_t failures = 0;
    for (const auto& r : rows)
        if (!r.pass) ++failures;
    if (!o.csv.empty()) {
        std::ofstream out(o.csv);
        out << "fan,ideal_hash,n,k,pdim_bracket,pdim_short,stabilized_k,pass\n";
        for (const auto& r : rows)
            out << r.fan << "," << std::hex << r.hash << std::dec << "," << r.n << "," << r.k
                << "," << r.pdim_bracket << "," << r.pdim_short << "," << r.stabilized_k << ","
                << (r.pass ? 1 : 0) << "\n";
    }
    if (!o.json_out) {
        for (const auto& r : rows)
            if (!r.pass)
                std::printf("  FAIL %s %s: %s\n", r.fan.c_str(), r.ideal.c_str(),
                            r.failure.c_str());
        std::printf("corpus: %zu instances, %zu failures\n", rows.size(), failures);
    }
    json jrows = json::array();
    for (const auto& r : rows)
        jrows.push_back({{"fan", r.fan},
                         {"n", r.n},
                         {"k", r.k},
                         {"pdim_bracket", r.pdim_bracket},
                         {"pdim_short", r.pdim_short},
                         {"stabilized_k", r.stabilized_k},
                         {"pass", r.pass}});
    emit({{"schema", 1}, {"command", "corpus"}, {"instances", jrows}, {"failures", failures}}, o);
    return failures == 0 ? 0 : kExitCertificate;
}

int cmd_demo(const Options& o) {
    if (!o.fan.empty() && o.fan != "p2p1")
        throw precondition_error("the demo is the bundled worked example on p2p1");
    Options d = o;
    d.fan = "p2p1";
    d.ideal = kExampleIdeal;
    d.tau = d.tau.empty() ? "x0" : d.tau;
    std::printf("input ideal I = %s\n\n== bracket pipeline ==\n", kExampleIdeal);
    int rc1 = cmd_bracket(d);
    std::printf("\n== shortened pipeline ==\n");
    Fan f = builtin_fan("p2p1");
    PrimeField F = field_of(d);
    MonomialIdeal I = parse_ideal(d.ideal, f.ray_names());
    ShortRun run = run_short(I, f, f.ray_index(d.tau), F, d.k);
    for (const auto& l : run.labels)
        if (int(l.sigma.size()) == f.dim())
            std::printf("  %s -> %s * %s\n", cone_names(f, l.sigma).c_str(),
                        format_monomial(l.cofactor, f.ray_names()).c_str(),
                        format_ideal(l.quotient, f.ray_names()).c_str());
    auto ranks = run.total.tot.ranks();
    std::printf("total complex ranks:");
    for (auto r : ranks) std::printf(" %zu", r);
    std::printf("\npdim S/J = %zu\n", run.pdim);
    return (rc1 == 0 && run.ok()) ? 0 : kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual resolution workbench for monomial ideals on toric varieties"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--fan", o.fan, "builtin fan name or fan file path");
        cmd->add_option("--ideal", o.ideal, "ideal literal, e.g. \"<x0^2, x1*x2>\"");
        cmd->add_option("--ideal-file", o.ideal_file, "file containing an ideal literal");
        cmd->add_option("--tau", o.tau, "ray name for the shortened pipeline");
        cmd->add_option("--k", o.k, "bracket exponent override (0 = automatic)");
        cmd->add_option("--char", o.p, "field characteristic (prime)");
        cmd->add_option("--seed", o.seed, "random seed");
        cmd->add_flag("--json", o.json_out, "emit a JSON report");
        cmd->add_flag("--require-smooth", o.require_smooth, "fail fan checks on non-smooth fans");
        cmd->add_flag("--unsafe-no-sat-check", o.unsafe_no_sat_check,
                      "skip the B-saturation precheck");
        return cmd;
    };

    auto* c_fan = add_common(app.add_subcommand("check-fan", "validate a fan"));
    auto* c_sat = add_common(app.add_subcommand("saturate", "saturate an ideal by B"));
    auto* c_betti = add_common(app.add_subcommand("betti", "Betti numbers of S/I"));
    auto* c_bracket = add_common(app.add_subcommand("bracket", "bracket-power pipeline"));
    auto* c_short = add_common(app.add_subcommand("shorten", "shortened pipeline"));
    auto* c_verify = add_common(app.add_subcommand("verify", "full certificate suite"));
    auto* c_corpus = add_common(app.add_subcommand("corpus", "randomized property suite"));
    c_corpus->add_option("--count", o.count, "instances per fan");
    c_corpus->add_option("--csv", o.csv, "write a CSV summary here");
    auto* c_demo = add_common(app.add_subcommand("demo", "run the bundled worked example"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (c_fan->parsed()) return cmd_check_fan(o);
        if (c_sat->parsed()) return cmd_saturate(o);
        if (c_betti->parsed()) return cmd_betti(o);
        if (c_bracket->parsed()) return cmd_bracket(o);
        if (c_short->parsed()) return cmd_shorten(o);
        if (c_verify->parsed()) return cmd_verify(o);
        if (c_corpus->parsed()) return cmd_corpus(o);
        if (c_demo->parsed()) return cmd_demo(o);
    } catch (const parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const precondition_error& e) {
        std::fprintf(stderr, "precondition failed: %s\n", e.what());
        return kExitPrecondition;
    } catch (const certificate_error& e) {
        std::fprintf(stderr, "certificate failed: %s\n", e.what());
        return kExitCertificate;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
