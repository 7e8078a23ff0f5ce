#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vres/cell_complex.hpp"
#include "vres/fan.hpp"
#include "vres/free_complex.hpp"
#include "vres/monomial.hpp"

namespace vres {

/// Thrown when a pipeline's input contract is violated (unsaturated or
/// degenerate ideal, invalid fan, bad parameters).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal certificate fails on input that passed the
/// preconditions; carries the witness in the message.
class certificate_error : public std::runtime_error {
public:
    explicit certificate_error(const std::string& what) : std::runtime_error(what) {}
};

struct Certificate {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// smallest safe bracket exponent: 1 + the largest single-variable exponent
/// over the generators. Throws on the zero ideal.
std::uint32_t choose_k(const MonomialIdeal& I);

/// strand certification summary over the probe degrees of a labeled complex.
struct StrandSummary {
    std::size_t probes = 0;
    std::size_t nonempty = 0;
    std::size_t homology_only = 0;  // contractible, but by no combinatorial case
    bool pass = false;              // no strand failed outright
    std::string witness;            // first failing probe, if any
};

StrandSummary summarize_strands(const LabeledComplex& lc, const PrimeField& F);

/// pass/fail certificate line for a strand summary.
Certificate strand_certificate(const std::string& name, const StrandSummary& s);

/// label of one cone in factored form: cofactor * quotient, with the expanded
/// ideal alongside.
struct ConeLabel {
    Cone sigma;
    Monomial cofactor = Monomial(std::size_t(0));
    MonomialIdeal quotient = MonomialIdeal::zero(0);
    MonomialIdeal label = MonomialIdeal::zero(0);
};

/// labels I_sigma = I intersect <x_sigma-hat^k> = x_sigma-hat^k * (I : x_sigma-hat^k)
/// for every cone of the fan, sorted by cone.
std::vector<ConeLabel> bracket_labels(const MonomialIdeal& I, const Fan& f, std::uint32_t k);

struct BracketRun {
    MonomialIdeal input = MonomialIdeal::zero(0);
    std::uint32_t k = 0;
    std::vector<ConeLabel> labels;       // all cones
    MonomialIdeal bracket_ideal = MonomialIdeal::zero(0);  // I intersect B^[k]
    TotalComplexResult total;
    BettiTable betti_quotient;           // of S/(I intersect B^[k])
    std::size_t pdim = 0;
    StrandSummary strands;
    std::vector<Certificate> certificates;

    bool ok() const;
};

/// The whole pipeline on the dual complex of the fan: labels, strand
/// certificates, total complex, resolution verification and the length bound
/// pdim S/(I intersect B^[k]) <= n+1 with top Betti number <= 1.
/// k = 0 means choose_k(I). Throws precondition_error on bad input and
/// certificate_error on internal inconsistency.
BracketRun run_bracket(const MonomialIdeal& I, const Fan& f, std::uint32_t k, const PrimeField& F,
                       bool check_saturated = true);

struct StabilizationRow {
    std::uint32_t k = 0;
    std::vector<std::size_t> betti_totals;  // of S/(I intersect B^[k])
};

struct StabilizationTable {
    std::vector<StabilizationRow> rows;
    /// smallest k in the sweep from which all later rows agree; 0 if the
    /// sweep never settles.
    std::uint32_t first_stable_k = 0;
};

/// total Betti numbers of S/(I intersect B^[k]) for k in [kmin, kmax].
StabilizationTable stabilization_sweep(const MonomialIdeal& I, const Fan& f, std::uint32_t kmin,
                                       std::uint32_t kmax, const PrimeField& F);

}  // namespace vres
