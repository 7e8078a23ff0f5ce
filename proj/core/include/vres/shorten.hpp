#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vres/bracket.hpp"
#include "vres/cell_complex.hpp"
#include "vres/fan.hpp"
#include "vres/free_complex.hpp"
#include "vres/monomial.hpp"

namespace vres {

/// S(sigma): all cones of the fan whose rays lie in sigma + {tau}. Throws if
/// sigma + {tau} is itself a cone (then [sigma] is not a cell of the reduced
/// complex).
std::vector<Cone> s_of_sigma(const Fan& f, const Cone& sigma, int tau);

/// inclusion-maximal elements of s_of_sigma; intersecting over these suffices.
std::vector<Cone> s_of_sigma_maximal(const Fan& f, const Cone& sigma, int tau);

/// J~_sigma: intersection over the maximal gamma in S(sigma) of the
/// saturations I : x_gamma-hat^infinity; equal by choice of k to the
/// intersection of the plain colons I : x_gamma-hat^k, which is asserted.
MonomialIdeal j_tilde(const MonomialIdeal& I, const Fan& f, const Cone& sigma, int tau,
                      std::uint32_t k);

/// J_sigma = x_(sigma+tau)-hat^k * J~_sigma in factored form.
ConeLabel j_label(const MonomialIdeal& I, const Fan& f, const Cone& sigma, int tau,
                  std::uint32_t k);

/// first ray (in file order) whose reduced complex is nonempty; -1 if none.
int default_tau(const Fan& f);

struct ShortRun {
    MonomialIdeal input = MonomialIdeal::zero(0);
    int tau = -1;
    std::uint32_t k = 0;
    std::vector<ConeLabel> labels;      // cells of the reduced complex
    MonomialIdeal J = MonomialIdeal::zero(0);  // sum of the vertex labels
    TotalComplexResult total;
    BettiTable betti_quotient;          // of S/J
    std::size_t pdim = 0;
    StrandSummary strands;
    std::vector<Certificate> certificates;

    bool ok() const;
};

/// The shortened pipeline: reduced complex for tau, labels J_sigma, label
/// intersection law, per-cell length bounds, strand certificates, the
/// sandwich I intersect B^[k] within J within I with J : B^infinity = I, and
/// the total complex with pdim S/J <= n. k = 0 means choose_k(I).
ShortRun run_short(const MonomialIdeal& I, const Fan& f, int tau, const PrimeField& F,
                   std::uint32_t k = 0, bool check_saturated = true);

/// length of the produced complex: an upper bound on the virtual projective
/// dimension of S/I. Never a minimality claim.
std::size_t report_vpdim_bound(const ShortRun& run);

}  // namespace vres
