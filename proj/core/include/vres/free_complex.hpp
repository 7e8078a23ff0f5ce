#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "vres/cell_complex.hpp"
#include "vres/modp.hpp"
#include "vres/monomial.hpp"

namespace vres {

using Multidegree = std::vector<std::uint32_t>;

/// Sparse scalar matrix with row and column adjacency. In a multigraded free
/// complex every entry's monomial is implied by the basis multidegrees, so
/// only the scalar is stored.
class SMat {
public:
    SMat() : rows_(0), cols_(0) {}
    SMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bycol_(cols), byrow_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, std::int64_t v);
    void add(std::size_t r, std::size_t c, std::int64_t v, const PrimeField& F);

    const std::map<std::size_t, std::int64_t>& col(std::size_t c) const { return bycol_[c]; }
    const std::set<std::size_t>& cols_of_row(std::size_t r) const { return byrow_[r]; }

    void clear_row(std::size_t r);
    void clear_col(std::size_t c);

    std::size_t nonzeros() const;

private:
    std::size_t rows_, cols_;
    std::vector<std::map<std::size_t, std::int64_t>> bycol_;
    std::vector<std::set<std::size_t>> byrow_;
};

/// A multigraded complex of free modules F_0 <- F_1 <- ... together with an
/// augmentation F_0 -> S sending each basis element e to aug[e] * x^mdeg(e).
/// diff[i] maps basis[i] to basis[i-1]; diff[0] is unused.
struct FreeComplex {
    std::vector<std::vector<Multidegree>> basis;
    std::vector<SMat> diff;
    std::vector<std::int64_t> aug;

    std::size_t length() const { return basis.empty() ? 0 : basis.size() - 1; }
    std::vector<std::size_t> ranks() const;
};

/// throws unless entries are degree-compatible, d^2 = 0 and aug . d_1 = 0.
void check_complex(const FreeComplex& fc, const PrimeField& F);

/// Taylor complex of a monomial ideal: basis = nonempty subsets of the
/// minimal generators, multidegree = lcm of the subset.
FreeComplex taylor_complex(const MonomialIdeal& I, std::size_t generator_cap = 20);

/// Gaussian cancellation of unit entries; the result has no scalar entries
/// between equal multidegrees. Rank vector = Betti numbers when the input
/// resolves its augmentation image.
FreeComplex minimize(const FreeComplex& fc, const PrimeField& F);

struct BettiTable {
    std::map<std::pair<std::size_t, Multidegree>, std::size_t> entries;

    std::vector<std::size_t> totals() const;
    /// shift ideal Betti numbers to the S/I convention: beta_0(S/I) = 1 at
    /// degree 0, beta_{i+1, a}(S/I) = beta_{i, a}(I).
    BettiTable to_quotient(std::size_t nvars) const;
    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

/// Betti numbers of a minimal complex, read off from basis multidegrees.
BettiTable betti_from_minimal(const FreeComplex& fc);

/// Independent oracle: multigraded Betti numbers of the ideal from reduced
/// homology of upper Koszul simplicial complexes over the lcm lattice.
BettiTable betti_via_koszul_strands(const MonomialIdeal& I, const PrimeField& F);

/// Betti numbers of the ideal by the cheaper of the two routes.
BettiTable betti_numbers(const MonomialIdeal& I, const PrimeField& F);

/// projective dimension of S/I; rejects the zero and unit ideal.
std::size_t pdim_quotient(const MonomialIdeal& I, const PrimeField& F);

/// true iff fc is exact in positive degrees and its degree-0 cokernel is I,
/// checked strand-by-strand over the join lattice of basis multidegrees.
bool verify_resolution(const FreeComplex& fc, const MonomialIdeal& I, const PrimeField& F);

/// A chain map between free complexes, one scalar matrix per homological
/// degree (map[i]: src basis[i] -> dst basis[i]).
using ChainMap = std::vector<SMat>;

/// Lift the inclusion of augmentation images through the two resolutions by
/// strand-level linear algebra; requires every src degree-0 basis monomial to
/// lie in the ideal resolved by dst. Commutation is guaranteed by
/// construction and asserted.
ChainMap lift_inclusion(const FreeComplex& src, const FreeComplex& dst, const PrimeField& F);

/// The combinatorial comparison map between Taylor complexes of ideals
/// src ideal within dst ideal: each generator maps to the lex-first divisor,
/// subsets map with simplicial signs, degenerate subsets to zero.
ChainMap taylor_comparison_map(const MonomialIdeal& src, const MonomialIdeal& dst,
                               const PrimeField& F);

/// throws unless m commutes with the differentials and augmentations.
void check_chain_map(const ChainMap& m, const FreeComplex& src, const FreeComplex& dst,
                     const PrimeField& F);

struct CellResolutionInfo {
    Cone cone;
    MonomialIdeal label;
    std::vector<std::size_t> ranks;
};

struct TotalComplexResult {
    FreeComplex tot;
    std::vector<CellResolutionInfo> cells;  // indexed like the labeled complex
};

/// Resolve every cell label minimally, lift the incidence maps, correct the
/// higher squares by chain homotopies, and assemble the total complex. The
/// result is a free complex whose degree-0 homology is the sum of the vertex
/// labels; d^2 = 0 is asserted.
TotalComplexResult build_cellular_total_complex(const LabeledComplex& lc, const PrimeField& F,
                                                std::size_t taylor_cap = 20);

}  // namespace vres
