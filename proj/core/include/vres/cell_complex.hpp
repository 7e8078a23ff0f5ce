#pragma once

#include <optional>
#include <vector>

#include "vres/fan.hpp"
#include "vres/modp.hpp"
#include "vres/monomial.hpp"

namespace vres {

/// The cell complex dual to the cone poset of a fan (or its subcomplex
/// obtained by removing every cell [sigma] such that sigma together with a
/// chosen ray forms a cone). Cells are fan cones; a cell [sigma] has
/// cell_dim = n - dim(sigma), and [sigma] is a face of [gamma] iff
/// gamma is contained in sigma.
class CellComplex {
public:
    static CellComplex dual(const Fan& f);
    /// subcomplex on cells [sigma] with sigma + {tau} not a cone; throws if
    /// tau is unknown or the subcomplex is empty.
    static CellComplex tilde(const Fan& f, int tau);

    const Fan& fan() const { return *fan_; }
    bool is_tilde() const { return tau_.has_value(); }
    int tau() const { return *tau_; }

    std::size_t ncells() const { return cells_.size(); }
    const Cone& cone_of(std::size_t id) const { return cells_[id]; }
    int cell_dim(std::size_t id) const { return fan_->dim() - int(cells_[id].size()); }
    int cell_index(const Cone& c) const;  // -1 if absent

    /// boundary of [gamma]: the cells [gamma + {rho}] present in the complex,
    /// with simplicial sign (-1)^(position of rho in the sorted larger cone).
    const std::vector<std::pair<int, int>>& boundary(std::size_t id) const { return boundary_[id]; }

    /// checks d^2 = 0 for the full chain complex over F_p.
    bool boundary_squares_to_zero(const PrimeField& F) const;

private:
    CellComplex(const Fan& f, std::vector<Cone> cells, std::optional<int> tau);
    const Fan* fan_;
    std::vector<Cone> cells_;
    std::optional<int> tau_;
    std::vector<std::vector<std::pair<int, int>>> boundary_;
};

/// A cell complex with a monomial-ideal label per cell. Construction checks
/// label containment along the face relation.
class LabeledComplex {
public:
    LabeledComplex(CellComplex complex, std::vector<MonomialIdeal> labels);

    const CellComplex& complex() const { return complex_; }
    const MonomialIdeal& label(std::size_t id) const { return labels_[id]; }
    const std::vector<MonomialIdeal>& labels() const { return labels_; }

    /// cells active at multidegree alpha, i.e. whose label contains x^alpha.
    std::vector<std::size_t> strand(const Monomial& alpha) const;

    /// joins of label generators; the degrees at which strands can change.
    std::vector<Monomial> probe_degrees(std::size_t cap = 200000) const;

private:
    CellComplex complex_;
    std::vector<MonomialIdeal> labels_;
};

/// Reduced homology dimensions of a strand subcomplex over F_p, indexed by
/// cell dimension 0..n. The empty subcomplex reports all zeros.
std::vector<std::size_t> homology_dims(const CellComplex& cc,
                                       const std::vector<std::size_t>& active,
                                       const PrimeField& F);

enum class CertKind { ClosureOfCell, WholeComplex, HomologyOnly, NotContractible, EmptyStrand };

struct StrandCertificate {
    CertKind kind;
    Cone cell;                               // for ClosureOfCell
    std::vector<std::size_t> homology;       // for HomologyOnly / NotContractible
};

/// Contractibility certificate for a strand: closure-of-a-cell or the whole
/// complex when that holds combinatorially, otherwise a homology check.
StrandCertificate certify_contractible(const CellComplex& cc,
                                       const std::vector<std::size_t>& active,
                                       const PrimeField& F);

/// join closure of a set of monomials (the lcm lattice), capped.
std::vector<Monomial> join_closure(const std::vector<Monomial>& gens, std::size_t cap = 200000);

}  // namespace vres
