#include "vres/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace vres {

CellComplex::CellComplex(const Fan& f, std::vector<Cone> cells, std::optional<int> tau)
    : fan_(&f), cells_(std::move(cells)), tau_(tau) {
    std::sort(cells_.begin(), cells_.end());
    boundary_.resize(cells_.size());
    std::map<Cone, int> index;
    for (std::size_t i = 0; i < cells_.size(); ++i) index[cells_[i]] = int(i);
    // Incidence signs: simplicial coboundary sign, rescaled by a coherent
    // orientation on the maximal-cone cells so that the signed incidences
    // into each vertex cell cancel per edge cell. That makes the all-ones
    // augmentation on vertex cells compatible with the boundary.
    std::map<Cone, int> eta;
    {
        auto o = f.orientation();
        for (std::size_t k = 0; k < f.maximal_cones().size(); ++k)
            eta[f.maximal_cones()[k]] = o[k];
    }
    for (std::size_t id = 0; id < cells_.size(); ++id) {
        const Cone& gamma = cells_[id];
        for (std::size_t r = 0; r < f.nrays(); ++r) {
            int rho = int(r);
            if (std::binary_search(gamma.begin(), gamma.end(), rho)) continue;
            Cone bigger = gamma;
            bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), rho), rho);
            auto it = index.find(bigger);
            if (it == index.end()) continue;
            int pos = int(std::lower_bound(bigger.begin(), bigger.end(), rho) - bigger.begin());
            int sign = (pos % 2 == 0) ? 1 : -1;
            if (int(bigger.size()) == f.dim()) sign *= eta.at(bigger);
            boundary_[id].emplace_back(it->second, sign);
        }
    }
}

CellComplex CellComplex::dual(const Fan& f) {
    std::vector<Cone> cells(f.cones().begin(), f.cones().end());
    return CellComplex(f, std::move(cells), std::nullopt);
}

CellComplex CellComplex::tilde(const Fan& f, int tau) {
    if (tau < 0 || tau >= int(f.nrays()))
        throw arithmetic_error("tilde complex: unknown ray index " + std::to_string(tau));
    std::vector<Cone> cells;
    for (const auto& sigma : f.cones()) {
        if (std::binary_search(sigma.begin(), sigma.end(), tau)) continue;
        Cone withtau = sigma;
        withtau.insert(std::lower_bound(withtau.begin(), withtau.end(), tau), tau);
        if (!f.is_cone(withtau)) cells.push_back(sigma);
    }
    if (cells.empty())
        throw arithmetic_error("tilde complex is empty for ray " + f.ray_names()[std::size_t(tau)] +
                               "; choose another ray");
    return CellComplex(f, std::move(cells), tau);
}

int CellComplex::cell_index(const Cone& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) return -1;
    return int(it - cells_.begin());
}

bool CellComplex::boundary_squares_to_zero(const PrimeField& F) const {
    // accumulate d(d(cell)) coefficients per target
    for (std::size_t id = 0; id < cells_.size(); ++id) {
        std::map<int, std::int64_t> acc;
        for (auto [mid, s1] : boundary_[id])
            for (auto [tgt, s2] : boundary_[std::size_t(mid)])
                acc[tgt] = F.add(acc[tgt], F.reduce(std::int64_t(s1) * s2));
        for (auto& [tgt, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

LabeledComplex::LabeledComplex(CellComplex complex, std::vector<MonomialIdeal> labels)
    : complex_(std::move(complex)), labels_(std::move(labels)) {
    if (labels_.size() != complex_.ncells())
        throw arithmetic_error("labeled complex: label count mismatch");
    // label containment along the face relation: the label of [gamma] lies in
    // the label of each boundary cell [gamma + rho]
    for (std::size_t id = 0; id < complex_.ncells(); ++id)
        for (auto [face, sign] : complex_.boundary(id)) {
            (void)sign;
            if (!labels_[std::size_t(face)].contains_ideal(labels_[id]))
                throw arithmetic_error("label containment violated between adjacent cells");
        }
}

std::vector<std::size_t> LabeledComplex::strand(const Monomial& alpha) const {
    std::vector<std::size_t> active;
    for (std::size_t id = 0; id < complex_.ncells(); ++id)
        if (labels_[id].contains(alpha)) active.push_back(id);
    return active;
}

std::vector<Monomial> LabeledComplex::probe_degrees(std::size_t cap) const {
    std::vector<Monomial> gens;
    for (const auto& l : labels_)
        for (const auto& g : l.generators()) gens.push_back(g);
    return join_closure(gens, cap);
}

std::vector<Monomial> join_closure(const std::vector<Monomial>& gens, std::size_t cap) {
    std::vector<Monomial> out;
    std::set<std::vector<std::uint32_t>> seen;
    auto push = [&](const Monomial& m) {
        if (!seen.insert(m.exponents()).second) return false;
        out.push_back(m);
        return true;
    };
    for (const auto& g : gens) push(g);
    // closure under pairwise join; out grows at the tail, loop until stable
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Monomial m = lcm(out[i], out[j]);
            push(m);
            if (out.size() > cap)
                throw arithmetic_error("lcm lattice exceeds cap of " + std::to_string(cap));
        }
    }
    return out;
}

std::vector<std::size_t> homology_dims(const CellComplex& cc,
                                       const std::vector<std::size_t>& active,
                                       const PrimeField& F) {
    const int n = cc.fan().dim();
    std::vector<std::size_t> h(std::size_t(n) + 1, 0);
    if (active.empty()) return h;

    std::unordered_set<std::size_t> in_active(active.begin(), active.end());
    // local index per cell dimension
    std::vector<std::vector<std::size_t>> by_dim(std::size_t(n) + 1);
    std::map<std::size_t, std::pair<int, std::size_t>> local;  // cell id -> (dim, local idx)
    for (std::size_t id : active) {
        int d = cc.cell_dim(id);
        local[id] = {d, by_dim[std::size_t(d)].size()};
        by_dim[std::size_t(d)].push_back(id);
    }

    // boundary ranks: rank_d = rank of the map from cell_dim d to d-1
    std::vector<std::size_t> rank(std::size_t(n) + 2, 0);
    for (int d = 1; d <= n; ++d) {
        const auto& src = by_dim[std::size_t(d)];
        const auto& tgt = by_dim[std::size_t(d) - 1];
        if (src.empty() || tgt.empty()) continue;
        FpMatrix M(tgt.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c)
            for (auto [face, sign] : cc.boundary(src[c])) {
                auto it = local.find(std::size_t(face));
                if (it == local.end()) continue;  // face not active: impossible if face-closed
                M.at(it->second.second, c) = F.reduce(sign);
            }
        rank[std::size_t(d)] = M.rank(F);
    }
    // unreduced homology from ranks, then drop one connected component in
    // degree 0 to get reduced homology of the nonempty complex
    for (int d = 0; d <= n; ++d) {
        std::size_t dim_c = by_dim[std::size_t(d)].size();
        std::size_t r_out = d == 0 ? 0 : rank[std::size_t(d)];
        std::size_t r_in = rank[std::size_t(d) + 1];
        h[std::size_t(d)] = dim_c - r_out - r_in;
    }
    if (h[0] == 0)
        throw arithmetic_error("cell complex incidence is degenerate: H_0 = 0 on a nonempty strand");
    h[0] -= 1;
    return h;
}

StrandCertificate certify_contractible(const CellComplex& cc,
                                       const std::vector<std::size_t>& active,
                                       const PrimeField& F) {
    if (active.empty()) return {CertKind::EmptyStrand, {}, {}};
    if (active.size() == cc.ncells()) return {CertKind::WholeComplex, {}, {}};

    // closure-of-a-cell test: the intersection of all active cones must be an
    // active cell whose closure is exactly the active set
    Cone meet = cc.cone_of(active[0]);
    for (std::size_t i = 1; i < active.size(); ++i)
        meet = Fan::intersect_cones(meet, cc.cone_of(active[i]));
    int meet_id = cc.cell_index(meet);
    if (meet_id >= 0) {
        std::unordered_set<std::size_t> in_active(active.begin(), active.end());
        bool closure_matches = in_active.count(std::size_t(meet_id)) > 0;
        if (closure_matches) {
            // every cell of the complex whose cone contains meet must be active
            for (std::size_t id = 0; id < cc.ncells() && closure_matches; ++id) {
                const Cone& c = cc.cone_of(id);
                bool contains_meet = std::includes(c.begin(), c.end(), meet.begin(), meet.end());
                if (contains_meet && !in_active.count(id)) closure_matches = false;
                if (!contains_meet && in_active.count(id)) closure_matches = false;
            }
        }
        if (closure_matches) return {CertKind::ClosureOfCell, meet, {}};
    }

    auto h = homology_dims(cc, active, F);
    bool acyclic = std::all_of(h.begin(), h.end(), [](std::size_t v) { return v == 0; });
    if (acyclic) return {CertKind::HomologyOnly, {}, h};
    return {CertKind::NotContractible, {}, h};
}

}  // namespace vres
