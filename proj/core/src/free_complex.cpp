#include "vres/free_complex.hpp"

#include <algorithm>
#include <numeric>

namespace vres {

// --- SMat -------------------------------------------------------------------

std::int64_t SMat::get(std::size_t r, std::size_t c) const {
    auto it = bycol_[c].find(r);
    return it == bycol_[c].end() ? 0 : it->second;
}

void SMat::set(std::size_t r, std::size_t c, std::int64_t v) {
    if (v == 0) {
        bycol_[c].erase(r);
        byrow_[r].erase(c);
    } else {
        bycol_[c][r] = v;
        byrow_[r].insert(c);
    }
}

void SMat::add(std::size_t r, std::size_t c, std::int64_t v, const PrimeField& F) {
    set(r, c, F.add(get(r, c), F.reduce(v)));
}

void SMat::clear_row(std::size_t r) {
    for (std::size_t c : std::set<std::size_t>(byrow_[r])) set(r, c, 0);
}

void SMat::clear_col(std::size_t c) {
    for (auto& [r, v] : std::map<std::size_t, std::int64_t>(bycol_[c])) set(r, c, 0);
}

std::size_t SMat::nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : bycol_) n += col.size();
    return n;
}

namespace {

bool mdeg_leq(const Multidegree& a, const Multidegree& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// A o B
SMat compose(const SMat& A, const SMat& B, const PrimeField& F) {
    SMat out(A.rows(), B.cols());
    for (std::size_t c = 0; c < B.cols(); ++c)
        for (auto [mid, bv] : B.col(c))
            for (auto [r, av] : A.col(mid)) out.add(r, c, F.mul(av, bv), F);
    return out;
}

SMat scaled(const SMat& A, std::int64_t s, const PrimeField& F) {
    SMat out(A.rows(), A.cols());
    std::int64_t sr = F.reduce(s);
    for (std::size_t c = 0; c < A.cols(); ++c)
        for (auto [r, v] : A.col(c)) out.set(r, c, F.mul(v, sr));
    return out;
}

void add_into(SMat& A, const SMat& B, std::int64_t s, const PrimeField& F) {
    std::int64_t sr = F.reduce(s);
    for (std::size_t c = 0; c < B.cols(); ++c)
        for (auto [r, v] : B.col(c)) A.add(r, c, F.mul(v, sr), F);
}

std::vector<std::size_t> strand_indices(const std::vector<Multidegree>& basis,
                                        const Multidegree& alpha) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (mdeg_leq(basis[i], alpha)) out.push_back(i);
    return out;
}

/// Solve diff[i] x = rhs inside the strand at alpha; rhs is over global
/// basis[i-1] indices, the result over global basis[i] indices.
std::map<std::size_t, std::int64_t> solve_through_diff(const FreeComplex& fc, std::size_t i,
                                                       const Multidegree& alpha,
                                                       const std::map<std::size_t, std::int64_t>& rhs,
                                                       const PrimeField& F) {
    const auto& src = fc.basis[i];
    const auto& tgt = fc.basis[i - 1];
    auto scols = strand_indices(src, alpha);
    auto srows = strand_indices(tgt, alpha);
    std::map<std::size_t, std::size_t> rowpos;
    for (std::size_t k = 0; k < srows.size(); ++k) rowpos[srows[k]] = k;

    FpMatrix M(srows.size(), scols.size());
    for (std::size_t c = 0; c < scols.size(); ++c)
        for (auto [r, v] : fc.diff[i].col(scols[c])) {
            auto it = rowpos.find(r);
            if (it != rowpos.end()) M.at(it->second, c) = v;
        }
    std::vector<std::int64_t> b(srows.size(), 0);
    for (auto [r, v] : rhs) {
        auto it = rowpos.find(r);
        if (it == rowpos.end()) {
            if (F.reduce(v) != 0)
                throw arithmetic_error("strand solve: rhs outside the strand");
            continue;
        }
        b[it->second] = F.reduce(v);
    }
    std::vector<std::int64_t> x;
    if (!M.solve(F, b, x)) throw arithmetic_error("strand solve: inconsistent system");
    std::map<std::size_t, std::int64_t> out;
    for (std::size_t c = 0; c < scols.size(); ++c)
        if (x[c] != 0) out[scols[c]] = x[c];
    return out;
}

/// Solve aug x = c inside the strand at alpha.
std::map<std::size_t, std::int64_t> solve_through_aug(const FreeComplex& fc,
                                                      const Multidegree& alpha, std::int64_t c,
                                                      const PrimeField& F) {
    auto scols = strand_indices(fc.basis[0], alpha);
    FpMatrix M(1, scols.size());
    for (std::size_t k = 0; k < scols.size(); ++k) M.at(0, k) = F.reduce(fc.aug[scols[k]]);
    std::vector<std::int64_t> b{F.reduce(c)};
    std::vector<std::int64_t> x;
    if (!M.solve(F, b, x)) throw arithmetic_error("augmentation solve: monomial not in target ideal");
    std::map<std::size_t, std::int64_t> out;
    for (std::size_t k = 0; k < scols.size(); ++k)
        if (x[k] != 0) out[scols[k]] = x[k];
    return out;
}

}  // namespace

std::vector<std::size_t> FreeComplex::ranks() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis) out.push_back(b.size());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

void check_complex(const FreeComplex& fc, const PrimeField& F) {
    if (fc.basis.empty()) throw arithmetic_error("empty complex");
    if (fc.aug.size() != fc.basis[0].size()) throw arithmetic_error("augmentation size mismatch");
    for (std::size_t i = 1; i < fc.basis.size(); ++i) {
        const SMat& d = fc.diff[i];
        if (d.rows() != fc.basis[i - 1].size() || d.cols() != fc.basis[i].size())
            throw arithmetic_error("differential shape mismatch at degree " + std::to_string(i));
        for (std::size_t c = 0; c < d.cols(); ++c)
            for (auto [r, v] : d.col(c)) {
                (void)v;
                if (!mdeg_leq(fc.basis[i - 1][r], fc.basis[i][c]))
                    throw arithmetic_error("inhomogeneous differential entry at degree " +
                                           std::to_string(i));
            }
    }
    // d^2 = 0
    for (std::size_t i = 2; i < fc.basis.size(); ++i) {
        SMat sq = compose(fc.diff[i - 1], fc.diff[i], F);
        if (sq.nonzeros() != 0)
            throw arithmetic_error("d^2 != 0 between degrees " + std::to_string(i) + " and " +
                                   std::to_string(i - 2));
    }
    // aug . d_1 = 0
    if (fc.basis.size() > 1) {
        for (std::size_t c = 0; c < fc.diff[1].cols(); ++c) {
            std::int64_t s = 0;
            for (auto [r, v] : fc.diff[1].col(c)) s = F.add(s, F.mul(F.reduce(fc.aug[r]), v));
            if (s != 0) throw arithmetic_error("augmentation does not annihilate d_1");
        }
    }
}

// --- Taylor complex ---------------------------------------------------------

FreeComplex taylor_complex(const MonomialIdeal& I, std::size_t generator_cap) {
    if (I.is_zero()) throw arithmetic_error("taylor complex of the zero ideal");
    const auto& gens = I.generators();
    const std::size_t r = gens.size();
    if (r > generator_cap)
        throw arithmetic_error("taylor complex: " + std::to_string(r) +
                               " generators exceed cap of " + std::to_string(generator_cap));

    // subsets by size; within a size, subsets ordered lexicographically
    std::vector<std::vector<std::vector<std::size_t>>> subsets(r);
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j < r; ++j)
            if (mask & (1u << j)) s.push_back(j);
        subsets[s.size() - 1].push_back(std::move(s));
    }
    for (auto& level : subsets) std::sort(level.begin(), level.end());

    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(r);
    FreeComplex fc;
    fc.basis.resize(r);
    fc.diff.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < subsets[i].size(); ++k) {
            index[i][subsets[i][k]] = k;
            Monomial m = gens[subsets[i][k][0]];
            for (std::size_t j = 1; j < subsets[i][k].size(); ++j)
                m = lcm(m, gens[subsets[i][k][j]]);
            fc.basis[i].push_back(m.exponents());
        }
    }
    for (std::size_t i = 1; i < r; ++i) {
        SMat d(fc.basis[i - 1].size(), fc.basis[i].size());
        for (std::size_t c = 0; c < subsets[i].size(); ++c) {
            const auto& T = subsets[i][c];
            for (std::size_t j = 0; j < T.size(); ++j) {
                std::vector<std::size_t> face = T;
                face.erase(face.begin() + long(j));
                d.set(index[i - 1][face], c, (j % 2 == 0) ? 1 : -1);
            }
        }
        fc.diff[i] = std::move(d);
    }
    fc.aug.assign(fc.basis[0].size(), 1);
    return fc;
}

// --- minimization -----------------------------------------------------------

FreeComplex minimize(const FreeComplex& fc, const PrimeField& F) {
    std::vector<std::vector<Multidegree>> basis = fc.basis;
    std::vector<SMat> diff = fc.diff;
    std::vector<std::int64_t> aug = fc.aug;
    std::vector<std::vector<bool>> alive(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) alive[i].assign(basis[i].size(), true);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i < basis.size(); ++i) {
            // find a unit entry: nonzero scalar between equal multidegrees
            std::size_t pr = 0, pc = 0;
            bool found = false;
            for (std::size_t c = 0; c < diff[i].cols() && !found; ++c) {
                if (!alive[i][c]) continue;
                for (auto [r, v] : diff[i].col(c)) {
                    (void)v;
                    if (basis[i - 1][r] == basis[i][c]) {
                        pr = r;
                        pc = c;
                        found = true;
                        break;
                    }
                }
            }
            if (!found) continue;
            changed = true;

            std::int64_t u = diff[i].get(pr, pc);
            std::int64_t uinv = F.inv(u);
            // Gaussian cancellation of the pair (pr in degree i-1, pc in degree i)
            std::map<std::size_t, std::int64_t> colc(diff[i].col(pc));
            std::vector<std::pair<std::size_t, std::int64_t>> rowr;
            for (std::size_t b : diff[i].cols_of_row(pr))
                if (b != pc) rowr.emplace_back(b, diff[i].get(pr, b));
            for (auto [b, rho] : rowr)
                for (auto [a, s] : colc) {
                    if (a == pr) continue;
                    diff[i].add(a, b, F.neg(F.mul(F.mul(s, uinv), rho)), F);
                }
            diff[i].clear_row(pr);
            diff[i].clear_col(pc);
            if (i + 1 < diff.size()) diff[i + 1].clear_row(pc);
            if (i >= 2)
                diff[i - 1].clear_col(pr);
            else
                aug[pr] = 0;
            alive[i][pc] = false;
            alive[i - 1][pr] = false;
        }
    }

    // compact
    FreeComplex out;
    std::vector<std::vector<std::size_t>> newidx(basis.size());
    out.basis.resize(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        newidx[i].assign(basis[i].size(), SIZE_MAX);
        for (std::size_t b = 0; b < basis[i].size(); ++b)
            if (alive[i][b]) {
                newidx[i][b] = out.basis[i].size();
                out.basis[i].push_back(basis[i][b]);
            }
    }
    out.diff.resize(basis.size());
    for (std::size_t i = 1; i < basis.size(); ++i) {
        SMat d(out.basis[i - 1].size(), out.basis[i].size());
        for (std::size_t c = 0; c < diff[i].cols(); ++c) {
            if (!alive[i][c]) continue;
            for (auto [r, v] : diff[i].col(c)) d.set(newidx[i - 1][r], newidx[i][c], v);
        }
        out.diff[i] = std::move(d);
    }
    out.aug.clear();
    for (std::size_t b = 0; b < basis[0].size(); ++b)
        if (alive[0][b]) out.aug.push_back(aug[b]);
    // trim empty top degrees
    while (out.basis.size() > 1 && out.basis.back().empty()) {
        out.basis.pop_back();
        out.diff.pop_back();
    }
    return out;
}

// --- Betti tables -----------------------------------------------------------

std::vector<std::size_t> BettiTable::totals() const {
    std::vector<std::size_t> out;
    for (const auto& [key, v] : entries) {
        if (key.first >= out.size()) out.resize(key.first + 1, 0);
        out[key.first] += v;
    }
    return out;
}

BettiTable BettiTable::to_quotient(std::size_t nvars) const {
    BettiTable out;
    out.entries[{0, Multidegree(nvars, 0)}] = 1;
    for (const auto& [key, v] : entries) out.entries[{key.first + 1, key.second}] = v;
    return out;
}

BettiTable betti_from_minimal(const FreeComplex& fc) {
    BettiTable t;
    for (std::size_t i = 0; i < fc.basis.size(); ++i)
        for (const auto& m : fc.basis[i]) t.entries[{i, m}] += 1;
    return t;
}

namespace {

/// reduced homology dimensions of a simplicial complex given by its faces as
/// bitmasks over at most 31 vertices; index d+1 holds dim H~_d, starting at
/// d = -1 for the empty face.
std::vector<std::size_t> simplicial_reduced_homology(const std::vector<std::uint32_t>& faces,
                                                     const PrimeField& F) {
    int maxcard = 0;
    std::vector<std::vector<std::uint32_t>> by_card(1);
    for (auto f : faces) {
        int c = __builtin_popcount(f);
        if (c >= int(by_card.size())) by_card.resize(std::size_t(c) + 1);
        by_card[std::size_t(c)].push_back(f);
        maxcard = std::max(maxcard, c);
    }
    for (auto& level : by_card) std::sort(level.begin(), level.end());

    // rank of boundary from cardinality c to c-1
    std::vector<std::size_t> rank(std::size_t(maxcard) + 2, 0);
    for (int c = 1; c <= maxcard; ++c) {
        const auto& src = by_card[std::size_t(c)];
        const auto& tgt = by_card[std::size_t(c) - 1];
        if (src.empty() || tgt.empty()) continue;
        FpMatrix M(tgt.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            std::uint32_t f = src[col];
            int j = 0;
            for (std::uint32_t bit = f; bit; bit &= bit - 1, ++j) {
                std::uint32_t v = bit & (~bit + 1);
                std::uint32_t face = f & ~v;
                auto it = std::lower_bound(tgt.begin(), tgt.end(), face);
                if (it == tgt.end() || *it != face) continue;  // not closed: caller bug
                M.at(std::size_t(it - tgt.begin()), col) = F.reduce(j % 2 == 0 ? 1 : -1);
            }
        }
        rank[std::size_t(c)] = M.rank(F);
    }
    std::vector<std::size_t> h(std::size_t(maxcard) + 1, 0);
    for (int c = 0; c <= maxcard; ++c)
        h[std::size_t(c)] =
            by_card[std::size_t(c)].size() - rank[std::size_t(c)] - rank[std::size_t(c) + 1];
    return h;  // h[c] = dim H~_{c-1}
}

}  // namespace

BettiTable betti_via_koszul_strands(const MonomialIdeal& I, const PrimeField& F) {
    if (I.is_zero() || I.is_unit())
        throw arithmetic_error("betti numbers: degenerate ideal");
    const std::size_t n = I.nvars();
    if (n > 31) throw arithmetic_error("koszul strands: too many variables");
    BettiTable t;
    for (const auto& alpha : join_closure(I.generators())) {
        std::vector<std::size_t> supp;
        for (std::size_t j = 0; j < n; ++j)
            if (alpha[j] > 0) supp.push_back(j);
        // upper Koszul complex: squarefree b within supp with x^(alpha-b) in I
        std::vector<std::uint32_t> faces;
        for (std::uint32_t mask = 0; mask < (1u << supp.size()); ++mask) {
            std::vector<std::uint32_t> e = alpha.exponents();
            for (std::size_t j = 0; j < supp.size(); ++j)
                if (mask & (1u << j)) e[supp[j]] -= 1;
            if (I.contains(Monomial(std::move(e)))) faces.push_back(mask);
        }
        if (faces.empty()) continue;
        auto h = simplicial_reduced_homology(faces, F);
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] > 0) t.entries[{i, alpha.exponents()}] += h[i];
    }
    return t;
}

BettiTable betti_numbers(const MonomialIdeal& I, const PrimeField& F) {
    if (I.is_zero() || I.is_unit())
        throw arithmetic_error("betti numbers: degenerate ideal");
    if (I.generators().size() <= 12 || I.nvars() > 31)
        return betti_from_minimal(minimize(taylor_complex(I, 20), F));
    return betti_via_koszul_strands(I, F);
}

std::size_t pdim_quotient(const MonomialIdeal& I, const PrimeField& F) {
    auto totals = betti_numbers(I, F).totals();
    std::size_t top = 0;
    for (std::size_t i = 0; i < totals.size(); ++i)
        if (totals[i] > 0) top = i;
    return top + 1;  // shift to the S/I convention
}

// --- resolution verification ------------------------------------------------

bool verify_resolution(const FreeComplex& fc, const MonomialIdeal& I, const PrimeField& F) {
    for (std::size_t b = 0; b < fc.basis[0].size(); ++b) {
        if (F.reduce(fc.aug[b]) == 0) return false;
        if (!I.contains(Monomial(fc.basis[0][b]))) return false;
    }
    std::vector<Monomial> seeds;
    for (const auto& level : fc.basis)
        for (const auto& m : level) seeds.emplace_back(m);
    for (const auto& g : I.generators()) seeds.push_back(g);
    for (const auto& alpha : join_closure(seeds)) {
        const Multidegree& a = alpha.exponents();
        std::vector<std::size_t> dims;
        for (const auto& level : fc.basis) dims.push_back(strand_indices(level, a).size());
        std::vector<std::size_t> ranks(fc.basis.size() + 1, 0);
        for (std::size_t i = 1; i < fc.basis.size(); ++i) {
            auto scols = strand_indices(fc.basis[i], a);
            auto srows = strand_indices(fc.basis[i - 1], a);
            std::map<std::size_t, std::size_t> rowpos;
            for (std::size_t k = 0; k < srows.size(); ++k) rowpos[srows[k]] = k;
            FpMatrix M(srows.size(), scols.size());
            for (std::size_t c = 0; c < scols.size(); ++c)
                for (auto [r, v] : fc.diff[i].col(scols[c])) {
                    auto it = rowpos.find(r);
                    if (it != rowpos.end()) M.at(it->second, c) = v;
                }
            ranks[i] = M.rank(F);
        }
        bool in_ideal = I.contains(alpha);
        std::size_t augrank = 0;
        for (std::size_t b : strand_indices(fc.basis[0], a))
            if (F.reduce(fc.aug[b]) != 0) augrank = 1;
        if (in_ideal != (augrank == 1)) return false;       // surjectivity onto I
        if (dims[0] != ranks[1] + augrank) return false;    // exactness at 0
        for (std::size_t i = 1; i < fc.basis.size(); ++i) {
            std::size_t next = i + 1 < fc.basis.size() ? ranks[i + 1] : 0;
            if (dims[i] != ranks[i] + next) return false;   // exactness at i
        }
    }
    return true;
}

// --- chain maps -------------------------------------------------------------

void check_chain_map(const ChainMap& m, const FreeComplex& src, const FreeComplex& dst,
                     const PrimeField& F) {
    // augmentations agree in degree 0
    for (std::size_t c = 0; c < src.basis[0].size(); ++c) {
        std::int64_t s = F.neg(F.reduce(src.aug[c]));
        for (auto [r, v] : m[0].col(c)) s = F.add(s, F.mul(F.reduce(dst.aug[r]), v));
        if (s != 0) throw arithmetic_error("chain map does not lift the augmentation");
    }
    for (std::size_t i = 1; i < src.basis.size(); ++i) {
        SMat lhs = compose(m[i - 1], src.diff[i], F);
        if (i < m.size() && i < dst.basis.size())
            add_into(lhs, compose(dst.diff[i], m[i], F), F.neg(1), F);
        if (lhs.nonzeros() != 0)
            throw arithmetic_error("chain map does not commute with differentials at degree " +
                                   std::to_string(i));
    }
}

ChainMap lift_inclusion(const FreeComplex& src, const FreeComplex& dst, const PrimeField& F) {
    ChainMap out;
    out.reserve(src.basis.size());
    for (std::size_t i = 0; i < src.basis.size(); ++i) {
        std::size_t tgt_rank = i < dst.basis.size() ? dst.basis[i].size() : 0;
        SMat phi(tgt_rank, src.basis[i].size());
        for (std::size_t c = 0; c < src.basis[i].size(); ++c) {
            const Multidegree& alpha = src.basis[i][c];
            if (i == 0) {
                auto x = solve_through_aug(dst, alpha, src.aug[c], F);
                for (auto [r, v] : x) phi.set(r, c, v);
            } else {
                // rhs = phi_{i-1}(d_src(e))
                std::map<std::size_t, std::int64_t> rhs;
                for (auto [mid, sv] : src.diff[i].col(c))
                    for (auto [r, pv] : out[i - 1].col(mid)) {
                        auto& slot = rhs[r];
                        slot = F.add(slot, F.mul(sv, pv));
                    }
                for (auto it = rhs.begin(); it != rhs.end();)
                    it = it->second == 0 ? rhs.erase(it) : std::next(it);
                if (i >= dst.basis.size()) {
                    if (!rhs.empty())
                        throw arithmetic_error("lift_inclusion: target complex too short");
                    continue;
                }
                auto x = solve_through_diff(dst, i, alpha, rhs, F);
                for (auto [r, v] : x) phi.set(r, c, v);
            }
        }
        out.push_back(std::move(phi));
    }
    check_chain_map(out, src, dst, F);
    return out;
}

ChainMap taylor_comparison_map(const MonomialIdeal& srcI, const MonomialIdeal& dstI,
                               const PrimeField& F) {
    if (!dstI.contains_ideal(srcI))
        throw arithmetic_error("taylor comparison map: source is not contained in target");
    FreeComplex src = taylor_complex(srcI);
    FreeComplex dst = taylor_complex(dstI);
    const auto& sg = srcI.generators();
    const auto& dg = dstI.generators();

    // lex-first divisor for each source generator (generators are lex-sorted)
    std::vector<std::size_t> image(sg.size());
    for (std::size_t j = 0; j < sg.size(); ++j) {
        std::size_t pick = SIZE_MAX;
        for (std::size_t k = 0; k < dg.size(); ++k)
            if (dg[k].divides(sg[j])) {
                pick = k;
                break;
            }
        if (pick == SIZE_MAX) throw arithmetic_error("taylor comparison map: no divisor found");
        image[j] = pick;
    }

    // rebuild the subset indexing used by taylor_complex
    auto subsets_of = [](std::size_t r) {
        std::vector<std::vector<std::vector<std::size_t>>> levels(r);
        for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t j = 0; j < r; ++j)
                if (mask & (1u << j)) s.push_back(j);
            levels[s.size() - 1].push_back(std::move(s));
        }
        for (auto& level : levels) std::sort(level.begin(), level.end());
        return levels;
    };
    auto ssub = subsets_of(sg.size());
    auto dsub = subsets_of(dg.size());
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> dindex(dsub.size());
    for (std::size_t i = 0; i < dsub.size(); ++i)
        for (std::size_t k = 0; k < dsub[i].size(); ++k) dindex[i][dsub[i][k]] = k;

    ChainMap out;
    for (std::size_t i = 0; i < src.basis.size(); ++i) {
        SMat phi(i < dst.basis.size() ? dst.basis[i].size() : 0, src.basis[i].size());
        for (std::size_t c = 0; c < ssub[i].size(); ++c) {
            const auto& T = ssub[i][c];
            std::vector<std::size_t> img;
            for (std::size_t j : T) img.push_back(image[j]);
            std::vector<std::size_t> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;  // degenerate
            // permutation sign by inversion count
            int inversions = 0;
            for (std::size_t a = 0; a < img.size(); ++a)
                for (std::size_t b = a + 1; b < img.size(); ++b)
                    if (img[a] > img[b]) ++inversions;
            phi.set(dindex[i].at(sorted), c, F.reduce(inversions % 2 == 0 ? 1 : -1));
        }
        out.push_back(std::move(phi));
    }
    check_chain_map(out, src, dst, F);
    return out;
}

// --- cellular total complex -------------------------------------------------

TotalComplexResult build_cellular_total_complex(const LabeledComplex& lc, const PrimeField& F,
                                                std::size_t taylor_cap) {
    const CellComplex& cc = lc.complex();
    const std::size_t ncells = cc.ncells();

    TotalComplexResult result;
    std::vector<FreeComplex> R(ncells);
    for (std::size_t id = 0; id < ncells; ++id) {
        if (lc.label(id).is_zero())
            throw arithmetic_error("cellular total complex: a cell has the zero label");
        R[id] = minimize(taylor_complex(lc.label(id), taylor_cap), F);
        result.cells.push_back({cc.cone_of(id), lc.label(id), R[id].ranks()});
    }

    // K[j] maps cells down j in cell dimension: component on F_{gamma,i} lands
    // in F_{sigma, i+j-1}. K[1] is the signed lift of the incidence maps; the
    // higher K[j] are homotopy corrections making the total differential
    // square to zero.
    std::vector<std::map<std::pair<std::size_t, std::size_t>, ChainMap>> Kmaps;
    Kmaps.resize(std::size_t(cc.fan().dim()) + 1);

    for (std::size_t gamma = 0; gamma < ncells; ++gamma)
        for (auto [sigma, eps] : cc.boundary(gamma)) {
            ChainMap phi = lift_inclusion(R[gamma], R[std::size_t(sigma)], F);
            ChainMap signed_phi;
            for (std::size_t i = 0; i < phi.size(); ++i) {
                std::int64_t s = (i % 2 == 0) ? eps : -eps;
                signed_phi.push_back(scaled(phi[i], s, F));
            }
            Kmaps[1][{gamma, std::size_t(sigma)}] = std::move(signed_phi);
        }

    auto cells_above = [&](std::size_t gamma, std::size_t j) {
        // cells sigma with cone(sigma) containing cone(gamma) and |sigma| = |gamma| + j
        std::vector<std::size_t> out;
        const Cone& g = cc.cone_of(gamma);
        for (std::size_t id = 0; id < ncells; ++id) {
            const Cone& s = cc.cone_of(id);
            if (s.size() == g.size() + j && std::includes(s.begin(), s.end(), g.begin(), g.end()))
                out.push_back(id);
        }
        return out;
    };

    for (std::size_t j = 2; j < Kmaps.size(); ++j) {
        for (std::size_t gamma = 0; gamma < ncells; ++gamma) {
            for (std::size_t sigma : cells_above(gamma, j)) {
                // C[i] : F_{gamma,i} -> F_{sigma,i+j-2}, the defect of the
                // lower-order maps
                std::size_t srclen = R[gamma].basis.size();
                std::vector<SMat> C(srclen);
                for (std::size_t i = 0; i < srclen; ++i) {
                    std::size_t tgt_deg = i + j - 2;
                    std::size_t tgt_rank =
                        tgt_deg < R[sigma].basis.size() ? R[sigma].basis[tgt_deg].size() : 0;
                    C[i] = SMat(tgt_rank, R[gamma].basis[i].size());
                }
                for (std::size_t a = 1; a < j; ++a) {
                    std::size_t b = j - a;
                    for (std::size_t mu : cells_above(gamma, b)) {
                        auto itB = Kmaps[b].find({gamma, mu});
                        auto itA = Kmaps[a].find({mu, sigma});
                        if (itA == Kmaps[a].end() || itB == Kmaps[b].end()) continue;
                        for (std::size_t i = 0; i < srclen; ++i) {
                            std::size_t mid_deg = i + b - 1;
                            if (i >= itB->second.size()) continue;
                            if (mid_deg >= itA->second.size()) continue;
                            const SMat& A = itA->second[mid_deg];
                            const SMat& B = itB->second[i];
                            if (A.rows() == 0 || B.rows() == 0) continue;
                            SMat prod = compose(A, B, F);
                            if (prod.rows() != C[i].rows()) continue;
                            add_into(C[i], prod, F.neg(1), F);
                        }
                    }
                }
                bool any = false;
                for (const auto& M : C) any = any || M.nonzeros() != 0;
                if (!any) continue;

                // homotopy solve: d_sigma X_i = C_i - X_{i-1} d_gamma
                ChainMap X(srclen);
                for (std::size_t i = 0; i < srclen; ++i) {
                    std::size_t tgt_deg = i + j - 1;
                    std::size_t tgt_rank =
                        tgt_deg < R[sigma].basis.size() ? R[sigma].basis[tgt_deg].size() : 0;
                    X[i] = SMat(tgt_rank, R[gamma].basis[i].size());
                    for (std::size_t c = 0; c < R[gamma].basis[i].size(); ++c) {
                        std::map<std::size_t, std::int64_t> rhs;
                        for (auto [r, v] : C[i].col(c)) rhs[r] = v;
                        if (i >= 1) {
                            for (auto [mid, sv] : R[gamma].diff[i].col(c))
                                for (auto [r, pv] : X[i - 1].col(mid)) {
                                    auto& slot = rhs[r];
                                    slot = F.sub(slot, F.mul(sv, pv));
                                }
                        }
                        for (auto it = rhs.begin(); it != rhs.end();)
                            it = F.reduce(it->second) == 0 ? rhs.erase(it) : std::next(it);
                        if (rhs.empty()) continue;
                        if (tgt_rank == 0)
                            throw arithmetic_error("homotopy correction: defect above top degree");
                        auto x = solve_through_diff(R[sigma], tgt_deg, R[gamma].basis[i][c], rhs, F);
                        for (auto [r, v] : x) X[i].set(r, c, v);
                    }
                }
                Kmaps[j][{gamma, sigma}] = std::move(X);
            }
        }
    }

    // assemble the total complex
    int n = cc.fan().dim();
    std::size_t maxlen = 0;
    for (std::size_t id = 0; id < ncells; ++id)
        maxlen = std::max(maxlen, std::size_t(cc.cell_dim(id)) + R[id].basis.size());

    FreeComplex tot;
    tot.basis.resize(maxlen);
    // block offsets: offset[(cell, i)] within Tot_{celldim+i}
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> offset;
    for (int k = 0; k < int(maxlen); ++k)
        for (std::size_t id = 0; id < ncells; ++id) {
            int i = k - cc.cell_dim(id);
            if (i < 0 || std::size_t(i) >= R[id].basis.size()) continue;
            offset[{id, std::size_t(i)}] = tot.basis[std::size_t(k)].size();
            for (const auto& m : R[id].basis[std::size_t(i)]) tot.basis[std::size_t(k)].push_back(m);
        }
    tot.diff.resize(maxlen);
    for (std::size_t k = 1; k < maxlen; ++k)
        tot.diff[k] = SMat(tot.basis[k - 1].size(), tot.basis[k].size());

    auto place = [&](std::size_t k, std::size_t roff, std::size_t coff, const SMat& M) {
        for (std::size_t c = 0; c < M.cols(); ++c)
            for (auto [r, v] : M.col(c)) tot.diff[k].add(roff + r, coff + c, v, F);
    };

    for (std::size_t id = 0; id < ncells; ++id) {
        std::size_t cd = std::size_t(cc.cell_dim(id));
        // vertical differentials
        for (std::size_t i = 1; i < R[id].basis.size(); ++i)
            place(cd + i, offset.at({id, i - 1}), offset.at({id, i}), R[id].diff[i]);
        // horizontal and correction maps
        for (std::size_t j = 1; j < Kmaps.size(); ++j)
            for (const auto& [key, maps] : Kmaps[j]) {
                if (key.first != id) continue;
                std::size_t sigma = key.second;
                for (std::size_t i = 0; i < maps.size(); ++i) {
                    if (maps[i].rows() == 0 || maps[i].nonzeros() == 0) continue;
                    std::size_t k = cd + i;  // source Tot degree
                    std::size_t tgt_i = i + j - 1;
                    place(k, offset.at({sigma, tgt_i}), offset.at({id, i}), maps[i]);
                }
            }
    }

    // augmentation: vertex blocks at resolution degree 0
    tot.aug.assign(tot.basis[0].size(), 0);
    for (std::size_t id = 0; id < ncells; ++id) {
        if (cc.cell_dim(id) != 0) continue;
        std::size_t off = offset.at({id, 0});
        for (std::size_t b = 0; b < R[id].aug.size(); ++b) tot.aug[off + b] = R[id].aug[b];
    }
    (void)n;
    check_complex(tot, F);
    result.tot = std::move(tot);
    return result;
}

}  // namespace vres
