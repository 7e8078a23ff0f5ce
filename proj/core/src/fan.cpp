#include "vres/fan.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace vres {

namespace {

using i128 = __int128;

/// Rank of an integer matrix by fraction-free elimination. Exact.
std::size_t integer_rank(std::vector<std::vector<i128>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            i128 a = m[rank][c], b = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * a - m[rank][j] * b;
        }
        ++rank;
    }
    return rank;
}

/// Bareiss fraction-free determinant. Exact for the small integer matrices
/// that arise from fan rays.
i128 determinant(std::vector<std::vector<i128>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    i128 denom = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t j = c + 1; j < n; ++j)
                m[r][j] = (m[r][j] * m[c][c] - m[c][j] * m[r][c]) / denom;
            m[r][c] = 0;
        }
        denom = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Fan::Fan(int dim, std::vector<std::string> ray_names,
         std::vector<std::vector<long long>> rays, std::vector<Cone> maximal_cones)
    : dim_(dim), ray_names_(std::move(ray_names)), rays_(std::move(rays)),
      max_cones_(std::move(maximal_cones)) {
    if (dim_ <= 0) throw parse_error("fan dimension must be positive");
    if (ray_names_.size() != rays_.size()) throw parse_error("ray name/vector count mismatch");
    for (const auto& r : rays_)
        if (int(r.size()) != dim_) throw parse_error("ray vector has wrong length");
    for (std::size_t i = 0; i < rays_.size(); ++i)
        for (std::size_t j = i + 1; j < rays_.size(); ++j)
            if (rays_[i] == rays_[j])
                throw parse_error("duplicate ray vectors: " + ray_names_[i] + ", " + ray_names_[j]);
    std::set<std::string> seen;
    for (const auto& nm : ray_names_)
        if (!seen.insert(nm).second) throw parse_error("duplicate ray name: " + nm);

    for (auto& c : max_cones_) {
        std::sort(c.begin(), c.end());
        if (std::unique(c.begin(), c.end()) != c.end())
            throw parse_error("maximal cone repeats a ray");
        for (int idx : c)
            if (idx < 0 || idx >= int(rays_.size())) throw parse_error("cone ray index out of range");
        if (int(c.size()) != dim_)
            throw parse_error("maximal cone must have exactly dim rays (completeness prerequisite)");
    }
    std::sort(max_cones_.begin(), max_cones_.end());
    max_cones_.erase(std::unique(max_cones_.begin(), max_cones_.end()), max_cones_.end());

    // closure under subsets; includes the origin cone {}
    for (const auto& mc : max_cones_) {
        std::size_t k = mc.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            Cone face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(mc[i]);
            cones_.insert(face);
        }
    }
}

std::vector<Cone> Fan::cones_of_dim(int d) const {
    std::vector<Cone> out;
    for (const auto& c : cones_)
        if (int(c.size()) == d) out.push_back(c);
    return out;
}

Cone Fan::intersect_cones(const Cone& a, const Cone& b) {
    Cone out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int Fan::ray_index(const std::string& name) const {
    auto it = std::find(ray_names_.begin(), ray_names_.end(), name);
    return it == ray_names_.end() ? -1 : int(it - ray_names_.begin());
}

Monomial Fan::complement_monomial(const Cone& sigma) const {
    if (!is_cone(sigma)) throw arithmetic_error("complement_monomial: not a cone of the fan");
    std::vector<std::uint32_t> v(nrays(), 1);
    for (int idx : sigma) v[idx] = 0;
    return Monomial(std::move(v));
}

MonomialIdeal Fan::irrelevant_ideal() const {
    std::vector<Monomial> gens;
    for (const auto& mc : max_cones_) gens.push_back(complement_monomial(mc));
    return MonomialIdeal::make(nrays(), std::move(gens));
}

std::vector<int> Fan::orientation() const {
    // sign of rho inside the sorted cone c
    auto eps = [](const Cone& c, int rho) {
        auto pos = std::lower_bound(c.begin(), c.end(), rho) - c.begin();
        return pos % 2 == 0 ? 1 : -1;
    };
    std::map<Cone, std::vector<std::size_t>> by_facet;
    for (std::size_t i = 0; i < max_cones_.size(); ++i)
        for (int rho : max_cones_[i]) {
            Cone facet = max_cones_[i];
            facet.erase(std::find(facet.begin(), facet.end(), rho));
            by_facet[facet].push_back(i);
        }
    // propagate a coherent orientation across facet pairs; the underlying
    // sphere of a complete fan is orientable and connected, so this is
    // consistent and reaches every maximal cone
    std::vector<int> eta(max_cones_.size(), 0);
    std::vector<std::size_t> queue{0};
    eta[0] = 1;
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        for (int rho : max_cones_[i]) {
            Cone facet = max_cones_[i];
            facet.erase(std::find(facet.begin(), facet.end(), rho));
            for (std::size_t j : by_facet.at(facet)) {
                if (j == i) continue;
                Cone other;
                std::set_difference(max_cones_[j].begin(), max_cones_[j].end(), facet.begin(),
                                    facet.end(), std::back_inserter(other));
                int want = -eta[i] * eps(max_cones_[i], rho) * eps(max_cones_[j], other[0]);
                if (eta[j] == 0) {
                    eta[j] = want;
                    queue.push_back(j);
                } else if (eta[j] != want) {
                    throw arithmetic_error("fan orientation: incidence signs are inconsistent");
                }
            }
        }
    }
    for (int v : eta)
        if (v == 0) throw arithmetic_error("fan orientation: facet graph is disconnected");
    return eta;
}

FanValidation validate_fan(const Fan& f, unsigned coverage_samples, std::uint64_t seed) {
    FanValidation out;
    const int n = f.dim();

    // simpliciality: rays of every cone are linearly independent
    {
        FanCheck c{"simplicial", true, ""};
        for (const auto& cone : f.cones()) {
            if (cone.empty()) continue;
            std::vector<std::vector<i128>> m;
            for (int idx : cone) {
                std::vector<i128> row(f.rays()[idx].begin(), f.rays()[idx].end());
                m.push_back(std::move(row));
            }
            if (integer_rank(m) != cone.size()) {
                c.pass = false;
                c.detail = "linearly dependent rays in a cone of " + std::to_string(cone.size()) + " rays";
                break;
            }
        }
        out.checks.push_back(c);
    }

    // closure under faces and pairwise intersections (faces hold by construction)
    {
        FanCheck c{"closure", true, ""};
        const auto& mcs = f.maximal_cones();
        for (std::size_t i = 0; i < mcs.size() && c.pass; ++i)
            for (std::size_t j = i + 1; j < mcs.size() && c.pass; ++j) {
                Cone inter = Fan::intersect_cones(mcs[i], mcs[j]);
                if (!f.is_cone(inter)) {
                    c.pass = false;
                    c.detail = "intersection of two maximal cones is not a cone";
                }
            }
        out.checks.push_back(c);
    }

    // facet pairing: every (n-1)-subcone of a maximal cone lies in exactly
    // two maximal cones
    {
        FanCheck c{"facet_pairing", true, ""};
        std::set<Cone> facets;
        for (const auto& mc : f.maximal_cones())
            for (std::size_t drop = 0; drop < mc.size(); ++drop) {
                Cone facet = mc;
                facet.erase(facet.begin() + long(drop));
                facets.insert(facet);
            }
        for (const auto& facet : facets) {
            int count = 0;
            for (const auto& mc : f.maximal_cones())
                if (std::includes(mc.begin(), mc.end(), facet.begin(), facet.end())) ++count;
            if (count != 2) {
                c.pass = false;
                std::string names;
                for (int idx : facet) names += (names.empty() ? "" : ",") + f.ray_names()[idx];
                c.detail = "facet {" + names + "} lies in " + std::to_string(count) +
                           " maximal cones (expected 2)";
                break;
            }
        }
        out.checks.push_back(c);
    }

    // randomized direction coverage: each sampled integer direction must lie
    // in the real span-cone of some maximal cone (exact sign test via Cramer)
    {
        FanCheck c{"coverage", true, ""};
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long long> dist(-9, 9);
        for (unsigned s = 0; s < coverage_samples && c.pass; ++s) {
            std::vector<long long> d(std::size_t(n), 0);
            bool zero = true;
            for (auto& v : d) {
                v = dist(rng);
                if (v != 0) zero = false;
            }
            if (zero) continue;
            bool covered = false;
            for (const auto& mc : f.maximal_cones()) {
                std::vector<std::vector<i128>> M(std::size_t(n), std::vector<i128>(std::size_t(n), 0));
                for (int col = 0; col < n; ++col)
                    for (int row = 0; row < n; ++row) M[std::size_t(row)][std::size_t(col)] = f.rays()[mc[std::size_t(col)]][std::size_t(row)];
                i128 det = determinant(M);
                if (det == 0) continue;
                bool inside = true;
                for (int i = 0; i < n && inside; ++i) {
                    auto Mi = M;
                    for (int row = 0; row < n; ++row) Mi[std::size_t(row)][std::size_t(i)] = d[std::size_t(row)];
                    i128 deti = determinant(Mi);
                    // lambda_i = deti/det must be >= 0
                    if ((deti > 0 && det < 0) || (deti < 0 && det > 0)) inside = false;
                }
                if (inside) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                c.pass = false;
                std::string dir;
                for (auto v : d) dir += (dir.empty() ? "" : ",") + std::to_string(v);
                c.detail = "direction (" + dir + ") not covered by any maximal cone";
            }
        }
        out.checks.push_back(c);
    }

    // smoothness: |det| of the ray matrix of each maximal cone is 1
    {
        FanCheck c{"smooth", true, ""};
        for (const auto& mc : f.maximal_cones()) {
            std::vector<std::vector<i128>> M;
            for (int idx : mc) {
                std::vector<i128> row(f.rays()[idx].begin(), f.rays()[idx].end());
                M.push_back(std::move(row));
            }
            i128 det = determinant(M);
            if (det != 1 && det != -1) {
                std::string names;
                for (int idx : mc) names += (names.empty() ? "" : ",") + f.ray_names()[idx];
                c.pass = false;
                c.detail = "cone {" + names + "} has |det| != 1";
                break;
            }
        }
        out.checks.push_back(c);
        out.smooth = c.pass;
    }

    out.structural_ok = true;
    for (const auto& c : out.checks)
        if (c.name != "smooth" && !c.pass) out.structural_ok = false;
    return out;
}

Fan parse_fan(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int dim = 0;
    std::vector<std::string> names;
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<std::string>> cone_lines;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "dim") {
            if (!(ls >> dim)) throw parse_error("line " + std::to_string(lineno) + ": bad dim");
        } else if (kw == "ray") {
            std::string name;
            if (!(ls >> name)) throw parse_error("line " + std::to_string(lineno) + ": ray needs a name");
            std::vector<long long> v;
            long long x;
            while (ls >> x) v.push_back(x);
            names.push_back(name);
            rays.push_back(std::move(v));
        } else if (kw == "cone") {
            std::vector<std::string> members;
            std::string m;
            while (ls >> m) members.push_back(m);
            if (members.empty()) throw parse_error("line " + std::to_string(lineno) + ": empty cone");
            cone_lines.push_back(std::move(members));
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    if (dim == 0) throw parse_error("fan file missing 'dim'");
    std::vector<Cone> max_cones;
    for (const auto& members : cone_lines) {
        Cone c;
        for (const auto& m : members) {
            auto it = std::find(names.begin(), names.end(), m);
            if (it == names.end()) throw parse_error("cone references unknown ray '" + m + "'");
            c.push_back(int(it - names.begin()));
        }
        max_cones.push_back(std::move(c));
    }
    return Fan(dim, std::move(names), std::move(rays), std::move(max_cones));
}

Fan load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open fan file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fan(ss.str());
}

bool is_builtin_fan(const std::string& name) {
    if (name == "p1" || name == "p2" || name == "p1p1" || name == "p2p1") return true;
    if (name.rfind("hirzebruch", 0) == 0 && name.size() > 10)
        return std::all_of(name.begin() + 10, name.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    return false;
}

Fan builtin_fan(const std::string& name) {
    if (name == "p1")
        return parse_fan("dim 1\n"
                         "ray x0 1\n"
                         "ray x1 -1\n"
                         "cone x0\ncone x1\n");
    if (name == "p2")
        return parse_fan("dim 2\n"
                         "ray x0 1 0\n"
                         "ray x1 0 1\n"
                         "ray x2 -1 -1\n"
                         "cone x0 x1\ncone x1 x2\ncone x0 x2\n");
    if (name == "p1p1")
        return parse_fan("dim 2\n"
                         "ray x0 1 0\n"
                         "ray x1 -1 0\n"
                         "ray x2 0 1\n"
                         "ray x3 0 -1\n"
                         "cone x0 x2\ncone x0 x3\ncone x1 x2\ncone x1 x3\n");
    if (name == "p2p1")
        return parse_fan("dim 3\n"
                         "ray x0 0 1 0\n"
                         "ray x1 1 0 1\n"
                         "ray x2 -1 0 0\n"
                         "ray x3 0 0 -1\n"
                         "ray x4 0 -1 0\n"
                         "cone x0 x1 x2\ncone x0 x1 x3\ncone x0 x2 x3\n"
                         "cone x4 x1 x2\ncone x4 x1 x3\ncone x4 x2 x3\n");
    if (name.rfind("hirzebruch", 0) == 0) {
        long long a = std::stoll(name.substr(10));
        std::ostringstream ss;
        ss << "dim 2\n"
           << "ray x0 1 0\n"
           << "ray x1 0 1\n"
           << "ray x2 -1 " << a << "\n"
           << "ray x3 0 -1\n"
           << "cone x0 x1\ncone x1 x2\ncone x2 x3\ncone x3 x0\n";
        return parse_fan(ss.str());
    }
    throw parse_error("unknown builtin fan: " + name);
}

}  // namespace vres
