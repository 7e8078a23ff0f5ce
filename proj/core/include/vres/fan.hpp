#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vres/monomial.hpp"

namespace vres {

using Cone = std::vector<int>;  // sorted ray indices; {} is the origin cone

/// A complete simplicial fan given by integer ray vectors and its maximal
/// cones (as ray-index sets). All faces are generated by closure at
/// construction. Immutable after validation; queries are read-only.
class Fan {
public:
    /// Builds the cone set from the maximal cones. Throws on duplicate rays,
    /// out-of-range indices, or maximal cones of the wrong size.
    Fan(int dim, std::vector<std::string> ray_names,
        std::vector<std::vector<long long>> rays, std::vector<Cone> maximal_cones);

    int dim() const { return dim_; }
    std::size_t nrays() const { return rays_.size(); }
    const std::vector<std::string>& ray_names() const { return ray_names_; }
    const std::vector<std::vector<long long>>& rays() const { return rays_; }
    const std::vector<Cone>& maximal_cones() const { return max_cones_; }
    const std::set<Cone>& cones() const { return cones_; }

    bool is_cone(const Cone& c) const { return cones_.count(c) > 0; }
    std::vector<Cone> cones_of_dim(int d) const;
    static Cone intersect_cones(const Cone& a, const Cone& b);

    int ray_index(const std::string& name) const;  // -1 if unknown

    /// x_sigma-hat: product of variables for rays outside the cone.
    Monomial complement_monomial(const Cone& sigma) const;
    /// <x_sigma-hat : sigma maximal>, minimalized.
    MonomialIdeal irrelevant_ideal() const;

    /// A coherent +-1 per maximal cone (a fundamental cycle of the underlying
    /// sphere): for every shared facet the two signed incidences cancel.
    std::vector<int> orientation() const;

private:
    int dim_;
    std::vector<std::string> ray_names_;
    std::vector<std::vector<long long>> rays_;
    std::vector<Cone> max_cones_;
    std::set<Cone> cones_;
};

struct FanCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FanValidation {
    std::vector<FanCheck> checks;
    bool structural_ok = false;  // simplicial + closure + completeness
    bool smooth = false;
    bool ok(bool require_smooth) const { return structural_ok && (!require_smooth || smooth); }
};

/// Checks: simpliciality (exact rank), facet pairing (every (n-1)-subcone of
/// a maximal cone lies in exactly two maximal cones), randomized direction
/// coverage (seeded), smoothness (|det| = 1 per maximal cone).
FanValidation validate_fan(const Fan& f, unsigned coverage_samples = 1000, std::uint64_t seed = 0);

/// Fan file format: `dim N`, `ray <name> <c1> ... <cN>`, `cone <name>...`
/// (maximal cones only), `#` comments.
Fan parse_fan(const std::string& text);
Fan load_fan_file(const std::string& path);

/// Bundled fans: p1, p2, p1p1, p2p1, hirzebruch<a>.
bool is_builtin_fan(const std::string& name);
Fan builtin_fan(const std::string& name);

}  // namespace vres
