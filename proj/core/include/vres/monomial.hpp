#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vres {

// Thrown on contract violations: size mismatches, overflow, bad arguments.
class arithmetic_error : public std::runtime_error {
public:
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

/// A monomial in the Cox ring, stored as its exponent vector in the fine
/// Z^n grading. Immutable after construction.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    bool is_unit() const;
    std::uint64_t total_degree() const;

    bool divides(const Monomial& other) const;

    Monomial times(const Monomial& other) const;   // checked add
    Monomial pow(std::uint32_t k) const;           // checked multiply
    /// this / gcd(this, m); always defined, used by colon.
    Monomial quotient_by_gcd(const Monomial& m) const;
    /// exact division; throws if m does not divide this.
    Monomial divide_exact(const Monomial& m) const;
    /// exponents of variables in supp(m) set to zero.
    Monomial zero_on_support(const Monomial& m) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
    /// lexicographic order on exponent vectors; the canonical generator order.
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// A monomial ideal stored by its unique minimal generating set, lex-sorted,
/// so equal ideals have identical representations. The zero ideal has no
/// generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars); }
    static MonomialIdeal unit_ideal(std::size_t nvars);
    /// minimalize, dedupe and sort the given generators.
    static MonomialIdeal make(std::size_t nvars, std::vector<Monomial> gens);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    /// membership: some generator divides m.
    bool contains(const Monomial& m) const;
    /// every generator of other lies in this ideal.
    bool contains_ideal(const MonomialIdeal& other) const;

    bool operator==(const MonomialIdeal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
    explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
    std::size_t nvars_;
    std::vector<Monomial> gens_;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal saturate_by_monomial(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal saturate_by_ideal(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal bracket_power(const MonomialIdeal& I, std::uint32_t k);
MonomialIdeal scale(const MonomialIdeal& I, const Monomial& cofactor);

/// Result of polarization: a squarefree ideal in an enlarged ring. The new
/// variables y_{i,j} are appended after the originals in (j, i) lex order;
/// origin[v] gives the original variable index each new slot substitutes to.
struct Polarization {
    MonomialIdeal ideal;
    std::vector<std::string> names;       // names for the enlarged ring
    std::vector<std::size_t> origin;      // size = enlarged nvars
};

Polarization polarize(const MonomialIdeal& I, const std::vector<std::string>& base_names);

/// substitute y_{i,j} -> x_j; inverse check for polarize.
MonomialIdeal depolarize(const Polarization& p, std::size_t base_nvars);

// --- text grammar -----------------------------------------------------------
//
// monomial:  `name^e` factors joined by `*`, e.g. x1^4*x2^2*x4; `1` is the
// unit.  ideal literal: comma-separated monomials inside <...>, `<0>` the
// zero ideal.

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names);
MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& names);
/// parse with variables inferred from the literal, in order of first appearance.
std::pair<MonomialIdeal, std::vector<std::string>> parse_ideal_infer_names(const std::string& text);

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);
std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& names);

}  // namespace vres
