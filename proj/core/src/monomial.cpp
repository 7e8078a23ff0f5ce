#include "vres/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace vres {

namespace {

void require_same_size(const Monomial& a, const Monomial& b, const char* op) {
    if (a.nvars() != b.nvars())
        throw arithmetic_error(std::string(op) + ": ambient size mismatch (" +
                               std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
}

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s > std::numeric_limits<std::uint32_t>::max())
        throw arithmetic_error("exponent overflow in multiplication");
    return std::uint32_t(s);
}

std::uint32_t checked_mul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t(a) * b;
    if (s > std::numeric_limits<std::uint32_t>::max())
        throw arithmetic_error("exponent overflow in power");
    return std::uint32_t(s);
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t e) {
    if (i >= nvars) throw arithmetic_error("variable index out of range");
    std::vector<std::uint32_t> v(nvars, 0);
    v[i] = e;
    return Monomial(std::move(v));
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    require_same_size(*this, other, "divides");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    require_same_size(*this, other, "times");
    std::vector<std::uint32_t> v(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) v[i] = checked_add(exps_[i], other.exps_[i]);
    return Monomial(std::move(v));
}

Monomial Monomial::pow(std::uint32_t k) const {
    std::vector<std::uint32_t> v(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) v[i] = checked_mul(exps_[i], k);
    return Monomial(std::move(v));
}

Monomial Monomial::quotient_by_gcd(const Monomial& m) const {
    require_same_size(*this, m, "quotient_by_gcd");
    std::vector<std::uint32_t> v(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        v[i] = exps_[i] > m.exps_[i] ? exps_[i] - m.exps_[i] : 0;
    return Monomial(std::move(v));
}

Monomial Monomial::divide_exact(const Monomial& m) const {
    require_same_size(*this, m, "divide_exact");
    std::vector<std::uint32_t> v(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (m.exps_[i] > exps_[i]) throw arithmetic_error("divide_exact: not divisible");
        v[i] = exps_[i] - m.exps_[i];
    }
    return Monomial(std::move(v));
}

Monomial Monomial::zero_on_support(const Monomial& m) const {
    require_same_size(*this, m, "zero_on_support");
    std::vector<std::uint32_t> v = exps_;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (m.exps_[i] > 0) v[i] = 0;
    return Monomial(std::move(v));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_size(a, b, "lcm");
    std::vector<std::uint32_t> v(a.nvars());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a[i], b[i]);
    return Monomial(std::move(v));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_size(a, b, "gcd");
    std::vector<std::uint32_t> v(a.nvars());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(a[i], b[i]);
    return Monomial(std::move(v));
}

MonomialIdeal MonomialIdeal::unit_ideal(std::size_t nvars) {
    MonomialIdeal I(nvars);
    I.gens_.push_back(Monomial::unit(nvars));
    return I;
}

MonomialIdeal MonomialIdeal::make(std::size_t nvars, std::vector<Monomial> gens) {
    MonomialIdeal I(nvars);
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw arithmetic_error("generator has wrong ambient size");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) I.gens_.push_back(gens[i]);
    }
    return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw arithmetic_error("intersect: ambient size mismatch");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.nvars());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
    return MonomialIdeal::make(a.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw arithmetic_error("sum: ambient size mismatch");
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::make(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.quotient_by_gcd(m));
    return MonomialIdeal::make(I.nvars(), std::move(gens));
}

MonomialIdeal saturate_by_monomial(const MonomialIdeal& I, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.zero_on_support(m));
    return MonomialIdeal::make(I.nvars(), std::move(gens));
}

MonomialIdeal saturate_by_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) throw arithmetic_error("saturate_by_ideal: ambient size mismatch");
    if (J.is_zero()) throw arithmetic_error("saturate_by_ideal: saturation by the zero ideal");
    bool first = true;
    MonomialIdeal acc = MonomialIdeal::zero(I.nvars());
    for (const auto& g : J.generators()) {
        MonomialIdeal part = saturate_by_monomial(I, g);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

MonomialIdeal bracket_power(const MonomialIdeal& I, std::uint32_t k) {
    if (k == 0) throw arithmetic_error("bracket_power: k must be positive");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.pow(k));
    return MonomialIdeal::make(I.nvars(), std::move(gens));
}

MonomialIdeal scale(const MonomialIdeal& I, const Monomial& cofactor) {
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.times(cofactor));
    return MonomialIdeal::make(I.nvars(), std::move(gens));
}

Polarization polarize(const MonomialIdeal& I, const std::vector<std::string>& base_names) {
    const std::size_t n = I.nvars();
    if (base_names.size() != n) throw arithmetic_error("polarize: name list size mismatch");

    // max exponent per variable over all generators
    std::vector<std::uint32_t> maxexp(n, 0);
    for (const auto& g : I.generators())
        for (std::size_t j = 0; j < n; ++j) maxexp[j] = std::max(maxexp[j], g[j]);

    // new variables y_{i,j} for i = 2..maxexp[j], appended in (j, i) lex order
    Polarization p{MonomialIdeal::zero(0), {}, {}};
    p.names = base_names;
    p.origin.resize(n);
    for (std::size_t j = 0; j < n; ++j) p.origin[j] = j;
    std::vector<std::vector<std::size_t>> slot(n);  // slot[j][i-2] = enlarged index of y_{i,j}
    std::size_t next = n;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 2; i <= maxexp[j]; ++i) {
            slot[j].push_back(next++);
            p.names.push_back("y_" + std::to_string(i) + "_" + base_names[j]);
            p.origin.push_back(j);
        }
    }
    const std::size_t total = next;

    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        std::vector<std::uint32_t> v(total, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (g[j] >= 1) v[j] = 1;
            for (std::uint32_t i = 2; i <= g[j]; ++i) v[slot[j][i - 2]] = 1;
        }
        gens.emplace_back(std::move(v));
    }
    p.ideal = MonomialIdeal::make(total, std::move(gens));
    return p;
}

MonomialIdeal depolarize(const Polarization& p, std::size_t base_nvars) {
    std::vector<Monomial> gens;
    for (const auto& g : p.ideal.generators()) {
        std::vector<std::uint32_t> v(base_nvars, 0);
        for (std::size_t i = 0; i < g.nvars(); ++i) v[p.origin[i]] += g[i];
        gens.emplace_back(std::move(v));
    }
    return MonomialIdeal::make(base_nvars, std::move(gens));
}

// --- parsing / printing ------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names) {
    std::string t = strip(text);
    if (t.empty()) throw parse_error("empty monomial");
    std::vector<std::uint32_t> v(names.size(), 0);
    if (t == "1") return Monomial(std::move(v));
    for (const std::string& raw : split(t, '*')) {
        std::string factor = strip(raw);
        if (factor.empty()) throw parse_error("empty factor in monomial '" + text + "'");
        std::string name = factor;
        std::uint64_t e = 1;
        std::size_t caret = factor.find('^');
        if (caret != std::string::npos) {
            name = strip(factor.substr(0, caret));
            std::string es = strip(factor.substr(caret + 1));
            if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw parse_error("bad exponent '" + es + "' in '" + text + "'");
            e = std::stoull(es);
            if (e > std::numeric_limits<std::uint32_t>::max()) throw parse_error("exponent too large");
        }
        if (name.empty() || !std::all_of(name.begin(), name.end(), name_char) ||
            std::isdigit(static_cast<unsigned char>(name[0])))
            throw parse_error("bad variable name '" + name + "' in '" + text + "'");
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw parse_error("unknown variable '" + name + "'");
        std::size_t idx = std::size_t(it - names.begin());
        std::uint64_t s = std::uint64_t(v[idx]) + e;
        if (s > std::numeric_limits<std::uint32_t>::max()) throw parse_error("exponent too large");
        v[idx] = std::uint32_t(s);
    }
    return Monomial(std::move(v));
}

MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& names) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '<' || t.back() != '>')
        throw parse_error("ideal literal must be enclosed in <...>: '" + text + "'");
    std::string body = strip(t.substr(1, t.size() - 2));
    if (body == "0") return MonomialIdeal::zero(names.size());
    if (body.empty()) throw parse_error("empty ideal literal; use <0> for the zero ideal");
    std::vector<Monomial> gens;
    for (const std::string& part : split(body, ',')) gens.push_back(parse_monomial(part, names));
    return MonomialIdeal::make(names.size(), std::move(gens));
}

std::pair<MonomialIdeal, std::vector<std::string>> parse_ideal_infer_names(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '<' || t.back() != '>')
        throw parse_error("ideal literal must be enclosed in <...>: '" + text + "'");
    std::vector<std::string> names;
    std::string body = t.substr(1, t.size() - 2);
    // collect names in order of first appearance
    for (std::size_t i = 0; i < body.size();) {
        char c = body[i];
        if ((std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
            std::size_t j = i;
            while (j < body.size() && name_char(body[j])) ++j;
            std::string name = body.substr(i, j - i);
            if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
            i = j;
        } else
            ++i;
    }
    return {parse_ideal(text, names), names};
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& names) {
    if (I.is_zero()) return "<0>";
    std::string out = "<";
    for (std::size_t i = 0; i < I.generators().size(); ++i) {
        if (i) out += ", ";
        out += format_monomial(I.generators()[i], names);
    }
    return out + ">";
}

}  // namespace vres
