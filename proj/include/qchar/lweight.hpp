#pragma once

// The l-weight lattice restricted to spectral parameters q^k: a free abelian
// group on symbols w[i;k] (node i, q-exponent k), kept in canonical sorted form.

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/root_system.hpp"

namespace qchar {

struct Term {
    int node = 0;
    int exp = 0;
    int mult = 0;

    auto operator<=>(const Term&) const = default;
};

/// One coordinate of an l-weight, read as the rational function
/// prod_k (1 - q^k u)^{m_k}.
using CoordinatePoly = std::map<int, int>;

class LWeight {
public:
    LWeight() = default;

    /// Builds from arbitrary terms; equal (node, exp) pairs are summed and zeros dropped.
    static LWeight from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end());
        LWeight out;
        for (const auto& t : terms) {
            if (t.node < 1) throw std::out_of_range("l-weight node must be positive");
            if (!out.terms_.empty() && out.terms_.back().node == t.node && out.terms_.back().exp == t.exp)
                out.terms_.back().mult += t.mult;
            else
                out.terms_.push_back(t);
            if (out.terms_.back().mult == 0) out.terms_.pop_back();
        }
        return out;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_identity() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Largest node index appearing, 0 for the identity.
    int max_node() const { return terms_.empty() ? 0 : terms_.back().node; }

    LWeight& operator*=(const LWeight& o) {
        *this = merge(*this, o, 1);
        return *this;
    }
    friend LWeight operator*(const LWeight& a, const LWeight& b) { return merge(a, b, 1); }
    friend LWeight operator/(const LWeight& a, const LWeight& b) { return merge(a, b, -1); }

    LWeight inverse() const {
        LWeight out = *this;
        for (auto& t : out.terms_) t.mult = -t.mult;
        return out;
    }

    LWeight pow(int e) const {
        if (e == 0) return {};
        LWeight out = *this;
        for (auto& t : out.terms_) t.mult *= e;
        return out;
    }

    /// Multiplies every spectral parameter by q^s.
    LWeight shifted(int s) const {
        LWeight out = *this;
        for (auto& t : out.terms_) t.exp += s;
        return out;
    }

    bool operator==(const LWeight&) const = default;
    auto operator<=>(const LWeight& o) const { return terms_ <=> o.terms_; }

private:
    static LWeight merge(const LWeight& a, const LWeight& b, int sign) {
        LWeight out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        auto key_less = [](const Term& x, const Term& y) {
            return x.node != y.node ? x.node < y.node : x.exp < y.exp;
        };
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && key_less(*ia, *ib))) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || key_less(*ib, *ia)) {
                out.terms_.push_back({ib->node, ib->exp, sign * ib->mult});
                ++ib;
            } else {
                const int m = ia->mult + sign * ib->mult;
                if (m != 0) out.terms_.push_back({ia->node, ia->exp, m});
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    std::vector<Term> terms_;
};

/// The fundamental l-weight w[i;k]; node 0 is the identity by convention.
inline LWeight gen(int node, int exp) {
    if (node < 0) throw std::out_of_range("negative node index");
    if (node == 0) return {};
    return LWeight::from_terms({{node, exp, 1}});
}

inline LWeight gen(const RootSystem& rs, int node, int exp) {
    rs.check_node(node);
    return gen(node, exp);
}

inline LWeight inv(const LWeight& x) { return x.inverse(); }
inline LWeight pow(const LWeight& x, int e) { return x.pow(e); }

inline void check_fits(const RootSystem& rs, const LWeight& x) {
    if (x.max_node() > rs.rank())
        throw std::out_of_range("l-weight uses node " + std::to_string(x.max_node()) +
                                " beyond rank of " + rs.name());
}

/// The projection wt: w[i;k] -> omega_i.
inline Weight weight_of(const RootSystem& rs, const LWeight& x) {
    check_fits(rs, x);
    Weight w = rs.zero();
    for (const auto& t : x.terms()) w[t.node] += t.mult;
    return w;
}

inline CoordinatePoly coordinate(const LWeight& x, int node) {
    if (node < 1) throw std::out_of_range("coordinate node must be positive");
    CoordinatePoly out;
    for (const auto& t : x.terms())
        if (t.node == node) out[t.exp] += t.mult;
    return out;
}

inline CoordinatePoly coordinate(const RootSystem& rs, const LWeight& x, int node) {
    rs.check_node(node);
    return coordinate(x, node);
}

/// Inverse of the coordinate view: rebuilds the l-weight from its n coordinates.
inline LWeight from_coordinates(const std::vector<CoordinatePoly>& coords) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < coords.size(); ++j)
        for (const auto& [k, m] : coords[j])
            if (m != 0) terms.push_back({static_cast<int>(j) + 1, k, m});
    return LWeight::from_terms(std::move(terms));
}

/// l-dominant: every coordinate is a polynomial.
inline bool is_l_dominant(const LWeight& x) {
    return std::all_of(x.terms().begin(), x.terms().end(), [](const Term& t) { return t.mult > 0; });
}

enum class Notation { Omega, Y };

/// "w[1;0]*w[2;3]^-1"; the identity renders as "1".
inline std::string to_string(const LWeight& x, Notation notation = Notation::Omega) {
    if (x.is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : x.terms()) {
        if (!first) os << '*';
        first = false;
        if (notation == Notation::Omega)
            os << "w[" << t.node << ';' << t.exp << ']';
        else
            os << "Y_{" << t.node << ',' << t.exp << '}';
        if (t.mult != 1) os << '^' << t.mult;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LWeight& x) { return os << to_string(x); }

} // namespace qchar
