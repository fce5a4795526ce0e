#pragma once

// Index sets I_i, the partition families J_{k,r} and J_r, and the type D flip
// combinatorics (iota, sigma, tau, supp_m, flips, equivalence classes).

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/root_system.hpp"

namespace qchar {

struct Partition {
    std::vector<int> parts; // strictly increasing

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        if (!std::is_sorted(parts.begin(), parts.end()) ||
            std::adjacent_find(parts.begin(), parts.end()) != parts.end())
            throw std::invalid_argument("partition parts must be strictly increasing");
    }
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    bool contains(int j) const { return std::binary_search(parts.begin(), parts.end(), j); }
    int last() const { return parts.back(); }

    auto operator<=>(const Partition&) const = default;
};

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t a = 0; a < p.parts.size(); ++a) {
        if (a) s += ',';
        s += std::to_string(p.parts[a]);
    }
    return s + ")";
}

enum class Sign { Minus = -1, Plus = 1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long a = 1; a <= k; ++a) out = out * (n - k + a) / a;
    return out;
}

/// Nodes whose dominant l-weights are given by the partition formulas.
inline bool has_partition_formula(const RootSystem& rs, int i) {
    const int n = rs.rank();
    switch (rs.kind()) {
    case Kind::C: return 1 < i && i <= n;
    case Kind::B: return 1 <= i && i < n;
    case Kind::D: return 1 < i && i <= n - 2;
    case Kind::A: return false;
    }
    return false;
}

inline std::string partition_node_range(Kind k) {
    switch (k) {
    case Kind::C: return "1 < i <= n";
    case Kind::B: return "1 <= i < n";
    case Kind::D: return "1 < i <= n-2";
    case Kind::A: return "none";
    }
    return "none";
}

/// I_i: 0..i for B, and the r of the same parity as i for C and D.
inline std::vector<int> index_set(const RootSystem& rs, int i) {
    if (!has_partition_formula(rs, i))
        throw std::invalid_argument("node " + std::to_string(i) + " of " + rs.name() +
                                    " outside the partition range " + partition_node_range(rs.kind()));
    std::vector<int> out;
    for (int r = 0; r <= i; ++r)
        if (rs.kind() == Kind::B || (i - r) % 2 == 0) out.push_back(r);
    return out;
}

class PartitionCtx {
public:
    PartitionCtx(RootSystem rs, int i, int r) : rs_(std::move(rs)), i_(i), r_(r) {
        const auto I = index_set(rs_, i_);
        if (std::find(I.begin(), I.end(), r_) == I.end())
            throw std::invalid_argument("r=" + std::to_string(r) + " not in I_" + std::to_string(i) +
                                        " for " + rs_.name() +
                                        (rs_.kind() == Kind::B ? "" : " (need 0 <= r <= i, r = i mod 2)"));
    }

    const RootSystem& rs() const { return rs_; }
    Kind kind() const { return rs_.kind(); }
    int n() const { return rs_.rank(); }
    int i() const { return i_; }
    int r() const { return r_; }
    /// floor((i - r) / 2)
    int M() const { return (i_ - r_) / 2; }
    /// n - i + r - 2, the offset of supp^+ in type D.
    int N() const { return n() - i_ + r_ - 2; }

    PartitionCtx with_r(int r) const { return PartitionCtx(rs_, i_, r); }

private:
    RootSystem rs_;
    int i_;
    int r_;
};

inline bool in_J_k(const PartitionCtx& ctx, const Partition& p) {
    const int n = ctx.n();
    const int k = p.length();
    if (k > 0 && (p.parts.front() <= ctx.r() || p.last() > n)) return false;
    if (ctx.kind() == Kind::C) {
        for (int s = 1; s <= k; ++s)
            if (p.parts[s - 1] > n - ctx.i() + ctx.r() + 2 * s - 1) return false;
    }
    if (ctx.kind() == Kind::D && k > 0 && p.last() >= n) return false;
    return true;
}

inline bool in_J(const PartitionCtx& ctx, const Partition& p) {
    if (!in_J_k(ctx, p)) return false;
    if (ctx.kind() == Kind::C) return p.length() == ctx.M();
    return p.length() <= ctx.M();
}

/// J_{k,r}, lexicographically sorted.
inline std::vector<Partition> enumerate_J_k(const PartitionCtx& ctx, int k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> cur;
    const int n = ctx.n();
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == k) {
            Partition p;
            p.parts = cur;
            if (in_J_k(ctx, p)) out.push_back(std::move(p));
            return;
        }
        const int s = static_cast<int>(cur.size()) + 1;
        int hi = n;
        if (ctx.kind() == Kind::C) hi = std::min(hi, n - ctx.i() + ctx.r() + 2 * s - 1);
        for (int j = lo; j <= hi; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, ctx.r() + 1);
    return out;
}

/// J_r grouped by length k.
inline std::map<int, std::vector<Partition>> enumerate_J(const PartitionCtx& ctx) {
    std::map<int, std::vector<Partition>> out;
    const int lo = ctx.kind() == Kind::C ? ctx.M() : 0;
    for (int k = lo; k <= ctx.M(); ++k) out[k] = enumerate_J_k(ctx, k);
    return out;
}

inline std::vector<Partition> all_partitions(const PartitionCtx& ctx) {
    std::vector<Partition> out;
    for (auto& [k, ps] : enumerate_J(ctx)) out.insert(out.end(), ps.begin(), ps.end());
    return out;
}

/// Closed form for |J_{k,r}| (type D) and |J_r| (types B, C).
inline long long count_J_k_closed(const PartitionCtx& ctx, int k) {
    if (ctx.kind() != Kind::D) throw std::invalid_argument("per-length closed form is type D only");
    return binomial(ctx.n() - ctx.r() - 1, k);
}

inline long long count_J_closed(const PartitionCtx& ctx) {
    const int nr = ctx.n() - ctx.r();
    const int M = ctx.M();
    long long total = 0;
    switch (ctx.kind()) {
    case Kind::C: return binomial(nr, M) - binomial(nr, M - 1);
    case Kind::B:
        for (int k = 0; k <= M; ++k) total += binomial(nr, k);
        return total;
    case Kind::D:
        for (int k = 0; k <= M; ++k) total += binomial(nr - 1, k);
        return total;
    case Kind::A: break;
    }
    throw std::invalid_argument("no partition family for type A");
}

/// Dominant mass carried by weight omega_r in type D: |J_{M,r}| + 2 sum_{k<M} |J_{k,r}|,
/// which must equal sum_{l<=M} C(n-r, l).
inline long long d_weight_mass(const PartitionCtx& ctx) {
    long long total = 0;
    for (int k = 0; k <= ctx.M(); ++k)
        total += (k < ctx.M() ? 2 : 1) * static_cast<long long>(enumerate_J_k(ctx, k).size());
    return total;
}

/// |J_r| by enumeration, cross-checked against the closed form.
inline long long count_J(const PartitionCtx& ctx) {
    const auto enumerated = static_cast<long long>(all_partitions(ctx).size());
    const long long closed = count_J_closed(ctx);
    if (enumerated != closed)
        throw std::logic_error("|J_r| mismatch for " + ctx.rs().name() + " i=" + std::to_string(ctx.i()) +
                               " r=" + std::to_string(ctx.r()) + ": " + std::to_string(enumerated) +
                               " vs " + std::to_string(closed));
    return enumerated;
}

// ---- type D flip combinatorics ----

inline const std::vector<int>& supp(const Partition& p) { return p.parts; }

inline int iota(const Partition& p, int j) {
    auto it = std::lower_bound(p.parts.begin(), p.parts.end(), j);
    if (it == p.parts.end() || *it != j)
        throw std::out_of_range(std::to_string(j) + " not in supp" + to_string(p));
    return static_cast<int>(it - p.parts.begin()) + 1;
}

inline int sigma(const Partition& p, int j, Sign sign) {
    const int s = iota(p, j);
    int best = j;
    if (sign == Sign::Plus) {
        for (int jp : p.parts) {
            if (jp <= j) continue;
            bool ok = true;
            for (int jpp : p.parts)
                if (j < jpp && jpp <= jp && !(jpp - j < 2 * (iota(p, jpp) - s))) ok = false;
            if (ok) best = std::max(best, jp);
        }
    } else {
        for (int jp : p.parts) {
            if (jp >= j) continue;
            bool ok = true;
            for (int jpp : p.parts)
                if (jp <= jpp && jpp < j && !(j - jpp < 2 * (s - iota(p, jpp)))) ok = false;
            if (ok) best = std::min(best, jp);
        }
    }
    return best;
}

inline int tau(const Partition& p, int j, Sign sign) {
    return j + 2 * (iota(p, sigma(p, j, sign)) - iota(p, j)) + sign_value(sign);
}

namespace detail {

inline void toggle_interval(std::set<int>& s, int a, int b) {
    for (int x = std::min(a, b); x <= std::max(a, b); ++x)
        if (!s.erase(x)) s.insert(x);
}

inline Partition from_set(const std::set<int>& s) {
    Partition p;
    p.parts.assign(s.begin(), s.end());
    return p;
}

} // namespace detail

/// n^{+-}(j): symmetric difference of supp(p) with the interval [j, tau^{+-}(j)].
inline Partition flip(const Partition& p, int j, Sign sign) {
    std::set<int> s(p.parts.begin(), p.parts.end());
    detail::toggle_interval(s, j, tau(p, j, sign));
    return detail::from_set(s);
}

/// n^{+-}(S): all intervals computed on p, then toggled together.
inline Partition flip_set(const Partition& p, const std::vector<int>& S, Sign sign) {
    std::vector<std::pair<int, int>> ivs;
    for (int j : S) ivs.emplace_back(j, tau(p, j, sign));
    std::set<int> s(p.parts.begin(), p.parts.end());
    for (auto [a, b] : ivs) detail::toggle_interval(s, a, b);
    return detail::from_set(s);
}

/// supp_m(p) = { j : 2 iota(j) = j - m }.
inline std::vector<int> supp_m(const Partition& p, int m) {
    std::vector<int> out;
    for (int s = 1; s <= p.length(); ++s)
        if (2 * s == p.parts[s - 1] - m) out.push_back(p.parts[s - 1]);
    return out;
}

inline void require_D(const PartitionCtx& ctx, const char* what) {
    if (ctx.kind() != Kind::D) throw std::invalid_argument(std::string(what) + " needs a type D context");
}

/// supp^+ = supp_N, supp^- = supp_{N+1}.
inline std::vector<int> supp_pm(const PartitionCtx& ctx, const Partition& p, Sign sign) {
    require_D(ctx, "supp_pm");
    return supp_m(p, sign == Sign::Plus ? ctx.N() : ctx.N() + 1);
}

/// M_j: the number of s with j_s in {n-i+r+2s-2, n-i+r+2s-1}.
inline int mult_exponent(const PartitionCtx& ctx, const Partition& p) {
    require_D(ctx, "mult_exponent");
    int c = 0;
    const int base = ctx.n() - ctx.i() + ctx.r();
    for (int s = 1; s <= p.length(); ++s) {
        const int j = p.parts[s - 1];
        if (j == base + 2 * s - 2 || j == base + 2 * s - 1) ++c;
    }
    return c;
}

namespace detail {

inline std::vector<std::vector<int>> subsets(const std::vector<int>& v) {
    std::vector<std::vector<int>> out;
    const std::size_t m = v.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> s;
        for (std::size_t b = 0; b < m; ++b)
            if (mask >> b & 1) s.push_back(v[b]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace detail

/// The class of p: (p flipped down on S-) flipped up on S+, over all S- in supp^-(p)
/// and S+ in supp^+ of the intermediate partition.
inline std::set<Partition> equivalence_class(const PartitionCtx& ctx, const Partition& p) {
    require_D(ctx, "equivalence_class");
    std::set<Partition> out;
    for (const auto& Sm : detail::subsets(supp_pm(ctx, p, Sign::Minus))) {
        const Partition q = flip_set(p, Sm, Sign::Minus);
        for (const auto& Sp : detail::subsets(supp_pm(ctx, q, Sign::Plus))) out.insert(flip_set(q, Sp, Sign::Plus));
    }
    return out;
}

/// The class member with empty supp^-.
inline Partition canonical_rep(const PartitionCtx& ctx, const Partition& p) {
    require_D(ctx, "canonical_rep");
    return flip_set(p, supp_pm(ctx, p, Sign::Minus), Sign::Minus);
}

} // namespace qchar
