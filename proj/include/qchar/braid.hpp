#pragma once

// Braid group action on the l-weight lattice, the words w_{r,j} used by the
// induction, and closed-form evaluations of T_{w_{r,j}} on fundamental
// l-weights.

#include <stdexcept>
#include <string>
#include <vector>

#include "qchar/lweight.hpp"
#include "qchar/root_system.hpp"

namespace qchar {

using BraidWord = std::vector<int>;

namespace detail {

// q-exponent shifts by which coordinate i feeds into a neighbour j, keyed on a_{ji}.
inline std::vector<int> neighbour_shifts(const RootSystem& rs, int j, int i) {
    switch (rs.cartan(j, i)) {
    case 0: return {};
    case -1: return {rs.d(i)};
    case -2: return {3, 1};
    case -3: return {5, 3, 1};
    default: throw std::logic_error("unexpected Cartan entry");
    }
}

} // namespace detail

/// T_i acting coordinate-wise: coordinate i is inverted and shifted by 2 d_i,
/// each neighbour j picks up shifted copies of coordinate i.
inline LWeight braid_apply(const RootSystem& rs, int i, const LWeight& x) {
    rs.check_node(i);
    check_fits(rs, x);
    std::vector<Term> out;
    out.reserve(x.size() * 3);
    for (const auto& t : x.terms()) {
        if (t.node != i) {
            out.push_back(t);
            continue;
        }
        out.push_back({i, t.exp + 2 * rs.d(i), -t.mult});
        for (int j = 1; j <= rs.rank(); ++j) {
            if (j == i) continue;
            for (int s : detail::neighbour_shifts(rs, j, i)) out.push_back({j, t.exp + s, t.mult});
        }
    }
    return LWeight::from_terms(std::move(out));
}

/// T_i^{-1}: recover coordinate i first, then strip its contribution from the neighbours.
inline LWeight braid_apply_inverse(const RootSystem& rs, int i, const LWeight& y) {
    rs.check_node(i);
    check_fits(rs, y);
    std::vector<Term> out;
    for (const auto& t : y.terms()) {
        if (t.node != i) {
            out.push_back(t);
            continue;
        }
        const int exp = t.exp - 2 * rs.d(i);
        out.push_back({i, exp, -t.mult});
        for (int j = 1; j <= rs.rank(); ++j) {
            if (j == i) continue;
            for (int s : detail::neighbour_shifts(rs, j, i)) out.push_back({j, exp + s, t.mult});
        }
    }
    return LWeight::from_terms(std::move(out));
}

/// T_w = T_{i_1} ... T_{i_k}; the last letter acts first.
inline LWeight braid_apply_word(const RootSystem& rs, const BraidWord& word, LWeight x) {
    for (int i : word) rs.check_node(i);
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = braid_apply(rs, *it, x);
    return x;
}

/// alpha_{i,q^k} = T_i(w[i;k])^{-1} w[i;k].
inline LWeight simple_l_root(const RootSystem& rs, int i, int k) {
    const LWeight w = gen(rs, i, k);
    return braid_apply(rs, i, w).inverse() * w;
}

namespace detail {

inline void append_desc(BraidWord& w, int from, int to) {
    for (int a = from; a >= to; --a) w.push_back(a);
}
inline void append_asc(BraidWord& w, int from, int to) {
    for (int a = from; a <= to; ++a) w.push_back(a);
}

[[noreturn]] inline void bad_wrj(const RootSystem& rs, int r, int j) {
    throw std::invalid_argument("w_{r,j} undefined for " + rs.name() + " at r=" + std::to_string(r) +
                                ", j=" + std::to_string(j));
}

} // namespace detail

inline bool wrj_defined(const RootSystem& rs, int r, int j) {
    const int n = rs.rank();
    switch (rs.kind()) {
    case Kind::C: return r > 1 && r <= n && j >= r - 1 && j < n;
    case Kind::B:
        if (j == n) return r >= 1 && r < n;
        return r > 1 && r < n && j >= r - 1 && j < n;
    case Kind::D: return r > 1 && r <= n - 2 && j >= r - 1 && j <= n;
    case Kind::A: return false;
    }
    return false;
}

/// The Weyl group element w_{r,j} as the reduced word used to move omega_r
/// to omega_{r-2} + alpha_j (omega_{r-1} + alpha_n for w_{r,n} in type B).
inline BraidWord wrj_word(const RootSystem& rs, int r, int j) {
    if (!wrj_defined(rs, r, j)) detail::bad_wrj(rs, r, j);
    const int n = rs.rank();
    BraidWord w;
    if (rs.kind() == Kind::B && j == n) {
        detail::append_desc(w, n - 1, r);
        return w;
    }
    if (rs.kind() == Kind::D) {
        if (j <= n - 2) {
            detail::append_desc(w, j - 1, r - 1);
            detail::append_asc(w, j + 1, n - 2);
            w.push_back(n);
            detail::append_desc(w, n - 1, r);
        } else {
            detail::append_desc(w, n - 2, r - 1);
            w.push_back(j == n ? n - 1 : n);
            detail::append_desc(w, n - 2, r);
        }
        return w;
    }
    detail::append_desc(w, j - 1, r - 1);
    detail::append_asc(w, j + 1, n - 1);
    detail::append_desc(w, n, r);
    return w;
}

/// Whether closed_Trj has a displayed formula for T_{r,j}(w[l;k]).
inline bool closed_Trj_defined(const RootSystem& rs, int r, int j, int l) {
    if (!wrj_defined(rs, r, j)) return false;
    const int n = rs.rank();
    if (l < r || l > n) return false;
    if (rs.kind() == Kind::B && l == n) return j < n;
    return true;
}

/// Closed-form value of T_{w_{r,j}}(w[l;k]). The formulas are homogeneous in
/// the spectral parameter; type B spin-node inputs are tabulated at q^{-1}
/// and shifted from there.
inline LWeight closed_Trj(const RootSystem& rs, int r, int j, int l, int k) {
    if (!closed_Trj_defined(rs, r, j, l)) {
        throw std::invalid_argument("no closed form for T_{r,j}(w[l;k]) on " + rs.name() + " at r=" +
                                    std::to_string(r) + ", j=" + std::to_string(j) +
                                    ", l=" + std::to_string(l));
    }
    const int n = rs.rank();
    std::vector<Term> t;
    auto w = [&t](int node, int exp, int m = 1) {
        if (node > 0) t.push_back({node, exp, m});
    };

    switch (rs.kind()) {
    case Kind::C:
        if (l <= j) {
            w(l - 2, k + 2);
            w(j - 1, k + j - l + 3, -1);
            w(j, k + j - l + 2);
            w(j, k + 2 * n - j - l + 2);
            w(j + 1, k + 2 * n - j - l + 3, -1);
        } else {
            w(l, k + 2);
            w(j, k + l - j);
            w(j, k + 2 * n - j - l + 2);
            w(j + 1, k + l - j + 1, -1);
            w(j + 1, k + 2 * n - j - l + 3, -1);
        }
        break;

    case Kind::B: {
        // q_1 = q^2 on the long nodes
        if (l < n) {
            if (j == n) {
                w(l - 1, k + 2);
                w(n - 1, k + 2 * (n - l + 1), -1);
                w(n, k + 2 * (n - l) - 1);
                w(n, k + 2 * (n - l) + 1);
            } else if (j == n - 1) {
                w(l - 2, k + 4);
                w(n - 2, k + 2 * (n - l + 2), -1);
                w(n - 1, k + 2 * (n - l + 1));
                w(n - 1, k + 2 * (n - l));
                w(n, k + 2 * (n - l) + 1, -1);
                w(n, k + 2 * (n - l) + 3, -1);
            } else if (l <= j) {
                w(l - 2, k + 4);
                w(j - 1, k + 2 * (j - l + 3), -1);
                w(j, k + 2 * (j - l + 2));
                w(j, k + 2 * (2 * n - j - l - 1));
                w(j + 1, k + 2 * (2 * n - j - l), -1);
            } else {
                w(l, k + 4);
                w(j, k + 2 * (l - j));
                w(j, k + 2 * (2 * n - j - l - 1));
                w(j + 1, k + 2 * (l - j + 1), -1);
                w(j + 1, k + 2 * (2 * n - j - l), -1);
            }
        } else {
            const int base = k + 1; // displayed at w[n;-1]
            if (j == n - 1) {
                w(n - 1, base);
                w(n, base + 1, -1);
            } else {
                w(j, base + 2 * (n - j - 1));
                w(j + 1, base + 2 * (n - j), -1);
                w(n, base + 3);
            }
        }
        break;
    }

    case Kind::D:
        if (l <= n - 2) {
            if (j < l) {
                w(l, k + 2);
                w(j, k + l - j);
                w(j, k + 2 * n - l - 2 - j);
                w(j + 1, k + l - j + 1, -1);
                w(j + 1, k + 2 * n - l - j - 1, -1);
            } else if (j <= n - 2) {
                w(l - 2, k + 2);
                w(j - 1, k + j - l + 3, -1);
                w(j, k + j - l + 2);
                w(j, k + 2 * n - l - j - 2);
                w(j + 1, k + 2 * n - l - j - 1, -1);
                // node n-2 has both spin nodes as neighbours
                if (j == n - 2) w(n, k + 2 * n - l - j - 1, -1);
            } else {
                w(l - 2, k + 2);
                w(n - 2, k + n - l + 2, -1);
                w(j, k + n - l - 1);
                w(j, k + n - l + 1);
            }
        } else {
            const int other = l == n ? n - 1 : n;
            if (j < n - 2) {
                w(j, k + n - 1 - j);
                w(j + 1, k + n - j, -1);
                w(other, k + 2);
            } else if (j == n - 2) {
                w(n - 2, k + 1);
                w(l, k + 2, -1);
            } else if (j == l) {
                w(l, k);
            } else {
                w(n - 3, k + 2);
                w(n - 2, k + 3, -1);
                w(other, k + 2);
            }
        }
        break;

    case Kind::A: break;
    }
    return LWeight::from_terms(std::move(t));
}

/// The weight w_{r,j}(omega_r) is expected to take: omega_{r-2} + alpha_j,
/// or omega_{r-1} + alpha_n for the type B word w_{r,n}.
inline Weight wrj_target_weight(const RootSystem& rs, int r, int j) {
    if (!wrj_defined(rs, r, j)) detail::bad_wrj(rs, r, j);
    const int drop = (rs.kind() == Kind::B && j == rs.rank()) ? 1 : 2;
    return rs.fundamental(r - drop) + rs.simple_root(j);
}

} // namespace qchar
