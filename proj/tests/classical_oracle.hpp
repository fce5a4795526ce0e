#pragma once

// Classical data rebuilt from the orthonormal epsilon-basis: simple roots,
// Cartan matrices, symmetrisers, and weight multisets of exterior powers of
// the defining representation. Nothing here calls into the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "qchar/root_system.hpp"

namespace oracle {

using Vec = std::vector<int>; // epsilon coordinates, doubled where needed

inline int dot(const Vec& a, const Vec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0); }

inline int ambient_dim(qchar::Kind k, int n) { return k == qchar::Kind::A ? n + 1 : n; }

/// Simple roots in epsilon coordinates (Bourbaki).
inline std::vector<Vec> simple_roots(qchar::Kind k, int n) {
    const int m = ambient_dim(k, n);
    std::vector<Vec> out;
    for (int i = 0; i < n; ++i) {
        Vec a(m, 0);
        if (i < n - 1 || k == qchar::Kind::A) {
            a[i] = 1;
            a[i + 1] = -1;
        } else if (k == qchar::Kind::B) {
            a[n - 1] = 1;
        } else if (k == qchar::Kind::C) {
            a[n - 1] = 2;
        } else {
            a[n - 2] = 1;
            a[n - 1] = 1;
        }
        out.push_back(a);
    }
    return out;
}

/// a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
inline std::vector<std::vector<int>> cartan(qchar::Kind k, int n) {
    const auto s = simple_roots(k, n);
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = 2 * dot(s[i], s[j]) / dot(s[i], s[i]);
    return a;
}

/// (alpha_i, alpha_i) / 2, scaled to coprime integers.
inline std::vector<int> symmetrizer(qchar::Kind k, int n) {
    const auto s = simple_roots(k, n);
    std::vector<int> d;
    for (const auto& a : s) d.push_back(dot(a, a));
    int g = 0;
    for (int x : d) g = std::gcd(g, x);
    for (int& x : d) x /= g;
    return d;
}

/// Fundamental-weight coordinates <lambda, alpha_j^vee> of an epsilon vector.
inline qchar::Weight to_fundamental(qchar::Kind k, int n, const Vec& v) {
    const auto s = simple_roots(k, n);
    std::vector<int> c;
    for (const auto& a : s) c.push_back(2 * dot(v, a) / dot(a, a));
    return qchar::Weight(c);
}

/// Weights of the defining representation in epsilon coordinates.
inline std::vector<Vec> defining_weights(qchar::Kind k, int n) {
    const int m = ambient_dim(k, n);
    std::vector<Vec> out;
    for (int a = 0; a < m; ++a) {
        Vec e(m, 0);
        e[a] = 1;
        out.push_back(e);
        if (k != qchar::Kind::A) {
            e[a] = -1;
            out.push_back(e);
        }
    }
    if (k == qchar::Kind::B) out.push_back(Vec(m, 0));
    return out;
}

/// Weight multiset of the p-th exterior power of the defining representation.
inline std::map<qchar::Weight, long long> exterior_power(qchar::Kind k, int n, int p) {
    const auto w = defining_weights(k, n);
    const int N = static_cast<int>(w.size());
    std::map<qchar::Weight, long long> out;
    if (p < 0 || p > N) return out;
    std::vector<int> pick(N, 0);
    std::fill(pick.begin(), pick.begin() + p, 1);
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
        Vec s(ambient_dim(k, n), 0);
        for (int a = 0; a < N; ++a)
            if (pick[a])
                for (std::size_t c = 0; c < s.size(); ++c) s[c] += w[a][c];
        out[to_fundamental(k, n, s)] += 1;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

inline void add_into(std::map<qchar::Weight, long long>& into, const std::map<qchar::Weight, long long>& add,
                       long long sign = 1) {
    for (const auto& [w, m] : add) {
        into[w] += sign * m;
        if (into[w] == 0) into.erase(w);
    }
}

/// Weights of the irreducible V(omega_i) for non-spin nodes:
/// Lambda^i for A, B, D; Lambda^i - Lambda^{i-2} for C.
inline std::map<qchar::Weight, long long> fundamental_weights(qchar::Kind k, int n, int i) {
    auto out = exterior_power(k, n, i);
    if (k == qchar::Kind::C) add_into(out, exterior_power(k, n, i - 2), -1);
    return out;
}

/// Spin representations: all (+-1/2, ..., +-1/2), with an even (D, node n) or
/// odd (D, node n-1) number of minus signs; B takes all of them.
inline std::map<qchar::Weight, long long> spin_weights(qchar::Kind k, int n, int node) {
    std::map<qchar::Weight, long long> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        const int minus = __builtin_popcount(static_cast<unsigned>(mask));
        if (k == qchar::Kind::D && (minus % 2 == 0) != (node == n)) continue;
        Vec v(n);
        for (int a = 0; a < n; ++a) v[a] = (mask >> a & 1) ? -1 : 1; // doubled
        const auto s = simple_roots(k, n);
        std::vector<int> c;
        for (const auto& al : s) c.push_back(dot(v, al) / dot(al, al)); // 2 (v/2, a) / (a, a)
        out[qchar::Weight(c)] += 1;
    }
    return out;
}

/// Weight multiset of the classical restriction of the fundamental loop module at node i.
inline std::map<qchar::Weight, long long> loop_module_weights(qchar::Kind k, int n, int i) {
    if ((k == qchar::Kind::B && i == n) || (k == qchar::Kind::D && i >= n - 1)) return spin_weights(k, n, i);
    if (k == qchar::Kind::B || k == qchar::Kind::D) {
        std::map<qchar::Weight, long long> out;
        for (int j = i; j >= 0; j -= 2) add_into(out, fundamental_weights(k, n, j));
        return out;
    }
    return fundamental_weights(k, n, i);
}

} // namespace oracle
