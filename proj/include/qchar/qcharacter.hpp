#pragma once

// Dominant l-weights attached to partitions and the assembly of full
// q-characters of fundamental modules.

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qchar/braid.hpp"
#include "qchar/lweight.hpp"
#include "qchar/partitions.hpp"
#include "qchar/root_system.hpp"

namespace qchar {

/// pi_r(j, s) with s passed as s4 = 4s. Exponents are d_1 (i + j - 2s - 2r)
/// and d_1 (h - i - j + 2s); they must come out integral.
inline LWeight pi_factor(const PartitionCtx& ctx, int j, int s4) {
    if (j < 0 || j > ctx.n()) throw std::out_of_range("pi_factor: node " + std::to_string(j));
    if (j == 0) return {};
    const int d1 = ctx.rs().d(1);
    if ((d1 * s4) % 2 != 0)
        throw std::invalid_argument("pi_factor: s4=" + std::to_string(s4) + " gives a non-integral exponent");
    const int half = d1 * s4 / 2;
    const int e_inv = d1 * (ctx.i() + j - 2 * ctx.r()) - half;
    const int e_dir = d1 * (ctx.rs().hstar() - ctx.i() - j) + half;
    return gen(j, e_inv).inverse() * gen(j, e_dir);
}

/// pi_r(j) for j in J_r.
inline LWeight pi_of_partition(const PartitionCtx& ctx, const Partition& p) {
    if (!in_J(ctx, p))
        throw std::invalid_argument("pi_of_partition: " + to_string(p) + " not in J_" + std::to_string(ctx.r()));
    const int n = ctx.n();
    const int k = p.length();
    const int d1 = ctx.rs().d(1);
    LWeight out = gen(ctx.r(), d1 * (ctx.i() - ctx.r()));

    auto step = [&](int s) {
        const int j = p.parts[s - 1];
        out *= pi_factor(ctx, j - 1, 4 * (s - 1));
        out *= pi_factor(ctx, j, 4 * s).inverse();
    };

    if (ctx.kind() == Kind::B && k > 0 && p.last() == n) {
        for (int s = 1; s < k; ++s) step(s);
        out *= pi_factor(ctx, n - 1, 4 * (k - 1));
        out *= pi_factor(ctx, n, 4 * k - 1).inverse();
        return out;
    }
    for (int s = 1; s <= k; ++s) step(s);
    if (ctx.kind() == Kind::D && k > 0 && p.last() == n - 1) out *= pi_factor(ctx, n, 4 * k + 2).inverse();
    return out;
}

/// Type B spin-node correction pi_r(j, *). Trivial when 2k = i - r or j_k = n.
inline LWeight pi_star(const PartitionCtx& ctx, const Partition& p) {
    if (ctx.kind() != Kind::B) throw std::invalid_argument("pi_star needs a type B context");
    const int n = ctx.n();
    const int k = p.length();
    if (2 * k == ctx.i() - ctx.r() || (k > 0 && p.last() == n)) return {};
    return gen(n, 2 * (n - ctx.i() + 2 * k) - 1) * gen(n, 2 * (n + ctx.i() - 2 * k - 2 * ctx.r()) - 1).inverse();
}

/// Type D spin corrections pi_r(j, +) on node n and pi_r(j, -) on node n-1.
inline LWeight pi_pm(const PartitionCtx& ctx, const Partition& p, Sign sign) {
    if (ctx.kind() != Kind::D) throw std::invalid_argument("pi_pm needs a type D context");
    const int n = ctx.n();
    const int k = p.length();
    const int node = sign == Sign::Plus ? n : n - 1;
    return gen(node, n - ctx.i() + 2 * k - 1) * gen(node, n + ctx.i() - 2 * ctx.r() - 2 * k - 1).inverse();
}

struct Source {
    Partition partition;
    std::optional<Sign> sign;

    auto operator<=>(const Source&) const = default;
};

struct DominantEntry {
    LWeight value;
    long long mult = 0;
    std::vector<Source> sources;
};

/// The l-weight a single partition (and sign, in type D with k < M) contributes.
inline LWeight dominant_value(const PartitionCtx& ctx, const Partition& p, std::optional<Sign> sign = {}) {
    LWeight v = pi_of_partition(ctx, p);
    switch (ctx.kind()) {
    case Kind::B: v *= pi_star(ctx, p); break;
    case Kind::D:
        if (p.length() < ctx.M()) {
            if (!sign) throw std::invalid_argument("type D partition shorter than M needs a sign");
            v *= pi_pm(ctx, p, *sign);
        }
        break;
    default: break;
    }
    return v;
}

/// All (partition, sign) pairs summed over in the character formula at weight omega_r.
inline std::vector<Source> dominant_sources(const PartitionCtx& ctx) {
    std::vector<Source> out;
    for (const auto& p : all_partitions(ctx)) {
        if (ctx.kind() == Kind::D && p.length() < ctx.M()) {
            out.push_back({p, Sign::Plus});
            out.push_back({p, Sign::Minus});
        } else {
            out.push_back({p, std::nullopt});
        }
    }
    return out;
}

/// Distinct dominant l-weights of weight omega_r, collected from every source.
inline std::vector<DominantEntry> dominant_lweights_at(const PartitionCtx& ctx) {
    std::map<LWeight, DominantEntry> acc;
    for (const auto& src : dominant_sources(ctx)) {
        const LWeight v = dominant_value(ctx, src.partition, src.sign);
        auto& e = acc[v];
        e.value = v;
        e.mult += 1;
        e.sources.push_back(src);
    }
    std::vector<DominantEntry> out;
    for (auto& [v, e] : acc) out.push_back(std::move(e));
    return out;
}

inline std::map<int, std::vector<DominantEntry>> dominant_lweights(const RootSystem& rs, int i) {
    std::map<int, std::vector<DominantEntry>> out;
    for (int r : index_set(rs, i)) out[r] = dominant_lweights_at(PartitionCtx(rs, i, r));
    return out;
}

struct LCharacter {
    Kind kind = Kind::A;
    int rank = 0;
    int node = 0;
    int base = 0;
    std::map<LWeight, long long> entries;

    long long mass() const {
        long long m = 0;
        for (const auto& [x, c] : entries) m += c;
        return m;
    }
    long long multiplicity(const LWeight& x) const {
        auto it = entries.find(x);
        return it == entries.end() ? 0 : it->second;
    }
    bool operator==(const LCharacter&) const = default;
};

namespace detail {

struct OrbitTask {
    const std::vector<std::pair<LWeight, long long>>* seeds;
    const ReducedWord* word;
};

} // namespace detail

/// ch_l of the fundamental module at node i with highest l-weight w[i;base].
/// threads = 0 picks the hardware concurrency; the result does not depend on it.
inline LCharacter full_character(const RootSystem& rs, int i, int base = 0, unsigned threads = 1) {
    rs.check_node(i);
    LCharacter ch{rs.kind(), rs.rank(), i, base, {}};

    std::vector<std::vector<std::pair<LWeight, long long>>> seeds;
    std::vector<std::vector<OrbitPoint>> orbits;
    if (is_minuscule_node(rs, i) || !has_partition_formula(rs, i)) {
        seeds.push_back({{gen(rs, i, base), 1}});
        orbits.push_back(weyl_orbit_minlength(rs, rs.fundamental(i)));
    } else {
        for (auto& [r, list] : dominant_lweights(rs, i)) {
            std::vector<std::pair<LWeight, long long>> s;
            for (const auto& e : list) s.emplace_back(e.value.shifted(base), e.mult);
            seeds.push_back(std::move(s));
            orbits.push_back(weyl_orbit_minlength(rs, rs.fundamental(r)));
        }
    }

    std::vector<detail::OrbitTask> tasks;
    for (std::size_t a = 0; a < seeds.size(); ++a)
        for (const auto& pt : orbits[a]) tasks.push_back({&seeds[a], &pt.word});

    auto run = [&](std::map<LWeight, long long>& acc, std::atomic<std::size_t>& next) {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
            for (const auto& [x, m] : *tasks[t].seeds) acc[braid_apply_word(rs, *tasks[t].word, x)] += m;
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
    std::atomic<std::size_t> next{0};
    if (threads <= 1) {
        run(ch.entries, next);
        return ch;
    }
    std::vector<std::map<LWeight, long long>> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, std::ref(partial[t]), std::ref(next));
    for (auto& th : pool) th.join();
    for (auto& part : partial)
        for (auto& [x, m] : part) ch.entries[x] += m;
    return ch;
}

// ---- ladder identities ----

enum class LadderCase { C, B_i, B_ii, B_iii, D };

inline std::string to_string(LadderCase c) {
    switch (c) {
    case LadderCase::C: return "C";
    case LadderCase::B_i: return "B(i)";
    case LadderCase::B_ii: return "B(ii)";
    case LadderCase::B_iii: return "B(iii)";
    case LadderCase::D: return "D";
    }
    return "?";
}

/// One instance of a ladder identity T_{w}(lower) = upper * alpha, with
/// both sides evaluated and the expected factorisation of the pivot coordinate.
struct LadderInstance {
    LadderCase which = LadderCase::C;
    int r_from = 0;            // r of the smaller partition
    Partition from;            // partition at r_from
    BraidWord word;            // w_{r_from, pivot node}
    int root_node = 0;
    int root_exp = 0;
    LWeight lhs;               // T_w applied to the lower-rank value
    LWeight rhs;               // value at r times alpha_{root_node, q^root_exp}
    CoordinatePoly expected;   // predicted coordinate of lhs at root_node

    bool identity_holds() const { return lhs == rhs; }
    bool coordinate_holds() const { return coordinate(lhs, root_node) == expected; }
    bool holds() const { return identity_holds() && coordinate_holds(); }
};

namespace detail {

inline CoordinatePoly two_roots(int a, int b) {
    CoordinatePoly c;
    c[a] += 1;
    c[b] += 1;
    return c;
}

[[noreturn]] inline void ladder_reject(const PartitionCtx& ctx, const Partition& p, LadderCase c,
                                       const std::string& why) {
    throw std::invalid_argument("ladder " + to_string(c) + " not applicable to " + to_string(p) + " at " +
                                ctx.rs().name() + " i=" + std::to_string(ctx.i()) +
                                " r=" + std::to_string(ctx.r()) + ": " + why);
}

} // namespace detail

/// The type B case a partition falls under; cases are separated by comparing 2k with i - r.
inline std::optional<LadderCase> b_ladder_case(const PartitionCtx& ctx, const Partition& p) {
    if (ctx.kind() != Kind::B || ctx.r() == ctx.i()) return std::nullopt;
    const int k = p.length();
    if (k > 0 && p.last() == ctx.n()) return LadderCase::B_ii;
    if (2 * k < ctx.i() - ctx.r()) return LadderCase::B_i;
    if (k > 0) return LadderCase::B_iii;
    return std::nullopt;
}

/// Builds the ladder instance for p. For type D, pivot is the element j of
/// supp^+(p) and sign the correction carried by p (ignored when k = M).
inline LadderInstance ladder(const PartitionCtx& ctx, const Partition& p, LadderCase which, int pivot = 0,
                             Sign sign = Sign::Plus) {
    if (!in_J(ctx, p)) detail::ladder_reject(ctx, p, which, "partition not in J_r");
    const RootSystem& rs = ctx.rs();
    const int n = ctx.n();
    const int i = ctx.i();
    const int r = ctx.r();
    const int k = p.length();
    LadderInstance L;
    L.which = which;

    switch (which) {
    case LadderCase::C: {
        if (ctx.kind() != Kind::C || ctx.M() == 0) detail::ladder_reject(ctx, p, which, "needs type C and M > 0");
        const int M = ctx.M();
        const int j = p.last();
        std::vector<int> lower;
        for (int s = 0; s + 1 < k; ++s) lower.push_back(p.parts[s] + 2);
        const PartitionCtx up = ctx.with_r(r + 2);
        L.r_from = r + 2;
        L.from = Partition(lower);
        L.word = wrj_word(rs, r + 2, j);
        L.root_node = j;
        L.root_exp = 2 * n + i - j - 2 * r - 2 * M;
        L.lhs = braid_apply_word(rs, L.word, pi_of_partition(up, L.from));
        L.rhs = pi_of_partition(ctx, p) * simple_l_root(rs, j, L.root_exp);
        L.expected = detail::two_roots(i + j - 2 * r - 2 * M, L.root_exp);
        return L;
    }
    case LadderCase::B_i:
    case LadderCase::B_ii:
    case LadderCase::B_iii: {
        if (b_ladder_case(ctx, p) != which) detail::ladder_reject(ctx, p, which, "case hypotheses fail");
        auto value = [&](const PartitionCtx& c, const Partition& q) { return pi_of_partition(c, q) * pi_star(c, q); };
        std::vector<int> lower;
        int step = 1;
        if (which == LadderCase::B_i) {
            for (int x : p.parts) lower.push_back(x + 1);
            L.root_node = n;
            L.root_exp = 2 * (n + i - 2 * r - 2 * k) - 3;
            const bool generic = (k > 0 && p.last() == n - 1) || 2 * k < i - r - 1;
            L.expected = detail::two_roots(L.root_exp, generic ? 2 * (n - i + 2 * k) - 1 : L.root_exp - 2);
        } else if (which == LadderCase::B_ii) {
            for (int s = 0; s + 1 < k; ++s) lower.push_back(p.parts[s] + 1);
            L.root_node = n;
            L.root_exp = 2 * (n - i + 2 * k) - 5;
            L.expected = detail::two_roots(L.root_exp, 2 * (n + i - 2 * r - 2 * k) + 1);
        } else {
            step = 2;
            const int j = p.last();
            for (int s = 0; s + 1 < k; ++s) lower.push_back(p.parts[s] + 2);
            L.root_node = j;
            L.root_exp = 2 * (2 * n - j - r - 3);
            L.expected = detail::two_roots(2 * (j - r), L.root_exp);
        }
        const PartitionCtx up = ctx.with_r(r + step);
        L.r_from = r + step;
        L.from = Partition(lower);
        L.word = wrj_word(rs, r + step, L.root_node);
        L.lhs = braid_apply_word(rs, L.word, value(up, L.from));
        L.rhs = value(ctx, p) * simple_l_root(rs, L.root_node, L.root_exp);
        return L;
    }
    case LadderCase::D: {
        if (ctx.kind() != Kind::D || k == 0) detail::ladder_reject(ctx, p, which, "needs type D and k > 0");
        if (!supp_pm(ctx, p, Sign::Minus).empty()) detail::ladder_reject(ctx, p, which, "supp^- must be empty");
        const auto plus = supp_pm(ctx, p, Sign::Plus);
        if (std::find(plus.begin(), plus.end(), pivot) == plus.end())
            detail::ladder_reject(ctx, p, which, "pivot not in supp^+");
        const int l = sigma(p, pivot, Sign::Plus);
        std::vector<int> lower;
        for (int x : p.parts)
            if (r < x && x < l) lower.push_back(x + 2);
        for (int x : p.parts)
            if (l < x && x < n) lower.push_back(x);
        std::sort(lower.begin(), lower.end());
        const PartitionCtx up = ctx.with_r(r + 2);
        L.r_from = r + 2;
        L.from = Partition(lower);
        L.word = wrj_word(rs, r + 2, l);
        L.root_node = l;
        L.root_exp = 2 * n - i - l + 2 * iota(p, l) - 4;
        // the word ends with s_n s_{n-1}, which swaps the two spin corrections
        LWeight low = pi_of_partition(up, L.from);
        if (L.from.length() < up.M()) low *= pi_pm(up, L.from, opposite(sign));
        LWeight high = pi_of_partition(ctx, p);
        if (k < ctx.M()) high *= pi_pm(ctx, p, sign);
        L.lhs = braid_apply_word(rs, L.word, low);
        L.rhs = high * simple_l_root(rs, l, L.root_exp);
        if (l == pivot) {
            L.expected[n - r - 2] = 2;
        } else {
            L.expected = detail::two_roots(L.root_exp, i + l - 2 * r - 2 * iota(p, l));
        }
        return L;
    }
    }
    throw std::logic_error("unknown ladder case");
}

inline bool ladder_check(const PartitionCtx& ctx, const Partition& p, LadderCase which, int pivot = 0,
                         Sign sign = Sign::Plus) {
    return ladder(ctx, p, which, pivot, sign).holds();
}

/// Every ladder instance available at ctx, in enumeration order.
inline std::vector<LadderInstance> all_ladders(const PartitionCtx& ctx) {
    std::vector<LadderInstance> out;
    for (const auto& p : all_partitions(ctx)) {
        switch (ctx.kind()) {
        case Kind::C:
            if (ctx.M() > 0) out.push_back(ladder(ctx, p, LadderCase::C));
            break;
        case Kind::B:
            if (auto c = b_ladder_case(ctx, p)) out.push_back(ladder(ctx, p, *c));
            break;
        case Kind::D:
            if (p.empty() || !supp_pm(ctx, p, Sign::Minus).empty()) break;
            for (int j : supp_pm(ctx, p, Sign::Plus))
                for (Sign s : {Sign::Plus, Sign::Minus}) out.push_back(ladder(ctx, p, LadderCase::D, j, s));
            break;
        default: break;
        }
    }
    return out;
}

} // namespace qchar
