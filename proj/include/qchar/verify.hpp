#pragma once

// Executable checks for every identity the library relies on, grouped into
// suites. Each check walks its parameter space smallest rank first and keeps
// the first failure it meets, so a reported counterexample is minimal.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qchar/braid.hpp"
#include "qchar/lweight.hpp"
#include "qchar/partitions.hpp"
#include "qchar/qcharacter.hpp"
#include "qchar/root_system.hpp"

namespace qchar {

struct CheckResult {
    std::string name;
    std::string range;
    bool passed = true;
    long long cases = 0;
    std::string counterexample;
    double seconds = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    void append(const VerifyReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

struct VerifyOptions {
    int max_rank = 5;
    int samples = 100;
    std::uint64_t seed = 0;
};

namespace detail {

class Recorder {
public:
    Recorder(std::string name, std::string range) : start_(std::chrono::steady_clock::now()) {
        res_.name = std::move(name);
        res_.range = std::move(range);
    }
    void expect(bool ok, const std::function<std::string()>& what) {
        ++res_.cases;
        if (!ok && res_.passed) {
            res_.passed = false;
            res_.counterexample = what();
        }
    }
    CheckResult finish() {
        res_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return res_;
    }

private:
    CheckResult res_;
    std::chrono::steady_clock::time_point start_;
};

inline std::vector<RootSystem> systems_up_to(int max_rank, std::initializer_list<Kind> kinds, int min_d = 4) {
    std::vector<RootSystem> out;
    for (int n = 1; n <= max_rank; ++n)
        for (Kind k : kinds) {
            if (k == Kind::A && n < 1) continue;
            if ((k == Kind::B || k == Kind::C) && n < 2) continue;
            if (k == Kind::D && n < min_d) continue;
            out.emplace_back(k, n);
        }
    return out;
}

inline std::string ctx_str(const PartitionCtx& c) {
    return c.rs().name() + " i=" + std::to_string(c.i()) + " r=" + std::to_string(c.r());
}

inline std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (int a = 1; a <= w.rank(); ++a) s += (a > 1 ? "," : "") + std::to_string(w[a]);
    return s + ")";
}

inline std::string word_str(const BraidWord& w) {
    std::string s = "[";
    for (std::size_t a = 0; a < w.size(); ++a) s += (a ? "," : "") + std::to_string(w[a]);
    return s + "]";
}

inline std::vector<PartitionCtx> contexts(const RootSystem& rs) {
    std::vector<PartitionCtx> out;
    for (int i = 1; i <= rs.rank(); ++i)
        if (has_partition_formula(rs, i))
            for (int r : index_set(rs, i)) out.emplace_back(rs, i, r);
    return out;
}

inline long long total_dim(const RootSystem& rs, int i) {
    long long d = 0;
    for (const auto& w : classical_decomposition(rs, i)) d += weyl_dim(rs, w);
    return d;
}

inline std::map<Weight, long long> classical_character(const RootSystem& rs, int i) {
    std::map<Weight, long long> out;
    for (const auto& lam : classical_decomposition(rs, i))
        for (const auto& [mu, m] : weight_char(rs, lam)) out[mu] += m;
    return out;
}

/// Coordinates of a weight in the basis of simple roots, if integral.
inline std::optional<std::vector<long long>> root_coordinates(const RootSystem& rs, const Weight& w) {
    const int n = rs.rank();
    // rows: sum_j c_j a_{kj} = w_k, solved by fraction-free elimination
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n + 1));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) m[k][j] = rs.cartan(k + 1, j + 1);
        m[k][n] = w[k + 1];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (m[piv][col] == 0) ++piv;
        std::swap(m[piv], m[col]);
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const long long a = m[col][col], b = m[row][col];
            long long g = 0;
            for (int c = 0; c <= n; ++c) {
                m[row][c] = m[row][c] * a - m[col][c] * b;
                g = std::gcd(g, m[row][c]);
            }
            if (g > 1)
                for (auto& x : m[row]) x /= g;
        }
    }
    std::vector<long long> c(n);
    for (int k = 0; k < n; ++k) {
        if (m[k][n] % m[k][k] != 0) return std::nullopt;
        c[k] = m[k][n] / m[k][k];
    }
    return c;
}

} // namespace detail

/// Random l-weight: nodes uniform, exponents uniform in [-5, 5], length
/// 1 + Geometric(1/4) (mean 4), multiplicities uniform in {-2, -1, 1, 2}.
inline LWeight random_lweight(const RootSystem& rs, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> node(1, rs.rank());
    std::uniform_int_distribution<int> exp(-5, 5);
    std::geometric_distribution<int> extra(0.25);
    std::uniform_int_distribution<int> pick(0, 3);
    static constexpr int mults[] = {-2, -1, 1, 2};
    const int len = 1 + extra(rng);
    std::vector<Term> t;
    for (int a = 0; a < len; ++a) {
        const int nd = node(rng);
        const int e = exp(rng);
        t.push_back({nd, e, mults[pick(rng)]});
    }
    return LWeight::from_terms(std::move(t));
}

// ---- counts ----

inline VerifyReport verify_counts(int max_rank) {
    VerifyReport rep;
    const auto range = "B,C,D n<=" + std::to_string(max_rank);
    const auto systems = detail::systems_up_to(max_rank, {Kind::B, Kind::C, Kind::D});

    detail::Recorder count("partition-count", range);
    detail::Recorder dk("d-length-count", "D n<=" + std::to_string(max_rank));
    detail::Recorder dmass("d-weight-mass", "D n<=" + std::to_string(max_rank));
    for (const auto& rs : systems)
        for (const auto& ctx : detail::contexts(rs)) {
            const auto enumerated = static_cast<long long>(all_partitions(ctx).size());
            const long long closed = count_J_closed(ctx);
            count.expect(enumerated == closed, [&] {
                return detail::ctx_str(ctx) + ": " + std::to_string(enumerated) + " vs " + std::to_string(closed);
            });
            if (ctx.kind() != Kind::D) continue;
            for (int k = 0; k <= ctx.M(); ++k) {
                const auto e = static_cast<long long>(enumerate_J_k(ctx, k).size());
                dk.expect(e == count_J_k_closed(ctx, k),
                          [&] { return detail::ctx_str(ctx) + " k=" + std::to_string(k); });
            }
            long long want = 0;
            for (int l = 0; l <= ctx.M(); ++l) want += binomial(ctx.n() - ctx.r(), l);
            dmass.expect(d_weight_mass(ctx) == want, [&] { return detail::ctx_str(ctx); });
        }
    rep.checks.push_back(count.finish());
    rep.checks.push_back(dk.finish());
    rep.checks.push_back(dmass.finish());

    detail::Recorder binom("binomial-identity", "n<=12");
    for (int n = 2; n <= 12; ++n)
        for (int r = 0; r < n; ++r)
            for (int M = 0; 2 * M + r <= n; ++M) {
                long long lhs = 0, rhs = binomial(n - r - 1, M);
                for (int l = 0; l <= M; ++l) lhs += binomial(n - r, l);
                for (int k = 0; k < M; ++k) rhs += 2 * binomial(n - r - 1, k);
                binom.expect(lhs == rhs, [&] {
                    return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " M=" + std::to_string(M);
                });
            }
    rep.checks.push_back(binom.finish());

    // (j_1..j_M) in J_r(i)  <=>  (j_2..j_M) in J_{j_1}(i - r + j_1 - 2), type C
    // (j_1..j_M) in J_r(i) <=> (j_2..j_M) in J_{j_1}(i - r + j_1 - 2) for admissible j_1 (r < j_1 <= n - 2M + 1),
    // and (j_1..j_{M-1}) in J_{r+2}(i) <=> (j_1 - 2, .., j_{M-1} - 2, j_M) in J_r(i) for j_{M-1} - 2 < j_M < n
    const int rec_rank = std::min(max_rank, 6);
    detail::Recorder rec("c-partition-recursion", "C n<=" + std::to_string(rec_rank));
    auto in_c = [](int n, int i, int r, const std::vector<int>& p) {
        if (2 * static_cast<int>(p.size()) != i - r) return false;
        for (std::size_t s = 1; s <= p.size(); ++s) {
            if (p[s - 1] <= (s == 1 ? r : p[s - 2])) return false;
            if (p[s - 1] > std::min(n, n - i + r + 2 * static_cast<int>(s) - 1)) return false;
        }
        return true;
    };
    auto sequences = [](int len, int lo, int hi) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto go = [&](auto&& self, int from) -> void {
            if (static_cast<int>(cur.size()) == len) {
                out.push_back(cur);
                return;
            }
            for (int j = from; j <= hi; ++j) {
                cur.push_back(j);
                self(self, j + 1);
                cur.pop_back();
            }
        };
        go(go, lo);
        return out;
    };
    for (int n = 2; n <= rec_rank; ++n)
        for (int i = 2; i <= n; ++i)
            for (int r = i - 2; r >= 0; r -= 2) {
                const int M = (i - r) / 2;
                auto where = [&](const std::vector<int>& p) {
                    return "C" + std::to_string(n) + " i=" + std::to_string(i) + " r=" + std::to_string(r) + " " +
                           to_string(Partition(p));
                };
                for (const auto& p : sequences(M, r + 1, n)) {
                    if (p[0] > n - 2 * M + 1) continue;
                    const std::vector<int> tail(p.begin() + 1, p.end());
                    rec.expect(in_c(n, i, r, p) == in_c(n, i - r + p[0] - 2, p[0], tail), [&] { return where(p); });
                }
                for (const auto& q : sequences(M - 1, r + 3, n)) {
                    const int floor_last = q.empty() ? r : q.back() - 2;
                    for (int jm = floor_last + 1; jm < n; ++jm) {
                        std::vector<int> p;
                        for (int x : q) p.push_back(x - 2);
                        p.push_back(jm);
                        rec.expect(in_c(n, i, r + 2, q) == in_c(n, i, r, p), [&] { return where(p); });
                    }
                }
            }
    rep.checks.push_back(rec.finish());
    return rep;
}

// ---- dimensions ----

inline VerifyReport verify_dimensions(int max_rank) {
    VerifyReport rep;
    auto systems = detail::systems_up_to(max_rank, {Kind::A, Kind::B, Kind::C, Kind::D});
    const std::string range = "A,B,C,D n<=" + std::to_string(max_rank) + " and D6 i=4";

    detail::Recorder mass("character-mass", range);
    detail::Recorder top("highest-weight", range);
    detail::Recorder dom("dominant-mass", range);
    detail::Recorder mult("multiplicity-pattern", range);
    auto run = [&](const RootSystem& rs, int i) {
        const auto ch = full_character(rs, i);
        const long long want = detail::total_dim(rs, i);
        mass.expect(ch.mass() == want, [&] {
            return rs.name() + " i=" + std::to_string(i) + ": " + std::to_string(ch.mass()) + " vs " +
                   std::to_string(want);
        });
        top.expect(ch.multiplicity(gen(rs, i, 0)) == 1, [&] { return rs.name() + " i=" + std::to_string(i); });
        if (!has_partition_formula(rs, i)) return;
        std::map<Weight, long long> dominant_oracle;
        for (const auto& lam : classical_decomposition(rs, i))
            for (const auto& [mu, m] : dominant_char(rs, lam)) dominant_oracle[mu] += m;
        for (auto& [r, list] : dominant_lweights(rs, i)) {
            long long got = 0;
            for (const auto& e : list) {
                got += e.mult;
                // 1 in types B and C; 2^{M_j} in type D
                long long expect = 1;
                if (rs.kind() == Kind::D) expect = 1LL << mult_exponent(PartitionCtx(rs, i, r), e.sources[0].partition);
                mult.expect(e.mult == expect && ch.multiplicity(e.value) == expect, [&] {
                    return rs.name() + " i=" + std::to_string(i) + " r=" + std::to_string(r) + " " +
                           to_string(e.value);
                });
            }
            const long long want_r = dominant_oracle[rs.fundamental(r)];
            dom.expect(got == want_r, [&] {
                return rs.name() + " i=" + std::to_string(i) + " r=" + std::to_string(r) + ": " +
                       std::to_string(got) + " vs " + std::to_string(want_r);
            });
        }
    };
    for (const auto& rs : systems)
        for (int i = 1; i <= rs.rank(); ++i) run(rs, i);
    run(RootSystem(Kind::D, 6), 4);
    rep.checks.push_back(mass.finish());
    rep.checks.push_back(top.finish());
    rep.checks.push_back(dom.finish());
    rep.checks.push_back(mult.finish());

    detail::Recorder minus("minuscule-orbit", "A n<=" + std::to_string(max_rank));
    for (int n = 1; n <= max_rank; ++n) {
        const RootSystem rs(Kind::A, n);
        for (int i = 1; i <= n; ++i) {
            const auto ch = full_character(rs, i);
            bool ok = static_cast<long long>(ch.entries.size()) == binomial(n + 1, i);
            for (const auto& [x, m] : ch.entries) ok = ok && m == 1;
            std::set<LWeight> images;
            for (const auto& pt : weyl_orbit_minlength(rs, rs.fundamental(i)))
                images.insert(braid_apply_word(rs, pt.word, gen(rs, i, 0)));
            ok = ok && images.size() == ch.entries.size();
            for (const auto& x : images) ok = ok && ch.entries.count(x);
            minus.expect(ok, [&] { return rs.name() + " i=" + std::to_string(i); });
        }
    }
    rep.checks.push_back(minus.finish());

    detail::Recorder shift("base-shift", "A,B,C,D n<=" + std::to_string(std::min(max_rank, 4)));
    for (const auto& rs : detail::systems_up_to(std::min(max_rank, 4), {Kind::A, Kind::B, Kind::C, Kind::D}))
        for (int i = 1; i <= rs.rank(); ++i) {
            const auto ch0 = full_character(rs, i, 0);
            for (int b : {-3, 7}) {
                const auto chb = full_character(rs, i, b);
                std::map<LWeight, long long> moved;
                for (const auto& [x, m] : ch0.entries) moved[x.shifted(b)] = m;
                shift.expect(moved == chb.entries,
                             [&] { return rs.name() + " i=" + std::to_string(i) + " base=" + std::to_string(b); });
            }
        }
    rep.checks.push_back(shift.finish());

    detail::Recorder threads("thread-independence", "B,C,D n<=" + std::to_string(std::min(max_rank, 4)));
    for (const auto& rs : detail::systems_up_to(std::min(max_rank, 4), {Kind::B, Kind::C, Kind::D}))
        for (int i = 1; i <= rs.rank(); ++i)
            threads.expect(full_character(rs, i, 0, 1) == full_character(rs, i, 0, 4),
                           [&] { return rs.name() + " i=" + std::to_string(i); });
    rep.checks.push_back(threads.finish());
    return rep;
}

// ---- weight projection ----

inline VerifyReport verify_weight_projection(int max_rank) {
    VerifyReport rep;
    auto systems = detail::systems_up_to(max_rank, {Kind::A, Kind::B, Kind::C, Kind::D});
    systems.emplace_back(Kind::D, 6);
    const std::string range = "A,B,C,D n<=" + std::to_string(max_rank) + " and D6 i=4";

    detail::Recorder proj("weight-projection", range);
    detail::Recorder below("root-lattice-cone", range);
    detail::Recorder orbit("orbit-weights", range);
    for (const auto& rs : systems)
        for (int i = 1; i <= rs.rank(); ++i) {
            if (rs.rank() == 6 && i != 4) continue;
            const auto ch = full_character(rs, i);
            std::map<Weight, long long> pushed;
            const Weight top = rs.fundamental(i);
            for (const auto& [x, m] : ch.entries) {
                const Weight w = weight_of(rs, x);
                pushed[w] += m;
                const auto c = detail::root_coordinates(rs, top - w);
                below.expect(c && std::all_of(c->begin(), c->end(), [](long long v) { return v >= 0; }),
                             [&] { return rs.name() + " i=" + std::to_string(i) + " " + to_string(x); });
            }
            proj.expect(pushed == detail::classical_character(rs, i),
                        [&] { return rs.name() + " i=" + std::to_string(i); });
            if (!has_partition_formula(rs, i)) continue;
            for (auto& [r, list] : dominant_lweights(rs, i))
                for (const auto& pt : weyl_orbit_minlength(rs, rs.fundamental(r)))
                    for (const auto& e : list)
                        orbit.expect(weight_of(rs, braid_apply_word(rs, pt.word, e.value)) == pt.weight, [&] {
                            return rs.name() + " i=" + std::to_string(i) + " r=" + std::to_string(r) + " w=" +
                                   detail::word_str(pt.word);
                        });
        }
    rep.checks.push_back(proj.finish());
    rep.checks.push_back(below.finish());
    rep.checks.push_back(orbit.finish());

    detail::Recorder orders("orbit-sizes", "A,B,C,D n<=" + std::to_string(max_rank));
    for (const auto& rs : detail::systems_up_to(max_rank, {Kind::A, Kind::B, Kind::C, Kind::D}, 3))
        for (int i = 0; i <= rs.rank(); ++i) {
            const Weight lam = rs.fundamental(i);
            const auto orb = weyl_orbit_minlength(rs, lam);
            // the stabiliser of omega_i is the parabolic subgroup on the other nodes;
            // its order is the size of the orbit of a regular weight under it
            std::uint64_t stab = 1;
            if (i > 0) {
                std::vector<int> rest;
                for (int a = 1; a <= rs.rank(); ++a)
                    if (a != i) rest.push_back(a);
                std::set<Weight> seen;
                std::vector<Weight> frontier;
                Weight generic(std::vector<int>(rs.rank(), 1));
                seen.insert(generic);
                frontier.push_back(generic);
                while (!frontier.empty()) {
                    std::vector<Weight> next;
                    for (const auto& mu : frontier)
                        for (int a : rest) {
                            Weight nu = reflect(rs, a, mu);
                            if (seen.insert(nu).second) next.push_back(nu);
                        }
                    frontier = std::move(next);
                }
                stab = seen.size();
            } else {
                stab = weyl_group_order(rs.kind(), rs.rank());
            }
            bool ok = orb.size() * stab == weyl_group_order(rs.kind(), rs.rank());
            for (const auto& pt : orb) ok = ok && apply_word(rs, pt.word, lam) == pt.weight;
            orders.expect(ok, [&] { return rs.name() + " lambda=omega_" + std::to_string(i); });
        }
    rep.checks.push_back(orders.finish());
    return rep;
}

// ---- braid action and closed forms ----

inline VerifyReport verify_braid_and_closed_forms(int max_rank, int samples, std::uint64_t seed) {
    VerifyReport rep;
    std::mt19937_64 rng(seed);
    const auto systems = detail::systems_up_to(max_rank, {Kind::A, Kind::B, Kind::C, Kind::D}, 3);
    const std::string range = "A,B,C,D n<=" + std::to_string(max_rank) + ", " + std::to_string(samples) + " samples";

    detail::Recorder rel("braid-relations", range);
    detail::Recorder inv_rt("braid-inverse", range);
    detail::Recorder eq("wt-equivariance", range);
    for (const auto& rs : systems) {
        const int n = rs.rank();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int m = rs.cartan(i, j) * rs.cartan(j, i);
                // number of alternating letters on each side
                const int len = m == 0 ? 2 : m == 1 ? 3 : m == 2 ? 4 : 6;
                BraidWord a, b;
                for (int t = 0; t < len; ++t) {
                    a.push_back(t % 2 ? j : i);
                    b.push_back(t % 2 ? i : j);
                }
                for (int s = 0; s < samples; ++s) {
                    const LWeight x = random_lweight(rs, rng);
                    rel.expect(braid_apply_word(rs, a, x) == braid_apply_word(rs, b, x), [&] {
                        return rs.name() + " (" + std::to_string(i) + "," + std::to_string(j) + ") x=" +
                               to_string(x);
                    });
                }
            }
        for (int i = 1; i <= n; ++i)
            for (int s = 0; s < samples; ++s) {
                const LWeight x = random_lweight(rs, rng);
                inv_rt.expect(braid_apply_inverse(rs, i, braid_apply(rs, i, x)) == x &&
                                  braid_apply(rs, i, braid_apply_inverse(rs, i, x)) == x,
                              [&] { return rs.name() + " i=" + std::to_string(i) + " x=" + to_string(x); });
            }
        std::uniform_int_distribution<int> node(1, n);
        std::uniform_int_distribution<int> wlen(0, 6);
        for (int s = 0; s < samples; ++s) {
            BraidWord w(wlen(rng));
            for (auto& c : w) c = node(rng);
            const LWeight x = random_lweight(rs, rng);
            eq.expect(weight_of(rs, braid_apply_word(rs, w, x)) == apply_word(rs, w, weight_of(rs, x)), [&] {
                return rs.name() + " w=" + detail::word_str(w) + " x=" + to_string(x);
            });
        }
    }
    rep.checks.push_back(rel.finish());
    rep.checks.push_back(inv_rt.finish());
    rep.checks.push_back(eq.finish());

    detail::Recorder sroot("simple-root-formula", "A,B,C,D n<=" + std::to_string(max_rank) + ", k in [-10,10]");
    for (const auto& rs : systems)
        for (int i = 1; i <= rs.rank(); ++i)
            for (int k = -10; k <= 10; ++k) {
                std::vector<Term> t{{i, k, 1}, {i, k + 2 * rs.d(i), 1}};
                for (int j = 1; j <= rs.rank(); ++j) {
                    if (j == i) continue;
                    const int a = rs.cartan(j, i);
                    if (a == -1) t.push_back({j, k + rs.d(i), -1});
                    for (int sh = 1; a <= -2 && sh <= 2 * (-a) - 1; sh += 2) t.push_back({j, k + sh, -1});
                }
                const LWeight want = LWeight::from_terms(t);
                const LWeight got = simple_l_root(rs, i, k);
                sroot.expect(got == want && weight_of(rs, got) == rs.simple_root(i),
                             [&] { return rs.name() + " i=" + std::to_string(i) + " k=" + std::to_string(k); });
            }
    rep.checks.push_back(sroot.finish());

    const int closed_rank = std::max(max_rank, 6);
    detail::Recorder closed("closed-forms", "B,C,D n<=" + std::to_string(closed_rank) + ", k in [-3,3]");
    detail::Recorder wrj("wrj-weights", "B,C,D n<=" + std::to_string(closed_rank));
    for (const auto& rs : detail::systems_up_to(closed_rank, {Kind::B, Kind::C, Kind::D}))
        for (int r = 1; r <= rs.rank(); ++r)
            for (int j = 1; j <= rs.rank(); ++j) {
                if (!wrj_defined(rs, r, j)) continue;
                const auto w = wrj_word(rs, r, j);
                const Weight target = wrj_target_weight(rs, r, j);
                const auto orb = weyl_orbit_minlength(rs, rs.fundamental(r));
                auto it = std::find_if(orb.begin(), orb.end(), [&](const OrbitPoint& p) { return p.weight == target; });
                wrj.expect(apply_word(rs, w, rs.fundamental(r)) == target && it != orb.end() &&
                               it->word.size() == w.size(),
                           [&] { return rs.name() + " r=" + std::to_string(r) + " j=" + std::to_string(j); });
                for (int l = 1; l <= rs.rank(); ++l) {
                    if (!closed_Trj_defined(rs, r, j, l)) continue;
                    for (int k = -3; k <= 3; ++k) {
                        const LWeight got = braid_apply_word(rs, w, gen(rs, l, k));
                        closed.expect(got == closed_Trj(rs, r, j, l, k), [&] {
                            return rs.name() + " r=" + std::to_string(r) + " j=" + std::to_string(j) +
                                   " l=" + std::to_string(l) + " k=" + std::to_string(k);
                        });
                    }
                }
            }
    rep.checks.push_back(closed.finish());
    rep.checks.push_back(wrj.finish());
    return rep;
}

// ---- injectivity, type D classes, ladders ----

inline VerifyReport verify_dn_classes_and_ladders(int max_rank) {
    VerifyReport rep;
    const int big = std::max(max_rank, 6);

    detail::Recorder inj("injectivity", "B,C n<=" + std::to_string(big));
    for (const auto& rs : detail::systems_up_to(big, {Kind::B, Kind::C}))
        for (const auto& ctx : detail::contexts(rs)) {
            std::map<LWeight, Partition> seen;
            for (const auto& p : all_partitions(ctx)) {
                const auto [it, fresh] = seen.emplace(dominant_value(ctx, p), p);
                inj.expect(fresh, [&] {
                    return detail::ctx_str(ctx) + " " + to_string(it->second) + " and " + to_string(p);
                });
            }
        }
    rep.checks.push_back(inj.finish());

    const std::string drange = "D4..D" + std::to_string(big);
    detail::Recorder classes("d-classes", drange);
    detail::Recorder sim("d-flip-invariance", drange);
    detail::Recorder flips("d-flip-bookkeeping", drange);
    detail::Recorder disjoint("d-flip-disjoint", drange);
    detail::Recorder canon("d-canonical-rep", drange);
    detail::Recorder csum("d-class-sum", drange);
    detail::Recorder signs("d-sign-separation", drange);
    detail::Recorder vanish("d-pi-vanish", drange);
    detail::Recorder collect("d-collected-multiplicity", drange);
    for (int n = 4; n <= big; ++n) {
        const RootSystem rs(Kind::D, n);
        for (const auto& ctx : detail::contexts(rs)) {
            const int N = ctx.N();
            for (int j = 1; j <= n; ++j)
                for (int s = 0; s <= n; ++s)
                    vanish.expect(pi_factor(ctx, j, 4 * s).is_identity() == (2 * s == j - (N + 1)), [&] {
                        return detail::ctx_str(ctx) + " j=" + std::to_string(j) + " s=" + std::to_string(s);
                    });

            std::map<LWeight, long long> route_group, route_rep;
            for (const auto& src : dominant_sources(ctx)) route_group[dominant_value(ctx, src.partition, src.sign)]++;

            for (int k = 0; k <= ctx.M(); ++k) {
                const auto Js = enumerate_J_k(ctx, k);
                std::map<LWeight, std::set<Partition>> group;
                for (const auto& p : Js) group[pi_of_partition(ctx, p)].insert(p);
                long long rep_sum = 0;
                for (const auto& p : Js) {
                    const auto cls = equivalence_class(ctx, p);
                    const auto& g = group[pi_of_partition(ctx, p)];
                    const auto sp = supp_pm(ctx, p, Sign::Plus);
                    const auto sm = supp_pm(ctx, p, Sign::Minus);
                    const long long size = 1LL << (sp.size() + sm.size());
                    classes.expect(cls == g && static_cast<long long>(g.size()) == size &&
                                       size == (1LL << mult_exponent(ctx, p)),
                                   [&] { return detail::ctx_str(ctx) + " " + to_string(p); });

                    for (Sign sg : {Sign::Plus, Sign::Minus}) {
                        const auto sup = supp_pm(ctx, p, sg);
                        const int m = sg == Sign::Plus ? N : N + 1;
                        for (int j : sup) {
                            const Partition q = flip(p, j, sg);
                            sim.expect(pi_of_partition(ctx, q) == pi_of_partition(ctx, p), [&] {
                                return detail::ctx_str(ctx) + " " + to_string(p) + " j=" + std::to_string(j);
                            });
                            const int t = tau(p, j, sg);
                            auto expect_m = supp_m(p, m);
                            expect_m.erase(std::find(expect_m.begin(), expect_m.end(), j));
                            const auto other = supp_m(q, sg == Sign::Plus ? m + 1 : m - 1);
                            flips.expect(q.length() == p.length() && flip(q, t, opposite(sg)) == p &&
                                             supp_m(q, m) == expect_m &&
                                             std::find(other.begin(), other.end(), t) != other.end(),
                                         [&] {
                                             return detail::ctx_str(ctx) + " " + to_string(p) +
                                                    " j=" + std::to_string(j);
                                         });
                        }
                        for (std::size_t a = 0; a < sup.size(); ++a)
                            for (std::size_t b = a + 1; b < sup.size(); ++b) {
                                const int a0 = std::min(sup[a], tau(p, sup[a], sg));
                                const int a1 = std::max(sup[a], tau(p, sup[a], sg));
                                const int b0 = std::min(sup[b], tau(p, sup[b], sg));
                                const int b1 = std::max(sup[b], tau(p, sup[b], sg));
                                disjoint.expect(a1 < b0 || b1 < a0,
                                                [&] { return detail::ctx_str(ctx) + " " + to_string(p); });
                            }
                    }

                    const Partition c = canonical_rep(ctx, p);
                    int empties = 0;
                    for (const auto& q : cls) empties += supp_pm(ctx, q, Sign::Minus).empty();
                    canon.expect(supp_pm(ctx, c, Sign::Minus).empty() && cls.count(c) && empties == 1,
                                 [&] { return detail::ctx_str(ctx) + " " + to_string(p); });
                    if (c == p) {
                        rep_sum += 1LL << mult_exponent(ctx, p);
                        if (k < ctx.M()) {
                            for (Sign sg : {Sign::Plus, Sign::Minus})
                                route_rep[dominant_value(ctx, p, sg)] += 1LL << mult_exponent(ctx, p);
                        } else {
                            route_rep[dominant_value(ctx, p)] += 1LL << mult_exponent(ctx, p);
                        }
                    }
                }
                csum.expect(rep_sum == static_cast<long long>(Js.size()),
                            [&] { return detail::ctx_str(ctx) + " k=" + std::to_string(k); });
            }
            collect.expect(route_group == route_rep, [&] { return detail::ctx_str(ctx); });

            // k = M: the spin corrections are trivial; k < M: + and - values never meet
            const auto all = all_partitions(ctx);
            for (const auto& p : all) {
                if (p.length() == ctx.M()) {
                    signs.expect(pi_pm(ctx, p, Sign::Plus).is_identity() && pi_pm(ctx, p, Sign::Minus).is_identity(),
                                 [&] { return detail::ctx_str(ctx) + " " + to_string(p); });
                    continue;
                }
                for (const auto& q : all) {
                    if (q.length() == ctx.M()) continue;
                    signs.expect(dominant_value(ctx, p, Sign::Plus) != dominant_value(ctx, q, Sign::Minus) &&
                                     (pi_pm(ctx, p, Sign::Plus) == pi_pm(ctx, q, Sign::Plus)) ==
                                         (p.length() == q.length()),
                                 [&] { return detail::ctx_str(ctx) + " " + to_string(p) + " " + to_string(q); });
                }
            }
        }
    }
    for (auto* r : {&classes, &sim, &flips, &disjoint, &canon, &csum, &signs, &vanish, &collect})
        rep.checks.push_back(r->finish());

    detail::Recorder lad("ladders", "B,C,D n<=" + std::to_string(max_rank));
    for (const auto& rs : detail::systems_up_to(max_rank, {Kind::B, Kind::C, Kind::D}))
        for (const auto& ctx : detail::contexts(rs))
            for (const auto& L : all_ladders(ctx))
                lad.expect(L.holds(), [&] {
                    return detail::ctx_str(ctx) + " " + to_string(L.which) + " from " + to_string(L.from) +
                           (L.identity_holds() ? " (coordinate)" : " (identity)");
                });
    rep.checks.push_back(lad.finish());
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"counts", "dims", "proj", "braid", "classes", "all"};
    return names;
}

inline VerifyReport run_suite(const std::string& suite, const VerifyOptions& o) {
    if (suite == "counts") return verify_counts(std::max(o.max_rank, 2));
    if (suite == "dims") return verify_dimensions(o.max_rank);
    if (suite == "proj") return verify_weight_projection(o.max_rank);
    if (suite == "braid") return verify_braid_and_closed_forms(o.max_rank, o.samples, o.seed);
    if (suite == "classes") return verify_dn_classes_and_ladders(o.max_rank);
    if (suite == "all") {
        VerifyReport rep;
        for (const auto& s : suite_names())
            if (s != "all") rep.append(run_suite(s, o));
        return rep;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

/// Which check covers each identity the library depends on.
struct Anchor {
    std::string id;
    std::string check;
};

inline const std::vector<Anchor>& coverage_manifest() {
    static const std::vector<Anchor> m{
        {"count/C closed form", "partition-count"},
        {"count/B closed form", "partition-count"},
        {"count/D per-length closed form", "d-length-count"},
        {"count/D three-term mass identity", "d-weight-mass"},
        {"count/binomial identity", "binomial-identity"},
        {"count/C recursion on first part", "c-partition-recursion"},
        {"orbit/coset sizes and words", "orbit-sizes"},
        {"lweight/simple l-root expansion", "simple-root-formula"},
        {"braid/relations", "braid-relations"},
        {"braid/inverse", "braid-inverse"},
        {"braid/weight equivariance", "wt-equivariance"},
        {"braid/w_rj weight identities", "wrj-weights"},
        {"braid/C closed forms", "closed-forms"},
        {"braid/B closed forms", "closed-forms"},
        {"braid/D closed forms", "closed-forms"},
        {"pi/C injectivity", "injectivity"},
        {"pi/B injectivity", "injectivity"},
        {"pi/D vanishing factor", "d-pi-vanish"},
        {"pi/D class sizes", "d-classes"},
        {"pi/D flip invariance", "d-flip-invariance"},
        {"pi/D flip inverse and supports", "d-flip-bookkeeping"},
        {"pi/D flip intervals disjoint", "d-flip-disjoint"},
        {"pi/D canonical representative", "d-canonical-rep"},
        {"pi/D class sum", "d-class-sum"},
        {"pi/D spin corrections", "d-sign-separation"},
        {"pi/D two assembly routes", "d-collected-multiplicity"},
        {"ladder/C", "ladders"},
        {"ladder/B three cases", "ladders"},
        {"ladder/D", "ladders"},
        {"character/mass", "character-mass"},
        {"character/highest l-weight", "highest-weight"},
        {"character/dominant masses", "dominant-mass"},
        {"character/multiplicity equality", "multiplicity-pattern"},
        {"character/minuscule orbit", "minuscule-orbit"},
        {"character/base shift", "base-shift"},
        {"character/thread independence", "thread-independence"},
        {"character/weight projection", "weight-projection"},
        {"character/weights below the top", "root-lattice-cone"},
        {"character/orbit weights", "orbit-weights"},
    };
    return m;
}

inline std::string format_report(const VerifyReport& rep, bool timing = true) {
    std::ostringstream os;
    std::size_t width = 5;
    for (const auto& c : rep.checks) width = std::max(width, c.name.size());
    for (const auto& c : rep.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << std::string(width - c.name.size() + 2, ' ') << c.cases
           << " cases  [" << c.range << "]";
        if (timing) os << "  " << static_cast<long long>(c.seconds * 1000) << " ms";
        os << '\n';
        if (!c.passed) os << "     counterexample: " << c.counterexample << '\n';
    }
    os << (rep.passed() ? "all checks passed" : "FAILURES present") << '\n';
    return os.str();
}

} // namespace qchar
