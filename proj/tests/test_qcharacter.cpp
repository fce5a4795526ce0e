#include <gtest/gtest.h>

#include "classical_oracle.hpp"
#include "frenkel_mukhin.hpp"
#include "qchar/qcharacter.hpp"

using namespace qchar;

namespace {

std::vector<RootSystem> small_systems() {
    std::vector<RootSystem> out;
    for (int n = 1; n <= 5; ++n) {
        out.emplace_back(Kind::A, n);
        if (n >= 2) out.emplace_back(Kind::B, n), out.emplace_back(Kind::C, n);
        if (n >= 4) out.emplace_back(Kind::D, n);
    }
    return out;
}

std::map<Weight, long long> pushforward(const RootSystem& rs, const LCharacter& ch) {
    std::map<Weight, long long> out;
    for (const auto& [x, m] : ch.entries) out[weight_of(rs, x)] += m;
    return out;
}

// Expands per-r dominant seeds over the orbit of omega_r.
std::map<LWeight, long long> expand(const RootSystem& rs, const std::map<int, std::vector<std::pair<LWeight, long long>>>& seeds) {
    std::map<LWeight, long long> out;
    for (const auto& [r, list] : seeds)
        for (const auto& pt : weyl_orbit_minlength(rs, rs.fundamental(r)))
            for (const auto& [x, m] : list) out[braid_apply_word(rs, pt.word, x)] += m;
    return out;
}

} // namespace

TEST(PiValues, Examples) {
    const PartitionCtx b3(RootSystem(Kind::B, 3), 2, 0);
    EXPECT_EQ(pi_star(b3, Partition{}), gen(3, 1) * gen(3, 9).inverse());
    EXPECT_TRUE(pi_star(b3, Partition{3}).is_identity());
    const PartitionCtx d4(RootSystem(Kind::D, 4), 2, 0);
    EXPECT_EQ(pi_pm(d4, Partition{}, Sign::Plus), gen(4, 1) * gen(4, 5).inverse());
    EXPECT_EQ(pi_pm(d4, Partition{}, Sign::Minus), gen(3, 1) * gen(3, 5).inverse());
    EXPECT_THROW(pi_star(d4, Partition{}), std::invalid_argument);
    EXPECT_THROW(pi_pm(b3, Partition{}, Sign::Plus), std::invalid_argument);
}

TEST(PiValues, HighestLWeight) {
    for (const auto& rs : small_systems())
        for (int i = 1; i <= rs.rank(); ++i) {
            if (!has_partition_formula(rs, i)) continue;
            const PartitionCtx ctx(rs, i, i);
            const auto entries = dominant_lweights_at(ctx);
            ASSERT_EQ(entries.size(), 1u) << rs.name() << " i=" << i;
            EXPECT_EQ(entries[0].value, gen(i, 0));
            EXPECT_EQ(entries[0].mult, 1);
        }
}

TEST(PiValues, DominantValuesHaveWeightOmegaR) {
    for (const auto& rs : small_systems())
        for (int i = 1; i <= rs.rank(); ++i) {
            if (!has_partition_formula(rs, i)) continue;
            for (const auto& [r, list] : dominant_lweights(rs, i))
                for (const auto& e : list) {
                    EXPECT_EQ(weight_of(rs, e.value), rs.fundamental(r)) << rs.name() << " i=" << i << " r=" << r;
                }
        }
}

TEST(Dominant, D4ZeroWeightListing) {
    const PartitionCtx ctx(RootSystem(Kind::D, 4), 2, 0);
    const auto entries = dominant_lweights_at(ctx);
    ASSERT_EQ(entries.size(), 4u);
    long long mass = 0;
    std::size_t rows = 0;
    for (const auto& e : entries) {
        mass += e.mult;
        rows += e.sources.size();
        EXPECT_EQ(static_cast<long long>(e.sources.size()), e.mult);
    }
    EXPECT_EQ(mass, 5);
    EXPECT_EQ(rows, 5u);
}

TEST(Dominant, B3TopHasOneEntry) {
    const PartitionCtx ctx(RootSystem(Kind::B, 3), 2, 2);
    EXPECT_EQ(dominant_lweights_at(ctx).size(), 1u);
}

TEST(Character, SmallExamples) {
    const RootSystem a2(Kind::A, 2);
    const auto ch = full_character(a2, 1);
    EXPECT_EQ(ch.entries, (std::map<LWeight, long long>{{gen(1, 0), 1},
                                                        {gen(1, 2).inverse() * gen(2, 1), 1},
                                                        {gen(2, 3).inverse(), 1}}));
    const RootSystem c2(Kind::C, 2);
    const auto c = full_character(c2, 2);
    EXPECT_EQ(c.entries.size(), 5u);
    EXPECT_EQ(c.mass(), 5);
    EXPECT_EQ(c.multiplicity(gen(2, 0)), 1);
    EXPECT_EQ(c.multiplicity(gen(2, 7)), 0);
}

TEST(Character, MassesMatchWeylDimensions) {
    EXPECT_EQ(full_character(RootSystem(Kind::C, 2), 2).mass(), 5);
    EXPECT_EQ(full_character(RootSystem(Kind::D, 4), 2).mass(), 29);
    EXPECT_EQ(full_character(RootSystem(Kind::B, 3), 2).mass(), 22);
    for (const auto& rs : small_systems())
        for (int i = 1; i <= rs.rank(); ++i) {
            long long want = 0;
            for (const auto& [w, m] : oracle::loop_module_weights(rs.kind(), rs.rank(), i)) want += m;
            EXPECT_EQ(full_character(rs, i).mass(), want) << rs.name() << " i=" << i;
        }
}

TEST(Character, WeightProjectionMatchesEpsilonModel) {
    for (const auto& rs : small_systems())
        for (int i = 1; i <= rs.rank(); ++i)
            EXPECT_EQ(pushforward(rs, full_character(rs, i)), oracle::loop_module_weights(rs.kind(), rs.rank(), i))
                << rs.name() << " i=" << i;
    const RootSystem d4(Kind::D, 4);
    EXPECT_EQ(pushforward(d4, full_character(d4, 2)).at(d4.zero()), 5);
}

TEST(Character, AgreesWithFrenkelMukhin) {
    for (const auto& rs : small_systems())
        for (int i = 1; i <= rs.rank(); ++i)
            EXPECT_EQ(full_character(rs, i).entries, fm::qcharacter(rs, i)) << rs.name() << " i=" << i;
}

TEST(Character, D6Node4) {
    const RootSystem d6(Kind::D, 6);
    const auto ch = full_character(d6, 4, 0, 0);
    EXPECT_EQ(ch.mass(), 562);
    EXPECT_EQ(ch.entries, fm::qcharacter(d6, 4));
    EXPECT_EQ(pushforward(d6, ch), oracle::loop_module_weights(Kind::D, 6, 4));
    std::set<long long> mults;
    for (const auto& [x, m] : ch.entries) mults.insert(m);
    EXPECT_EQ(mults, (std::set<long long>{1, 2, 4}));
}

TEST(Character, DMultiplicitiesArePowersOfTwo) {
    for (int n = 4; n <= 6; ++n) {
        const RootSystem rs(Kind::D, n);
        for (int i = 2; i <= n - 2; ++i)
            for (int r : index_set(rs, i)) {
                const PartitionCtx ctx(rs, i, r);
                const auto ch = full_character(rs, i);
                for (const auto& e : dominant_lweights_at(ctx)) {
                    const auto& p = e.sources.front().partition;
                    EXPECT_EQ(e.mult, 1LL << mult_exponent(ctx, p));
                    EXPECT_EQ(ch.multiplicity(e.value), e.mult);
                }
            }
    }
}

TEST(Character, MinusculeNodes) {
    for (int n = 1; n <= 5; ++n) {
        const RootSystem rs(Kind::A, n);
        for (int i = 1; i <= n; ++i) {
            const auto ch = full_character(rs, i);
            EXPECT_EQ(static_cast<long long>(ch.entries.size()), binomial(n + 1, i));
            for (const auto& [x, m] : ch.entries) EXPECT_EQ(m, 1);
        }
    }
    for (auto [k, n, i] : {std::tuple{Kind::B, 4, 4}, {Kind::C, 4, 1}, {Kind::D, 5, 1}, {Kind::D, 5, 5}}) {
        const RootSystem rs(k, n);
        const auto ch = full_character(rs, i);
        EXPECT_EQ(static_cast<long long>(ch.entries.size()), weyl_dim(rs, rs.fundamental(i)));
    }
}

TEST(Character, BaseShiftAndThreads) {
    const RootSystem rs(Kind::B, 4);
    const auto a = full_character(rs, 2, 0, 1);
    const auto b = full_character(rs, 2, 5, 1);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (const auto& [x, m] : a.entries) EXPECT_EQ(b.multiplicity(x.shifted(5)), m);
    EXPECT_EQ(full_character(rs, 2, 0, 4), a);
    EXPECT_EQ(full_character(rs, 2, 0, 0), a);
    EXPECT_EQ(fm::qcharacter(rs, 2, 5), b.entries);
}

TEST(Character, MirroredBaseExponentIsWrong) {
    // Using omega_{r, q1^{r-i}} as the leading factor instead of omega_{r, q1^{i-r}}.
    for (auto [k, n, i] : {std::tuple{Kind::C, 3, 3}, {Kind::B, 3, 2}, {Kind::D, 5, 3}}) {
        const RootSystem rs(k, n);
        std::map<int, std::vector<std::pair<LWeight, long long>>> right, mirrored;
        for (auto& [r, list] : dominant_lweights(rs, i))
            for (const auto& e : list) {
                right[r].emplace_back(e.value, e.mult);
                const int d1 = rs.d(1);
                const LWeight swap = gen(r, d1 * (r - i)) / gen(r, d1 * (i - r));
                mirrored[r].emplace_back(e.value * swap, e.mult);
            }
        const auto truth = fm::qcharacter(rs, i);
        EXPECT_EQ(expand(rs, right), truth) << rs.name();
        EXPECT_NE(expand(rs, mirrored), truth) << rs.name();
    }
}

TEST(Ladders, AllHold) {
    std::size_t seen_c = 0, seen_b[3] = {0, 0, 0}, seen_d = 0;
    for (Kind kind : {Kind::B, Kind::C, Kind::D})
        for (int n = 2; n <= 5; ++n) {
            if (kind == Kind::D && n < 4) continue;
            const RootSystem rs(kind, n);
            for (int i = 1; i <= n; ++i) {
                if (!has_partition_formula(rs, i)) continue;
                for (int r : index_set(rs, i))
                    for (const auto& L : all_ladders(PartitionCtx(rs, i, r))) {
                        EXPECT_TRUE(L.identity_holds()) << rs.name() << " i=" << i << " r=" << r << " " << to_string(L.which);
                        EXPECT_TRUE(L.coordinate_holds()) << rs.name() << " i=" << i << " r=" << r << " " << to_string(L.which);
                        switch (L.which) {
                        case LadderCase::C: ++seen_c; break;
                        case LadderCase::B_i: ++seen_b[0]; break;
                        case LadderCase::B_ii: ++seen_b[1]; break;
                        case LadderCase::B_iii: ++seen_b[2]; break;
                        case LadderCase::D: ++seen_d; break;
                        }
                    }
            }
        }
    EXPECT_GT(seen_c, 0u);
    EXPECT_GT(seen_b[0], 0u);
    EXPECT_GT(seen_b[1], 0u);
    EXPECT_GT(seen_b[2], 0u);
    EXPECT_GT(seen_d, 0u);
}

TEST(Ladders, C3Example) {
    const PartitionCtx ctx(RootSystem(Kind::C, 3), 3, 1);
    const auto L = ladder(ctx, Partition{2}, LadderCase::C);
    EXPECT_EQ(L.root_node, 2);
    EXPECT_EQ(L.root_exp, 3);
    EXPECT_TRUE(L.holds());
}

TEST(Ladders, RejectsWrongCase) {
    const PartitionCtx b3(RootSystem(Kind::B, 3), 2, 0);
    EXPECT_THROW(ladder(b3, Partition{}, LadderCase::C), std::invalid_argument);
    EXPECT_THROW(ladder(b3, Partition{3}, LadderCase::B_i), std::invalid_argument);
    EXPECT_NO_THROW(ladder(b3, Partition{3}, LadderCase::B_ii));
    EXPECT_THROW(ladder(b3, Partition{1, 2}, LadderCase::B_i), std::invalid_argument);
}
