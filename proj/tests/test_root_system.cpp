#include <gtest/gtest.h>

#include <set>

#include "classical_oracle.hpp"
#include "qchar/root_system.hpp"

using namespace qchar;

namespace {

std::vector<RootSystem> all_systems(int max_rank) {
    std::vector<RootSystem> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.emplace_back(Kind::A, n);
        if (n >= 2) out.emplace_back(Kind::B, n), out.emplace_back(Kind::C, n);
        if (n >= 3) out.emplace_back(Kind::D, n);
    }
    return out;
}

} // namespace

TEST(RootSystem, C2Data) {
    const RootSystem rs(Kind::C, 2);
    const std::vector<std::vector<int>> want = oracle::cartan(Kind::C, 2);
    EXPECT_EQ(rs.cartan_matrix(), want);
    EXPECT_EQ(rs.cartan_matrix(), (std::vector<std::vector<int>>{{2, -2}, {-1, 2}}));
    EXPECT_EQ(rs.symmetrizer(), oracle::symmetrizer(Kind::C, 2));
    EXPECT_EQ(rs.symmetrizer(), (std::vector<int>{1, 2}));
    EXPECT_EQ(rs.hstar(), 6);
}

TEST(RootSystem, RankOne) {
    const RootSystem rs(Kind::A, 1);
    EXPECT_EQ(rs.cartan_matrix(), (std::vector<std::vector<int>>{{2}}));
    EXPECT_EQ(rs.symmetrizer(), (std::vector<int>{1}));
}

TEST(RootSystem, B3Data) {
    const RootSystem rs(Kind::B, 3);
    EXPECT_EQ(rs.symmetrizer(), oracle::symmetrizer(Kind::B, 3));
    EXPECT_EQ(rs.symmetrizer(), (std::vector<int>{2, 2, 1}));
    EXPECT_EQ(rs.hstar(), 5);
}

TEST(RootSystem, CartanAndSymmetrizerMatchEpsilonModel) {
    for (const auto& rs : all_systems(8)) {
        SCOPED_TRACE(rs.name());
        EXPECT_EQ(rs.cartan_matrix(), oracle::cartan(rs.kind(), rs.rank()));
        EXPECT_EQ(rs.symmetrizer(), oracle::symmetrizer(rs.kind(), rs.rank()));
        for (int i = 1; i <= rs.rank(); ++i)
            for (int j = 1; j <= rs.rank(); ++j) {
                EXPECT_EQ(rs.d(i) * rs.cartan(i, j), rs.d(j) * rs.cartan(j, i));
                EXPECT_EQ(rs.cartan(i, j) == 0, rs.cartan(j, i) == 0);
            }
    }
}

TEST(RootSystem, HstarPerType) {
    for (int n = 2; n <= 8; ++n) {
        EXPECT_EQ(RootSystem(Kind::A, n).hstar(), n + 1);
        EXPECT_EQ(RootSystem(Kind::B, n).hstar(), 2 * n - 1);
        EXPECT_EQ(RootSystem(Kind::C, n).hstar(), 2 * n + 2);
        if (n >= 3) EXPECT_EQ(RootSystem(Kind::D, n).hstar(), 2 * n - 2);
    }
}

TEST(RootSystem, RejectsBadRanks) {
    EXPECT_THROW(RootSystem(Kind::A, 0), std::invalid_argument);
    EXPECT_THROW(RootSystem(Kind::B, 1), std::invalid_argument);
    EXPECT_THROW(RootSystem(Kind::C, 1), std::invalid_argument);
    EXPECT_THROW(RootSystem(Kind::D, 2), std::invalid_argument);
    EXPECT_THROW(kind_from_char('E'), std::invalid_argument);
}

TEST(RootSystem, PositiveRootCounts) {
    for (const auto& rs : all_systems(7)) {
        const int n = rs.rank();
        std::size_t want = 0;
        switch (rs.kind()) {
        case Kind::A: want = n * (n + 1) / 2; break;
        case Kind::B:
        case Kind::C: want = n * n; break;
        case Kind::D: want = n * (n - 1); break;
        }
        EXPECT_EQ(rs.positive_roots().size(), want) << rs.name();
    }
}

TEST(Reflect, Examples) {
    const RootSystem a2(Kind::A, 2);
    EXPECT_EQ(reflect(a2, 1, a2.fundamental(1)), Weight({-1, 1}));
    const RootSystem c2(Kind::C, 2);
    EXPECT_EQ(reflect(c2, 2, c2.fundamental(2)), Weight({2, -1}));
    EXPECT_EQ(reflect(c2, 1, c2.fundamental(2)), c2.fundamental(2));
    EXPECT_THROW(reflect(c2, 3, c2.fundamental(2)), std::out_of_range);
}

TEST(Reflect, Involutive) {
    for (const auto& rs : all_systems(5))
        for (int i = 1; i <= rs.rank(); ++i)
            for (int j = 0; j <= rs.rank(); ++j) {
                Weight w = rs.fundamental(j);
                if (j > 0) w[j] = 3, w[1] -= 2;
                EXPECT_EQ(reflect(rs, i, reflect(rs, i, w)), w);
            }
}

TEST(Orbit, Examples) {
    const RootSystem c2(Kind::C, 2);
    EXPECT_EQ(weyl_orbit_minlength(c2, c2.fundamental(2)).size(), 4u);
    const auto zero = weyl_orbit_minlength(c2, c2.zero());
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].word.empty());

    const RootSystem a2(Kind::A, 2);
    const auto o = weyl_orbit_minlength(a2, a2.fundamental(1));
    ASSERT_EQ(o.size(), 3u);
    EXPECT_EQ(o[0].word, ReducedWord{});
    EXPECT_EQ(o[1].word, ReducedWord{1});
    EXPECT_EQ(o[2].word, (ReducedWord{2, 1}));
    EXPECT_THROW(weyl_orbit_minlength(a2, Weight({-1, 1})), std::invalid_argument);
}

TEST(Orbit, SizesWordsAndLengths) {
    for (const auto& rs : all_systems(5)) {
        for (int i = 0; i <= rs.rank(); ++i) {
            const Weight lam = rs.fundamental(i);
            const auto orb = weyl_orbit_minlength(rs, lam);
            // orbit size from the epsilon model: distinct Weyl images
            std::set<Weight> seen{lam};
            std::vector<Weight> frontier{lam};
            while (!frontier.empty()) {
                std::vector<Weight> next;
                for (const auto& mu : frontier)
                    for (int a = 1; a <= rs.rank(); ++a) {
                        Weight nu = reflect(rs, a, mu);
                        if (seen.insert(nu).second) next.push_back(nu);
                    }
                frontier = next;
            }
            EXPECT_EQ(orb.size(), seen.size()) << rs.name() << " omega_" << i;
            EXPECT_EQ(weyl_group_order(rs.kind(), rs.rank()) % orb.size(), 0u);
            std::size_t prev = 0;
            for (const auto& pt : orb) {
                EXPECT_EQ(apply_word(rs, pt.word, lam), pt.weight);
                EXPECT_GE(pt.word.size(), prev);
                prev = pt.word.size();
                // every prefix (from the right) strictly lowers the weight: the word is reduced
                Weight cur = lam;
                for (auto it = pt.word.rbegin(); it != pt.word.rend(); ++it) {
                    EXPECT_GT(cur[*it], 0);
                    cur = reflect(rs, *it, cur);
                }
            }
        }
    }
}

TEST(Orbit, Deterministic) {
    const RootSystem rs(Kind::D, 5);
    const auto a = weyl_orbit_minlength(rs, rs.fundamental(2));
    const auto b = weyl_orbit_minlength(rs, rs.fundamental(2));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].weight, b[k].weight);
        EXPECT_EQ(a[k].word, b[k].word);
    }
}

TEST(WeylGroupOrder, ClosedForms) {
    EXPECT_EQ(weyl_group_order(Kind::A, 3), 24u);
    EXPECT_EQ(weyl_group_order(Kind::B, 3), 48u);
    EXPECT_EQ(weyl_group_order(Kind::C, 4), 384u);
    EXPECT_EQ(weyl_group_order(Kind::D, 4), 192u);
}

TEST(WeylDim, Examples) {
    const RootSystem c2(Kind::C, 2);
    EXPECT_EQ(weyl_dim(c2, c2.fundamental(2)), 5);
    EXPECT_EQ(weyl_dim(c2, c2.zero()), 1);
    const RootSystem d4(Kind::D, 4);
    EXPECT_EQ(weyl_dim(d4, d4.fundamental(2)), 28);
    EXPECT_THROW(weyl_dim(c2, Weight({-1, 0})), std::invalid_argument);
}

TEST(WeylDim, MatchesExteriorPowers) {
    for (const auto& rs : all_systems(6))
        for (int i = 1; i <= rs.rank(); ++i) {
            const bool spin = (rs.kind() == Kind::B && i == rs.rank()) || (rs.kind() == Kind::D && i >= rs.rank() - 1);
            const auto w = spin ? oracle::spin_weights(rs.kind(), rs.rank(), i)
                                : oracle::fundamental_weights(rs.kind(), rs.rank(), i);
            long long total = 0;
            for (auto& [mu, m] : w) total += m;
            EXPECT_EQ(weyl_dim(rs, rs.fundamental(i)), total) << rs.name() << " i=" << i;
        }
}

TEST(DominantChar, Examples) {
    const RootSystem c2(Kind::C, 2);
    const auto ch = dominant_char(c2, c2.fundamental(2));
    EXPECT_EQ(ch, (std::map<Weight, long long>{{c2.fundamental(2), 1}, {c2.zero(), 1}}));
    EXPECT_EQ(dominant_char(c2, c2.zero()), (std::map<Weight, long long>{{c2.zero(), 1}}));
    const RootSystem c3(Kind::C, 3);
    EXPECT_EQ(dominant_char(c3, c3.fundamental(2)).at(c3.zero()), 2);
}

TEST(DominantChar, OrbitExpansionMatchesEpsilonModel) {
    for (const auto& rs : all_systems(5))
        for (int i = 1; i <= rs.rank(); ++i) {
            const bool spin = (rs.kind() == Kind::B && i == rs.rank()) || (rs.kind() == Kind::D && i >= rs.rank() - 1);
            const auto want = spin ? oracle::spin_weights(rs.kind(), rs.rank(), i)
                                   : oracle::fundamental_weights(rs.kind(), rs.rank(), i);
            EXPECT_EQ(weight_char(rs, rs.fundamental(i)), want) << rs.name() << " i=" << i;
            long long total = 0;
            for (const auto& [mu, m] : dominant_char(rs, rs.fundamental(i)))
                total += m * static_cast<long long>(weyl_orbit_minlength(rs, mu).size());
            EXPECT_EQ(total, weyl_dim(rs, rs.fundamental(i)));
        }
}

TEST(ClassicalDecomposition, Examples) {
    const RootSystem c3(Kind::C, 3);
    EXPECT_EQ(classical_decomposition(c3, 2), std::vector<Weight>{c3.fundamental(2)});
    const RootSystem b3(Kind::B, 3);
    EXPECT_EQ(classical_decomposition(b3, 2), (std::vector<Weight>{b3.fundamental(2), b3.zero()}));
    const RootSystem d4(Kind::D, 4);
    EXPECT_EQ(classical_decomposition(d4, 2), (std::vector<Weight>{d4.fundamental(2), d4.zero()}));
    const RootSystem b5(Kind::B, 5);
    EXPECT_EQ(classical_decomposition_nodes(b5, 3), (std::vector<int>{3, 1}));
    EXPECT_EQ(classical_decomposition_nodes(b5, 5), (std::vector<int>{5}));
}
