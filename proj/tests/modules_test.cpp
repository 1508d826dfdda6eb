#include <gtest/gtest.h>

#include <map>
#include <set>

#include "quotlab/local_modules.hpp"

namespace quotlab {
namespace {

// Independent oracle: every reduced echelon matrix of the right rank, filtered
// by t-invariance checked directly on the rows.
bool invariant_by_hand(const Submodule& a) {
  const int level = a.level();
  for (const auto& v : a.basis()) {
    FpVector w(v.size(), 0);
    for (int g = 0; g < a.rank(); ++g)
      for (int j = 1; j < level; ++j) w[static_cast<std::size_t>(g * level + j)] = v[static_cast<std::size_t>(g * level + j - 1)];
    FpRows joined = a.basis();
    joined.push_back(w);
    if (rank_of(joined, a.field()) != a.basis().size()) return false;
  }
  return true;
}

std::set<Submodule> brute_force(int level, int rank, std::uint32_t q, int colength) {
  ModuleShape s{level, rank, q};
  const int d = s.dim(), k = d - colength;
  std::set<Submodule> out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> piv;
    for (int c = 0; c < d; ++c)
      if (mask >> c & 1) piv.push_back(c);
    // free slots: (row, col) with col > pivot of row and col not a pivot
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
      for (int c = piv[static_cast<std::size_t>(i)] + 1; c < d; ++c)
        if (!(mask >> c & 1)) slots.emplace_back(i, c);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      FpRows rows(static_cast<std::size_t>(k), FpVector(static_cast<std::size_t>(d), 0));
      for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
      std::uint64_t c = code;
      for (auto [i, col] : slots) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
      Submodule a(s, rows);
      EXPECT_EQ(a.basis(), rows);  // echelon matrices are already canonical
      if (invariant_by_hand(a)) out.insert(a);
    }
  }
  return out;
}

Submodule span(ModuleShape s, FpRows rows) { return Submodule(s, std::move(rows)); }

TEST(Enumerate, SpecCounts) {
  EXPECT_EQ(quot_points(1, 2, 2).size(), 3u);
  EXPECT_EQ(quot_points(2, 2, 2).size(), 7u);
  EXPECT_EQ(quot_points(3, 2, 2).size(), 15u);
}

TEST(Enumerate, MatchesBruteForce) {
  struct Case { int level, rank; std::uint32_t q; int colength; };
  for (Case c : {Case{1, 2, 2, 1}, Case{2, 2, 2, 2}, Case{3, 2, 2, 3}, Case{2, 2, 3, 2}, Case{1, 3, 2, 1},
                 Case{2, 2, 2, 1}, Case{2, 2, 2, 3}, Case{1, 3, 3, 2}, Case{2, 3, 2, 2}}) {
    auto fast = enumerate_submodules(c.level, c.rank, c.q, c.colength);
    auto slow = brute_force(c.level, c.rank, c.q, c.colength);
    EXPECT_EQ(std::set<Submodule>(fast.begin(), fast.end()), slow)
        << c.level << "," << c.rank << "," << c.q << "," << c.colength;
    EXPECT_TRUE(std::is_sorted(fast.begin(), fast.end()));
    EXPECT_EQ(std::set<Submodule>(fast.begin(), fast.end()).size(), fast.size());
  }
}

TEST(Enumerate, ProjectiveSpaceForLevelOne) {
  for (std::uint32_t q : {2u, 3u, 5u})
    for (int r = 2; r <= 4; ++r) EXPECT_EQ(static_cast<long>(quot_points(1, r, q).size()), projective_count(q, r));
}

TEST(Enumerate, Guards) {
  EXPECT_THROW(enumerate_submodules(7, 2, 2, 7), GuardError);
  EXPECT_THROW(enumerate_submodules(2, 2, 4, 2), AlgebraError);
  EXPECT_THROW(enumerate_submodules(2, 2, 7, 2), GuardError);
}

TEST(Enumerate, EveryPointIsInvariantAndCanonical) {
  for (std::uint32_t q : {2u, 3u})
    for (int n = 1; n <= 3; ++n)
      for (const auto& a : quot_points(n, 2, q)) {
        EXPECT_TRUE(is_t_invariant(a));
        EXPECT_EQ(a.colength(), n);
        EXPECT_EQ(Submodule(a.shape(), a.basis()), a);
      }
}

TEST(QuotientType, Examples) {
  ModuleShape s{2, 2, 2};
  EXPECT_EQ(quotient_type(power_of_maximal_ideal(s, 1)), Partition({1, 1}));
  auto a = span(s, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(quotient_type(a), Partition({1}));
}

TEST(QuotientType, StrataForThreeTwoTwo) {
  std::map<Partition, int> strata;
  auto pts = quot_points(3, 2, 2);
  for (const auto& a : pts) ++strata[quotient_type(a)];
  EXPECT_EQ(strata.size(), 2u);
  EXPECT_EQ(strata[Partition({3})], 12);
  EXPECT_EQ(strata[Partition({2, 1})], 3);
}

TEST(QuotientType, Properties) {
  for (std::uint32_t q : {2u, 3u})
    for (int r = 2; r <= 3; ++r)
      for (int n = 1; n * r <= 6; ++n) {
        auto pts = quot_points(n, r, q);
        std::map<Partition, int> strata;
        for (const auto& a : pts) {
          auto lam = quotient_type(a);
          EXPECT_EQ(lam.weight(), a.colength());
          EXPECT_LE(static_cast<int>(lam.length()), r);
          EXPECT_EQ(lam.conjugate().conjugate(), lam);
          ++strata[lam];
        }
        int sum = 0;
        for (auto& [lam, c] : strata) sum += c;
        EXPECT_EQ(sum, static_cast<int>(pts.size()));
      }
}

TEST(Partition, SocleAndText) {
  EXPECT_EQ(socle_parts(Partition({3})), 1);
  EXPECT_EQ(socle_parts(Partition({2, 1})), 2);
  EXPECT_EQ(socle_parts(Partition({1, 1, 1})), 3);
  EXPECT_EQ(Partition({1, 3, 2}).to_string(), "(3,2,1)");
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_THROW(Partition({0}), AlgebraError);
}

TEST(Lift, Examples) {
  ModuleShape s{2, 2, 3};
  auto whole = lift_preimage(Submodule::whole(s), 3);
  EXPECT_EQ(whole, Submodule::whole({3, 2, 3}));
  auto tm = lift_preimage(power_of_maximal_ideal(s, 1), 3);
  EXPECT_EQ(tm.colength(), 2);
  EXPECT_TRUE(tm.contains(power_of_maximal_ideal({3, 2, 3}, 2)));
  EXPECT_THROW(lift_preimage(power_of_maximal_ideal(s, 1), 1), AlgebraError);
  EXPECT_THROW(lift_preimage(power_of_maximal_ideal(s, 1), 13), GuardError);
}

TEST(Lift, PreservesColengthAndInvariance) {
  for (const auto& a : quot_points(2, 2, 2))
    for (int to = 2; to <= 4; ++to) {
      auto b = lift_preimage(a, to);
      EXPECT_EQ(b.colength(), a.colength());
      EXPECT_TRUE(is_t_invariant(b));
      EXPECT_EQ(quotient_type(b), quotient_type(a));
    }
}

TEST(MEmbed, VertexFromFZero) {
  auto f0 = quot_points(0, 2, 2);
  ASSERT_EQ(f0.size(), 1u);
  auto img = m_embed(f0.front());
  EXPECT_EQ(img, power_of_maximal_ideal({2, 2, 2}, 1));
  EXPECT_EQ(quotient_type(img), Partition({1, 1}));
}

TEST(MEmbed, LandsInNonCyclicStratumInjectively) {
  for (std::uint32_t q : {2u, 3u}) {
    auto f1 = quot_points(1, 2, q);
    std::set<Submodule> images;
    for (const auto& a : f1) {
      auto b = m_embed(a);
      EXPECT_EQ(b.colength(), 3);
      EXPECT_GE(quotient_type(b).length(), 2u);
      images.insert(b);
    }
    EXPECT_EQ(images.size(), f1.size());
    if (q == 2) {
      std::set<Submodule> noncyclic;
      for (const auto& a : quot_points(3, 2, 2))
        if (quotient_type(a).length() >= 2) noncyclic.insert(a);
      EXPECT_EQ(images, noncyclic);
    }
  }
}

TEST(MEmbed, Errors) {
  EXPECT_THROW(m_embed(quot_points(1, 3, 2).front()), AlgebraError);
  EXPECT_THROW(m_embed(Submodule::whole({2, 2, 2})), AlgebraError);
}

TEST(Incidence, OneTwoTwo) {
  auto pairs = incidence_pairs(1, 2, 2);
  EXPECT_EQ(pairs.size(), 9u);
  auto fc = fiber_counts(pairs);
  for (auto& [a, c] : fc.over_lower) EXPECT_EQ(c, 3);
  std::multiset<int> upper;
  for (auto& [b, c] : fc.over_upper) upper.insert(c);
  EXPECT_EQ(upper, (std::multiset<int>{1, 1, 1, 1, 1, 1, 3}));
}

TEST(Incidence, FromFZero) {
  for (std::uint32_t q : {2u, 3u})
    for (int r = 2; r <= 3; ++r)
      EXPECT_EQ(static_cast<long>(incidence_pairs(0, r, q).size()), projective_count(q, r));
}

TEST(Incidence, BundleAndFiberLaws) {
  struct Case { int n, r; std::uint32_t q; };
  for (Case c : {Case{1, 2, 2}, Case{1, 2, 3}, Case{2, 2, 2}, Case{1, 3, 2}, Case{2, 2, 3}}) {
    auto pairs = incidence_pairs(c.n, c.r, c.q);
    auto fc = fiber_counts(pairs);
    EXPECT_EQ(fc.over_lower.size(), quot_points(c.n, c.r, c.q).size());
    EXPECT_EQ(fc.over_upper.size(), quot_points(c.n + 1, c.r, c.q).size());
    for (auto& [a, k] : fc.over_lower) EXPECT_EQ(k, projective_count(c.q, c.r));
    for (auto& [b, k] : fc.over_upper) EXPECT_EQ(k, projective_count(c.q, socle_parts(quotient_type(b))));
  }
}

TEST(Incidence, PositiveFibersContainEmbeddedPoints) {
  auto fc = fiber_counts(incidence_pairs(2, 2, 2));
  for (const auto& a : quot_points(1, 2, 2)) EXPECT_GT(fc.over_upper.at(m_embed(a)), 1);
}

}  // namespace
}  // namespace quotlab
