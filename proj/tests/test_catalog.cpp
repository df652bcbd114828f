#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "srings/catalog.hpp"
#include "srings/structure.hpp"

using namespace srings;

namespace {

std::set<SRing> ring_set(const Catalog& c) {
  std::set<SRing> out;
  for (const auto& e : c.entries) out.insert(e.ring);
  return out;
}

}  // namespace

TEST(Catalog, BruteForceSmall) {
  EXPECT_EQ(brute_force_srings(1).size(), 1u);
  EXPECT_EQ(brute_force_srings(2).size(), 1u);
  EXPECT_EQ(brute_force_srings(4).size(), 3u);
  for (int p : {3, 5, 7, 11, 13})
    EXPECT_EQ(brute_force_srings(p).size(), divisors(p - 1).size()) << p;
  EXPECT_THROW(brute_force_srings(kBruteForceMax + 1), BudgetError);
}

TEST(Catalog, BruteForceOutputIsValid) {
  for (int n = 2; n <= 10; ++n)
    for (const auto& a : brute_force_srings(n)) EXPECT_TRUE(oracle::is_sring(n, a.cells)) << n;
}

TEST(Catalog, EnumerationMatchesBruteForce) {
  for (int n = 2; n <= kBruteForceMax; ++n) {
    const auto brute = brute_force_srings(n);
    const Catalog c = enumerate_srings(n);
    EXPECT_EQ(c.entries.size(), brute.size()) << n;
    EXPECT_EQ(ring_set(c), std::set<SRing>(brute.begin(), brute.end())) << n;
  }
}

TEST(Catalog, EntriesAreValidSortedAndDistinct) {
  for (int n : {16, 24, 27, 30, 36, 48}) {
    const Catalog c = enumerate_srings(n);
    EXPECT_EQ(c.n, n);
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      EXPECT_FALSE(axiom_violation_serial(c.entries[i].ring).has_value());
      if (i) EXPECT_LT(c.entries[i - 1].ring, c.entries[i].ring);
      const auto& pv = c.entries[i].provenance;
      EXPECT_TRUE(pv == "rank2" || pv == "cyclotomic" || pv == "tensor" || pv == "gwp") << pv;
    }
  }
}

TEST(Catalog, ContainsStandardRings) {
  const auto c = ring_set(enumerate_srings(9));
  EXPECT_TRUE(c.count(validate(9, {{0}, {3, 6}, {1, 2, 4, 5, 7, 8}})));
  EXPECT_TRUE(c.count(full_group_ring(9)));
  EXPECT_TRUE(c.count(rank2(9)));
  const auto c8 = ring_set(enumerate_srings(8));
  EXPECT_TRUE(c8.count(cyclotomic(8, {3})));
}

TEST(Catalog, ClosedUnderMultipliers) {
  for (int n : {12, 20, 25, 27, 32, 49}) {
    std::vector<SRing> rings;
    for (const auto& e : enumerate_srings(n).entries) rings.push_back(e.ring);
    EXPECT_TRUE(closed_under_multipliers(rings)) << n;
  }
  // Every circulant S-ring is fixed by each unit multiplier.
  for (const auto& e : enumerate_srings(45).entries)
    for (int m : {2, 4, 7, 8, 11, 44}) EXPECT_EQ(multiply(e.ring, m), e.ring);
  EXPECT_TRUE(closed_under_multipliers({example12(Example12Params{}, true).ring}));
  // A partition that is not an S-ring moves under x -> 2x.
  EXPECT_FALSE(closed_under_multipliers({canonical_partition(5, {{0}, {1}, {2, 3, 4}})}));
}

TEST(Catalog, Budget) {
  EnumerateOptions tiny;
  tiny.max_entries = 3;
  EXPECT_THROW(enumerate_srings(36, tiny), BudgetError);
  EXPECT_THROW(enumerate_srings(0), Error);
}

TEST(Catalog, SweepSmall) {
  const SweepReport r = schurity_sweep(4);
  EXPECT_EQ(r.entries, 3u);
  EXPECT_EQ(r.schurian, 3u);
  EXPECT_TRUE(r.nonschurian.empty());
}

TEST(Catalog, SweepSerialMatchesParallel) {
  for (int n : {16, 24, 36, 60}) {
    SweepOptions opt;
    opt.jobs = 4;
    const SweepReport a = schurity_sweep(n, opt);
    const SweepReport b = schurity_sweep_serial(n, opt);
    EXPECT_EQ(a.entries, b.entries);
    EXPECT_EQ(a.schurian, b.schurian);
    EXPECT_EQ(a.nonschurian.size(), b.nonschurian.size());
    EXPECT_EQ(a.entries, enumerate_srings(n).entries.size());
  }
}

TEST(Catalog, Example12) {
  const Example12 ex = example12(Example12Params{}, true);
  const int n = 3575;
  EXPECT_EQ(ex.ring.n, n);
  EXPECT_FALSE(axiom_violation(ex.ring).has_value());
  EXPECT_EQ(subgroup_lattice(ex.ring), (std::vector<int>{1, 5, 11, 25, 55, 143, 275, 715, 3575}));
  EXPECT_EQ(ex.section, (Section{n, 275, 11}));
  EXPECT_TRUE(ex.factor_sections_agree);
  EXPECT_EQ(multiplicative_order(ex.m_gen, 275), 20);
  EXPECT_EQ(multiplicative_order(ex.m1_gen, 65), 4);
  EXPECT_EQ(multiplicative_order(ex.m2_gen, 65), 4);
  EXPECT_NE(ex.m1_gen, ex.m2_gen);
  EXPECT_EQ(ex.m1_gen % 5, ex.m2_gen % 5);
  EXPECT_TRUE(satisfies_s_condition(ex.ring, 275, 11));
  EXPECT_EQ(section_ring(ex.ring, Section{n, 275, 1}), ex.a1);
  EXPECT_EQ(section_ring(ex.ring, Section{n, n, 11}), ex.a2);

  const Example12 same = example12(Example12Params{}, false);
  EXPECT_EQ(same.m1_gen, same.m2_gen);
  EXPECT_TRUE(same.factor_sections_agree);
  EXPECT_EQ(subgroup_lattice(same.ring), subgroup_lattice(ex.ring));
}

TEST(Catalog, Example12ParameterErrors) {
  EXPECT_THROW(example12(Example12Params{5, 11, 13, 3}, true), Error);  // 3 does not divide 4
  EXPECT_THROW(example12(Example12Params{5, 13, 11, 4}, true), Error);  // 5 does not divide 12
  EXPECT_THROW(example12(Example12Params{5, 11, 5, 4}, true), Error);
  EXPECT_THROW(example12(Example12Params{6, 11, 13, 4}, true), Error);
  EXPECT_THROW(example12(Example12Params{5, 11, 13, 2}, true), Error);
  EXPECT_NO_THROW(example12(Example12Params{5, 11, 13, 2}, false));
}
