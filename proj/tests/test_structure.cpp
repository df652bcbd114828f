#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "srings/catalog.hpp"
#include "srings/structure.hpp"

using namespace srings;

namespace {

const SRing& z9() {
  static const SRing a = validate(9, {{0}, {3, 6}, {1, 2, 4, 5, 7, 8}});
  return a;
}

std::set<int> elems(int n, int d) {
  const auto v = subgroup_elements(n, d);
  return {v.begin(), v.end()};
}

// t is a multiple of s, decided on element sets: L0 = U0 meet L1, U1 = U0 + L1.
bool multiple_by_sets(int n, const Section& t, const Section& s) {
  const auto u0 = elems(n, t.l), l1 = elems(n, s.u);
  std::set<int> meet, sum;
  for (int x : u0) {
    if (l1.count(x)) meet.insert(x);
    for (int y : l1) sum.insert((x + y) % n);
  }
  return meet == elems(n, s.l) && sum == elems(n, t.u);
}

// Connected components of the "multiple" relation on nontrivial A-sections.
std::set<std::set<Section>> classes_oracle(const SRing& a) {
  std::vector<Section> secs;
  const auto lat = subgroup_lattice(a);
  for (int u : lat)
    for (int l : lat)
      if (u % l == 0 && u != l) secs.push_back(Section{a.n, u, l});
  std::set<std::set<Section>> out;
  std::set<Section> done;
  for (const auto& s : secs) {
    if (done.count(s)) continue;
    std::set<Section> comp{s};
    std::vector<Section> todo{s};
    while (!todo.empty()) {
      const Section x = todo.back();
      todo.pop_back();
      for (const auto& y : secs)
        if (!comp.count(y) && (multiple_by_sets(a.n, x, y) || multiple_by_sets(a.n, y, x))) {
          comp.insert(y);
          todo.push_back(y);
        }
    }
    done.insert(comp.begin(), comp.end());
    out.insert(comp);
  }
  return out;
}

std::set<Section> as_set(const std::vector<Section>& v) { return {v.begin(), v.end()}; }

std::set<std::set<Section>> class_sets(const std::vector<ProjClass>& cs) {
  std::set<std::set<Section>> out;
  for (const auto& c : cs) out.insert(as_set(c.sections));
  return out;
}

const std::vector<int>& test_orders() {
  static const std::vector<int> v{4, 8, 9, 12, 15, 16, 18, 20, 24, 25, 27, 30, 32, 36, 45, 48, 49, 60, 64};
  return v;
}

}  // namespace

TEST(Structure, ProjectiveClassExamples) {
  for (int p : {2, 3, 5, 7}) {
    const auto cs = proj_classes(full_group_ring(p));
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].sections, (std::vector<Section>{{p, p, 1}}));
    EXPECT_EQ(cs[0].rank, p);
  }
  const auto cs = proj_classes(z9());
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0].sections, (std::vector<Section>{{9, 3, 1}}));
  EXPECT_EQ(cs[1].sections, (std::vector<Section>{{9, 9, 3}}));
  EXPECT_TRUE(cs[0].singular);
  EXPECT_TRUE(cs[1].singular);
  EXPECT_EQ(cs[2].order, 9);
  EXPECT_FALSE(cs[2].singular);
  EXPECT_EQ(singular_classes(z9()).size(), 2u);

  const SRing c8 = cyclotomic(8, {3});
  EXPECT_EQ(class_sets(proj_classes(c8)), classes_oracle(c8));
  for (const auto& c : proj_classes(c8))
    if (c.s_min == Section{8, 4, 2}) EXPECT_EQ(c.sections, (std::vector<Section>{{8, 4, 2}}));
}

TEST(Structure, ProjectiveClassesMatchOracle) {
  for (int n : test_orders())
    for (const auto& e : enumerate_srings(n).entries) {
      const auto cs = proj_classes(e.ring);
      EXPECT_EQ(class_sets(cs), classes_oracle(e.ring)) << n;
      for (const auto& c : cs) {
        for (const auto& s : c.sections) {
          EXPECT_TRUE(multiple_by_sets(n, s, c.s_min));
          EXPECT_TRUE(multiple_by_sets(n, c.s_max, s));
          EXPECT_EQ(s.order(), c.order);
          EXPECT_EQ(section_ring(e.ring, s).rank(), c.rank);
        }
        EXPECT_EQ(c.singular, c.isolated && c.rank == 2 && c.order > 2);
      }
      for (std::size_t i = 1; i < cs.size(); ++i)
        EXPECT_LE(std::pair(cs[i - 1].order, cs[i - 1].s_min), std::pair(cs[i].order, cs[i].s_min));
    }
}

TEST(Structure, IsolatedPairOfFixture) {
  const auto cs = proj_classes(z9());
  const auto pr = isolated_pair(z9(), cs[0]);
  ASSERT_TRUE(pr.has_value());
  EXPECT_EQ(pr->first, (Section{9, 3, 1}));
  EXPECT_EQ(pr->second, (Section{9, 3, 1}));
  // rank 2 over Z_9 has no proper A-subgroups and a single class of order 9.
  const auto r = proj_classes(rank2(9));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].singular);
}

TEST(Structure, IsolatedClassHasExactlyOneIsolatedPair) {
  for (int n = 2; n <= 64; ++n)
    for (const auto& e : enumerate_srings(n).entries)
      for (const auto& c : proj_classes(e.ring)) {
        int found = 0;
        for (const auto& s : c.sections)
          for (const auto& t : c.sections)
            if (is_multiple(t, s) && is_isolated(e.ring, s, t)) {
              ++found;
              EXPECT_EQ(s, c.s_min) << n;
              EXPECT_EQ(t, c.s_max) << n;
            }
        EXPECT_EQ(found, c.isolated ? 1 : 0) << n << " class " << c.s_min.u << "/" << c.s_min.l;
      }
}

TEST(Structure, SectionsAvoidingPrimitiveIsolatedClass) {
  // A section with no subsection from C lies above L1 or below U0.
  for (int n : test_orders())
    for (const auto& e : enumerate_srings(n).entries) {
      const auto cs = proj_classes(e.ring);
      const auto secs = a_sections(e.ring);
      for (const auto& c : cs) {
        if (!c.primitive || !c.isolated) continue;
        const int l1 = c.s_min.u, u0 = c.s_max.l;
        const auto members = as_set(c.sections);
        for (const auto& s : secs) {
          bool has_sub = false;
          for (const auto& m : members)
            has_sub = has_sub || (m.l % s.l == 0 && s.u % m.u == 0);
          if (has_sub) continue;
          EXPECT_TRUE(s.l % l1 == 0 || u0 % s.u == 0) << n << " " << s.u << "/" << s.l;
        }
      }
    }
}

TEST(Structure, ExtOnFixture) {
  const auto cs = singular_classes(z9());
  const SRing a1 = ext(z9(), cs[0], full_group_ring(3));
  EXPECT_FALSE(axiom_violation_serial(a1).has_value());
  EXPECT_EQ(section_ring(a1, Section{9, 3, 1}), full_group_ring(3));
  EXPECT_EQ(subgroup_lattice(a1), subgroup_lattice(z9()));
  EXPECT_TRUE(refines(a1, z9()));

  const auto cs1 = singular_classes(a1);
  ASSERT_EQ(cs1.size(), 1u);
  EXPECT_EQ(cs1[0].s_min, (Section{9, 9, 3}));
  const SRing a2 = ext(a1, cs1[0], full_group_ring(3));
  EXPECT_EQ(a2, validate(9, {{0}, {3}, {6}, {1, 4, 7}, {2, 5, 8}}));
  EXPECT_TRUE(singular_classes(a2).empty());
}

TEST(Structure, ExtErrors) {
  const auto cs = singular_classes(z9());
  EXPECT_THROW(ext(z9(), cs[0], full_group_ring(4)), Error);
  const SRing a1 = ext(z9(), cs[0], full_group_ring(3));
  // (3,1) is no longer rank 2, so rank 2 over Z_3 does not refine it.
  for (const auto& c : proj_classes(a1))
    if (c.s_min == Section{9, 3, 1} && c.isolated) EXPECT_THROW(ext(a1, c, rank2(3)), Error);
  const SRing c8 = cyclotomic(8, {3});
  for (const auto& c : proj_classes(c8))
    if (!c.isolated) EXPECT_THROW(ext(c8, c, section_ring(c8, c.s_min)), Error);
}

TEST(Structure, ExtWithSectionRingIsIdentity) {
  for (int n : test_orders())
    for (const auto& e : enumerate_srings(n).entries)
      for (const auto& c : proj_classes(e.ring))
        if (c.isolated) EXPECT_EQ(ext(e.ring, c, section_ring(e.ring, c.s_min)), e.ring) << n;
}

TEST(Structure, ExtRemovesExactlyOneSingularClass) {
  for (int n : test_orders())
    for (const auto& e : enumerate_srings(n).entries) {
      const auto before = singular_classes(e.ring);
      for (const auto& c : before) {
        if (!is_prime(c.order)) continue;
        const SRing b = full_group_ring(c.order);
        const SRing x = ext(e.ring, c, b);
        EXPECT_FALSE(axiom_violation_serial(x).has_value());
        EXPECT_EQ(subgroup_lattice(x), subgroup_lattice(e.ring)) << n;
        EXPECT_TRUE(refines(x, e.ring));
        for (const auto& s : c.sections) EXPECT_EQ(section_ring(x, s), b);
        std::set<std::set<Section>> expect;
        for (const auto& d : before)
          if (d.s_min != c.s_min) expect.insert(as_set(d.sections));
        EXPECT_EQ(class_sets(singular_classes(x)), expect) << n;
      }
    }
}

TEST(Structure, GwrGroupOrderAndSupport) {
  // Class (5,1) in Z_15 with U0 = L0 = 1.
  const PermGroup h = gwr_group(15, Section{15, 5, 1}, Section{15, 5, 1}, holomorph(5));
  EXPECT_EQ(h.order(), 20);
  for (const auto& g : h.generators())
    for (int x = 0; x < 15; ++x)
      if (x % 3) EXPECT_EQ(g[x], x);

  for (const auto& m : {translations(3), symmetric_group(3)}) {
    const PermGroup g = gwr_group(9, Section{9, 9, 3}, Section{9, 9, 3}, m);
    EXPECT_EQ(g.order(), m.order() * BigInt(27));
  }
  EXPECT_THROW(gwr_group(9, Section{9, 9, 3}, Section{9, 9, 3}, PermGroup(3, {identity_perm(3)})), Error);
  EXPECT_THROW(gwr_group(9, Section{9, 9, 3}, Section{9, 9, 3}, symmetric_group(4)), Error);
}

TEST(Structure, GwrGroupOfSectionAutomorphismsPreservesRing) {
  for (int n : test_orders())
    for (const auto& e : enumerate_srings(n).entries)
      for (const auto& c : proj_classes(e.ring)) {
        if (!c.isolated) continue;
        const PermGroup m = aut_group(section_ring(e.ring, c.s_min));
        const PermGroup g = gwr_group(n, c.s_min, c.s_max, m);
        for (const auto& x : g.generators()) EXPECT_TRUE(is_automorphism(e.ring, x)) << n;
      }
}

TEST(Structure, CanonicalGwpExamples) {
  const PermGroup s2 = symmetric_group(2);
  EXPECT_EQ(canonical_gwp(s2, s2, Section{4, 2, 2}).order(), 8);
  const PermGroup s3 = symmetric_group(3);
  const PermGroup w = canonical_gwp(s3, s3, Section{9, 3, 3});
  EXPECT_EQ(w.order(), 1296);
  EXPECT_TRUE(same_group(w, aut_group(z9())));
  EXPECT_TRUE(same_group(canonical_gwp(translations(6), translations(12), Section{12, 6, 1}), translations(12)));
  // The kernel Z_2 is replicated on both cosets of U.
  EXPECT_EQ(canonical_gwp(translations(6), translations(6), Section{12, 6, 2}).order(), 24);
}

TEST(Structure, CanonicalGwpErrors) {
  // Section images are Z_3 and Sym(3).
  try {
    canonical_gwp(translations(9), holomorph(9), Section{27, 9, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("section images differ"), std::string::npos);
  }
  EXPECT_THROW(canonical_gwp(translations(4), symmetric_group(4), Section{8, 4, 2}), Error);
  EXPECT_THROW(canonical_gwp(translations(3), translations(3), Section{9, 9, 3}), Error);
}

TEST(Structure, CanonicalGwpProjectsAndRestricts) {
  for (int n : {8, 12, 16, 18, 24, 27, 36})
    for (const auto& e : enumerate_srings(n).entries)
      for (const auto& s : classify(e.ring).proper_gwp_sections) {
        const PermGroup g = aut_group(e.ring);
        const PermGroup du = induced_on_section(g, Section{n, s.u, 1});
        const PermGroup d0 = induced_on_section(g, Section{n, n, s.l});
        const PermGroup w = canonical_gwp(du, d0, s);
        EXPECT_TRUE(w.contains(translation(n, 1)));
        EXPECT_TRUE(same_group(induced_on_section(w, Section{n, s.u, 1}), du)) << n;
        EXPECT_TRUE(same_group(induced_on_section(w, Section{n, n, s.l}), d0)) << n;
        const PermGroup k = kernel_on_blocks(du, coset_blocks(s.u, s.l));
        BigInt expect = d0.order();
        for (int c = 0; c < n / s.u; ++c) expect *= k.order();
        EXPECT_EQ(w.order(), expect);
        for (const auto& x : g.generators()) EXPECT_TRUE(w.contains(x));
      }
}

TEST(Structure, ResolveFixture) {
  const ResolveResult r = resolve(z9());
  EXPECT_EQ(r.depth, 2);
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(r.equivalent);
  for (const auto& c : singular_classes(z9()))
    for (const auto& s : c.sections)
      EXPECT_TRUE(same_group(induced_on_section(r.group, s), holomorph(3)));
}

TEST(Structure, ResolveWithoutSingularClassesIsAut) {
  for (int n : {12, 16, 20, 30})
    for (const auto& e : enumerate_srings(n).entries) {
      bool prime_singular = false;
      for (const auto& c : singular_classes(e.ring)) prime_singular = prime_singular || is_prime(c.order);
      const ResolveResult r = resolve(e.ring);
      EXPECT_TRUE(r.verified);
      if (!prime_singular) {
        EXPECT_EQ(r.depth, 0);
        EXPECT_TRUE(same_group(r.group, aut_group(e.ring)));
      }
      if (is_schurian(e.ring)) EXPECT_TRUE(r.equivalent) << n;
    }
}
