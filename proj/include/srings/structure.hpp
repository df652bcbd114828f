#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srings/aut.hpp"
#include "srings/perm.hpp"
#include "srings/sring.hpp"

namespace srings {

// A class of projectively equivalent A-sections.
struct ProjClass {
  std::vector<Section> sections;  // sorted
  Section s_min;
  Section s_max;
  int order = 1;
  int rank = 1;
  bool primitive = false;
  bool isolated = false;
  bool singular = false;
};

// All A-sections (u, l) with l | u, both in the lattice.
std::vector<Section> a_sections(const SRing& a);
std::vector<ProjClass> proj_classes(const SRing& a);

// (s_min, s_max) when they form an isolated pair.
std::optional<std::pair<Section, Section>> isolated_pair(const SRing& a, const ProjClass& c);
// Checks the isolated-pair conditions for an arbitrary pair (s, t) with t a multiple of s.
bool is_isolated(const SRing& a, const Section& s, const Section& t);

std::vector<ProjClass> singular_classes(const SRing& a);

// Replaces the rank-2 section ring of the isolated class c by b (an S-ring over
// Z_{|S|} refining A_S).
SRing ext(const SRing& a, const ProjClass& c, const SRing& b);

// Automorphisms supported on U1 built from a transitive group m on S = s_min.
PermGroup gwr_group(int n, const Section& s_min, const Section& s_max, const PermGroup& m);

// Canonical generalized wreath product of du (on Z_u) by d0 (on Z_{n/l}).
PermGroup canonical_gwp(const PermGroup& du, const PermGroup& d0, const Section& sec);

struct ResolveResult {
  PermGroup group;
  bool verified = false;    // 2-equivalence with Aut(A) was checked
  bool equivalent = false;  // result of that check
  int depth = 0;            // number of resolved singular classes
};

ResolveResult resolve(const SRing& a, const AutOptions& opt = {});

}  // namespace srings
