#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srings/zn.hpp"

namespace srings {

// An S-ring over Z_n stored as its partition into basic sets. Cells are sorted
// ascending and ordered by their minimum, so {0} is always cells[0].
struct SRing {
  int n = 1;
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of;  // residue -> index into cells

  int rank() const { return static_cast<int>(cells.size()); }
  bool operator==(const SRing& o) const { return n == o.n && cells == o.cells; }
  bool operator<(const SRing& o) const {
    return n != o.n ? n < o.n : cells < o.cells;
  }
};

struct SRingHash {
  std::size_t operator()(const SRing& a) const;
};

// Canonical form of a partition of Z_n; checks only that it is a partition.
SRing canonical_partition(int n, std::vector<std::vector<int>> partition);

// Canonicalizes and checks the three S-ring axioms.
SRing validate(int n, std::vector<std::vector<int>> partition);

// First violated axiom, if any. The serial and parallel kernels report the same
// witness.
std::optional<std::string> axiom_violation(const SRing& a);
std::optional<std::string> axiom_violation_serial(const SRing& a);

SRing full_group_ring(int n);
SRing rank2(int m);
SRing cyclotomic(int n, const std::vector<int>& gens);
SRing tensor(const SRing& a1, const SRing& a2);
// a1 over Z_u, a2 over Z_{n/l}; the result satisfies the U/L-condition.
SRing generalized_wreath(const SRing& a1, const SRing& a2, const Section& sec);
SRing section_ring(const SRing& a, const Section& sec);
// Image of every cell under x -> m*x for a unit m.
SRing multiply(const SRing& a, int m);

int radical_of_set(int n, const std::vector<int>& x);
int radical(const SRing& a);
std::vector<int> subgroup_lattice(const SRing& a);
bool in_lattice(const SRing& a, int d);

// Every basic set outside U is a union of L-cosets.
bool satisfies_s_condition(const SRing& a, int u, int l);

// Every cell of `fine` lies inside a cell of `coarse`.
bool refines(const SRing& fine, const SRing& coarse);

struct Classification {
  int rank = 0;
  bool dense = false;
  bool primitive = false;
  bool trivial_radical = false;
  std::vector<Section> proper_gwp_sections;  // 1 < l <= u < n
};

Classification classify(const SRing& a);

// A = A_H wr A_{G/H} for some A-subgroup 1 < H < G.
bool is_proper_wreath(const SRing& a);

std::string describe_cell(const std::vector<int>& cell);

}  // namespace srings
