#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srings/aut.hpp"
#include "srings/sring.hpp"

namespace srings {

struct CatalogEntry {
  SRing ring;
  std::string provenance;  // "rank2", "cyclotomic", "tensor" or "gwp"
};

struct Catalog {
  int n = 1;
  std::vector<CatalogEntry> entries;  // sorted by ring
};

constexpr int kBruteForceMax = 13;

// Exhaustive search over partitions; n <= kBruteForceMax.
std::vector<SRing> brute_force_srings(int n);

struct EnumerateOptions {
  std::size_t max_entries = 500000;  // per divisor
};

// All S-rings over Z_n, built from rank-2 and cyclotomic rings by tensor and
// generalized wreath products over every divisor.
Catalog enumerate_srings(int n, const EnumerateOptions& opt = {});

// True iff m*A is in the set for every ring A and every unit m.
bool closed_under_multipliers(const std::vector<SRing>& rings);

// Facts that must hold on every gwp section of a non-schurian ring when Omega(n) = 4.
struct SectionFacts {
  Section section;
  bool outer_orders_prime = false;   // |L| and |G/U|
  bool order_not_four = false;       // |U/L| != 4
  bool section_proper_wreath = false;
  bool factors_not_proper_wreath = false;
  bool factors_not_both_normal = false;

  bool all() const {
    return outer_orders_prime && order_not_four && section_proper_wreath &&
           factors_not_proper_wreath && factors_not_both_normal;
  }
};

struct SweepEntry {
  SRing ring;
  std::string provenance;
  BigInt aut_order;
  std::vector<Section> gwp_sections;
  std::vector<SectionFacts> facts;  // filled when Omega(n) = 4
};

struct SweepReport {
  int n = 1;
  std::size_t entries = 0;
  std::size_t schurian = 0;
  std::vector<SweepEntry> nonschurian;
};

struct SweepOptions {
  AutOptions aut = schurity_defaults();
  EnumerateOptions enumerate;
  int jobs = 0;  // 0: OpenMP default
};

SweepReport schurity_sweep(int n, const SweepOptions& opt = {});
// Same result, one thread, no OpenMP.
SweepReport schurity_sweep_serial(int n, const SweepOptions& opt = {});

struct Example12Params {
  int p = 5;
  int p3 = 11;
  int p4 = 13;
  int d = 4;
};

struct Example12 {
  Example12Params params;
  bool distinct = true;
  int m_gen = 1;   // generator of M, mod p^2*p3
  int m1_gen = 1;  // generator of M1, mod p*p4
  int m2_gen = 1;  // generator of M2, mod p*p4
  SRing a1, a2, ring;
  Section section;  // the section U/L the ring is a generalized wreath product over
  bool factor_sections_agree = false;  // both factor section rings equal Cyc(d,p) wr Cyc(d,p)
};

Example12 example12(const Example12Params& params, bool distinct);

}  // namespace srings
