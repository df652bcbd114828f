#pragma once

#include <cstdint>
#include <vector>

#include "srings/perm.hpp"
#include "srings/sring.hpp"

namespace srings {

// Edge coloring of Z_n x Z_n: (g, h) gets the index of the basic set holding h - g.
struct CayleyScheme {
  int n = 1;
  int colors = 1;
  std::vector<int> cell_of;

  int color(int g, int h) const { return cell_of[mod(static_cast<long long>(h) - g, n)]; }
};

CayleyScheme cayley_scheme(const SRing& a);

struct AutOptions {
  int max_degree = 5000;
  std::uint64_t node_budget = 2'000'000;
};

// Default degree bound for schurity tests; larger rings need an explicit raise.
constexpr int kSchurityMaxDegree = 2000;

struct AutResult {
  PermGroup group;                    // translations plus the stabilizer of 0
  std::vector<Perm> stabilizer_gens;  // generators of the stabilizer of 0
  std::vector<int> base;              // starts with 0
  BigInt order;
  std::uint64_t nodes = 0;
};

bool is_automorphism(const SRing& a, const Perm& f);
AutResult aut_search(const SRing& a, const AutOptions& opt = {});
PermGroup aut_group(const SRing& a, const AutOptions& opt = {});

struct SchurityReport {
  bool schurian = false;
  BigInt aut_order;
  std::vector<std::vector<int>> stabilizer_orbits;
};

AutOptions schurity_defaults();
SchurityReport schurity(const SRing& a, const AutOptions& opt = schurity_defaults());
bool is_schurian(const SRing& a, const AutOptions& opt = schurity_defaults());
bool is_normal(const SRing& a, const AutOptions& opt = {});
bool normalizes_translations(int n, const std::vector<Perm>& gens);

struct NonschurityResult {
  bool holds = false;  // true certifies that the ring is not schurian
  BigInt induced_from_u_order;
  BigInt induced_from_quotient_order;
  BigInt intersection_order;
  BigInt section_aut_order;
  std::size_t intersection_two_orbits = 0;
  std::size_t section_two_orbits = 0;
};

// Compares Aut(A_U)^S cap Aut(A_{G/L})^S with Aut(A_S) on 2-orbits.
NonschurityResult nonschurity_criterion(const SRing& a, const Section& sec,
                                        const AutOptions& opt = {},
                                        std::uint64_t intersect_threshold = 1000000);

std::size_t count_classes(const std::vector<int>& labels);

}  // namespace srings
