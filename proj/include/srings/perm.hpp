#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srings/zn.hpp"

namespace srings {

using BigInt = boost::multiprecision::cpp_int;

// Image array. Products act on the right: (p*q)[x] = q[p[x]].
using Perm = std::vector<int>;

Perm identity_perm(int m);
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
bool is_permutation(const Perm& p);
Perm translation(int m, int k);
Perm multiplication(int m, int a);
// Some (a, b) with p(x) = a*x + b mod m, a a unit, if p is of that form.
std::optional<std::pair<int, int>> affine_form(const Perm& p);

BigInt factorial(int m);

struct ChainLevel {
  int point = 0;
  std::vector<Perm> gens;    // strong generators fixing all earlier base points
  std::vector<int> orbit;    // orbit of `point`, in discovery order
  std::vector<int> slot;     // point -> index in orbit, or -1
  std::vector<Perm> trans;   // trans[i] maps `point` to orbit[i]
  std::vector<Perm> itrans;  // inverses of trans
};

class StabChain {
 public:
  StabChain() = default;
  explicit StabChain(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<int> base() const;
  BigInt order() const;

  // Strips g through levels [from, to). Returns the residue and the level where
  // stripping stopped (== to when every level was passed).
  int strip(Perm& g, std::size_t from = 0, std::size_t to = SIZE_MAX) const;
  bool contains(const Perm& g) const;

  // Build helpers.
  void push_level(int point);
  // Adds g as a strong generator at levels 0..level (g fixes the earlier base points).
  void add_generator(const Perm& g, std::size_t level);
  std::size_t transversal_entries() const;

 private:
  void extend_orbit(ChainLevel& lv, std::size_t first_new_gen);

  int degree_ = 0;
  std::vector<ChainLevel> levels_;
};

struct ChainOptions {
  std::vector<int> base_prefix;  // these points come first in the base, in order
  std::optional<BigInt> order_bound;  // known upper bound; reaching it ends the build
  std::uint64_t seed = 0x5eed5eedULL;
  int random_streak = 40;  // consecutive trivial random sifts ending the random phase
};

// Random Schreier-Sims followed by a deterministic Schreier generator check
// (skipped when the order bound is reached).
StabChain schreier_sims(int degree, const std::vector<Perm>& gens, const ChainOptions& opt = {});

// Chain for a known base and strong generating set; no verification.
StabChain chain_from_strong_generators(int degree, const std::vector<int>& base,
                                       const std::vector<Perm>& sgs);

// Default order bound for a generating set: m*phi(m) when every generator is
// affine mod m, else m!.
BigInt default_order_bound(int degree, const std::vector<Perm>& gens);

class PermGroup {
 public:
  PermGroup();
  PermGroup(int degree, std::vector<Perm> gens);
  PermGroup(int degree, std::vector<Perm> gens, StabChain chain);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const;
  BigInt order() const;
  bool contains(const Perm& g) const;

 private:
  struct Lazy;
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::shared_ptr<Lazy> lazy_;
};

PermGroup translations(int m);
PermGroup symmetric_group(int m);
PermGroup holomorph(int m);
PermGroup join(const PermGroup& a, const PermGroup& b);
bool same_group(const PermGroup& a, const PermGroup& b);
bool is_subgroup(const PermGroup& sub, const PermGroup& g);

// Orbits of a set of permutations, each sorted, ordered by minimum.
std::vector<std::vector<int>> orbits(int degree, const std::vector<Perm>& gens);

// Label of the orbit of each ordered pair (x, y) at index x*m+y; the label is
// the least pair index in the orbit.
std::vector<int> two_orbits(const PermGroup& g);
bool two_equivalent(const PermGroup& a, const PermGroup& b);

// Blocks given as a partition of the points.
bool is_block_system(const std::vector<Perm>& gens, const std::vector<std::vector<int>>& blocks);
PermGroup kernel_on_blocks(const PermGroup& g, const std::vector<std::vector<int>>& blocks);

// Cosets of the subgroup of order d in Z_m, as blocks.
std::vector<std::vector<int>> coset_blocks(int m, int d);

// Group induced on U/L (identified with Z_{u/l}) by the setwise stabilizer of U.
// g acts on Z_n and must contain the translations.
PermGroup induced_on_section(const PermGroup& g, const Section& sec);
Perm induced_perm(const Perm& p, const Section& sec);

PermGroup intersect(const PermGroup& a, const PermGroup& b, std::uint64_t threshold = 1000000);

// Lifts permutations of Z_{u/l} (the L-cosets of U) to elements of g. The
// chain over points plus section points is built once.
class SectionLifter {
 public:
  SectionLifter(const PermGroup& g, const Section& sec);
  // Throws if target is not induced by any element of g.
  Perm lift(const Perm& target) const;

 private:
  int degree_;
  Section sec_;
  StabChain chain_;
};

// An element of g whose action on the L-cosets of U, identified with Z_{u/l},
// equals target. U must be g-invariant.
Perm preimage_with_induced(const PermGroup& g, const Section& sec, const Perm& target);

}  // namespace srings
