#include "srings/perm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace srings {

namespace {
// Upper limit on stored transversal integers (trans plus inverses).
constexpr std::size_t kTransversalBudget = 200'000'000;
}  // namespace

Perm identity_perm(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x)) return false;
  return true;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm translation(int m, int k) {
  Perm p(m);
  for (int x = 0; x < m; ++x) p[x] = mod(static_cast<long long>(x) + k, m);
  return p;
}

Perm multiplication(int m, int a) {
  Perm p(m);
  for (int x = 0; x < m; ++x) p[x] = mod(static_cast<long long>(x) * a, m);
  return p;
}

std::optional<std::pair<int, int>> affine_form(const Perm& p) {
  const int m = static_cast<int>(p.size());
  if (m == 0) return std::nullopt;
  const int b = p[0];
  const int a = m > 1 ? mod(p[1] - b, m) : 0;
  if (std::gcd(a, m) != 1 && m > 1) return std::nullopt;
  for (int x = 0; x < m; ++x)
    if (p[x] != mod(static_cast<long long>(a) * x + b, m)) return std::nullopt;
  return std::make_pair(a, b);
}

BigInt factorial(int m) {
  BigInt r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

// ---------------------------------------------------------------- StabChain

std::vector<int> StabChain::base() const {
  std::vector<int> b;
  for (const auto& lv : levels_) b.push_back(lv.point);
  return b;
}

BigInt StabChain::order() const {
  BigInt r = 1;
  for (const auto& lv : levels_) r *= static_cast<unsigned>(lv.orbit.size());
  return r;
}

int StabChain::strip(Perm& g, std::size_t from, std::size_t to) const {
  to = std::min(to, levels_.size());
  for (std::size_t i = from; i < to; ++i) {
    const auto& lv = levels_[i];
    const int s = lv.slot[g[lv.point]];
    if (s < 0) return static_cast<int>(i);
    if (s == 0) continue;
    const Perm& it = lv.itrans[s];
    for (auto& v : g) v = it[v];
  }
  return static_cast<int>(to);
}

bool StabChain::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != degree_) return false;
  Perm h = g;
  return strip(h) == static_cast<int>(levels_.size()) && is_identity(h);
}

void StabChain::push_level(int point) {
  ChainLevel lv;
  lv.point = point;
  lv.orbit = {point};
  lv.slot.assign(degree_, -1);
  lv.slot[point] = 0;
  lv.trans = {identity_perm(degree_)};
  lv.itrans = {identity_perm(degree_)};
  levels_.push_back(std::move(lv));
}

std::size_t StabChain::transversal_entries() const {
  std::size_t t = 0;
  for (const auto& lv : levels_) t += lv.orbit.size();
  return t;
}

void StabChain::extend_orbit(ChainLevel& lv, std::size_t first_new_gen) {
  const std::size_t old = lv.orbit.size();
  auto visit = [&](std::size_t k, const Perm& s) {
    const int y = s[lv.orbit[k]];
    if (lv.slot[y] >= 0) return;
    lv.slot[y] = static_cast<int>(lv.orbit.size());
    lv.orbit.push_back(y);
    Perm t = compose(lv.trans[k], s);
    lv.itrans.push_back(inverse(t));
    lv.trans.push_back(std::move(t));
  };
  for (std::size_t k = 0; k < old; ++k)
    for (std::size_t j = first_new_gen; j < lv.gens.size(); ++j) visit(k, lv.gens[j]);
  for (std::size_t k = old; k < lv.orbit.size(); ++k)
    for (const auto& s : lv.gens) visit(k, s);
  if (2 * transversal_entries() * static_cast<std::size_t>(degree_) > kTransversalBudget)
    throw BudgetError("stabilizer chain exceeds the transversal memory budget");
}

void StabChain::add_generator(const Perm& g, std::size_t level) {
  for (std::size_t i = 0; i <= level && i < levels_.size(); ++i) {
    auto& lv = levels_[i];
    lv.gens.push_back(g);
    extend_orbit(lv, lv.gens.size() - 1);
  }
}

namespace {

int first_moved(const Perm& g) {
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g[x] != static_cast<int>(x)) return static_cast<int>(x);
  return -1;
}

// Sifts g into the chain, extending it if g is not yet a member.
bool sift_and_add(StabChain& c, Perm g, std::size_t from = 0) {
  int lvl = c.strip(g, from);
  if (lvl == static_cast<int>(c.levels().size())) {
    int b = first_moved(g);
    if (b < 0) return false;
    c.push_level(b);
  }
  c.add_generator(g, static_cast<std::size_t>(lvl));
  return true;
}

}  // namespace

BigInt default_order_bound(int degree, const std::vector<Perm>& gens) {
  bool affine = degree > 0;
  for (const auto& g : gens) affine = affine && affine_form(g).has_value();
  if (affine) return BigInt(degree) * euler_phi(degree);
  return factorial(degree);
}

StabChain schreier_sims(int degree, const std::vector<Perm>& gens, const ChainOptions& opt) {
  StabChain c(degree);
  for (int p : opt.base_prefix) c.push_level(p);
  std::vector<Perm> live;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw Error("generator is not a permutation of degree " + std::to_string(degree));
    if (!is_identity(g)) live.push_back(g);
  }
  if (live.empty()) return c;
  for (const auto& g : live) sift_and_add(c, g);
  auto done = [&] { return opt.order_bound && c.order() >= *opt.order_bound; };

  // Random phase: product replacement.
  std::mt19937_64 rng(opt.seed);
  std::vector<Perm> pool;
  const std::size_t slots = std::max<std::size_t>(10, live.size());
  for (std::size_t i = 0; i < slots; ++i) pool.push_back(live[i % live.size()]);
  Perm acc = identity_perm(degree);
  auto next = [&]() -> const Perm& {
    std::size_t i = rng() % slots, j = rng() % (slots - 1);
    if (j >= i) ++j;
    pool[i] = (rng() & 1) ? compose(pool[i], pool[j]) : compose(pool[j], pool[i]);
    acc = compose(acc, pool[i]);
    return acc;
  };
  for (int i = 0; i < 50; ++i) next();
  for (int streak = 0; streak < opt.random_streak && !done();) {
    if (sift_and_add(c, next())) streak = 0;
    else ++streak;
  }
  if (done()) {
    if (c.order() > *opt.order_bound) throw InternalError("group order exceeds its stated bound");
    return c;
  }

  // Deterministic phase: every Schreier generator must strip to the identity.
  std::vector<std::vector<std::size_t>> checked(c.levels().size());
  for (bool again = true; again;) {
    again = false;
    checked.resize(c.levels().size());
    for (std::size_t i = c.levels().size(); i-- > 0 && !again;) {
      auto& marks = checked[i];
      for (std::size_t k = 0; k < c.levels()[i].orbit.size() && !again; ++k) {
        if (marks.size() <= k) marks.resize(k + 1, 0);
        while (marks[k] < c.levels()[i].gens.size()) {
          const auto& lv = c.levels()[i];
          const Perm& s = lv.gens[marks[k]];
          Perm sg = compose(lv.trans[k], s);
          const Perm& back = lv.itrans[lv.slot[sg[lv.point]]];
          for (auto& v : sg) v = back[v];
          ++marks[k];
          if (sift_and_add(c, std::move(sg), i + 1)) {
            again = true;
            break;
          }
        }
      }
    }
    if (!again && done() && c.order() > *opt.order_bound)
      throw InternalError("group order exceeds its stated bound");
  }
  return c;
}

StabChain chain_from_strong_generators(int degree, const std::vector<int>& base,
                                       const std::vector<Perm>& sgs) {
  StabChain c(degree);
  for (int b : base) c.push_level(b);
  for (const auto& g : sgs) {
    if (is_identity(g)) continue;
    std::size_t lvl = 0;
    while (lvl < base.size() && g[base[lvl]] == base[lvl]) ++lvl;
    if (lvl == base.size()) throw InternalError("strong generator fixes the whole base");
    c.add_generator(g, lvl);
  }
  return c;
}

// ---------------------------------------------------------------- PermGroup

struct PermGroup::Lazy {
  std::once_flag once;
  StabChain chain;
};

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(int degree, std::vector<Perm> gens)
    : degree_(degree), lazy_(std::make_shared<Lazy>()) {
  if (degree < 1) throw Error("permutation group degree must be positive");
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw Error("generator is not a permutation of degree " + std::to_string(degree));
    if (!is_identity(g) && std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));
  }
}

PermGroup::PermGroup(int degree, std::vector<Perm> gens, StabChain chain)
    : PermGroup(degree, std::move(gens)) {
  std::call_once(lazy_->once, [&] { lazy_->chain = std::move(chain); });
}

const StabChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [&] {
    ChainOptions opt;
    opt.order_bound = default_order_bound(degree_, gens_);
    lazy_->chain = schreier_sims(degree_, gens_, opt);
  });
  return lazy_->chain;
}

BigInt PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& g) const { return chain().contains(g); }

PermGroup translations(int m) {
  if (m == 1) return PermGroup(1, {});
  return PermGroup(m, {translation(m, 1)});
}

PermGroup symmetric_group(int m) {
  std::vector<Perm> gens;
  if (m >= 2) {
    Perm t = identity_perm(m);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    gens.push_back(translation(m, 1));
  }
  return PermGroup(m, gens);
}

PermGroup holomorph(int m) {
  check_modulus(m);
  std::vector<Perm> gens;
  if (m > 1) gens.push_back(translation(m, 1));
  // Greedy generators of the unit group.
  std::vector<char> in(m, 0);
  std::vector<int> group{1 % m};
  in[1 % m] = 1;
  for (int a = 2; a < m; ++a) {
    if (std::gcd(a, m) != 1 || in[a]) continue;
    gens.push_back(multiplication(m, a));
    for (std::size_t i = 0; i < group.size(); ++i) {
      int y = static_cast<int>(static_cast<long long>(group[i]) * a % m);
      if (!in[y]) in[y] = 1, group.push_back(y);
    }
  }
  return PermGroup(m, gens);
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw Error("join: degree mismatch");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), gens);
}

bool is_subgroup(const PermGroup& sub, const PermGroup& g) {
  if (sub.degree() != g.degree()) return false;
  for (const auto& p : sub.generators())
    if (!g.contains(p)) return false;
  return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

std::vector<std::vector<int>> orbits(int degree, const std::vector<Perm>& gens) {
  std::vector<int> seen(degree, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<int> orb{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : gens)
        if (!seen[g[orb[i]]]) seen[g[orb[i]]] = 1, orb.push_back(g[orb[i]]);
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<int> two_orbits(const PermGroup& g) {
  const int m = g.degree();
  const std::size_t total = static_cast<std::size_t>(m) * m;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : g.generators())
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        int a = find(x * m + y), b = find(p[x] * m + p[y]);
        if (a == b) continue;
        if (a < b) parent[b] = a;
        else parent[a] = b;
      }
  std::vector<int> label(total);
  for (std::size_t i = 0; i < total; ++i) label[i] = find(static_cast<int>(i));
  return label;
}

bool two_equivalent(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw Error("two_equivalent: degree mismatch");
  return two_orbits(a) == two_orbits(b);
}

bool is_block_system(const std::vector<Perm>& gens, const std::vector<std::vector<int>>& blocks) {
  if (gens.empty()) return true;
  const int m = static_cast<int>(gens[0].size());
  std::vector<int> block_of(m, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) {
      if (x < 0 || x >= m || block_of[x] != -1) return false;
      block_of[x] = static_cast<int>(b);
    }
  if (std::count(block_of.begin(), block_of.end(), -1)) return false;
  for (const auto& g : gens)
    for (const auto& blk : blocks) {
      const int target = block_of[g[blk[0]]];
      for (int x : blk)
        if (block_of[g[x]] != target) return false;
    }
  return true;
}

namespace {

// Action on points followed by an action on extra points given by `extra`.
Perm combined(const Perm& p, const Perm& extra) {
  Perm r = p;
  const int m = static_cast<int>(p.size());
  for (int v : extra) r.push_back(m + v);
  return r;
}

Perm block_action(const Perm& p, const std::vector<std::vector<int>>& blocks,
                  const std::vector<int>& block_of) {
  Perm r(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) r[b] = block_of[p[blocks[b][0]]];
  return r;
}

}  // namespace

PermGroup kernel_on_blocks(const PermGroup& g, const std::vector<std::vector<int>>& blocks) {
  std::size_t covered = 0;
  for (const auto& b : blocks) covered += b.size();
  if (covered != static_cast<std::size_t>(g.degree()) || !is_block_system(g.generators(), blocks))
    throw Error("kernel_on_blocks: partition is not a block system of the group");
  const int m = g.degree(), k = static_cast<int>(blocks.size());
  std::vector<int> block_of(m);
  for (int b = 0; b < k; ++b)
    for (int x : blocks[b]) block_of[x] = b;
  std::vector<Perm> gens;
  for (const auto& p : g.generators()) gens.push_back(combined(p, block_action(p, blocks, block_of)));
  ChainOptions opt;
  for (int b = 0; b < k; ++b) opt.base_prefix.push_back(m + b);
  opt.order_bound = g.order();
  StabChain c = schreier_sims(m + k, gens, opt);
  std::vector<Perm> kernel;
  if (static_cast<int>(c.levels().size()) > k)
    for (const auto& s : c.levels()[k].gens) kernel.emplace_back(s.begin(), s.begin() + m);
  return PermGroup(m, kernel);
}

std::vector<std::vector<int>> coset_blocks(int m, int d) {
  std::vector<std::vector<int>> out(m / d);
  for (int c = 0; c < m / d; ++c)
    for (int k = 0; k < d; ++k) out[c].push_back(c + k * (m / d));
  return out;
}

namespace {

bool preserves_cosets(const Perm& p, int n, int d) {
  const int step = n / d;
  for (int x = 0; x < n; ++x)
    if (mod(p[(x + step) % n] - p[x], n) % step != 0) return false;
  return true;
}

void check_section_invariant(const PermGroup& g, const Section& sec) {
  if (g.degree() != sec.n) throw Error("section modulus does not match the group degree");
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!preserves_cosets(gens[i], sec.n, sec.u) || !preserves_cosets(gens[i], sec.n, sec.l))
      throw Error("section not invariant: generator " + std::to_string(i) +
                  " does not permute the cosets of the subgroups of orders " +
                  std::to_string(sec.u) + " and " + std::to_string(sec.l));
}

}  // namespace

Perm induced_perm(const Perm& p, const Section& sec) {
  const int m = sec.order(), step = sec.n / sec.u;
  Perm r(m);
  for (int z = 0; z < m; ++z) r[z] = section_project(sec, p[z * step]);
  return r;
}

PermGroup induced_on_section(const PermGroup& g, const Section& sec) {
  make_section(sec.n, sec.u, sec.l);
  check_section_invariant(g, sec);
  const int n = sec.n, m = sec.order(), idx = n / sec.u;
  std::vector<Perm> gens = g.generators();
  gens.push_back(translation(n, 1));
  std::set<Perm> out;
  for (const auto& s : gens)
    for (int c = 0; c < idx; ++c) {
      // t_c * s * t_{-c'} restricted to U, with c' the U-coset of s(c).
      const int c2 = s[c] % idx;
      Perm r(m);
      for (int z = 0; z < m; ++z) r[z] = section_project(sec, mod(s[(z * idx + c) % n] - c2, n));
      if (!is_identity(r)) out.insert(std::move(r));
    }
  return PermGroup(m, std::vector<Perm>(out.begin(), out.end()));
}

PermGroup intersect(const PermGroup& a, const PermGroup& b, std::uint64_t threshold) {
  if (a.degree() != b.degree()) throw Error("intersect: degree mismatch");
  const bool a_small = a.order() <= b.order();
  const PermGroup& small = a_small ? a : b;
  const PermGroup& large = a_small ? b : a;
  if (small.order() > threshold)
    throw BudgetError("both groups exceed enumeration threshold (" + std::to_string(threshold) + ")");
  const int m = a.degree();
  const auto& levels = small.chain().levels();
  std::vector<Perm> found;
  PermGroup h(m, {});
  // Every element is trans_{k-1} * ... * trans_0 for a unique choice per level.
  std::vector<Perm> prefix(levels.size() + 1);
  prefix[levels.size()] = identity_perm(m);
  std::vector<std::size_t> pick(levels.size(), 0);
  auto visit = [&](const Perm& e) {
    if (large.contains(e) && !h.contains(e)) {
      found.push_back(e);
      h = PermGroup(m, found);
    }
  };
  // Iterative odometer over transversal choices, deepest level varying slowest.
  const std::size_t k = levels.size();
  if (k == 0) return PermGroup(m, {});
  std::size_t i = k;
  while (true) {
    while (i > 0) {
      --i;
      prefix[i] = compose(prefix[i + 1], levels[i].trans[pick[i]]);
    }
    visit(prefix[0]);
    std::size_t j = 0;
    while (j < k && ++pick[j] == levels[j].orbit.size()) pick[j++] = 0;
    if (j == k) break;
    i = j + 1;
  }
  return h;
}

SectionLifter::SectionLifter(const PermGroup& g, const Section& sec) : degree_(g.degree()), sec_(sec) {
  make_section(sec.n, sec.u, sec.l);
  check_section_invariant(g, sec);
  const int n = sec.n, m = sec.order();
  std::vector<Perm> gens;
  for (const auto& p : g.generators()) {
    for (int x = 0; x < n; x += n / sec.u)
      if (p[x] % (n / sec.u) != 0)
        throw Error("section not invariant: the subgroup of order " + std::to_string(sec.u) +
                    " is not preserved");
    gens.push_back(combined(p, induced_perm(p, sec)));
  }
  ChainOptions opt;
  for (int y = 0; y < m; ++y) opt.base_prefix.push_back(n + y);
  opt.order_bound = g.order();
  chain_ = schreier_sims(n + m, gens, opt);
}

Perm SectionLifter::lift(const Perm& target) const {
  const int n = sec_.n, m = sec_.order();
  if (static_cast<int>(target.size()) != m || !is_permutation(target))
    throw Error("target is not a permutation of Z_" + std::to_string(m));
  Perm r = target;
  Perm acc = identity_perm(n + m);
  const auto& levels = chain_.levels();
  for (int i = 0; i < m; ++i) {
    const auto& lv = levels[i];
    const int s = lv.slot[n + r[lv.point - n]];
    if (s < 0) throw Error("target is not in the induced group");
    for (auto& v : r) v = lv.itrans[s][n + v] - n;
    acc = compose(lv.trans[s], acc);
  }
  if (!is_identity(r)) throw InternalError("section lift left a nontrivial residue");
  return Perm(acc.begin(), acc.begin() + n);
}

Perm preimage_with_induced(const PermGroup& g, const Section& sec, const Perm& target) {
  return SectionLifter(g, sec).lift(target);
}

}  // namespace srings
