#include "srings/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <omp.h>

namespace srings {

namespace {

// ---- brute force ----

struct BruteState {
  int n;
  std::vector<int> cell;  // element -> cell index, -1 unassigned
  std::vector<int> inv;   // cell -> inverse cell, -1 unknown
  int cells = 1;          // cell 0 is {0}
  std::vector<SRing>* out;
};

void brute_rec(BruteState& s, int x) {
  const int n = s.n;
  if (x == n) {
    for (int c = 0; c < s.cells; ++c)
      if (s.inv[c] < 0) return;
    std::vector<std::vector<int>> part(s.cells);
    for (int y = 0; y < n; ++y) part[s.cell[y]].push_back(y);
    SRing a = canonical_partition(n, std::move(part));
    if (!axiom_violation_serial(a)) s.out->push_back(std::move(a));
    return;
  }
  const int nx = (n - x) % n;
  for (int c = 1; c <= s.cells; ++c) {
    const bool fresh = c == s.cells;
    if (fresh) s.inv.push_back(-1);
    s.cell[x] = c;
    bool ok = true;
    int set_a = -1, set_b = -1;
    if (nx <= x) {
      const int d = s.cell[nx];
      if (s.inv[c] < 0 && s.inv[d] < 0) {
        s.inv[c] = d, s.inv[d] = c;
        set_a = c, set_b = d;
      } else {
        ok = s.inv[c] == d && s.inv[d] == c;
      }
    }
    if (ok) {
      if (fresh) ++s.cells;
      brute_rec(s, x + 1);
      if (fresh) --s.cells;
    }
    if (set_a >= 0) s.inv[set_a] = -1, s.inv[set_b] = -1;
    s.cell[x] = -1;
    if (fresh) s.inv.pop_back();
  }
}

// ---- unit subgroups ----

std::vector<int> closure(int m, std::vector<int> gens) {
  std::vector<char> in(m, 0);
  std::vector<int> el{1 % m};
  in[1 % m] = 1;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (int g : gens) {
      const int y = static_cast<int>(static_cast<long long>(el[i]) * g % m);
      if (!in[y]) in[y] = 1, el.push_back(y);
    }
  std::sort(el.begin(), el.end());
  return el;
}

std::vector<std::vector<int>> unit_subgroups(int m) {
  std::vector<int> units;
  for (int x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1) units.push_back(x);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{closure(m, {})};
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int g : units) {
      if (std::binary_search(queue[i].begin(), queue[i].end(), g)) continue;
      std::vector<int> gens = queue[i];
      gens.push_back(g);
      auto h = closure(m, std::move(gens));
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  return queue;
}

// ---- enumeration ----

using RingMap = std::map<SRing, std::string>;

class Enumerator {
 public:
  explicit Enumerator(const EnumerateOptions& opt) : opt_(opt) {}

  const RingMap& get(int m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    RingMap r = build(m);
    return memo_.emplace(m, std::move(r)).first->second;
  }

 private:
  void add(RingMap& r, int m, SRing a, const char* how) {
    r.emplace(std::move(a), how);
    if (r.size() > opt_.max_entries)
      throw BudgetError("catalog for n = " + std::to_string(m) + " exceeds " +
                        std::to_string(opt_.max_entries) + " entries");
  }

  RingMap build(int m) {
    RingMap r;
    if (m == 1) {
      add(r, m, full_group_ring(1), "cyclotomic");
      return r;
    }
    add(r, m, rank2(m), "rank2");
    for (const auto& k : unit_subgroups(m)) add(r, m, cyclotomic(m, k), "cyclotomic");

    for (int a : divisors(m)) {
      const int b = m / a;
      if (a <= 1 || a >= b || std::gcd(a, b) != 1) continue;
      const RingMap& ra = get(a);
      const RingMap& rb = get(b);
      for (const auto& x : ra)
        for (const auto& y : rb) add(r, m, tensor(x.first, y.first), "tensor");
    }

    // Proper generalized wreath products: 1 < l <= u < m.
    for (int u : divisors(m)) {
      if (u == m) continue;
      for (int l : divisors(u)) {
        if (l == 1) continue;
        const Section inner{u, u, l};
        const Section outer{m / l, u / l, 1};
        std::unordered_map<SRing, std::vector<const SRing*>, SRingHash> left;
        for (const auto& x : get(u))
          if (in_lattice(x.first, l)) left[section_ring(x.first, inner)].push_back(&x.first);
        for (const auto& y : get(m / l)) {
          if (!in_lattice(y.first, u / l)) continue;
          auto it = left.find(section_ring(y.first, outer));
          if (it == left.end()) continue;
          for (const SRing* x : it->second)
            add(r, m, generalized_wreath(*x, y.first, Section{m, u, l}), "gwp");
        }
      }
    }
    return r;
  }

  EnumerateOptions opt_;
  std::map<int, RingMap> memo_;
};

// ---- sweep ----

std::vector<Section> gwp_sections(const SRing& a) {
  return classify(a).proper_gwp_sections;
}

SectionFacts section_facts(const SRing& a, const Section& s, const AutOptions& opt) {
  SectionFacts f;
  f.section = s;
  const int n = a.n;
  f.outer_orders_prime = is_prime(s.l) && is_prime(n / s.u);
  f.order_not_four = s.order() != 4;
  f.section_proper_wreath = is_proper_wreath(section_ring(a, s));
  const SRing au = section_ring(a, Section{n, s.u, 1});
  const SRing aq = section_ring(a, Section{n, n, s.l});
  f.factors_not_proper_wreath = !is_proper_wreath(au) && !is_proper_wreath(aq);
  f.factors_not_both_normal = !(is_normal(au, opt) && is_normal(aq, opt));
  return f;
}

struct EntryResult {
  bool schurian = false;
  BigInt aut_order;
};

SweepReport assemble(int n, const Catalog& cat, const std::vector<EntryResult>& res,
                     const AutOptions& opt) {
  SweepReport rep;
  rep.n = n;
  rep.entries = cat.entries.size();
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (res[i].schurian) {
      ++rep.schurian;
      continue;
    }
    SweepEntry e;
    e.ring = cat.entries[i].ring;
    e.provenance = cat.entries[i].provenance;
    e.aut_order = res[i].aut_order;
    e.gwp_sections = gwp_sections(e.ring);
    if (omega(n) == 4)
      for (const auto& s : e.gwp_sections) e.facts.push_back(section_facts(e.ring, s, opt));
    rep.nonschurian.push_back(std::move(e));
  }
  return rep;
}

EntryResult test_entry(const SRing& a, const AutOptions& opt) {
  const SchurityReport r = schurity(a, opt);
  return EntryResult{r.schurian, r.aut_order};
}

// Least unit of the given multiplicative order.
int find_unit_of_order(int m, int ord) {
  for (int x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1 && multiplicative_order(x, m) == ord) return x;
  throw Error("no unit of order " + std::to_string(ord) + " mod " + std::to_string(m));
}

}  // namespace

std::vector<SRing> brute_force_srings(int n) {
  if (n < 1 || n > kBruteForceMax)
    throw BudgetError("brute force enumeration supports 1 <= n <= " +
                      std::to_string(kBruteForceMax) + ", got " + std::to_string(n));
  std::vector<SRing> out;
  BruteState s{n, std::vector<int>(n, -1), {0}, 1, &out};
  s.cell[0] = 0;
  brute_rec(s, 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Catalog enumerate_srings(int n, const EnumerateOptions& opt) {
  check_modulus(n);
  if (n < 1) throw Error("n must be positive");
  Enumerator e(opt);
  Catalog cat;
  cat.n = n;
  for (const auto& [ring, how] : e.get(n)) cat.entries.push_back(CatalogEntry{ring, how});
  return cat;
}

bool closed_under_multipliers(const std::vector<SRing>& rings) {
  std::unordered_set<SRing, SRingHash> set(rings.begin(), rings.end());
  for (const auto& a : rings)
    for (int m = 2; m < a.n; ++m)
      if (std::gcd(m, a.n) == 1 && !set.count(multiply(a, m))) return false;
  return true;
}

SweepReport schurity_sweep(int n, const SweepOptions& opt) {
  const Catalog cat = enumerate_srings(n, opt.enumerate);
  const long long count = static_cast<long long>(cat.entries.size());
  std::vector<EntryResult> res(cat.entries.size());
  std::vector<std::string> errors(cat.entries.size());
  std::vector<char> budget(cat.entries.size(), 0);
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < count; ++i) {
    try {
      res[i] = test_entry(cat.entries[i].ring, opt.aut);
    } catch (const BudgetError& e) {
      errors[i] = e.what();
      budget[i] = 1;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i].empty()) continue;
    if (budget[i]) throw BudgetError(errors[i]);
    throw Error(errors[i]);
  }
  return assemble(n, cat, res, opt.aut);
}

SweepReport schurity_sweep_serial(int n, const SweepOptions& opt) {
  const Catalog cat = enumerate_srings(n, opt.enumerate);
  std::vector<EntryResult> res;
  res.reserve(cat.entries.size());
  for (const auto& e : cat.entries) res.push_back(test_entry(e.ring, opt.aut));
  return assemble(n, cat, res, opt.aut);
}

Example12 example12(const Example12Params& prm, bool distinct) {
  const int p = prm.p, p3 = prm.p3, p4 = prm.p4, d = prm.d;
  for (int q : {p, p3, p4})
    if (!is_prime(q)) throw Error("example12: " + std::to_string(q) + " is not prime");
  if (p == p4) throw Error("example12: p and p4 must differ");
  if ((p3 - 1) % p != 0) throw Error("example12: p must divide p3 - 1");
  if (d < 1 || (p - 1) % d != 0 || (p4 - 1) % d != 0)
    throw Error("example12: d must divide p - 1 and p4 - 1");
  if (distinct && d < 3) throw Error("example12: distinct isomorphisms need d >= 3");
  const long long n = 1LL * p * p * p3 * p4;
  check_modulus(n);

  Example12 ex;
  ex.params = prm;
  ex.distinct = distinct;
  const int pp = p * p;
  // M: generated by (element of order p*d mod p^2, element of order p mod p3).
  const int a = find_unit_of_order(pp, p * d);
  const int b = find_unit_of_order(p3, p);
  ex.m_gen = crt(a, pp, b, p3);
  // M1, M2: graphs of two isomorphisms between the order-d subgroups mod p and mod p4.
  const int a1 = find_unit_of_order(p, d);
  const int c1 = find_unit_of_order(p4, d);
  int c2 = c1;
  if (distinct) {
    int k = 2;
    while (std::gcd(k, d) != 1 || k % d == 1) ++k;
    c2 = power_mod(c1, k, p4);
  }
  ex.m1_gen = crt(a1, p, c1, p4);
  ex.m2_gen = crt(a1, p, c2, p4);

  ex.a1 = cyclotomic(pp * p3, {ex.m_gen});
  const SRing b1 = cyclotomic(p * p4, {ex.m1_gen});
  const SRing b2 = cyclotomic(p * p4, {ex.m2_gen});
  ex.a2 = generalized_wreath(b1, b2, Section{pp * p4, p * p4, p});
  ex.section = Section{static_cast<int>(n), pp * p3, p3};
  ex.ring = generalized_wreath(ex.a1, ex.a2, ex.section);

  const SRing cd = cyclotomic(p, {a1});
  const SRing target = generalized_wreath(cd, cd, Section{pp, p, p});
  ex.factor_sections_agree = section_ring(ex.a1, Section{pp * p3, pp * p3, p3}) == target &&
                             section_ring(ex.a2, Section{pp * p4, pp, 1}) == target;
  return ex;
}

}  // namespace srings
