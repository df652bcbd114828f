#include "srings/aut.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace srings {

CayleyScheme cayley_scheme(const SRing& a) {
  return CayleyScheme{a.n, a.rank(), a.cell_of};
}

bool is_automorphism(const SRing& a, const Perm& f) {
  const int n = a.n;
  if (static_cast<int>(f.size()) != n) return false;
  const int* cell = a.cell_of.data();
  for (int g = 0; g < n; ++g) {
    const int fg = f[g];
    for (int h = 0; h < n; ++h) {
      int d1 = h - g, d2 = f[h] - fg;
      if (d1 < 0) d1 += n;
      if (d2 < 0) d2 += n;
      if (cell[d1] != cell[d2]) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Ordered partition of the points: cells are position ranges of lab.
struct Partition {
  std::vector<int> lab;     // position -> vertex
  std::vector<int> where;   // vertex -> position
  std::vector<int> cstart;  // position -> start of its cell
  std::vector<int> csize;   // cell start -> size
  int cells = 1;

  explicit Partition(int n) : lab(n), where(n), cstart(n, 0), csize(n, 0) {
    std::iota(lab.begin(), lab.end(), 0);
    std::iota(where.begin(), where.end(), 0);
    csize[0] = n;
  }
  bool discrete() const { return cells == static_cast<int>(lab.size()); }

  // Smallest non-singleton cell, leftmost on ties; -1 when discrete.
  int target() const {
    int best = -1;
    const int n = static_cast<int>(lab.size());
    for (int c = 0; c < n; c += csize[c])
      if (csize[c] > 1 && (best < 0 || csize[c] < csize[best])) best = c;
    return best;
  }
};

class Refiner {
 public:
  explicit Refiner(const SRing& a)
      : a_(a), n_(a.n), cnt_(a.rank(), 0), sig_(a.n), inq_(a.n, 0) {}

  // Splits cell `start` into {v} and the rest, then refines. Returns the trace.
  std::uint64_t individualize(Partition& p, int start, int v) {
    const int size = p.csize[start];
    const int pos = p.where[v];
    std::swap(p.lab[pos], p.lab[start]);
    p.where[p.lab[pos]] = pos;
    p.where[v] = start;
    p.csize[start] = 1;
    p.csize[start + 1] = size - 1;
    for (int i = start + 1; i < start + size; ++i) p.cstart[i] = start + 1;
    ++p.cells;
    queue_.assign(1, start);
    inq_[start] = 1;
    return refine(p, mix64(static_cast<std::uint64_t>(start) * 31 + size));
  }

 private:
  std::uint64_t signature(int v, int wstart, int wsize, const Partition& p) {
    const int* cell = a_.cell_of.data();
    if (wsize == 1) {
      int d = p.lab[wstart] - v;
      return mix64(static_cast<std::uint64_t>(cell[d < 0 ? d + n_ : d]) + 1);
    }
    touched_.clear();
    for (int i = wstart; i < wstart + wsize; ++i) {
      int d = p.lab[i] - v;
      int c = cell[d < 0 ? d + n_ : d];
      if (cnt_[c]++ == 0) touched_.push_back(c);
    }
    std::uint64_t h = 0;
    for (int c : touched_) {
      h += mix64((static_cast<std::uint64_t>(c) << 32) | static_cast<std::uint32_t>(cnt_[c]));
      cnt_[c] = 0;
    }
    return h;
  }

  std::uint64_t refine(Partition& p, std::uint64_t trace) {
    std::size_t head = 0;
    while (head < queue_.size() && !p.discrete()) {
      const int ws = queue_[head++];
      inq_[ws] = 0;
      const int wsize = p.csize[ws];
      trace = mix64(trace ^ (static_cast<std::uint64_t>(ws) << 20) ^ wsize);
      for (int c = 0; c < n_;) {
        const int size = p.csize[c];
        if (size > 1) split(p, c, ws, wsize, trace);
        c += size;
      }
    }
    for (std::size_t i = head; i < queue_.size(); ++i) inq_[queue_[i]] = 0;
    queue_.clear();
    return mix64(trace ^ static_cast<std::uint64_t>(p.cells));
  }

  void split(Partition& p, int c, int ws, int wsize, std::uint64_t& trace) {
    const int size = p.csize[c];
    bool uniform = true;
    for (int i = c; i < c + size; ++i) {
      sig_[p.lab[i]] = signature(p.lab[i], ws, wsize, p);
      uniform = uniform && sig_[p.lab[i]] == sig_[p.lab[c]];
    }
    if (uniform) return;
    auto first = p.lab.begin() + c;
    std::sort(first, first + size, [&](int x, int y) {
      return sig_[x] != sig_[y] ? sig_[x] < sig_[y] : x < y;
    });
    const bool parent_queued = inq_[c];
    std::vector<std::pair<int, int>> frags;  // (start, size)
    int fs = c;
    for (int i = c; i < c + size; ++i) {
      p.where[p.lab[i]] = i;
      if (i > c && sig_[p.lab[i]] != sig_[p.lab[i - 1]]) {
        frags.emplace_back(fs, i - fs);
        fs = i;
      }
    }
    frags.emplace_back(fs, c + size - fs);
    for (auto [s, z] : frags) {
      p.csize[s] = z;
      for (int i = s; i < s + z; ++i) p.cstart[i] = s;
      trace = mix64(trace ^ (static_cast<std::uint64_t>(s) << 32) ^ z ^ sig_[p.lab[s]]);
    }
    p.cells += static_cast<int>(frags.size()) - 1;
    std::size_t skip = frags.size();
    if (!parent_queued) {
      skip = 0;
      for (std::size_t k = 1; k < frags.size(); ++k)
        if (frags[k].second > frags[skip].second) skip = k;
    }
    for (std::size_t k = 0; k < frags.size(); ++k) {
      const int s = frags[k].first;
      if (k == skip || inq_[s]) continue;
      inq_[s] = 1;
      queue_.push_back(s);
    }
  }

  const SRing& a_;
  int n_;
  std::vector<int> cnt_;
  std::vector<int> touched_;
  std::vector<std::uint64_t> sig_;
  std::vector<char> inq_;
  std::vector<int> queue_;
};

struct PathLevel {
  Partition before;  // refined partition before this individualization
  int target = 0;
  int chosen = 0;
  std::uint64_t trace = 0;  // trace after individualizing `chosen`
  int cells_after = 0;
};

class AutSearch {
 public:
  AutSearch(const SRing& a, const AutOptions& opt)
      : a_(a), n_(a.n), opt_(opt), refiner_(a), parent_(a.n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  AutResult run() {
    Partition p(n_);
    // The translations are known automorphisms, so the first base point is 0.
    int start = 0;
    int v = 0;
    while (true) {
      PathLevel lv{p, start, v, 0, 0};
      lv.trace = refiner_.individualize(p, start, v);
      lv.cells_after = p.cells;
      count_node();
      path_.push_back(std::move(lv));
      if (p.discrete()) break;
      start = p.target();
      v = p.lab[start];
    }
    first_leaf_ = p.lab;

    // Orbit sizes are taken when a level is done: later (shallower) generators
    // no longer fix the earlier base points.
    std::vector<int> orbit_size(path_.size(), 1);
    for (std::size_t j = path_.size(); j-- > 1;) {
      const PathLevel& lv = path_[j];
      const int size = lv.before.csize[lv.target];
      for (int i = lv.target; i < lv.target + size; ++i) {
        const int w = lv.before.lab[i];
        if (find(w) == find(lv.chosen)) continue;
        Partition q = lv.before;
        const std::uint64_t t = refiner_.individualize(q, lv.target, w);
        count_node();
        if (t != lv.trace || q.cells != lv.cells_after) continue;
        explore(q, j + 1);
      }
      const int r = find(lv.chosen);
      for (int x = 0; x < n_; ++x) orbit_size[j] += x != lv.chosen && find(x) == r;
    }

    AutResult out;
    for (const auto& lv : path_) out.base.push_back(lv.chosen);
    std::vector<Perm> sgs;
    if (n_ > 1) sgs.push_back(translation(n_, 1));
    sgs.insert(sgs.end(), gens_.begin(), gens_.end());
    StabChain chain = chain_from_strong_generators(n_, out.base, sgs);
    BigInt expected = n_;
    for (std::size_t j = 1; j < path_.size(); ++j) expected *= orbit_size[j];
    if (chain.order() != expected)
      throw InternalError("automorphism chain order disagrees with the search orbits");
    out.order = chain.order();
    out.stabilizer_gens = gens_;
    out.group = PermGroup(n_, sgs, std::move(chain));
    out.nodes = nodes_;
    return out;
  }

 private:
  void count_node() {
    if (++nodes_ > opt_.node_budget)
      throw BudgetError("automorphism search exceeded the node budget (" +
                        std::to_string(opt_.node_budget) + " nodes)");
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // Searches below q (at path depth `depth`) for a leaf matching the first leaf.
  bool explore(const Partition& q, std::size_t depth) {
    if (q.discrete()) {
      Perm f(n_);
      for (int i = 0; i < n_; ++i) f[first_leaf_[i]] = q.lab[i];
      if (!is_automorphism(a_, f)) return false;
      gens_.push_back(f);
      for (int x = 0; x < n_; ++x) {
        int r1 = find(x), r2 = find(f[x]);
        if (r1 != r2) parent_[std::max(r1, r2)] = std::min(r1, r2);
      }
      return true;
    }
    if (depth >= path_.size()) return false;
    const PathLevel& lv = path_[depth];
    const int start = q.target();
    if (start != lv.target || q.csize[start] != lv.before.csize[lv.target]) return false;
    for (int i = start; i < start + q.csize[start]; ++i) {
      Partition child = q;
      const std::uint64_t t = refiner_.individualize(child, start, q.lab[i]);
      count_node();
      if (t != lv.trace || child.cells != lv.cells_after) continue;
      if (explore(child, depth + 1)) return true;
    }
    return false;
  }

  const SRing& a_;
  int n_;
  AutOptions opt_;
  Refiner refiner_;
  std::vector<int> parent_;
  std::vector<PathLevel> path_;
  std::vector<int> first_leaf_;
  std::vector<Perm> gens_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

AutResult aut_search(const SRing& a, const AutOptions& opt) {
  if (a.n > opt.max_degree)
    throw BudgetError("degree " + std::to_string(a.n) + " exceeds the automorphism search bound " +
                      std::to_string(opt.max_degree));
  if (a.n == 1) {
    AutResult r;
    r.group = PermGroup(1, {});
    r.base = {0};
    r.order = 1;
    return r;
  }
  return AutSearch(a, opt).run();
}

PermGroup aut_group(const SRing& a, const AutOptions& opt) { return aut_search(a, opt).group; }

AutOptions schurity_defaults() {
  AutOptions o;
  o.max_degree = kSchurityMaxDegree;
  return o;
}

SchurityReport schurity(const SRing& a, const AutOptions& opt) {
  AutResult r = aut_search(a, opt);
  SchurityReport out;
  out.aut_order = r.order;
  out.stabilizer_orbits = orbits(a.n, r.stabilizer_gens);
  out.schurian = out.stabilizer_orbits == a.cells;
  return out;
}

bool is_schurian(const SRing& a, const AutOptions& opt) { return schurity(a, opt).schurian; }

bool normalizes_translations(int n, const std::vector<Perm>& gens) {
  for (const auto& g : gens) {
    Perm gi = inverse(g);
    // g^-1 * t_1 * g as a map: x -> g(g^-1(x) + 1).
    const int shift = mod(g[(gi[0] + 1) % n], n);
    for (int x = 0; x < n; ++x)
      if (g[(gi[x] + 1) % n] != (x + shift) % n) return false;
  }
  return true;
}

bool is_normal(const SRing& a, const AutOptions& opt) {
  AutResult r = aut_search(a, opt);
  return normalizes_translations(a.n, r.stabilizer_gens);
}

std::size_t count_classes(const std::vector<int>& labels) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) k += labels[i] == static_cast<int>(i);
  return k;
}

NonschurityResult nonschurity_criterion(const SRing& a, const Section& sec, const AutOptions& opt,
                                        std::uint64_t intersect_threshold) {
  make_section(sec.n, sec.u, sec.l);
  if (sec.n != a.n) throw Error("section modulus does not match the ring");
  if (!in_lattice(a, sec.u) || !in_lattice(a, sec.l) || !satisfies_s_condition(a, sec.u, sec.l))
    throw Error("U/L-condition fails for section (" + std::to_string(sec.u) + "," +
                std::to_string(sec.l) + ")");
  const int n = a.n, u = sec.u, l = sec.l;
  const SRing au = section_ring(a, Section{n, u, 1});
  const SRing aq = section_ring(a, Section{n, n, l});
  const SRing as = section_ring(a, sec);
  const PermGroup gu = induced_on_section(aut_group(au, opt), Section{u, u, l});
  const PermGroup gq = induced_on_section(aut_group(aq, opt), Section{n / l, u / l, 1});
  const PermGroup meet = intersect(gu, gq, intersect_threshold);
  const PermGroup gs = aut_group(as, opt);
  NonschurityResult r;
  r.induced_from_u_order = gu.order();
  r.induced_from_quotient_order = gq.order();
  r.intersection_order = meet.order();
  r.section_aut_order = gs.order();
  const auto lm = two_orbits(meet), ls = two_orbits(gs);
  r.intersection_two_orbits = count_classes(lm);
  r.section_two_orbits = count_classes(ls);
  r.holds = lm != ls;
  return r;
}

}  // namespace srings
