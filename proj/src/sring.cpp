#include "srings/sring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <omp.h>

namespace srings {

std::size_t SRingHash::operator()(const SRing& a) const {
  std::size_t h = std::hash<int>()(a.n);
  for (const auto& c : a.cells) {
    for (int x : c) h = h * 1000003u ^ static_cast<std::size_t>(x);
    h = h * 1000003u ^ 0x9e3779b9u;
  }
  return h;
}

std::string describe_cell(const std::vector<int>& cell) {
  std::ostringstream os;
  os << "{";
  std::size_t shown = std::min<std::size_t>(cell.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) os << (i ? "," : "") << cell[i];
  if (shown < cell.size()) os << ",... (" << cell.size() << " elements)";
  os << "}";
  return os.str();
}

SRing canonical_partition(int n, std::vector<std::vector<int>> partition) {
  check_modulus(n);
  SRing a;
  a.n = n;
  a.cell_of.assign(n, -1);
  for (auto& c : partition) {
    if (c.empty()) throw Error("empty cell in partition");
    for (int& x : c) {
      if (x < 0 || x >= n)
        throw Error("element " + std::to_string(x) + " outside Z_" + std::to_string(n));
    }
    std::sort(c.begin(), c.end());
  }
  std::sort(partition.begin(), partition.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (int x : partition[i]) {
      if (a.cell_of[x] != -1) throw Error("element " + std::to_string(x) + " occurs twice");
      a.cell_of[x] = static_cast<int>(i);
    }
  for (int x = 0; x < n; ++x)
    if (a.cell_of[x] == -1) throw Error("element " + std::to_string(x) + " not covered");
  a.cells = std::move(partition);
  return a;
}

namespace {

std::optional<std::string> basic_violation(const SRing& a) {
  if (a.cells[0].size() != 1) return "identity not singleton";
  const int n = a.n;
  for (const auto& c : a.cells) {
    int inv = a.cell_of[mod(-c[0], n)];
    bool ok = a.cells[inv].size() == c.size();
    for (int x : c) ok = ok && a.cell_of[mod(-x, n)] == inv;
    if (!ok) return "not inverse-closed: " + describe_cell(c);
  }
  return std::nullopt;
}

std::string constants_message(const SRing& a, int x, int y, int z) {
  return "structure constants not constant on cell (X=" + describe_cell(a.cells[x]) +
         ",Y=" + describe_cell(a.cells[y]) + ",cell=" + describe_cell(a.cells[z]) + ")";
}

struct Witness {
  int y = -1, z = -1;
  bool better(int yy, int zz) const { return y < 0 || yy < y || (yy == y && zz < z); }
};

// Least (Y, Z) for which the count |{(x,y) in X*Y : x+y=z}| varies over z in Z.
Witness first_violation_for(const SRing& a, int xi, std::vector<int>& ref,
                            std::vector<int>& cur) {
  const int n = a.n;
  const auto& X = a.cells[xi];
  Witness w;
  auto count_into = [&](int z, std::vector<int>& cnt, std::vector<int>& list) {
    for (int x : X) {
      int c = a.cell_of[mod(z - x, n)];
      if (cnt[c]++ == 0) list.push_back(c);
    }
  };
  std::vector<int> ref_list, cur_list;
  for (int zi = 0; zi < a.rank(); ++zi) {
    const auto& Z = a.cells[zi];
    ref_list.clear();
    count_into(Z[0], ref, ref_list);
    for (std::size_t k = 1; k < Z.size(); ++k) {
      cur_list.clear();
      count_into(Z[k], cur, cur_list);
      for (int c : cur_list)
        if (cur[c] != ref[c] && w.better(c, zi)) w = {c, zi};
      for (int c : ref_list)
        if (cur[c] != ref[c] && w.better(c, zi)) w = {c, zi};
      for (int c : cur_list) cur[c] = 0;
    }
    for (int c : ref_list) ref[c] = 0;
  }
  return w;
}

}  // namespace

std::optional<std::string> axiom_violation(const SRing& a) {
  if (auto v = basic_violation(a)) return v;
  const int r = a.rank();
  std::vector<Witness> found(r);
#pragma omp parallel
  {
    std::vector<int> ref(r, 0), cur(r, 0);
#pragma omp for schedule(dynamic)
    for (int xi = 0; xi < r; ++xi) found[xi] = first_violation_for(a, xi, ref, cur);
  }
  for (int xi = 0; xi < r; ++xi)
    if (found[xi].y >= 0) return constants_message(a, xi, found[xi].y, found[xi].z);
  return std::nullopt;
}

std::optional<std::string> axiom_violation_serial(const SRing& a) {
  if (auto v = basic_violation(a)) return v;
  const int n = a.n, r = a.rank();
  std::vector<int> conv(n);
  for (int xi = 0; xi < r; ++xi)
    for (int yi = 0; yi < r; ++yi) {
      std::fill(conv.begin(), conv.end(), 0);
      for (int x : a.cells[xi])
        for (int y : a.cells[yi]) ++conv[(x + y) % n];
      for (int zi = 0; zi < r; ++zi) {
        const auto& Z = a.cells[zi];
        for (int z : Z)
          if (conv[z] != conv[Z[0]]) return constants_message(a, xi, yi, zi);
      }
    }
  return std::nullopt;
}

SRing validate(int n, std::vector<std::vector<int>> partition) {
  SRing a = canonical_partition(n, std::move(partition));
  if (auto v = axiom_violation(a)) throw Error(*v);
  return a;
}

SRing full_group_ring(int n) {
  std::vector<std::vector<int>> p(n);
  for (int x = 0; x < n; ++x) p[x] = {x};
  return canonical_partition(n, std::move(p));
}

SRing rank2(int m) {
  check_modulus(m);
  std::vector<std::vector<int>> p{{0}};
  if (m > 1) {
    std::vector<int> rest(m - 1);
    std::iota(rest.begin(), rest.end(), 1);
    p.push_back(std::move(rest));
  }
  return canonical_partition(m, std::move(p));
}

SRing cyclotomic(int n, const std::vector<int>& gens) {
  return validate(n, unit_orbits(n, gens));
}

SRing tensor(const SRing& a1, const SRing& a2) {
  const int n1 = a1.n, n2 = a2.n;
  if (std::gcd(n1, n2) != 1)
    throw Error("tensor: moduli " + std::to_string(n1) + " and " + std::to_string(n2) +
                " are not coprime");
  check_modulus(static_cast<long long>(n1) * n2);
  const int n = n1 * n2;
  // (1,0) -> e1, (0,1) -> e2 with e1 + e2 = 1 the CRT idempotents.
  const int e1 = crt(1, n1, 0, n2), e2 = crt(0, n1, 1, n2);
  std::vector<std::vector<int>> p;
  p.reserve(a1.cells.size() * a2.cells.size());
  for (const auto& x1 : a1.cells)
    for (const auto& x2 : a2.cells) {
      std::vector<int> c;
      c.reserve(x1.size() * x2.size());
      for (int a : x1)
        for (int b : x2)
          c.push_back(static_cast<int>((static_cast<long long>(a) * e1 +
                                        static_cast<long long>(b) * e2) % n));
      p.push_back(std::move(c));
    }
  return validate(n, std::move(p));
}

bool in_lattice(const SRing& a, int d) {
  if (d < 1 || a.n % d != 0) return false;
  const int step = a.n / d;
  std::vector<char> seen(a.rank(), 0);
  for (int k = 0; k < d; ++k) {
    int c = a.cell_of[k * step];
    if (seen[c]) continue;
    seen[c] = 1;
    for (int x : a.cells[c])
      if (x % step != 0) return false;
  }
  return true;
}

std::vector<int> subgroup_lattice(const SRing& a) {
  // gcd of each cell with n: the cell lies in the subgroup of order d iff n/d divides it.
  std::vector<int> g(a.rank());
  for (int i = 0; i < a.rank(); ++i) {
    int v = a.n;
    for (int x : a.cells[i]) v = std::gcd(v, x);
    g[i] = v;
  }
  std::vector<int> out;
  for (int d : divisors(a.n)) {
    const int step = a.n / d;
    bool ok = true;
    for (int k = 0; k < d && ok; ++k) ok = g[a.cell_of[k * step]] % step == 0;
    if (ok) out.push_back(d);
  }
  return out;
}

SRing section_ring(const SRing& a, const Section& sec) {
  if (sec.n != a.n) throw Error("section modulus does not match the ring");
  make_section(sec.n, sec.u, sec.l);
  if (!in_lattice(a, sec.u) || !in_lattice(a, sec.l))
    throw Error("not an A-section: (" + std::to_string(sec.u) + "," + std::to_string(sec.l) +
                ") over Z_" + std::to_string(a.n));
  const int m = sec.order(), step = a.n / sec.u;
  std::vector<int> image_cell(m, -1);
  std::vector<std::vector<int>> p;
  std::vector<char> used(a.rank(), 0);
  for (int k = 0; k < sec.u; ++k) {
    int ci = a.cell_of[k * step];
    if (used[ci]) continue;
    used[ci] = 1;
    std::vector<int> img;
    for (int x : a.cells[ci]) img.push_back(section_project(sec, x));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (image_cell[img[0]] != -1) {
      if (p[image_cell[img[0]]] != img) throw InternalError("section images overlap");
      continue;
    }
    for (int y : img) {
      if (image_cell[y] != -1) throw InternalError("section images overlap");
      image_cell[y] = static_cast<int>(p.size());
    }
    p.push_back(std::move(img));
  }
  return canonical_partition(m, std::move(p));
}

SRing generalized_wreath(const SRing& a1, const SRing& a2, const Section& sec) {
  const Section s = make_section(sec.n, sec.u, sec.l);
  const int n = s.n, u = s.u, l = s.l;
  if (a1.n != u)
    throw Error("generalized_wreath: first ring must live on Z_" + std::to_string(u));
  if (a2.n != n / l)
    throw Error("generalized_wreath: second ring must live on Z_" + std::to_string(n / l));
  const SRing q1 = section_ring(a1, Section{u, u, l});
  const SRing r2 = section_ring(a2, Section{n / l, u / l, 1});
  if (!(q1 == r2)) {
    std::string msg = "generalized_wreath: section rings differ: ";
    for (const auto& c : q1.cells) msg += describe_cell(c);
    msg += " vs ";
    for (const auto& c : r2.cells) msg += describe_cell(c);
    throw Error(msg);
  }
  std::vector<std::vector<int>> p;
  const int step = n / u, m2 = n / l;
  for (const auto& c : a1.cells) {
    std::vector<int> e;
    for (int x : c) e.push_back(x * step);
    p.push_back(std::move(e));
  }
  for (const auto& c : a2.cells) {
    if (c[0] % step == 0) continue;  // inside the image of U
    std::vector<int> e;
    for (int y : c)
      for (int k = 0; k < l; ++k) e.push_back(y + k * m2);
    p.push_back(std::move(e));
  }
  return validate(n, std::move(p));
}

SRing multiply(const SRing& a, int m) {
  if (std::gcd(mod(m, a.n), a.n) != 1) throw Error("multiplier is not a unit");
  std::vector<std::vector<int>> p;
  for (const auto& c : a.cells) {
    std::vector<int> e;
    for (int x : c) e.push_back(static_cast<int>(static_cast<long long>(x) * mod(m, a.n) % a.n));
    p.push_back(std::move(e));
  }
  return canonical_partition(a.n, std::move(p));
}

int radical_of_set(int n, const std::vector<int>& x) {
  check_modulus(n);
  if (x.empty()) throw Error("radical of an empty set");
  std::vector<char> in(n, 0);
  for (int v : x) in[mod(v, n)] = 1;
  auto divs = divisors(n);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const int step = n / *it;
    bool ok = true;
    for (int v : x) ok = ok && in[mod(v + step, n)];
    if (ok) return *it;
  }
  return 1;
}

int radical(const SRing& a) {
  int r = 0;
  for (const auto& c : a.cells) {
    bool has_unit = false;
    for (int x : c) has_unit = has_unit || std::gcd(x, a.n) == 1;
    if (!has_unit) continue;
    int q = radical_of_set(a.n, c);
    if (r == 0) r = q;
    else if (r != q) throw InternalError("radical depends on the chosen basic set");
  }
  if (r == 0) throw InternalError("no basic set contains a unit");
  return r;
}

bool satisfies_s_condition(const SRing& a, int u, int l) {
  const int ustep = a.n / u;
  for (const auto& c : a.cells) {
    if (c[0] % ustep == 0) continue;
    if (radical_of_set(a.n, c) % l != 0) return false;
  }
  return true;
}

bool refines(const SRing& fine, const SRing& coarse) {
  if (fine.n != coarse.n) return false;
  for (const auto& c : fine.cells) {
    int k = coarse.cell_of[c[0]];
    for (int x : c)
      if (coarse.cell_of[x] != k) return false;
  }
  return true;
}

Classification classify(const SRing& a) {
  Classification out;
  out.rank = a.rank();
  const auto lat = subgroup_lattice(a);
  out.dense = lat.size() == divisors(a.n).size();
  out.primitive = lat.size() <= 2;
  out.trivial_radical = radical(a) == 1;
  std::vector<int> rad(a.rank());
  for (int i = 0; i < a.rank(); ++i) rad[i] = radical_of_set(a.n, a.cells[i]);
  for (int u : lat) {
    if (u == a.n) continue;
    for (int l : lat) {
      if (l == 1 || u % l != 0) continue;
      bool ok = true;
      for (int i = 0; i < a.rank() && ok; ++i)
        if (a.cells[i][0] % (a.n / u) != 0) ok = rad[i] % l == 0;
      if (ok) out.proper_gwp_sections.push_back(Section{a.n, u, l});
    }
  }
  return out;
}

bool is_proper_wreath(const SRing& a) {
  for (int h : subgroup_lattice(a))
    if (h != 1 && h != a.n && satisfies_s_condition(a, h, h)) return true;
  return false;
}

}  // namespace srings
