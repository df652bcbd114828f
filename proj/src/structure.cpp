#include "srings/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace srings {

namespace {

std::string sec_str(const Section& s) {
  return "(" + std::to_string(s.u) + "," + std::to_string(s.l) + ")";
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<Section> a_sections(const SRing& a) {
  const std::vector<int> lat = subgroup_lattice(a);
  std::vector<Section> out;
  for (int u : lat)
    for (int l : lat)
      if (l < u && u % l == 0) out.push_back(Section{a.n, u, l});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isolated(const SRing& a, const Section& s, const Section& t) {
  if (s.order() < 2 || !is_multiple(t, s)) return false;
  const int l1 = s.u, l0 = s.l, u1 = t.u, u0 = t.l;
  if (!satisfies_s_condition(a, u0, l0) || !satisfies_s_condition(a, u1, l1)) return false;
  const SRing whole = section_ring(a, Section{a.n, u1, l0});
  const SRing prod = tensor(section_ring(a, s), section_ring(a, Section{a.n, u0, l0}));
  return whole == prod;
}

std::optional<std::pair<Section, Section>> isolated_pair(const SRing& a, const ProjClass& c) {
  if (c.order < 2) return std::nullopt;
  if (!is_isolated(a, c.s_min, c.s_max)) return std::nullopt;
  return std::make_pair(c.s_min, c.s_max);
}

std::vector<ProjClass> proj_classes(const SRing& a) {
  const std::vector<Section> secs = a_sections(a);
  const int k = static_cast<int>(secs.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (is_multiple(secs[i], secs[j]) || is_multiple(secs[j], secs[i]))
        parent[find_root(parent, i)] = find_root(parent, j);

  std::vector<std::vector<Section>> groups(k);
  for (int i = 0; i < k; ++i) groups[find_root(parent, i)].push_back(secs[i]);

  std::vector<ProjClass> out;
  for (auto& members : groups) {
    if (members.empty()) continue;
    ProjClass c;
    c.sections = members;
    c.order = members[0].order();
    bool have_min = false, have_max = false;
    for (const auto& s : members) {
      bool is_min = true, is_max = true;
      for (const auto& t : members) {
        is_min = is_min && is_multiple(t, s);
        is_max = is_max && is_multiple(s, t);
      }
      if (is_min && !have_min) c.s_min = s, have_min = true;
      if (is_max && !have_max) c.s_max = s, have_max = true;
    }
    if (!have_min || !have_max)
      throw InternalError("projective class without extremal section, first member " +
                          sec_str(members[0]));
    const SRing base = section_ring(a, c.s_min);
    c.rank = base.rank();
    for (const auto& s : members) {
      if (s.order() != c.order)
        throw InternalError("projective class with unequal orders at " + sec_str(s));
      if (section_ring(a, s).rank() != c.rank)
        throw InternalError("projective class with unequal ranks at " + sec_str(s));
    }
    c.primitive = classify(base).primitive;
    c.isolated = isolated_pair(a, c).has_value();
    c.singular = c.isolated && c.rank == 2 && c.order > 2;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ProjClass& x, const ProjClass& y) {
    return std::pair(x.order, x.s_min) < std::pair(y.order, y.s_min);
  });
  return out;
}

std::vector<ProjClass> singular_classes(const SRing& a) {
  std::vector<ProjClass> out;
  for (auto& c : proj_classes(a))
    if (c.singular) out.push_back(std::move(c));
  return out;
}

SRing ext(const SRing& a, const ProjClass& c, const SRing& b) {
  if (!isolated_pair(a, c))
    throw Error("ext: class " + sec_str(c.s_min) + " is not isolated");
  const int n = a.n;
  const int l1 = c.s_min.u, l0 = c.s_min.l, u1 = c.s_max.u, u0 = c.s_max.l;
  if (b.n != l1 / l0)
    throw Error("ext: ring has modulus " + std::to_string(b.n) + ", section order is " +
                std::to_string(l1 / l0));
  if (!refines(b, section_ring(a, c.s_min)))
    throw Error("ext: ring does not refine the section ring of " + sec_str(c.s_min));

  const SRing t = tensor(b, section_ring(a, Section{n, u0, l0}));
  const SRing a1 = generalized_wreath(section_ring(a, Section{n, u0, 1}), t, Section{u1, u0, l0});
  const SRing a2 = generalized_wreath(t, section_ring(a, Section{n, n, l1}),
                                      Section{n / l0, u1 / l0, l1 / l0});
  return generalized_wreath(a1, a2, Section{n, u1, l0});
}

PermGroup gwr_group(int n, const Section& s_min, const Section& s_max, const PermGroup& m) {
  const int l1 = s_min.u, l0 = s_min.l, u0 = s_max.l;
  const int p = l1 / l0;
  if (!is_multiple(s_max, s_min))
    throw Error("gwr_group: " + sec_str(s_max) + " is not a multiple of " + sec_str(s_min));
  if (m.degree() != p)
    throw Error("gwr_group: group degree " + std::to_string(m.degree()) + " differs from |S| = " +
                std::to_string(p));
  if (orbits(p, m.generators()).size() != 1) throw Error("gwr_group: group is not transitive");

  // U0-coset index of every point of U1, with representatives i*(n/l1).
  std::vector<int> coset(n, -1);
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < u0; ++k) coset[(i * (n / l1) + k * (n / u0)) % n] = i;

  std::vector<Perm> gens;
  for (const auto& g : m.generators()) {
    Perm q = identity_perm(n);
    for (int x = 0; x < n; ++x) {
      if (coset[x] < 0) continue;
      const int i = coset[x];
      const int shift = mod(static_cast<long long>(g[i] - i) * (n / l1), n / l0);
      q[x] = (x + shift) % n;
    }
    gens.push_back(std::move(q));
  }
  if (l0 > 1) {
    for (int i = 0; i < p; ++i) {
      Perm q = identity_perm(n);
      for (int x = 0; x < n; ++x)
        if (coset[x] == i) q[x] = (x + n / l0) % n;
      gens.push_back(std::move(q));
    }
  }
  return PermGroup(n, std::move(gens));
}

PermGroup canonical_gwp(const PermGroup& du, const PermGroup& d0, const Section& sec) {
  const int n = sec.n, u = sec.u, l = sec.l;
  make_section(n, u, l);
  if (du.degree() != u || d0.degree() != n / l)
    throw Error("canonical_gwp: group degrees do not match the section");
  const int q = n / u;
  if (!is_block_system(d0.generators(), coset_blocks(n / l, u / l)))
    throw Error("canonical_gwp: the quotient group does not preserve the U/L-cosets");
  const PermGroup su = induced_on_section(du, Section{u, u, l});
  const PermGroup s0 = induced_on_section(d0, Section{n / l, u / l, 1});
  if (!same_group(su, s0))
    throw Error("canonical_gwp: section images differ (orders " + su.order().str() + " and " +
                s0.order().str() + ")");

  std::vector<Perm> gens;
  const PermGroup k = kernel_on_blocks(du, coset_blocks(u, l));
  for (const auto& g : k.generators())
    for (int c = 0; c < q; ++c) {
      Perm p = identity_perm(n);
      for (int y = 0; y < u; ++y) p[c + y * q] = c + g[y] * q;
      gens.push_back(std::move(p));
    }

  const SectionLifter lifter(du, Section{u, u, l});
  const int m = u / l;
  const int nl = n / l;
  for (const auto& g0 : d0.generators()) {
    Perm p(n);
    for (int c = 0; c < q; ++c) {
      const int c2 = g0[c] % q;
      Perm tau(m);
      for (int z = 0; z < m; ++z) tau[z] = mod(static_cast<long long>(g0[c + z * q]) - c2, nl) / q % m;
      const Perm d = lifter.lift(tau);
      for (int y = 0; y < u; ++y) p[c + y * q] = c2 + d[y] * q;
    }
    gens.push_back(std::move(p));
  }
  return PermGroup(n, std::move(gens));
}

namespace {

PermGroup resolve_rec(const SRing& a, const AutOptions& opt, int& depth) {
  const ProjClass* pick = nullptr;
  const std::vector<ProjClass> sing = singular_classes(a);
  for (const auto& c : sing)
    if (is_prime(c.order)) {
      pick = &c;  // already sorted by (order, s_min)
      break;
    }
  if (!pick) return aut_group(a, opt);
  ++depth;
  const SRing next = ext(a, *pick, full_group_ring(pick->order));
  const PermGroup inner = resolve_rec(next, opt, depth);
  return join(inner, gwr_group(a.n, pick->s_min, pick->s_max, holomorph(pick->order)));
}

}  // namespace

ResolveResult resolve(const SRing& a, const AutOptions& opt) {
  ResolveResult r;
  r.group = resolve_rec(a, opt, r.depth);
  if (a.n <= opt.max_degree) {
    r.verified = true;
    r.equivalent = two_equivalent(r.group, aut_group(a, opt));
  }
  return r;
}

}  // namespace srings
