#include "srings/zn.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace srings {

namespace {
std::atomic<int> g_max_modulus{100000};
}

int max_modulus() { return g_max_modulus.load(); }

void set_max_modulus(int limit) {
  if (limit < 1) throw Error("modulus limit must be positive");
  g_max_modulus.store(limit);
}

void check_modulus(long long n) {
  if (n < 1) throw Error("modulus must be positive, got " + std::to_string(n));
  if (n > max_modulus())
    throw Error("modulus " + std::to_string(n) + " exceeds the limit " +
                std::to_string(max_modulus()));
}

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int omega(int n) {
  int k = 0;
  for (auto [p, e] : factorize(n)) k += e;
  return k;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int euler_phi(int n) {
  int r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

int power_mod(long long a, long long e, int n) {
  long long base = mod(a, n), r = 1 % n;
  while (e > 0) {
    if (e & 1) r = r * base % n;
    base = base * base % n;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int multiplicative_order(int a, int n) {
  if (std::gcd(a, n) != 1) throw Error("not a unit: " + std::to_string(a));
  if (n == 1) return 1;
  int k = 1;
  long long x = mod(a, n);
  while (x != 1) x = x * a % n, ++k;
  return k;
}

int crt(int a, int m1, int b, int m2) {
  if (std::gcd(m1, m2) != 1) throw Error("crt: moduli not coprime");
  long long m = static_cast<long long>(m1) * m2;
  for (long long x = mod(a, m1); x < m; x += m1)
    if (x % m2 == mod(b, m2)) return static_cast<int>(x);
  throw InternalError("crt: no solution");
}

Section make_section(int n, int u, int l) {
  check_modulus(n);
  if (u < 1 || l < 1 || n % u != 0 || u % l != 0)
    throw Error("invalid section (" + std::to_string(n) + "," + std::to_string(u) + "," +
                std::to_string(l) + "): need l | u | n");
  return Section{n, u, l};
}

std::vector<int> subgroup_elements(int n, int d) {
  check_modulus(n);
  if (d < 1 || n % d != 0) throw Error("not a divisor: " + std::to_string(d));
  std::vector<int> out(d);
  for (int k = 0; k < d; ++k) out[k] = k * (n / d);
  return out;
}

bool in_subgroup(int n, int d, int g) { return mod(g, n) % (n / d) == 0; }

int section_project(const Section& s, int g) {
  g = mod(g, s.n);
  int step = s.n / s.u;
  if (g % step != 0)
    throw Error("element " + std::to_string(g) + " is not in the subgroup of order " +
                std::to_string(s.u));
  return (g / step) % s.order();
}

bool is_multiple(const Section& t, const Section& s) {
  return s.l == std::gcd(t.l, s.u) && t.u == std::lcm(t.l, s.u);
}

std::vector<std::vector<int>> unit_orbits(int n, const std::vector<int>& gens) {
  check_modulus(n);
  for (int g : gens)
    if (std::gcd(mod(g, n), n) != 1)
      throw Error("not a unit mod " + std::to_string(n) + ": " + std::to_string(g));
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> orbits;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> orb{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (int g : gens) {
        int y = static_cast<int>(static_cast<long long>(orb[i]) * mod(g, n) % n);
        if (!seen[y]) seen[y] = 1, orb.push_back(y);
      }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

}  // namespace srings
