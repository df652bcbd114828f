#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srings {

// Invalid input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured search, enumeration or size budget was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Should be unreachable for valid objects; signals a bug or corrupted input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Upper bound on accepted moduli (default 100000).
int max_modulus();
void set_max_modulus(int limit);
void check_modulus(long long n);

int mod(long long a, int n);
std::vector<int> divisors(int n);
std::vector<std::pair<int, int>> factorize(int n);
int omega(int n);  // prime factors with multiplicity
bool is_prime(int n);
int euler_phi(int n);
int power_mod(long long a, long long e, int n);
int multiplicative_order(int a, int n);
// x with x = a mod m1 and x = b mod m2, for coprime m1, m2.
int crt(int a, int m1, int b, int m2);

// U/L inside Z_n, given by the orders u and l of U and L.
struct Section {
  int n = 1;
  int u = 1;
  int l = 1;

  int order() const { return u / l; }
  auto operator<=>(const Section&) const = default;
};

Section make_section(int n, int u, int l);

std::vector<int> subgroup_elements(int n, int d);
bool in_subgroup(int n, int d, int g);

// U -> Z_{u/l}, g -> (g / (n/u)) mod (u/l).
int section_project(const Section& s, int g);

// True iff t = U1/U0 is a multiple of s = L1/L0.
bool is_multiple(const Section& t, const Section& s);

// Orbits of <gens> acting by multiplication, each sorted, ordered by minimum.
std::vector<std::vector<int>> unit_orbits(int n, const std::vector<int>& gens);

}  // namespace srings
