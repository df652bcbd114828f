#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "srings/zn.hpp"

using namespace srings;

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Zn, SubgroupElements) {
  EXPECT_EQ(subgroup_elements(6, 3), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(subgroup_elements(6, 1), (std::vector<int>{0}));
  const auto big = subgroup_elements(3575, 275);
  ASSERT_EQ(big.size(), 275u);
  for (std::size_t k = 0; k < big.size(); ++k) EXPECT_EQ(big[k], 13 * static_cast<int>(k));
  EXPECT_THROW(subgroup_elements(6, 4), Error);
}

TEST(Zn, SubgroupMeetAndJoin) {
  for (int n : {12, 36, 60, 90}) {
    for (int d1 : divisors(n))
      for (int d2 : divisors(n)) {
        const auto a = as_set(subgroup_elements(n, d1));
        const auto b = as_set(subgroup_elements(n, d2));
        std::set<int> meet, sum;
        for (int x : a) {
          if (b.count(x)) meet.insert(x);
          for (int y : b) sum.insert((x + y) % n);
        }
        EXPECT_EQ(meet, as_set(subgroup_elements(n, std::gcd(d1, d2))));
        EXPECT_EQ(sum, as_set(subgroup_elements(n, std::lcm(d1, d2))));
      }
  }
}

TEST(Zn, SectionProject) {
  EXPECT_EQ(section_project(Section{8, 8, 2}, 5), 1);
  EXPECT_EQ(section_project(Section{8, 4, 1}, 6), 3);
  EXPECT_EQ(section_project(Section{9, 3, 1}, 6), 2);
  EXPECT_THROW(section_project(Section{9, 3, 1}, 4), Error);
}

TEST(Zn, SectionProjectIsHomomorphismWithKernelL) {
  const int n = 60;
  for (int u : divisors(n))
    for (int l : divisors(u)) {
      const Section s = make_section(n, u, l);
      const auto uel = subgroup_elements(n, u);
      std::set<int> kernel;
      for (int g : uel) {
        if (section_project(s, g) == 0) kernel.insert(g);
        for (int h : uel)
          EXPECT_EQ(section_project(s, (g + h) % n),
                    (section_project(s, g) + section_project(s, h)) % (u / l));
      }
      EXPECT_EQ(kernel, as_set(subgroup_elements(n, l)));
    }
}

TEST(Zn, IsMultiple) {
  EXPECT_TRUE(is_multiple(Section{12, 6, 3}, Section{12, 2, 1}));
  EXPECT_FALSE(is_multiple(Section{9, 9, 3}, Section{9, 3, 1}));
  for (int u : divisors(24))
    for (int l : divisors(u)) EXPECT_TRUE(is_multiple(Section{24, u, l}, Section{24, u, l}));
}

TEST(Zn, MakeSectionRejectsNonDivisors) {
  EXPECT_THROW(make_section(12, 5, 1), Error);
  EXPECT_THROW(make_section(12, 6, 4), Error);
  EXPECT_NO_THROW(make_section(12, 6, 3));
}

TEST(Zn, UnitOrbits) {
  EXPECT_EQ(unit_orbits(8, {3}),
            (std::vector<std::vector<int>>{{0}, {1, 3}, {2, 6}, {4}, {5, 7}}));
  EXPECT_EQ(unit_orbits(5, {2}), (std::vector<std::vector<int>>{{0}, {1, 2, 3, 4}}));
  const auto id = unit_orbits(7, {1});
  EXPECT_EQ(id.size(), 7u);
  EXPECT_THROW(unit_orbits(8, {2}), Error);
}

TEST(Zn, UnitOrbitsRefineUnderSubgroups) {
  const int n = 63;
  const auto fine = unit_orbits(n, {2});
  const auto coarse = unit_orbits(n, {2, 5});
  for (const auto& c : fine) {
    bool inside = false;
    for (const auto& d : coarse) inside = inside || std::includes(d.begin(), d.end(), c.begin(), c.end());
    EXPECT_TRUE(inside);
  }
}

TEST(Zn, Arithmetic) {
  for (int n = 1; n <= 200; ++n) {
    int phi = 0;
    for (int x = 1; x <= n; ++x) phi += std::gcd(x, n) == 1;
    EXPECT_EQ(euler_phi(n), phi) << n;
    std::vector<int> ds;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ds.push_back(d);
    EXPECT_EQ(divisors(n), ds);
    int prod = 1, om = 0;
    for (auto [p, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p, ++om;
    }
    EXPECT_EQ(prod, n);
    EXPECT_EQ(omega(n), om);
  }
  EXPECT_EQ(multiplicative_order(2, 25), 20);
  EXPECT_EQ(multiplicative_order(3, 11), 5);
  EXPECT_EQ(multiplicative_order(5, 13), 4);
  EXPECT_EQ(multiplicative_order(8, 13), 4);
  const int x = crt(2, 25, 3, 11);
  EXPECT_EQ(x % 25, 2);
  EXPECT_EQ(x % 11, 3);
  EXPECT_EQ(power_mod(5, 3, 13), 8);
}

TEST(Zn, ModulusLimit) {
  EXPECT_THROW(check_modulus(max_modulus() + 1), Error);
  EXPECT_THROW(check_modulus(0), Error);
  EXPECT_NO_THROW(check_modulus(3575));
}
