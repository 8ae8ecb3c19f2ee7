#include <algorithm>

#include "doctest.h"
#include "oracle_support.hpp"
#include "walkarea/compositions.hpp"

using namespace walkarea;

namespace {

std::vector<std::vector<int>> listed(int n, int g) {
  std::vector<std::vector<int>> out;
  for (const auto& c : g_compositions(n, g)) out.push_back(c.parts());
  return out;
}

// c_g straight from the product-of-binomials definition.
Rational weight_oracle(const std::vector<int>& l, int g) {
  auto part = [&](int i) { return i < static_cast<int>(l.size()) ? l[i] : 0; };
  long top = -1;
  BigInt den = 1;
  for (int i = 0; i < g - 1; ++i) {
    top += part(i);
    den *= oracle::fact(part(i));
  }
  Rational w(oracle::fact(top), den);
  w.canonicalize();
  const int j = static_cast<int>(l.size());
  for (int i = 0; i + g - 1 < j; ++i) {
    long window = -1;
    for (int k = i; k <= i + g - 1; ++k) window += part(k);
    w *= oracle::choose(window, part(i + g - 1));
  }
  return w;
}

}  // namespace

TEST_CASE("small enumerations") {
  CHECK(listed(2, 2) == std::vector<std::vector<int>>{{1, 1}, {2}});
  CHECK(listed(2, 3) == std::vector<std::vector<int>>{{1, 0, 1}, {1, 1}, {2}});
  CHECK(listed(3, 3).size() == 9);
}

TEST_CASE("generator matches brute force in lexicographic order") {
  for (int g = 2; g <= 4; ++g) {
    for (int n = 1; n <= 7; ++n) {
      auto brute = oracle::brute_compositions(n, g);
      std::sort(brute.begin(), brute.end());
      CHECK(listed(n, g) == brute);
    }
  }
}

TEST_CASE("counts are g^(n-1)") {
  for (int g = 2; g <= 4; ++g) {
    long expect = 1;
    for (int n = 1; n <= 10; ++n) {
      long count = 0;
      GCompositions gen(n, g);
      while (gen.next()) ++count;
      CHECK(count == expect);
      expect *= g;
    }
  }
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(GCompositions(0, 2), std::domain_error);
  CHECK_THROWS_AS(GCompositions(3, 1), std::domain_error);
  CHECK_THROWS_AS(Composition({0, 1}, 3), std::domain_error);
  CHECK_THROWS_AS(Composition({1, 0, 0, 1}, 3), std::domain_error);
  CHECK_NOTHROW(Composition({1, 0, 0, 1}, 4));
}

TEST_CASE("weight examples") {
  CHECK(exclusion_weight(Composition({1}, 2)) == Rational(1));
  CHECK(exclusion_weight(Composition({2}, 2)) == Rational(1, 2));
  CHECK(exclusion_weight(Composition({1, 0, 1}, 3)) == Rational(1));
  CHECK(exclusion_weight(Composition({1}, 3)) == Rational(1));
}

TEST_CASE("weights agree with the definition and between forms") {
  for (int g = 2; g <= 4; ++g) {
    for (int n = 1; n <= 8; ++n) {
      for (const auto& c : g_compositions(n, g)) {
        const Rational w = exclusion_weight(c);
        CHECK(w > 0);
        CHECK(w == exclusion_weight_factorial_form(c));
        CHECK(w == weight_oracle(c.parts(), g));
      }
    }
  }
}

TEST_CASE("weight sums") {
  for (int g = 2; g <= 4; ++g) {
    for (int n = 1; n <= 8; ++n) {
      Rational s = 0;
      for (const auto& c : g_compositions(n, g)) s += exclusion_weight(c);
      CHECK(s * (g * n) == Rational(oracle::choose(static_cast<long>(g) * n, n)));
    }
  }
}

TEST_CASE("reversal stays inside the set") {
  for (const auto& c : g_compositions(6, 3)) {
    CHECK_NOTHROW(Composition(c.reversed().parts(), 3));
  }
}
