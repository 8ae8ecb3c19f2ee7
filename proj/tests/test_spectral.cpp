#include "doctest.h"
#include "oracle_support.hpp"
#include "walkarea/spectral.hpp"

using namespace walkarea;

TEST_CASE("spectral values") {
  CHECK(spectral_value({Family::Power, 2, Flux(1, 3)}, 1).to_rational() == Rational(3));
  for (long q : {2L, 3L, 5L, 7L}) {
    CHECK(spectral_value({Family::Power, 2, Flux(1, q)}, q).is_zero());
  }
  CHECK(spectral_value({Family::Product, 2, Flux(1, 2)}, 1).is_zero());
}

TEST_CASE("spectral values match floating point") {
  for (auto f : {Family::Power, Family::Product, Family::Mixed}) {
    for (int r = 2; r <= 4; r += 2) {
      for (long q : {3L, 5L, 8L}) {
        for (long k = 0; k < 2 * q; ++k) {
          const auto z = spectral_value({f, r, Flux(1, q)}, k);
          auto s = [&](long m) { return 2.0 * std::sin(std::numbers::pi * m / q); };
          double v = 1;
          if (f == Family::Power) v = std::pow(s(k), r);
          if (f == Family::Product) {
            for (int j = 0; j < r; ++j) v *= s(k + j);
          }
          if (f == Family::Mixed) v = std::pow(s(k), r / 2) * std::pow(s(k + 1), r / 2);
          CHECK(z.to_complex().real() == doctest::Approx(v).epsilon(1e-9));
          CHECK(std::abs(z.to_complex().imag()) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("trig cluster sum examples") {
  const std::vector<int> one{1};
  const std::vector<int> two{1, 1};
  const std::vector<int> zero{0};
  CHECK(trig_cluster_sum({Family::Power, 2, Flux(1, 3)}, one).to_rational() == Rational(2));
  CHECK(trig_cluster_sum({Family::Power, 2, Flux(1, 2)}, two).to_rational() == Rational(0));
  for (auto f : {Family::Power, Family::Product, Family::Mixed}) {
    CHECK(trig_cluster_sum({f, 2, Flux(2, 7)}, zero).to_rational() == Rational(1));
  }
}

TEST_CASE("trig sums are real and match floating point") {
  const std::vector<std::vector<int>> lists{{1}, {2}, {1, 1}, {1, 0, 1}, {2, 1}, {1, 2, 1}};
  for (auto f : {Family::Power, Family::Product, Family::Mixed}) {
    for (int r = 1; r <= 4; ++r) {
      if (f == Family::Mixed && r % 2 != 0) continue;
      for (const auto& parts : lists) {
        int total = 0;
        for (int l : parts) total += l;
        if ((r * total) % 2 != 0) continue;
        for (long q : {3L, 4L, 7L}) {
          const auto z = trig_cluster_sum({f, r, Flux(1, q)}, parts);
          CHECK(z == z.conj());
          CHECK(z.to_complex().real() ==
                doctest::Approx(oracle::numeric_trig_sum(f, r, 1, q, parts).real()).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(Flux(2, 4), std::domain_error);
  CHECK_THROWS_AS(Flux(0, 3), std::domain_error);
  CHECK_THROWS_AS((SpectralSpec{Family::Mixed, 3, Flux(1, 2)}.validate()), std::domain_error);
  CHECK_THROWS_AS((SpectralSpec{Family::Power, 0, Flux(1, 2)}.validate()), std::domain_error);
  CHECK(parse_family("product") == Family::Product);
  CHECK_THROWS_AS(parse_family("cosine"), std::invalid_argument);
  CHECK(spectral_order(3) == 12);
  CHECK(spectral_order(2) == 4);
}
