#include "doctest.h"
#include "oracle_support.hpp"
#include "walkarea/apery.hpp"

using namespace walkarea;

namespace {

const std::vector<std::pair<AperyId, std::vector<long>>> kPrinted{
    {AperyId::A081085, {4, 20, 112, 676, 4304, 28496}},
    {AperyId::A143583, {12, 164, 2352, 34596, 516912, 7806224}},
    {AperyId::A006077, {3, 9, 21, 9, -297, -2421}}};

}  // namespace

TEST_CASE("closed forms reproduce the listed terms") {
  for (const auto& [id, values] : kPrinted) {
    for (int n = 1; n <= 6; ++n) CHECK(apery_closed(id, n) == values[n - 1]);
  }
}

TEST_CASE("recurrence from two seeds") {
  for (const auto& [id, values] : kPrinted) {
    const auto ext = apery_recurrence_extend(id, BigInt(values[0]), BigInt(values[1]), 6);
    for (int n = 1; n <= 6; ++n) CHECK(ext[n - 1] == values[n - 1]);
  }
}

TEST_CASE("recurrence stays integral and matches closed forms to n = 50") {
  for (const auto& [id, values] : kPrinted) {
    const auto ext = apery_recurrence_extend(id, 50);
    REQUIRE(ext.size() == 50);
    for (int n = 1; n <= 50; ++n) CHECK(ext[n - 1] == apery_closed(id, n));
  }
}

TEST_CASE("wrong seeds break integrality") {
  CHECK_THROWS_AS(apery_recurrence_extend(AperyId::A081085, BigInt(4), BigInt(21), 6), std::logic_error);
}

TEST_CASE("cluster evaluation") {
  CHECK(apery_via_cluster(AperyId::A081085, 3) == 112);
  CHECK(apery_via_cluster(AperyId::A006077, 5) == -297);
  for (const auto& [id, values] : kPrinted) {
    const int top = id == AperyId::A006077 ? 7 : 8;
    for (int n = 1; n <= top; ++n) CHECK(apery_via_cluster(id, n) == apery_closed(id, n));
  }
}

TEST_CASE("r = 1 binding at even walk length") {
  CHECK(apery_r1_cluster(4) == 20);
  for (int n = 2; n <= 12; n += 2) CHECK(apery_r1_cluster(n) == apery_closed(AperyId::A081085, n / 2));
  // p/q = 1 gives (-1)^(n/2) C(n, n/2)^2
  for (int n = 2; n <= 10; n += 2) {
    const BigInt c = oracle::choose(n, n / 2);
    const auto z = cluster_value(ClusterSpec{2, Family::Power, 1}, n, Flux(1, 1));
    CHECK(z.to_rational() == Rational(c * c * ((n / 2) % 2 ? -1 : 1)));
  }
  CHECK_THROWS_AS(apery_r1_cluster(3), std::domain_error);
}

TEST_CASE("A006077 changes sign past the listed terms") {
  const auto ext = apery_recurrence_extend(AperyId::A006077, 30);
  int changes = 0;
  for (std::size_t i = 1; i < ext.size(); ++i) {
    if ((ext[i] < 0) != (ext[i - 1] < 0)) ++changes;
  }
  CHECK(changes >= 3);
}

TEST_CASE("names") {
  CHECK(parse_apery("A143583") == AperyId::A143583);
  CHECK_THROWS_AS(parse_apery("A000045"), std::invalid_argument);
}
