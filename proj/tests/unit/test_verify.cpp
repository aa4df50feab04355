#include <doctest.h>

#include "rankclass/error.hpp"
#include "rankclass/stanley.hpp"
#include "rankclass/verify.hpp"

using namespace rankclass;

namespace {

SchubertClass given_class() {
  return parse_schubert("1*o[1,1,1,1] + 3*o[2,1,1] + 1*o[2,2] + 3*o[3,1] + 1*o[4]@Gr(4,8)");
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("counterexample replay") {
  const auto reports = replay_counterexample();
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) CHECK_MESSAGE(r.passed, r.name << ": " << r.actual);
  CHECK(reports[1].actual == "24024");
  CHECK(reports[2].actual == "21384");
  CHECK(reports[3].actual == "2640");
  CHECK(reports[4].actual == "1*o[2,2]@Gr(4,8)");
}

TEST_CASE("class bound") {
  const Permutation w = parse_permutation("21436587");
  const CheckReport r = check_class_bound(w, 4, 8, given_class());
  CHECK(r.passed);
  CHECK(r.actual == "1*o[2,2]@Gr(4,8)");

  const SchubertClass exact = phi(stanley(w), 4, 8);
  const CheckReport zero = check_class_bound(w, 4, 8, exact);
  CHECK(zero.passed);
  CHECK(zero.actual == "0@Gr(4,8)");

  const CheckReport bad = check_class_bound(w, 4, 8, exact + SchubertClass::basis(4, 8, Partition({4})));
  CHECK_FALSE(bad.passed);

  CHECK_THROWS_AS(check_class_bound(w, 4, 9, given_class()), Error);
}

TEST_CASE("suites") {
  CHECK(run_all(0).empty());
  const auto reports = run_all(3);
  CHECK(reports.size() == 24);
  CHECK(all_passed(reports));
  CHECK(run_all(3).front().name == reports.front().name);
  for (std::size_t i = 0; i < reports.size(); ++i) CHECK(run_all(3)[i].actual == reports[i].actual);
}

}  // TEST_SUITE
