#include <doctest.h>

#include "oracles.hpp"
#include "rankclass/error.hpp"
#include "rankclass/partition.hpp"

using namespace rankclass;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("construction strips trailing zeros and validates") {
  CHECK(P({3, 1, 0, 0}) == P({3, 1}));
  CHECK(P({}).empty());
  CHECK_THROWS_AS(P({1, 2}), Error);
  CHECK_THROWS_AS(P({2, -1}), Error);
  CHECK(P({4, 2, 2})[1] == 2);
  CHECK(P({4, 2, 2})[7] == 0);
  CHECK(P({4, 2, 2}).size() == 8);
}

TEST_CASE("order is by size, then lexicographic") {
  CHECK(P({1}) < P({1, 1}));
  CHECK(P({2, 2}) < P({3, 1}));
  CHECK(P({3, 1}) < P({4}));
  CHECK(P({1, 1, 1, 1}) < P({2, 1, 1}));
}

TEST_CASE("conjugate and complement") {
  CHECK(conjugate(P({4, 2, 1})) == P({3, 2, 1, 1}));
  CHECK(conjugate(P({})) == P({}));
  CHECK(complement(P({1}), {2, 2}) == P({2, 1}));
  CHECK(complement(P({}), {4, 4}) == P({4, 4, 4, 4}));
  CHECK(complement(P({2, 2}), {2, 2}) == P({}));
  CHECK_THROWS_AS(complement(P({3}), {2, 2}), Error);
  for (const Partition& p : partitions_in_box(5, 3, 4)) CHECK(complement(complement(p, {3, 4}), {3, 4}) == p);
}

TEST_CASE("dominance") {
  CHECK(dominates(P({3, 1}), P({2, 2})));
  CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
  CHECK_FALSE(dominates(P({3, 3}), P({4, 1, 1})));
  CHECK_FALSE(dominates(P({4, 1, 1}), P({3, 3})));
}

TEST_CASE("hook length formula against corner removal") {
  for (int n = 0; n <= 9; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(syt_count(p) == oracle::syt_by_corners(p));
  CHECK(syt_count(P({4, 4, 2, 2})) == 2640);
  CHECK(syt_count(P({4, 4, 4, 4})) == 24024);
  CHECK(syt_count(P({})) == 1);
}

TEST_CASE("Littlewood-Richardson coefficients against polynomial multiplication") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (const Partition& mu : partitions_of(a))
        for (const Partition& nu : partitions_of(b))
          for (const Partition& lambda : partitions_of(a + b))
            CHECK_MESSAGE(lr_coefficient(lambda, mu, nu) == oracle::lr_by_polynomials(lambda, mu, nu),
                          to_string(lambda) << " / " << to_string(mu) << " , " << to_string(nu));
  CHECK(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})) == 2);
}

TEST_CASE("lr_expand agrees with lr_coefficient and honours the box") {
  const auto full = lr_expand(P({2, 1}), P({2, 1}));
  Integer total = 0;
  for (const auto& [lambda, c] : full) {
    CHECK(c == lr_coefficient(lambda, P({2, 1}), P({2, 1})));
    total += c * syt_count(lambda);
  }
  // dim of Ind(S^{21} x S^{21}) = binom(6,3) * 2 * 2
  CHECK(total == 80);
  const auto boxed = lr_expand(P({2, 1}), P({2, 1}), RectangleContext{3, 3});
  for (const auto& [lambda, c] : boxed) CHECK(RectangleContext{3, 3}.fits(lambda));
  CHECK(boxed.count(P({4, 2})) == 0);
  CHECK(boxed.at(P({3, 2, 1})) == 2);
}

TEST_CASE("Murnaghan-Nakayama characters against power sums") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const Partition& mu : partitions_of(n))
        CHECK(mn_character(lambda, mu) == oracle::character_by_power_sums(lambda, mu));
  CHECK(mn_character(P({2, 1}), P({3})) == -1);
  CHECK_THROWS_AS(mn_character(P({2, 1}), P({2})), Error);
}

TEST_CASE("column orthogonality and centralizers") {
  for (int n = 1; n <= 7; ++n) {
    const auto ps = partitions_of(n);
    Rational sum = 0;
    for (const Partition& mu : ps) sum += Rational(1) / Rational(centralizer_order(mu));
    CHECK(sum == 1);
    for (const Partition& mu : ps) {
      Integer norm = 0;
      for (const Partition& lambda : ps) norm += mn_character(lambda, mu) * mn_character(lambda, mu);
      CHECK(norm == centralizer_order(mu));
    }
  }
}

TEST_CASE("partition enumeration") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
  const auto ps = partitions_of(6);
  CHECK(std::is_sorted(ps.begin(), ps.end()));
  // Gaussian binomial [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
  const std::size_t box[] = {1, 1, 2, 1, 1};
  for (int n = 0; n <= 4; ++n) CHECK(partitions_in_box(n, 2, 2).size() == box[n]);
  CHECK(partitions_in_box(5, 2, 2).empty());
}

TEST_CASE("text form") {
  CHECK(to_string(P({3, 1})) == "3,1");
  CHECK(to_string(P({})) == "-");
  CHECK(parse_partition("4,4,2,2") == P({4, 4, 2, 2}));
  CHECK(parse_partition("-") == P({}));
  for (const char* bad : {"", "1,", ",1", "1,2", "a", "2,0", "1 1"}) CHECK_THROWS_AS(parse_partition(bad), Error);
}

TEST_CASE("skew shapes validate containment") {
  CHECK(SkewShape(P({2, 2}), P({1})).size() == 3);
  CHECK_THROWS_AS(SkewShape(P({2}), P({1, 1})), Error);
}

}  // TEST_SUITE
