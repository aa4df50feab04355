#include <doctest.h>

#include "oracles.hpp"
#include "rankclass/error.hpp"
#include "rankclass/perm.hpp"

using namespace rankclass;

namespace {
AffinePermutation A(std::initializer_list<Value> w) { return AffinePermutation(std::vector<Value>(w)); }
}  // namespace

TEST_SUITE("perms") {

TEST_CASE("permutations") {
  const Permutation w = parse_permutation("31524");
  CHECK(w(1) == 3);
  CHECK(w.inversions() == 4);
  CHECK(to_string(w.inverse()) == "24153");
  CHECK(Permutation::identity(4).is_identity());
  CHECK(to_string(direct_sum(parse_permutation("21"), Permutation::identity(2))) == "2134");
  CHECK(to_string(direct_sum(parse_permutation("24153"), Permutation::identity(5))) == "2,4,1,5,3,6,7,8,9,10");
  CHECK(all_permutations(4).size() == 24);
  CHECK_THROWS_AS(Permutation({1, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
}

TEST_CASE("permutation text") {
  CHECK(to_string(parse_permutation("1,2,3,4,5,6,7,8,10,9")) == "1,2,3,4,5,6,7,8,10,9");
  for (const char* bad : {"", "12a", "113", "1,,2", "0"}) {
    try {
      parse_permutation(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
}

TEST_CASE("affine permutations validate windows") {
  CHECK_NOTHROW(A({6, 4, 5, 8, 7}));
  CHECK_THROWS_AS(A({1, 1}), Error);
  CHECK_THROWS_AS(A({1, 3}), Error);  // residues clash mod 2
  CHECK_THROWS_AS(A({2, 4}), Error);
  CHECK_THROWS_AS(A({}), Error);
  const AffinePermutation f = A({6, 4, 5, 8, 7});
  CHECK(f(0) == 2);
  CHECK(f(-4) == 1);
  CHECK(f(11) == 16);
  CHECK(av(f) == 3);
  CHECK(is_bounded(f));
  CHECK_FALSE(is_bounded(A({0, 3})));
}

TEST_CASE("length against a wide scan") {
  const std::vector<std::vector<Value>> windows = {
      {6, 4, 5, 8, 7}, {5, 2, 7, 4}, {3, 0, 5, 2}, {-5, 6, 8}, {1, 2, 3}, {0, 3}, {4, 2, 3, 1}, {10, -3, 3, 0}};
  for (const auto& w : windows) CHECK(length(AffinePermutation(w)) == oracle::affine_length_by_scan(AffinePermutation(w)));
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& w : all_permutations(n)) CHECK(length(AffinePermutation::embed(w)) == w.inversions());
}

TEST_CASE("northeast counts against direct enumeration") {
  const AffinePermutation f = A({6, 4, 5, 8, 7});
  for (Value i = -6; i <= 12; ++i)
    for (Value j = -6; j <= 18; ++j) {
      Value brute = 0;
      for (Value p = i - 200; p < i; ++p)
        if (f(p) > j) ++brute;
      CHECK(northeast_count(f, i, j) == brute);
    }
}

TEST_CASE("shifts, composition and inverses") {
  const AffinePermutation f = A({2, 5, 6, 7, 9, 8, 12, 11});
  CHECK(to_string(*restrict_to_window(tau_shift(f, -6, 3))) == "13265478");
  CHECK(tau_shift(f, 0, 0) == f);
  CHECK(tau_shift(AffinePermutation::identity(3), 1, -1) == AffinePermutation::identity(3));
  for (const auto& g : {A({6, 4, 5, 8, 7}), A({3, 0, 5, 2}), A({-5, 6, 8})}) {
    CHECK(compose(g, inverse(g)) == AffinePermutation::identity(g.period()));
    CHECK(compose(inverse(g), g) == AffinePermutation::identity(g.period()));
    CHECK(av(normalize(g)) == 0);
  }
  CHECK_THROWS_AS(compose(A({1, 2}), A({1, 2, 3})), Error);
}

TEST_CASE("simple reflections") {
  CHECK(to_string(simple_reflection(4, 0)) == "0,2,3,5;n=4");
  CHECK(to_string(simple_reflection(4, 2)) == "1,3,2,4;n=4");
  for (int i = 0; i < 4; ++i) {
    CHECK(length(simple_reflection(4, i)) == 1);
    CHECK(compose(simple_reflection(4, i), simple_reflection(4, i)) == AffinePermutation::identity(4));
  }
  CHECK_THROWS_AS(simple_reflection(4, 4), Error);
}

TEST_CASE("affine text") {
  CHECK(to_string(A({6, 4, 5, 8, 7})) == "6,4,5,8,7;n=5");
  CHECK(parse_affine("-1,4,1,6;n=4") == A({-1, 4, 1, 6}));
  for (const char* bad : {"1,2", "1,2;n=3", "1,1;n=2", ";n=0", "1,x;n=2"}) CHECK_THROWS_AS(parse_affine(bad), Error);
}

}  // TEST_SUITE
