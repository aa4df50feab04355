// Acceptance run: one PASS/FAIL line per criterion with wall time.
//
//   rankclass_acceptance [--expected-failures 2,7]
//
// Exit status is 0 when the set of failing criteria equals the expected set
// (empty by default), so an unexpected pass is reported as loudly as an
// unexpected failure.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rankclass/rankclass.hpp"

using namespace rankclass;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail = what;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_ms;  // 0 = no limit
  std::function<Outcome()> body;
};

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

Outcome criterion1() {
  Outcome o;
  const AffinePermutation f = affine_of_rank_set(RankSet({{1, 1}, {3, 4}, {2, 5}}, 5));
  o.require(to_string(f) == "6,4,5,8,7;n=5", "got " + to_string(f));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const SchurExpansion affine = monomial_to_schur(affine_stanley(AffinePermutation({5, 2, 7, 4})));
  const SchurExpansion ordinary = stanley(parse_permutation("31524"));
  const SchubertClass sigma22 = SchubertClass::basis(2, 4, P({2, 2}));
  o.require(to_string(ordinary) == "1*s[2,2] + 1*s[3,1]", "F_31524 = " + to_string(ordinary));
  o.require(phi(ordinary, 2, 4) == sigma22, "phi(F_31524) = " + to_string(phi(ordinary, 2, 4)));
  o.require(phi(affine, 2, 4) == sigma22, "phi(affine) = " + to_string(phi(affine, 2, 4)));
  o.require(to_string(affine) == "1*s[2,2] + 1*s[3,1] - 1*s[4]",
            "affine Schur form = " + to_string(affine) + " (factorization count, equal to the brute-force oracle: " +
                (affine_stanley(AffinePermutation({5, 2, 7, 4})) ==
                         oracle::affine_stanley_by_products(AffinePermutation({5, 2, 7, 4}))
                     ? std::string("yes")
                     : std::string("no")) +
                "); the stated value has m[4] coefficient -1");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const RankSet m({{1, 3}, {3, 6}, {4, 5}}, 6);
  o.require(minimal_stretch(m) == 2, "minimal stretch " + std::to_string(minimal_stretch(m)));
  const RankSet stretched = stretch(m, 2);
  const RankSet want({{1, 5}, {3, 8}, {4, 7}}, 8);
  o.require(to_string(stretched) == to_string(want), "stretched " + to_string(stretched));
  const Permutation w = w_of_rank_set(m);
  o.require(to_string(w) == "13265478", "w_M = " + to_string(w));
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto reports = replay_counterexample();
  o.require(reports.size() == 5, "expected five checks");
  for (const auto& r : reports) o.require(r.passed, r.name + ": expected " + r.expected + ", got " + r.actual);

  // Recomputed here from scratch as well.
  std::vector<Cell> cells{{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  const Diagram d(cells, RectangleContext(4, 4));
  const SchurExpansion s = specht_schur(d);
  SchurExpansion regular;
  for (const Partition& lambda : partitions_of(4)) regular.add(lambda, oracle::syt_by_corners(lambda));
  o.require(s == regular, "diagonal expansion " + to_string(s));
  o.require(specht_bruteforce(d) == regular, "brute-force diagonal expansion differs");
  const Integer dual_dim = specht_dim(box_dual(s, {4, 4}));
  o.require(dual_dim == 24024, "dual dimension " + dual_dim.get_str());
  SchubertClass x = SchubertClass::unit(4, 8);
  for (int i = 0; i < 4; ++i) x = class_product(x, SchubertClass::basis(4, 8, P({1})));
  const SchubertClass given = x - SchubertClass::basis(4, 8, P({2, 2}));
  o.require(class_degree(given) == 21384, "degree " + class_degree(given).get_str());
  o.require(dual_dim - class_degree(given) == 2640 && oracle::syt_by_corners(P({4, 4, 2, 2})) == 2640,
            "discrepancy mismatch");
  o.require(phi(s, 4, 8) - given == SchubertClass::basis(4, 8, P({2, 2})), "difference is not sigma_22");
  return o;
}

Outcome criterion5() {
  Outcome o;
  long count = 0;
  for (int n = 1; n <= 5; ++n)
    for (const RankSet& m : all_rank_sets(n)) {
      ++count;
      const SchubertClass expected =
          m.empty() ? SchubertClass::unit(0, n) : phi(stanley(w_of_rank_set(m)), m.size(), n);
      const AffinePermutation f = affine_of_rank_set(m);
      const SchubertClass via_f = phi(monomial_to_schur(affine_stanley(f)), m.size(), n);
      o.require(expected == via_f, to_string(m) + ": " + to_string(expected) + " vs " + to_string(via_f));
      if (n <= 4)
        o.require(affine_stanley(f) == oracle::affine_stanley_by_products(f), "oracle disagrees on " + to_string(f));
    }
  o.require(count == 2 + 5 + 15 + 52 + 203, "rank set count " + std::to_string(count));
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (const RankSet& m : all_rank_sets(n)) {
      const int k = m.size();
      const AffinePermutation f = affine_of_rank_set(m);
      const Value len = length(f);
      o.require(k * (n - k) - dimension(m) == len, to_string(m));
      o.require(len == oracle::affine_length_by_scan(f), "length scan disagrees on " + to_string(f));
    }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int n = 1; n <= 5; ++n)
    for (const RankSet& m : all_rank_sets(n)) {
      const AffinePermutation f = affine_of_rank_set(m);
      for (int s = 1; s <= n; ++s)
        for (int r = 1; r <= s; ++r) {
          const Value i = s + 1, j = n + r - 1;
          Value brute = 0;
          for (Value p = i - 1; p >= i - 8 * n; --p)
            if (f(p) > j) ++brute;
          const Value ne = northeast_count(f, i, j);
          o.require(containment_count(m, {r, s}) == ne && ne == brute,
                    to_string(m) + " at [" + std::to_string(r) + "," + std::to_string(s) + "]");
        }
    }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& w : all_permutations(n)) {
      o.require(degeneration_check(w), "degeneration fails for " + to_string(w));
      const AffinePermutation f = affine_of_rank_set(rank_set_of_permutation(w));
      const AffinePermutation wid = AffinePermutation::embed(direct_sum(w, Permutation::identity(n)));
      o.require(normalize(f) == normalize(tau_shift(wid, 0, -n)), "f_M(w) formula fails for " + to_string(w));
      if (n <= 4)
        o.require(monomial_to_schur(affine_stanley(f)) == stanley(w), "affine Stanley differs for " + to_string(w));
    }
  return o;
}

Outcome criterion9() {
  Outcome o;
  long compared = 0;
  auto agree = [&](const Diagram& d, const SpechtFamily& family) {
    SchurExpansion rule;
    try {
      rule = specht_schur(d, family);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedDiagram) throw;
      return;
    }
    ++compared;
    o.require(rule == specht_bruteforce(d), "disagreement on " + to_string(d));
  };
  for (int size = 0; size <= 5; ++size)
    for (const Diagram& d : oracle::diagrams_in_box(3, 3, size)) agree(d, {});
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& w : all_permutations(n)) {
      const Diagram d = diagram_of_permutation(w);
      if (d.size() <= 5) agree(d, SpechtFamily::permutation(w));
    }
  for (int outer = 0; outer <= 8; ++outer)
    for (const Partition& lambda : partitions_of(outer))
      for (int inner = std::max(0, outer - 5); inner <= outer; ++inner)
        for (const Partition& mu : partitions_of(inner))
          if (lambda.contains(mu)) agree(skew_diagram(lambda, mu), SpechtFamily::skew());
  o.require(compared > 0, "nothing compared");

  for (int size = 1; size <= 5; ++size)
    for (const Diagram& d : oracle::diagrams_in_box(3, 3, size)) {
      const SchurExpansion s = specht_bruteforce(d);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          const SchurExpansion moved = specht_bruteforce(james_peel_move(d, i, j));
          for (const auto& [p, c] : moved.terms())
            o.require(c <= s.coefficient(p), "James-Peel increases " + to_string(p) + " on " + to_string(d));
        }
    }
  return o;
}

// The degree of X_D from defining equations needs Groebner bases; the
// substitute is exact class arithmetic against the given class.
Outcome criterion10() {
  Outcome o;
  bool degree = false, discrepancy = false;
  for (const CheckReport& r : replay_counterexample()) {
    if (r.name == "degree_of_given_class") degree = r.passed;
    if (r.name == "discrepancy") discrepancy = r.passed;
  }
  o.require(degree, "degree of the given class does not replay");
  o.require(discrepancy, "discrepancy does not replay");
  if (o.passed) o.detail = "equation-level degree not recomputed; class arithmetic substitute holds";
  return o;
}

std::set<int> parse_ids(const char* text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.insert(std::atoi(tok.c_str()));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expected-failures") == 0 && i + 1 < argc) {
      expected_failures = parse_ids(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--expected-failures 1,2,...]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "f_M correspondence", 1, criterion1},
      {2, "Stanley triple for M = {[1,1],[3,3]}", 1000, criterion2},
      {3, "stretching algorithm on {[1,3],[3,6],[4,5]}", 1000, criterion3},
      {4, "counterexample replay", 5000, criterion4},
      {5, "rank-set class equals positroid class, n <= 5", 300000, criterion5},
      {6, "codimension equals length, n <= 6", 120000, criterion6},
      {7, "interval containment equals northeast count, n <= 5", 0, criterion7},
      {8, "staircase degeneration, n <= 6", 0, criterion8},
      {9, "Specht oracle and James-Peel monotonicity", 600000, criterion9},
      {10, "degree of X_D via class arithmetic", 5000, criterion10},
  };

  std::set<int> failed;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && c.limit_ms > 0 && ms > c.limit_ms) {
      o.passed = false;
      o.detail = "over the time limit";
    }
    if (!o.passed) failed.insert(c.id);
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << std::fixed
              << std::setprecision(3) << ms << " ms";
    if (c.limit_ms > 0) std::cout << ", limit " << std::setprecision(0) << c.limit_ms << " ms";
    std::cout << "]";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << '\n';
  }

  if (failed != expected_failures) {
    std::cout << "unexpected outcome: failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
