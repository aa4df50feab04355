#include "rankclass/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "counterexample_data.hpp"
#include "rankclass/diagram.hpp"
#include "rankclass/error.hpp"
#include "rankclass/rankset.hpp"
#include "rankclass/specht.hpp"
#include "rankclass/stanley.hpp"

namespace rankclass {

namespace {

namespace cx = counterexample;

CheckReport compare(std::string name, std::string expected, std::string actual) {
  const bool ok = expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), ok};
}

Diagram diagonal(int size) {
  std::vector<Cell> cells;
  for (int i = 1; i <= size; ++i) cells.push_back({i, i});
  return Diagram(std::move(cells), RectangleContext(size, size));
}

SchubertClass given_class() {
  SchubertClass sigma1 = SchubertClass::basis(cx::kK, cx::kN, Partition{{1}});
  SchubertClass power = SchubertClass::unit(cx::kK, cx::kN);
  for (int i = 0; i < cx::kSigmaOnePower; ++i) power = class_product(power, sigma1);
  return power - SchubertClass::basis(cx::kK, cx::kN, parse_partition(cx::kSubtractedClass));
}

// A suite counts cases and remembers the first failing one.
struct SuiteResult {
  long cases = 0;
  std::string failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && failure.empty()) failure = describe();
  }
};

CheckReport finish(const std::string& name, const SuiteResult& r) {
  const std::string expected = "ok (" + std::to_string(r.cases) + " cases)";
  return compare(name, expected, r.failure.empty() ? expected : "fail: " + r.failure);
}

SuiteResult rank_set_oracle(int n) {
  SuiteResult r;
  for (const RankSet& m : all_rank_sets(n)) {
    const SchubertClass a = rank_variety_class(m);
    const SchubertClass b = positroid_class(m);
    r.check(a == b, [&] { return to_string(m) + ": " + to_string(a) + " vs " + to_string(b); });
  }
  return r;
}

SuiteResult codimension_length(int n) {
  SuiteResult r;
  for (const RankSet& m : all_rank_sets(n)) {
    const Value len = length(affine_of_rank_set(m));
    r.check(codimension(m) == len, [&] { return to_string(m); });
  }
  return r;
}

SuiteResult interval_rank(int n) {
  SuiteResult r;
  for (const RankSet& m : all_rank_sets(n)) {
    const AffinePermutation f = affine_of_rank_set(m);
    for (int s = 1; s <= n; ++s)
      for (int q = 1; q <= s; ++q)
        r.check(containment_count(m, {q, s}) == northeast_count(f, s + 1, n + q - 1),
                [&] { return to_string(m) + " at [" + std::to_string(q) + "," + std::to_string(s) + "]"; });
  }
  return r;
}

SuiteResult rank_set_roundtrip(int n) {
  SuiteResult r;
  for (const RankSet& m : all_rank_sets(n)) {
    const RankSet back = rank_set_of_affine(affine_of_rank_set(m));
    r.check(to_string(back) == to_string(m), [&] { return to_string(m); });
  }
  return r;
}

SuiteResult permutation_diagrams(int n) {
  SuiteResult r;
  for (const Permutation& w : all_permutations(n)) {
    const int cells = diagram_of_permutation(w).size();
    r.check(cells == w.inversions() && cells == length(AffinePermutation::embed(w)),
            [&] { return "inversions of " + to_string(w); });
    r.check(degeneration_check(w), [&] { return "degeneration of " + to_string(w); });
  }
  return r;
}

SuiteResult permutation_rank_sets(int n) {
  SuiteResult r;
  for (const Permutation& w : all_permutations(n)) {
    const SchurExpansion direct = stanley(w);
    const SchurExpansion via = monomial_to_schur(affine_stanley(affine_of_rank_set(rank_set_of_permutation(w))));
    r.check(direct == via && is_schur_nonnegative(direct), [&] { return to_string(w); });
  }
  return r;
}

SuiteResult hook_lengths(int n) {
  SuiteResult r;
  Integer total = 0;
  for (const Partition& p : partitions_of(n)) total += syt_count(p) * syt_count(p);
  r.check(total == factorial(n), [&] { return "sum of squares is " + total.get_str(); });
  for (const Partition& lambda : partitions_of(n))
    r.check(mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == syt_count(lambda),
            [&] { return "character degree of " + to_string(lambda); });
  return r;
}

// Every diagram of the given size inside a 3 x 3 box.
std::vector<Diagram> box_diagrams(int size) {
  std::vector<Diagram> out;
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    if (std::popcount(mask) != size) continue;
    std::vector<Cell> cells;
    for (int i = 0; i < 9; ++i)
      if (mask & (1u << i)) cells.push_back({i / 3 + 1, i % 3 + 1});
    out.emplace_back(std::move(cells), RectangleContext(3, 3));
  }
  return out;
}

SuiteResult specht_oracle(int size) {
  SuiteResult r;
  for (const Diagram& d : box_diagrams(size)) {
    SchurExpansion rule;
    try {
      rule = specht_schur(d);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedDiagram) throw;
      continue;
    }
    const SchurExpansion brute = specht_bruteforce(d);
    r.check(rule == brute, [&] { return to_string(d); });
  }
  return r;
}

}  // namespace

std::vector<CheckReport> replay_counterexample() {
  std::vector<CheckReport> out;
  const Diagram d = diagonal(cx::kDiagonalSize);
  const SchurExpansion s_d = specht_schur(d, SpechtFamily::skew());
  out.push_back(compare("regular_representation", cx::kRegularExpansion, to_string(s_d)));

  const Integer dual_dim = specht_dim(box_dual(s_d, *d.box()));
  out.push_back(compare("magyar_dual_dimension", std::to_string(cx::kDualDimension), dual_dim.get_str()));

  const SchubertClass x_d = given_class();
  const Integer degree = class_degree(x_d);
  out.push_back(compare("degree_of_given_class", std::to_string(cx::kDegreeXD), degree.get_str()));

  const Integer gap = dual_dim - degree;
  const Integer hook = syt_count(parse_partition(cx::kDiscrepancyShape));
  CheckReport discrepancy = compare("discrepancy", std::to_string(cx::kDiscrepancy), gap.get_str());
  discrepancy.passed = discrepancy.passed && hook == gap;
  if (hook != gap) discrepancy.actual += " (f^" + std::string(cx::kDiscrepancyShape) + " = " + hook.get_str() + ")";
  out.push_back(std::move(discrepancy));

  const SchubertClass diff = phi(s_d, cx::kK, cx::kN) - x_d;
  const SchubertClass sigma22 = SchubertClass::basis(cx::kK, cx::kN, parse_partition(cx::kSubtractedClass));
  out.push_back(compare("class_difference", to_string(sigma22), to_string(diff)));
  return out;
}

CheckReport check_class_bound(const Permutation& w, int k, int n, const SchubertClass& actual) {
  if (actual.k() != k || actual.n() != n)
    throw Error(ErrorKind::ContextMismatch, "class does not live in Gr(" + std::to_string(k) + "," +
                                                std::to_string(n) + ")");
  const SchubertClass diff = phi(stanley(w), k, n) - actual;
  return {"class_bound:" + to_string(w), "Schubert-nonnegative", to_string(diff), is_schubert_nonnegative(diff)};
}

std::vector<CheckReport> run_all(int max_n) {
  std::vector<CheckReport> out;
  for (int n = 1; n <= max_n; ++n) {
    const std::string tag = ".n=" + std::to_string(n);
    out.push_back(finish("partitions.hook_length" + tag, hook_lengths(n)));
    out.push_back(finish("rankset.roundtrip" + tag, rank_set_roundtrip(n)));
    out.push_back(finish("rankset.codimension_length" + tag, codimension_length(n)));
    out.push_back(finish("rankset.interval_rank" + tag, interval_rank(n)));
    out.push_back(finish("rankset.oracle_equivalence" + tag, rank_set_oracle(n)));
    out.push_back(finish("diagrams.permutation" + tag, permutation_diagrams(n)));
    out.push_back(finish("stanley.permutation_rank_set" + tag, permutation_rank_sets(n)));
    if (n <= 5) out.push_back(finish("specht.oracle" + tag, specht_oracle(n)));
  }
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace rankclass
