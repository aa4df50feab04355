#pragma once

#include <string>
#include <vector>

#include "rankclass/grassmann.hpp"
#include "rankclass/perm.hpp"

namespace rankclass {

struct CheckReport {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

// Five checks on the diagonal diagram D = {(1,1),(2,2),(3,3),(4,4)} in Gr(4,8),
// where [X_D] is taken as given rather than computed.
std::vector<CheckReport> replay_counterexample();

// Is phi(F_w) - actual Schubert-nonnegative? Throws ContextMismatch when
// actual does not live in Gr(k, n).
CheckReport check_class_bound(const Permutation& w, int k, int n, const SchubertClass& actual);

// Every invariant suite for sizes 1..max_n, one report per suite and size,
// in a fixed order. max_n <= 0 gives an empty list.
std::vector<CheckReport> run_all(int max_n);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace rankclass
