#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rankclass/grassmann.hpp"
#include "rankclass/perm.hpp"

namespace rankclass {

// The integer interval [a, b]; empty when a > b.
struct Interval {
  int a = 1;
  int b = 0;

  bool empty() const noexcept { return a > b; }
  int size() const noexcept { return empty() ? 0 : b - a + 1; }
  bool contains(const Interval& o) const noexcept { return o.empty() || (a <= o.a && o.b <= b); }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

Interval intersect(const Interval& s, const Interval& t) noexcept;

// A finite set of intervals [a_i, b_i] in [1, n] whose left endpoints are
// pairwise distinct and whose right endpoints are pairwise distinct. Stored in
// increasing order of right endpoint.
class RankSet {
 public:
  RankSet(std::vector<Interval> intervals, int ambient_n);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  int ambient_n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(intervals_.size()); }
  bool empty() const noexcept { return intervals_.empty(); }

  friend bool operator==(const RankSet&, const RankSet&) = default;

 private:
  std::vector<Interval> intervals_;
  int n_;
};

// #S(M): intervals of M contained in S.
int containment_count(const RankSet& m, const Interval& s);

// sum over S in M of (#S - #S(M)).
int dimension(const RankSet& m);
// k(n - k) - dimension.
int codimension(const RankSet& m);

// f_M: b_i -> a_i + n and the remaining positions d_i -> c_i in order.
AffinePermutation affine_of_rank_set(const RankSet& m);

// Inverse of affine_of_rank_set. Throws NotBounded or NotRankSetShaped.
RankSet rank_set_of_affine(const AffinePermutation& f);

// kappa: [a, b] -> [a, b + 1], ambient n -> n + 1.
RankSet stretch(const RankSet& m, int times = 1);

// min(S) < max(T) for every S, T in M (including S = T).
bool is_stretched(const RankSet& m);

// Least m >= 0 with stretch(M, m) stretched: max(0, 1 + max_{S,T}(min S - max T)).
int minimal_stretch(const RankSet& m);

// Intermediate data of the permutation extraction, kept for reporting.
struct StretchExtraction {
  int stretches = 0;
  RankSet stretched{{}, 1};
  AffinePermutation stretched_affine = AffinePermutation::identity(1);
  int min_right = 0;          // least right endpoint of the stretched set
  Value window_floor = 0;     // f(min_right - 1)
  Permutation permutation;
};

StretchExtraction extract_permutation(const RankSet& m);

// An ordinary permutation w_M in S_{n+m} with phi_n(F_{w_M}) = [Sigma_M].
// Throws EmptyRankSet.
Permutation w_of_rank_set(const RankSet& m);

// M(w) = {[w(i), i + n]} in ambient 2n.
RankSet rank_set_of_permutation(const Permutation& w);

// Every rank set with k intervals in [1, n], and every rank set in [1, n].
std::vector<RankSet> all_rank_sets(int k, int n);
std::vector<RankSet> all_rank_sets(int n);

// Cohomology class phi(F_{w_M}) in Gr(#M, n); the empty set gives the unit.
SchubertClass rank_variety_class(const RankSet& m);
// phi(affine Stanley of f_M) in Gr(#M, n): the positroid-class route.
SchubertClass positroid_class(const RankSet& m);

// "[1,3],[3,6],[4,5];n=6"; the empty set is "-;n=6".
std::string to_string(const RankSet& m);
RankSet parse_rank_set(std::string_view text);

}  // namespace rankclass
