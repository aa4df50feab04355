#include "rankclass/stanley.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "rankclass/error.hpp"

namespace rankclass {

namespace {

int residue(Value v, int n) {
  const Value r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Left multiplication by s_a swaps the values congruent to a and a + 1.
void left_multiply_simple(std::vector<Value>& window, int a) {
  const int n = static_cast<int>(window.size());
  const int b = (a + 1) % n;
  for (Value& v : window) {
    const int r = residue(v, n);
    if (r == a) ++v;
    else if (r == b) --v;
  }
}

// Position p with g(p) = target, for g given by its window.
Value preimage(const std::vector<Value>& window, Value target) {
  const int n = static_cast<int>(window.size());
  for (int i = 0; i < n; ++i) {
    const Value diff = target - window[static_cast<std::size_t>(i)];
    if (diff % n == 0) return (i + 1) + diff;
  }
  throw Error(ErrorKind::Internal, "window is not a bijection");
}

// ell(s_a g) < ell(g) exactly when g^{-1}(a) > g^{-1}(a + 1).
bool is_left_descent(const std::vector<Value>& window, int a) {
  return preimage(window, a) > preimage(window, a + 1);
}

class FactorizationCounter {
 public:
  explicit FactorizationCounter(int n) : n_(n) {
    if (n_ < 2) return;
    if (n_ > 20) throw Error(ErrorKind::TooLarge, "factorization counting supports n <= 20");
    const unsigned full = (1u << n_) - 1u;
    words_by_size_.resize(static_cast<std::size_t>(n_));
    for (unsigned mask = 0; mask < full; ++mask) {
      std::vector<int> residues;
      for (int i = 0; i < n_; ++i)
        if (mask & (1u << i)) residues.push_back(i);
      words_by_size_[residues.size()].push_back(cyclically_decreasing_word(n_, residues));
    }
  }

  // `window` is in the av = 0 group and has length equal to the sum of
  // lengths[idx..]. Peels a left factor d_S and requires ell(d_S^{-1} g) =
  // ell(g) - |S|, checked one simple reflection at a time.
  Integer count(const std::vector<Value>& window, const std::vector<int>& lengths, std::size_t idx) {
    if (idx == lengths.size()) return is_identity(window) ? 1 : 0;
    const int size = lengths[idx];
    if (size < 0 || size >= std::max(n_, 1)) return size == 0 ? count(window, lengths, idx + 1) : 0;
    std::vector<int> suffix(lengths.begin() + static_cast<std::ptrdiff_t>(idx), lengths.end());
    auto key = std::make_pair(window, std::move(suffix));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    if (size == 0) {
      total = count(window, lengths, idx + 1);
    } else {
      for (const std::vector<int>& word : words_by_size_[static_cast<std::size_t>(size)]) {
        std::vector<Value> g = window;
        bool reduced = true;
        for (int a : word) {
          if (!is_left_descent(g, a)) {
            reduced = false;
            break;
          }
          left_multiply_simple(g, a);
        }
        if (reduced) total += count(g, lengths, idx + 1);
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  static bool is_identity(const std::vector<Value>& window) {
    for (std::size_t i = 0; i < window.size(); ++i)
      if (window[i] != static_cast<Value>(i + 1)) return false;
    return true;
  }

  int n_;
  std::vector<std::vector<std::vector<int>>> words_by_size_;
  std::map<std::pair<std::vector<Value>, std::vector<int>>, Integer> memo_;
};

}  // namespace

std::vector<int> cyclically_decreasing_word(int n, const std::vector<int>& residues) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int r : residues) {
    if (r < 0 || r >= n) throw Error(ErrorKind::InvalidAffinePermutation, "residue out of range");
    in[static_cast<std::size_t>(r)] = true;
  }
  if (static_cast<int>(std::count(in.begin(), in.end(), true)) == n && n > 0)
    throw Error(ErrorKind::InvalidAffinePermutation, "the full residue set is not cyclically decreasing");
  std::vector<int> word;
  // A run top t has t in S and t + 1 not in S; emit t, t - 1, ... down the run.
  for (int t = n - 1; t >= 0; --t) {
    if (!in[static_cast<std::size_t>(t)] || in[static_cast<std::size_t>((t + 1) % n)]) continue;
    for (int x = t; in[static_cast<std::size_t>(x)]; x = (x + n - 1) % n) word.push_back(x);
  }
  return word;
}

AffinePermutation cyclically_decreasing_element(int n, const std::vector<int>& residues) {
  AffinePermutation out = AffinePermutation::identity(n);
  for (int a : cyclically_decreasing_word(n, residues)) out = compose(out, simple_reflection(n, a));
  return out;
}

Integer count_decreasing_factorizations(const AffinePermutation& f, const std::vector<int>& lengths) {
  const AffinePermutation g = normalize(f);
  Value total = 0;
  for (int l : lengths) total += l;
  if (total != length(g)) return 0;
  FactorizationCounter counter(g.period());
  return counter.count(g.window(), lengths, 0);
}

MonomialExpansion affine_stanley(const AffinePermutation& f) {
  const AffinePermutation g = normalize(f);
  const auto degree = static_cast<int>(length(g));
  const int n = g.period();
  MonomialExpansion out;
  if (degree == 0) return MonomialExpansion::basis(Partition{});
  FactorizationCounter counter(n);
  // Cyclically decreasing elements have length at most n - 1.
  for (const Partition& lambda : partitions_in_box(degree, degree, n - 1))
    out.add(lambda, counter.count(g.window(), lambda.parts(), 0));
  return out;
}

SchurExpansion stanley(const Permutation& w) {
  if (w.size() == 0) return SchurExpansion::basis(Partition{});
  return monomial_to_schur(affine_stanley(AffinePermutation::embed(w)));
}

}  // namespace rankclass
