#include "rankclass/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "rankclass/error.hpp"

namespace rankclass {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorKind::Parse, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::Parse, "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                b.parts_.begin(), b.parts_.end());
}

RectangleContext::RectangleContext(int rows, int columns) : k(rows), cols(columns) {
  if (rows < 0 || columns < 0) throw Error(ErrorKind::Parse, "rectangle dimensions must be >= 0");
}

Partition RectangleContext::full() const {
  return cols == 0 ? Partition{} : Partition(std::vector<int>(k, cols));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw Error(ErrorKind::ShapeTooLarge, "inner partition does not fit inside outer");
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p[0], 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++out[c];
  return Partition(std::move(out));
}

Partition complement(const Partition& p, const RectangleContext& ctx) {
  if (!ctx.fits(p))
    throw Error(ErrorKind::ShapeTooLarge,
                to_string(p) + " does not fit in " + std::to_string(ctx.k) + "x" +
                    std::to_string(ctx.cols));
  std::vector<int> out(ctx.k);
  for (int i = 0; i < ctx.k; ++i) out[i] = ctx.cols - p[ctx.k - 1 - i];
  return Partition(std::move(out));
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer syt_count(const Partition& p) {
  const Partition conj = conjugate(p);
  Rational value = factorial(p.size());
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p[r]; ++c) value /= (p[r] - c - 1) + (conj[c] - r - 1) + 1;
  value.canonicalize();
  if (value.get_den() != 1) throw Error(ErrorKind::Internal, "hook length quotient is not integral");
  return value.get_num();
}

namespace {

// Enumerates Littlewood-Richardson tableaux of shape outer/inner and content
// nu. Cells are visited in reverse reading order (each row right to left, rows
// top to bottom) so the lattice condition can be checked incrementally.
class LrCounter {
 public:
  LrCounter(const Partition& outer, const Partition& inner, const Partition& nu)
      : outer_(outer), inner_(inner), nu_(nu), counts_(nu.length() + 1, 0) {
    for (int r = 0; r < outer.length(); ++r) {
      fill_.emplace_back(outer[r], 0);
      for (int c = outer[r] - 1; c >= inner[r]; --c) cells_.push_back({r, c});
    }
  }

  std::uint64_t run() { return place(0); }

 private:
  struct Cell {
    int row;
    int col;
  };

  std::uint64_t place(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [r, c] = cells_[idx];
    int hi = nu_.length();
    if (c + 1 < outer_[r]) hi = std::min(hi, fill_[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= inner_[r - 1]) lo = fill_[r - 1][c] + 1;
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (counts_[v] + 1 > nu_[v - 1]) continue;
      if (v > 1 && counts_[v] + 1 > counts_[v - 1]) continue;
      ++counts_[v];
      fill_[r][c] = v;
      total += place(idx + 1);
      --counts_[v];
    }
    fill_[r][c] = 0;
    return total;
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition& nu_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> fill_;
  std::vector<Cell> cells_;
};

// Partitions of n with row-wise bounds lo[i] <= p_i <= hi[i] (missing bounds
// are 0 / unbounded), at most max_length parts.
void bounded_partitions(int n, int max_length, const std::vector<int>& lo,
                        const std::vector<int>& hi, std::vector<Partition>& out) {
  std::vector<int> cur;
  auto bound_lo = [&](std::size_t i) { return i < lo.size() ? lo[i] : 0; };
  auto bound_hi = [&](std::size_t i) { return i < hi.size() ? hi[i] : n; };
  std::function<void(int, int)> rec = [&](int remaining, int prev) {
    const std::size_t i = cur.size();
    if (remaining == 0) {
      for (std::size_t j = i; j < lo.size(); ++j)
        if (lo[j] > 0) return;
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(i) >= max_length) return;
    const int top = std::min({prev, remaining, bound_hi(i)});
    for (int v = top; v >= std::max(1, bound_lo(i)); --v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
}

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  // The count of enumerated tableaux cannot realistically exceed 64 bits.
  return Integer(static_cast<unsigned long>(LrCounter(lambda, mu, nu).run()));
}

std::map<Partition, Integer> lr_expand(const Partition& mu, const Partition& nu,
                                       const std::optional<RectangleContext>& box) {
  const int n = mu.size() + nu.size();
  int max_length = mu.length() + nu.length();
  std::vector<int> lo(std::max(mu.length(), nu.length()));
  for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::max(mu[i], nu[i]);
  std::vector<int> hi(max_length);
  for (int i = 0; i < max_length; ++i) hi[i] = mu[i] + nu[0];
  if (box) {
    max_length = std::min(max_length, box->k);
    for (int& h : hi) h = std::min(h, box->cols);
  }
  std::vector<Partition> candidates;
  bounded_partitions(n, max_length, lo, hi, candidates);
  std::map<Partition, Integer> out;
  for (const Partition& lambda : candidates) {
    Integer c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace(lambda, std::move(c));
  }
  return out;
}

namespace {

// chi^lambda(mu) on beta-sets: removing a rim hook of length r moves a bead
// from b to b - r, with sign given by the beads jumped over.
Integer mn_beta(std::vector<int>& beta, const std::vector<int>& cycles, std::size_t idx) {
  if (idx == cycles.size()) return 1;
  const int r = cycles[idx];
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b - r < 0) continue;
    if (std::find(beta.begin(), beta.end(), b - r) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > b - r && x < b) ++between;
    beta[i] = b - r;
    Integer sub = mn_beta(beta, cycles, idx + 1);
    beta[i] = b;
    if (between % 2) total -= sub;
    else total += sub;
  }
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorKind::SizeMismatch,
                "character needs |lambda| = |mu|, got " + to_string(lambda) + " and " + to_string(mu));
  const int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  return mn_beta(beta, mu.parts(), 0);
}

Integer centralizer_order(const Partition& mu) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int part : mu.parts()) ++mult[part];
  for (const auto& [part, m] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    z *= pw * factorial(m);
  }
  return z;
}

std::vector<Partition> partitions_in_box(int n, int max_length, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  bounded_partitions(n, max_length, {}, std::vector<int>(std::max(max_length, 0), max_part), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_in_box(n, n, n); }

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw Error(ErrorKind::Parse, "empty partition text (use '-')");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::Parse, "bad partition part '" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!parts.empty() && parts.back() == 0)
    throw Error(ErrorKind::Parse, "partition text must not contain zero parts");
  return Partition(std::move(parts));
}

}  // namespace rankclass
