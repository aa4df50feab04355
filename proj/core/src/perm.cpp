#include "rankclass/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "rankclass/error.hpp"

namespace rankclass {

namespace {

Value floor_div(Value a, Value b) {
  Value q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Value floor_mod(Value a, Value b) { return a - b * floor_div(a, b); }

template <typename T>
std::vector<T> parse_int_list(std::string_view text, char sep) {
  std::vector<T> out;
  if (text.empty()) throw Error(ErrorKind::Parse, "empty integer list");
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    const std::string_view tok =
        text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    T v{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::Parse, "bad integer '" + std::string(tok) + "'");
    out.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::InvalidPermutation, "one-line notation is not a permutation of [n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

int Permutation::inversions() const noexcept {
  int count = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    for (std::size_t j = i + 1; j < one_line_.size(); ++j)
      if (one_line_[i] > one_line_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    if (one_line_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

Permutation direct_sum(const Permutation& w, const Permutation& v) {
  std::vector<int> out = w.one_line();
  for (int x : v.one_line()) out.push_back(x + w.size());
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string to_string(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (w.size() > 9 && i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty permutation text");
  if (text.find(',') != std::string_view::npos) return Permutation(parse_int_list<int>(text, ','));
  std::vector<int> v;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw Error(ErrorKind::Parse, "bad permutation digit '" + std::string(1, ch) + "'");
    v.push_back(ch - '0');
  }
  try {
    return Permutation(std::move(v));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

AffinePermutation::AffinePermutation(std::vector<Value> window) : window_(std::move(window)) {
  const Value n = period();
  if (n < 1) throw Error(ErrorKind::InvalidAffinePermutation, "window must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Value shift = 0;
  for (Value i = 1; i <= n; ++i) {
    const Value v = window_[static_cast<std::size_t>(i - 1)];
    const auto r = static_cast<std::size_t>(floor_mod(v, n));
    if (seen[r])
      throw Error(ErrorKind::InvalidAffinePermutation, "window entries must be distinct modulo n");
    seen[r] = true;
    shift += v - i;
  }
  if (floor_mod(shift, n) != 0)
    throw Error(ErrorKind::InvalidAffinePermutation, "window shift is not divisible by n");
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<Value> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Value{1});
  return AffinePermutation(std::move(v));
}

AffinePermutation AffinePermutation::embed(const Permutation& w) {
  return AffinePermutation(std::vector<Value>(w.one_line().begin(), w.one_line().end()));
}

Value AffinePermutation::operator()(Value i) const noexcept {
  const Value n = period();
  const Value r = floor_mod(i - 1, n);
  return window_[static_cast<std::size_t>(r)] + (i - 1 - r);
}

Value evaluate(const AffinePermutation& f, Value i) { return f(i); }

Value av(const AffinePermutation& f) {
  Value shift = 0;
  for (Value i = 1; i <= f.period(); ++i) shift += f(i) - i;
  return shift / f.period();
}

bool is_bounded(const AffinePermutation& f) {
  // Periodicity reduces the condition to the window.
  for (Value i = 1; i <= f.period(); ++i)
    if (f(i) < i || f(i) > i + f.period()) return false;
  return true;
}

Value length(const AffinePermutation& f) {
  const Value n = f.period();
  const auto [lo, hi] = std::minmax_element(f.window().begin(), f.window().end());
  const Value spread = *hi - *lo;
  const Value blocks = (spread + n - 1) / n + 1;
  // Termination: write j = q + pn with q in [n]. If j > i + n*blocks then
  // p >= blocks, so f(j) = f(q) + pn >= min + n*blocks > max >= f(i). Hence no
  // inversion (i, j) exists beyond j = i + n*blocks.
  Value count = 0;
  for (Value i = 1; i <= n; ++i)
    for (Value j = i + 1; j <= i + n * blocks; ++j)
      if (f(i) > f(j)) ++count;
  return count;
}

Value northeast_count(const AffinePermutation& f, Value i, Value j) {
  const Value n = f.period();
  Value count = 0;
  for (Value q = 1; q <= n; ++q) {
    // p = q + t*n with p < i and f(q) + t*n > j.
    const Value t_max = floor_div(i - 1 - q, n);
    const Value t_min = floor_div(j - f(q), n) + 1;
    if (t_max >= t_min) count += t_max - t_min + 1;
  }
  return count;
}

AffinePermutation tau_shift(const AffinePermutation& f, Value left, Value right) {
  std::vector<Value> w(static_cast<std::size_t>(f.period()));
  for (Value i = 1; i <= f.period(); ++i) w[static_cast<std::size_t>(i - 1)] = f(i + right) + left;
  return AffinePermutation(std::move(w));
}

AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g) {
  if (f.period() != g.period())
    throw Error(ErrorKind::SizeMismatch, "cannot compose affine permutations of different periods");
  std::vector<Value> w(static_cast<std::size_t>(f.period()));
  for (Value i = 1; i <= f.period(); ++i) w[static_cast<std::size_t>(i - 1)] = f(g(i));
  return AffinePermutation(std::move(w));
}

AffinePermutation inverse(const AffinePermutation& f) {
  const Value n = f.period();
  std::vector<Value> w(static_cast<std::size_t>(n));
  for (Value i = 1; i <= n; ++i) {
    const Value y = f(i);
    const Value r = floor_mod(y - 1, n);  // y = (r + 1) + p*n
    w[static_cast<std::size_t>(r)] = i - (y - 1 - r);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation normalize(const AffinePermutation& f) {
  const Value shift = av(f);
  if (shift == 0) return f;
  std::vector<Value> w = f.window();
  for (Value& v : w) v -= shift;
  return AffinePermutation(std::move(w));
}

std::optional<Permutation> restrict_to_window(const AffinePermutation& f) {
  std::vector<int> v;
  for (Value i = 1; i <= f.period(); ++i) {
    const Value x = f(i);
    if (x < 1 || x > f.period()) return std::nullopt;
    v.push_back(static_cast<int>(x));
  }
  return Permutation(std::move(v));
}

AffinePermutation simple_reflection(int n, int i) {
  if (n < 2 || i < 0 || i >= n)
    throw Error(ErrorKind::InvalidAffinePermutation, "simple reflection index out of range");
  std::vector<Value> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), Value{1});
  if (i == 0) {
    w.front() = 0;
    w.back() = n + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return AffinePermutation(std::move(w));
}

std::string to_string(const AffinePermutation& f) {
  std::string out;
  for (std::size_t i = 0; i < f.window().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.window()[i]);
  }
  return out + ";n=" + std::to_string(f.period());
}

AffinePermutation parse_affine(std::string_view text) {
  const std::size_t semi = text.find(";n=");
  if (semi == std::string_view::npos) throw Error(ErrorKind::Parse, "affine window needs ';n=N' suffix");
  auto window = parse_int_list<Value>(text.substr(0, semi), ',');
  const auto n = parse_int_list<int>(text.substr(semi + 3), ',');
  if (n.size() != 1 || n.front() != static_cast<int>(window.size()))
    throw Error(ErrorKind::Parse, "declared n does not match the window length");
  try {
    return AffinePermutation(std::move(window));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace rankclass
