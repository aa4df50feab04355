#include "rankclass/rankset.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "rankclass/error.hpp"
#include "rankclass/stanley.hpp"

namespace rankclass {

Interval intersect(const Interval& s, const Interval& t) noexcept {
  return {std::max(s.a, t.a), std::min(s.b, t.b)};
}

RankSet::RankSet(std::vector<Interval> intervals, int ambient_n)
    : intervals_(std::move(intervals)), n_(ambient_n) {
  if (n_ < 1) throw Error(ErrorKind::InvalidRankSet, "ambient n must be at least 1");
  std::set<int> lefts, rights;
  for (const Interval& s : intervals_) {
    if (s.a < 1 || s.a > s.b || s.b > n_)
      throw Error(ErrorKind::InvalidRankSet, "interval [" + std::to_string(s.a) + "," +
                                                 std::to_string(s.b) + "] is not inside [1," +
                                                 std::to_string(n_) + "]");
    if (!lefts.insert(s.a).second) throw Error(ErrorKind::InvalidRankSet, "left endpoints must be distinct");
    if (!rights.insert(s.b).second) throw Error(ErrorKind::InvalidRankSet, "right endpoints must be distinct");
  }
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& x, const Interval& y) { return x.b < y.b; });
}

int containment_count(const RankSet& m, const Interval& s) {
  if (s.empty()) return 0;
  return static_cast<int>(std::count_if(m.intervals().begin(), m.intervals().end(),
                                        [&](const Interval& t) { return s.contains(t); }));
}

int dimension(const RankSet& m) {
  int dim = 0;
  for (const Interval& s : m.intervals()) dim += s.size() - containment_count(m, s);
  return dim;
}

int codimension(const RankSet& m) {
  const int k = m.size();
  return k * (m.ambient_n() - k) - dimension(m);
}

AffinePermutation affine_of_rank_set(const RankSet& m) {
  const int n = m.ambient_n();
  std::vector<Value> window(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_left(static_cast<std::size_t>(n + 1), false);
  std::vector<bool> is_right(static_cast<std::size_t>(n + 1), false);
  for (const Interval& s : m.intervals()) {
    window[static_cast<std::size_t>(s.b - 1)] = s.a + n;
    is_left[static_cast<std::size_t>(s.a)] = true;
    is_right[static_cast<std::size_t>(s.b)] = true;
  }
  std::vector<int> c, d;
  for (int i = 1; i <= n; ++i) {
    if (!is_left[static_cast<std::size_t>(i)]) c.push_back(i);
    if (!is_right[static_cast<std::size_t>(i)]) d.push_back(i);
  }
  for (std::size_t i = 0; i < d.size(); ++i) window[static_cast<std::size_t>(d[i] - 1)] = c[i];
  return AffinePermutation(std::move(window));
}

RankSet rank_set_of_affine(const AffinePermutation& f) {
  if (!is_bounded(f)) throw Error(ErrorKind::NotBounded, to_string(f) + " is not bounded");
  const int n = f.period();
  std::vector<Interval> intervals;
  Value last_small = 0;
  for (int i = 1; i <= n; ++i) {
    const Value v = f(i);
    if (v > n) {
      intervals.push_back({static_cast<int>(v - n), i});
    } else {
      if (v < last_small)
        throw Error(ErrorKind::NotRankSetShaped, "entries of " + to_string(f) + " inside [n] are not increasing");
      last_small = v;
    }
  }
  return RankSet(std::move(intervals), n);
}

RankSet stretch(const RankSet& m, int times) {
  if (times < 0) throw Error(ErrorKind::InvalidRankSet, "stretch count must be nonnegative");
  std::vector<Interval> out = m.intervals();
  for (Interval& s : out) s.b += times;
  return RankSet(std::move(out), m.ambient_n() + times);
}

bool is_stretched(const RankSet& m) {
  for (const Interval& s : m.intervals())
    for (const Interval& t : m.intervals())
      if (s.a >= t.b) return false;
  return true;
}

int minimal_stretch(const RankSet& m) {
  if (m.empty()) throw Error(ErrorKind::EmptyRankSet, "minimal stretch needs a nonempty rank set");
  int worst = m.intervals().front().a - m.intervals().front().b;
  for (const Interval& s : m.intervals())
    for (const Interval& t : m.intervals()) worst = std::max(worst, s.a - t.b);
  return std::max(0, 1 + worst);
}

StretchExtraction extract_permutation(const RankSet& m) {
  if (m.empty()) throw Error(ErrorKind::EmptyRankSet, "the empty rank set has no minimal right endpoint");
  const int stretches = minimal_stretch(m);
  RankSet stretched = stretch(m, stretches);
  if (!is_stretched(stretched)) throw Error(ErrorKind::Internal, "closed-form stretch count is too small");
  AffinePermutation f = affine_of_rank_set(stretched);
  const int b = stretched.intervals().front().b;  // sorted by right endpoint
  const Value y = f(b - 1);
  // tau^{1-y} f tau^{b-2} maps [n] onto [n] for stretched sets.
  auto w = restrict_to_window(tau_shift(f, 1 - y, b - 2));
  if (!w) throw Error(ErrorKind::Internal, "shifted window of " + to_string(f) + " is not a permutation");
  return {stretches, std::move(stretched), std::move(f), b, y, std::move(*w)};
}

Permutation w_of_rank_set(const RankSet& m) { return extract_permutation(m).permutation; }

RankSet rank_set_of_permutation(const Permutation& w) {
  const int n = w.size();
  std::vector<Interval> out;
  for (int i = 1; i <= n; ++i) out.push_back({w(i), i + n});
  return RankSet(std::move(out), 2 * n);
}

std::vector<RankSet> all_rank_sets(int k, int n) {
  std::vector<RankSet> out;
  if (k < 0 || k > n) return out;
  std::vector<Interval> cur;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  // Right endpoints chosen increasingly; each gets an unused left endpoint <= it.
  std::function<void(int)> rec = [&](int next_b) {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(cur, n);
      return;
    }
    for (int b = next_b; b <= n - (k - static_cast<int>(cur.size())) + 1; ++b) {
      for (int a = 1; a <= b; ++a) {
        if (used[static_cast<std::size_t>(a)]) continue;
        used[static_cast<std::size_t>(a)] = true;
        cur.push_back({a, b});
        rec(b + 1);
        cur.pop_back();
        used[static_cast<std::size_t>(a)] = false;
      }
    }
  };
  rec(1);
  return out;
}

std::vector<RankSet> all_rank_sets(int n) {
  std::vector<RankSet> out;
  for (int k = 0; k <= n; ++k) {
    auto part = all_rank_sets(k, n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

SchubertClass rank_variety_class(const RankSet& m) {
  if (m.empty()) return SchubertClass::unit(0, m.ambient_n());
  return phi(stanley(w_of_rank_set(m)), m.size(), m.ambient_n());
}

SchubertClass positroid_class(const RankSet& m) {
  return phi(monomial_to_schur(affine_stanley(affine_of_rank_set(m))), m.size(), m.ambient_n());
}

std::string to_string(const RankSet& m) {
  std::string out;
  for (const Interval& s : m.intervals()) {
    if (!out.empty()) out += ',';
    out += "[" + std::to_string(s.a) + "," + std::to_string(s.b) + "]";
  }
  if (out.empty()) out = "-";
  return out + ";n=" + std::to_string(m.ambient_n());
}

RankSet parse_rank_set(std::string_view text) {
  const std::size_t semi = text.rfind(";n=");
  if (semi == std::string_view::npos) throw Error(ErrorKind::Parse, "rank set needs ';n=N' suffix");
  auto parse_int = [](std::string_view s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
      throw Error(ErrorKind::Parse, "bad integer '" + std::string(s) + "'");
    return v;
  };
  const int n = parse_int(text.substr(semi + 3));
  std::string_view body = text.substr(0, semi);
  std::vector<Interval> intervals;
  if (!body.empty() && body != "-") {
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] != '[') throw Error(ErrorKind::Parse, "expected '[' in rank set text");
      const std::size_t close = body.find(']', pos);
      if (close == std::string_view::npos) throw Error(ErrorKind::Parse, "unterminated interval");
      const std::string_view inner = body.substr(pos + 1, close - pos - 1);
      const std::size_t comma = inner.find(',');
      if (comma == std::string_view::npos) throw Error(ErrorKind::Parse, "interval needs 'a,b'");
      intervals.push_back({parse_int(inner.substr(0, comma)), parse_int(inner.substr(comma + 1))});
      pos = close + 1;
      if (pos < body.size()) {
        if (body[pos] != ',') throw Error(ErrorKind::Parse, "expected ',' between intervals");
        ++pos;
        if (pos == body.size()) throw Error(ErrorKind::Parse, "trailing ',' in rank set text");
      }
    }
  }
  try {
    return RankSet(std::move(intervals), n);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace rankclass
