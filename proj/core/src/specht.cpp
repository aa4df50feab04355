#include "rankclass/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rankclass/error.hpp"
#include "rankclass/stanley.hpp"

namespace rankclass {

SpechtFamily parse_family(std::string_view text) {
  if (text == "auto") return SpechtFamily::automatic();
  if (text == "skew") return SpechtFamily::skew();
  if (text == "product") return SpechtFamily::product();
  if (text == "dual") return SpechtFamily::dual();
  if (text.starts_with("perm:")) return SpechtFamily::permutation(parse_permutation(text.substr(5)));
  throw Error(ErrorKind::Parse, "unknown diagram family '" + std::string(text) + "'");
}

SchurExpansion box_dual(const SchurExpansion& e, const RectangleContext& box) {
  SchurExpansion out;
  for (const auto& [p, c] : e.terms()) out.add(complement(p, box), c);
  return out;
}

Integer specht_dim(const SchurExpansion& e) {
  Integer total = 0;
  for (const auto& [p, c] : e.terms()) {
    if (c < 0) throw Error(ErrorKind::NegativeMultiplicity, "multiplicity of " + to_string(p) + " is negative");
    total += c * syt_count(p);
  }
  return total;
}

namespace {

SchurExpansion skew_expansion(const SkewShape& shape) {
  SchurExpansion out;
  for (const Partition& nu : partitions_of(shape.size()))
    out.add(nu, lr_coefficient(shape.outer(), shape.inner(), nu));
  return out;
}

// Rows reordered by leftmost cell (then rightmost cell), both descending.
// Specht modules do not see row order, and a skew shape read upward has
// weakly increasing leftmost cells.
Diagram sort_rows(const Diagram& d) {
  const Diagram tight = compress(d);
  std::vector<int> order(static_cast<std::size_t>(tight.max_row()));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const auto rx = tight.row_cells(x);
    const auto ry = tight.row_cells(y);
    if (rx.front() != ry.front()) return rx.front() > ry.front();
    return rx.back() > ry.back();
  });
  std::vector<int> target(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    target[static_cast<std::size_t>(order[pos] - 1)] = static_cast<int>(pos + 1);
  std::vector<int> cols(static_cast<std::size_t>(tight.max_col()));
  std::iota(cols.begin(), cols.end(), 1);
  return permute(tight, target, cols);
}

std::optional<SchurExpansion> try_skew(const Diagram& d) {
  if (auto shape = as_skew_shape(d)) return skew_expansion(*shape);
  if (auto shape = as_skew_shape(sort_rows(d))) return skew_expansion(*shape);
  return std::nullopt;
}

// Splits a compressed diagram as D1 . D2 with both parts nonempty, taking the
// smallest possible top block.
std::optional<std::pair<Diagram, Diagram>> split_product(const Diagram& d) {
  const Diagram tight = compress(d);
  for (int a = 1; a < tight.max_row(); ++a) {
    int top_max = 0, bottom_min = tight.max_col() + 1;
    for (const Cell& c : tight.cells()) {
      if (c.row <= a) top_max = std::max(top_max, c.col);
      else bottom_min = std::min(bottom_min, c.col);
    }
    if (top_max >= bottom_min) continue;
    std::vector<Cell> top, bottom;
    for (const Cell& c : tight.cells()) {
      if (c.row <= a) top.push_back(c);
      else bottom.push_back({c.row - a, c.col - top_max});
    }
    return std::make_pair(Diagram(std::move(top)), Diagram(std::move(bottom)));
  }
  return std::nullopt;
}

SchurExpansion automatic(const Diagram& d, bool allow_dual);

std::optional<SchurExpansion> try_product(const Diagram& d) {
  auto parts = split_product(d);
  if (!parts) return std::nullopt;
  return schur_product(automatic(parts->first, false), automatic(parts->second, false));
}

SchurExpansion dual_rule(const Diagram& d) {
  if (!d.box()) throw Error(ErrorKind::UnsupportedDiagram, "the dual rule needs a bounding box");
  const Diagram comp = complement_rotate(d, *d.box());
  return box_dual(automatic(comp, false), *d.box());
}

SchurExpansion automatic(const Diagram& d, bool allow_dual) {
  if (d.empty()) return SchurExpansion::basis(Partition{});
  if (auto e = try_skew(d)) return *e;
  if (auto e = try_product(d)) return *e;
  if (allow_dual && d.box()) {
    try {
      return dual_rule(d);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::UnsupportedDiagram) throw;
    }
  }
  throw Error(ErrorKind::UnsupportedDiagram, "no combinatorial rule applies to " + to_string(d));
}

}  // namespace

SchurExpansion specht_schur(const Diagram& d, const SpechtFamily& family) {
  switch (family.kind) {
    case SpechtFamily::Kind::Auto:
      return automatic(d, true);
    case SpechtFamily::Kind::Skew:
      if (auto e = try_skew(d)) return *e;
      throw Error(ErrorKind::UnsupportedDiagram, to_string(d) + " is not a skew shape");
    case SpechtFamily::Kind::Permutation: {
      if (!family.w) throw Error(ErrorKind::UnsupportedDiagram, "permutation family needs w");
      if (!(diagram_of_permutation(*family.w) == d))
        throw Error(ErrorKind::UnsupportedDiagram, to_string(d) + " is not D(" + to_string(*family.w) + ")");
      return stanley(*family.w);
    }
    case SpechtFamily::Kind::Product:
      if (d.empty()) return SchurExpansion::basis(Partition{});
      if (auto e = try_product(d)) return *e;
      throw Error(ErrorKind::UnsupportedDiagram, to_string(d) + " does not split as a block product");
    case SpechtFamily::Kind::Dual:
      return dual_rule(d);
  }
  throw Error(ErrorKind::Internal, "unknown family");
}

namespace {

// S_m with permutations indexed by lexicographic rank; entries act on labels
// 0..m-1 and compose as functions.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int m) : m_(m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    do {
      elements_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = elements_.size();
    product_.assign(n * n, 0);
    inverse_.assign(n, 0);
    sign_.assign(n, 1);
    std::vector<int> tmp(static_cast<std::size_t>(m));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (int x = 0; x < m; ++x)
          tmp[static_cast<std::size_t>(x)] =
              elements_[a][static_cast<std::size_t>(elements_[b][static_cast<std::size_t>(x)])];
        product_[a * n + b] = rank(tmp);
      }
      for (int x = 0; x < m; ++x) tmp[static_cast<std::size_t>(elements_[a][static_cast<std::size_t>(x)])] = x;
      inverse_[a] = rank(tmp);
      int inv = 0;
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
          if (elements_[a][static_cast<std::size_t>(x)] > elements_[a][static_cast<std::size_t>(y)]) ++inv;
      sign_[a] = inv % 2 ? -1 : 1;
    }
  }

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<int>& element(std::size_t i) const { return elements_[i]; }
  std::size_t compose(std::size_t a, std::size_t b) const { return product_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  int sign(std::size_t a) const { return sign_[a]; }

  std::size_t rank(const std::vector<int>& p) const {
    std::size_t r = 0;
    for (int i = 0; i < m_; ++i) {
      std::size_t smaller = 0;
      for (int j = i + 1; j < m_; ++j)
        if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller;
      r = r * static_cast<std::size_t>(m_ - i) + smaller;
    }
    return r;
  }

  // Elements mapping every label into its own block.
  std::vector<std::size_t> block_stabilizer(const std::vector<int>& block_of) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < order(); ++a) {
      bool ok = true;
      for (int x = 0; x < m_ && ok; ++x)
        ok = block_of[static_cast<std::size_t>(elements_[a][static_cast<std::size_t>(x)])] ==
             block_of[static_cast<std::size_t>(x)];
      if (ok) out.push_back(a);
    }
    return out;
  }

  // A permutation of cycle type mu: consecutive cycles.
  std::size_t of_cycle_type(const Partition& mu) const {
    std::vector<int> p(static_cast<std::size_t>(m_));
    int start = 0;
    for (int len : mu.parts()) {
      for (int i = 0; i < len; ++i) p[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
      start += len;
    }
    return rank(p);
  }

 private:
  int m_;
  std::vector<std::vector<int>> elements_;
  std::vector<std::size_t> product_;
  std::vector<std::size_t> inverse_;
  std::vector<int> sign_;
};

// Reduced row echelon basis built incrementally. Rows are fully reduced, so a
// vector in the span has coordinates equal to its entries at the pivots.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

  void insert(std::vector<Rational> v) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i] == 0 || pivot_row_[i] < 0) continue;
      const Rational c = v[i];
      const auto& row = rows_[static_cast<std::size_t>(pivot_row_[i])];
      for (std::size_t j = i; j < dim_; ++j)
        if (row[j] != 0) v[j] -= c * row[j];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return;
    const Rational lead = v[p];
    for (std::size_t j = p; j < dim_; ++j)
      if (v[j] != 0) v[j] /= lead;
    for (auto& row : rows_) {
      if (row[p] == 0) continue;
      const Rational c = row[p];
      for (std::size_t j = p; j < dim_; ++j)
        if (v[j] != 0) row[j] -= c * v[j];
    }
    pivot_row_[p] = static_cast<int>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<int> pivot_row_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace

SchurExpansion specht_bruteforce(const Diagram& d, const std::vector<Cell>& filling) {
  const int m = d.size();
  if (m > kBruteforceMaxCells)
    throw Error(ErrorKind::TooLarge, "group-algebra oracle is limited to " +
                                         std::to_string(kBruteforceMaxCells) + " cells");
  if (m == 0) return SchurExpansion::basis(Partition{});

  std::vector<Cell> order = filling.empty() ? d.cells() : filling;
  {
    std::vector<Cell> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.cells()) throw Error(ErrorKind::Parse, "filling must list every cell exactly once");
  }
  std::vector<int> row_of(static_cast<std::size_t>(m)), col_of(static_cast<std::size_t>(m));
  for (int label = 0; label < m; ++label) {
    row_of[static_cast<std::size_t>(label)] = order[static_cast<std::size_t>(label)].row;
    col_of[static_cast<std::size_t>(label)] = order[static_cast<std::size_t>(label)].col;
  }

  const SymmetricGroup group(m);
  const std::size_t n = group.order();
  const auto row_group = group.block_stabilizer(row_of);
  const auto col_group = group.block_stabilizer(col_of);

  std::vector<Rational> symmetrizer(n, 0);
  for (std::size_t q : col_group)
    for (std::size_t p : row_group) symmetrizer[group.compose(q, p)] += group.sign(q);

  // g q e = sgn(q) g e for q in C(T), so one g per left coset of C(T) spans.
  EchelonBasis basis(n);
  for (std::size_t g = 0; g < n && basis.rank() < n; ++g) {
    bool representative = true;
    for (std::size_t q : col_group)
      if (group.compose(g, q) < g) {
        representative = false;
        break;
      }
    if (!representative) continue;
    std::vector<Rational> v(n, 0);
    for (std::size_t h = 0; h < n; ++h)
      if (symmetrizer[h] != 0) v[group.compose(g, h)] = symmetrizer[h];
    basis.insert(std::move(v));
  }

  // trace of left multiplication by h: sum_i row_i[h^{-1} pivot_i].
  SchurExpansion out;
  const auto classes = partitions_of(m);
  std::vector<Rational> trace(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t h_inv = group.inverse(group.of_cycle_type(classes[c]));
    Rational t = 0;
    for (std::size_t i = 0; i < basis.rank(); ++i)
      t += basis.rows()[i][group.compose(h_inv, basis.pivots()[i])];
    trace[c] = t;
  }
  for (const Partition& lambda : classes) {
    Rational mult = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      mult += trace[c] * Rational(mn_character(lambda, classes[c])) / Rational(centralizer_order(classes[c]));
    mult.canonicalize();
    if (mult.get_den() != 1 || mult < 0)
      throw Error(ErrorKind::Internal, "character of the ideal is not a genuine representation");
    out.add(lambda, mult.get_num());
  }
  return out;
}

}  // namespace rankclass
