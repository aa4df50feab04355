#include "rankclass/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "rankclass/error.hpp"

namespace rankclass {

Diagram::Diagram(std::vector<Cell> cells, std::optional<RectangleContext> box)
    : cells_(std::move(cells)), box_(box) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (const Cell& c : cells_) {
    if (c.row < 1 || c.col < 1) throw Error(ErrorKind::Parse, "diagram cells need positive coordinates");
    if (box_ && (c.row > box_->k || c.col > box_->cols))
      throw Error(ErrorKind::ShapeTooLarge, "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                                ") lies outside the box");
  }
}

bool Diagram::contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

int Diagram::max_row() const noexcept { return cells_.empty() ? 0 : cells_.back().row; }

int Diagram::max_col() const noexcept {
  int m = 0;
  for (const Cell& c : cells_) m = std::max(m, c.col);
  return m;
}

std::vector<int> Diagram::row_cells(int row) const {
  std::vector<int> out;
  for (const Cell& c : cells_)
    if (c.row == row) out.push_back(c.col);
  return out;
}

Diagram complement_rotate(const Diagram& d, const RectangleContext& box) {
  const Diagram boxed(d.cells(), box);  // validates containment
  std::vector<Cell> out;
  for (int r = 1; r <= box.k; ++r)
    for (int c = 1; c <= box.cols; ++c)
      if (!boxed.contains({r, c})) out.push_back({box.k + 1 - r, box.cols + 1 - c});
  return Diagram(std::move(out), box);
}

Diagram skew_diagram(const Partition& outer, const Partition& inner) {
  const SkewShape shape(outer, inner);
  std::vector<Cell> out;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = inner[r]; c < outer[r]; ++c) out.push_back({r + 1, c + 1});
  return Diagram(std::move(out));
}

Diagram compress(const Diagram& d) {
  std::map<int, int> rows, cols;
  for (const Cell& c : d.cells()) {
    rows[c.row] = 0;
    cols[c.col] = 0;
  }
  int next = 0;
  for (auto& [r, idx] : rows) idx = ++next;
  next = 0;
  for (auto& [c, idx] : cols) idx = ++next;
  std::vector<Cell> out;
  for (const Cell& c : d.cells()) out.push_back({rows[c.row], cols[c.col]});
  return Diagram(std::move(out));
}

std::optional<SkewShape> as_skew_shape(const Diagram& d) {
  const Diagram tight = compress(d);
  std::vector<int> outer, inner;
  for (int r = 1; r <= tight.max_row(); ++r) {
    const std::vector<int> cols = tight.row_cells(r);
    if (cols.back() - cols.front() + 1 != static_cast<int>(cols.size())) return std::nullopt;
    outer.push_back(cols.back());
    inner.push_back(cols.front() - 1);
    if (r > 1 && (outer[r - 1] > outer[r - 2] || inner[r - 1] > inner[r - 2])) return std::nullopt;
  }
  return SkewShape(Partition(outer), Partition(inner));
}

Diagram diagram_of_permutation(const Permutation& w) {
  const int n = w.size();
  std::vector<Cell> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) out.push_back({i, w(j)});
  return Diagram(std::move(out), RectangleContext(n, n));
}

Diagram staircase_pattern(const Permutation& w) {
  const int n = w.size();
  std::vector<Cell> out;
  for (int i = 1; i <= n; ++i)
    for (int j = w(i); j <= i + n; ++j) out.push_back({i, j});
  return Diagram(std::move(out), RectangleContext(n, 2 * n));
}

Diagram james_peel_move(const Diagram& d, int from_col, int to_col) {
  if (from_col == to_col) throw Error(ErrorKind::Parse, "James-Peel move needs distinct columns");
  std::vector<Cell> out;
  for (const Cell& c : d.cells()) {
    if (c.col == from_col && !d.contains({c.row, to_col})) out.push_back({c.row, to_col});
    else out.push_back(c);
  }
  return Diagram(std::move(out), d.box());
}

Diagram degenerate_staircase(const Permutation& w) {
  const int n = w.size();
  Diagram cur = staircase_pattern(w);
  for (int i = n; i >= 1; --i) cur = james_peel_move(cur, n + i, w(i));
  return cur;
}

bool degeneration_check(const Permutation& w) {
  const int n = w.size();
  const Diagram dw = diagram_of_permutation(w);
  const Diagram moved = degenerate_staircase(w);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (moved.contains({i, j}) == dw.contains({i, j})) return false;
  for (const Cell& c : moved.cells()) {
    if (c.col <= n) continue;
    const std::vector<int> small = dw.row_cells(c.row);
    const std::vector<int> big = dw.row_cells(c.col - n);
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return false;
  }
  return true;
}

Diagram product_diagram(const Diagram& d1, const RectangleContext& box1, const Diagram& d2) {
  const Diagram first(d1.cells(), box1);
  std::vector<Cell> out = first.cells();
  for (const Cell& c : d2.cells()) out.push_back({c.row + box1.k, c.col + box1.cols});
  return Diagram(std::move(out));
}

Diagram permute(const Diagram& d, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (static_cast<int>(rows.size()) < d.max_row() || static_cast<int>(cols.size()) < d.max_col())
    throw Error(ErrorKind::SizeMismatch, "relabeling does not cover the diagram");
  std::vector<Cell> out;
  for (const Cell& c : d.cells())
    out.push_back({rows[static_cast<std::size_t>(c.row - 1)], cols[static_cast<std::size_t>(c.col - 1)]});
  Diagram result(std::move(out), d.box());
  if (result.size() != d.size()) throw Error(ErrorKind::SizeMismatch, "relabeling is not injective");
  return result;
}

std::string to_string(const Diagram& d) {
  std::string out;
  for (const Cell& c : d.cells()) {
    if (!out.empty()) out += ',';
    out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
  }
  if (out.empty()) out = "-";
  if (d.box()) out += ";box=" + std::to_string(d.box()->k) + "x" + std::to_string(d.box()->cols);
  return out;
}

Diagram parse_diagram(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
      throw Error(ErrorKind::Parse, "bad integer '" + std::string(s) + "'");
    return v;
  };
  std::optional<RectangleContext> box;
  std::string_view body = text;
  if (const std::size_t semi = text.find(";box="); semi != std::string_view::npos) {
    const std::string_view spec = text.substr(semi + 5);
    const std::size_t x = spec.find('x');
    if (x == std::string_view::npos) throw Error(ErrorKind::Parse, "box must be 'KxC'");
    box = RectangleContext(parse_int(spec.substr(0, x)), parse_int(spec.substr(x + 1)));
    body = text.substr(0, semi);
  }
  std::vector<Cell> cells;
  if (body != "-" && !body.empty()) {
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] != '(') throw Error(ErrorKind::Parse, "expected '(' in diagram text");
      const std::size_t close = body.find(')', pos);
      if (close == std::string_view::npos) throw Error(ErrorKind::Parse, "unterminated cell");
      const std::string_view inner = body.substr(pos + 1, close - pos - 1);
      const std::size_t comma = inner.find(',');
      if (comma == std::string_view::npos) throw Error(ErrorKind::Parse, "cell needs 'row,col'");
      cells.push_back({parse_int(inner.substr(0, comma)), parse_int(inner.substr(comma + 1))});
      pos = close + 1;
      if (pos < body.size()) {
        if (body[pos] != ',') throw Error(ErrorKind::Parse, "expected ',' between cells");
        ++pos;
        if (pos == body.size()) throw Error(ErrorKind::Parse, "trailing ',' in diagram text");
      }
    }
  } else if (body.empty()) {
    throw Error(ErrorKind::Parse, "empty diagram text (use '-')");
  }
  try {
    return Diagram(std::move(cells), box);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace rankclass
