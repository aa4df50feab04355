#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankclass/partition.hpp"
#include "rankclass/perm.hpp"

namespace rankclass {

// (row, col) in matrix coordinates; (1, 1) is the upper-left corner.
struct Cell {
  int row = 1;
  int col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A finite set of cells with positive coordinates, optionally carrying a
// bounding k x cols box. Cells are kept sorted (row-major) and deduplicated.
// Equality compares the cell sets only.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Cell> cells, std::optional<RectangleContext> box = std::nullopt);
  Diagram(std::initializer_list<Cell> cells) : Diagram(std::vector<Cell>(cells)) {}

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const std::optional<RectangleContext>& box() const noexcept { return box_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(const Cell& c) const;

  int max_row() const noexcept;
  int max_col() const noexcept;

  // Column indices present in `row`, ascending.
  std::vector<int> row_cells(int row) const;

  Diagram with_box(const RectangleContext& box) const { return Diagram(cells_, box); }

  friend bool operator==(const Diagram& a, const Diagram& b) noexcept { return a.cells_ == b.cells_; }

 private:
  std::vector<Cell> cells_;
  std::optional<RectangleContext> box_;
};

// The complement of D in the box, rotated by 180 degrees. Throws ShapeTooLarge.
Diagram complement_rotate(const Diagram& d, const RectangleContext& box);

// The Young diagram of outer/inner (English notation).
Diagram skew_diagram(const Partition& outer, const Partition& inner = {});

// Removes empty rows and columns, keeping the relative order of the rest.
Diagram compress(const Diagram& d);

// Literal recognition: after compress, each row is a contiguous run
// [inner_r + 1, outer_r] with inner and outer weakly decreasing.
std::optional<SkewShape> as_skew_shape(const Diagram& d);

// D(w) = {(i, w(j)) : i < j, w(i) > w(j)}, boxed n x n.
Diagram diagram_of_permutation(const Permutation& w);

// DM(w) = {(i, j) : w(i) <= j <= i + n}, boxed n x 2n.
Diagram staircase_pattern(const Permutation& w);

// C_{i->j}: in each row p with (p, j) absent, a cell at (p, i) moves to (p, j).
Diagram james_peel_move(const Diagram& d, int from_col, int to_col);

// C_w DM(w) with C_w = C_{n+1 -> w(1)} o ... o C_{2n -> w(n)} (rightmost first).
Diagram degenerate_staircase(const Permutation& w);

// Checks that C_w DM(w) agrees with the complement of D(w) in columns 1..n,
// and that a cell (i, j) with j > n forces row j - n of D(w) to contain row i.
bool degeneration_check(const Permutation& w);

// D1 . D2 = D1 u {(i + a, j + b) : (i, j) in D2} for D1 inside the a x b box.
Diagram product_diagram(const Diagram& d1, const RectangleContext& box1, const Diagram& d2);

// Applies row and column relabelings: cell (r, c) -> (rows[r-1], cols[c-1]).
Diagram permute(const Diagram& d, const std::vector<int>& rows, const std::vector<int>& cols);

// "(1,1),(2,2);box=4x4"; the box suffix is optional and the empty diagram is "-".
std::string to_string(const Diagram& d);
Diagram parse_diagram(std::string_view text);

}  // namespace rankclass
