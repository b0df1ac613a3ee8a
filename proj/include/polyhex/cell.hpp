#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>

namespace polyhex {

// One hexagonal cell in axial coordinates. The tiling is drawn with two
// horizontal edges per cell; x indexes columns and y counts whole cell
// heights inside a column. Column x is shifted up by x/2 cell heights, so the
// center of (x, y) sits at height y + x/2.
//
//         (x,y+1)
//  (x-1,y+1)   (x+1,y)
//          (x,y)
//  (x-1,y)     (x+1,y-1)
//         (x,y-1)
struct Cell {
  int x = 0;
  int y = 0;

  // (x, y) lexicographic; this is the canonical listing order.
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

// A half-integer stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ + b.twice_);
  }

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr std::array<Cell, 6> kNeighbourOffsets = {{
    {0, 1}, {0, -1}, {-1, 1}, {-1, 0}, {1, 0}, {1, -1},
}};

// Upper-left, upper, upper-right.
inline constexpr std::array<Cell, 3> kUpperOffsets = {{
    {-1, 1}, {0, 1}, {1, 0},
}};

constexpr std::array<Cell, 6> neighbours(Cell c) {
  std::array<Cell, 6> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c + kNeighbourOffsets[i];
  return out;
}

constexpr std::array<Cell, 3> gen_upper_neighbours(Cell c) {
  std::array<Cell, 3> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c + kUpperOffsets[i];
  return out;
}

constexpr bool are_adjacent(Cell a, Cell b) {
  const Cell d = a - b;
  for (const Cell off : kNeighbourOffsets)
    if (d == off) return true;
  return false;
}

constexpr HalfInt cell_height(Cell c) { return HalfInt::from_twice(2 * c.y + c.x); }

// c dominates d when c sits i >= 0 whole units above one of the generalized
// upper neighbours of d. Those neighbours are (x-1,y+1), (x,y+1), (x+1,y), and
// moving up a column only increases y, so the existential over i reduces to
// one inequality per column offset.
constexpr bool dominates_cell(Cell c, Cell d) {
  switch (c.x - d.x) {
    case -1:
    case 0:
      return c.y >= d.y + 1;
    case 1:
      return c.y >= d.y;
    default:
      return false;
  }
}

}  // namespace polyhex

template <>
struct std::hash<polyhex::Cell> {
  std::size_t operator()(const polyhex::Cell& c) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(c.x) << 32) ^
                                  static_cast<unsigned int>(c.y));
  }
};
