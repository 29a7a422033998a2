#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubesurf {

// A cell of Q^n in star notation: a word of length n over {0,1,*}.
// A '*' marks a free interval direction, so the cell dimension equals the
// number of stars (vertex = 0 stars, edge = 1, face = 2).
class CellCode {
public:
  static constexpr int kMaxAmbient = 8;

  CellCode() = default;

  // Validates length and alphabet; never normalizes.
  static CellCode parse(std::string_view text, int n);
  static CellCode from_masks(int n, std::uint8_t stars, std::uint8_t bits);

  int ambient() const { return n_; }
  int dimension() const;
  bool is_vertex() const { return stars_ == 0; }
  bool is_edge() const { return dimension() == 1; }
  bool is_face() const { return dimension() == 2; }

  // Symbol at coordinate i, one of '0', '1', '*'.
  char symbol(int i) const;
  std::string word() const;

  std::uint8_t star_mask() const { return stars_; }
  std::uint8_t bit_mask() const { return bits_; }

  // True if `other` lies in the closure of this cell: stars(other) is a
  // subset of stars(this) and the fixed coordinates agree.
  bool contains(const CellCode& other) const;

  // Coordinate-0-first key with symbol order '0' < '1' < '*'.
  std::uint32_t lex_key() const;

  friend bool operator==(const CellCode&, const CellCode&) = default;

private:
  std::uint8_t n_ = 0;
  std::uint8_t stars_ = 0;
  std::uint8_t bits_ = 0;
};

inline bool operator<(const CellCode& a, const CellCode& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient();
  return a.lex_key() < b.lex_key();
}

// All k-cells in the closure of `cell`, obtained by substituting
// dimension(cell) - k of its stars with every {0,1} combination.
std::vector<CellCode> boundary_cells(const CellCode& cell, int k);

// All k-cells of Q^n; count is C(n,k) * 2^(n-k).
std::vector<CellCode> full_skeleton(int n, int k);

}  // namespace cubesurf
