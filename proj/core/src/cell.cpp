#include "cubesurf/cell.hpp"

#include <algorithm>
#include <bit>

#include "cubesurf/error.hpp"

namespace cubesurf {

CellCode CellCode::parse(std::string_view text, int n) {
  if (n < 1 || n > kMaxAmbient)
    fail(ErrorCode::WrongLength, "ambient dimension must be in [1, 8], got " + std::to_string(n));
  if (static_cast<int>(text.size()) != n)
    fail(ErrorCode::WrongLength, "cell word '" + std::string(text) + "' has length " +
                                     std::to_string(text.size()) + ", expected " + std::to_string(n));
  std::uint8_t stars = 0, bits = 0;
  for (int i = 0; i < n; ++i) {
    switch (text[i]) {
      case '0': break;
      case '1': bits |= std::uint8_t(1u << i); break;
      case '*': stars |= std::uint8_t(1u << i); break;
      default:
        fail(ErrorCode::BadSymbol, "cell word '" + std::string(text) + "' contains '" +
                                       std::string(1, text[i]) + "'; alphabet is {0,1,*}");
    }
  }
  return from_masks(n, stars, bits);
}

CellCode CellCode::from_masks(int n, std::uint8_t stars, std::uint8_t bits) {
  CellCode c;
  c.n_ = static_cast<std::uint8_t>(n);
  std::uint8_t used = n >= 8 ? std::uint8_t(0xff) : std::uint8_t((1u << n) - 1u);
  c.stars_ = stars & used;
  c.bits_ = bits & used & std::uint8_t(~c.stars_);
  return c;
}

int CellCode::dimension() const { return std::popcount(stars_); }

char CellCode::symbol(int i) const {
  if (stars_ & (1u << i)) return '*';
  return (bits_ & (1u << i)) ? '1' : '0';
}

std::string CellCode::word() const {
  std::string w(n_, '0');
  for (int i = 0; i < n_; ++i) w[i] = symbol(i);
  return w;
}

bool CellCode::contains(const CellCode& other) const {
  if (other.n_ != n_) return false;
  if (other.stars_ & ~stars_) return false;
  return ((other.bits_ ^ bits_) & std::uint8_t(~stars_)) == 0;
}

std::uint32_t CellCode::lex_key() const {
  std::uint32_t key = 0;
  for (int i = 0; i < n_; ++i) {
    std::uint32_t rank = (stars_ & (1u << i)) ? 2u : ((bits_ & (1u << i)) ? 1u : 0u);
    key = key * 4u + rank;
  }
  return key;
}

std::vector<CellCode> boundary_cells(const CellCode& cell, int k) {
  int dim = cell.dimension();
  if (k < 0 || k > dim)
    fail(ErrorCode::InvalidK, "k = " + std::to_string(k) + " outside [0, " + std::to_string(dim) +
                                  "] for cell " + cell.word());
  int drop = dim - k;
  std::vector<int> star_pos;
  for (int i = 0; i < cell.ambient(); ++i)
    if (cell.star_mask() & (1u << i)) star_pos.push_back(i);

  std::vector<CellCode> out;
  std::vector<int> pick(static_cast<size_t>(dim), 0);
  for (int i = 0; i < drop; ++i) pick[static_cast<size_t>(dim - 1 - i)] = 1;
  // Walk all subsets of `drop` star positions via sorted permutation masks.
  std::sort(pick.begin(), pick.end());
  do {
    std::uint8_t removed = 0;
    for (int i = 0; i < dim; ++i)
      if (pick[static_cast<size_t>(i)]) removed |= std::uint8_t(1u << star_pos[static_cast<size_t>(i)]);
    std::uint8_t kept_stars = cell.star_mask() & std::uint8_t(~removed);
    // Every {0,1} assignment of the removed star positions.
    std::vector<int> removed_pos;
    for (int i = 0; i < cell.ambient(); ++i)
      if (removed & (1u << i)) removed_pos.push_back(i);
    for (std::uint32_t assign = 0; assign < (1u << drop); ++assign) {
      std::uint8_t bits = cell.bit_mask();
      for (int j = 0; j < drop; ++j)
        if (assign & (1u << j)) bits |= std::uint8_t(1u << removed_pos[static_cast<size_t>(j)]);
      out.push_back(CellCode::from_masks(cell.ambient(), kept_stars, bits));
    }
  } while (std::next_permutation(pick.begin(), pick.end()));

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CellCode> full_skeleton(int n, int k) {
  if (n < 1 || n > CellCode::kMaxAmbient)
    fail(ErrorCode::InvalidK, "ambient dimension must be in [1, 8], got " + std::to_string(n));
  if (k < 0 || k > n)
    fail(ErrorCode::InvalidK, "k = " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");

  std::vector<CellCode> out;
  std::vector<int> pick(static_cast<size_t>(n), 0);
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = 1;
  std::sort(pick.begin(), pick.end());
  do {
    std::uint8_t stars = 0;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<size_t>(i)]) stars |= std::uint8_t(1u << i);
    std::vector<int> fixed_pos;
    for (int i = 0; i < n; ++i)
      if (!(stars & (1u << i))) fixed_pos.push_back(i);
    int free = n - k;
    for (std::uint32_t assign = 0; assign < (1u << free); ++assign) {
      std::uint8_t bits = 0;
      for (int j = 0; j < free; ++j)
        if (assign & (1u << j)) bits |= std::uint8_t(1u << fixed_pos[static_cast<size_t>(j)]);
      out.push_back(CellCode::from_masks(n, stars, bits));
    }
  } while (std::next_permutation(pick.begin(), pick.end()));

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubesurf
