#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nsk/skeleton.hpp"
#include "nsk/triangulation.hpp"

namespace nsk {

/// Dense matrix over the two-element field, rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * words_ + c / 64] >> (c % 64)) & 1u; }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  void set(std::size_t r, std::size_t c, bool value) {
    if (get(r, c) != value) flip(r, c);
  }

  std::size_t rank() const;
  bool is_zero() const;
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Mod-2 cellular chain complex C3 -> C2 -> C1 -> C0 of the triangulation.
/// Column j of `d[k]` is the boundary of the j-th k-cell (cells are orbits).
struct ChainComplexZ2 {
  Gf2Matrix d1;  // v x e
  Gf2Matrix d2;  // e x f
  Gf2Matrix d3;  // f x t
};

ChainComplexZ2 build_chain_complex(const Triangulation& tri, const SkeletonIndex& sk);

struct TreeCertificate {
  std::vector<std::size_t> tree_edges;  // edge orbit ids, in the order they were added
  std::size_t e_tree = 0;
  std::size_t e_non_tree = 0;
};

/// Breadth-first maximal tree of the 1-skeleton starting from vertex orbit 0,
/// scanning incident edges by increasing edge orbit index. Loop edges never
/// enter the tree.
TreeCertificate spanning_tree_bound(const SkeletonIndex& sk);

/// Same, scanning incident edges in the order given by `edge_priority`
/// (a permutation of the edge orbit ids).
TreeCertificate spanning_tree_bound(const SkeletonIndex& sk, std::span<const std::size_t> edge_priority);

struct Z2HomologyProfile {
  std::size_t rank_h1 = 0;
  std::array<std::size_t, 4> betti_mod2{};
  std::array<std::size_t, 3> boundary_ranks{};  // rank d1, d2, d3
};

Z2HomologyProfile h1_z2_rank(const Triangulation& tri, const SkeletonIndex& sk);

}  // namespace nsk
