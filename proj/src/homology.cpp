#include "nsk/homology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "nsk/error.hpp"

namespace nsk {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

std::size_t Gf2Matrix::rank() const {
  std::vector<std::uint64_t> m = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * words_ + w] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * words_),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words_),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * words_));
    for (std::size_t r = rank + 1; r < rows_; ++r)
      if (m[r * words_ + w] & bit)
        for (std::size_t k = w; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
    ++rank;
  }
  return rank;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t x) { return x == 0; });
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::Internal, "GF(2) product of incompatible shapes");
  Gf2Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(r, k))
        for (std::size_t w = 0; w < rhs.words_; ++w) out.data_[r * out.words_ + w] ^= rhs.data_[k * rhs.words_ + w];
  return out;
}

ChainComplexZ2 build_chain_complex(const Triangulation& tri, const SkeletonIndex& sk) {
  ChainComplexZ2 cc{Gf2Matrix(sk.v(), sk.e()), Gf2Matrix(sk.e(), sk.f()), Gf2Matrix(sk.f(), sk.t())};

  // A loop edge has both endpoints in one orbit and contributes zero.
  for (std::size_t e = 0; e < sk.e(); ++e) {
    cc.d1.flip(sk.edge_endpoints[e][0], e);
    cc.d1.flip(sk.edge_endpoints[e][1], e);
  }
  // Repeated edges in a face boundary cancel in pairs.
  for (std::size_t f = 0; f < sk.f(); ++f) {
    const FaceRef rep = sk.face_orbits[f][0];
    auto vs = face_vertices(rep.face);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        cc.d2.flip(sk.edge_of[rep.tet][static_cast<std::size_t>(edge_index(vs[i], vs[j]))], f);
  }
  for (std::size_t a = 0; a < tri.size(); ++a)
    for (int f = 0; f < 4; ++f) cc.d3.flip(sk.face_of[a][static_cast<std::size_t>(f)], a);
  return cc;
}

TreeCertificate spanning_tree_bound(const SkeletonIndex& sk) {
  std::vector<std::size_t> order(sk.e());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return spanning_tree_bound(sk, order);
}

TreeCertificate spanning_tree_bound(const SkeletonIndex& sk, std::span<const std::size_t> edge_priority) {
  if (edge_priority.size() != sk.e()) throw Error(ErrorKind::Internal, "edge priority must list every edge orbit");
  std::vector<std::size_t> rank_of(sk.e());
  for (std::size_t i = 0; i < edge_priority.size(); ++i) rank_of[edge_priority[i]] = i;

  std::vector<std::vector<std::size_t>> incident(sk.v());
  for (std::size_t e = 0; e < sk.e(); ++e) {
    auto [u, w] = sk.edge_endpoints[e];
    if (u == w) continue;
    incident[u].push_back(e);
    incident[w].push_back(e);
  }
  for (auto& list : incident)
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) { return rank_of[x] < rank_of[y]; });

  TreeCertificate cert;
  std::vector<bool> seen(sk.v(), false);
  std::queue<std::size_t> queue;
  if (sk.v() > 0) {
    seen[0] = true;
    queue.push(0);
  }
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (std::size_t e : incident[u]) {
      auto [x, y] = sk.edge_endpoints[e];
      std::size_t other = x == u ? y : x;
      if (seen[other]) continue;
      seen[other] = true;
      cert.tree_edges.push_back(e);
      queue.push(other);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorKind::Internal, "1-skeleton is disconnected");
  cert.e_tree = cert.tree_edges.size();
  cert.e_non_tree = sk.e() - cert.e_tree;
  return cert;
}

Z2HomologyProfile h1_z2_rank(const Triangulation& tri, const SkeletonIndex& sk) {
  ChainComplexZ2 cc = build_chain_complex(tri, sk);
  Z2HomologyProfile out;
  out.boundary_ranks = {cc.d1.rank(), cc.d2.rank(), cc.d3.rank()};
  const auto [r1, r2, r3] = out.boundary_ranks;
  out.betti_mod2 = {sk.v() - r1, sk.e() - r1 - r2, sk.f() - r2 - r3, sk.t() - r3};
  out.rank_h1 = out.betti_mod2[1];
  return out;
}

}  // namespace nsk
