#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace nsk {

/// A permutation of the tetrahedron vertex labels {0,1,2,3}.
class Perm4 {
 public:
  constexpr Perm4() : image_{0, 1, 2, 3} {}

  /// Throws Error(Syntax) unless `image` is a permutation of 0..3.
  explicit Perm4(std::array<int, 4> image);

  /// Parses the 4-character digit form used in .tri files, e.g. "1023".
  static Perm4 parse(std::string_view digits);

  constexpr int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }

  Perm4 inverse() const;
  /// (*this ∘ other)(i) = (*this)[other[i]]
  Perm4 compose(const Perm4& other) const;
  /// +1 for even permutations, -1 for odd ones.
  int sign() const;
  bool is_odd() const { return sign() < 0; }
  bool is_identity() const { return *this == Perm4{}; }

  std::string str() const;

  friend bool operator==(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> image_;
};

}  // namespace nsk
