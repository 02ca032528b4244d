#include "nsk/perm.hpp"

#include "nsk/error.hpp"

namespace nsk {

Perm4::Perm4(std::array<int, 4> image) {
  bool seen[4] = {false, false, false, false};
  for (std::size_t i = 0; i < 4; ++i) {
    int v = image[i];
    if (v < 0 || v > 3 || seen[v])
      throw Error(ErrorKind::Syntax, "not a permutation of 0123");
    seen[v] = true;
    image_[i] = static_cast<std::uint8_t>(v);
  }
}

Perm4 Perm4::parse(std::string_view digits) {
  if (digits.size() != 4)
    throw Error(ErrorKind::Syntax, "permutation must have 4 digits, got '" + std::string(digits) + "'");
  std::array<int, 4> image{};
  for (std::size_t i = 0; i < 4; ++i) {
    char c = digits[i];
    if (c < '0' || c > '3')
      throw Error(ErrorKind::Syntax, "bad permutation digit in '" + std::string(digits) + "'");
    image[i] = c - '0';
  }
  return Perm4(image);
}

Perm4 Perm4::inverse() const {
  Perm4 out;
  for (int i = 0; i < 4; ++i) out.image_[image_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return out;
}

Perm4 Perm4::compose(const Perm4& other) const {
  Perm4 out;
  for (std::size_t i = 0; i < 4; ++i) out.image_[i] = image_[other.image_[i]];
  return out;
}

int Perm4::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (image_[i] > image_[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (std::size_t i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
  return s;
}

}  // namespace nsk
