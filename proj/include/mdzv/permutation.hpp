#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mdzv {

/// Permutation of {1..k} in one-line form. Composition follows
/// (a*b)(i) = a(b(i)), i.e. b acts first. Text form is disjoint-cycle
/// notation without whitespace: "(1)" for the identity, "(13)(24)", each
/// cycle starting at its smallest element, cycles ordered by that element.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  static Permutation one_line(std::vector<int> images);
  static Permutation parse(std::string_view cycles, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  std::string str() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

std::vector<Permutation> symmetric_group(int degree);

}  // namespace mdzv
