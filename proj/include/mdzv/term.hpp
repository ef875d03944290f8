#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mdzv/permutation.hpp"

namespace mdzv {

/// One refined value zeta^rho(e_1,...,e_k): `order[i]` is the generator
/// whose frequency enters the (i+1)-th denominator first, so the j-th
/// denominator is the sum of the first j generators of `order`, and the
/// k-th is the full sum. `order` read as one-line form is the permutation
/// rho; exponents are listed in denominator order.
struct RefinedTerm {
  std::vector<int> order;
  std::vector<int> exponents;

  RefinedTerm() = default;
  RefinedTerm(std::vector<int> order_, std::vector<int> exponents_);
  RefinedTerm(const Permutation& rho, std::vector<int> exponents_);

  int k() const { return static_cast<int>(order.size()); }
  int weight() const;
  Permutation perm() const { return Permutation::one_line(order); }

  /// Round-trips with parse_term: "(23):1,2,1,4".
  std::string str() const;

  auto operator<=>(const RefinedTerm&) const = default;
};

/// Accepts "<cycles>:<e1>,<e2>[,...]", e.g. "(1):1,3" or "(13)(24):2,2,2,2".
RefinedTerm parse_term(std::string_view text);

/// Integer-coefficient linear combination of refined terms. Zero
/// coefficients are never stored; coefficient arithmetic is checked
/// 64-bit.
class Combination {
 public:
  Combination() = default;

  void add(const RefinedTerm& term, std::int64_t coeff);
  std::int64_t coefficient(const RefinedTerm& term) const;

  Combination& operator+=(const Combination& other);
  Combination& operator-=(const Combination& other);
  Combination& operator*=(std::int64_t scale);
  friend Combination operator-(Combination a, const Combination& b) {
    a -= b;
    return a;
  }

  const std::map<RefinedTerm, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient_sum() const;

  /// Common arity of the stored terms; 0 when empty.
  int k() const;

  bool operator==(const Combination&) const = default;

 private:
  std::map<RefinedTerm, std::int64_t> terms_;
};

enum class MdzvVariant {
  Separated,  // "(1)(1)":  frequencies a1,b1 on the first chain, a2,b2 on the second
  Twisted,    // "(12)(1)": b1,a1 on the first chain, a2,b2 on the second
};

MdzvVariant parse_mdzv_variant(std::string_view text);  // "(1)(1)" | "(12)(1)"
std::string_view mdzv_variant_name(MdzvVariant v);

}  // namespace mdzv
