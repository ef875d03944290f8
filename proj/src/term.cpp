#include "mdzv/term.hpp"

#include <numeric>
#include <stdexcept>

#include "mdzv/errors.hpp"

namespace mdzv {

namespace {

void validate(const std::vector<int>& order, const std::vector<int>& exponents) {
  if (order.empty() || order.size() != exponents.size())
    throw std::invalid_argument("term needs matching non-empty order and exponents");
  const int k = static_cast<int>(order.size());
  std::vector<bool> seen(static_cast<size_t>(k), false);
  for (int g : order) {
    if (g < 1 || g > k || seen[static_cast<size_t>(g) - 1])
      throw std::invalid_argument("order must be a permutation of 1..k");
    seen[static_cast<size_t>(g) - 1] = true;
  }
  for (int e : exponents)
    if (e < 1) throw std::invalid_argument("exponents must be positive");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow");
  return r;
}

}  // namespace

RefinedTerm::RefinedTerm(std::vector<int> order_, std::vector<int> exponents_)
    : order(std::move(order_)), exponents(std::move(exponents_)) {
  validate(order, exponents);
}

RefinedTerm::RefinedTerm(const Permutation& rho, std::vector<int> exponents_)
    : RefinedTerm(rho.images(), std::move(exponents_)) {}

int RefinedTerm::weight() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::string RefinedTerm::str() const {
  std::string out = perm().str();
  out += ':';
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents[i]);
  }
  return out;
}

RefinedTerm parse_term(std::string_view text) {
  const size_t colon = text.rfind(':');
  if (colon == std::string_view::npos)
    throw ParseError("term must look like \"<cycles>:<e1>,<e2>,...\"");
  const std::string_view exp_part = text.substr(colon + 1);
  std::vector<int> exps;
  size_t pos = 0;
  while (pos <= exp_part.size()) {
    size_t comma = exp_part.find(',', pos);
    if (comma == std::string_view::npos) comma = exp_part.size();
    const std::string_view tok = exp_part.substr(pos, comma - pos);
    if (tok.empty()) throw ParseError("empty exponent in term");
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("bad exponent in term");
      v = v * 10 + (c - '0');
      if (v > 1000000) throw ParseError("exponent out of range");
    }
    exps.push_back(v);
    if (comma == exp_part.size()) break;
    pos = comma + 1;
  }
  const int k = static_cast<int>(exps.size());
  if (k != 2 && k != 4)
    throw ParseError("term must carry 2 or 4 exponents");
  Permutation rho = Permutation::parse(text.substr(0, colon), k);
  for (int e : exps)
    if (e < 1) throw ParseError("exponents must be positive");
  return RefinedTerm(rho, std::move(exps));
}

void Combination::add(const RefinedTerm& term, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(term, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Combination::coefficient(const RefinedTerm& term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? 0 : it->second;
}

Combination& Combination::operator+=(const Combination& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

Combination& Combination::operator-=(const Combination& other) {
  for (const auto& [t, c] : other.terms_) add(t, checked_mul(c, -1));
  return *this;
}

Combination& Combination::operator*=(std::int64_t scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c = checked_mul(c, scale);
  return *this;
}

std::int64_t Combination::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& [t, c] : terms_) s = checked_add(s, c);
  return s;
}

int Combination::k() const {
  return terms_.empty() ? 0 : terms_.begin()->first.k();
}

MdzvVariant parse_mdzv_variant(std::string_view text) {
  if (text == "(1)(1)") return MdzvVariant::Separated;
  if (text == "(12)(1)") return MdzvVariant::Twisted;
  throw ParseError("variant must be (1)(1) or (12)(1)");
}

std::string_view mdzv_variant_name(MdzvVariant v) {
  return v == MdzvVariant::Separated ? "(1)(1)" : "(12)(1)";
}

}  // namespace mdzv
