#include "mdzv/shuffle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mdzv/errors.hpp"

namespace mdzv {

Chain Chain::single_zeta(int n, int generator) {
  if (n < 1) throw std::invalid_argument("chain length must be positive");
  Chain c;
  c.slots.assign(static_cast<size_t>(n), 0);
  c.slots[0] = generator;
  return c;
}

Chain Chain::of_term(const RefinedTerm& term) {
  Chain c;
  for (size_t i = 0; i < term.order.size(); ++i) {
    c.slots.push_back(term.order[i]);
    for (int j = 1; j < term.exponents[i]; ++j) c.slots.push_back(0);
  }
  return c;
}

Chain Chain::shifted(int offset) const {
  Chain c = *this;
  for (int& s : c.slots)
    if (s != 0) s += offset;
  return c;
}

ShuffleWord ShuffleWord::interleave(const Chain& a, const Chain& b,
                                    const std::vector<std::uint8_t>& mask) {
  if (mask.size() != a.slots.size() + b.slots.size())
    throw std::invalid_argument("mask length must equal total slot count");
  ShuffleWord w;
  size_t ia = 0, ib = 0;
  for (std::uint8_t bit : mask) {
    if (bit == 0) {
      if (ia >= a.slots.size()) throw std::invalid_argument("mask exhausts first chain");
      w.slots.push_back({0, a.slots[ia++]});
    } else {
      if (ib >= b.slots.size()) throw std::invalid_argument("mask exhausts second chain");
      w.slots.push_back({1, b.slots[ib++]});
    }
  }
  return w;
}

std::vector<int> ShuffleWord::labels() const {
  std::vector<int> out;
  out.reserve(slots.size());
  for (const auto& s : slots) out.push_back(s.generator);
  return out;
}

ShuffleEnumerator::ShuffleEnumerator(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("chain lengths must be positive");
  mask_.assign(static_cast<size_t>(m + n), 0);
  std::fill(mask_.end() - n, mask_.end(), std::uint8_t{1});
}

std::optional<std::vector<std::uint8_t>> ShuffleEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return mask_;
  }
  if (!std::next_permutation(mask_.begin(), mask_.end())) {
    done_ = true;
    return std::nullopt;
  }
  return mask_;
}

ShuffleEnumerator enumerate_shuffles(int m, int n) { return {m, n}; }

std::int64_t shuffle_count(int m, int n) {
  std::int64_t r = 1;
  for (int i = 1; i <= m; ++i) {
    if (__builtin_mul_overflow(r, static_cast<std::int64_t>(n + i), &r))
      throw std::overflow_error("shuffle count overflow");
    r /= i;
  }
  return r;
}

RefinedTerm term_from_labels(const std::vector<int>& labels) {
  if (labels.empty() || labels.front() == 0)
    throw MalformedWord("topmost slot must carry a frequency");
  std::vector<int> order, exps;
  for (int lab : labels) {
    if (lab != 0) {
      order.push_back(lab);
      exps.push_back(1);
    } else {
      ++exps.back();
    }
  }
  // Normalize labels to 1..k preserving their relative values, so chains
  // built over any disjoint ranges extract to a well-formed term.
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranks(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), order[i]);
    ranks[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return RefinedTerm(std::move(ranks), std::move(exps));
}

RefinedTerm term_from_word(const ShuffleWord& word) {
  return term_from_labels(word.labels());
}

Collector::Collector(const PairingStructure& pairing, bool simplify)
    : pairing_(pairing), simplify_(simplify) {
  if (simplify_) group_ = subgroup_H(pairing_);
}

void Collector::add(const RefinedTerm& term, std::int64_t multiplicity) {
  if (!weight_) {
    weight_ = term.weight();
    arity_ = term.k();
  } else if (term.weight() != *weight_ || term.k() != *arity_) {
    throw MixedWeight("collected terms must share arity and weight");
  }
  if (simplify_) {
    acc_.add(RefinedTerm(canonical_representative(term.perm(), group_),
                         term.exponents),
             multiplicity);
  } else {
    acc_.add(term, multiplicity);
  }
}

Combination collect(const std::vector<RefinedTerm>& terms,
                    const PairingStructure& pairing, bool simplify) {
  Collector c(pairing, simplify);
  for (const auto& t : terms) c.add(t);
  return c.result();
}

Combination shuffle_product_chains(const Chain& a, const Chain& b,
                                   const PairingStructure& pairing,
                                   bool simplify) {
  std::set<int> seen;
  for (int s : a.slots)
    if (s != 0) seen.insert(s);
  for (int s : b.slots)
    if (s != 0 && !seen.insert(s).second)
      throw OverlapError("chains share generator index " + std::to_string(s));

  Collector out(pairing, simplify);
  ShuffleEnumerator masks(a.size(), b.size());
  while (auto mask = masks.next())
    out.add(term_from_word(ShuffleWord::interleave(a, b, *mask)));
  return out.result();
}

Combination shuffle_product(const RefinedTerm& a, const RefinedTerm& b,
                            const PairingStructure& pairing, bool simplify) {
  return shuffle_product_chains(Chain::of_term(a),
                                Chain::of_term(b).shifted(a.k()), pairing,
                                simplify);
}

}  // namespace mdzv
