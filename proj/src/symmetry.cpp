#include "mdzv/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mdzv {

PairingStructure PairingStructure::standard(int k) {
  if (k == 2) return of_pairs({{1, 2}});
  if (k == 4) return of_pairs({{1, 2}, {3, 4}});
  throw std::invalid_argument("pairing defined for k = 2 or 4");
}

PairingStructure PairingStructure::of_pairs(std::vector<std::pair<int, int>> pairs) {
  const int k = 2 * static_cast<int>(pairs.size());
  if (k != 2 && k != 4) throw std::invalid_argument("pairing needs 1 or 2 pairs");
  std::vector<bool> seen(static_cast<size_t>(k), false);
  for (auto [a, b] : pairs) {
    for (int v : {a, b}) {
      if (v < 1 || v > k || seen[static_cast<size_t>(v) - 1])
        throw std::invalid_argument("pairs must partition 1..k");
      seen[static_cast<size_t>(v) - 1] = true;
    }
  }
  PairingStructure p;
  p.pairs_ = std::move(pairs);
  return p;
}

Permutation PairingStructure::conjugation(int index) const {
  auto [a, b] = pairs_.at(static_cast<size_t>(index));
  std::vector<int> line(static_cast<size_t>(k()));
  for (int i = 1; i <= k(); ++i) line[static_cast<size_t>(i) - 1] = i;
  std::swap(line[static_cast<size_t>(a) - 1], line[static_cast<size_t>(b) - 1]);
  return Permutation::one_line(std::move(line));
}

Permutation PairingStructure::cone_exchange() const {
  if (pairs_.size() != 2)
    throw std::invalid_argument("cone exchange needs two pairs");
  std::vector<int> line(4);
  auto [a1, b1] = pairs_[0];
  auto [a2, b2] = pairs_[1];
  line[static_cast<size_t>(a1) - 1] = a2;
  line[static_cast<size_t>(a2) - 1] = a1;
  line[static_cast<size_t>(b1) - 1] = b2;
  line[static_cast<size_t>(b2) - 1] = b1;
  return Permutation::one_line(std::move(line));
}

std::vector<Permutation> subgroup_H(const PairingStructure& pairing) {
  std::vector<Permutation> gens;
  for (size_t i = 0; i < pairing.pairs().size(); ++i)
    gens.push_back(pairing.conjugation(static_cast<int>(i)));
  if (pairing.k() == 4) gens.push_back(pairing.cone_exchange());

  std::set<Permutation> closure{Permutation(pairing.k())};
  std::vector<Permutation> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& h : frontier)
      for (const auto& g : gens) {
        Permutation c = g * h;
        if (closure.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

bool same_orbit(const Permutation& rho1, const Permutation& rho2,
                const PairingStructure& pairing) {
  // rho2 * rho1^{-1} must be a relabeling in H.
  const Permutation q = rho2 * rho1.inverse();
  for (const auto& h : subgroup_H(pairing))
    if (h == q) return true;
  return false;
}

Permutation canonical_representative(const Permutation& rho,
                                     const PairingStructure& pairing) {
  return canonical_representative(rho, subgroup_H(pairing));
}

Permutation canonical_representative(const Permutation& rho,
                                     const std::vector<Permutation>& group) {
  Permutation best = rho;
  for (const auto& h : group) best = std::min(best, h * rho);
  return best;
}

RefinedTerm canonicalize(const RefinedTerm& term, const PairingStructure& pairing) {
  if (term.k() != pairing.k())
    throw std::invalid_argument("term arity does not match pairing");
  return RefinedTerm(canonical_representative(term.perm(), pairing),
                     term.exponents);
}

std::vector<std::vector<Permutation>> cosets(const PairingStructure& pairing) {
  std::vector<std::vector<Permutation>> classes;
  std::set<Permutation> assigned;
  for (const auto& rho : symmetric_group(pairing.k())) {
    if (assigned.count(rho)) continue;
    std::vector<Permutation> cls;
    for (const auto& h : subgroup_H(pairing)) {
      Permutation m = h * rho;
      if (assigned.insert(m).second) cls.push_back(m);
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace mdzv
