#pragma once

#include <utility>
#include <vector>

#include "mdzv/permutation.hpp"
#include "mdzv/term.hpp"

namespace mdzv {

/// Which generator indices form Galois-conjugate pairs, and in which order
/// the pairs bind to the independent summation variables. Each pair is
/// (base index, conjugate index); the pairs partition {1..k}.
class PairingStructure {
 public:
  static PairingStructure standard(int k);  // {(1,2)} or {(1,2),(3,4)}
  static PairingStructure of_pairs(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int k() const { return 2 * static_cast<int>(pairs_.size()); }

  /// Transposition swapping pair `index` with its conjugate.
  Permutation conjugation(int index) const;

  /// Involution exchanging the two pairs blockwise, base onto base and
  /// conjugate onto conjugate. Only defined for k = 4.
  Permutation cone_exchange() const;

  bool operator==(const PairingStructure&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

/// The group of index relabelings that leave every refined sum over a
/// conjugation-closed domain unchanged: generated by the pair
/// conjugations and (for k = 4) the pair exchange. Order 8 for k = 4,
/// order 2 for k = 2. Returned sorted by one-line form.
std::vector<Permutation> subgroup_H(const PairingStructure& pairing);

/// Two orders rho1, rho2 index equal sums exactly when rho2 = h*rho1 for
/// some h in H, since relabeling the summation variables by h permutes
/// the generator values before rho looks them up. This tests that.
bool same_orbit(const Permutation& rho1, const Permutation& rho2,
                const PairingStructure& pairing);

/// Lexicographically smallest one-line form among {h*rho : h in H}.
Permutation canonical_representative(const Permutation& rho,
                                     const PairingStructure& pairing);
Permutation canonical_representative(const Permutation& rho,
                                     const std::vector<Permutation>& group);

/// Replaces the term's order by its canonical representative; exponents
/// are unchanged. Idempotent.
RefinedTerm canonicalize(const RefinedTerm& term, const PairingStructure& pairing);

/// Partition of S_k into H-orbit classes {H*rho}; each class is sorted,
/// classes are ordered by their representative (their first element).
/// Three classes of size 8 for k = 4, one class for k = 2.
std::vector<std::vector<Permutation>> cosets(const PairingStructure& pairing);

}  // namespace mdzv
