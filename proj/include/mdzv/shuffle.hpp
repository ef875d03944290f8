#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdzv/symmetry.hpp"
#include "mdzv/term.hpp"

namespace mdzv {

/// Ordered integration variables, largest first. slots[i] is the generator
/// whose frequency sits on that variable, or 0 for an unlabeled slot.
struct Chain {
  std::vector<int> slots;

  int size() const { return static_cast<int>(slots.size()); }

  /// n slots with a single frequency on top: the integral chain of a
  /// depth-one value of weight n.
  static Chain single_zeta(int n, int generator);

  /// The chain whose extraction reproduces `term`: generator order[i]
  /// sits at slot 1 + e_1 + ... + e_{i-1}.
  static Chain of_term(const RefinedTerm& term);

  /// Shift every generator label by `offset` (relabeling for products).
  Chain shifted(int offset) const;
};

/// An interleaving of two chains. Restricted to either origin it
/// reproduces that chain's slot order.
struct ShuffleWord {
  struct Slot {
    int origin;     // 0 = first chain, 1 = second
    int generator;  // 0 = unlabeled
  };
  std::vector<Slot> slots;

  static ShuffleWord interleave(const Chain& a, const Chain& b,
                                const std::vector<std::uint8_t>& mask);
  std::vector<int> labels() const;
};

/// Streams the C(m+n, m) interleaving patterns of an m-chain and an
/// n-chain as binary masks (0 = first chain), in ascending lexicographic
/// mask order.
class ShuffleEnumerator {
 public:
  ShuffleEnumerator(int m, int n);
  std::optional<std::vector<std::uint8_t>> next();

 private:
  std::vector<std::uint8_t> mask_;
  bool done_ = false;
  bool started_ = false;
};

ShuffleEnumerator enumerate_shuffles(int m, int n);
std::int64_t shuffle_count(int m, int n);  // C(m+n, m), overflow-checked

/// Cumulative-sum extraction: walking the word from the top, every slot
/// contributes one reciprocal of the sum of all frequencies seen so far;
/// equal consecutive denominators merge into one exponent. Throws
/// MalformedWord when the top slot is unlabeled.
RefinedTerm term_from_word(const ShuffleWord& word);
RefinedTerm term_from_labels(const std::vector<int>& labels);

/// Multiplicity count with optional orbit canonicalization. All inputs
/// must share arity and weight (MixedWeight otherwise); the coefficient
/// sum equals the input count.
Combination collect(const std::vector<RefinedTerm>& terms,
                    const PairingStructure& pairing, bool simplify);

/// Incremental form of collect for streamed consumption.
class Collector {
 public:
  Collector(const PairingStructure& pairing, bool simplify);
  void add(const RefinedTerm& term, std::int64_t multiplicity = 1);
  const Combination& result() const { return acc_; }

 private:
  PairingStructure pairing_;
  std::vector<Permutation> group_;
  bool simplify_;
  std::optional<int> weight_, arity_;
  Combination acc_;
};

/// Expands a product of two refined values into refined terms: rebuilds
/// both canonical chains over the disjoint label ranges given and maps
/// every interleaving through term_from_word. Throws OverlapError when
/// the chains' label sets intersect.
Combination shuffle_product_chains(const Chain& a, const Chain& b,
                                   const PairingStructure& pairing,
                                   bool simplify);

/// Same, for plain terms: the left factor keeps its generator indices,
/// the right factor's are shifted past them.
Combination shuffle_product(const RefinedTerm& a, const RefinedTerm& b,
                            const PairingStructure& pairing, bool simplify);

}  // namespace mdzv
