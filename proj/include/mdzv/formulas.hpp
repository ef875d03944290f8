#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdzv/eval.hpp"
#include "mdzv/shuffle.hpp"

namespace mdzv {

/// Self-shuffle of the weight-n depth-one value: interleaves the two
/// embedding chains (frequency on the top slot of each) and collects with
/// the k=2 pairing. Coefficient sum C(2n, n).
Combination self_shuffle_zeta(int n, bool simplify = true);

/// Generator order (a1, b1, a2, b2) with pairs {(1,3),(2,4)}.
PairingStructure mdzv_pairing();

/// Self-shuffle of the two depth-two integral representations; 20 raw
/// terms, both raw and orbit-collected forms.
Combination self_shuffle_mdzv(MdzvVariant variant, bool simplify = true);

/// self_shuffle_mdzv(separated) minus self_shuffle_mdzv(twisted).
Combination corollary_difference(bool simplify = true);

/// Expands both depth-one factors, distributes the pairwise shuffle
/// products with the standard k=4 pairing, collects. Coefficient sum
/// C(2n1,n1)*C(2n2,n2)*C(2n1+2n2,2n1).
Combination product_zeta(int n1, int n2);

// ---------------------------------------------------------------------
// Rendering

enum class NotationStyle { Comma, Semicolon };

/// "2\zeta^{(1)}(2,2)+4\zeta^{(1)}(1,3)"; empty combination renders "0".
/// Terms ordered by permutation, then by descending exponents.
std::string to_latex(const Combination& c, NotationStyle style = NotationStyle::Comma);

/// Same ordering in plain UTF-8.
std::string to_text(const Combination& c, NotationStyle style = NotationStyle::Comma);

/// {"k":4,"pairing":[[1,2],[3,4]],"terms":[{"perm":"(23)","exponents":[...],"coeff":n},...]}
std::string to_json(const Combination& c, const PairingStructure& pairing);
std::pair<Combination, PairingStructure> from_json(std::string_view text);

// ---------------------------------------------------------------------
// Identity catalog

struct NamedIdentity {
  std::string name;
  std::string title;
  LhsSpec lhs;
  PairingStructure pairing = PairingStructure::standard(4);
  Combination rhs;
};

const std::vector<NamedIdentity>& identity_catalog();

/// Resolves a catalog name, or a parameterized orbit-invariance check of
/// the form "coset:<rho>:<h>:<e1,e2,e3,e4>" whose left side is the
/// relabeled sum and whose right side is the plain one. Throws
/// UnknownIdentity.
NamedIdentity find_identity(std::string_view name);

// ---------------------------------------------------------------------
// Published-table comparison

/// One addend exactly as printed in the published tables (coefficient,
/// order label, exponent list); exponent lists of the wrong arity are
/// kept verbatim and flagged by the diff.
struct PrintedTerm {
  std::string perm;
  std::vector<int> exponents;
  std::int64_t coeff = 0;
};

struct PrintedForm {
  std::vector<PrintedTerm> terms;
};

/// Published right-hand side transcribed for the named identity, if the
/// tables carry one.
std::optional<PrintedForm> printed_reference(std::string_view identity_name);

struct DiffEntry {
  RefinedTerm term;                    // canonical form
  std::optional<std::int64_t> computed;
  std::optional<std::int64_t> printed;
};

struct DiffReport {
  std::vector<DiffEntry> mismatched;
  std::vector<DiffEntry> only_computed;
  std::vector<DiffEntry> only_printed;
  std::vector<PrintedTerm> malformed;          // arity/weight defects, kept verbatim
  std::vector<PrintedTerm> duplicated;         // same printed term listed twice
  std::vector<std::pair<std::string, std::string>> aliases;  // printed label -> canonical

  bool clean() const {
    return mismatched.empty() && only_computed.empty() && only_printed.empty() &&
           malformed.empty();
  }
};

/// Canonicalizes both sides with the same pairing and lists every
/// coefficient difference; nothing is corrected silently.
DiffReport reference_diff(const Combination& computed, const PrintedForm& printed,
                          const PairingStructure& pairing);

std::string render(const DiffReport& report);

}  // namespace mdzv
