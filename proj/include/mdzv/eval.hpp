#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mdzv/errors.hpp"
#include "mdzv/numfield.hpp"
#include "mdzv/symmetry.hpp"
#include "mdzv/term.hpp"

namespace mdzv {

enum class Summation {
  Compensated,  // Neumaier accumulation per component (default)
  Ordered,      // plain accumulation in the fixed order
};

struct EvalContext {
  TruncationSet trunc;
  PairingStructure pairing = PairingStructure::standard(4);
  Summation policy = Summation::Compensated;
  int threads = 1;
};

/// Truncated lattice sum of one refined term: one cone variable per
/// generator pair (last variable innermost), conjugates derived,
/// denominators by prefix sums in the term's order. Assignments run in
/// descending |embedding|, ties by descending coordinates. Exact zero
/// denominators raise SingularTerm (reachable only with the boundary ray
/// included in the set).
template <class C>
C eval_term(const RefinedTerm& term, const EvalContext& ctx);

/// Coefficient-weighted sum of eval_term over the combination. Terms are
/// evaluated independently (optionally across ctx.threads workers) and
/// merged in term order, so the result does not depend on the worker
/// count.
template <class C>
C eval_combination(const Combination& comb, const EvalContext& ctx);

/// Product of two truncated depth-one refined sums over the same set.
template <class C>
C eval_product_lhs(const RefinedTerm& a, const RefinedTerm& b,
                   const EvalContext& ctx);

/// Truncated sum of 1/N(x)^n.
template <class C>
C eval_norm_zeta(int n, const EvalContext& ctx);

/// The direct double sums the two self-shuffle variants refine:
/// 1/(N(x) N(x+y)^2) for the separated placement, 1/(conj(x) y N(x+y)^2)
/// for the twisted one.
template <class C>
C eval_mdzv_lhs(MdzvVariant variant, const EvalContext& ctx);

// ---------------------------------------------------------------------
// Identity verification

struct NormZetaLhs { int n = 2; };                  // sum 1/N^n
struct NormZetaProductLhs { int n1 = 2, n2 = 2; };  // (sum 1/N^n1)(sum 1/N^n2)
struct MdzvSelfieLhs { MdzvVariant variant = MdzvVariant::Separated; };
struct MdzvSelfieDifferenceLhs {};                  // separated minus twisted
struct RefinedProductLhs { RefinedTerm a, b; };     // product of two k=2 sums
struct TermLhs { RefinedTerm term; };               // a single refined sum

using LhsSpec = std::variant<NormZetaLhs, NormZetaProductLhs, MdzvSelfieLhs,
                             MdzvSelfieDifferenceLhs, RefinedProductLhs, TermLhs>;

template <class C>
C eval_lhs(const LhsSpec& lhs, const EvalContext& ctx);

struct EvalReport {
  std::complex<double> lhs{}, rhs{};
  std::string lhs_str, rhs_str;  // full-precision renderings
  double abs_err = 0, rel_err = 0;
  bool pass = false;
  std::size_t term_count = 0;   // refined terms on the right-hand side
  std::size_t point_count = 0;  // lattice points in the truncation set
  double radius = 0;
  double tol = 0;
  double seconds = 0;
};

/// Evaluates both sides over the context's truncation set and compares at
/// relative tolerance `tol` (two exact zeros pass). `extended` switches
/// the whole computation to ~50-digit software floats.
EvalReport verify(const LhsSpec& lhs, const Combination& rhs,
                  const EvalContext& ctx, double tol, bool extended = false);

}  // namespace mdzv
