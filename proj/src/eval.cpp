#include "mdzv/eval.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

namespace mdzv {

namespace mp = boost::multiprecision;
using complex50 = mp::cpp_complex_50;

namespace {

template <class R>
struct Accumulator {  // Neumaier error-free accumulation
  R sum{0}, comp{0};
  bool compensated = true;

  void add(const R& v) {
    if (!compensated) {
      sum += v;
      return;
    }
    using std::fabs;
    const R t = sum + v;
    if (fabs(sum) >= fabs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  R value() const { return compensated ? sum + comp : sum; }
};

template <class C>
struct ComplexAccumulator {
  using R = typename C::value_type;
  Accumulator<R> re, im;

  explicit ComplexAccumulator(Summation policy) {
    re.compensated = im.compensated = (policy == Summation::Compensated);
  }
  void add(const C& v) {
    re.add(v.real());
    im.add(v.imag());
  }
  C value() const { return C(re.value(), im.value()); }
};

template <class C>
C int_pow(C base, int e) {
  C r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

template <class C>
void generator_values(const PairingStructure& pairing, const std::vector<C>& vars,
                      std::vector<C>& out) {
  out.assign(static_cast<size_t>(pairing.k()), C(0));
  for (size_t p = 0; p < pairing.pairs().size(); ++p) {
    const auto [base, conj] = pairing.pairs()[p];
    out[static_cast<size_t>(base) - 1] = vars[p];
    out[static_cast<size_t>(conj) - 1] = C(vars[p].real(), -vars[p].imag());
  }
}

template <class C>
C term_summand(const RefinedTerm& term, const std::vector<C>& gens) {
  C prefix(0), denom(1);
  for (size_t j = 0; j < term.order.size(); ++j) {
    prefix += gens[static_cast<size_t>(term.order[j]) - 1];
    if (prefix == C(0))
      throw SingularTerm("denominator vanished in term " + term.str());
    denom *= int_pow(prefix, term.exponents[j]);
  }
  return C(1) / denom;
}

// Embeddings in summation order: descending |embedding| with ties broken
// by descending coordinates (the stored ascending order walked
// backwards).
template <class C>
std::vector<C> embedded_points(const TruncationSet& trunc) {
  std::vector<C> out;
  out.reserve(trunc.elems.size());
  for (auto it = trunc.elems.rbegin(); it != trunc.elems.rend(); ++it)
    out.push_back(embed<C>(*it, trunc.field));
  return out;
}

// Fixed assignment order over the points above; for two variables the
// second one is the inner loop.
template <class C, class F>
void for_each_assignment(const EvalContext& ctx, size_t nvars, F&& f) {
  const std::vector<C> points = embedded_points<C>(ctx.trunc);
  std::vector<C> vars(nvars);
  if (nvars == 1) {
    for (const C& x : points) {
      vars[0] = x;
      f(vars);
    }
  } else {
    for (const C& x : points) {
      vars[0] = x;
      for (const C& y : points) {
        vars[1] = y;
        f(vars);
      }
    }
  }
}

}  // namespace

template <class C>
C eval_term(const RefinedTerm& term, const EvalContext& ctx) {
  if (term.k() != ctx.pairing.k())
    throw std::invalid_argument("term arity does not match context pairing");
  ComplexAccumulator<C> acc(ctx.policy);
  std::vector<C> gens;
  for_each_assignment<C>(ctx, ctx.pairing.pairs().size(),
                         [&](const std::vector<C>& vars) {
                           generator_values(ctx.pairing, vars, gens);
                           acc.add(term_summand(term, gens));
                         });
  return acc.value();
}

template <class C>
C eval_combination(const Combination& comb, const EvalContext& ctx) {
  std::vector<std::pair<RefinedTerm, std::int64_t>> items(comb.terms().begin(),
                                                          comb.terms().end());
  std::vector<C> values(items.size());
  if (ctx.threads > 1 && items.size() > 1) {
    std::vector<std::future<void>> jobs;
    std::atomic<size_t> cursor{0};
    const int workers =
        std::min<int>(ctx.threads, static_cast<int>(items.size()));
    for (int w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&] {
        for (size_t i = cursor.fetch_add(1); i < items.size();
             i = cursor.fetch_add(1))
          values[i] = eval_term<C>(items[i].first, ctx);
      }));
    for (auto& j : jobs) j.get();
  } else {
    for (size_t i = 0; i < items.size(); ++i)
      values[i] = eval_term<C>(items[i].first, ctx);
  }
  ComplexAccumulator<C> acc(ctx.policy);
  for (size_t i = 0; i < items.size(); ++i)
    acc.add(values[i] * C(typename C::value_type(items[i].second)));
  return acc.value();
}

namespace {

EvalContext depth_one_context(const EvalContext& ctx) {
  EvalContext c2 = ctx;
  c2.pairing = PairingStructure::standard(2);
  return c2;
}

}  // namespace

template <class C>
C eval_product_lhs(const RefinedTerm& a, const RefinedTerm& b,
                   const EvalContext& ctx) {
  if (a.k() != 2 || b.k() != 2)
    throw std::invalid_argument("factors must be depth-one terms");
  const EvalContext c2 = depth_one_context(ctx);
  return eval_term<C>(a, c2) * eval_term<C>(b, c2);
}

template <class C>
C eval_norm_zeta(int n, const EvalContext& ctx) {
  using R = typename C::value_type;
  ComplexAccumulator<C> acc(ctx.policy);
  const auto& elems = ctx.trunc.elems;
  for (auto it = elems.rbegin(); it != elems.rend(); ++it)
    acc.add(C(R(1) / int_pow(R(norm(*it, ctx.trunc.field)), n)));
  return acc.value();
}

template <class C>
C eval_mdzv_lhs(MdzvVariant variant, const EvalContext& ctx) {
  ComplexAccumulator<C> acc(ctx.policy);
  const std::vector<C> points = embedded_points<C>(ctx.trunc);
  const auto conj_of = [](const C& z) { return C(z.real(), -z.imag()); };
  for (const C& x : points) {
    const C nx = x * conj_of(x);
    for (const C& y : points) {
      const C s = x + y;
      const C ns = s * conj_of(s);
      C denom;
      if (variant == MdzvVariant::Separated)
        denom = nx * ns * ns;
      else
        denom = conj_of(x) * y * ns * ns;
      if (denom == C(0)) throw SingularTerm("denominator vanished in direct sum");
      acc.add(C(1) / denom);
    }
  }
  return acc.value();
}

template <class C>
C eval_lhs(const LhsSpec& lhs, const EvalContext& ctx) {
  return std::visit(
      [&](const auto& spec) -> C {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, NormZetaLhs>) {
          return eval_norm_zeta<C>(spec.n, ctx);
        } else if constexpr (std::is_same_v<T, NormZetaProductLhs>) {
          return eval_norm_zeta<C>(spec.n1, ctx) * eval_norm_zeta<C>(spec.n2, ctx);
        } else if constexpr (std::is_same_v<T, MdzvSelfieLhs>) {
          return eval_mdzv_lhs<C>(spec.variant, ctx);
        } else if constexpr (std::is_same_v<T, MdzvSelfieDifferenceLhs>) {
          return eval_mdzv_lhs<C>(MdzvVariant::Separated, ctx) -
                 eval_mdzv_lhs<C>(MdzvVariant::Twisted, ctx);
        } else if constexpr (std::is_same_v<T, RefinedProductLhs>) {
          return eval_product_lhs<C>(spec.a, spec.b, ctx);
        } else {
          EvalContext c = ctx;
          if (spec.term.k() == 2) c = depth_one_context(ctx);
          return eval_term<C>(spec.term, c);
        }
      },
      lhs);
}

namespace {

template <class C>
std::string render(const C& z, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << z.real();
  const auto im = z.imag();
  if (im < 0)
    os << " - " << -im << "i";
  else
    os << " + " << im << "i";
  return os.str();
}

template <class C>
EvalReport verify_impl(const LhsSpec& lhs, const Combination& rhs,
                       const EvalContext& ctx, double tol, int digits) {
  const auto t0 = std::chrono::steady_clock::now();
  const C l = eval_lhs<C>(lhs, ctx);
  const C r = eval_combination<C>(rhs, ctx);
  const auto t1 = std::chrono::steady_clock::now();

  using R = typename C::value_type;
  using std::abs;
  const R a = abs(l - r);
  const R scale = std::max<R>(abs(l), abs(r));
  EvalReport rep;
  rep.lhs = {static_cast<double>(l.real()), static_cast<double>(l.imag())};
  rep.rhs = {static_cast<double>(r.real()), static_cast<double>(r.imag())};
  rep.lhs_str = render(l, digits);
  rep.rhs_str = render(r, digits);
  rep.abs_err = static_cast<double>(a);
  rep.rel_err = scale > 0 ? static_cast<double>(a / scale) : 0.0;
  rep.pass = scale > 0 ? (a <= R(tol) * scale) : true;
  rep.term_count = rhs.size();
  rep.point_count = ctx.trunc.size();
  rep.radius = ctx.trunc.radius;
  rep.tol = tol;
  rep.seconds = std::chrono::duration<double>(t1 - t0).count();
  return rep;
}

}  // namespace

EvalReport verify(const LhsSpec& lhs, const Combination& rhs,
                  const EvalContext& ctx, double tol, bool extended) {
  if (extended)
    return verify_impl<complex50>(lhs, rhs, ctx, tol, 50);
  return verify_impl<std::complex<double>>(lhs, rhs, ctx, tol, 17);
}

#define MDZV_INSTANTIATE(C)                                                  \
  template C eval_term<C>(const RefinedTerm&, const EvalContext&);           \
  template C eval_combination<C>(const Combination&, const EvalContext&);    \
  template C eval_product_lhs<C>(const RefinedTerm&, const RefinedTerm&,     \
                                 const EvalContext&);                        \
  template C eval_norm_zeta<C>(int, const EvalContext&);                     \
  template C eval_mdzv_lhs<C>(MdzvVariant, const EvalContext&);              \
  template C eval_lhs<C>(const LhsSpec&, const EvalContext&);

MDZV_INSTANTIATE(std::complex<double>)
MDZV_INSTANTIATE(complex50)
#undef MDZV_INSTANTIATE

}  // namespace mdzv
