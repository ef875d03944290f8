#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace mdzv {

/// Ring of integers of Q(sqrt(d)), d < 0 squarefree, with basis {1, w}:
/// w = sqrt(d) when d = 2,3 (mod 4) and w = (1+sqrt(d))/2 when
/// d = 1 (mod 4). w satisfies w^2 - tr*w + nm = 0.
struct FieldSpec {
  int d = -1;
  int omega_trace = 0;        // 0 or 1
  std::int64_t omega_norm = 1;

  static FieldSpec make(int d);  // BadDiscriminant unless d < 0 squarefree
  bool operator==(const FieldSpec&) const = default;
};

/// a + b*w with integer coordinates.
struct RingElement {
  std::int64_t a = 0;
  std::int64_t b = 0;
  auto operator<=>(const RingElement&) const = default;
};

RingElement conjugate(const RingElement& x, const FieldSpec& f);
std::int64_t norm(const RingElement& x, const FieldSpec& f);  // exact, = |embedding|^2

/// Strictly positive real part of the embedding (exact integer test).
bool in_cone(const RingElement& x, const FieldSpec& f);
/// Re = 0 and Im > 0 (exact); the ray the open cone excludes.
bool on_boundary_ray(const RingElement& x, const FieldSpec& f);

/// Complex image a + b*w under the embedding with Im(w) > 0. C is any
/// complex type constructible from double components with value
/// semantics (std::complex<double>, multiprecision complex, ...).
template <class C>
C embed(const RingElement& x, const FieldSpec& f) {
  using R = typename C::value_type;
  using std::sqrt;
  const R sq = sqrt(R(-f.d));
  if (f.omega_trace == 0) return C(R(x.a), R(x.b) * sq);
  return C(R(x.a) + R(x.b) / 2, R(x.b) * sq / 2);
}

/// All cone elements with |embedding| <= radius, ascending by
/// (norm, a, b); conjugation-closed and 0-free. With include_boundary the
/// ray {Re = 0, Im > 0} is added (and closure under conjugation is lost).
struct TruncationSet {
  FieldSpec field;
  double radius = 0;
  std::vector<RingElement> elems;

  std::size_t size() const { return elems.size(); }
  bool conjugation_closed() const;
};

TruncationSet enumerate_cone(const FieldSpec& f, double radius,
                             bool include_boundary = false);

}  // namespace mdzv
