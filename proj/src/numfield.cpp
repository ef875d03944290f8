#include "mdzv/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "mdzv/errors.hpp"

namespace mdzv {

namespace {

bool squarefree(std::int64_t n) {  // n > 0
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::make(int d) {
  if (d >= 0) throw BadDiscriminant("discriminant must be negative");
  if (!squarefree(-static_cast<std::int64_t>(d)))
    throw BadDiscriminant("discriminant must be squarefree");
  FieldSpec f;
  f.d = d;
  const int mod4 = ((d % 4) + 4) % 4;
  if (mod4 == 1) {
    f.omega_trace = 1;
    f.omega_norm = (1 - static_cast<std::int64_t>(d)) / 4;
  } else {
    f.omega_trace = 0;
    f.omega_norm = -static_cast<std::int64_t>(d);
  }
  return f;
}

RingElement conjugate(const RingElement& x, const FieldSpec& f) {
  // conj(w) = tr - w, so conj(a + b w) = (a + b*tr) - b w.
  return {x.a + x.b * f.omega_trace, -x.b};
}

std::int64_t norm(const RingElement& x, const FieldSpec& f) {
  return x.a * x.a + x.a * x.b * f.omega_trace + x.b * x.b * f.omega_norm;
}

bool in_cone(const RingElement& x, const FieldSpec& f) {
  // 2*Re = 2a + b*tr.
  return 2 * x.a + x.b * f.omega_trace > 0;
}

bool on_boundary_ray(const RingElement& x, const FieldSpec& f) {
  return 2 * x.a + x.b * f.omega_trace == 0 && x.b > 0;
}

bool TruncationSet::conjugation_closed() const {
  std::set<RingElement> all(elems.begin(), elems.end());
  for (const auto& x : elems)
    if (!all.count(conjugate(x, field))) return false;
  return true;
}

TruncationSet enumerate_cone(const FieldSpec& f, double radius,
                             bool include_boundary) {
  if (!(radius > 0)) throw std::invalid_argument("radius must be positive");
  TruncationSet set;
  set.field = f;
  set.radius = radius;

  const long double r2 = static_cast<long double>(radius) * radius;
  const double im_omega =
      f.omega_trace == 0 ? std::sqrt(-double(f.d)) : std::sqrt(-double(f.d)) / 2;
  const auto bmax = static_cast<std::int64_t>(std::floor(radius / im_omega));
  for (std::int64_t b = -bmax; b <= bmax; ++b) {
    // Re = a + b*tr/2 ranges over [-radius, radius].
    const double shift = 0.5 * b * f.omega_trace;
    const auto alo = static_cast<std::int64_t>(std::ceil(-radius - shift)) - 1;
    const auto ahi = static_cast<std::int64_t>(std::floor(radius - shift)) + 1;
    for (std::int64_t a = alo; a <= ahi; ++a) {
      const RingElement x{a, b};
      if (static_cast<long double>(norm(x, f)) > r2) continue;
      if (in_cone(x, f) || (include_boundary && on_boundary_ray(x, f)))
        set.elems.push_back(x);
    }
  }
  std::sort(set.elems.begin(), set.elems.end(),
            [&](const RingElement& x, const RingElement& y) {
              const auto nx = norm(x, f), ny = norm(y, f);
              if (nx != ny) return nx < ny;
              return x < y;
            });
  return set;
}

}  // namespace mdzv
