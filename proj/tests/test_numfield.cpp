#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <set>

#include "mdzv/errors.hpp"
#include "mdzv/numfield.hpp"

using namespace mdzv;
using cdouble = std::complex<double>;

TEST_CASE("ring basis selection by discriminant") {
  const FieldSpec gauss = FieldSpec::make(-1);
  CHECK(gauss.omega_trace == 0);
  CHECK(gauss.omega_norm == 1);  // w = i

  const FieldSpec eisen = FieldSpec::make(-3);
  CHECK(eisen.omega_trace == 1);
  CHECK(eisen.omega_norm == 1);  // w = (1+sqrt(-3))/2

  const FieldSpec d7 = FieldSpec::make(-7);
  CHECK(d7.omega_trace == 1);
  CHECK(d7.omega_norm == 2);

  CHECK_THROWS_AS(FieldSpec::make(-4), BadDiscriminant);
  CHECK_THROWS_AS(FieldSpec::make(-8), BadDiscriminant);
  CHECK_THROWS_AS(FieldSpec::make(-12), BadDiscriminant);
  CHECK_THROWS_AS(FieldSpec::make(0), BadDiscriminant);
  CHECK_THROWS_AS(FieldSpec::make(5), BadDiscriminant);
}

TEST_CASE("embeddings of basis elements") {
  const FieldSpec gauss = FieldSpec::make(-1);
  const cdouble two_plus_i = embed<cdouble>({2, 1}, gauss);
  CHECK(two_plus_i.real() == doctest::Approx(2));
  CHECK(two_plus_i.imag() == doctest::Approx(1));

  const FieldSpec eisen = FieldSpec::make(-3);
  const cdouble w = embed<cdouble>({0, 1}, eisen);
  CHECK(w.real() == doctest::Approx(0.5));
  CHECK(w.imag() == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("conjugation is an involution fixing the rationals") {
  for (int d : {-1, -2, -3, -7}) {
    const FieldSpec f = FieldSpec::make(d);
    for (std::int64_t a = -4; a <= 4; ++a)
      for (std::int64_t b = -4; b <= 4; ++b) {
        const RingElement x{a, b};
        CHECK(conjugate(conjugate(x, f), f) == x);
        const cdouble ex = embed<cdouble>(x, f);
        const cdouble ec = embed<cdouble>(conjugate(x, f), f);
        CHECK(ec.real() == doctest::Approx(ex.real()).epsilon(1e-13));
        CHECK(ec.imag() == doctest::Approx(-ex.imag()).epsilon(1e-13));
      }
    CHECK(conjugate(RingElement{3, 0}, f) == RingElement{3, 0});
  }
}

TEST_CASE("cone membership is exact") {
  const FieldSpec gauss = FieldSpec::make(-1);
  CHECK(in_cone({1, 1}, gauss));    // 1+i
  CHECK(!in_cone({0, 1}, gauss));   // i: boundary, excluded
  CHECK(on_boundary_ray({0, 1}, gauss));
  CHECK(!on_boundary_ray({0, -1}, gauss));
  CHECK(!in_cone({-1, 0}, gauss));
  CHECK(!in_cone({0, 0}, gauss));

  const FieldSpec eisen = FieldSpec::make(-3);
  CHECK(in_cone({0, 1}, eisen));    // w has Re 1/2
  CHECK(!in_cone({-1, 2}, eisen));  // -1 + 2w has Re 0
  CHECK(on_boundary_ray({-1, 2}, eisen));
}

TEST_CASE("hand enumeration of small Gaussian truncations") {
  const FieldSpec gauss = FieldSpec::make(-1);
  const TruncationSet t = enumerate_cone(gauss, 1.5);
  REQUIRE(t.size() == 3);
  CHECK(t.elems[0] == RingElement{1, 0});
  const std::set<RingElement> rest{t.elems[1], t.elems[2]};
  CHECK(rest == std::set<RingElement>{{1, -1}, {1, 1}});

  CHECK(enumerate_cone(gauss, 0.5).size() == 0);
}

TEST_CASE("boundary flag adds the ray and breaks closure") {
  const FieldSpec gauss = FieldSpec::make(-1);
  const TruncationSet open_set = enumerate_cone(gauss, 2.5);
  const TruncationSet with_ray = enumerate_cone(gauss, 2.5, true);
  CHECK(with_ray.size() == open_set.size() + 2);  // i and 2i
  CHECK(open_set.conjugation_closed());
  CHECK(!with_ray.conjugation_closed());
}

TEST_CASE("sets are conjugation closed, zero free and radius monotone") {
  for (int d : {-1, -2, -3, -7, -11}) {
    const FieldSpec f = FieldSpec::make(d);
    std::size_t prev = 0;
    for (int r = 1; r <= 30; ++r) {
      const TruncationSet t = enumerate_cone(f, static_cast<double>(r));
      CHECK(t.conjugation_closed());
      CHECK(t.size() >= prev);
      prev = t.size();
    }
    for (double r : {1.5, 2.5, 7.25}) {
      const TruncationSet t = enumerate_cone(f, r);
      CHECK(t.conjugation_closed());
      for (const auto& x : t.elems) {
        CHECK(!(x.a == 0 && x.b == 0));
        CHECK(in_cone(x, f));
      }
    }
  }
}

TEST_CASE("exact norm agrees with the squared embedding") {
  for (int d : {-1, -3}) {
    const FieldSpec f = FieldSpec::make(d);
    for (const auto& x : enumerate_cone(f, 20.0).elems) {
      const double n = static_cast<double>(norm(x, f));
      const double e = std::norm(embed<cdouble>(x, f));
      CHECK(std::abs(n - e) <= 1e-12 * n);
    }
  }
}

TEST_CASE("enumeration order is ascending by norm then coordinates") {
  for (int d : {-1, -3}) {
    const FieldSpec f = FieldSpec::make(d);
    const TruncationSet t = enumerate_cone(f, 12.0);
    for (size_t i = 1; i < t.elems.size(); ++i) {
      const auto n0 = norm(t.elems[i - 1], f), n1 = norm(t.elems[i], f);
      CHECK(n0 <= n1);
      if (n0 == n1) CHECK(t.elems[i - 1] < t.elems[i]);
    }
    // Smaller radius gives a prefix-consistent subsequence.
    const TruncationSet small = enumerate_cone(f, 6.0);
    std::vector<RingElement> filtered;
    const long double r2 = 36.0L;
    for (const auto& x : t.elems)
      if (static_cast<long double>(norm(x, f)) <= r2) filtered.push_back(x);
    CHECK(filtered == small.elems);
  }
}
