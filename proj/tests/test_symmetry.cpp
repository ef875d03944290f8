#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mdzv/symmetry.hpp"

using namespace mdzv;

namespace {

std::set<std::string> names(const std::vector<Permutation>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.str());
  return out;
}

// Naive closure, kept independent of the library's generator walk.
std::set<Permutation> brute_closure(std::vector<Permutation> gens) {
  std::set<Permutation> all(gens.begin(), gens.end());
  all.insert(Permutation(gens.front().degree()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (all.insert(a * b).second) grew = true;
  }
  return all;
}

}  // namespace

TEST_CASE("standard k=4 invariance group has the eight known elements") {
  const auto H = subgroup_H(PairingStructure::standard(4));
  CHECK(H.size() == 8);
  CHECK(names(H) == std::set<std::string>{"(1)", "(12)", "(34)", "(12)(34)",
                                          "(13)(24)", "(14)(23)", "(1324)",
                                          "(1423)"});
}

TEST_CASE("k=2 group degenerates to the conjugation swap") {
  const auto H = subgroup_H(PairingStructure::standard(2));
  CHECK(names(H) == std::set<std::string>{"(1)", "(12)"});
}

TEST_CASE("alternate pairing gives the conjugate group of order eight") {
  const auto pairing = PairingStructure::of_pairs({{1, 3}, {2, 4}});
  const auto H = subgroup_H(pairing);
  CHECK(H.size() == 8);

  // Brute-force closure of the three structural relabelings.
  const auto closure = brute_closure({Permutation::parse("(13)", 4),
                                      Permutation::parse("(24)", 4),
                                      Permutation::parse("(12)(34)", 4)});
  CHECK(std::set<Permutation>(H.begin(), H.end()) == closure);

  // And it is the standard group conjugated by (23).
  const auto sigma = Permutation::parse("(23)", 4);
  std::set<Permutation> conjugated;
  for (const auto& h : subgroup_H(PairingStructure::standard(4)))
    conjugated.insert(sigma * h * sigma.inverse());
  CHECK(std::set<Permutation>(H.begin(), H.end()) == conjugated);
}

TEST_CASE("group axioms hold (closure and inverses)") {
  for (const auto& pairing :
       {PairingStructure::standard(4), PairingStructure::of_pairs({{1, 3}, {2, 4}})}) {
    const auto H = subgroup_H(pairing);
    const std::set<Permutation> set(H.begin(), H.end());
    for (const auto& a : H) {
      CHECK(set.count(a.inverse()) == 1);
      for (const auto& b : H) CHECK(set.count(a * b) == 1);
    }
  }
}

TEST_CASE("canonicalization collapses group elements to the identity") {
  const auto pairing = PairingStructure::standard(4);
  const RefinedTerm t(Permutation::parse("(12)(34)", 4), {1, 2, 3, 4});
  const RefinedTerm canon = canonicalize(t, pairing);
  CHECK(canon.perm().is_identity());
  CHECK(canon.exponents == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("depth-one conjugate label folds away") {
  const auto pairing = PairingStructure::standard(2);
  const RefinedTerm t(Permutation::parse("(12)", 2), {2, 2});
  CHECK(canonicalize(t, pairing) == RefinedTerm(Permutation(2), {2, 2}));
  const RefinedTerm id(Permutation(2), {2, 2});
  CHECK(canonicalize(id, pairing) == id);
}

TEST_CASE("canonicalization is idempotent and constant on orbits") {
  const auto pairing = PairingStructure::standard(4);
  const auto H = subgroup_H(pairing);
  for (const auto& rho : symmetric_group(4)) {
    const RefinedTerm t(rho, {1, 3, 1, 3});
    const RefinedTerm c1 = canonicalize(t, pairing);
    CHECK(canonicalize(c1, pairing) == c1);
    for (const auto& h : H)
      CHECK(canonicalize(RefinedTerm(h * rho, t.exponents), pairing) == c1);
  }
}

TEST_CASE("equal canonical forms exactly characterize orbit membership") {
  const auto pairing = PairingStructure::standard(4);
  const auto S4 = symmetric_group(4);
  for (const auto& r1 : S4)
    for (const auto& r2 : S4) {
      const bool same =
          canonical_representative(r1, pairing) == canonical_representative(r2, pairing);
      CHECK(same == same_orbit(r1, r2, pairing));
    }
}

TEST_CASE("the 24 orders split into three classes of eight") {
  const auto pairing = PairingStructure::standard(4);
  const auto classes = cosets(pairing);
  REQUIRE(classes.size() == 3);
  std::set<Permutation> all;
  for (const auto& cls : classes) {
    CHECK(cls.size() == 8);
    all.insert(cls.begin(), cls.end());
  }
  CHECK(all.size() == 24);

  // Identity and (12) share a class; (23) and (1234) sit in the two
  // distinct non-identity classes.
  const auto e = Permutation(4);
  CHECK(same_orbit(e, Permutation::parse("(12)", 4), pairing));
  const auto p23 = Permutation::parse("(23)", 4);
  const auto p1234 = Permutation::parse("(1234)", 4);
  CHECK(!same_orbit(e, p23, pairing));
  CHECK(!same_orbit(e, p1234, pairing));
  CHECK(!same_orbit(p23, p1234, pairing));
}

TEST_CASE("class representatives are lexicographic minima") {
  const auto classes = cosets(PairingStructure::standard(4));
  std::vector<std::string> reps;
  for (const auto& cls : classes) {
    for (const auto& p : cls)
      CHECK(cls.front().images() <= p.images());
    reps.push_back(cls.front().str());
  }
  CHECK(reps == std::vector<std::string>{"(1)", "(23)", "(234)"});
}

TEST_CASE("alternate pairing classes use their own representatives") {
  const auto classes = cosets(PairingStructure::of_pairs({{1, 3}, {2, 4}}));
  std::vector<std::string> reps;
  for (const auto& cls : classes) {
    CHECK(cls.size() == 8);
    reps.push_back(cls.front().str());
  }
  CHECK(reps == std::vector<std::string>{"(1)", "(34)", "(23)"});
}
