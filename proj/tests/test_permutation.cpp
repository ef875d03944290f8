#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdzv/errors.hpp"
#include "mdzv/permutation.hpp"

using mdzv::ParseError;
using mdzv::Permutation;

TEST_CASE("identity prints and parses as (1)") {
  const Permutation e(4);
  CHECK(e.str() == "(1)");
  CHECK(Permutation::parse("(1)", 4) == e);
  CHECK(e.is_identity());
}

TEST_CASE("cycle parse round-trips") {
  for (const char* s : {"(12)", "(34)", "(12)(34)", "(13)(24)", "(14)(23)",
                        "(1324)", "(1423)", "(123)", "(234)", "(1342)"}) {
    const Permutation p = Permutation::parse(s, 4);
    CHECK(p.str() == s);
    CHECK(Permutation::parse(p.str(), 4) == p);
  }
}

TEST_CASE("one-line forms of the named cycles") {
  CHECK(Permutation::parse("(23)", 4).images() == std::vector<int>{1, 3, 2, 4});
  CHECK(Permutation::parse("(1324)", 4).images() == std::vector<int>{3, 4, 2, 1});
  CHECK(Permutation::parse("(1423)", 4).images() == std::vector<int>{4, 3, 1, 2});
  CHECK(Permutation::parse("(13)(24)", 4).images() == std::vector<int>{3, 4, 1, 2});
}

TEST_CASE("composition applies the right factor first") {
  const auto s = Permutation::parse("(12)", 4);
  const auto t = Permutation::parse("(23)", 4);
  const Permutation st = s * t;
  // (s*t)(i) = s(t(i)): 1->1->2, 2->3->3, 3->2->1, 4->4.
  CHECK(st.images() == std::vector<int>{2, 3, 1, 4});
  CHECK(st.str() == "(123)");
  const Permutation ts = t * s;
  CHECK(ts.images() == std::vector<int>{3, 1, 2, 4});
  CHECK(ts.str() == "(132)");
}

TEST_CASE("inverse composes to identity") {
  for (const auto& p : mdzv::symmetric_group(4)) {
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("parser rejects non-bijective and malformed input") {
  CHECK_THROWS_AS(Permutation::parse("(12)(13)", 4), ParseError);  // 1 repeated
  CHECK_THROWS_AS(Permutation::parse("(11)", 4), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(15)", 4), ParseError);  // out of range
  CHECK_THROWS_AS(Permutation::parse("(12", 4), ParseError);
  CHECK_THROWS_AS(Permutation::parse("12)", 4), ParseError);
  CHECK_THROWS_AS(Permutation::parse("", 4), ParseError);
  CHECK_THROWS_AS(Permutation::parse("()", 4), ParseError);
  CHECK_THROWS_AS(Permutation::one_line({1, 1, 3, 4}), ParseError);
  CHECK_THROWS_AS(Permutation::one_line({0, 2, 3, 4}), ParseError);
}

TEST_CASE("symmetric group sizes") {
  CHECK(mdzv::symmetric_group(2).size() == 2);
  CHECK(mdzv::symmetric_group(4).size() == 24);
}
