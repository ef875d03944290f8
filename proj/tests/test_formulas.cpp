#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "mdzv/errors.hpp"
#include "mdzv/formulas.hpp"

using namespace mdzv;

namespace {

RefinedTerm term(const char* s) { return parse_term(s); }

Combination of(std::initializer_list<std::pair<const char*, std::int64_t>> items) {
  Combination c;
  for (const auto& [s, coeff] : items) c.add(parse_term(s), coeff);
  return c;
}

// Test-local two-row shuffle counter: marks sit on top of both rows of
// length n; every interleaving contributes one (a, b) pattern where a is
// the gap between the marks and b the tail length. Independent of the
// engine's word machinery.
std::map<std::pair<int, int>, std::int64_t> mzv_shuffle_counts(int n) {
  std::map<std::pair<int, int>, std::int64_t> counts;
  std::vector<std::uint8_t> mask(static_cast<size_t>(2 * n), 0);
  std::fill(mask.begin() + n, mask.end(), std::uint8_t{1});
  std::sort(mask.begin(), mask.end());
  do {
    int p1 = -1, p2 = -1;
    int seen_a = 0, seen_b = 0;
    for (int pos = 0; pos < 2 * n; ++pos) {
      if (mask[static_cast<size_t>(pos)] == 0) {
        if (seen_a++ == 0) (p1 < 0 ? p1 : p2) = pos;
      } else {
        if (seen_b++ == 0) (p1 < 0 ? p1 : p2) = pos;
      }
    }
    if (p1 > p2) std::swap(p1, p2);
    ++counts[{p2 - p1, 2 * n - p2}];
  } while (std::next_permutation(mask.begin(), mask.end()));
  return counts;
}

}  // namespace

TEST_CASE("weight-two self-shuffle is the published two-term form") {
  CHECK(self_shuffle_zeta(2) == of({{"(1):2,2", 2}, {"(1):1,3", 4}}));
}

TEST_CASE("weight-three self-shuffle is the published three-term form") {
  CHECK(self_shuffle_zeta(3) ==
        of({{"(1):3,3", 2}, {"(1):2,4", 6}, {"(1):1,5", 12}}));
}

TEST_CASE("raw weight-two self-shuffle keeps the conjugate labels") {
  CHECK(self_shuffle_zeta(2, false) == of({{"(1):2,2", 1},
                                           {"(1):1,3", 2},
                                           {"(12):1,3", 2},
                                           {"(12):2,2", 1}}));
}

TEST_CASE("self-shuffle coefficient sums are central binomials") {
  std::int64_t expected[] = {0, 0, 6, 20, 70, 252, 924, 3432};
  for (int n = 2; n <= 7; ++n)
    CHECK(self_shuffle_zeta(n).coefficient_sum() == expected[n]);
}

TEST_CASE("self-shuffle coefficients follow the closed form 2*C(2n-a-1, n-a)") {
  const auto binom = [](int top, int bottom) {
    std::int64_t r = 1;
    for (int i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
    return r;
  };
  for (int n = 2; n <= 7; ++n) {
    const Combination c = self_shuffle_zeta(n);
    CHECK(c.size() == static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a)
      CHECK(c.coefficient(RefinedTerm(Permutation(2), {a, 2 * n - a})) ==
            2 * binom(2 * n - a - 1, n - a));
  }
}

TEST_CASE("self-shuffle coefficients equal the two-row shuffle counts") {
  for (int n = 2; n <= 5; ++n) {
    const Combination c = self_shuffle_zeta(n);
    const auto counts = mzv_shuffle_counts(n);
    CHECK(c.size() == counts.size());
    for (const auto& [ab, count] : counts) {
      const RefinedTerm t(Permutation(2), {ab.first, ab.second});
      CHECK(c.coefficient(t) == count);
    }
  }
}

TEST_CASE("depth-two self-shuffles expand to twenty raw addends") {
  for (auto v : {MdzvVariant::Separated, MdzvVariant::Twisted}) {
    const Combination raw = self_shuffle_mdzv(v, false);
    CHECK(raw.coefficient_sum() == 20);
    CHECK(raw.k() == 4);
  }
}

TEST_CASE("separated depth-two self-shuffle, collected") {
  CHECK(self_shuffle_mdzv(MdzvVariant::Separated) == of({{"(1):1,2,1,2", 2},
                                                         {"(1):1,1,2,2", 2},
                                                         {"(23):1,1,2,2", 4},
                                                         {"(1):1,1,1,3", 4},
                                                         {"(23):1,1,1,3", 8}}));
}

TEST_CASE("separated raw form starts from the fully split word") {
  const Combination raw = self_shuffle_mdzv(MdzvVariant::Separated, false);
  CHECK(raw.coefficient(term("(1):1,2,1,2")) == 1);
  CHECK(raw.coefficient(term("(13)(24):1,2,1,2")) == 1);
}

TEST_CASE("twisted raw form carries the published one-off labels") {
  const Combination raw = self_shuffle_mdzv(MdzvVariant::Twisted, false);
  CHECK(raw.coefficient(term("(12):1,2,1,2")) == 1);
  CHECK(raw.coefficient(term("(1234):1,1,2,2")) == 1);
  CHECK(raw.coefficient(term("(123):1,1,2,2")) == 1);
  CHECK(raw.coefficient(term("(13):1,1,1,3")) == 2);
  // The last four interleavings put the second row's pair on top; their
  // appearance order is (1324), not (13)(24).
  CHECK(raw.coefficient(term("(1324):1,2,1,2")) == 1);
  CHECK(raw.coefficient(term("(1324):1,1,2,2")) == 1);
  CHECK(raw.coefficient(term("(1324):1,1,1,3")) == 2);
  CHECK(raw.coefficient(term("(13)(24):1,2,1,2")) == 0);
}

TEST_CASE("twisted depth-two self-shuffle, collected") {
  CHECK(self_shuffle_mdzv(MdzvVariant::Twisted) == of({{"(34):1,2,1,2", 2},
                                                       {"(1):1,1,2,2", 2},
                                                       {"(34):1,1,2,2", 4},
                                                       {"(1):1,1,1,3", 4},
                                                       {"(34):1,1,1,3", 8}}));
}

TEST_CASE("difference of the two depth-two self-shuffles") {
  CHECK(corollary_difference() == of({{"(1):1,2,1,2", 2},
                                      {"(34):1,2,1,2", -2},
                                      {"(23):1,1,2,2", 4},
                                      {"(34):1,1,2,2", -4},
                                      {"(23):1,1,1,3", 8},
                                      {"(34):1,1,1,3", -8}}));
  CHECK((self_shuffle_mdzv(MdzvVariant::Separated) -
         self_shuffle_mdzv(MdzvVariant::Separated))
            .empty());
}

TEST_CASE("the square of the weight-two value, collected term by term") {
  // Frozen from an independent enumeration of all 70 interleavings.
  CHECK(shuffle_product(parse_term("(1):2,2"), parse_term("(1):2,2"),
                        PairingStructure::standard(4), true) ==
        of({{"(1):2,1,2,3", 4},    {"(1):2,1,3,2", 4},    {"(1):2,2,2,2", 2},
            {"(23):1,2,2,3", 4},   {"(23):1,2,3,2", 4},   {"(23):1,3,1,3", 8},
            {"(23):1,3,2,2", 4},   {"(23):2,1,2,3", 4},   {"(23):2,1,3,2", 4},
            {"(23):2,2,1,3", 4},   {"(23):2,2,2,2", 2},   {"(234):1,2,2,3", 4},
            {"(234):1,2,3,2", 4},  {"(234):1,3,1,3", 8},  {"(234):1,3,2,2", 4},
            {"(234):2,2,1,3", 4},  {"(234):2,2,2,2", 2}}));
}

TEST_CASE("full products conserve the multinomial coefficient sums") {
  const Combination p22 = product_zeta(2, 2);
  CHECK(p22.coefficient_sum() == 6 * 6 * 70);       // 2520
  const Combination p23 = product_zeta(2, 3);
  CHECK(p23.coefficient_sum() == 6 * 20 * 210);     // 25200
}

TEST_CASE("full product coefficients certified by the expansion") {
  const Combination p22 = product_zeta(2, 2);
  CHECK(p22.coefficient(term("(1):2,2,2,2")) == 8);
  CHECK(p22.coefficient(term("(23):2,2,2,2")) == 8);
  CHECK(p22.coefficient(term("(234):2,2,2,2")) == 8);
  CHECK(p22.coefficient(term("(1):1,1,1,5")) == 192);

  const Combination p23 = product_zeta(2, 3);
  CHECK(p23.coefficient(term("(1):1,1,1,7")) == 1440);
  CHECK(p23.coefficient(term("(23):1,1,1,7")) == 1440);
  CHECK(p23.coefficient(term("(234):1,1,1,7")) == 1440);
}

TEST_CASE("latex emission matches the published headline forms") {
  CHECK(to_latex(self_shuffle_zeta(2)) ==
        "2\\zeta^{(1)}(2,2)+4\\zeta^{(1)}(1,3)");
  CHECK(to_latex(self_shuffle_zeta(3)) ==
        "2\\zeta^{(1)}(3,3)+6\\zeta^{(1)}(2,4)+12\\zeta^{(1)}(1,5)");
  CHECK(to_latex(Combination{}) == "0");
}

TEST_CASE("semicolon style splits depth-two exponent lists") {
  Combination c;
  c.add(term("(1):1,2,1,2"), 1);
  CHECK(to_latex(c, NotationStyle::Semicolon) == "\\zeta^{(1)}(1,2;1,2)");
  CHECK(to_latex(c) == "\\zeta^{(1)}(1,2,1,2)");
  CHECK(to_text(c, NotationStyle::Semicolon) == "ζ^(1)(1,2;1,2)");
}

TEST_CASE("negative and unit coefficients render cleanly") {
  Combination c;
  c.add(term("(1):1,2,1,2"), 1);
  c.add(term("(34):1,2,1,2"), -2);
  CHECK(to_latex(c) == "\\zeta^{(1)}(1,2,1,2)-2\\zeta^{(34)}(1,2,1,2)");
}

TEST_CASE("json round-trips combinations with their pairing") {
  const Combination p22 = product_zeta(2, 2);
  const auto pairing = PairingStructure::standard(4);
  auto [back, back_pairing] = from_json(to_json(p22, pairing));
  CHECK(back == p22);
  CHECK(back_pairing == pairing);

  const Combination selfie = self_shuffle_mdzv(MdzvVariant::Twisted);
  auto [b2, p2] = from_json(to_json(selfie, mdzv_pairing()));
  CHECK(b2 == selfie);
  CHECK(p2 == mdzv_pairing());

  CHECK_THROWS_AS(from_json("{"), ParseError);
  CHECK_THROWS_AS(from_json("{\"k\":4}"), ParseError);
}

TEST_CASE("mangled json is rejected, never crashes") {
  const std::string good = to_json(self_shuffle_zeta(2), PairingStructure::standard(2));
  for (size_t i = 0; i < good.size(); i += 3) {
    std::string mangled = good;
    mangled.erase(i, 1);
    try {
      from_json(mangled);  // a few deletions still parse; most must throw
    } catch (const ParseError&) {
    }
  }
  CHECK_THROWS_AS(from_json("{\"k\":4,\"pairing\":[[1,2]],\"terms\":[]}"),
                  ParseError);  // pairing does not cover k
  CHECK_THROWS_AS(
      from_json("{\"k\":2,\"pairing\":[[1,2]],\"terms\":"
                "[{\"perm\":\"(1)\",\"exponents\":[1,-3],\"coeff\":1}]}"),
      ParseError);
}

TEST_CASE("json field order is pinned") {
  Combination c;
  c.add(term("(23):1,2,1,4"), 3);
  CHECK(to_json(c, PairingStructure::standard(4)) ==
        "{\"k\":4,\"pairing\":[[1,2],[3,4]],\"terms\":"
        "[{\"perm\":\"(23)\",\"exponents\":[1,2,1,4],\"coeff\":3}]}");
}

TEST_CASE("identity catalog resolves every advertised name") {
  for (const char* name :
       {"selfie-zeta2", "selfie-zeta3", "selfie-mdzv-(1)(1)", "selfie-mdzv-(12)(1)",
        "corollary-diff", "prod-22-22", "prod-22-13", "prod-13-13", "prod-22-33",
        "prod-22-24", "prod-22-15", "prod-13-33", "prod-13-24", "prod-13-15",
        "zeta2-x-zeta2", "zeta2-x-zeta3"}) {
    const NamedIdentity id = find_identity(name);
    CHECK(id.name == name);
    CHECK(!id.rhs.empty());
  }
  CHECK(identity_catalog().size() == 16);
}

TEST_CASE("diff of the depth-one self-shuffles against the tables is clean") {
  for (const char* name : {"selfie-zeta2", "selfie-zeta3", "selfie-mdzv-(1)(1)"}) {
    const NamedIdentity id = find_identity(name);
    const auto printed = printed_reference(name);
    REQUIRE(printed.has_value());
    CHECK(reference_diff(id.rhs, *printed, id.pairing).clean());
  }
}

TEST_CASE("diff of anything against itself is empty") {
  const NamedIdentity id = find_identity("prod-22-22");
  PrintedForm self;
  for (const auto& [t, c] : id.rhs.terms())
    self.terms.push_back({t.perm().str(), t.exponents, c});
  CHECK(reference_diff(id.rhs, self, id.pairing).clean());
}

TEST_CASE("diff surfaces the published coefficient transfers") {
  const NamedIdentity id = find_identity("prod-22-22");
  const auto printed = printed_reference("prod-22-22");
  REQUIRE(printed.has_value());
  const DiffReport report = reference_diff(id.rhs, *printed, id.pairing);
  CHECK(!report.clean());
  CHECK(!report.mismatched.empty());
  // The published table writes the third-class terms with the label (132).
  bool alias_132 = false;
  for (const auto& [from, to] : report.aliases)
    alias_132 |= (from == "(132)" && to == "(234)");
  CHECK(alias_132);
}

TEST_CASE("diff flags arity defects and doubled rows verbatim") {
  {
    const auto printed = printed_reference("zeta2-x-zeta2");
    REQUIRE(printed.has_value());
    const DiffReport report =
        reference_diff(find_identity("zeta2-x-zeta2").rhs, *printed,
                       PairingStructure::standard(4));
    REQUIRE(report.malformed.size() == 1);
    CHECK(report.malformed.front().exponents == std::vector<int>{1, 1, 15});
  }
  {
    const auto printed = printed_reference("prod-22-13");
    REQUIRE(printed.has_value());
    const DiffReport report =
        reference_diff(find_identity("prod-22-13").rhs, *printed,
                       PairingStructure::standard(4));
    REQUIRE(!report.duplicated.empty());
  }
}

TEST_CASE("diff rendering stays parseable text") {
  const auto printed = printed_reference("zeta2-x-zeta3");
  REQUIRE(printed.has_value());
  const DiffReport report = reference_diff(find_identity("zeta2-x-zeta3").rhs,
                                           *printed, PairingStructure::standard(4));
  const std::string text = render(report);
  CHECK(text.find("mismatch") != std::string::npos);
  CHECK(render(DiffReport{}) == "no differences\n");
}
