// Compares every engine expansion against the golden fixtures under
// tests/golden/, which were produced by an independent implementation of
// the same counting.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "mdzv/formulas.hpp"

using namespace mdzv;

namespace {

std::pair<Combination, PairingStructure> load(const std::string& name) {
  const std::string path = std::string(GOLDEN_DIR) + "/" + name + ".json";
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace

TEST_CASE("catalog expansions match the independent fixtures") {
  for (const auto& id : identity_catalog()) {
    CAPTURE(id.name);
    const auto [expected, pairing] = load(id.name);
    CHECK(id.rhs == expected);
    CHECK(id.pairing == pairing);
  }
}

TEST_CASE("raw depth-two self-shuffles match the independent fixtures") {
  CHECK(self_shuffle_mdzv(MdzvVariant::Separated, false) ==
        load("selfie-mdzv-(1)(1)-raw").first);
  CHECK(self_shuffle_mdzv(MdzvVariant::Twisted, false) ==
        load("selfie-mdzv-(12)(1)-raw").first);
}
