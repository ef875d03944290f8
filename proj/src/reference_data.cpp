#include <map>
#include <string>

#include "mdzv/formulas.hpp"

// Verbatim transcriptions of the published right-hand sides, kept exactly
// as printed (including entries with the wrong arity and terms listed
// twice). The diff reporter surfaces defects; nothing here is corrected.

namespace mdzv {

namespace {

using PT = PrintedTerm;

const std::map<std::string, PrintedForm>& tables() {
  static const std::map<std::string, PrintedForm> t = {
      {"selfie-zeta2",
       {{
           PT{"(1)", {2, 2}, 2},
           PT{"(1)", {1, 3}, 4},
       }}},
      {"selfie-zeta3",
       {{
           PT{"(1)", {3, 3}, 2},
           PT{"(1)", {2, 4}, 6},
           PT{"(1)", {1, 5}, 12},
       }}},
      {"selfie-mdzv-(1)(1)",
       {{
           PT{"(1)", {1, 2, 1, 2}, 2},
           PT{"(1)", {1, 1, 2, 2}, 2},
           PT{"(23)", {1, 1, 2, 2}, 4},
           PT{"(1)", {1, 1, 1, 3}, 4},
           PT{"(23)", {1, 1, 1, 3}, 8},
       }}},
      {"selfie-mdzv-(12)(1)",
       {{
           PT{"(1)", {1, 2, 1, 2}, 2},
           PT{"(1)", {1, 1, 2, 2}, 2},
           PT{"(23)", {1, 1, 2, 2}, 3},
           PT{"(1234)", {1, 1, 2, 2}, 1},
           PT{"(1)", {1, 1, 1, 3}, 4},
           PT{"(23)", {1, 1, 1, 3}, 6},
           PT{"(1234)", {1, 1, 1, 3}, 2},
       }}},
      {"corollary-diff",
       {{
           PT{"(23)", {1, 1, 2, 2}, 1},
           PT{"(1234)", {1, 1, 2, 2}, -1},
           PT{"(23)", {1, 1, 1, 3}, 2},
           PT{"(1234)", {1, 1, 1, 3}, -2},
       }}},
      {"prod-22-22",
       {{
           PT{"(1)", {2, 2, 2, 2}, 2},
           PT{"(23)", {2, 2, 2, 2}, 4},
           PT{"(1)", {2, 1, 3, 2}, 4},
           PT{"(23)", {2, 1, 3, 2}, 4},
           PT{"(1)", {2, 1, 2, 3}, 4},
           PT{"(23)", {2, 1, 2, 3}, 2},
           PT{"(23)", {2, 2, 1, 3}, 10},
           PT{"(132)", {1, 2, 3, 2}, 8},
           PT{"(132)", {1, 2, 2, 3}, 8},
           PT{"(132)", {1, 3, 2, 2}, 9},
           PT{"(132)", {1, 3, 1, 3}, 15},
       }}},
      {"prod-22-13",
       {{
           PT{"(1)", {2, 2, 1, 3}, 1},
           PT{"(1)", {2, 1, 2, 3}, 1},
           PT{"(23)", {2, 1, 2, 3}, 3},
           PT{"(1)", {2, 1, 1, 4}, 3},
           PT{"(23)", {2, 1, 1, 4}, 6},
           PT{"(23)", {2, 1, 3, 2}, 1},
           PT{"(1)", {1, 2, 2, 3}, 2},
           PT{"(23)", {1, 2, 2, 3}, 6},
           PT{"(23)", {1, 2, 1, 4}, 12},
           PT{"(1)", {1, 2, 3, 2}, 2},
           PT{"(23)", {1, 2, 3, 2}, 2},
           PT{"(1)", {1, 1, 2, 4}, 6},
           PT{"(23)", {1, 2, 1, 4}, 7},
           PT{"(1)", {1, 1, 3, 3}, 3},
           PT{"(23)", {1, 1, 3, 3}, 8},
           PT{"(1)", {1, 1, 4, 2}, 1},
           PT{"(23)", {1, 1, 3, 3}, 5},
           PT{"(1)", {1, 3, 2, 2}, 1},
       }}},
      {"prod-13-13",
       {{
           PT{"(1)", {1, 3, 1, 3}, 2},
           PT{"(1)", {1, 2, 2, 3}, 2},
           PT{"(1)", {1, 2, 1, 4}, 6},
           PT{"(1)", {1, 1, 3, 3}, 2},
           PT{"(23)", {1, 1, 3, 3}, 4},
           PT{"(1)", {1, 1, 2, 4}, 6},
           PT{"(23)", {1, 1, 2, 4}, 12},
           PT{"(1)", {1, 1, 1, 5}, 12},
           PT{"(23)", {1, 1, 1, 5}, 24},
       }}},
      {"prod-22-33",
       {{
           PT{"(1)", {2, 2, 3, 3}, 1},
           PT{"(1)", {2, 1, 4, 3}, 3},
           PT{"(1)", {2, 1, 3, 4}, 3},
           PT{"(1)", {3, 1, 2, 4}, 3},
           PT{"(1)", {3, 1, 3, 3}, 4},
           PT{"(1)", {3, 1, 4, 2}, 3},
           PT{"(1)", {3, 2, 2, 3}, 2},
           PT{"(1)", {3, 2, 3, 2}, 2},
           PT{"(1)", {3, 3, 2, 2}, 1},
           PT{"(23)", {2, 1, 4, 3}, 3},
           PT{"(23)", {2, 1, 3, 4}, 3},
           PT{"(23)", {2, 2, 3, 3}, 8},
           PT{"(23)", {2, 2, 2, 4}, 9},
           PT{"(23)", {2, 3, 2, 3}, 9},
           PT{"(23)", {2, 3, 1, 4}, 18},
           PT{"(23)", {2, 3, 3, 2}, 3},
           PT{"(23)", {2, 2, 4, 2}, 3},
           PT{"(23)", {1, 2, 4, 3}, 6},
           PT{"(23)", {1, 2, 3, 4}, 6},
           PT{"(23)", {1, 3, 3, 3}, 8},
           PT{"(23)", {1, 3, 2, 4}, 18},
           PT{"(23)", {1, 4, 2, 3}, 18},
           PT{"(23)", {1, 4, 1, 4}, 36},
           PT{"(23)", {1, 4, 3, 2}, 6},
           PT{"(23)", {1, 3, 3, 3}, 9},
           PT{"(23)", {1, 3, 4, 2}, 5},
           PT{"(23)", {3, 2, 2, 3}, 3},
           PT{"(23)", {3, 2, 1, 4}, 6},
           PT{"(23)", {3, 2, 3, 2}, 1},
           PT{"(23)", {3, 1, 2, 4}, 3},
           PT{"(23)", {3, 1, 3, 3}, 4},
           PT{"(23)", {3, 1, 4, 2}, 3},
       }}},
      {"prod-22-24",
       {{
           PT{"(1)", {2, 2, 2, 4}, 4},
           PT{"(1)", {2, 1, 3, 4}, 8},
           PT{"(1)", {2, 1, 2, 5}, 8},
           PT{"(1)", {2, 1, 4, 3}, 6},
           PT{"(1)", {2, 1, 5, 2}, 4},
           PT{"(1)", {2, 2, 3, 3}, 4},
           PT{"(1)", {2, 2, 4, 2}, 3},
           PT{"(1)", {2, 3, 2, 3}, 2},
           PT{"(1)", {2, 3, 3, 2}, 2},
           PT{"(1)", {2, 4, 2, 2}, 1},
           PT{"(23)", {2, 1, 3, 4}, 8},
           PT{"(23)", {2, 1, 2, 5}, 8},
           PT{"(23)", {2, 2, 2, 4}, 8},
           PT{"(23)", {2, 2, 1, 5}, 16},
           PT{"(23)", {2, 2, 3, 3}, 4},
           PT{"(23)", {2, 2, 4, 2}, 2},
           PT{"(23)", {1, 2, 3, 4}, 16},
           PT{"(23)", {1, 2, 2, 5}, 16},
           PT{"(23)", {1, 3, 2, 4}, 16},
           PT{"(23)", {1, 3, 1, 5}, 32},
           PT{"(23)", {1, 3, 3, 3}, 8},
           PT{"(23)", {1, 3, 4, 2}, 4},
           PT{"(23)", {1, 2, 4, 3}, 12},
           PT{"(23)", {1, 2, 5, 2}, 8},
           PT{"(23)", {2, 1, 4, 3}, 6},
           PT{"(23)", {2, 1, 5, 2}, 4},
       }}},
      {"prod-22-15",
       {{
           PT{"(1)", {2, 2, 1, 5}, 1},
           PT{"(1)", {2, 1, 2, 5}, 1},
           PT{"(1)", {2, 1, 1, 6}, 5},
           PT{"(1)", {1, 1, 2, 6}, 5},
           PT{"(1)", {1, 1, 3, 5}, 8},
           PT{"(1)", {1, 1, 4, 4}, 9},
           PT{"(1)", {1, 1, 5, 3}, 8},
           PT{"(1)", {1, 1, 6, 2}, 5},
           PT{"(1)", {1, 2, 2, 5}, 4},
           PT{"(1)", {1, 2, 3, 4}, 6},
           PT{"(1)", {1, 2, 4, 3}, 6},
           PT{"(1)", {1, 2, 5, 2}, 4},
           PT{"(1)", {1, 3, 2, 4}, 3},
           PT{"(1)", {1, 3, 3, 3}, 4},
           PT{"(1)", {1, 3, 4, 2}, 3},
           PT{"(1)", {1, 4, 2, 3}, 2},
           PT{"(1)", {1, 4, 3, 2}, 2},
           PT{"(1)", {1, 5, 2, 2}, 1},
           PT{"(23)", {2, 1, 2, 5}, 5},
           PT{"(23)", {2, 1, 1, 6}, 10},
           PT{"(23)", {1, 3, 4, 2}, 3},
           PT{"(23)", {2, 1, 4, 3}, 2},
           PT{"(23)", {2, 1, 5, 2}, 1},
           PT{"(23)", {1, 2, 2, 5}, 10},
           PT{"(23)", {1, 2, 1, 6}, 20},
           PT{"(23)", {1, 2, 3, 4}, 6},
           PT{"(23)", {1, 2, 4, 3}, 4},
           PT{"(23)", {1, 2, 5, 2}, 2},
           PT{"(23)", {1, 1, 2, 6}, 10},
           PT{"(23)", {1, 1, 3, 5}, 16},
           PT{"(23)", {1, 1, 4, 4}, 18},
           PT{"(23)", {1, 1, 5, 3}, 16},
           PT{"(23)", {1, 1, 6, 2}, 10},
       }}},
      {"prod-13-33",
       {{
           PT{"(1)", {1, 3, 3, 3}, 1},
           PT{"(1)", {1, 2, 4, 3}, 3},
           PT{"(1)", {1, 2, 3, 4}, 3},
           PT{"(1)", {1, 1, 5, 3}, 6},
           PT{"(1)", {1, 1, 4, 4}, 9},
           PT{"(1)", {1, 1, 3, 5}, 6},
           PT{"(1)", {3, 1, 1, 5}, 6},
           PT{"(1)", {3, 1, 2, 4}, 3},
           PT{"(1)", {3, 1, 3, 3}, 1},
           PT{"(1)", {3, 2, 1, 4}, 3},
           PT{"(1)", {3, 2, 2, 3}, 1},
           PT{"(1)", {3, 3, 1, 3}, 1},
           PT{"(23)", {1, 1, 5, 3}, 12},
           PT{"(23)", {1, 1, 4, 4}, 18},
           PT{"(23)", {1, 1, 3, 5}, 12},
           PT{"(23)", {1, 2, 4, 3}, 6},
           PT{"(23)", {1, 2, 3, 4}, 12},
           PT{"(23)", {1, 2, 2, 5}, 12},
           PT{"(23)", {1, 3, 3, 3}, 4},
           PT{"(23)", {1, 3, 2, 4}, 12},
           PT{"(23)", {1, 3, 1, 5}, 24},
           PT{"(23)", {2, 1, 4, 3}, 3},
           PT{"(23)", {2, 1, 3, 4}, 6},
           PT{"(23)", {2, 1, 2, 5}, 6},
           PT{"(23)", {2, 2, 3, 3}, 2},
           PT{"(23)", {2, 2, 2, 4}, 6},
           PT{"(23)", {2, 2, 1, 5}, 12},
           PT{"(23)", {3, 1, 3, 3}, 2},
           PT{"(23)", {3, 1, 2, 4}, 6},
           PT{"(23)", {3, 1, 1, 5}, 12},
       }}},
      {"prod-13-24",
       {{
           PT{"(1)", {1, 3, 2, 4}, 1},
           PT{"(1)", {1, 2, 3, 4}, 2},
           PT{"(1)", {1, 2, 2, 5}, 4},
           PT{"(1)", {1, 1, 4, 4}, 3},
           PT{"(1)", {1, 1, 3, 5}, 8},
           PT{"(1)", {1, 1, 2, 6}, 10},
           PT{"(1)", {2, 1, 1, 6}, 10},
           PT{"(1)", {2, 1, 2, 5}, 6},
           PT{"(1)", {2, 1, 3, 4}, 3},
           PT{"(1)", {2, 1, 4, 3}, 1},
           PT{"(1)", {2, 2, 1, 5}, 6},
           PT{"(1)", {2, 2, 2, 4}, 3},
           PT{"(1)", {2, 2, 3, 3}, 1},
           PT{"(1)", {2, 3, 1, 4}, 3},
           PT{"(1)", {2, 3, 2, 3}, 1},
           PT{"(1)", {2, 4, 1, 3}, 1},
           PT{"(23)", {1, 1, 4, 4}, 6},
           PT{"(23)", {1, 1, 3, 5}, 16},
           PT{"(23)", {1, 1, 2, 6}, 20},
           PT{"(23)", {1, 2, 3, 4}, 8},
           PT{"(23)", {1, 2, 2, 5}, 20},
           PT{"(23)", {1, 2, 4, 3}, 2},
           PT{"(23)", {2, 1, 3, 4}, 4},
           PT{"(23)", {2, 1, 2, 5}, 10},
           PT{"(23)", {2, 1, 1, 6}, 20},
           PT{"(23)", {2, 1, 4, 3}, 1},
           PT{"(23)", {1, 2, 1, 6}, 40},
       }}},
      {"prod-13-15",
       {{
           PT{"(1)", {1, 3, 1, 5}, 7},
           PT{"(1)", {1, 2, 2, 5}, 7},
           PT{"(1)", {1, 2, 1, 6}, 15},
           PT{"(1)", {1, 1, 3, 5}, 7},
           PT{"(1)", {1, 1, 2, 6}, 15},
           PT{"(1)", {1, 1, 1, 7}, 30},
           PT{"(1)", {1, 1, 4, 4}, 3},
           PT{"(1)", {1, 1, 5, 3}, 1},
           PT{"(1)", {1, 2, 3, 4}, 3},
           PT{"(1)", {1, 2, 4, 3}, 1},
           PT{"(1)", {1, 3, 2, 4}, 3},
           PT{"(1)", {1, 3, 3, 3}, 1},
           PT{"(1)", {1, 4, 14}, 3},
           PT{"(1)", {1, 4, 2, 3}, 1},
           PT{"(1)", {1, 5, 1, 3}, 1},
           PT{"(23)", {1, 1, 3, 5}, 14},
           PT{"(23)", {1, 1, 2, 6}, 30},
           PT{"(23)", {1, 1, 1, 7}, 60},
           PT{"(23)", {1, 1, 4, 4}, 6},
           PT{"(23)", {1, 1, 5, 3}, 2},
       }}},
      {"zeta2-x-zeta2",
       {{
           PT{"(1)", {2, 2, 2, 2}, 8},
           PT{"(1)", {2, 1, 3, 2}, 16},
           PT{"(1)", {2, 1, 2, 3}, 32},
           PT{"(1)", {2, 2, 1, 3}, 8},
           PT{"(1)", {2, 1, 1, 4}, 24},
           PT{"(1)", {1, 2, 2, 3}, 48},
           PT{"(1)", {1, 2, 3, 2}, 16},
           PT{"(1)", {1, 1, 2, 4}, 144},
           PT{"(1)", {1, 1, 3, 3}, 56},
           PT{"(1)", {1, 1, 4, 2}, 8},
           PT{"(1)", {1, 3, 2, 2}, 8},
           PT{"(1)", {1, 3, 1, 3}, 32},
           PT{"(1)", {1, 2, 1, 4}, 8},
           PT{"(1)", {1, 1, 15}, 8},
           PT{"(23)", {2, 2, 2, 2}, 16},
           PT{"(23)", {2, 1, 3, 2}, 24},
           PT{"(23)", {2, 1, 2, 3}, 32},
           PT{"(23)", {2, 2, 1, 3}, 40},
           PT{"(23)", {1, 2, 3, 2}, 48},
           PT{"(23)", {1, 2, 2, 3}, 80},
           PT{"(23)", {1, 3, 2, 2}, 36},
           PT{"(23)", {1, 3, 1, 3}, 60},
           PT{"(23)", {2, 1, 1, 4}, 48},
           PT{"(23)", {1, 2, 1, 4}, 96},
           PT{"(23)", {1, 1, 2, 4}, 248},
           PT{"(23)", {1, 1, 3, 3}, 128},
           PT{"(23)", {1, 1, 4, 2}, 40},
           PT{"(23)", {1, 1, 1, 5}, 384},
       }}},
      {"zeta2-x-zeta3",
       {{
           PT{"(1)", {1, 3, 3, 3}, 152},  PT{"(1)", {1, 2, 4, 3}, 216},
           PT{"(1)", {1, 2, 3, 4}, 360},  PT{"(1)", {1, 1, 5, 3}, 288},
           PT{"(1)", {1, 1, 4, 4}, 504},  PT{"(1)", {1, 1, 3, 5}, 768},
           PT{"(1)", {3, 1, 1, 5}, 48},   PT{"(1)", {3, 1, 2, 4}, 36},
           PT{"(1)", {3, 1, 3, 3}, 24},   PT{"(1)", {3, 2, 1, 4}, 24},
           PT{"(1)", {3, 2, 2, 3}, 16},   PT{"(1)", {3, 3, 1, 3}, 8},
           PT{"(23)", {1, 1, 5, 3}, 576}, PT{"(23)", {1, 1, 4, 4}, 1008},
           PT{"(23)", {1, 1, 3, 5}, 1536}, PT{"(23)", {1, 2, 4, 3}, 360},
           PT{"(23)", {1, 2, 3, 4}, 648}, PT{"(23)", {1, 2, 2, 5}, 1008},
           PT{"(23)", {1, 3, 3, 3}, 196}, PT{"(23)", {1, 3, 2, 4}, 360},
           PT{"(23)", {1, 3, 1, 5}, 576}, PT{"(23)", {2, 1, 4, 3}, 180},
           PT{"(23)", {2, 1, 3, 4}, 252}, PT{"(23)", {2, 1, 2, 5}, 504},
           PT{"(23)", {2, 2, 3, 3}, 96},  PT{"(23)", {2, 2, 2, 4}, 180},
           PT{"(23)", {2, 2, 1, 5}, 288}, PT{"(23)", {3, 1, 3, 3}, 32},
           PT{"(23)", {3, 1, 2, 4}, 60},  PT{"(23)", {3, 1, 1, 5}, 96},
           PT{"(1)", {1, 3, 2, 4}, 240},  PT{"(1)", {1, 2, 2, 5}, 528},
           PT{"(1)", {1, 1, 2, 6}, 1080}, PT{"(1)", {2, 1, 1, 6}, 360},
           PT{"(1)", {2, 1, 2, 5}, 264},  PT{"(1)", {2, 1, 3, 4}, 180},
           PT{"(1)", {2, 1, 4, 3}, 108},  PT{"(1)", {2, 2, 1, 5}, 168},
           PT{"(1)", {2, 2, 2, 4}, 120},  PT{"(1)", {2, 2, 3, 3}, 76},
           PT{"(1)", {2, 3, 1, 4}, 72},   PT{"(1)", {2, 3, 2, 3}, 48},
           PT{"(1)", {2, 4, 1, 3}, 24},   PT{"(23)", {1, 1, 2, 6}, 2160},
           PT{"(23)", {2, 1, 1, 6}, 720}, PT{"(23)", {1, 2, 1, 6}, 1440},
           PT{"(1)", {1, 3, 1, 5}, 336},  PT{"(1)", {1, 2, 1, 6}, 720},
           PT{"(1)", {1, 1, 1, 7}, 1440}, PT{"(1)", {1, 4, 1, 4}, 144},
           PT{"(1)", {1, 4, 2, 3}, 96},   PT{"(1)", {1, 5, 1, 3}, 48},
           PT{"(23)", {1, 1, 1, 7}, 2880}, PT{"(1)", {3, 1, 4, 2}, 12},
           PT{"(1)", {3, 2, 3, 2}, 8},    PT{"(1)", {3, 3, 2, 2}, 4},
           PT{"(23)", {2, 3, 2, 3}, 36},  PT{"(23)", {2, 3, 1, 4}, 72},
           PT{"(23)", {2, 3, 3, 2}, 12},  PT{"(23)", {2, 2, 4, 2}, 36},
           PT{"(23)", {1, 4, 2, 3}, 72},  PT{"(23)", {1, 4, 1, 4}, 144},
           PT{"(23)", {1, 4, 3, 2}, 24},  PT{"(23)", {1, 3, 4, 2}, 140},
           PT{"(23)", {3, 2, 2, 3}, 12},  PT{"(23)", {3, 2, 1, 4}, 24},
           PT{"(23)", {3, 2, 3, 2}, 4},   PT{"(23)", {3, 1, 4, 2}, 12},
           PT{"(1)", {2, 1, 5, 2}, 48},   PT{"(1)", {2, 2, 4, 2}, 36},
           PT{"(1)", {2, 3, 3, 2}, 24},   PT{"(1)", {2, 4, 2, 2}, 12},
           PT{"(23)", {1, 2, 5, 2}, 144}, PT{"(23)", {2, 1, 5, 2}, 72},
           PT{"(1)", {1, 1, 6, 2}, 120},  PT{"(1)", {1, 2, 5, 2}, 96},
           PT{"(1)", {1, 3, 4, 2}, 72},   PT{"(1)", {1, 4, 3, 2}, 48},
           PT{"(1)", {1, 5, 2, 2}, 24},   PT{"(23)", {1, 1, 6, 2}, 240},
       }}},
  };
  return t;
}

}  // namespace

std::optional<PrintedForm> printed_reference(std::string_view identity_name) {
  const auto& t = tables();
  auto it = t.find(std::string(identity_name));
  if (it == t.end()) return std::nullopt;
  return it->second;
}

}  // namespace mdzv
