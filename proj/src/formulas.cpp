#include "mdzv/formulas.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mdzv/errors.hpp"

namespace mdzv {

using ordered_json = nlohmann::ordered_json;

Combination self_shuffle_zeta(int n, bool simplify) {
  if (n < 2) throw std::invalid_argument("weight must be at least 2");
  return shuffle_product_chains(Chain::single_zeta(n, 1), Chain::single_zeta(n, 2),
                                PairingStructure::standard(2), simplify);
}

PairingStructure mdzv_pairing() { return PairingStructure::of_pairs({{1, 3}, {2, 4}}); }

Combination self_shuffle_mdzv(MdzvVariant variant, bool simplify) {
  // Generators: 1 = a1, 2 = b1, 3 = a2, 4 = b2. The first chain carries
  // the base frequencies, the second their conjugates; the twisted
  // variant swaps which frequency sits on top of the first chain.
  Chain first, second;
  first.slots = variant == MdzvVariant::Separated ? std::vector<int>{1, 2, 0}
                                                  : std::vector<int>{2, 1, 0};
  second.slots = {3, 4, 0};
  return shuffle_product_chains(first, second, mdzv_pairing(), simplify);
}

Combination corollary_difference(bool simplify) {
  return self_shuffle_mdzv(MdzvVariant::Separated, simplify) -
         self_shuffle_mdzv(MdzvVariant::Twisted, simplify);
}

Combination product_zeta(int n1, int n2) {
  const Combination f1 = self_shuffle_zeta(n1);
  const Combination f2 = self_shuffle_zeta(n2);
  const PairingStructure pairing = PairingStructure::standard(4);
  Combination out;
  for (const auto& [t1, c1] : f1.terms())
    for (const auto& [t2, c2] : f2.terms()) {
      Combination part = shuffle_product(t1, t2, pairing, true);
      part *= c1;
      part *= c2;
      out += part;
    }
  return out;
}

// ---------------------------------------------------------------------
// Rendering

namespace {

// Display order: by permutation, then heaviest leading exponents first.
std::vector<std::pair<RefinedTerm, std::int64_t>> display_order(const Combination& c) {
  std::vector<std::pair<RefinedTerm, std::int64_t>> items(c.terms().begin(),
                                                          c.terms().end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.order != y.first.order) return x.first.order < y.first.order;
    return x.first.exponents > y.first.exponents;
  });
  return items;
}

std::string exponent_list(const RefinedTerm& t, NotationStyle style) {
  std::string out = "(";
  for (size_t i = 0; i < t.exponents.size(); ++i) {
    if (i) out += (style == NotationStyle::Semicolon && i * 2 == t.exponents.size())
                      ? ';'
                      : ',';
    out += std::to_string(t.exponents[i]);
  }
  out += ')';
  return out;
}

std::string render_terms(const Combination& c, NotationStyle style,
                         std::string_view zeta_open, std::string_view zeta_close,
                         std::string_view plus) {
  if (c.empty()) return "0";
  std::string out;
  for (bool first = true; const auto& [t, coeff] : display_order(c)) {
    std::int64_t shown = coeff;
    if (first) {
      if (coeff < 0) {
        out += '-';
        shown = -coeff;
      }
      first = false;
    } else if (coeff < 0) {
      out += '-';
      shown = -coeff;
    } else {
      out += plus;
    }
    if (shown != 1) out += std::to_string(shown);
    out += zeta_open;
    out += t.perm().str();
    out += zeta_close;
    out += exponent_list(t, style);
  }
  return out;
}

}  // namespace

std::string to_latex(const Combination& c, NotationStyle style) {
  return render_terms(c, style, "\\zeta^{", "}", "+");
}

std::string to_text(const Combination& c, NotationStyle style) {
  return render_terms(c, style, "ζ^", "", " + ");
}

std::string to_json(const Combination& c, const PairingStructure& pairing) {
  ordered_json j;
  j["k"] = pairing.k();
  ordered_json jp = ordered_json::array();
  for (auto [a, b] : pairing.pairs()) jp.push_back({a, b});
  j["pairing"] = jp;
  ordered_json terms = ordered_json::array();
  for (const auto& [t, coeff] : display_order(c)) {
    ordered_json jt;
    jt["perm"] = t.perm().str();
    jt["exponents"] = t.exponents;
    jt["coeff"] = coeff;
    terms.push_back(jt);
  }
  j["terms"] = terms;
  return j.dump();
}

std::pair<Combination, PairingStructure> from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad combination json: ") + e.what());
  }
  try {
    const int k = j.at("k").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairing"))
      pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    PairingStructure pairing = PairingStructure::of_pairs(std::move(pairs));
    if (pairing.k() != k) throw ParseError("pairing does not match k");
    Combination c;
    for (const auto& jt : j.at("terms")) {
      const auto perm =
          Permutation::parse(jt.at("perm").get<std::string>(), k);
      std::vector<int> exps = jt.at("exponents").get<std::vector<int>>();
      c.add(RefinedTerm(perm, std::move(exps)), jt.at("coeff").get<std::int64_t>());
    }
    return {std::move(c), std::move(pairing)};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad combination json: ") + e.what());
  }
}

// ---------------------------------------------------------------------
// Identity catalog

namespace {

NamedIdentity make_selfie(int n) {
  NamedIdentity id;
  id.name = "selfie-zeta" + std::to_string(n);
  id.title = "self-shuffle of the weight-" + std::to_string(n) + " value";
  id.lhs = NormZetaLhs{n};
  id.pairing = PairingStructure::standard(2);
  id.rhs = self_shuffle_zeta(n);
  return id;
}

NamedIdentity make_mdzv_selfie(MdzvVariant v) {
  NamedIdentity id;
  id.name = std::string("selfie-mdzv-") + std::string(mdzv_variant_name(v));
  id.title = std::string("self-shuffle of the depth-two value, placement ") +
             std::string(mdzv_variant_name(v));
  id.lhs = MdzvSelfieLhs{v};
  id.pairing = mdzv_pairing();
  id.rhs = self_shuffle_mdzv(v);
  return id;
}

NamedIdentity make_refined_product(std::array<int, 2> e1, std::array<int, 2> e2) {
  const auto tag = [](std::array<int, 2> e) {
    return std::to_string(e[0]) + std::to_string(e[1]);
  };
  RefinedTerm a(Permutation(2), {e1[0], e1[1]});
  RefinedTerm b(Permutation(2), {e2[0], e2[1]});
  NamedIdentity id;
  id.name = "prod-" + tag(e1) + "-" + tag(e2);
  id.title = "refined product (" + std::to_string(e1[0]) + "," +
             std::to_string(e1[1]) + ") x (" + std::to_string(e2[0]) + "," +
             std::to_string(e2[1]) + ")";
  id.lhs = RefinedProductLhs{a, b};
  id.pairing = PairingStructure::standard(4);
  id.rhs = shuffle_product(a, b, id.pairing, true);
  return id;
}

NamedIdentity make_full_product(int n1, int n2) {
  NamedIdentity id;
  id.name = "zeta" + std::to_string(n1) + "-x-zeta" + std::to_string(n2);
  id.title = "full product of the weight-" + std::to_string(n1) + " and weight-" +
             std::to_string(n2) + " values";
  id.lhs = NormZetaProductLhs{n1, n2};
  id.pairing = PairingStructure::standard(4);
  id.rhs = product_zeta(n1, n2);
  return id;
}

NamedIdentity make_corollary() {
  NamedIdentity id;
  id.name = "corollary-diff";
  id.title = "difference of the two depth-two self-shuffles";
  id.lhs = MdzvSelfieDifferenceLhs{};
  id.pairing = mdzv_pairing();
  id.rhs = corollary_difference();
  return id;
}

std::vector<NamedIdentity> build_catalog() {
  std::vector<NamedIdentity> out;
  out.push_back(make_selfie(2));
  out.push_back(make_selfie(3));
  out.push_back(make_mdzv_selfie(MdzvVariant::Separated));
  out.push_back(make_mdzv_selfie(MdzvVariant::Twisted));
  out.push_back(make_corollary());
  out.push_back(make_refined_product({2, 2}, {2, 2}));
  out.push_back(make_refined_product({2, 2}, {1, 3}));
  out.push_back(make_refined_product({1, 3}, {1, 3}));
  out.push_back(make_refined_product({2, 2}, {3, 3}));
  out.push_back(make_refined_product({2, 2}, {2, 4}));
  out.push_back(make_refined_product({2, 2}, {1, 5}));
  out.push_back(make_refined_product({1, 3}, {3, 3}));
  out.push_back(make_refined_product({1, 3}, {2, 4}));
  out.push_back(make_refined_product({1, 3}, {1, 5}));
  out.push_back(make_full_product(2, 2));
  out.push_back(make_full_product(2, 3));
  return out;
}

NamedIdentity parse_coset_identity(std::string_view name) {
  // coset:<rho>:<h>:<e1,e2,e3,e4> -- checks zeta^{h*rho} == zeta^{rho}.
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= name.size()) {
    size_t colon = name.find(':', pos);
    if (colon == std::string_view::npos) colon = name.size();
    parts.emplace_back(name.substr(pos, colon - pos));
    if (colon == name.size()) break;
    pos = colon + 1;
  }
  if (parts.size() != 4)
    throw UnknownIdentity("coset identity needs coset:<rho>:<h>:<exponents>");
  const Permutation rho = Permutation::parse(parts[1], 4);
  const Permutation h = Permutation::parse(parts[2], 4);
  const RefinedTerm base = parse_term("(1):" + parts[3]);
  if (base.k() != 4) throw UnknownIdentity("coset identity needs four exponents");

  NamedIdentity id;
  id.name = std::string(name);
  id.title = "orbit invariance h*rho vs rho";
  id.pairing = PairingStructure::standard(4);
  id.lhs = TermLhs{RefinedTerm(h * rho, base.exponents)};
  id.rhs.add(RefinedTerm(rho, base.exponents), 1);
  return id;
}

}  // namespace

const std::vector<NamedIdentity>& identity_catalog() {
  static const std::vector<NamedIdentity> catalog = build_catalog();
  return catalog;
}

NamedIdentity find_identity(std::string_view name) {
  if (name.rfind("coset:", 0) == 0) return parse_coset_identity(name);
  for (const auto& id : identity_catalog())
    if (id.name == name) return id;
  throw UnknownIdentity("unknown identity: " + std::string(name));
}

// ---------------------------------------------------------------------
// Published-table comparison

DiffReport reference_diff(const Combination& computed, const PrintedForm& printed,
                          const PairingStructure& pairing) {
  DiffReport report;

  Combination canon_computed;
  for (const auto& [t, c] : computed.terms())
    canon_computed.add(canonicalize(t, pairing), c);

  const int k = pairing.k();
  const int weight = canon_computed.empty()
                         ? 0
                         : canon_computed.terms().begin()->first.weight();

  Combination canon_printed;
  std::map<RefinedTerm, int> seen;
  for (const auto& p : printed.terms) {
    if (static_cast<int>(p.exponents.size()) != k ||
        std::any_of(p.exponents.begin(), p.exponents.end(),
                    [](int e) { return e < 1; })) {
      report.malformed.push_back(p);
      continue;
    }
    RefinedTerm t(Permutation::parse(p.perm, k), p.exponents);
    if (weight != 0 && t.weight() != weight) {
      report.malformed.push_back(p);
      continue;
    }
    RefinedTerm canon = canonicalize(t, pairing);
    const std::string canon_label = canon.perm().str();
    if (canon_label != p.perm) {
      std::pair<std::string, std::string> alias{p.perm, canon_label};
      if (std::find(report.aliases.begin(), report.aliases.end(), alias) ==
          report.aliases.end())
        report.aliases.push_back(std::move(alias));
    }
    if (++seen[canon] == 2) report.duplicated.push_back(p);
    canon_printed.add(canon, p.coeff);
  }

  for (const auto& [t, c] : canon_computed.terms()) {
    const std::int64_t pc = canon_printed.coefficient(t);
    if (pc == 0)
      report.only_computed.push_back({t, c, std::nullopt});
    else if (pc != c)
      report.mismatched.push_back({t, c, pc});
  }
  for (const auto& [t, pc] : canon_printed.terms())
    if (canon_computed.coefficient(t) == 0)
      report.only_printed.push_back({t, std::nullopt, pc});
  return report;
}

std::string render(const DiffReport& report) {
  std::ostringstream os;
  if (report.clean()) {
    os << "no differences\n";
  } else {
    for (const auto& e : report.mismatched)
      os << "coefficient mismatch  " << e.term.str() << "  computed " << *e.computed
         << "  printed " << *e.printed << "\n";
    for (const auto& e : report.only_computed)
      os << "missing from printed  " << e.term.str() << "  computed " << *e.computed
         << "\n";
    for (const auto& e : report.only_printed)
      os << "only in printed       " << e.term.str() << "  printed " << *e.printed
         << "\n";
    for (const auto& p : report.malformed) {
      os << "malformed printed     " << p.coeff << " " << p.perm << "(";
      for (size_t i = 0; i < p.exponents.size(); ++i)
        os << (i ? "," : "") << p.exponents[i];
      os << ")\n";
    }
  }
  for (const auto& p : report.duplicated) {
    os << "printed twice         " << p.perm << "(";
    for (size_t i = 0; i < p.exponents.size(); ++i)
      os << (i ? "," : "") << p.exponents[i];
    os << ")\n";
  }
  for (const auto& [from, to] : report.aliases)
    os << "alias                 printed " << from << " == canonical " << to << "\n";
  return os.str();
}

}  // namespace mdzv
