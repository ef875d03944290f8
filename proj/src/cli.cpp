#include "mdzv/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mdzv/errors.hpp"
#include "mdzv/eval.hpp"
#include "mdzv/formulas.hpp"
#include "mdzv/shuffle.hpp"

namespace mdzv {

namespace {

struct CommandConfig {
  int weight = 2;
  std::string variant = "(1)(1)";
  std::string left, right, term, identity;
  int norm_zeta = 0;
  int n1 = 2, n2 = 2;
  int field_d = -1;
  double radius = 0;  // 0 = per-command default
  double tol = 1e-10;
  std::string format = "text";
  std::string style = "comma";
  std::string precision = "double";
  bool include_boundary = false;
  bool raw = false;
  int threads = 1;
};

NotationStyle style_of(const CommandConfig& cfg) {
  return cfg.style == "semicolon" ? NotationStyle::Semicolon : NotationStyle::Comma;
}

void print_combination(const Combination& c, const PairingStructure& pairing,
                       const CommandConfig& cfg, std::ostream& out) {
  if (cfg.format == "latex")
    out << to_latex(c, style_of(cfg)) << "\n";
  else if (cfg.format == "json")
    out << to_json(c, pairing) << "\n";
  else
    out << to_text(c, style_of(cfg)) << "\n";
}

EvalContext make_context(const CommandConfig& cfg, int k, double default_radius) {
  const double radius = cfg.radius > 0 ? cfg.radius : default_radius;
  EvalContext ctx{enumerate_cone(FieldSpec::make(cfg.field_d), radius,
                                 cfg.include_boundary),
                  PairingStructure::standard(k)};
  ctx.threads = cfg.threads;
  return ctx;
}

std::string render_value(const std::complex<double>& z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? " - " : " + ")
     << (z.imag() < 0 ? -z.imag() : z.imag()) << "i";
  return os.str();
}

int do_eval(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.term.empty() == (cfg.norm_zeta == 0))
    throw ParseError("eval needs exactly one of --term or --norm-zeta");

  LhsSpec lhs = NormZetaLhs{cfg.norm_zeta};
  int k = 2;
  double default_radius = 40.0;
  if (!cfg.term.empty()) {
    const RefinedTerm term = parse_term(cfg.term);
    if (term.exponents.back() < 2)
      err << "warning: last exponent is 1, the untruncated series diverges; "
             "reporting the truncated value\n";
    k = term.k();
    default_radius = term.k() == 2 ? 40.0 : 10.0;
    lhs = TermLhs{term};
  } else if (cfg.norm_zeta < 2) {
    throw ParseError("--norm-zeta needs weight at least 2");
  }

  const EvalContext ctx = make_context(cfg, k, default_radius);
  if (cfg.precision == "extended") {
    // Reuse the verifier's extended path for the 50-digit rendering.
    const EvalReport rep = verify(lhs, Combination{}, ctx, 1.0, true);
    out << rep.lhs_str << "\n";
  } else {
    out << render_value(eval_lhs<std::complex<double>>(lhs, ctx)) << "\n";
  }
  return 0;
}

int do_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  NamedIdentity id = find_identity(cfg.identity);
  EvalContext ctx{enumerate_cone(FieldSpec::make(cfg.field_d),
                                 cfg.radius > 0 ? cfg.radius : 10.0,
                                 cfg.include_boundary),
                  id.pairing};
  ctx.threads = cfg.threads;
  const EvalReport rep =
      verify(id.lhs, id.rhs, ctx, cfg.tol, cfg.precision == "extended");

  out << "identity:  " << id.name << "\n"
      << "field:     " << cfg.field_d << "\n"
      << "radius:    " << ctx.trunc.radius << "\n"
      << "points:    " << rep.point_count << "\n"
      << "terms:     " << rep.term_count << "\n"
      << "tolerance: " << rep.tol << "\n"
      << "lhs:       " << rep.lhs_str << "\n"
      << "rhs:       " << rep.rhs_str << "\n";
  std::ostringstream errs;
  errs.precision(3);
  errs << "abs err:   " << rep.abs_err << "\n"
       << "rel err:   " << rep.rel_err << "\n";
  out << errs.str();
  out << "result:    " << (rep.pass ? "PASS" : "FAIL") << "\n";
  err << "time: " << rep.seconds << " s\n";
  return rep.pass ? 0 : 1;
}

int do_diff(const CommandConfig& cfg, std::ostream& out) {
  NamedIdentity id = find_identity(cfg.identity);
  const auto printed = printed_reference(id.name);
  if (!printed)
    throw UnknownIdentity("no printed reference table for " + id.name);
  const DiffReport report = reference_diff(id.rhs, *printed, id.pairing);
  out << "identity: " << id.name << "\n" << render(report);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"shuffle engine and numeric verifier for refined multiple "
               "Dedekind zeta values over imaginary quadratic fields"};
  app.require_subcommand(1);
  CommandConfig cfg;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text | latex | json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    sub->add_option("--style", cfg.style, "comma | semicolon exponent lists")
        ->check(CLI::IsMember({"comma", "semicolon"}));
  };
  const auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field_d,
                    "field discriminant d (negative squarefree)");
    sub->add_option("--radius", cfg.radius, "truncation radius")
        ->check(CLI::PositiveNumber);
    sub->add_option("--precision", cfg.precision, "double | extended")
        ->check(CLI::IsMember({"double", "extended"}));
    sub->add_flag("--include-boundary", cfg.include_boundary,
                  "add the ray Re = 0, Im > 0 to the summation domain");
    sub->add_option("--threads", cfg.threads, "worker cap")
        ->check(CLI::PositiveNumber);
  };

  auto* selfie = app.add_subcommand("selfie", "self-shuffle of a depth-one value");
  selfie->add_option("--weight", cfg.weight, "weight n >= 2")->required();
  selfie->add_flag("--raw", cfg.raw, "skip orbit collection");
  add_format(selfie);

  auto* selfie_mdzv =
      app.add_subcommand("selfie-mdzv", "self-shuffle of a depth-two value");
  selfie_mdzv->add_option("--variant", cfg.variant, "(1)(1) | (12)(1)")->required();
  selfie_mdzv->add_flag("--raw", cfg.raw, "skip orbit collection");
  add_format(selfie_mdzv);

  auto* shuffle = app.add_subcommand("shuffle", "shuffle product of two terms");
  shuffle->add_option("--left", cfg.left, "term \"<perm>:<e1>,<e2>\"")->required();
  shuffle->add_option("--right", cfg.right, "term \"<perm>:<e1>,<e2>\"")->required();
  shuffle->add_flag("--raw", cfg.raw, "skip orbit collection");
  add_format(shuffle);

  auto* product = app.add_subcommand("product", "full product expansion");
  product->add_option("--n1", cfg.n1, "first weight >= 2")->required();
  product->add_option("--n2", cfg.n2, "second weight >= 2")->required();
  add_format(product);

  auto* eval = app.add_subcommand("eval", "truncated lattice sum of one term");
  eval->add_option("--term", cfg.term, "term \"<perm>:<exponents>\"");
  eval->add_option("--norm-zeta", cfg.norm_zeta,
                   "sum 1/N^n instead of a refined term");
  add_numeric(eval);

  auto* verify = app.add_subcommand("verify", "check an identity numerically");
  verify->add_option("--identity", cfg.identity, "catalog name or coset:<rho>:<h>:<exps>")
      ->required();
  auto* tol_opt =
      verify->add_option("--tol", cfg.tol, "relative tolerance")
          ->check(CLI::PositiveNumber);
  add_numeric(verify);

  auto* diff = app.add_subcommand("diff", "compare an expansion with the published table");
  diff->add_option("--identity", cfg.identity, "catalog name")->required();

  std::vector<const char*> argv;
  argv.push_back("mdzv");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (selfie->parsed()) {
      if (cfg.weight < 2) throw ParseError("--weight must be at least 2");
      print_combination(self_shuffle_zeta(cfg.weight, !cfg.raw),
                        PairingStructure::standard(2), cfg, out);
      return 0;
    }
    if (selfie_mdzv->parsed()) {
      print_combination(self_shuffle_mdzv(parse_mdzv_variant(cfg.variant), !cfg.raw),
                        mdzv_pairing(), cfg, out);
      return 0;
    }
    if (shuffle->parsed()) {
      const RefinedTerm a = parse_term(cfg.left);
      const RefinedTerm b = parse_term(cfg.right);
      if (a.k() != 2 || b.k() != 2)
        throw ParseError("shuffle factors must carry two exponents each");
      const auto pairing = PairingStructure::standard(4);
      print_combination(shuffle_product(a, b, pairing, !cfg.raw), pairing, cfg, out);
      return 0;
    }
    if (product->parsed()) {
      if (cfg.n1 < 2 || cfg.n2 < 2) throw ParseError("weights must be at least 2");
      print_combination(product_zeta(cfg.n1, cfg.n2), PairingStructure::standard(4),
                        cfg, out);
      return 0;
    }
    if (eval->parsed()) return do_eval(cfg, out, err);
    if (verify->parsed()) {
      if (cfg.precision == "extended" && tol_opt->count() == 0) cfg.tol = 1e-30;
      return do_verify(cfg, out, err);
    }
    if (diff->parsed()) return do_diff(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadDiscriminant& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mdzv
