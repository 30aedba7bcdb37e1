#include "unmix/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "unmix/charset.hpp"
#include "unmix/decomp.hpp"
#include "unmix/elimination.hpp"
#include "unmix/errors.hpp"
#include "unmix/parser_io.hpp"
#include "unmix/report.hpp"
#include "unmix/triset.hpp"
#include "unmix/verify.hpp"

namespace unmix {

namespace {

using Json = nlohmann::ordered_json;

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string format = "text";
  std::string method = "improved";
  std::string order;
  std::string poly;
  bool verify = false;
  bool serial = false;
  std::size_t max_pairs = GbLimits{}.max_pairs;
  std::size_t max_coeff_bits = GbLimits{}.max_coeff_bits;
  std::size_t max_pops = CharserLimits{}.max_pops;
  int threads = 0;
  int verbosity = 0;
};

// Usage errors raised after option parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  const CliConfig& cfg;
  std::istream& in;
  Format format;
  Exec exec;
  GbLimits gb;
  CharserLimits charser;
  std::string out;
  std::string err;
  bool verify_failed = false;

  void info(const std::string& line) {
    if (cfg.verbosity > 0) err += "info: " + line + "\n";
  }
  void report(const CheckResult& c) {
    std::string status = c.skipped ? "skipped" : (c.passed ? "ok" : "FAILED");
    err += "verify: " + c.name + ": " + status;
    if (!c.detail.empty()) err += " (" + c.detail + ")";
    err += "\n";
    if (!c.passed) verify_failed = true;
  }
};

std::string braces(std::span<const Polynomial> polys) {
  std::string out = "{";
  auto rendered = io::render_all(polys);
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    if (i) out += ", ";
    out += rendered[i];
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vars_line(const VarOrder& order) {
  std::string out = "vars";
  for (const auto& n : order.names()) out += " " + n;
  return out + "\n";
}

void list_lines(std::string& out, std::span<const Polynomial> polys) {
  for (const auto& s : io::render_all(polys)) out += "  " + s + "\n";
}

io::SystemFile load(Context& ctx) {
  std::string text;
  if (ctx.cfg.input == "-") {
    std::stringstream ss;
    ss << ctx.in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(ctx.cfg.input, std::ios::binary);
    if (!file) throw UsageError("cannot read '" + ctx.cfg.input + "'");
    std::stringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  try {
    return io::parse_system(text);
  } catch (const ParseError& e) {
    throw UsageError(ctx.cfg.input + ": " + e.what());
  }
}

TriangularSet load_chain(Context& ctx, const io::SystemFile& sys) {
  try {
    return TriangularSet(sys.polys);
  } catch (const std::invalid_argument& e) {
    throw UsageError(ctx.cfg.input + ": " + e.what());
  }
}

Polynomial poly_option(Context& ctx, const VarOrderPtr& order) {
  if (ctx.cfg.poly.empty()) throw UsageError(ctx.cfg.subcommand + " requires --poly");
  try {
    return io::parse_polynomial(ctx.cfg.poly, order);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
}

SatMethod method_of(const CliConfig& cfg) {
  return cfg.method == "classic" ? SatMethod::classic : SatMethod::improved;
}

void cmd_parse(Context& ctx) {
  auto sys = load(ctx);
  if (ctx.format == Format::json) {
    Json j;
    j["name"] = sys.name;
    j["vars"] = sys.order->names();
    j["polys"] = io::render_all(sys.polys);
    ctx.out = j.dump(2) + "\n";
    return;
  }
  if (!sys.name.empty()) ctx.out += "# name: " + sys.name + "\n";
  ctx.out += vars_line(*sys.order);
  for (const auto& s : io::render_all(sys.polys)) ctx.out += s + "\n";
}

void cmd_prem(Context& ctx) {
  auto sys = load(ctx);
  auto chain = load_chain(ctx, sys);
  auto p = poly_option(ctx, sys.order);
  auto r = prem_chain(p, chain);
  if (ctx.format == Format::json) {
    Json j;
    j["remainder"] = io::render_polynomial(r.remainder);
    j["exponents"] = r.exponents;
    ctx.out = j.dump(2) + "\n";
  } else {
    ctx.out += "remainder " + io::render_polynomial(r.remainder) + "\nexponents";
    for (auto d : r.exponents) ctx.out += " " + std::to_string(d);
    ctx.out += "\n";
  }
  if (ctx.cfg.verify) {
    ctx.report(CheckResult{"pseudo-remainder identity", prem_identity_holds(p, chain, ctx.gb),
                           false, {}});
  }
}

void cmd_res(Context& ctx) {
  auto sys = load(ctx);
  auto chain = load_chain(ctx, sys);
  auto p = poly_option(ctx, sys.order);
  auto r = resultant_chain(p, chain, ctx.exec);
  if (ctx.format == Format::json) {
    Json j;
    j["resultant"] = io::render_polynomial(r);
    ctx.out = j.dump(2) + "\n";
  } else {
    ctx.out = "resultant " + io::render_polynomial(r) + "\n";
  }
}

void cmd_uset(Context& ctx) {
  auto sys = load(ctx);
  auto chain = load_chain(ctx, sys);
  auto rep = report_triset(chain, ctx.exec);
  if (ctx.format == Format::json) {
    Json j;
    j["vars"] = sys.order->names();
    j["flags"] = Json{{"triangular", rep.flags.triangular},
                      {"ascending", rep.flags.noncontradictory_ascending},
                      {"regular", rep.flags.regular},
                      {"normal", rep.flags.normal}};
    j["elements"] = Json::array();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      Json e;
      e["poly"] = io::render_polynomial(chain[i]);
      e["initial"] = io::render_polynomial(chain.initial(i));
      e["initial_resultant"] = io::render_polynomial(rep.initial_resultants[i]);
      e["coefficients"] = io::render_all(rep.coefficient_sets[i]);
      e["resultants"] = io::render_all(rep.resultant_sets[i]);
      j["elements"].push_back(std::move(e));
    }
    j["u_set"] = io::render_all(rep.u_set);
    ctx.out = j.dump(2) + "\n";
    return;
  }
  auto& out = ctx.out;
  out += vars_line(*sys.order);
  out += "flags triangular=" + yes_no(rep.flags.triangular) +
         " ascending=" + yes_no(rep.flags.noncontradictory_ascending) +
         " regular=" + yes_no(rep.flags.regular) + " normal=" + yes_no(rep.flags.normal) + "\n";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const std::string tag = "f" + std::to_string(i + 1);
    out += tag + " = " + io::render_polynomial(chain[i]) + "\n";
    out += "  ini = " + io::render_polynomial(chain.initial(i)) + "\n";
    out += "  res(ini, T) = " + io::render_polynomial(rep.initial_resultants[i]) + "\n";
    out += "  C = " + braces(rep.coefficient_sets[i]) + "\n";
    out += "  R = " + braces(rep.resultant_sets[i]) + "\n";
  }
  out += "U_T = " + braces(rep.u_set) + "\n";
}

void cmd_charset(Context& ctx) {
  auto sys = load(ctx);
  auto cs = wu_charset(sys.polys);
  if (ctx.format == Format::json) {
    Json j;
    j["vars"] = sys.order->names();
    j["contradiction"] = cs.contradictory();
    j["chain"] = cs.contradictory() ? Json::array() : Json(io::render_all(cs.chain->elements()));
    ctx.out = j.dump(2) + "\n";
  } else {
    ctx.out += vars_line(*sys.order);
    if (cs.contradictory()) {
      ctx.out += "contradiction\n";
    } else {
      ctx.out += "chain\n";
      list_lines(ctx.out, cs.chain->elements());
    }
  }
  if (ctx.cfg.verify && !cs.contradictory()) {
    bool ok = std::all_of(sys.polys.begin(), sys.polys.end(), [&](const Polynomial& p) {
      return prem_chain(p, *cs.chain).remainder.is_zero();
    });
    ctx.report(CheckResult{"prem(P, T) = {0}", ok, false, {}});
  }
}

void cmd_charser(Context& ctx) {
  auto sys = load(ctx);
  CharserStats stats;
  auto branches = charser_a(sys.polys, ctx.charser, ctx.exec, &stats);
  ctx.info("worklist pops " + std::to_string(stats.pops) + ", contradictions " +
           std::to_string(stats.contradictions));
  if (ctx.format == Format::json) {
    Json j;
    j["vars"] = sys.order->names();
    j["branches"] = Json::array();
    for (const auto& b : branches) {
      j["branches"].push_back(
          Json{{"chain", io::render_all(b.triset.elements())}, {"u_set", io::render_all(b.u_set)}});
    }
    ctx.out = j.dump(2) + "\n";
  } else {
    ctx.out += vars_line(*sys.order);
    ctx.out += "branches " + std::to_string(branches.size()) + "\n";
    for (std::size_t i = 0; i < branches.size(); ++i) {
      ctx.out += "\nbranch " + std::to_string(i + 1) + "\nchain\n";
      list_lines(ctx.out, branches[i].triset.elements());
      ctx.out += "u_set " + braces(branches[i].u_set) + "\n";
    }
  }
  if (ctx.cfg.verify) {
    CheckResult prem_ok{"prem(P, T_i) = {0}", true, false, {}};
    CheckResult member_ok{"chains inside their source ideals", true, false, {}};
    for (const auto& b : branches) {
      for (const auto& p : sys.polys) {
        if (!prem_chain(p, b.triset).remainder.is_zero()) prem_ok.passed = false;
      }
      auto g = buchberger(b.source, TermOrderSpec::lex(*sys.order), ctx.gb);
      if (!all_members(b.triset.elements(), g, ctx.exec)) member_ok.passed = false;
    }
    ctx.report(prem_ok);
    ctx.report(member_ok);
  }
}

void cmd_gb(Context& ctx) {
  auto sys = load(ctx);
  TermOrderSpec order;
  try {
    order = ctx.cfg.order.empty() ? TermOrderSpec::lex(*sys.order)
                                  : TermOrderSpec::parse(ctx.cfg.order);
    auto g = buchberger(sys.polys, order, ctx.gb);
    if (ctx.format == Format::json) {
      Json j;
      j["order"] = order.to_string();
      j["generators"] = io::render_all(g.generators());
      ctx.out = j.dump(2) + "\n";
    } else {
      ctx.out = "order " + order.to_string() + "\nsize " + std::to_string(g.size()) + "\n";
      list_lines(ctx.out, g.generators());
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void cmd_sat(Context& ctx) {
  auto sys = load(ctx);
  auto chain = load_chain(ctx, sys);
  const SatMethod method = method_of(ctx.cfg);
  Polynomial h = saturation_multiplier(chain, method, ctx.exec);
  std::size_t aux = 0;
  auto g = saturate(chain, method, ctx.gb, ctx.exec, &aux);
  if (ctx.format == Format::json) {
    Json j;
    j["method"] = to_string(method);
    j["multiplier"] = io::render_polynomial(h);
    j["auxiliary_basis_size"] = aux;
    j["generators"] = io::render_all(g.generators());
    ctx.out = j.dump(2) + "\n";
  } else {
    ctx.out += "method " + to_string(method) + "\nmultiplier " + io::render_polynomial(h) +
               "\nauxiliary_basis_size " + std::to_string(aux) + "\nsize " +
               std::to_string(g.size()) + "\n";
    list_lines(ctx.out, g.generators());
  }
  if (ctx.cfg.verify) ctx.report(check_saturation(chain, h, g, 20, ctx.gb));
}

void cmd_decompose(Context& ctx) {
  auto sys = load(ctx);
  const SatMethod method = method_of(ctx.cfg);
  DecompLimits limits{ctx.gb, ctx.charser};
  auto d = unm_var_dec(sys.polys, method, limits, ctx.exec);
  ctx.info("worklist pops " + std::to_string(d.charser_stats.pops) + ", branches " +
           std::to_string(d.branches.size()) + ", components " +
           std::to_string(d.components.size()));
  for (const auto& p : d.pruned) {
    ctx.info("pruned (" + p.reason + ") " + braces(p.chain.elements()));
  }
  ctx.out = emit_result(*sys.order, d.components, ctx.format);
  if (ctx.cfg.verify) {
    for (const auto& c : verify_decomposition(sys.polys, d, ctx.gb)) ctx.report(c);
    const SatMethod other = method == SatMethod::classic ? SatMethod::improved : SatMethod::classic;
    auto alt = unm_var_dec(sys.polys, other, limits, ctx.exec);
    auto same = check_same_variety(d.components, alt.components, 200, ctx.gb);
    same.name = "same variety as --method " + to_string(other);
    ctx.report(same);
  }
}

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("input", cfg.input, "system file, or - for standard input")->required();
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--method", cfg.method, "saturation method")
      ->check(CLI::IsMember({"improved", "classic"}));
  sub->add_option("--order", cfg.order, "lex order, greatest first, e.g. \"z>x2>x1\"");
  sub->add_option("--poly", cfg.poly, "polynomial for prem and res");
  sub->add_flag("--verify", cfg.verify, "run the expensive property checks");
  sub->add_flag("--serial", cfg.serial, "use the serial reference kernels");
  sub->add_option("--max-pairs", cfg.max_pairs, "Groebner pair queue ceiling")
      ->envname("UNMIX_MAX_PAIRS")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-coeff-bits", cfg.max_coeff_bits, "coefficient size ceiling in bits")
      ->envname("UNMIX_MAX_COEFF_BITS")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-pops", cfg.max_pops, "CharserA worklist ceiling")
      ->envname("UNMIX_MAX_POPS")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")
      ->envname("UNMIX_THREADS")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("-v,--verbose", cfg.verbosity, "print progress information");
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, std::istream& in) {
  CliConfig cfg;
  CLI::App app{"Unmixed decomposition of polynomial systems", "unmix"};
  app.require_subcommand(1, 1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"parse", "parse a system and print it canonically"},
      {"prem", "pseudo-remainder of --poly by the chain in the input"},
      {"res", "resultant of --poly with respect to the chain in the input"},
      {"uset", "coefficient sets, resultant sets and U-set of a chain"},
      {"charset", "Wu characteristic set"},
      {"charser", "characteristic series with U-set splitting"},
      {"gb", "reduced lexicographic Groebner basis"},
      {"sat", "saturation ideal of a chain"},
      {"decompose", "unmixed decomposition of the zero set"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), cfg);

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  set_thread_count(cfg.threads);
  Context ctx{cfg,
              in,
              parse_format(cfg.format),
              cfg.serial ? Exec::serial : Exec::parallel,
              GbLimits{cfg.max_pairs, cfg.max_coeff_bits},
              CharserLimits{cfg.max_pops},
              {},
              {},
              false};
  try {
    const auto& c = cfg.subcommand;
    if (c == "parse") cmd_parse(ctx);
    else if (c == "prem") cmd_prem(ctx);
    else if (c == "res") cmd_res(ctx);
    else if (c == "uset") cmd_uset(ctx);
    else if (c == "charset") cmd_charset(ctx);
    else if (c == "charser") cmd_charser(ctx);
    else if (c == "gb") cmd_gb(ctx);
    else if (c == "sat") cmd_sat(ctx);
    else cmd_decompose(ctx);
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = ctx.err + "error: " + e.what() + "\n";
    return result;
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = ctx.err + "error: " + e.what() + "\n";
    return result;
  } catch (const ResourceLimit& e) {
    result.exit_code = 3;
    result.err = ctx.err + "error: resource limit: " + e.what() + "\n";
    return result;
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.err = ctx.err + "error: " + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.err = ctx.err + "error: " + e.what() + "\n";
    return result;
  }
  result.out = std::move(ctx.out);
  result.err = std::move(ctx.err);
  result.exit_code = ctx.verify_failed ? 1 : 0;
  return result;
}

}  // namespace unmix
