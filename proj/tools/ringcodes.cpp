// ringcodes: audits and code constructions over Z_{4^s}, A_{m-1} and R^{s,m}.
//
// Exit status: 0 success (measured discrepancies included), 1 a check that
// must hold failed or an internal error, 2 bad usage or malformed input.

#include "output.hpp"

#include "ringcodes/ringcodes.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace ringcodes::cli {
namespace {

struct RingArgs {
  int m = 4;
  int s = 1;

  RingParams params() const {
    RingParams p{m, s};
    try {
      p.validate();
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

void add_ring_options(CLI::App* cmd, RingArgs& r) {
  cmd->add_option("--m", r.m, "tower parameter m (even, >= 4)")->capture_default_str();
  cmd->add_option("--s", r.s, "base ring Z_{4^s}")->capture_default_str();
}

std::shared_ptr<const TowerRing> make_ring(RingParams p) {
  try {
    return std::make_shared<const TowerRing>(p);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

Json counts(const AuditReport& rep) {
  Json c = {{"pass", 0}, {"fail", 0}, {"measured-discrepancy", 0}};
  for (const auto& e : rep.entries()) c[to_string(e.status)] = c[to_string(e.status)].get<int>() + 1;
  return c;
}

void emit_report(const std::string& command, Json context, const AuditReport& rep, const GlobalOptions& g) {
  if (g.fmt() == Format::csv) {
    Table t({"claim", "status", "anchor", "evidence"});
    for (const auto& e : rep.entries()) t.add({e.claim, to_string(e.status), e.anchor, e.evidence.dump()});
    std::cout << t.str();
    return;
  }
  Json doc = {{"command", command}, {"context", std::move(context)}, {"summary", counts(rep)}, {"entries", rep.to_json()}};
  std::cout << dump(stamp(std::move(doc), g));
}

void emit_summary(Json doc, const GlobalOptions& g) {
  if (g.fmt() == Format::csv) {
    Table t({"key", "value"});
    for (auto it = doc.begin(); it != doc.end(); ++it) t.add({it.key(), it.value()});
    std::cout << t.str();
    return;
  }
  std::cout << dump(stamp(std::move(doc), g));
}

int exit_status(const AuditReport& rep) { return rep.no_failures() ? 0 : 1; }

RCode load_code(const std::string& path) {
  const Json j = read_json_file(path);
  ComponentSpec spec = parse_component_spec(j);
  return RCode(make_ring(spec.params()), std::move(spec));
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  RingArgs ring;
  std::size_t n = 1;
  std::size_t samples = 10;
};

int run_verify(const VerifyArgs& a, const GlobalOptions& g) {
  const RingParams p = a.ring.params();
  VerifyOptions opt;
  opt.n = a.n;
  opt.tau_samples = a.samples;
  if (g.seed) opt.seed = *g.seed;
  if (a.n < 1) throw UsageError("--n must be at least 1");
  make_ring(p);
  const AuditReport rep = verify_all(p, opt);
  emit_report("verify", {{"m", p.m}, {"s", p.s}, {"n", a.n}, {"seed", opt.seed}}, rep, g);
  return exit_status(rep);
}

// ----------------------------------------------------------------- build

struct BuildArgs {
  std::string spec;
  std::string out;
  bool weights = false;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::size_t samples = 4096;
};

int run_build(const BuildArgs& a, const GlobalOptions& g) {
  const RCode code = load_code(a.spec);
  const auto rows = code.stacked_rows();
  const auto degenerate = std::count_if(rows.begin(), rows.end(), [](const GeneratorRow& r) { return r.degenerate; });
  Json summary = {{"command", "build"},
                  {"m", code.params().m},
                  {"s", code.params().s},
                  {"n", code.n()},
                  {"cardinality", code_cardinality(code).to_json()},
                  {"stacked_rows", rows.size()},
                  {"degenerate_rows", degenerate},
                  {"r_closure", r_closure_audit(code).to_json()}};
  if (a.weights) {
    WeightOptions wo;
    wo.budget = a.budget;
    wo.seed = g.seed;
    wo.samples = a.samples;
    wo.workers = g.workers;
    summary["weights"] = min_weight_report(code, wo).to_json();
  }
  const Json doc = stamp(to_json(code), g);
  if (!a.out.empty()) {
    write_text(a.out, dump(doc));
    summary["written"] = a.out;
  } else if (g.fmt() == Format::json) {
    summary["code"] = doc;
  }
  emit_summary(std::move(summary), g);
  return 0;
}

// ------------------------------------------------------------------ dual

struct DualArgs {
  std::string code;
  std::string out;
};

int run_dual(const DualArgs& a, const GlobalOptions& g) {
  const RCode code = load_code(a.code);
  const RCode dual = dual_code(code);
  VerifyOptions vo;
  AuditReport rep = audit_code(code, vo);
  Json summary = {{"command", "dual"},
                  {"m", code.params().m},
                  {"s", code.params().s},
                  {"n", code.n()},
                  {"code_cardinality", to_string(code.cardinality())},
                  {"dual_cardinality", to_string(dual.cardinality())}};
  for (const char* claim : {"code.duality", "code.dual_is_full_dual"})
    if (const auto* e = rep.find(claim)) summary[claim] = e->to_json();
  const Json doc = stamp(to_json(dual), g);
  if (!a.out.empty()) {
    write_text(a.out, dump(doc));
    summary["written"] = a.out;
  } else if (g.fmt() == Format::json) {
    summary["dual"] = doc;
  }
  emit_summary(std::move(summary), g);
  const auto* d = rep.find("code.duality");
  return d && d->status == Status::fail ? 1 : 0;
}

// ------------------------------------------------------------------ gray

struct GrayArgs {
  std::string code;
  std::string out;
};

int run_gray(const GrayArgs& a, const GlobalOptions& g) {
  const RCode code = load_code(a.code);
  const ZModMatrix G = gray_generator_matrix(code);
  const ZModMatrix I = gray_image_generators(code);
  if (g.fmt() == Format::csv) {
    write_text(a.out, matrix_table(to_json(G)).str());
    return 0;
  }
  Json doc = {{"command", "gray"},
              {"m", code.params().m},
              {"s", code.params().s},
              {"n", code.n()},
              {"order", GrayVector::order},
              {"cols", G.cols()},
              {"rows", to_json(G)},
              {"image_rows", to_json(I)},
              {"gray_span_cardinality", to_string(span_cardinality(G))},
              {"image_cardinality", to_string(span_cardinality(I))},
              {"code_cardinality", to_string(code.cardinality())}};
  write_text(a.out, dump(stamp(std::move(doc), g)));
  return 0;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  std::string kind;
  std::string ring = "z4";
  std::string type = "alpha";
  RingArgs params;
  unsigned k = 1;
  unsigned u = 0;
  std::string divisors;
  bool stats = false;
  bool matrix = false;
  std::uint64_t budget = std::uint64_t{1} << 20;
};

DivisorSet parse_divisors(const std::string& text, const RingDescriptor& R) {
  if (text.empty()) return {};
  if (R.kind() != RingKind::zq) throw UsageError("--divisors is only supported over Z_{4^s}");
  std::vector<Digits> list;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      list.push_back({R.ring().from_signed(std::stoll(item))});
    } catch (const std::exception&) {
      throw UsageError("bad divisor '" + item + "'");
    }
  }
  return DivisorSet(std::move(list));
}

Json element_json(const RingDescriptor& R, const Digits& d) {
  if (R.kind() == RingKind::zq) return d[0];
  return d;
}

int run_family(const FamilyArgs& a, const GlobalOptions& g) {
  RingDescriptor R = RingDescriptor::zq(1);
  try {
    R = parse_ring(a.ring, static_cast<unsigned>(a.params.s), a.params.m);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  const bool beta = a.type == "beta";
  const DivisorSet D = parse_divisors(a.divisors, R);
  std::optional<LazyGenerator> gen;
  try {
    if (a.kind == "simplex") gen = beta ? simplex_beta(R, a.k, D) : simplex_alpha(R, a.k);
    else gen = macdonald(R, a.k, a.u, beta ? Family::macdonald_beta : Family::macdonald_alpha, D);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }

  if (a.matrix && g.fmt() == Format::csv) {
    const auto rows = gen->materialize(a.budget);
    Json j = Json::array();
    for (const auto& r : rows) {
      Json row = Json::array();
      for (const auto& e : r) row.push_back(element_json(R, e));
      j.push_back(row);
    }
    std::cout << matrix_table(j).str();
    return 0;
  }

  Json doc = {{"command", "family"},
              {"ring", R.name()},
              {"family", to_string(gen->family())},
              {"k", a.k},
              {"length", to_string(gen->column_count())},
              {"divisors", D.is_default() ? "non-units" : a.divisors}};
  if (gen->u()) doc["u"] = *gen->u();
  if (a.stats) {
    FamilyStatsOptions so;
    so.budget = a.budget;
    so.seed = g.seed;
    doc["stats"] = family_stats(*gen, so).to_json();
  }
  if (a.matrix) {
    Json rows = Json::array();
    for (const auto& r : gen->materialize(a.budget)) {
      Json row = Json::array();
      for (const auto& e : r) row.push_back(element_json(R, e));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
  }
  emit_summary(std::move(doc), g);
  return 0;
}

// -------------------------------------------------------------- qc-check

struct QcArgs {
  std::string code;
  std::string generators;
  std::string tau;
  std::string tau_file;
  bool allow_arbitrary = false;
  RingArgs ring;
  std::size_t n = 7;
  std::uint64_t d = 1;
};

APoly parse_tau_choice(const std::string& text, RingParams p, std::size_t n) {
  const auto vars = static_cast<unsigned>(p.m - 1);
  const auto s = static_cast<unsigned>(p.s);
  try {
    if (text == "0") return APoly::constant(SubsetPoly(vars, s), n);
    if (text == "1") return APoly::constant(SubsetPoly::constant(vars, s, 1), n);
    if (text.rfind("eta:", 0) == 0) return APoly::constant(eta(vars, s, std::stoull(text.substr(4))), n);
    if (text.rfind("v:", 0) == 0)
      return APoly::constant(SubsetPoly::variable(vars, s, static_cast<unsigned>(std::stoul(text.substr(2)))), n);
  } catch (const ParameterError& e) {
    throw UsageError("tau component '" + text + "': " + e.what());
  } catch (const std::logic_error&) {
  }
  throw UsageError("tau component '" + text + "' must be 0, 1, eta:<subset> or v:<i>");
}

DigitCode parse_generator_file(const std::string& path, std::uint64_t d) {
  using namespace json_detail;
  const Json j = read_json_file(path);
  const std::string ring = j.contains("ring") ? j["ring"].get<std::string>() : "tower";
  const auto n = static_cast<std::size_t>(integer_in(field(j, "n", ""), "/n", 1, 1 << 16));
  const Json& gens = array(field(j, "generators", ""), "/generators");
  if (gens.empty()) throw SchemaError("/generators", "at least one generator is required");
  if (ring == "z") {
    const auto s = static_cast<unsigned>(integer_in(field(j, "s", ""), "/s", 1, kMaxS));
    std::vector<QuotientPoly<Residue>> gs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Digits v = residues(gens[i], child("/generators", i), Zmod::for_s(s), n);
      std::vector<Residue> c;
      for (auto x : v) c.emplace_back(static_cast<std::int64_t>(x), s);
      gs.emplace_back(std::move(c));
    }
    return qc_from_generators(gs, d);
  }
  if (ring != "tower") throw SchemaError("/ring", "expected \"tower\" or \"z\"");
  const RingParams p = parse_ring_header(j);
  std::vector<RPoly> gs;
  for (std::size_t i = 0; i < gens.size(); ++i) gs.push_back(parse_rpoly(gens[i], p, n, child("/generators", i)));
  return qc_from_generators(gs, d);
}

int run_qc(const QcArgs& a, const GlobalOptions& g) {
  const int sources = !a.code.empty() + !a.generators.empty() + !a.tau.empty() + !a.tau_file.empty();
  if (sources != 1) throw UsageError("give exactly one of --code, --generators, --tau, --tau-file");
  AuditReport rep;
  Json ctx = {{"d", a.d}};
  if (!a.code.empty()) {
    rep = qc_invariance_check(load_code(a.code), a.d);
    ctx["source"] = a.code;
  } else if (!a.generators.empty()) {
    const DigitCode c = parse_generator_file(a.generators, a.d);
    rep = qc_invariance_check(c, a.d);
    ctx["source"] = a.generators;
    ctx["construction"] = "orbit span of x^(jd) g_i (stand-in for an unspecified multi-generator construction)";
    ctx["cardinality"] = to_string(c.cardinality());
  } else {
    const RingParams p = a.ring.params();
    const auto ring = make_ring(p);
    std::array<APoly, 3> es = {APoly::constant(SubsetPoly(static_cast<unsigned>(p.m - 1), static_cast<unsigned>(p.s)), 1),
                               APoly::constant(SubsetPoly(static_cast<unsigned>(p.m - 1), static_cast<unsigned>(p.s)), 1),
                               APoly::constant(SubsetPoly(static_cast<unsigned>(p.m - 1), static_cast<unsigned>(p.s)), 1)};
    std::size_t n = a.n;
    if (!a.tau.empty()) {
      std::vector<std::string> parts;
      std::stringstream ss(a.tau);
      for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
      if (parts.size() != 3) throw UsageError("--tau takes three comma-separated components");
      for (std::size_t i = 0; i < 3; ++i) es[i] = parse_tau_choice(parts[i], p, n);
      ctx["tau"] = a.tau;
    } else {
      if (!a.allow_arbitrary)
        throw UsageError("--tau-file takes arbitrary polynomials; pass --allow-arbitrary-tau to accept them");
      using namespace json_detail;
      const Json j = read_json_file(a.tau_file);
      const RingParams fp = parse_ring_header(j);
      if (!(fp == p)) throw SchemaError("/m", "ring header differs from --m/--s");
      n = static_cast<std::size_t>(integer_in(field(j, "n", ""), "/n", 1, 1 << 12));
      const Json& e = array(field(j, "e", ""), "/e");
      if (e.size() != 3) throw SchemaError("/e", "expected three polynomials");
      for (std::size_t i = 0; i < 3; ++i) es[i] = parse_apoly(e[i], p, n, child("/e", i));
      ctx["tau_file"] = a.tau_file;
    }
    RPoly tau = [&] {
      try {
        return tau_build(*ring, es[0], es[1], es[2]);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
    }();
    const DigitCode c = qc_from_generators(std::vector<RPoly>{tau}, a.d);
    rep = qc_invariance_check(c, a.d);
    const DigitCode ideal = ideal_code(tau);
    rep.append(qc_invariance_check(ideal, a.d));
    ctx["m"] = p.m;
    ctx["s"] = p.s;
    ctx["n"] = n;
    ctx["tau_idempotent"] = is_idempotent(tau);
    ctx["orbit_code_cardinality"] = to_string(c.cardinality());
    ctx["ideal_cardinality"] = to_string(ideal.cardinality());
    ctx["tau_in_code"] = c.contains(tau.digits());
  }
  emit_report("qc-check", std::move(ctx), rep, g);
  return exit_status(rep) == 0 || !a.code.empty() ? 0 : 1;
}

// --------------------------------------------------------- audit-lengths

struct LengthArgs {
  RingArgs ring;
  unsigned k = 1;
  unsigned u = 0;
};

int run_lengths(const LengthArgs& a, const GlobalOptions& g) {
  const RingParams p = a.ring.params();
  const std::optional<unsigned> u = a.u == 0 ? std::nullopt : std::optional<unsigned>(a.u);
  std::vector<FormulaAudit> fs;
  try {
    fs = family_length_formulas(p, a.k, u);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  if (g.fmt() == Format::csv) {
    Table t({"id", "formula", "paper_value", "measured_value", "verdict"});
    for (const auto& f : fs)
      t.add({f.id, f.formula, to_string(f.paper_value), to_string(f.measured_value), to_string(f.verdict())});
    std::cout << t.str();
    return 0;
  }
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(f.to_json());
  emit_summary({{"command", "audit-lengths"},
                {"m", p.m},
                {"s", p.s},
                {"k", a.k},
                {"u", u ? Json(*u) : Json(nullptr)},
                {"formulas", std::move(arr)}},
               g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codes over Z_{4^s}, A_{m-1} and R^{s,m}: claim audits, block codes, Gray images, families"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_flag("--timestamps", g.timestamps, "add a generated_at field to JSON output");
  app.add_option("--workers", g.workers, "threads for enumeration")->check(CLI::Range(1U, 256U))->capture_default_str();
  app.add_option("--seed", g.seed, "seed for every sampled statistic");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the full claim audit for one (m, s)");
  add_ring_options(verify, va.ring);
  verify->add_option("--n", va.n, "code length for the code-level audits")->capture_default_str();
  verify->add_option("--samples", va.samples, "random non-idempotents per length for the tau converse")
      ->capture_default_str();

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "build a block code from a component spec");
  build->add_option("--spec", ba.spec, "component spec JSON")->required();
  build->add_option("--out", ba.out, "write the code document here");
  build->add_flag("--weights", ba.weights, "report minimum Hamming and Gray weights");
  build->add_option("--budget", ba.budget, "largest code enumerated exhaustively")->capture_default_str();
  build->add_option("--samples", ba.samples, "codewords drawn when sampling")->capture_default_str();

  DualArgs da;
  auto* dual = app.add_subcommand("dual", "blockwise dual of a code");
  dual->add_option("--code", da.code, "code or component spec JSON")->required();
  dual->add_option("--out", da.out, "write the dual code document here");

  GrayArgs ga;
  auto* gray = app.add_subcommand("gray", "Gray generator matrix of a code");
  gray->add_option("--code", ga.code, "code or component spec JSON")->required();
  gray->add_option("--out", ga.out, "output file (default stdout)");

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "simplex and MacDonald codes");
  family->add_option("kind", fa.kind, "simplex or macdonald")->required()->check(CLI::IsMember({"simplex", "macdonald"}));
  family->add_option("--ring", fa.ring, "z<4^s>, a<r> or r")->capture_default_str();
  family->add_option("--type", fa.type, "alpha or beta")->check(CLI::IsMember({"alpha", "beta"}))->capture_default_str();
  add_ring_options(family, fa.params);
  family->add_option("--k", fa.k, "dimension")->capture_default_str();
  family->add_option("--u", fa.u, "MacDonald puncturing order, 1 <= u < k");
  family->add_option("--divisors", fa.divisors, "comma-separated leading zero divisors for beta (Z_{4^s} only)");
  family->add_flag("--stats", fa.stats, "codeword weight statistics");
  family->add_flag("--matrix", fa.matrix, "emit the generator matrix when it is small enough");
  family->add_option("--budget", fa.budget, "exhaustive work limit")->capture_default_str();

  QcArgs qa;
  auto* qc = app.add_subcommand("qc-check", "shift invariance of a code, generator orbit or tau code");
  qc->add_option("--code", qa.code, "code or component spec JSON");
  qc->add_option("--generators", qa.generators, "generator polynomials JSON");
  qc->add_option("--tau", qa.tau, "e1,e2,e3 each 0, 1, eta:<subset> or v:<i>");
  qc->add_option("--tau-file", qa.tau_file, "JSON with three polynomials over A_{m-1}");
  qc->add_flag("--allow-arbitrary-tau", qa.allow_arbitrary, "accept arbitrary polynomials from --tau-file");
  add_ring_options(qc, qa.ring);
  qc->add_option("--n", qa.n, "length for --tau")->capture_default_str();
  qc->add_option("--d", qa.d, "shift")->capture_default_str();

  LengthArgs la;
  auto* lengths = app.add_subcommand("audit-lengths", "evaluate the family length formulas");
  add_ring_options(lengths, la.ring);
  lengths->add_option("--k", la.k, "dimension")->capture_default_str();
  lengths->add_option("--u", la.u, "MacDonald order (0 = none)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(va, g);
    if (*build) return run_build(ba, g);
    if (*dual) return run_dual(da, g);
    if (*gray) return run_gray(ga, g);
    if (*family) return run_family(fa, g);
    if (*qc) return run_qc(qa, g);
    if (*lengths) return run_lengths(la, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ringcodes::cli

int main(int argc, char** argv) { return ringcodes::cli::main(argc, argv); }
