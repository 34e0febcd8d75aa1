#include "hqa/cli.hpp"

#include "hqa/axioms.hpp"
#include "hqa/expr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hqa {

namespace {

using nlohmann::json;

struct Options {
  std::string spec_path;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t max_degree = 0;
  std::string expression;
  std::string ambient = "quiver";
  std::string relators;
  bool with_antipode = false;
  std::string strategy = "auto";
  std::string lambda, mu, nu;
  bool include_degree_zero = false;
  long r = 0, l = 0;
  std::size_t degree = 3;
  std::size_t samples = 100;
};

/// A rendered report: json for --json, text otherwise, plus the exit code.
struct Outcome {
  int code = kExitOk;
  json report;
  std::string text;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

std::string field_name(const Field& f) {
  return f.is_prime_field() ? "F_" + std::to_string(f.characteristic()) : "Q";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw EvalError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome describe(const SpecFile& spec) {
  const HopfQuiver& q = *spec.quiver;
  const FiniteGroup& G = q.group();
  Outcome o;
  std::ostringstream t;
  json& j = o.report;
  j["field"] = {{"characteristic", spec.field.characteristic()}};
  j["group"] = {{"order", G.order()}, {"labels", G.labels()}, {"cyclic", spec.cyclic}};
  j["distinguished"] = G.label(spec.distinguished);
  std::vector<std::string> centralizer, reps;
  for (Element z : q.cdata().members())
    centralizer.push_back(G.label(z));
  for (Element k : q.cdata().coset_reps())
    reps.push_back(G.label(k));
  j["centralizer"] = centralizer;
  j["coset_representatives"] = reps;
  t << "field: " << field_name(spec.field) << "\n";
  t << "group: order " << G.order() << (spec.cyclic ? " (cyclic)" : "") << ", elements "
    << join(G.labels(), " ") << "\n";
  t << "distinguished: " << G.label(spec.distinguished) << "\n";
  t << "centralizer: " << join(centralizer, " ") << "\n";
  t << "coset representatives: " << join(reps, " ") << "\n";

  const YDModule& m = q.module();
  j["module"] = {{"dim", m.dim()}, {"basis", m.basis_names()}};
  t << "module: dim " << m.dim() << ", basis " << join(m.basis_names(), " ") << "\n";
  json actions = json::array();
  for (Element z : q.cdata().members()) {
    actions.push_back({{"element", G.label(z)}, {"matrix", m.action(z).to_string()}});
    t << "  action(" << G.label(z) << ") = " << m.action(z).to_string() << "\n";
  }
  j["module"]["actions"] = actions;

  t << "quiver: " << G.order() << " vertices, " << q.arrows().size() << " arrows\n";
  json vertices = json::array();
  for (Element h = 0; h < G.order(); ++h) {
    const auto out = q.out_arrows(h).size(), in = q.in_arrows(h).size();
    vertices.push_back({{"vertex", G.label(h)}, {"out", out}, {"in", in}});
    t << "  v(" << G.label(h) << "): out " << out << ", in " << in << "\n";
  }
  j["vertices"] = vertices;
  json arrows = json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back(q.render_arrow(a));
  j["arrows"] = arrows;
  t << "arrows:";
  for (const Arrow& a : q.arrows())
    t << " " << q.render_arrow(a);
  t << "\n";

  json gens = json::array();
  t << "generators:\n";
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const auto& name = spec.generators.names()[i];
    gens.push_back({{"name", name},
                    {"value", spec.generators.value(i).to_string()},
                    {"degree", G.label(spec.generators.degree(i))}});
    t << "  " << name << " = " << spec.generators.value(i).to_string() << "  (degree "
      << G.label(spec.generators.degree(i)) << ")\n";
  }
  j["generators"] = gens;
  if (!spec.parameters.empty()) {
    t << "lifting parameters:";
    for (const auto& [k, v] : spec.parameters) {
      j["lifting"][k] = v.to_string();
      t << " " << k << " = " << v.to_string();
    }
    t << "\n";
  }
  o.text = t.str();
  return o;
}

Outcome eval(const SpecFile& spec, const Options& opt) {
  const ExprPtr e = parse_expr(opt.expression);
  Outcome o;
  std::string result;
  if (opt.ambient == "quiver") {
    result = eval_quiver(*e, spec).to_string();
  } else if (opt.ambient == "smash") {
    const SmashAlgebra alg = SmashAlgebra::from_generators(spec.generators, opt.max_degree);
    result = alg.to_string(eval_smash(*e, spec, alg));
  } else {
    throw EvalError("unknown ambient '" + opt.ambient + "' (expected quiver or smash)");
  }
  o.report = {{"expression", opt.expression}, {"ambient", opt.ambient}, {"result", result}};
  o.text = result + "\n";
  return o;
}

Outcome nichols(const SpecFile& spec, const Options& opt) {
  const GradedBasis basis = generate(spec.generators, opt.max_degree);
  const auto& names = spec.generators.names();
  Outcome o;
  std::ostringstream t;
  std::vector<std::string> dims;
  json words = json::array();
  for (const auto& layer : basis.degrees) {
    dims.push_back(std::to_string(layer.size()));
    json w = json::array();
    for (const auto& e : layer)
      w.push_back(render_word(e.word, names));
    words.push_back(w);
  }
  o.report = {{"max_degree", opt.max_degree}, {"dims", basis.dims()}, {"total", basis.total()}, {"basis", words}};
  t << "dims: " << join(dims, " ") << "\n";
  t << "total: " << basis.total() << "\n";
  for (std::size_t d = 0; d < basis.degrees.size(); ++d) {
    t << "degree " << d << ":";
    for (const auto& w : words[d])
      t << " " << w.get<std::string>();
    t << "\n";
  }
  o.text = t.str();
  return o;
}

Outcome relations(const SpecFile& spec, const Options& opt) {
  const RelationReport rep = find_relations(spec.generators, opt.max_degree);
  Outcome o;
  std::ostringstream t;
  json degrees = json::array(), all = json::array();
  for (const auto& layer : rep.degrees) {
    json rels = json::array();
    for (const auto& f : layer.relations) {
      rels.push_back(f.to_string(rep.names));
      all.push_back(f.to_string(rep.names));
    }
    degrees.push_back({{"degree", layer.degree},
                       {"kernel_dim", layer.kernel_dim},
                       {"ideal_dim", layer.ideal_dim},
                       {"relations", rels}});
    t << "degree " << layer.degree << ": kernel " << layer.kernel_dim << ", ideal " << layer.ideal_dim
      << ", new " << layer.relations.size() << "\n";
    for (const auto& f : layer.relations)
      t << "  " << f.to_string(rep.names) << "\n";
  }
  o.report = {{"max_degree", opt.max_degree}, {"degrees", degrees}, {"relations", all}};
  o.text = t.str();
  return o;
}

Outcome skew(const SpecFile& spec, const Options& opt) {
  SkewScanOptions so;
  so.include_degree_zero = opt.include_degree_zero;
  const SkewPrimitiveReport rep = scan_skew_primitives(spec.generators, opt.max_degree, so);
  const FiniteGroup& G = spec.group();
  const auto& names = spec.generators.names();
  Outcome o;
  std::ostringstream t;
  json degrees = json::array();
  for (std::size_t d = so.include_degree_zero ? 0 : 1; d <= opt.max_degree; ++d) {
    json spaces = json::array();
    const auto found = rep.in_degree(d);
    t << "degree " << d << ":" << (found.empty() ? " none" : "") << "\n";
    for (const SkewPrimitiveSpace* s : found) {
      json sols = json::array();
      t << "  (u, v) = (" << G.label(s->u) << ", " << G.label(s->v) << "): dim " << s->solutions.size() << "\n";
      for (std::size_t i = 0; i < s->solutions.size(); ++i) {
        std::string combo;
        bool first = true;
        for (const auto& [j, c] : s->coordinates[i]) {
          const BasisEntry& e = rep.basis.degrees[d][j];
          std::string term = e.vertex == G.identity() ? render_word(e.word, names)
                                                      : G.label(e.vertex) + (e.word.empty() ? "" : "*" + render_word(e.word, names));
          combo += coefficient_prefix(c, first) + term;
          first = false;
        }
        sols.push_back({{"element", combo}, {"path", s->solutions[i].to_string()}});
        t << "    " << combo << " = " << s->solutions[i].to_string() << "\n";
      }
      spaces.push_back({{"u", G.label(s->u)}, {"v", G.label(s->v)}, {"solutions", sols}});
    }
    degrees.push_back({{"degree", d}, {"spaces", spaces}});
  }
  o.report = {{"max_degree", opt.max_degree}, {"degrees", degrees}};
  o.text = t.str();
  return o;
}

IdealStrategy parse_strategy(const std::string& s) {
  if (s == "auto")
    return IdealStrategy::Auto;
  if (s == "graded")
    return IdealStrategy::Graded;
  if (s == "filtered")
    return IdealStrategy::Filtered;
  throw EvalError("unknown strategy '" + s + "' (expected auto, graded or filtered)");
}

std::string strategy_name(IdealStrategy s) {
  switch (s) {
  case IdealStrategy::Graded:
    return "graded";
  case IdealStrategy::Filtered:
    return "filtered";
  default:
    return "auto";
  }
}

Outcome check_ideal(SpecFile spec, const Options& opt) {
  if (!opt.lambda.empty())
    spec.parameters.insert_or_assign("lambda", spec.field.parse(opt.lambda));
  if (!opt.mu.empty())
    spec.parameters.insert_or_assign("mu", spec.field.parse(opt.mu));
  if (!opt.nu.empty())
    spec.parameters.insert_or_assign("nu", spec.field.parse(opt.nu));
  const SmashAlgebra alg = SmashAlgebra::from_generators(spec.generators, opt.max_degree);
  std::vector<SmashElement> relators;
  const auto lines = read_expression_lines(read_file(opt.relators));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      relators.push_back(eval_smash(*parse_expr(lines[i]), spec, alg));
    } catch (const std::exception& e) {
      throw EvalError(opt.relators + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  HopfIdealOptions ho;
  ho.with_antipode = opt.with_antipode;
  ho.strategy = parse_strategy(opt.strategy);
  const HopfIdealReport rep = check_hopf_ideal(alg, relators, ho);

  Outcome o;
  std::ostringstream t;
  json rels = json::array();
  for (const auto& r : rep.relators) {
    json jr = {{"relator", r.relator}, {"counit", r.counit_ok}, {"coproduct", r.coproduct_ok}};
    jr["antipode"] = r.antipode_ok ? json(*r.antipode_ok) : json(nullptr);
    if (!r.witness.empty())
      jr["witness"] = r.witness;
    rels.push_back(jr);
    t << r.relator << ": counit " << (r.counit_ok ? "ok" : "FAIL") << ", coproduct "
      << (r.coproduct_ok ? "ok" : "FAIL");
    if (r.antipode_ok)
      t << ", antipode " << (*r.antipode_ok ? "ok" : "FAIL");
    if (!r.witness.empty())
      t << "  witness: " << r.witness;
    t << "\n";
  }
  o.report = {{"pass", rep.pass()},
              {"max_degree", opt.max_degree},
              {"strategy", strategy_name(rep.strategy)},
              {"quotient_dim", rep.quotient_dim},
              {"relators", rels}};
  if (rep.spanning_antipode_ok) {
    o.report["antipode"] = {{"checked", rep.antipode_checked}, {"pass", *rep.spanning_antipode_ok}};
    if (!rep.antipode_witness.empty())
      o.report["antipode"]["witness"] = rep.antipode_witness;
    t << "antipode on " << rep.antipode_checked << " spanning elements: "
      << (*rep.spanning_antipode_ok ? "ok" : "FAIL  " + rep.antipode_witness) << "\n";
  }
  t << "strategy: " << strategy_name(rep.strategy) << ", quotient dimension up to degree " << opt.max_degree
    << ": " << rep.quotient_dim << "\n";
  t << (rep.pass() ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  o.code = rep.pass() ? kExitOk : kExitCheckFailed;
  return o;
}

Outcome identities(const SpecFile& spec, const Options& opt) {
  if (!spec.cyclic)
    throw EvalError("identities need a cyclic group spec");
  const IdentityBankReport rep =
      verify_identity_bank(spec.field.characteristic(), spec.group().order(), opt.r, opt.l);
  Outcome o;
  std::ostringstream t;
  json checks = json::array();
  std::size_t failures = 0;
  for (const auto& c : rep.checks) {
    json jc = {{"identity", c.name}, {"r", c.r}, {"l", c.l}, {"pass", c.pass}};
    if (!c.pass) {
      jc["residual"] = c.residual;
      ++failures;
      t << "FAIL " << c.name << " r=" << c.r << " l=" << c.l << ": " << c.residual << "\n";
    }
    checks.push_back(jc);
  }
  t << rep.checks.size() - failures << "/" << rep.checks.size() << " identity instances hold\n";
  o.report = {{"pass", rep.pass()}, {"checks", checks}};
  o.text = t.str();
  o.code = rep.pass() ? kExitOk : kExitCheckFailed;
  return o;
}

Outcome selfcheck(const SpecFile& spec, const Options& opt) {
  const AxiomReport rep = check_hopf_axioms(spec.quiver, opt.degree, opt.samples, opt.seed);
  Outcome o;
  std::ostringstream t;
  json results = json::array();
  for (const auto& r : rep.results) {
    json jr = {{"property", r.name}, {"checked", r.checked}, {"failures", r.failures}};
    if (r.failures)
      jr["first_failure"] = r.first_failure;
    results.push_back(jr);
    t << r.name << ": " << r.checked - r.failures << "/" << r.checked << (r.failures ? "  FAIL" : "") << "\n";
    if (r.failures)
      t << "  " << r.first_failure << "\n";
  }
  o.report = {{"pass", rep.pass()}, {"seed", opt.seed}, {"degree", opt.degree}, {"results", results}};
  o.text = t.str();
  o.code = rep.pass() ? kExitOk : kExitCheckFailed;
  return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hopf quiver algebras, Nichols algebras and Hopf-ideal checks"};
  app.name("hqa");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--spec", opt.spec_path, "Spec file (JSON)");
  app.add_flag("--json", opt.json, "Emit a machine-readable report");
  app.add_option("--seed", opt.seed, "Seed for randomized sampling");

  auto* c_describe = app.add_subcommand("describe", "Show the group, module, quiver and generators");
  auto* c_eval = app.add_subcommand("eval", "Evaluate an expression");
  c_eval->add_option("expr", opt.expression, "Expression")->required();
  c_eval->add_option("--ambient", opt.ambient, "quiver or smash")->capture_default_str();
  c_eval->add_option("--max-degree", opt.max_degree, "Truncation degree in the smash ambient")->default_val(16);
  auto* c_nichols = app.add_subcommand("nichols", "Hilbert function and basis of the Nichols algebra");
  c_nichols->add_option("--max-degree", opt.max_degree)->required();
  auto* c_relations = app.add_subcommand("relations", "Relations of the Nichols algebra, degree by degree");
  c_relations->add_option("--max-degree", opt.max_degree)->required();
  auto* c_skew = app.add_subcommand("skew", "Skew-primitive elements of the biproduct");
  c_skew->add_option("--max-degree", opt.max_degree)->required();
  c_skew->add_flag("--include-degree-zero", opt.include_degree_zero, "Also report grouplike differences");
  auto* c_check = app.add_subcommand("check-hopf-ideal", "Check that relators generate a Hopf ideal");
  c_check->add_option("--relators", opt.relators, "Relator file")->required();
  c_check->add_option("--max-degree", opt.max_degree)->required();
  c_check->add_flag("--with-antipode", opt.with_antipode, "Also check stability under the antipode");
  c_check->add_option("--strategy", opt.strategy, "auto, graded or filtered")->capture_default_str();
  c_check->add_option("--lambda", opt.lambda);
  c_check->add_option("--mu", opt.mu);
  c_check->add_option("--nu", opt.nu);
  auto* c_ident = app.add_subcommand("identities", "Verify the commutation, coproduct and antipode formulas");
  c_ident->add_option("--r", opt.r)->required()->check(CLI::Range(1, 64));
  c_ident->add_option("--l", opt.l)->required()->check(CLI::Range(1, 64));
  auto* c_self = app.add_subcommand("selfcheck", "Randomized Hopf-algebra axiom checks in kQ");
  c_self->add_option("--degree", opt.degree)->capture_default_str();
  c_self->add_option("--samples", opt.samples)->capture_default_str();

  auto fail = [&](const std::string& message) {
    err << "error: " << message << "\n";
    if (opt.json)
      out << json{{"error", message}}.dump(2) << "\n";
    return int(kExitInputError);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }

  try {
    if (opt.spec_path.empty())
      return fail("--spec FILE is required");
    const SpecFile spec = load_spec(opt.spec_path);
    Outcome o;
    if (c_describe->parsed())
      o = describe(spec);
    else if (c_eval->parsed())
      o = eval(spec, opt);
    else if (c_nichols->parsed())
      o = nichols(spec, opt);
    else if (c_relations->parsed())
      o = relations(spec, opt);
    else if (c_skew->parsed())
      o = skew(spec, opt);
    else if (c_check->parsed())
      o = check_ideal(spec, opt);
    else if (c_ident->parsed())
      o = identities(spec, opt);
    else
      o = selfcheck(spec, opt);
    if (opt.json)
      out << o.report.dump(2) << "\n";
    else
      out << o.text;
    return o.code;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

} // namespace hqa
