#include "altalg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "altalg/commuting.hpp"
#include "altalg/constructions.hpp"
#include "altalg/io.hpp"
#include "altalg/lemmas.hpp"
#include "altalg/peirce.hpp"

namespace altalg::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string algebra_path;
  std::string idempotent;
  std::string map_spec;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultBudget;
  bool deterministic = false;
  bool anti = false;

  // gen
  std::string builtin;
  std::size_t n = 2;
  std::string field = "q";
  std::size_t steps = 1;
  std::string gammas;
  std::string left;
  std::string right;
  std::string output;
  std::string idempotent_output;
};

struct Report {
  explicit Report(std::string cmd, std::string alg = {}) : command(std::move(cmd)), algebra(std::move(alg)) {}

  std::string command;
  std::string algebra;
  std::vector<CheckRecord> checks;
  json data = json::object();
  std::vector<std::string> lines;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
  }
};

Field parse_field(const std::string& s) {
  if (s == "q" || s == "Q" || s == "rational") return Field::rational();
  if (s.size() > 1 && (s[0] == 'p' || s[0] == 'F' || s[0] == 'f')) {
    const std::string digits = s.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) && digits.size() < 19) {
      return Field::prime(std::stoull(digits));
    }
  }
  throw UsageError("field must be q or pN (e.g. p5), got '" + s + "'");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream ss(s);
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

void write_witness_text(std::ostream& out, const Witness& w, const std::string& indent) {
  out << indent << "witness: " << w.description << '\n';
  for (const auto& [name, e] : w.elements) out << indent << "  " << name << " = " << e.to_string() << '\n';
}

void render(const Report& r, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    json report{{"command", r.command}};
    if (!r.algebra.empty()) report["algebra"] = r.algebra;
    report["pass"] = r.pass();
    report["checks"] = std::move(checks);
    for (const auto& [k, v] : r.data.items()) report[k] = v;
    json envelope{{"report", std::move(report)}};
    if (!cfg.deterministic) {
      const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      std::tm utc{};
      gmtime_r(&now, &utc);
      std::ostringstream ts;
      ts << std::put_time(&utc, "%FT%TZ");
      envelope["timestamp"] = ts.str();
    }
    out << dump_json(envelope) << '\n';
    return;
  }
  if (!r.algebra.empty()) out << r.command << ": " << r.algebra << '\n';
  for (const auto& line : r.lines) out << line << '\n';
  for (const auto& c : r.checks) {
    out << (c.pass ? "✓ " : "✗ ") << c.check;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
    if (c.witness) write_witness_text(out, *c.witness, "  ");
  }
  if (!r.checks.empty()) out << (r.pass() ? "result: pass" : "result: FAIL") << '\n';
}

std::string describe(const Algebra& a) {
  return a.name() + " (dim " + std::to_string(a.dim()) + ", field " + a.field().name() + ")";
}

json subspace_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(element_to_json(b));
  return json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

void subspace_lines(Report& r, const std::string& label, const Subspace& s) {
  r.lines.push_back(label + ": dim " + std::to_string(s.dim()));
  for (std::size_t i = 0; i < s.basis().size(); ++i) r.lines.push_back("  v" + std::to_string(i + 1) + " = " + s.basis()[i].to_string());
}

CheckRecord failed(const std::string& name, Witness w, std::string detail = {}) {
  return {name, false, std::move(w), std::move(detail), 0};
}

Element require_idempotent(const RunConfig& cfg, const Algebra& a) {
  if (cfg.idempotent.empty()) throw UsageError(cfg.command + " needs an idempotent (-e)");
  return parse_element(cfg.idempotent, a);
}

LinearMap load_map(const RunConfig& cfg, const Algebra& a) {
  if (cfg.map_spec.empty()) throw UsageError(cfg.command + " needs --map (file, random, identity or zero)");
  if (cfg.map_spec == "random") return random_commuting_map(a, cfg.seed.value_or(0));
  if (cfg.map_spec == "identity") return LinearMap::identity(a);
  if (cfg.map_spec == "zero") return LinearMap::zero(a);
  return read_map(cfg.map_spec, a);
}

Witness commuting_witness(const Algebra& a, const MapCheck& c, const std::string& law) {
  const auto [i, j] = *c.witness;
  if (i == j && law.find("phi(y)") != std::string::npos) return {"[phi(x), x] != 0", {{"x", a.basis(i)}, {"value", *c.value}}};
  return {law, {{"x", a.basis(i)}, {"y", a.basis(j)}, {"value", *c.value}}};
}

// --- subcommands -----------------------------------------------------------

Report cmd_gen(const RunConfig& cfg) {
  Report r{"gen"};
  std::optional<Algebra> alg;
  std::optional<Element> idem;
  if (cfg.builtin == "matrix") {
    if (cfg.n < 1 || cfg.n > 12) throw UsageError("--n must be in 1..12");
    auto g = matrix_algebra(parse_field(cfg.field), cfg.n);
    alg.emplace(std::move(g.algebra));
    idem = std::move(g.idempotent);
  } else if (cfg.builtin == "zorn") {
    auto g = zorn(parse_field(cfg.field));
    alg.emplace(std::move(g.algebra));
    idem = std::move(g.idempotent);
  } else if (cfg.builtin == "cayley-dickson") {
    const Field f = parse_field(cfg.field);
    if (cfg.steps < 1 || cfg.steps > 6) throw UsageError("--steps must be in 1..6");
    CayleyDicksonParams params;
    if (cfg.gammas.empty()) {
      params.gammas.assign(cfg.steps, Scalar::one(f));
    } else {
      for (const auto& g : split_commas(cfg.gammas)) params.gammas.push_back(Scalar::parse(f, g));
      if (params.gammas.size() != cfg.steps) throw UsageError("--gammas must list one value per step");
    }
    auto t = cayley_dickson_tower(f, params);
    alg.emplace(std::move(t.result.algebra));
    idem = std::move(t.idempotent);
  } else if (cfg.builtin == "direct-sum") {
    if (cfg.left.empty() || cfg.right.empty()) throw UsageError("direct-sum needs --left and --right algebra files");
    const Algebra l = read_algebra(cfg.left);
    const Algebra rr = read_algebra(cfg.right);
    alg.emplace(direct_sum(l, rr));
    if (l.unit()) idem = embed_left(*alg, *l.unit());
  } else {
    throw UsageError("unknown builtin '" + cfg.builtin + "' (matrix, zorn, cayley-dickson, direct-sum)");
  }

  const json aj = algebra_to_json(*alg);
  r.algebra = describe(*alg);
  if (cfg.output.empty()) {
    r.data["algebra_file"] = aj;
    r.lines.push_back(dump_json(aj));
  } else {
    write_json(cfg.output, aj);
    r.data["output"] = cfg.output;
    r.lines.push_back("wrote " + cfg.output);
  }
  if (idem) {
    r.data["idempotent"] = element_to_json(*idem);
    r.lines.push_back("idempotent: " + idem->to_string());
    std::string ipath = cfg.idempotent_output;
    if (ipath.empty() && !cfg.output.empty()) {
      const auto dot = cfg.output.rfind(".json");
      ipath = (dot != std::string::npos && dot + 5 == cfg.output.size() ? cfg.output.substr(0, dot) : cfg.output) + ".idempotent.json";
    }
    if (!ipath.empty()) {
      write_json(ipath, element_to_json(*idem));
      r.data["idempotent_output"] = ipath;
      r.lines.push_back("wrote " + ipath);
    }
  }
  return r;
}

Report cmd_verify(const RunConfig& cfg, const Algebra& a) {
  Report r{"verify", describe(a)};
  const auto alt = is_alternative(a);
  if (alt.alternative) {
    std::string detail = "associative";
    if (auto w = associativity_witness(a)) {
      detail = "not associative: (" + a.labels()[w->i] + ", " + a.labels()[w->j] + ", " + a.labels()[w->k] + ") != 0";
    }
    r.checks.push_back({"alternative", true, std::nullopt, detail, 0});
  } else {
    const auto& w = *alt.witness;
    r.checks.push_back(failed("alternative", {"law " + alt.law + " fails", {{"x", a.basis(w.i)}, {"y", a.basis(w.j)}, {"z", a.basis(w.k)}, {"value", *alt.value}}}));
  }
  if (a.unit()) {
    r.checks.push_back({"unit", true, std::nullopt, a.unit()->to_string(), 0});
  } else {
    r.checks.push_back({"unit", false, std::nullopt, "no two-sided identity", 0});
  }
  if (!cfg.idempotent.empty()) {
    const Element e = parse_element(cfg.idempotent, a);
    if (verify_idempotent(a, e)) {
      r.checks.push_back({"idempotent", true, std::nullopt, e.to_string(), 0});
    } else {
      r.checks.push_back(failed("idempotent", {"e e != e", {{"e", e}, {"e e", a.multiply(e, e)}}}));
    }
  }
  return r;
}

Report cmd_subspace(const RunConfig& cfg, const Algebra& a) {
  Report r{cfg.command, describe(a)};
  const Subspace s = cfg.command == "center" ? center(a) : nucleus(a);
  r.data[cfg.command] = subspace_json(s);
  subspace_lines(r, cfg.command, s);
  return r;
}

Report cmd_peirce(const RunConfig& cfg, const Algebra& a) {
  Report r{"peirce", describe(a)};
  const PeirceData pd = peirce_decompose(a, require_idempotent(cfg, a));
  const auto d = pd.dims();
  r.data["dims"] = d;
  json comps = json::object();
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) comps["R" + std::to_string(i) + std::to_string(j)] = subspace_json(pd.component(i, j));
  }
  r.data["components"] = std::move(comps);
  r.lines.push_back("dims (R11, R12, R21, R22) = (" + std::to_string(d[0]) + ", " + std::to_string(d[1]) + ", " + std::to_string(d[2]) + ", " +
                    std::to_string(d[3]) + ")");
  for (auto& c : check_peirce_relations(pd)) {
    c.check = "relation " + c.check;
    r.checks.push_back(std::move(c));
  }
  return r;
}

Report cmd_hypothesis(const RunConfig& cfg, const Algebra& a) {
  Report r{"hypothesis", describe(a)};
  const Element e1 = require_idempotent(cfg, a);
  if (!verify_idempotent(a, e1)) throw PropertyError("not an idempotent", {"e e != e", {{"e", e1}}});
  const auto h = hypothesis_check(a, e1);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string name = "e" + std::to_string(i + 1);
    if (h.holds[i]) {
      r.checks.push_back({"hypothesis " + name, true, std::nullopt, "x != 0 implies (x r) " + name + " != 0 for some r", 0});
    } else {
      r.checks.push_back(failed("hypothesis " + name, {"(x r) " + name + " = 0 for every basis r", {{"x", *h.witness[i]}}}));
    }
  }
  return r;
}

Report cmd_prime(const RunConfig& cfg, const Algebra& a) {
  Report r{"prime", describe(a)};
  const auto res = prime_check_exhaustive(a, cfg.budget);
  r.data["candidates_scanned"] = res.candidates_scanned;
  const std::string detail = std::to_string(res.candidates_scanned) + " candidates";
  if (res.prime) {
    r.checks.push_back({"prime", true, std::nullopt, detail, 0});
  } else {
    r.checks.push_back(failed("prime", {"(a r) b = 0 for every basis r", {{"a", res.witness->first}, {"b", res.witness->second}}}, detail));
  }
  return r;
}

Report cmd_checkmap(const RunConfig& cfg, const Algebra& a) {
  Report r{"check-map", describe(a)};
  const LinearMap phi = load_map(cfg, a);
  if (cfg.anti) {
    const auto c = is_anti_commuting(a, phi);
    r.checks.push_back(c.holds ? CheckRecord{"anti-commuting", true, std::nullopt, {}, 0}
                               : failed("anti-commuting", commuting_witness(a, c, "[phi(x), y] + [x, phi(y)] != 0")));
  } else {
    const auto c = is_commuting(a, phi);
    r.checks.push_back(c.holds ? CheckRecord{"commuting", true, std::nullopt, {}, 0}
                               : failed("commuting", commuting_witness(a, c, "[phi(x), y] + [phi(y), x] != 0")));
  }
  return r;
}

Report cmd_decompose(const RunConfig& cfg, const Algebra& a) {
  Report r{"decompose", describe(a)};
  const PeirceData pd = peirce_decompose(a, require_idempotent(cfg, a));
  const LinearMap phi = load_map(cfg, a);
  const Decomposition d = decompose(pd, phi);
  r.data["decomposition"] = decomposition_to_json(d);
  r.lines.push_back("z  = " + d.z.to_string());
  r.lines.push_back("z1 = " + d.z1.to_string());
  r.lines.push_back("z2 = " + d.z2.to_string());
  r.lines.push_back("xi =");
  for (std::size_t i = 0; i < a.dim(); ++i) r.lines.push_back("  xi(" + a.labels()[i] + ") = " + d.xi(a.basis(i)).to_string());
  if (d.verified) {
    r.checks.push_back({"verified", true, std::nullopt, "phi(x) = z x + xi(x), z and xi(x) central", 0});
  } else {
    r.checks.push_back({"verified", false, std::nullopt, *d.failure, 0});
  }
  return r;
}

Report cmd_lemmas(const RunConfig& cfg, const Algebra& a) {
  Report r{"lemmas", describe(a)};
  const PeirceData pd = peirce_decompose(a, require_idempotent(cfg, a));
  const LinearMap phi = load_map(cfg, a);
  const auto reports = run_all(pd, phi);
  json arr = json::array();
  std::size_t passed = 0;
  r.lines.push_back("lemma  status  instances  notes");
  for (const auto& l : reports) {
    json j{{"id", l.id}, {"status", to_string(l.status)}, {"instances", l.instances}, {"notes", l.notes}};
    if (l.witness) j["witness"] = witness_to_json(*l.witness);
    arr.push_back(std::move(j));
    const char* mark = l.status == LemmaStatus::pass ? "✓   " : l.status == LemmaStatus::fail ? "✗   " : "n/a ";
    std::ostringstream row;
    row << std::left << std::setw(6) << l.id << ' ' << mark << "    " << std::right << std::setw(9) << l.instances << "  " << l.notes;
    r.lines.push_back(row.str());
    if (l.witness) {
      std::ostringstream ws;
      write_witness_text(ws, *l.witness, "       ");
      std::string line;
      std::istringstream in(ws.str());
      while (std::getline(in, line)) r.lines.push_back(line);
    }
    if (l.status == LemmaStatus::pass) ++passed;
  }
  r.data["lemmas"] = std::move(arr);
  r.checks.push_back({"lemma suite", passed == reports.size(), std::nullopt,
                      std::to_string(passed) + "/" + std::to_string(reports.size()) + " pass", 0});
  return r;
}

Report cmd_oracle(const RunConfig& cfg, const Algebra& a) {
  Report r{"oracle", describe(a)};
  const LinearMap phi = load_map(cfg, a);
  const auto ex = exhaustive_commuting_check(a, phi, cfg.budget);
  const auto pol = is_commuting(a, phi);
  r.data["elements_checked"] = ex.elements_checked;
  const std::string detail = std::to_string(ex.elements_checked) + " elements";
  r.checks.push_back(ex.commuting ? CheckRecord{"exhaustive commuting", true, std::nullopt, detail, 0}
                                  : failed("exhaustive commuting", {"[phi(x), x] != 0", {{"x", *ex.witness}, {"phi(x)", phi(*ex.witness)}}}, detail));
  r.checks.push_back({"polarized check agrees", pol.holds == ex.commuting, std::nullopt,
                      std::string("polarized check says ") + (pol.holds ? "commuting" : "not commuting"), 0});
  const auto d = decompose_oracle(a, phi);
  if (d) {
    r.data["decomposition"] = decomposition_to_json(*d);
    r.checks.push_back({"decompose_oracle", true, std::nullopt, "z = " + d->z.to_string(), 0});
  } else {
    r.checks.push_back({"decompose_oracle", false, std::nullopt, "no central z with phi(x) - z x central for all x", 0});
  }
  return r;
}

Report dispatch(const RunConfig& cfg) {
  if (cfg.command == "gen") return cmd_gen(cfg);
  const Algebra a = read_algebra(cfg.algebra_path);
  try {
    if (cfg.command == "verify") return cmd_verify(cfg, a);
    if (cfg.command == "center" || cfg.command == "nucleus") return cmd_subspace(cfg, a);
    if (cfg.command == "peirce") return cmd_peirce(cfg, a);
    if (cfg.command == "hypothesis") return cmd_hypothesis(cfg, a);
    if (cfg.command == "prime") return cmd_prime(cfg, a);
    if (cfg.command == "check-map") return cmd_checkmap(cfg, a);
    if (cfg.command == "decompose") return cmd_decompose(cfg, a);
    if (cfg.command == "lemmas") return cmd_lemmas(cfg, a);
    if (cfg.command == "oracle") return cmd_oracle(cfg, a);
  } catch (const PropertyError& e) {
    Report r{cfg.command, describe(a)};
    r.checks.push_back(failed(cfg.command, e.witness(), e.what()));
    return r;
  }
  throw UsageError("unknown command " + cfg.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations in finite-dimensional alternative algebras", "altalg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for --map random");
  app.add_option("--budget", cfg.budget, "Enumeration cap for prime and oracle")
      ->check(CLI::Validator([](std::string& v) { return v.find_first_not_of("0123456789") == std::string::npos && v.find_first_not_of('0') != std::string::npos ? std::string() : "must be a positive integer"; }, "POSITIVE"));
  app.add_flag("--deterministic", cfg.deterministic, "Omit the timestamp from JSON output");

  auto* gen = app.add_subcommand("gen", "Write a builtin algebra and its canonical idempotent");
  gen->add_option("builtin", cfg.builtin, "matrix | zorn | cayley-dickson | direct-sum")->required();
  gen->add_option("--n", cfg.n, "Matrix size");
  gen->add_option("--field", cfg.field, "q or pN");
  gen->add_option("--steps", cfg.steps, "Cayley-Dickson doublings");
  gen->add_option("--gammas", cfg.gammas, "Comma-separated doubling parameters");
  gen->add_option("--left", cfg.left, "Left summand file");
  gen->add_option("--right", cfg.right, "Right summand file");
  gen->add_option("-o,--output", cfg.output, "Algebra file to write (stdout if omitted)");
  gen->add_option("--idempotent-out", cfg.idempotent_output, "Idempotent file (default <output>.idempotent.json)");

  struct Spec {
    const char* name;
    const char* help;
    bool idempotent;
    bool map;
  };
  const Spec specs[] = {
      {"verify", "Check alternativity and the unit", true, false},
      {"center", "Basis of the center", false, false},
      {"nucleus", "Basis of the nucleus", false, false},
      {"peirce", "Peirce decomposition and its relations", true, false},
      {"hypothesis", "Check (x r) e_i = 0 for all r implies x = 0", true, false},
      {"prime", "Exhaustive primeness check over a finite field", false, false},
      {"check-map", "Check that a linear map is commuting", false, true},
      {"decompose", "Write a commuting map as z x + xi(x)", true, true},
      {"lemmas", "Run the lemma suite", true, true},
      {"oracle", "Exhaustive commuting check and solved decomposition", false, true},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("algebra", cfg.algebra_path, "Algebra file")->required();
    if (s.idempotent) sub->add_option("-e,--idempotent", cfg.idempotent, "Idempotent: file, basis label, or comma-separated scalars");
    if (s.map) sub->add_option("--map", cfg.map_spec, "Map file, or random | identity | zero");
    if (std::string(s.name) == "check-map") sub->add_flag("--anti", cfg.anti, "Check anti-commuting instead");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    const Report r = dispatch(cfg);
    render(r, cfg, out);
    return r.pass() ? kExitPass : kExitProperty;
  } catch (const PropertyError& e) {
    Report r{cfg.command};
    r.checks.push_back(failed(cfg.command, e.witness(), e.what()));
    render(r, cfg, out);
    return kExitProperty;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace altalg::cli
