#include "hodgekit/cli.hpp"

#include "hodgekit/actions.hpp"
#include "hodgekit/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hodgekit {

const std::vector<std::string>& flavor_names() {
  static const std::vector<std::string> names = {"dolbeault", "anti", "derham", "bc", "aeppli", "abc", "all"};
  return names;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"structural", "random",   "five-term",       "frolicher",
                                                 "duality",    "natural-maps", "cone-les", "theorem-crosscheck",
                                                 "cartan"};
  return names;
}

std::vector<Flavor> expand_flavors(const std::vector<std::string>& names) {
  std::vector<Flavor> out;
  auto add = [&](Flavor f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  for (const auto& n : names) {
    if (n == "dolbeault") add(Flavor::dolbeault);
    else if (n == "anti") add(Flavor::anti_dolbeault);
    else if (n == "derham") add(Flavor::derham);
    else if (n == "bc") add(Flavor::bott_chern);
    else if (n == "aeppli") add(Flavor::aeppli);
    else if (n == "abc") {
      for (Flavor f : {Flavor::A, Flavor::B, Flavor::C, Flavor::C_cokernel}) add(f);
    } else if (n == "all") {
      for (Flavor f : {Flavor::dolbeault, Flavor::anti_dolbeault, Flavor::derham, Flavor::bott_chern, Flavor::aeppli})
        add(f);
    } else {
      throw Error("unknown flavor '" + n + "'");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModelSpec resolve_model(const std::string& ref) {
  if (auto m = find_in_catalog(ref)) return *m;
  std::ifstream in(ref);
  if (!in) throw InvalidModel("'" + ref + "' is neither a catalog model nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model_file(buf.str());
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : sep) + p;
  return s;
}

std::string combination(const Vector& coeffs, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i];
    if (c.is_zero()) continue;
    bool neg = c.is_real() && sgn(c.real()) < 0;
    GaussianRational a = neg ? -c : c;
    std::string coeff = a == GaussianRational(1) ? "" : a.is_real() ? a.str() + "*" : "(" + a.str() + ")*";
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += coeff + names[i];
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> class_names(const BigradedSpace& space, Bidegree slot, const Quotient& q) {
  std::vector<std::string> out;
  for (const auto& rep : q.representatives()) out.push_back("[" + combination(rep, space.labels(slot)) + "]");
  return out;
}

bool is_qualified(Flavor f) { return f != Flavor::dolbeault && f != Flavor::anti_dolbeault && f != Flavor::derham; }

struct Tables {
  std::vector<std::pair<Flavor, CohomologyTable>> tables;
};

Tables compute_tables(const BuiltModel& m, const std::vector<Flavor>& flavors) {
  Tables t;
  std::optional<AbcGroups> abc;
  for (Flavor f : flavors) {
    switch (f) {
      case Flavor::dolbeault: t.tables.emplace_back(f, dolbeault(m.complex)); break;
      case Flavor::anti_dolbeault: t.tables.emplace_back(f, anti_dolbeault(m.complex)); break;
      case Flavor::derham: t.tables.emplace_back(f, derham(m.complex)); break;
      case Flavor::bott_chern: t.tables.emplace_back(f, bott_chern(m.complex)); break;
      case Flavor::aeppli: t.tables.emplace_back(f, aeppli(m.complex)); break;
      default:
        if (!abc) abc = abc_groups(m.complex);
        t.tables.emplace_back(f, f == Flavor::A   ? abc->A
                                 : f == Flavor::B ? abc->B
                                 : f == Flavor::C ? abc->C
                                                  : abc->C_cokernel);
    }
  }
  return t;
}

void render_table(std::ostream& os, const CohomologyTable& t, int n, bool qualified) {
  os << to_string(t.flavor) << (qualified ? " (invariant-model)" : "") << '\n';
  if (t.is_total()) {
    os << "  k  ";
    for (int k = 0; k <= 2 * n; ++k) os << std::setw(4) << k;
    os << "\n  b_k";
    for (int k = 0; k <= 2 * n; ++k) os << std::setw(4) << t.dim(k);
    os << '\n';
    return;
  }
  os << "  q\\p";
  for (int p = 0; p <= n; ++p) os << std::setw(4) << p;
  os << '\n';
  for (int q = n; q >= 0; --q) {
    os << std::setw(4) << q << ' ';
    for (int p = 0; p <= n; ++p) os << std::setw(4) << t.dim(Bidegree{p, q});
    os << '\n';
  }
}

std::string describe_action(const BuiltModel& m, const ActionVerdict& v) {
  std::vector<std::string> parts;
  std::map<Flavor, CohomologyTable> tables;
  for (const auto& a : v.flavors) {
    if (!a.applicable) {
      parts.push_back(to_string(a.flavor) + ": inapplicable (" + a.reason + ")");
      continue;
    }
    if (a.is_trivial) continue;
    if (a.flavor == Flavor::derham) {
      for (const auto& [k, mat] : a.induced)
        if (!mat.is_zero()) parts.push_back("derham k=" + k + ": " + mat.str());
      continue;
    }
    if (!tables.count(a.flavor)) tables.emplace(a.flavor, compute_tables(m, {a.flavor}).tables.front().second);
    const auto& table = tables.at(a.flavor);
    for (const auto& [slot, q] : table.slots) {
      const auto& mat = a.induced.at(slot.str());
      if (mat.is_zero()) continue;
      auto names = class_names(m.complex.space, slot, q);
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        Vector col = mat.column(c);
        if (is_zero(col)) continue;
        parts.push_back(to_string(a.flavor) + " (" + slot.str() + "): " + names[c] + " -> " + combination(col, names));
      }
    }
  }
  return join(parts, "; ");
}

CheckResult check_structural(const BuiltModel& m) {
  ValidationReport r = validate(m.complex);
  if (!r.ok) return {"structural", "FAIL", r.summary()};
  if (!m.complex.has_del) return {"structural", "PASS", "delbar^2 = 0 (delbar-only complex)"};
  Operator dc = dc_operator(m.complex);
  std::vector<std::string> failures;
  if (!op_compose(dc, dc).is_zero()) failures.push_back("(d^c)^2 != 0");
  if (!op_anticommutator(m.complex.d(), dc).is_zero()) failures.push_back("d d^c + d^c d != 0");
  if (!failures.empty()) return {"structural", "FAIL", join(failures, "; ")};
  return {"structural", "PASS", "del^2 = delbar^2 = {del, delbar} = 0, (d^c)^2 = 0, {d, d^c} = 0"};
}

CheckResult check_random(std::uint64_t seed) {
  constexpr int kCount = 50;
  std::mt19937_64 rng(seed);
  const std::string tag = "seed=" + std::to_string(seed);
  for (int i = 0; i < kCount; ++i) {
    RandomBicomplexOptions opts;
    opts.n = 2 + i % 2;
    opts.pieces = 4 + i % 5;
    try {
      Bicomplex b = random_bicomplex(rng, opts);
      verify_five_term(b);
      frolicher_check(b);
    } catch (const Error& e) {
      return {"random", "FAIL", tag + ", instance " + std::to_string(i) + ": " + e.what()};
    }
  }
  return {"random", "PASS",
          std::to_string(kCount) + " random bicomplexes (" + tag + "): valid, five-term exact, Frolicher holds"};
}

CheckResult check_frolicher(const BuiltModel& m) {
  FrolicherReport r = frolicher_check(m.complex);
  std::vector<std::string> strict;
  for (const auto& row : r.rows)
    if (row.slack())
      strict.push_back("k=" + std::to_string(row.k) + " (" + std::to_string(row.betti) + " < " +
                       std::to_string(row.hodge_sum) + ")");
  return {"frolicher", "PASS", strict.empty() ? "equality at every k" : "strict at " + join(strict, ", ")};
}

CheckResult check_duality(const BuiltModel& m) {
  DualityReport r = duality_report(m.complex, m.n());
  if (r.matched())
    return {"duality", "PASS", "dim H_BC^{p,q} = dim H_A^{n-p,n-q} on all " + std::to_string(r.pairs.size()) + " pairs"};
  return {"duality", "WARN", join(r.warnings, "; ")};
}

CheckResult check_natural_maps(const BuiltModel& m) {
  auto maps = natural_maps(m.complex);
  std::size_t non_iso = 0;
  std::vector<std::string> kernels;
  for (const auto& nm : maps) {
    if (!nm.is_iso()) ++non_iso;
    if (nm.name == "BC->dR" && nm.kernel_dim)
      kernels.push_back("(" + nm.source_key + ") " + std::to_string(nm.kernel_dim));
  }
  std::string detail = std::to_string(maps.size()) + " maps well defined, " + std::to_string(non_iso) +
                       " not isomorphisms";
  if (!kernels.empty()) detail += "; ker(BC->dR): " + join(kernels, ", ");
  return {"natural-maps", "PASS", detail};
}

const BasicCohomology& require_vaisman(const BuiltModel& m, const std::string& check) {
  if (!m.vaisman) throw Error(check + " applies only to vaisman models");
  return m.vaisman->basic;
}

CheckResult check_cone(const BuiltModel& m) {
  ConeLesReport r = verify_cone_les(require_vaisman(m, "cone-les"));
  return {"cone-les", "PASS", "exact at all " + std::to_string(r.nodes.size()) + " nodes"};
}

CheckResult check_crosscheck(const BuiltModel& m) {
  CrosscheckReport r = crosscheck(require_vaisman(m, "theorem-crosscheck"));
  if (!r.agree()) return {"theorem-crosscheck", "FAIL", join(r.mismatches, "; ")};
  std::string detail = r.formula_applicable ? "direct, LES and closed formula agree on all slots"
                                            : "direct and LES agree; closed formula not applicable: " +
                                                  join(formula_conditions(m.vaisman->basic).failures, "; ");
  if (!r.printed_diffs.empty()) detail += "; printed indexing differs: " + join(r.printed_diffs, ", ");
  return {"theorem-crosscheck", "PASS", detail};
}

CheckResult check_cartan(const BuiltModel& m) {
  if (m.contractions.empty()) throw Error("cartan needs a model with declared contractions");
  m.complex.require_del("cartan");
  std::vector<std::string> failures, names;
  Operator d = m.complex.d();
  for (const auto& c : m.contractions) {
    names.push_back(c.name);
    LieDerivative ld = lie_derivative(m.complex, c);
    if (!op_commutator(ld.full, d).is_zero()) failures.push_back(c.name + ": [L_X, d] != 0");
    if (!op_commutator(ld.full, c.total()).is_zero()) failures.push_back(c.name + ": [L_X, iota_X] != 0");
    if (!(lie_derivative_j(m.complex, c) == lie_derivative_j_cartan(m.complex, c)))
      failures.push_back(c.name + ": -{d^c, iota_X} != {d, iota_JX}");
  }
  if (!failures.empty()) return {"cartan", "FAIL", join(failures, "; ")};
  return {"cartan", "PASS",
          "[L_X, d] = 0, [L_X, iota_X] = 0 and -{d^c, iota_X} = {d, iota_JX} for " + join(names, ", ")};
}

CheckResult check_action(const BuiltModel& m, const std::string& name) {
  const Contraction* c = m.find_contraction(name);
  if (!c) throw Error("model " + m.spec.name + " declares no contraction named '" + name + "'");
  LieDerivative ld = lie_derivative(m.complex, *c);
  ActionVerdict v = induced_on_cohomology(m.complex, ld.result);
  std::string detail = describe_action(m, v);
  for (const auto& w : ld.warnings) detail += (detail.empty() ? "" : "; ") + w;
  if (v.trivial()) return {"action:" + name, "TRIVIAL", detail.empty() ? "induced map zero on all flavors" : detail};
  return {"action:" + name, "NONTRIVIAL", detail};
}

std::vector<std::string> default_checks(const BuiltModel& m) {
  std::vector<std::string> out = {"structural"};
  if (!m.complex.has_del) return out;
  for (const char* c : {"five-term", "frolicher", "duality", "natural-maps"}) out.push_back(c);
  if (!m.contractions.empty()) out.push_back("cartan");
  if (m.vaisman) {
    out.push_back("cone-les");
    out.push_back("theorem-crosscheck");
  }
  for (const auto& c : m.contractions) out.push_back("action:" + c.name);
  return out;
}

void validate_check_names(const std::vector<std::string>& checks) {
  for (const auto& c : checks) {
    if (c.rfind("action:", 0) == 0 && c.size() > 7) continue;
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
      throw Error("unknown check '" + c + "'");
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const BuiltModel& m, const Tables& t, const std::vector<CheckResult>& checks, OutputFormat fmt) {
  std::ostringstream os;
  const bool vaisman = m.vaisman.has_value();
  const int n = m.n();
  switch (fmt) {
    case OutputFormat::table: {
      os << "model " << m.spec.name << " (" << to_string(m.spec.kind) << ", n = " << n << ")\n";
      for (const auto& [f, table] : t.tables) {
        os << '\n';
        render_table(os, table, n, vaisman && is_qualified(f));
      }
      if (!checks.empty()) os << '\n';
      for (const auto& c : checks) os << c.verdict << ' ' << c.name << ": " << c.detail << '\n';
      break;
    }
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["model"] = m.spec.name;
      j["n"] = n;
      j["tables"] = nlohmann::ordered_json::object();
      for (const auto& [f, table] : t.tables) {
        nlohmann::ordered_json tj = nlohmann::ordered_json::object();
        if (table.is_total()) {
          for (int k = 0; k <= 2 * n; ++k) tj[std::to_string(k)] = table.dim(k);
        } else {
          for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) tj[Bidegree{p, q}.str()] = table.dim(Bidegree{p, q});
        }
        j["tables"][to_string(f)] = tj;
      }
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"verdict", c.verdict}, {"detail", c.detail}});
      if (vaisman) {
        nlohmann::ordered_json q = nlohmann::ordered_json::object();
        for (const auto& [f, table] : t.tables)
          if (is_qualified(f)) q[to_string(f)] = "invariant-model";
        j["qualifiers"] = q;
      }
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      if (!t.tables.empty()) {
        os << "flavor,p,q,k,dim\n";
        for (const auto& [f, table] : t.tables) {
          if (table.is_total()) {
            for (int k = 0; k <= 2 * n; ++k) os << to_string(f) << ",,," << k << ',' << table.dim(k) << '\n';
          } else {
            for (int p = 0; p <= n; ++p)
              for (int q = 0; q <= n; ++q)
                os << to_string(f) << ',' << p << ',' << q << ',' << p + q << ',' << table.dim(Bidegree{p, q}) << '\n';
          }
        }
      }
      if (!checks.empty()) {
        os << "check,verdict,detail\n";
        for (const auto& c : checks) os << csv_field(c.name) << ',' << c.verdict << ',' << csv_field(c.detail) << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string render_list(OutputFormat fmt) {
  std::ostringstream os;
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& m : catalog()) {
      nlohmann::ordered_json c = nlohmann::ordered_json::array();
      for (const auto& k : m.contractions) c.push_back(k.name);
      j.push_back({{"name", m.name}, {"kind", to_string(m.kind)}, {"contractions", c}});
    }
    os << j.dump(2) << '\n';
    return os.str();
  }
  if (fmt == OutputFormat::csv) os << "name,kind,contractions\n";
  for (const auto& m : catalog()) {
    std::vector<std::string> names;
    for (const auto& k : m.contractions) names.push_back(k.name);
    if (fmt == OutputFormat::csv)
      os << m.name << ',' << to_string(m.kind) << ',' << csv_field(join(names, " ")) << '\n';
    else
      os << std::left << std::setw(18) << m.name << std::setw(9) << to_string(m.kind) << join(names, ", ") << '\n';
  }
  return os.str();
}

}  // namespace

CheckResult run_check(const BuiltModel& model, const std::string& check, std::uint64_t seed) {
  if (check == "structural") return check_structural(model);
  if (check == "random") return check_random(seed);
  if (check.rfind("action:", 0) == 0) return check_action(model, check.substr(7));
  if (check == "cone-les") return check_cone(model);
  if (check == "theorem-crosscheck") return check_crosscheck(model);
  if (check == "cartan") return check_cartan(model);
  model.complex.require_del(check);
  if (check == "five-term") return {"five-term", "PASS", verify_five_term(model.complex).summary()};
  if (check == "frolicher") return check_frolicher(model);
  if (check == "duality") return check_duality(model);
  if (check == "natural-maps") return check_natural_maps(model);
  throw Error("unknown check '" + check + "'");
}

RunResult run(const RunConfig& cfg) {
  RunResult r;
  try {
    if (cfg.command == "list") {
      r.out = render_list(cfg.output);
      return r;
    }
    if (cfg.command != "compute" && cfg.command != "verify") throw Error("unknown command '" + cfg.command + "'");
    std::vector<std::string> flavor_list = cfg.flavors;
    if (cfg.command == "compute" && flavor_list.empty()) flavor_list = {"dolbeault"};
    std::vector<Flavor> flavors = expand_flavors(flavor_list);
    validate_check_names(cfg.checks);

    BuiltModel model = build_model(resolve_model(cfg.model));
    if (!model.complex.has_del)
      for (Flavor f : flavors)
        if (f != Flavor::dolbeault) model.complex.require_del(to_string(f));
    Tables tables = compute_tables(model, flavors);

    std::vector<std::string> check_list = cfg.checks;
    if (cfg.command == "verify" && check_list.empty()) check_list = default_checks(model);
    std::vector<CheckResult> checks;
    for (const auto& c : check_list) {
      try {
        checks.push_back(run_check(model, c, cfg.seed));
      } catch (const InternalError& e) {
        checks.push_back({c, "FAIL", e.what()});
      }
    }
    r.out = render(model, tables, checks, cfg.output);
    for (const auto& c : checks)
      if (c.verdict == "FAIL") r.exit_code = 1;
  } catch (const InternalError& e) {
    r.exit_code = 1;
    r.out.clear();
    r.err = std::string("internal error: ") + e.what() + '\n';
  } catch (const std::exception& e) {
    r.exit_code = 2;
    r.out.clear();
    r.err = std::string("error: ") + e.what() + '\n';
  }
  return r;
}

RunResult run_cli(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string output = "table";
  CLI::App app{"Exact Dolbeault, de Rham, Bott-Chern and Aeppli cohomology of bigraded complexes", "hodgekit"};
  app.require_subcommand(1, 1);
  auto* list = app.add_subcommand("list", "List the built-in models");
  list->add_option("--output", output, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  for (auto [name, help] : {std::pair{"compute", "Compute cohomology tables"},
                            std::pair{"verify", "Run verification checks"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("model", cfg.model, "Catalog model name or model file path")->required();
    sub->add_option("--flavors", cfg.flavors, "dolbeault,anti,derham,bc,aeppli,abc,all")->delimiter(',');
    sub->add_option("--checks", cfg.checks,
                    "structural,random,five-term,frolicher,duality,natural-maps,cone-les,theorem-crosscheck,cartan,"
                    "action:<name>")
        ->delimiter(',');
    sub->add_option("--output", output, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--seed", cfg.seed, "Seed for randomized suites");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.output = output == "json" ? OutputFormat::json : output == "csv" ? OutputFormat::csv : OutputFormat::table;
  return run(cfg);
}

}  // namespace hodgekit
