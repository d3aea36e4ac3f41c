#include "reeskit/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "reeskit/formulas.hpp"

namespace reeskit::cli {

FinitePoset load_poset(const std::string& spec_or_path, const EnumerationBounds& bounds) {
  if (std::filesystem::is_regular_file(spec_or_path)) {
    std::ifstream in(spec_or_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return poset_from_json_text(buf.str());
  }
  return family_from_spec(spec_or_path, bounds);
}

namespace {

bool tree_like(const std::string& spec) {
  return spec.rfind("C:", 0) == 0 || spec.rfind("T:", 0) == 0;
}

}  // namespace

FinitePoset cmd_rees(const std::string& p, const std::string& q, const ReesOptions& o) {
  FinitePoset a = load_poset(p, o.bounds);
  if (o.minus) a = remove_min(a);
  const FinitePoset b = load_poset(q, o.bounds);
  if (o.check_el) {
    if (a.length() != b.length())
      throw Error(ErrorCode::LengthMismatch, "the factors have lengths " + std::to_string(a.length()) + " and " +
                                                 std::to_string(b.length()));
    if (!tree_like(q))
      throw Error(ErrorCode::PreconditionFailed, "the second factor needs a semi-EL labeling (a chain or tree)");
    const LabeledFamily f = labeled_family(p, o.bounds);
    const EdgeLabeling lam = o.minus ? hat_of_minus(f.poset, f.labeling) : hat_extension(f.poset, f.labeling);
    const ReesLabeled rl = rees_el_labeling(a, lam, b, constant_labeling(b));
    const ElVerdict v = is_el_labeling(rl.hat, rl.labeling);
    if (!v.ok) throw Error(ErrorCode::PreconditionFailed, "Rees-product labeling is not EL: " + v.reason);
  }
  FinitePoset r = rees_product(a, b);
  if (o.minus_result) r = remove_min(r);
  if (o.hat) r = adjoin_bounds(r);
  if (o.plus) r = adjoin_max(r);
  return r;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto number = [&](const std::string& x) -> std::size_t {
    if (x.empty() || x.size() > 6 || x.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad range '" + s + "'");
    return std::stoul(x);
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = number(s);
    return {n, n};
  }
  const std::size_t lo = number(s.substr(0, dots));
  const std::size_t hi = number(s.substr(dots + 2));
  if (lo > hi) throw Error(ErrorCode::ParseError, "empty range '" + s + "'");
  return {lo, hi};
}

std::vector<WeakComposition> compositions(std::size_t n) {
  std::vector<WeakComposition> out;
  WeakComposition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 1; k <= left; ++k) {
      cur.push_back(static_cast<unsigned>(k));
      rec(left - k);
      cur.pop_back();
    }
  };
  if (n > 0) rec(n);
  return out;
}

namespace {

std::string composition_text(const WeakComposition& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s;
}

bool takes_mu(const std::string& name) { return name.rfind("eq5.", 0) == 0; }

}  // namespace

Table cmd_table(const std::string& name, std::size_t lo, std::size_t hi, std::optional<unsigned> t,
                std::optional<unsigned> q, FormulaVariant variant, const WordBounds& bounds) {
  const auto known = formula_names();
  std::vector<std::string> formulas;
  if (name == "thm5.1")
    formulas = {variant == FormulaVariant::Corrected ? "eq5.1-corrected" : "eq5.1", "eq5.2"};
  else if (std::find(known.begin(), known.end(), name) != known.end())
    formulas = {name};
  else
    throw Error(ErrorCode::UnknownFormula, "unknown table '" + name + "'");
  const bool by_mu = takes_mu(formulas.front());

  Table table;
  table.name = name;
  table.columns = {by_mu ? "mu" : "n"};
  for (const auto& f : formulas) {
    table.columns.push_back(f);
    if (t || q) {
      std::string at = f + "(";
      if (t) at += "t=" + std::to_string(*t);
      if (t && q) at += ",";
      if (q) at += "q=" + std::to_string(*q);
      table.columns.push_back(at + ")");
    }
  }
  auto add_row = [&](const std::string& key, const FormulaParams& params) {
    std::vector<std::string> row{key};
    for (const auto& f : formulas) {
      const StatPolynomial p = formula_rhs(f, params);
      row.push_back(stat::to_string(p));
      if (t || q) {
        StatPolynomial v = p;
        if (t) v = stat::evaluate_t(v, *t);
        if (q) v = stat::evaluate_q(v, *q);
        row.push_back(stat::to_string(v));
      }
    }
    table.rows.push_back(std::move(row));
  };
  for (std::size_t n = lo; n <= hi; ++n) {
    FormulaParams params;
    params.bounds = bounds;
    if (by_mu) {
      for (const auto& mu : compositions(n)) {
        params.mu = mu;
        add_row(composition_text(mu), params);
      }
    } else {
      params.n = n;
      add_row(std::to_string(n), params);
    }
  }
  return table;
}

std::string table_to_text(const Table& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << cells[c];
      if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

std::string table_to_csv(const Table& t) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << field(cells[c]);
    os << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

Json table_to_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(row);
  return Json{{"schema_version", kSchemaVersion}, {"table", t.name}, {"columns", t.columns}, {"rows", rows}};
}

namespace {

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + out_path + "'");
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rees products of posets: constructions, EL-labelings and Betti numbers"};
  app.name("reeskit");
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "text";
  std::size_t bound_faces = HomologyBounds{}.max_faces;
  std::size_t bound_elems = EnumerationBounds{}.elements;
  bool seed_free = false;
  auto common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--out", out_path, "Write the result to a file instead of stdout");
    sub->add_option("--bound-elems", bound_elems, "Largest poset that may be enumerated");
    if (with_format)
      sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* poset = app.add_subcommand("poset", "Print a family poset (or a poset file) as JSON");
  std::string poset_spec;
  poset->add_option("spec", poset_spec, "C:n, B:n, Bmu:a,b,..., Bq:n,q, T:t,n, NC:n, or a JSON file")->required();
  common(poset, false);

  auto* rees = app.add_subcommand("rees", "Print the Rees product of two posets as JSON");
  std::string rees_p, rees_q;
  ReesOptions ro;
  rees->add_option("P", rees_p, "First factor")->required();
  rees->add_option("Q", rees_q, "Second factor")->required();
  rees->add_flag("--minus", ro.minus, "Remove the minimum of P first");
  rees->add_flag("--minus-result", ro.minus_result, "Remove the minimum of the product");
  rees->add_flag("--plus", ro.plus, "Append a maximum to the product");
  rees->add_flag("--hat", ro.hat, "Adjoin a minimum and a maximum to the product");
  rees->add_flag("--check-thm3.1", ro.check_el, "Require equal lengths and verify the Rees EL-labeling");
  common(rees, false);

  auto* verify = app.add_subcommand("verify", "Compare formula, shelling and homology routes");
  std::vector<std::string> targets;
  VerifyOptions vo;
  std::string routes = "all", variant = "printed", mu;
  std::size_t n = 0, m = 0;
  unsigned t = 0, q = 0;
  std::string vposet;
  bool list = false;
  verify->add_option("targets", targets, "Targets to verify");
  verify->add_flag("--list", list, "List the targets");
  auto* n_opt = verify->add_option("--n", n, "Size parameter");
  auto* t_opt = verify->add_option("--t", t, "Tree arity")->check(CLI::PositiveNumber);
  auto* q_opt = verify->add_option("--q", q, "Field size (a prime power)");
  auto* mu_opt = verify->add_option("--mu", mu, "Composition, e.g. 2,1");
  auto* m_opt = verify->add_option("--m", m, "Number of variables (symm-identities)");
  auto* p_opt = verify->add_option("--poset", vposet, "Family spec for thm3.1-el");
  verify->add_flag("--minus", vo.minus, "Remove the minimum of --poset (thm3.1-el)");
  verify->add_option("--routes", routes, "Routes to run")->check(CLI::IsMember({"all", "formula", "shelling", "homology"}));
  verify->add_option("--formula-variant", variant, "printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}));
  verify->add_option("--bound-faces", bound_faces, "Largest order complex (faces) for homology routes");
  verify->add_flag("--seed-free", seed_free, "Accepted for compatibility; every computation is deterministic");
  verify->add_flag("--timing", vo.timing, "Include wall time in the report");
  common(verify, true);

  auto* table = app.add_subcommand("table", "Tabulate a formula over a parameter range");
  std::string table_name, range = "1..4", tvariant = "printed";
  unsigned tt = 0, tq = 0;
  table->add_option("name", table_name, "Formula name, or thm5.1 for the composition grid")->required();
  table->add_option("--n", range, "n or lo..hi");
  auto* tt_opt = table->add_option("--t", tt, "Evaluate at this t");
  auto* tq_opt = table->add_option("--q", tq, "Evaluate at this q");
  table->add_option("--formula-variant", tvariant, "printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}));
  common(table, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    EnumerationBounds eb;
    eb.elements = bound_elems;
    if (poset->parsed()) {
      emit(poset_to_json(load_poset(poset_spec, eb)).dump(2) + "\n", out_path, out);
      return kExitOk;
    }
    if (rees->parsed()) {
      ro.bounds = eb;
      emit(poset_to_json(cmd_rees(rees_p, rees_q, ro)).dump(2) + "\n", out_path, out);
      return kExitOk;
    }
    if (table->parsed()) {
      const auto [lo, hi] = parse_range(range);
      const Table tab = cmd_table(table_name, lo, hi, *tt_opt ? std::optional<unsigned>(tt) : std::nullopt,
                                  *tq_opt ? std::optional<unsigned>(tq) : std::nullopt,
                                  formula_variant_from_string(tvariant));
      const std::string text = format == "json"  ? table_to_json(tab).dump(2) + "\n"
                               : format == "csv" ? table_to_csv(tab)
                                                 : table_to_text(tab);
      emit(text, out_path, out);
      return kExitOk;
    }
    if (list) {
      for (const auto& name : target_names()) out << name << "\n";
      return kExitOk;
    }
    if (targets.empty()) {
      err << "verify: no targets given (see --list)\n";
      return kExitError;
    }
    if (*n_opt) vo.n = n;
    if (*t_opt) vo.t = t;
    if (*q_opt) vo.q = q;
    if (*m_opt) vo.m = m;
    if (*mu_opt) vo.mu = parse_composition(mu);
    if (*p_opt) vo.poset = vposet;
    vo.routes = route_selection_from_string(routes);
    vo.variant = formula_variant_from_string(variant);
    vo.faces.max_faces = bound_faces;
    vo.elements = eb;
    const auto reports = run_targets(targets, vo);
    const std::string text = format == "json"  ? reports_to_json(reports).dump(2) + "\n"
                             : format == "csv" ? reports_to_csv(reports)
                                               : reports_to_text(reports);
    emit(text, out_path, out);
    return all_ok(reports) ? kExitOk : kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace reeskit::cli
