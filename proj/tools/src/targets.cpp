#include "reeskit/cli/targets.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <set>

#include "reeskit/formulas.hpp"
#include "reeskit/series.hpp"

namespace reeskit::cli {

RouteSelection route_selection_from_string(std::string_view s) {
  if (s == "all") return RouteSelection::All;
  if (s == "formula") return RouteSelection::Formula;
  if (s == "shelling") return RouteSelection::Shelling;
  if (s == "homology") return RouteSelection::Homology;
  throw Error(ErrorCode::ParseError, "unknown route selection '" + std::string(s) + "'");
}

FormulaVariant formula_variant_from_string(std::string_view s) {
  if (s == "printed") return FormulaVariant::Printed;
  if (s == "corrected") return FormulaVariant::Corrected;
  throw Error(ErrorCode::ParseError, "unknown formula variant '" + std::string(s) + "'");
}

WeakComposition parse_composition(std::string_view s) {
  WeakComposition mu;
  std::size_t i = 0;
  while (i <= s.size()) {
    const std::size_t j = std::min(s.find(',', i), s.size());
    const std::string_view part = s.substr(i, j - i);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos || part.size() > 6)
      throw Error(ErrorCode::ParseError, "bad composition '" + std::string(s) + "'");
    mu.push_back(static_cast<unsigned>(std::stoul(std::string(part))));
    i = j + 1;
  }
  return mu;
}

LabeledFamily labeled_family(std::string_view spec, const EnumerationBounds& bounds) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  FinitePoset p = family_from_spec(spec, bounds);
  if (kind == "C") {
    EdgeLabeling lam = constant_labeling(p);
    return {std::move(p), std::move(lam)};
  }
  if (kind == "B") {
    EdgeLabeling lam = boolean_labeling(p, static_cast<unsigned>(p.length()));
    return {std::move(p), std::move(lam)};
  }
  if (kind == "Bmu") {
    EdgeLabeling lam = chain_product_labeling(p, parse_composition(spec.substr(colon + 1)));
    return {std::move(p), std::move(lam)};
  }
  if (kind == "NC") {
    EdgeLabeling lam = noncrossing_labeling(p, static_cast<unsigned>(p.length() + 1));
    return {std::move(p), std::move(lam)};
  }
  throw Error(ErrorCode::PreconditionFailed, "no EL-labeling is available for '" + std::string(spec) + "'");
}

namespace {

bool selected(const VerifyOptions& o, RouteKind k) {
  switch (o.routes) {
    case RouteSelection::All: return true;
    case RouteSelection::Formula: return k == RouteKind::Formula;
    case RouteSelection::Shelling: return k == RouteKind::Shelling;
    case RouteSelection::Homology: return k == RouteKind::Homology;
  }
  return true;
}

bool is_bound_error(const Error& e) {
  return e.code() == ErrorCode::SizeBound || e.code() == ErrorCode::BoundExceeded;
}

void add_route(VerificationReport& rep, const VerifyOptions& o, RouteKind kind, std::string name,
               const std::function<void(RouteResult&)>& body) {
  RouteResult r;
  r.name = std::move(name);
  r.kind = kind;
  if (!selected(o, kind)) {
    r.skipped = "not selected";
  } else {
    try {
      body(r);
      r.computed = true;
    } catch (const Error& e) {
      if (!is_bound_error(e)) throw;
      r.skipped = e.what();
      r.symbolic.reset();
      r.samples.clear();
    }
  }
  rep.routes.push_back(std::move(r));
}

void add_symbolic(VerificationReport& rep, const VerifyOptions& o, RouteKind kind, std::string name,
                  const std::function<StatPolynomial()>& f) {
  add_route(rep, o, kind, std::move(name), [&](RouteResult& r) { r.symbolic = f(); });
}

FormulaParams fparams(const VerifyOptions& o) {
  FormulaParams p;
  p.bounds = o.words;
  return p;
}

void add_formula(VerificationReport& rep, const VerifyOptions& o, const std::string& name, FormulaParams params,
                 std::optional<Integer> at_q = std::nullopt, std::optional<Integer> at_t = std::nullopt) {
  params.bounds = o.words;
  add_symbolic(rep, o, RouteKind::Formula, name, [&] {
    StatPolynomial f = formula_rhs(name, params);
    if (at_q) f = stat::evaluate_q(f, *at_q);
    if (at_t) f = stat::evaluate_t(f, *at_t);
    return f;
  });
}

/// Top reduced Betti number in dimension `dim`, plus a check that homology
/// is concentrated there and agrees over Q, F_2 and F_3.
void add_homology(VerificationReport& rep, const VerifyOptions& o, std::string name, unsigned t, unsigned q, int dim,
                  const std::function<FinitePoset()>& build) {
  std::optional<Check> sphere;
  add_route(rep, o, RouteKind::Homology, name, [&](RouteResult& r) {
    const FinitePoset p = build();
    const BettiVector b = betti(p, BettiOptions{o.faces, true, false});
    r.samples.push_back(Sample{t, q, b.at(dim)});
    Check c{"homology concentrated in dimension " + std::to_string(dim) + " and field independent", true, ""};
    for (std::size_t i = 0; i < b.rational.size(); ++i) {
      const int k = static_cast<int>(i) - 1;
      if (k != dim && b.rational[i] != 0) {
        c.ok = false;
        c.detail = "beta_" + std::to_string(k) + " = " + std::to_string(b.rational[i]);
      }
    }
    if ((b.mod2 && *b.mod2 != b.rational) || (b.mod3 && *b.mod3 != b.rational)) {
      c.ok = false;
      c.detail = "ranks over F_2 or F_3 differ from those over Q";
    }
    sphere = c;
  });
  if (sphere) rep.checks.push_back(*sphere);
}

std::string variant_name(const VerifyOptions& o, const std::string& printed) {
  return o.variant == FormulaVariant::Corrected ? printed + "-corrected" : printed;
}

RankBetti shift_up(RankBetti b) {
  return [b = std::move(b)](const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> s(ranks);
    for (auto& r : s) ++r;
    return b(s);
  };
}

std::string composition_text(const WeakComposition& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s;
}

FinitePoset tree_or_chain(unsigned t, std::size_t n, const EnumerationBounds& b) {
  return t == 1 ? chain(n) : tary_tree(t, static_cast<unsigned>(n), b);
}

std::size_t need_positive(std::optional<std::size_t> v, std::size_t dflt, const char* what) {
  const std::size_t n = v.value_or(dflt);
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, std::string(what) + " needs n >= 1");
  return n;
}

StatPolynomial max_only_chains(const FinitePoset& p, const EdgeLabeling& lam) {
  return betti_poly_tree_product(remove_min(p), hat_of_minus(p, lam), TreeMode::MaxOnly).total();
}

StatPolynomial min_max_chains(const FinitePoset& p, const EdgeLabeling& lam) {
  return betti_poly_tree_product(p, hat_extension(p, lam), TreeMode::MinAndMax).total();
}

std::vector<VerificationReport> jonsson(const VerifyOptions& o) {
  const std::size_t n = need_positive(o.n, 4, "jonsson");
  VerificationReport r;
  r.target = "jonsson";
  r.params = Json{{"n", n}};
  FormulaParams fp = fparams(o);
  fp.n = n;
  add_formula(r, o, "jonsson", fp);
  add_symbolic(r, o, RouteKind::Shelling, "ascent-free chains", [&] {
    const FinitePoset b = boolean(static_cast<unsigned>(n), o.elements);
    const EdgeLabeling lam = boolean_labeling(b, static_cast<unsigned>(n));
    const FinitePoset c = chain(n - 1);
    const ReesLabeled rl = rees_el_labeling(remove_min(b), hat_of_minus(b, lam), c, constant_labeling(c));
    return stat::constant(descent_profile(rl.hat, rl.labeling).ascent_free_count(rl.hat.length()));
  });
  add_homology(r, o, "order complex", 1, 1, static_cast<int>(n) - 1, [&] {
    return rees_product(remove_min(boolean(static_cast<unsigned>(n), o.elements)), chain(n - 1));
  });
  return {r};
}

std::vector<VerificationReport> qan(const VerifyOptions& o) {
  const std::size_t n = need_positive(o.n, 3, "qan");
  const unsigned q = PrimePower::of(o.q.value_or(2)).q;
  VerificationReport r;
  r.target = "qan";
  r.params = Json{{"n", n}, {"q", q}};
  FormulaParams fp = fparams(o);
  fp.n = n;
  add_formula(r, o, "qan", fp);
  add_symbolic(r, o, RouteKind::Shelling, "rank selection (inv data)", [&] {
    return stat::evaluate_t(betti_poly_rank_selection(n - 1, shift_up(rank_betti_subspace(n)), RankSelectionVariant::MaxOnly),
                      1);
  });
  add_homology(r, o, "order complex", 1, q, static_cast<int>(n) - 1, [&] {
    return rees_product(remove_min(subspace_lattice(static_cast<unsigned>(n), q, o.elements)), chain(n - 1));
  });
  return {r};
}

std::vector<VerificationReport> tree1(const VerifyOptions& o) {
  const std::size_t n = need_positive(o.n, 3, "tree1");
  const unsigned t = o.t.value_or(2);
  VerificationReport r;
  r.target = "tree1";
  r.params = Json{{"n", n}, {"t", t}};
  if (o.q) r.params["q"] = *o.q;
  FormulaParams fp = fparams(o);
  fp.n = n;
  add_formula(r, o, variant_name(o, "tree1"), fp, o.q ? std::nullopt : std::optional<Integer>(1));
  if (o.q) {
    const unsigned q = PrimePower::of(*o.q).q;
    add_symbolic(r, o, RouteKind::Shelling, "rank selection (inv data)", [&] {
      return betti_poly_rank_selection(n - 1, shift_up(rank_betti_subspace(n)), RankSelectionVariant::MaxOnly);
    });
    add_homology(r, o, "order complex", t, q, static_cast<int>(n) - 1, [&] {
      return rees_product(remove_min(subspace_lattice(static_cast<unsigned>(n), q, o.elements)),
                          tree_or_chain(t, n - 1, o.elements));
    });
  } else {
    add_symbolic(r, o, RouteKind::Shelling, "ascent-free chains", [&] {
      const FinitePoset b = boolean(static_cast<unsigned>(n), o.elements);
      return max_only_chains(b, boolean_labeling(b, static_cast<unsigned>(n)));
    });
    add_homology(r, o, "order complex", t, 1, static_cast<int>(n) - 1, [&] {
      return rees_product(remove_min(boolean(static_cast<unsigned>(n), o.elements)), tree_or_chain(t, n - 1, o.elements));
    });
  }
  return {r};
}

std::vector<VerificationReport> tree2(const VerifyOptions& o) {
  const std::size_t n = need_positive(o.n, 3, "tree2");
  const unsigned t = o.t.value_or(2);
  VerificationReport r;
  r.target = "tree2";
  r.params = Json{{"n", n}, {"t", t}};
  if (o.q) r.params["q"] = *o.q;
  FormulaParams fp = fparams(o);
  fp.n = n;
  add_formula(r, o, "tree2", fp, o.q ? std::nullopt : std::optional<Integer>(1));
  if (o.q) {
    const unsigned q = PrimePower::of(*o.q).q;
    add_symbolic(r, o, RouteKind::Shelling, "rank selection (inv data)", [&] {
      return betti_poly_rank_selection(n, rank_betti_subspace(n), RankSelectionVariant::MinAndMax);
    });
    add_homology(r, o, "order complex", t, q, static_cast<int>(n) - 1, [&] {
      return remove_min(
          rees_product(subspace_lattice(static_cast<unsigned>(n), q, o.elements), tree_or_chain(t, n, o.elements)));
    });
  } else {
    add_symbolic(r, o, RouteKind::Shelling, "ascent-free chains", [&] {
      const FinitePoset b = boolean(static_cast<unsigned>(n), o.elements);
      return min_max_chains(b, boolean_labeling(b, static_cast<unsigned>(n)));
    });
    add_homology(r, o, "order complex", t, 1, static_cast<int>(n) - 1, [&] {
      return remove_min(rees_product(boolean(static_cast<unsigned>(n), o.elements), tree_or_chain(t, n, o.elements)));
    });
  }
  return {r};
}

std::vector<VerificationReport> eq63(const VerifyOptions& o) {
  const std::size_t n = need_positive(o.n, 3, "eq6.3");
  const unsigned q = PrimePower::of(o.q.value_or(2)).q;
  const unsigned t = o.t.value_or(1);
  VerificationReport r;
  r.target = "eq6.3";
  r.params = Json{{"n", n}, {"q", q}, {"t", t}};
  FormulaParams fp = fparams(o);
  fp.n = n;
  add_formula(r, o, "eq6.3", fp);
  add_formula(r, o, "tree2", fp);
  add_symbolic(r, o, RouteKind::Shelling, "rank selection (inv data)", [&] {
    return betti_poly_rank_selection(n, rank_betti_subspace(n), RankSelectionVariant::MinAndMax);
  });
  add_homology(r, o, "order complex", t, q, static_cast<int>(n) - 1, [&] {
    return remove_min(
        rees_product(subspace_lattice(static_cast<unsigned>(n), q, o.elements), tree_or_chain(t, n, o.elements)));
  });
  return {r};
}

std::vector<VerificationReport> thm51(const VerifyOptions& o) {
  const WeakComposition mu = o.mu.value_or(WeakComposition{2, 1});
  const std::size_t n = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "thm5.1 needs a composition of n >= 1");
  const unsigned t = o.t.value_or(2);
  const Json params{{"mu", composition_text(mu)}, {"t", t}};
  FormulaParams fp = fparams(o);
  fp.mu = mu;

  const FinitePoset b = chain_product(mu, o.elements);
  const EdgeLabeling lam = chain_product_labeling(b, mu);

  VerificationReport d;
  d.target = "thm5.1:derangements";
  d.params = params;
  add_formula(d, o, variant_name(o, "eq5.1"), fp);
  add_symbolic(d, o, RouteKind::Shelling, "ascent-free chains", [&] { return max_only_chains(b, lam); });
  add_symbolic(d, o, RouteKind::Shelling, "rank-jump sequences", [&] {
    return betti_poly_by_partition(remove_min(b), hat_of_minus(b, lam), TreeMode::MaxOnly).total();
  });
  add_symbolic(d, o, RouteKind::Shelling, "rank selection", [&] {
    const FinitePoset bm = remove_min(b);
    return betti_poly_rank_selection(n - 1, rank_betti_from_labeling(bm, hat_of_minus(b, lam)),
                                     RankSelectionVariant::MaxOnly);
  });
  add_homology(d, o, "order complex", t, 1, static_cast<int>(n) - 1,
               [&] { return rees_product(remove_min(b), tree_or_chain(t, n - 1, o.elements)); });

  VerificationReport s;
  s.target = "thm5.1:smirnov";
  s.params = params;
  add_formula(s, o, "eq5.2", fp);
  add_symbolic(s, o, RouteKind::Shelling, "ascent-free chains", [&] { return min_max_chains(b, lam); });
  add_symbolic(s, o, RouteKind::Shelling, "rank-jump sequences", [&] {
    return betti_poly_by_partition(b, hat_extension(b, lam), TreeMode::MinAndMax).total();
  });
  add_symbolic(s, o, RouteKind::Shelling, "rank selection", [&] {
    return betti_poly_rank_selection(n, rank_betti_from_labeling(b, hat_extension(b, lam)),
                                     RankSelectionVariant::MinAndMax);
  });
  add_homology(s, o, "order complex", t, 1, static_cast<int>(n) - 1,
               [&] { return remove_min(rees_product(b, tree_or_chain(t, n, o.elements))); });
  return {d, s};
}

std::vector<VerificationReport> thm61(const VerifyOptions& o) {
  const std::size_t n = o.n.value_or(5);
  VerificationReport r;
  r.target = "thm6.1";
  r.params = Json{{"n", n}};
  add_symbolic(r, o, RouteKind::Formula, "q^maj t^exc",
               [&] { return joint_polynomial(n, Statistic::maj, Statistic::exc, o.words); });
  add_symbolic(r, o, RouteKind::Formula, "q^aid t^des",
               [&] { return joint_polynomial(n, Statistic::aid, Statistic::des, o.words); });
  return {r};
}

std::vector<VerificationReport> lemma62(const VerifyOptions& o) {
  const std::size_t n = o.n.value_or(4);
  VerificationReport r;
  r.target = "lemma6.2";
  r.params = Json{{"n", n}};
  Letters X(n);
  std::iota(X.begin(), X.end(), 1U);
  const std::size_t c2 = n * (n - 1) / 2;
  if (!selected(o, RouteKind::Formula)) {
    add_route(r, o, RouteKind::Formula, "barred words", [](RouteResult&) {});
    add_route(r, o, RouteKind::Formula, "permutations", [](RouteResult&) {});
    return {r};
  }
  const auto words = barred_permutations(X, o.words);
  const auto perms = permutations(n, o.words);

  Check inverse{"psi(phi(w)) = w on barred permutations", true, ""};
  Check onto{"phi(psi(s)) = s on permutations", true, ""};
  Check injective{"phi is injective with image the permutations", true, ""};
  Check bars{"des(phi(w)) + 1 = bars(w)", true, ""};
  Check admissible{"ai(phi(w)) = C(n,2) - inv(|w|)", true, ""};
  std::set<Letters> image;
  StatPolynomial lhs;
  for (const auto& w : words) {
    const Letters s = phi(w);
    image.insert(s);
    if (inverse.ok && !(psi(s) == w)) {
      inverse.ok = false;
      inverse.detail = reeskit::to_string(w);
    }
    if (bars.ok && des(s) + 1 != w.bar_count()) {
      bars.ok = false;
      bars.detail = reeskit::to_string(w);
    }
    if (admissible.ok && ai(s) + inv(w.letters) != c2) {
      admissible.ok = false;
      admissible.detail = reeskit::to_string(w);
    }
    lhs += stat::tq(static_cast<unsigned>(w.bar_count()), static_cast<unsigned>(c2 - inv(w.letters)));
  }
  StatPolynomial rhs;
  for (const auto& s : perms) {
    if (onto.ok && !(phi(psi(s)) == s)) {
      onto.ok = false;
      onto.detail = reeskit::to_string(s);
    }
    rhs += stat::tq(static_cast<unsigned>(des(s) + 1), static_cast<unsigned>(ai(s)));
  }
  if (image.size() != words.size() || image != std::set<Letters>(perms.begin(), perms.end())) {
    injective.ok = false;
    injective.detail = std::to_string(words.size()) + " words, " + std::to_string(image.size()) + " images";
  }
  r.checks = {inverse, onto, injective, bars, admissible};
  add_symbolic(r, o, RouteKind::Formula, "barred words", [&] { return lhs; });
  add_symbolic(r, o, RouteKind::Formula, "permutations", [&] { return rhs; });
  return {r};
}

std::vector<VerificationReport> prop63(const VerifyOptions& o) {
  const std::size_t n = o.n.value_or(5);
  VerificationReport r;
  r.target = "prop6.3";
  r.params = Json{{"n", n}};
  add_symbolic(r, o, RouteKind::Formula, "[n]_q!", [&] { return q_factorial(n); });
  add_symbolic(r, o, RouteKind::Formula, "q^aid", [&] { return aid_polynomial(n, o.words); });
  if (selected(o, RouteKind::Formula)) {
    const AidRecurrenceVerdict v = check_aid_recurrence(n, o.words);
    r.checks.push_back(Check{"Gaussian-binomial recurrence", v.ok, v.reason});
  }
  return {r};
}

std::vector<VerificationReport> noncrossing_reports(const VerifyOptions& o, bool at_one) {
  const std::size_t n = need_positive(o.n, 3, at_one ? "cor7.2" : "thm7.1");
  const unsigned t = at_one ? 1 : o.t.value_or(2);
  const std::optional<Integer> fix = at_one ? std::optional<Integer>(1) : std::nullopt;
  auto at = [&](StatPolynomial p) { return at_one ? stat::evaluate_t(p, 1) : p; };
  const Json params = at_one ? Json{{"n", n}} : Json{{"n", n}, {"t", t}};
  FormulaParams fp = fparams(o);
  fp.n = n;
  const std::string prefix = at_one ? "cor7.2" : "thm7.1";

  const FinitePoset nc = noncrossing(static_cast<unsigned>(n + 1), o.elements);
  const EdgeLabeling lam = noncrossing_labeling(nc, static_cast<unsigned>(n + 1));

  VerificationReport a;
  a.target = prefix + ":first";
  a.params = params;
  if (at_one) add_formula(a, o, "cor7.2-first", fp);
  add_formula(a, o, variant_name(o, "thm7.1-first"), fp, std::nullopt, fix);
  add_symbolic(a, o, RouteKind::Shelling, "rank selection (parking data)", [&] {
    return at(betti_poly_rank_selection(n, rank_betti_noncrossing(n), RankSelectionVariant::MinAndMax));
  });
  add_symbolic(a, o, RouteKind::Shelling, "ascent-free chains", [&] { return at(min_max_chains(nc, lam)); });
  add_homology(a, o, "order complex", t, 1, static_cast<int>(n) - 1,
               [&] { return remove_min(rees_product(nc, tree_or_chain(t, n, o.elements))); });

  VerificationReport b;
  b.target = prefix + ":second";
  b.params = params;
  if (at_one) add_formula(b, o, "cor7.2-second", fp);
  add_formula(b, o, "thm7.1-second", fp, std::nullopt, fix);
  add_symbolic(b, o, RouteKind::Shelling, "rank selection (parking data)", [&] {
    return at(betti_poly_rank_selection(n - 1, shift_up(rank_betti_noncrossing(n)), RankSelectionVariant::MaxOnly));
  });
  add_symbolic(b, o, RouteKind::Shelling, "ascent-free chains", [&] { return at(max_only_chains(nc, lam)); });
  add_homology(b, o, "order complex", t, 1, static_cast<int>(n) - 1,
               [&] { return rees_product(remove_min(nc), tree_or_chain(t, n - 1, o.elements)); });
  return {a, b};
}

std::vector<VerificationReport> symm_identities(const VerifyOptions& o) {
  const std::size_t m = o.m.value_or(3);
  const std::size_t N = o.n.value_or(5);
  const bool corrected = o.variant == FormulaVariant::Corrected;
  std::vector<VerificationReport> out;
  for (const std::string base : {"ges1", "ges2", "ges3", "ges4", "banner", "macderang", "smirnov"}) {
    const std::string name = (base == "ges1" || base == "ges3") ? variant_name(o, base) : base;
    VerificationReport r;
    r.target = "identity:" + name;
    r.params = Json{{"m", m}, {"N", N}};
    if (selected(o, RouteKind::Formula)) {
      const IdentityVerdict v = verify_identity(name, m, N);
      std::string detail;
      if (v.mismatch)
        detail = "degree " + std::to_string(v.mismatch->degree) + ", monomial " + v.mismatch->monomial + ": words give " +
                 v.mismatch->lhs + ", closed form gives " + v.mismatch->rhs;
      r.checks.push_back(Check{"word side equals closed form", v.ok, detail});
    }
    out.push_back(std::move(r));
  }
  VerificationReport c;
  c.target = "identity:convolution";
  c.params = Json{{"m", m}, {"N", N}};
  if (selected(o, RouteKind::Formula)) {
    const ConvolutionVerdict g = gn_from_fn(N, m, corrected);
    c.checks.push_back(Check{"G_n from F_n by the e_r convolution", g.ok, g.reason});
    const ConvolutionVerdict s = gmu_specialization(N);
    c.checks.push_back(Check{"specialization at x_i = 1", s.ok, s.reason});
  }
  out.push_back(std::move(c));
  return out;
}

std::vector<VerificationReport> thm31_el(const VerifyOptions& o) {
  const std::string spec = o.poset.value_or("B:3");
  const unsigned t = o.t.value_or(1);
  VerificationReport r;
  r.target = "thm3.1-el";
  r.params = Json{{"poset", spec}, {"minus", o.minus}, {"t", t}};
  const LabeledFamily f = labeled_family(spec, o.elements);
  const FinitePoset p1 = o.minus ? remove_min(f.poset) : f.poset;
  const EdgeLabeling lam1 = o.minus ? hat_of_minus(f.poset, f.labeling) : hat_extension(f.poset, f.labeling);
  const std::size_t len = p1.length();
  const FinitePoset p2 = tree_or_chain(t, len, o.elements);

  std::optional<ReesLabeled> rl;
  add_symbolic(r, o, RouteKind::Shelling, "ascent-free chains", [&] {
    rl = rees_el_labeling(p1, lam1, p2, constant_labeling(p2));
    return stat::constant(descent_profile(rl->hat, rl->labeling).ascent_free_count(rl->hat.length()));
  });
  if (rl) {
    const ElVerdict v = is_el_labeling(rl->hat, rl->labeling);
    std::string detail = v.reason;
    if (!v.ok && v.x && v.y) detail += " in [" + rl->hat.descriptor(*v.x) + ", " + rl->hat.descriptor(*v.y) + "]";
    r.checks.push_back(Check{"Rees-product labeling is EL", v.ok, detail});
  }
  add_homology(r, o, "order complex", t, 1, static_cast<int>(len), [&] { return rees_product(p1, p2); });
  return {r};
}

using TargetFn = std::vector<VerificationReport> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, TargetFn>>& registry() {
  static const std::vector<std::pair<std::string, TargetFn>> r = {
      {"jonsson", jonsson},
      {"qan", qan},
      {"tree1", tree1},
      {"tree2", tree2},
      {"thm5.1", thm51},
      {"thm6.1", thm61},
      {"eq6.3", eq63},
      {"lemma6.2", lemma62},
      {"prop6.3", prop63},
      {"thm7.1", [](const VerifyOptions& o) { return noncrossing_reports(o, false); }},
      {"cor7.2", [](const VerifyOptions& o) { return noncrossing_reports(o, true); }},
      {"symm-identities", symm_identities},
      {"thm3.1-el", thm31_el},
  };
  return r;
}

}  // namespace

std::vector<std::string> target_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<VerificationReport> run_target(std::string_view target, const VerifyOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name != target) continue;
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports = fn(options);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : reports) {
      decide(r);
      if (options.timing) r.wall_ms = ms;
    }
    return reports;
  }
  throw Error(ErrorCode::UnknownTarget, "unknown target '" + std::string(target) + "'");
}

std::vector<VerificationReport> run_targets(const std::vector<std::string>& targets, const VerifyOptions& options) {
  const auto names = target_names();
  for (const auto& t : targets)
    if (std::find(names.begin(), names.end(), t) == names.end())
      throw Error(ErrorCode::UnknownTarget, "unknown target '" + t + "'");
  std::vector<std::future<std::vector<VerificationReport>>> jobs;
  for (const auto& t : targets)
    jobs.push_back(std::async(std::launch::async, [&options, t] { return run_target(t, options); }));
  std::vector<VerificationReport> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace reeskit::cli
