#include "coxkit/report.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "coxkit/errors.hpp"
#include "coxkit/hurwitz.hpp"
#include "coxkit/noncrossing.hpp"
#include "coxkit/parallel.hpp"
#include "coxkit/regularity.hpp"

namespace coxkit {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "fail";
}

CheckStatus SuiteResult::status() const {
  if (!skip_reason.empty()) return CheckStatus::Skip;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
  }
  return CheckStatus::Pass;
}

bool Report::passed() const {
  return std::none_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.status() == CheckStatus::Fail; });
}

Json Report::to_json(bool timing) const {
  Json j;
  j["command"] = command;
  j["group"] = group;
  j["invariants"] = invariants;
  if (command == "verify") {
    Json suites_json = Json::array();
    for (const auto& s : suites) {
      Json sj;
      sj["name"] = s.name;
      sj["status"] = to_string(s.status());
      if (!s.skip_reason.empty()) sj["reason"] = s.skip_reason;
      Json checks = Json::array();
      for (const auto& c : s.checks) {
        checks.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
      }
      sj["checks"] = checks;
      suites_json.push_back(sj);
    }
    j["suites"] = suites_json;
  }
  if (command == "nc") {
    j["posets"] = posets;
    j["isomorphisms"] = isomorphisms;
  }
  j["status"] = passed() ? "pass" : "fail";
  if (timing) j["timing"] = Json{{"seconds", seconds}};
  return j;
}

namespace {

struct Context {
  GroupDefinition def;
  GroupTable T;
  DegreeData D;
  FieldData F;
  bool irreducible = false;
  bool well_generated = false;
  bool kit_reflections = false;
  bool real = false;
  std::vector<int> regular;
  std::optional<RegularClassSet> cox;
  std::optional<LengthTable> L;

  const LengthTable& lengths() {
    if (!L) L = absolute_lengths(T);
    return *L;
  }
  int h() const { return D.coxeter_number; }
  int n() const { return T.rank(); }
  bool small() const { return T.order() <= kFullScanOrder; }

  // Every element up to the scan order, class representatives beyond it.
  std::vector<int> scope() const {
    std::vector<int> out;
    if (small()) {
      for (int w = 0; w < T.order(); ++w) out.push_back(w);
    } else {
      for (const auto& c : T.classes()) out.push_back(c.representative);
    }
    return out;
  }
  // Coxeter elements in scope.
  std::vector<int> coxeter_scope() const {
    std::vector<int> out;
    if (!cox) return out;
    for (const auto& rc : cox->classes) {
      if (small()) {
        const auto& m = T.classes()[rc.class_index].members;
        out.insert(out.end(), m.begin(), m.end());
      } else {
        out.push_back(rc.representative);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

Context make_context(const std::string& spec, int cap) {
  GroupDefinition def = resolve_group_spec(spec);
  GroupTable T = build_group(def, cap);
  Context ctx{std::move(def), std::move(T), {}, {}, false, false, false, false, {}, std::nullopt, std::nullopt};
  ctx.D = degrees_and_exponents(ctx.T);
  ctx.F = field_of_definition(ctx.T);
  ctx.irreducible = is_irreducible(ctx.T);
  ctx.well_generated = ctx.irreducible && is_well_generated(ctx.T);
  const auto& gens = ctx.T.generators();
  ctx.kit_reflections = static_cast<int>(gens.size()) == ctx.n() &&
                        std::all_of(gens.begin(), gens.end(), [&](int g) { return ctx.T.is_reflection(g); });
  ctx.real = true;
  for (const auto& c : ctx.T.classes()) {
    const CycloNum& tr = ctx.T.trace_of(c.representative);
    if (!(complex_conjugate(tr) == tr)) {
      ctx.real = false;
      break;
    }
  }
  ctx.regular = regular_numbers(ctx.T, ctx.D);
  if (std::binary_search(ctx.regular.begin(), ctx.regular.end(), ctx.h())) {
    ctx.cox = regular_classes(ctx.T, ctx.D, ctx.h());
  }
  return ctx;
}

Json group_json(const std::string& spec, const Context& ctx) {
  return Json{{"spec", spec}, {"name", ctx.def.name}, {"source", ctx.def.source}};
}

Json invariants_json(Context& ctx) {
  Json j;
  j["order"] = ctx.T.order();
  j["rank"] = ctx.n();
  j["reflections"] = ctx.T.reflections().size();
  j["hyperplanes"] = ctx.T.hyperplanes().size();
  j["conjugacy_classes"] = ctx.T.classes().size();
  j["entry_conductor"] = ctx.T.entry_conductor();
  j["ambient_conductor"] = ctx.T.conductor();
  j["irreducible"] = ctx.irreducible;
  j["well_generated"] = ctx.well_generated;
  j["degrees"] = ctx.D.degrees;
  j["exponents"] = ctx.D.exponents;
  j["coxeter_number"] = ctx.h();
  j["field_degree"] = ctx.F.field_degree;
  j["regular_numbers"] = ctx.regular;
  if (ctx.cox) j["coxeter_classes"] = ctx.cox->classes.size();
  if (ctx.well_generated) j["catalan_number"] = catalan_number(ctx.D);
  return j;
}

void add(SuiteResult& s, const std::string& name, bool pass, Json detail, Json witness = Json()) {
  Check c{name, pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
  if (!pass) c.detail["witness"] = witness.is_null() ? Json("see detail") : std::move(witness);
  s.checks.push_back(std::move(c));
}

const char* scope_name(const Context& ctx) { return ctx.small() ? "elements" : "classes"; }

// ---------------------------------------------------------------- coxeter

void run_coxeter(Context& ctx, SuiteResult& s) {
  if (!ctx.well_generated) {
    s.skip_reason = "requires an irreducible well-generated group";
    return;
  }
  const auto& T = ctx.T;
  const int h = ctx.h();

  long long prod = 1, sum = 0;
  for (int d : ctx.D.degrees) prod *= d;
  for (int m : ctx.D.exponents) sum += m;
  add(s, "coxeter.degree_identities", prod == T.order() && sum == static_cast<long long>(T.reflections().size()),
      Json{{"degree_product", prod}, {"order", T.order()}, {"exponent_sum", sum}, {"reflections", T.reflections().size()}});

  const int expected = phi(h) / std::max(1, phi_W(h, ctx.D.exponents));
  const int found = ctx.cox ? static_cast<int>(ctx.cox->classes.size()) : 0;
  add(s, "coxeter.class_count", found == expected && found > 0,
      Json{{"classes", found}, {"phi_h", phi(h)}, {"phi_W_h", phi_W(h, ctx.D.exponents)}});

  const auto elems = ctx.scope();
  std::vector<char> is_cox(elems.size()), order_h(elems.size()), eig_h(elems.size()), zeta_reg(elems.size());
  const CycloNum zeta = ambient_root(T, h, 1);
  parallel_for(elems.size(), [&](std::size_t i) {
    const int w = elems[i];
    is_cox[i] = is_coxeter_element(T, ctx.D, w);
    order_h[i] = T.order_of(w) == h;
    eig_h[i] = eigenvalue_of_order_h(T, ctx.D, w);
    zeta_reg[i] = T.order_of(w) % h == 0 && is_zeta_regular(T, w, zeta);
  });
  Json bad = Json::array();
  long long cox_count = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    cox_count += is_cox[i];
    if (is_cox[i] != (order_h[i] && eig_h[i]) || is_cox[i] != eig_h[i]) bad.push_back(elems[i]);
  }
  add(s, "coxeter.i_iff_iii", bad.empty(),
      Json{{"scope", scope_name(ctx)}, {"checked", elems.size()}, {"coxeter", cox_count}}, bad);

  // Coxeter elements versus powers w^p of zeta_h-regular w, p prime to h.
  std::set<int> lhs, rhs;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (is_cox[i]) lhs.insert(ctx.small() ? elems[i] : T.class_of(elems[i]));
    if (!zeta_reg[i]) continue;
    for (int p : units_mod(h)) {
      const int x = T.power(elems[i], p);
      rhs.insert(ctx.small() ? x : T.class_of(x));
    }
  }
  Json diff = Json::array();
  std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
  add(s, "coxeter.i_iff_ii", lhs == rhs,
      Json{{"scope", scope_name(ctx)}, {"coxeter", lhs.size()}, {"powers_of_regular", rhs.size()}}, diff);

  if (!ctx.cox) return;
  for (std::size_t i = 0; i < ctx.cox->classes.size(); ++i) {
    const auto& rc = ctx.cox->classes[i];
    const RegEig& e = rc.eigenvalues.front();
    const auto rep = springer_checks(T, ctx.D, rc.representative, ambient_root(T, e.order, e.exponent));
    Json detail{{"representative", rc.representative},
                {"zeta", Json{{"order", e.order}, {"exponent", e.exponent}}},
                {"eigenvalue_exponents", rep.eigen_exponents},
                {"expected_exponents", rep.expected_exponents},
                {"ambient_conductor", T.conductor()}};
    add(s, "springer.class_" + std::to_string(i), rep.ok(), detail, Json{{"nonconjugate", rep.nonconjugate}});
  }
}

// ---------------------------------------------------------------- galois

void run_galois(Context& ctx, SuiteResult& s) {
  if (!ctx.irreducible) {
    s.skip_reason = "requires an irreducible group";
    return;
  }
  const auto& T = ctx.T;
  const int h = ctx.h();
  add(s, "galois.dn_regular", ctx.cox.has_value(), Json{{"d_n", h}, {"regular_numbers", ctx.regular}},
      Json{{"d_n", h}});
  if (!ctx.cox) return;

  const int classes = static_cast<int>(ctx.cox->classes.size());
  const int pw = phi_W(h, ctx.D.exponents);
  add(s, "galois.class_count", pw > 0 && classes * pw == phi(h) && classes == ctx.F.field_degree,
      Json{{"classes", classes}, {"phi_h", phi(h)}, {"phi_W_h", pw}, {"field_degree", ctx.F.field_degree}});

  const auto tr = simply_transitive_report(T, ctx.D, ctx.F);
  add(s, "galois.simply_transitive", tr.simply_transitive,
      Json{{"classes", tr.classes}, {"orbit_size", tr.orbit_size}, {"field_degree", tr.field_degree}});

  Json bad = Json::array();
  for (const auto& rc : ctx.cox->classes) {
    if (!charpoly_field_check(T, ctx.F, rc.representative)) bad.push_back(rc.representative);
  }
  add(s, "galois.charpoly_field", bad.empty(), Json{{"trace_stabilizer_size", ctx.F.trace_stabilizer.size()}}, bad);

  add(s, "galois.gw_field", gw_field_check(ctx.F, ctx.D),
      Json{{"gw", gw_stabilizer(ctx.D.exponents, h)}, {"ambient_conductor", ctx.F.ambient_conductor}});
  add(s, "galois.gw_description", gw_matches_exponents(ctx.D.exponents, h),
      Json{{"gw", gw_stabilizer(ctx.D.exponents, h)}, {"phi_W_h", pw}});

  std::vector<int> ds = ctx.well_generated ? ctx.regular : std::vector<int>{h};
  for (int d : ds) {
    Json detail{{"d", d}, {"phi_d", phi(d)}, {"phi_W_d", phi_W(d, ctx.D.exponents)}};
    try {
      const auto cs = regular_classes(T, ctx.D, d);
      const int count = static_cast<int>(cs.classes.size());
      const int pwd = phi_W(d, ctx.D.exponents);
      detail["classes"] = count;
      const bool ok = pwd > 0 && count * pwd == phi(d) && ctx.F.field_degree % count == 0;
      add(s, "galois.cox_d." + std::to_string(d), ok, detail, Json{{"classes", count}});
    } catch (const IntegrityError& e) {
      add(s, "galois.cox_d." + std::to_string(d), false, detail, Json(e.what()));
    }
  }
}

// ---------------------------------------------------------------- nc

Json poset_json(const NCLattice& P, int cls) {
  Json members = Json::array();
  for (int i = 0; i < P.size(); ++i) members.push_back(Json::array({P.members[i], P.rank[i]}));
  Json covers = Json::array();
  for (const auto& [a, b] : P.covers) covers.push_back(Json::array({a, b}));
  return Json{{"class", cls},         {"coxeter_element", P.coxeter_element}, {"size", P.size()},
              {"rank_vector", P.rank_vector()}, {"members", members},                 {"covers", covers}};
}

void run_nc(Context& ctx, SuiteResult& s) {
  if (!ctx.well_generated || !ctx.cox) {
    s.skip_reason = "requires an irreducible well-generated group";
    return;
  }
  const auto& T = ctx.T;
  const auto& L = ctx.lengths();
  const long long cat = catalan_number(ctx.D);
  std::vector<NCLattice> posets;
  for (std::size_t i = 0; i < ctx.cox->classes.size(); ++i) {
    const int c = ctx.cox->classes[i].representative;
    NCLattice P = nc_interval(T, L, c);
    const bool lattice = is_lattice(P);
    const bool dual = is_self_dual(T, P);
    const auto rv = P.rank_vector();
    const bool pal = is_palindromic(rv);
    const bool top = L(c) == ctx.n();
    Json detail{{"coxeter_element", c}, {"size", P.size()},      {"catalan", cat},     {"lattice", lattice},
                {"self_dual", dual},    {"rank_vector", rv},     {"palindromic", pal}, {"length_of_c", L(c)}};
    add(s, "nc.class_" + std::to_string(i), P.size() == cat && lattice && dual && pal && top, detail,
        Json{{"coxeter_element", c}});
    posets.push_back(std::move(P));
  }

  const auto coxs = ctx.coxeter_scope();
  std::vector<int> sizes(coxs.size());
  parallel_for(coxs.size(), [&](std::size_t i) {
    int count = 0;
    for (int w = 0; w < T.order(); ++w) count += leq_abs(T, L, w, coxs[i]) ? 1 : 0;
    sizes[i] = count;
  });
  Json bad = Json::array();
  for (std::size_t i = 0; i < coxs.size(); ++i) {
    if (sizes[i] != cat) bad.push_back(Json::array({coxs[i], sizes[i]}));
  }
  add(s, "nc.size_all_coxeter", bad.empty(), Json{{"scope", scope_name(ctx)}, {"checked", coxs.size()}, {"catalan", cat}},
      bad);

  Json iso = Json::array();
  bool all_iso = true;
  for (std::size_t i = 1; i < posets.size(); ++i) {
    const bool ok = poset_isomorphic(posets[0], posets[i]);
    all_iso = all_iso && ok;
    iso.push_back(Json{{"classes", Json::array({0, i})}, {"isomorphic", ok}});
  }
  add(s, "nc.isomorphic_across_classes", all_iso, Json{{"pairs", iso}}, iso);

  Json below = Json::array(), unequal = Json::array();
  for (int w = 0; w < T.order(); ++w) {
    if (L(w) < ctx.n() - T.fixed_dim(w)) below.push_back(w);
  }
  if (ctx.real) {
    for (const auto& P : posets) {
      for (int w : P.members) {
        if (L(w) != ctx.n() - T.fixed_dim(w)) unequal.push_back(w);
      }
    }
  }
  add(s, "nc.codimension_bound", below.empty() && unequal.empty(), Json{{"real", ctx.real}},
      Json{{"below_codimension", below}, {"interval_mismatch", unequal}});
}

// ---------------------------------------------------------------- hurwitz

void run_hurwitz(Context& ctx, SuiteResult& s) {
  if (!ctx.well_generated || !ctx.cox) {
    s.skip_reason = "requires an irreducible well-generated group";
    return;
  }
  const auto& T = ctx.T;
  const auto& L = ctx.lengths();
  const auto coxs = ctx.coxeter_scope();
  std::vector<char> ok(coxs.size());
  parallel_for(coxs.size(), [&](std::size_t i) { ok[i] = hurwitz_transitive(T, L, coxs[i]); });
  Json bad = Json::array();
  for (std::size_t i = 0; i < coxs.size(); ++i) {
    if (!ok[i]) bad.push_back(coxs[i]);
  }
  Json counts = Json::array();
  for (const auto& rc : ctx.cox->classes) {
    counts.push_back(Json::array({rc.representative, reduced_factorizations(T, L, rc.representative).size()}));
  }
  add(s, "hurwitz.transitive", bad.empty(),
      Json{{"scope", scope_name(ctx)}, {"checked", coxs.size()}, {"factorizations", counts}}, bad);

  constexpr std::size_t kBraidSample = 64;
  const auto fs = reduced_factorizations(T, L, ctx.cox->classes.front().representative);
  Json broken = Json::array();
  std::size_t tested = 0;
  for (std::size_t idx = 0; idx < fs.size() && tested < kBraidSample; ++idx, ++tested) {
    const auto& f = fs[idx];
    const int k = static_cast<int>(f.factors.size());
    for (int i = 1; i < k; ++i) {
      if (!(hurwitz_move(T, hurwitz_move(T, f, i, 1), i, -1) == f)) broken.push_back(Json{{"factors", f.factors}, {"i", i}});
      if (i + 1 < k) {
        const auto a = hurwitz_move(T, hurwitz_move(T, hurwitz_move(T, f, i, 1), i + 1, 1), i, 1);
        const auto b = hurwitz_move(T, hurwitz_move(T, hurwitz_move(T, f, i + 1, 1), i, 1), i + 1, 1);
        if (!(a == b)) broken.push_back(Json{{"factors", f.factors}, {"i", i}, {"relation", "braid"}});
      }
      for (int j = i + 2; j < k; ++j) {
        const auto a = hurwitz_move(T, hurwitz_move(T, f, i, 1), j, 1);
        const auto b = hurwitz_move(T, hurwitz_move(T, f, j, 1), i, 1);
        if (!(a == b)) broken.push_back(Json{{"factors", f.factors}, {"i", i}, {"j", j}, {"relation", "commute"}});
      }
    }
  }
  add(s, "hurwitz.braid_relations", broken.empty(), Json{{"factorizations_tested", tested}}, broken);
}

// ---------------------------------------------------------------- gensets

bool is_d4(const Context& ctx) { return ctx.def.name == "D4" || ctx.def.name == "G(2,2,4)"; }

void characterization(Context& ctx, SuiteResult& s, GensetMode mode, const std::string& name) {
  const auto& T = ctx.T;
  const auto& L = ctx.lengths();
  const auto& kit = T.generators();
  GensetMemo memo;
  std::vector<int> elems;
  if (T.order() <= kGensetScanOrder) {
    for (int w = 0; w < T.order(); ++w) {
      if (L(w) == ctx.n()) elems.push_back(w);
    }
  } else {
    for (const auto& rc : ctx.cox->classes) elems.push_back(rc.representative);
  }
  std::set<int> cox;
  for (const auto& rc : ctx.cox->classes) {
    for (int w : T.classes()[rc.class_index].members) cox.insert(w);
  }
  Json mismatch = Json::array();
  Json witnesses = Json::array();
  for (int w : elems) {
    const auto wit = find_coxeter_genset_for(T, L, w, kit, mode, 100000, &memo);
    if (wit.has_value() != (cox.count(w) > 0)) mismatch.push_back(w);
    if (wit && witnesses.size() < 8) witnesses.push_back(Json{{"element", w}, {"ordering", wit->ordering}});
  }
  add(s, name, mismatch.empty(),
      Json{{"scope", T.order() <= kGensetScanOrder ? "elements of length n" : "coxeter classes"},
           {"checked", elems.size()},
           {"sets_examined", memo.size()},
           {"sample_witnesses", witnesses}},
      mismatch);

  if (mode != GensetMode::Presentation) return;
  const CoxeterGraph g0 = coxeter_graph_of(T, kit);
  Json bad = Json::array();
  int found = 0;
  for (const auto& [S, ok] : memo) {
    if (!ok) continue;
    ++found;
    if (!graphs_isomorphic(coxeter_graph_of(T, S), g0)) bad.push_back(S);
  }
  add(s, "gensets.graph_isomorphism", bad.empty(), Json{{"generalized_coxeter_sets", found}}, bad);
}

void run_gensets(Context& ctx, SuiteResult& s) {
  if (!ctx.well_generated || !ctx.cox) {
    s.skip_reason = "requires an irreducible well-generated group";
    return;
  }
  if (!ctx.kit_reflections) {
    s.skip_reason = "generator kit is not a set of n reflections";
    return;
  }
  const auto& T = ctx.T;
  const auto& kit = T.generators();
  const int h = ctx.h();

  const auto rep = check_regular_generating_set(T, ctx.D, kit);
  add(s, "gensets.regular_generating_set", rep.regular(ctx.n()),
      Json{{"genset", kit},
           {"generates", rep.generates_W},
           {"power_conjugacy", rep.power_conjugacy_ok},
           {"all_orderings_coxeter", rep.all_orderings_coxeter}},
      Json{{"orderings", rep.witness_failures}, {"reflections", rep.unmatched_reflections}});

  const auto profile = orderings_regularity_profile(T, ctx.D, kit);
  Json nonreg = Json::array();
  for (const auto& o : profile) {
    if (o.exponents.empty()) nonreg.push_back(o.ordering);
  }
  add(s, "gensets.zeta_dichotomy", orderings_zeta_dichotomy(profile, h),
      Json{{"orderings", profile.size()},
           {"zeta_exponent", profile.front().exponents.empty() ? -1 : profile.front().exponents.front()},
           {"h", h}},
      nonreg);

  if (is_d4(ctx)) {
    // Kit order t, s1, s2, s3 with s2 central: s = s1, t = t, u = s2, v = s3.
    const int t = kit[0], sg = kit[1], u = kit[2], v = kit[3];
    const int uvu = T.mult(T.mult(u, v), u);
    const int x = T.mult(T.mult(T.mult(sg, uvu), t), u);
    const auto r = check_regular_generating_set(T, ctx.D, {sg, t, uvu, u});
    const bool ok = T.order_of(x) == 4 && !eigenvalue_of_order_h(T, ctx.D, x) && !r.all_orderings_coxeter;
    add(s, "gensets.d4_counterexample", ok,
        Json{{"product", x}, {"order", T.order_of(x)}, {"h", h}, {"failing_orderings", r.witness_failures.size()}},
        Json{{"product", x}});
  }

  if (ctx.n() == 2 && T.order_of(kit[0]) == 2 && T.order_of(kit[1]) == 2) {
    const int sg = kit[0], t = kit[1];
    const int sts = T.mult(T.mult(sg, t), sg);
    const int c = T.mult(sg, t);
    const bool pres_std = verify_generalized_coxeter_presentation(T, {sg, t});
    const bool pres_alt = verify_generalized_coxeter_presentation(T, {sts, t});
    const bool iso = graphs_isomorphic(coxeter_graph_of(T, {sg, t}), coxeter_graph_of(T, {sts, t}));
    const bool prod = T.mult(sts, t) == T.mult(c, c);
    add(s, "gensets.dihedral_alternative", pres_std && pres_alt && iso && prod,
        Json{{"standard_presents", pres_std}, {"alternative_presents", pres_alt}, {"graphs_isomorphic", iso},
             {"sts_t_equals_c2", prod}},
        Json{{"alternative", Json::array({sts, t})}});
  }

  bool presents = false;
  std::string why = "kit does not present the group by its alternating relations";
  try {
    presents = verify_generalized_coxeter_presentation(T, kit);
  } catch (const ResourceError&) {
    why = "coset enumeration exceeded 50|W| cosets";
  }
  if (presents) {
    const auto g = coxeter_graph_of(T, kit);
    Json edges = Json::array();
    for (const auto& [e, m] : g.edges()) edges.push_back(Json::array({e.first, e.second, m}));
    add(s, "gensets.kit_presentation", true, Json{{"labels", g.labels}, {"edges", edges}});
  } else {
    s.checks.push_back(Check{"gensets.kit_presentation", CheckStatus::Skip, Json{{"reason", why}}});
  }

  if (T.order() > kFullScanOrder) return;
  if (presents) characterization(ctx, s, GensetMode::Presentation, "gensets.i_iff_vi");
  characterization(ctx, s, GensetMode::Isomorphic, "gensets.i_iff_v");
}

void run_suite(const std::string& name, Context& ctx, SuiteResult& s) {
  try {
    if (name == "coxeter") run_coxeter(ctx, s);
    else if (name == "galois") run_galois(ctx, s);
    else if (name == "nc") run_nc(ctx, s);
    else if (name == "hurwitz") run_hurwitz(ctx, s);
    else if (name == "gensets") run_gensets(ctx, s);
  } catch (const IntegrityError& e) {
    add(s, name + ".integrity", false, Json::object(), Json(e.what()));
  }
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coxeter", "galois", "nc", "hurwitz", "gensets"};
  return names;
}

Report cmd_info(const std::string& spec, int cap) {
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx = make_context(spec, cap);
  Report r;
  r.command = "info";
  r.group = group_json(spec, ctx);
  r.invariants = invariants_json(ctx);
  r.seconds = since(t0);
  return r;
}

Report cmd_verify(const std::string& spec, const std::string& suite, int cap) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx = make_context(spec, cap);
  Report r;
  r.command = "verify";
  r.group = group_json(spec, ctx);
  r.invariants = invariants_json(ctx);
  for (const auto& name : names) {
    if (suite != "all" && suite != name) continue;
    SuiteResult s;
    s.name = name;
    run_suite(name, ctx, s);
    r.suites.push_back(std::move(s));
  }
  r.seconds = since(t0);
  return r;
}

Report cmd_nc(const std::string& spec, std::optional<int> coxeter_class, int cap) {
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx = make_context(spec, cap);
  if (!ctx.well_generated || !ctx.cox) throw UsageError("nc requires an irreducible well-generated group");
  const int nclasses = static_cast<int>(ctx.cox->classes.size());
  if (coxeter_class && (*coxeter_class < 0 || *coxeter_class >= nclasses)) {
    throw UsageError("Coxeter class index out of range (0.." + std::to_string(nclasses - 1) + ")");
  }
  Report r;
  r.command = "nc";
  r.group = group_json(spec, ctx);
  r.invariants = invariants_json(ctx);
  const auto& L = ctx.lengths();
  std::vector<NCLattice> posets;
  std::vector<int> which;
  for (int i = 0; i < nclasses; ++i) {
    if (coxeter_class && *coxeter_class != i) continue;
    posets.push_back(nc_interval(ctx.T, L, ctx.cox->classes[i].representative));
    which.push_back(i);
    r.posets.push_back(poset_json(posets.back(), i));
  }
  for (std::size_t a = 0; a < posets.size(); ++a) {
    for (std::size_t b = a + 1; b < posets.size(); ++b) {
      r.isomorphisms.push_back(
          Json{{"classes", Json::array({which[a], which[b]})}, {"isomorphic", poset_isomorphic(posets[a], posets[b])}});
    }
  }
  r.seconds = since(t0);
  return r;
}

namespace {

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_text(const Report& r, bool timing) {
  std::ostringstream os;
  os << "group: " << scalar(r.group["spec"]) << " (" << scalar(r.group["source"]) << ")\n";
  for (const auto& [k, v] : r.invariants.items()) os << k << ": " << scalar(v) << "\n";
  for (const auto& s : r.suites) {
    os << "suite " << s.name << ": " << to_string(s.status());
    if (!s.skip_reason.empty()) os << " (" << s.skip_reason << ")";
    os << "\n";
    for (const auto& c : s.checks) os << "  " << to_string(c.status) << " " << c.name << " " << c.detail.dump() << "\n";
  }
  for (const auto& p : r.posets) {
    os << "poset class " << p["class"].dump() << ": coxeter_element " << p["coxeter_element"].dump() << ", size "
       << p["size"].dump() << ", rank_vector " << p["rank_vector"].dump() << "\n";
    os << "# element rank\n";
    for (const auto& m : p["members"]) os << m[0].dump() << " " << m[1].dump() << "\n";
    os << "# lower upper\n";
    for (const auto& c : p["covers"]) os << c[0].dump() << " " << c[1].dump() << "\n";
  }
  for (const auto& i : r.isomorphisms) {
    os << "isomorphic " << i["classes"][0].dump() << " " << i["classes"][1].dump() << ": " << i["isomorphic"].dump()
       << "\n";
  }
  if (r.command == "verify") os << "status: " << (r.passed() ? "pass" : "fail") << "\n";
  if (timing) os << "seconds: " << r.seconds << "\n";
  return os.str();
}

std::string render_csv(const Report& r, bool timing) {
  std::ostringstream os;
  os << "kind,name,status,value\n";
  os << "group,spec,," << csv_field(scalar(r.group["spec"])) << "\n";
  for (const auto& [k, v] : r.invariants.items()) os << "invariant," << k << ",," << csv_field(scalar(v)) << "\n";
  for (const auto& s : r.suites) {
    os << "suite," << s.name << "," << to_string(s.status()) << "," << csv_field(s.skip_reason) << "\n";
    for (const auto& c : s.checks) {
      os << "check," << c.name << "," << to_string(c.status) << "," << csv_field(c.detail.dump()) << "\n";
    }
  }
  for (const auto& p : r.posets) {
    const std::string cls = "class_" + p["class"].dump();
    for (const auto& m : p["members"]) os << "rank," << cls << ",," << m[0].dump() << " " << m[1].dump() << "\n";
    for (const auto& c : p["covers"]) os << "cover," << cls << ",," << c[0].dump() << " " << c[1].dump() << "\n";
  }
  for (const auto& i : r.isomorphisms) {
    os << "isomorphic,class_" << i["classes"][0].dump() << "_class_" << i["classes"][1].dump() << ","
       << (i["isomorphic"].get<bool>() ? "pass" : "fail") << ",\n";
  }
  if (r.command == "verify") os << "status,overall," << (r.passed() ? "pass" : "fail") << ",\n";
  if (timing) os << "timing,seconds,," << r.seconds << "\n";
  return os.str();
}

}  // namespace coxkit
