#include "unital/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "unital/cech/cocycles.hpp"
#include "unital/complexes/units.hpp"
#include "unital/crossed/crossed_module.hpp"
#include "unital/errors.hpp"
#include "unital/guards.hpp"
#include "unital/picard/models.hpp"

namespace unital::cli {

using nlohmann::json;
using Elem = FiniteGroup::Elem;

namespace {

[[noreturn]] void kind_mismatch(const std::string& command, const std::string& kind) {
  throw InputError(command + " does not apply to kind " + kind);
}

json homology_table(const Complex& x) {
  json t = json::array();
  for (int d = x.min_degree(); d <= 0; ++d) t.push_back({{"degree", d}, {"group", homology(x, d).to_string()}});
  return t;
}

json describe(const Complex& x) {
  json terms = json::array(), diffs = json::array();
  for (int d = x.min_degree(); d <= 0; ++d) {
    terms.push_back({{"degree", d}, {"group", x.term(d).to_string()}});
    if (d < 0) diffs.push_back({{"from", d}, {"matrix", x.diff(d).matrix().to_rows()}});
  }
  return {{"terms", terms}, {"differentials", diffs}};
}

void merge(VerificationReport& into, const VerificationReport& from, const std::string& prefix = "") {
  for (const auto& c : from.checks) into.add(prefix + c.name, c.passed, c.witness);
  for (const auto& [k, v] : from.counts) into.counts[prefix.empty() ? k : prefix + k] = v;
}

std::string elems_string(const std::vector<Elem>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string triple_string(const UnitTriple& t) {
  return "g=" + elems_string(t.g) + " g'=" + elems_string(t.g_prime) + " h=" + elems_string(t.h);
}

// ---- homology ----

void run_homology(const ComplexSpecFile& spec, Report& r) {
  const Complex x = spec.kind == "complex2" ? Complex(to_complex2(spec)) : Complex(to_complex3(spec));
  r.data["complex"] = describe(x);
  r.data["homology"] = homology_table(x);
  r.verification.add("differentials compose to zero", true);
}

// ---- units ----

template <class Unit>
json unit_list(const std::vector<Unit>& units) {
  json out = json::array();
  for (const auto& u : units) out.push_back(to_string(u));
  return out;
}

/// Units with e = 0 against ker λ, by explicit bijection φ <-> (0, φ).
template <class Unit>
void kernel_check(const GroupHom& lambda, const std::vector<Unit>& units, const Coords& zero, VerificationReport& rep) {
  std::vector<Coords> over_zero, ker;
  for (const auto& u : units)
    if (u.e == zero) {
      if constexpr (requires { u.a_phi; }) over_zero.push_back(u.a_phi);
      else over_zero.push_back(u.phi);
    }
  for (const auto& a : lambda.source().elements())
    if (lambda.target().is_zero(lambda.apply(a))) ker.push_back(a);
  std::sort(over_zero.begin(), over_zero.end());
  rep.counts["units_over_zero"] = over_zero.size();
  rep.counts["kernel_order"] = ker.size();
  rep.add("units with e = 0 biject with ker λ", over_zero == ker,
          std::to_string(over_zero.size()) + " units, |ker λ| = " + std::to_string(ker.size()));
}

void run_units(const ComplexSpecFile& spec, const Limits& limits, bool list, Report& r) {
  if (spec.kind == "complex2") {
    const PicardModel1 m(to_complex2(spec));
    const auto units = enumerate_units_1(m, limits);
    merge(r.verification, verify_contractible_1(m, limits));
    kernel_check(m.base().lambda(), units, m.B().zero(), r.verification);
    if (list) r.data["units"] = unit_list(units);
    r.data["model"] = "Saavedra units (e, a_φ) of A → B";
  } else if (spec.kind == "complex3") {
    const PicardModel2 m(to_complex3(spec));
    const auto units = enumerate_units_2(m, limits);
    merge(r.verification, verify_contractible_2(m, limits));
    kernel_check(m.base().lambda(), units, m.C().zero(), r.verification);
    if (list) r.data["units"] = unit_list(units);
    r.data["model"] = "Joyal-Kock units (e, φ) of A → B → C";
  } else {
    const CrossedModule x = to_crossed_module(spec);
    require_crossed_module(x);
    const auto na = enumerate_units_nonabelian(x, limits);
    merge(r.verification, na.report);
    if (list) {
      json us = json::array();
      for (const auto& u : na.units) us.push_back("(" + std::to_string(u.e) + ", " + std::to_string(u.phi) + ")");
      r.data["units"] = us;
    }
  }
}

// ---- unit complexes ----

void run_unit_complex(const ComplexSpecFile& spec, bool check_acyclic, Report& r) {
  Complex u;
  if (spec.kind == "complex2") {
    const auto uc = unit_complex_1(to_complex2(spec));
    u = uc.complex;
    r.data["witness"] = uc.witness.matrix().to_rows();
    const auto f = forgetful_morphism_1(to_complex2(spec));
    r.verification.add("forgetful map to X is a strict morphism", f.maps().size() == 2);
  } else if (spec.kind == "complex3") {
    const auto uc = unit_complex_2(to_complex3(spec));
    u = uc.complex;
    r.data["witness"] = uc.witness.matrix().to_rows();
    const auto f = forgetful_morphism_2(to_complex3(spec));
    r.verification.add("forgetful map to X is a strict morphism", f.maps().size() == 3);
  } else {
    kind_mismatch("unit-complex", spec.kind);
  }
  r.data["unit_complex"] = describe(u);
  if (check_acyclic) {
    r.data["homology"] = homology_table(u);
    for (int d = u.min_degree(); d <= 0; ++d) {
      const FgAbGroup h = homology(u, d);
      r.verification.add("H^" + std::to_string(d) + " = 0", h.is_trivial(), h.to_string());
    }
  }
}

// ---- quasi-isomorphisms ----

void qiso_check(const std::string& label, const StrictMorphism& f, Report& r) {
  const auto q = is_quasi_isomorphism(f);
  json induced = json::array();
  std::string witness;
  for (std::size_t i = 0; i < q.induced.size(); ++i) {
    const int d = f.source().min_degree() + static_cast<int>(i);
    induced.push_back({{"degree", d},
                       {"source", q.induced[i].source().to_string()},
                       {"target", q.induced[i].target().to_string()},
                       {"matrix", q.induced[i].matrix().to_rows()}});
    witness += (i ? "; " : "") + std::string("H^") + std::to_string(d) + ": " + q.induced[i].source().to_string() +
               " -> " + q.induced[i].target().to_string();
  }
  if (!q.failing_degrees.empty()) {
    witness += "; fails in degrees";
    for (int d : q.failing_degrees) witness += " " + std::to_string(d);
  }
  r.data["induced"][label] = induced;
  r.verification.add(label + " is a quasi-isomorphism", q.is_qiso, witness);
}

void run_qiso(const ComplexSpecFile& spec, const std::string& against, Report& r) {
  static const std::set<std::string> two = {"idA", "kerLambda", "cone"}, three = {"alt1", "alt2"};
  if (spec.kind == "complex2") {
    if (!against.empty() && !two.contains(against))
      throw InputError("--against " + against + " needs a 3-term complex (use idA, kerLambda or cone)");
    const Complex2 x = to_complex2(spec);
    if (against.empty() || against == "idA") {
      qiso_check("unit_complex_1 -> (A -id-> A)", unit1_to_id_A(x), r);
      qiso_check("(A -id-> A) -> unit_complex_1", id_A_to_unit1(x), r);
    }
    if (against.empty() || against == "kerLambda") qiso_check("(ker λ -id-> ker λ) -> unit_complex_1", ker_lambda_to_unit1(x), r);
    if (against.empty() || against == "cone") {
      const auto c = cone_comparison(x);
      r.verification.add("truncate_shift(cone(id_X)) -> unit_complex_1 is an isomorphism", is_isomorphism(c));
    }
  } else if (spec.kind == "complex3") {
    if (!against.empty() && !three.contains(against))
      throw InputError("--against " + against + " needs a 2-term complex (use alt1 or alt2)");
    const Complex3 x = to_complex3(spec);
    if (against.empty() || against == "alt1") qiso_check("unit_complex_2 -> alternate_1", unit2_to_alternate_1(x), r);
    if (against.empty() || against == "alt2") qiso_check("alternate_2 -> unit_complex_2", alternate_2_to_unit2(x), r);
  } else {
    kind_mismatch("qiso", spec.kind);
  }
}

// ---- Čech ----

Nerve nerve_for(const RunOptions& o, const ComplexSpecFile& spec, bool point_default) {
  if (o.nerve) return cech_nerve(*o.nerve, o.limits);
  if (spec.nerve) return cech_nerve(*spec.nerve, o.limits);
  if (point_default) return cech_nerve(point_cover(), o.limits);
  throw InputError(o.command + " needs a nerve: pass --nerve or add a \"nerve\" field");
}

json nerve_summary(const Nerve& n) {
  json sizes = json::array();
  for (int l = 0; l <= Nerve::top_level; ++l) sizes.push_back(n.size(l));
  return {{"level_sizes", sizes}, {"nondegenerate", n.nondegenerate_count()}};
}

void run_cech(const RunOptions& o, const ComplexSpecFile& spec, Report& r) {
  const Nerve n = nerve_for(o, spec, false);
  r.data["nerve"] = nerve_summary(n);
  if (spec.kind == "complex2") {
    const Complex2 x = to_complex2(spec);
    const auto t = torsor_classes(n, x, o.limits);
    r.verification.counts["torsor_classes"] = t.count;
    r.verification.counts["torsor_cocycles"] = t.cocycles;
    r.data["torsor_group"] = t.group.to_string();
    json reps = json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(t.representatives.size(), 32); ++i) {
      json a = json::array(), b = json::array();
      for (const auto& v : t.representatives[i].a.values) a.push_back(to_string(v));
      for (const auto& v : t.representatives[i].b.values) b.push_back(to_string(v));
      reps.push_back({{"a", a}, {"b", b}});
    }
    r.data["torsor_representatives"] = reps;
    const FgAbGroup h0 = classify_h0(n, x, o.limits);
    r.data["h0_total"] = h0.to_string();
    r.verification.add("|H^0(Tot)| equals the torsor class count", h0.is_finite() && h0.order() == t.count,
                       h0.to_string() + " vs " + std::to_string(t.count));
    const auto u = unit_cocycles(n, x, o.limits);
    r.verification.counts["unit_classes"] = u.count;
    r.verification.counts["unit_cocycles"] = u.cocycles;
    r.verification.add("unit cocycles form exactly one class", u.count == 1, std::to_string(u.count));
    const FgAbGroup hu = classify_h0(n, unit_complex_1(x).complex, o.limits);
    r.verification.add("H^0(Tot(unit_complex_1)) is trivial", hu.is_trivial(), hu.to_string());
  } else if (spec.kind == "complex3") {
    const Complex3 x = to_complex3(spec);
    const FgAbGroup h0 = classify_h0(n, x, o.limits);
    r.data["h0_total"] = h0.to_string();
    const FgAbGroup hu = classify_h0(n, unit_complex_2(x).complex, o.limits);
    r.verification.add("H^0(Tot(unit_complex_2)) is trivial", hu.is_trivial(), hu.to_string());
    const auto c = cocycle_of_unit(n, x, canonical_unit(PicardModel2(x)));
    bool ok = true;
    try {
      validate_total_cocycle(n, c);
    } catch (const CocycleError&) {
      ok = false;
    }
    r.verification.add("canonical unit gives a total cocycle", ok);
  } else {
    kind_mismatch("cech-classify", spec.kind);
  }
}

// ---- crossed modules ----

void run_crossed_verify(const ComplexSpecFile& spec, Report& r) {
  const CrossedModule x = to_crossed_module(spec);
  merge(r.verification, verify_crossed_module(x));
  r.data["G_order"] = x.G.size();
  r.data["H_order"] = x.H.size();
  if (r.passed()) {
    r.data["pi0_order"] = pi0_order(x);
    r.data["pi1"] = pi1(x);
  }
}

void run_crossed_units(const RunOptions& o, const ComplexSpecFile& spec, Report& r) {
  const CrossedModule x = to_crossed_module(spec);
  const auto axioms = verify_crossed_module(x);
  if (!axioms.passed()) {
    merge(r.verification, axioms);
    return;
  }
  const auto u = unit_crossed_module(x);
  merge(r.verification, verify_crossed_module(u.module), "unit crossed module: ");
  const std::size_t p0 = pi0_order(u.module);
  const auto p1 = pi1(u.module);
  r.verification.add("unit crossed module: π_0 trivial", p0 == 1, std::to_string(p0));
  r.verification.add("unit crossed module: π_1 trivial", p1.size() == 1, std::to_string(p1.size()));
  r.data["unit_crossed_module_order"] = u.module.G.size();

  const auto na = enumerate_units_nonabelian(x, o.limits);
  merge(r.verification, na.report, "point units: ");

  const Nerve n = nerve_for(o, spec, true);
  r.data["nerve"] = nerve_summary(n);
  const auto ts = enumerate_unit_triples(n, x, o.limits);
  r.verification.counts["unit_triples"] = ts.size();
  StateCounter states(o.limits);
  const UnitTriple e = identity_triple(n);
  std::string bad_identity, bad_inverse, bad_closure, bad_assoc;
  for (const auto& a : ts) {
    if (!(h0_group_law(n, x, a, e) == a && h0_group_law(n, x, e, a) == a) && bad_identity.empty())
      bad_identity = triple_string(a);
    std::size_t inverses = 0;
    for (const auto& b : ts) {
      states.add();
      const auto ab = h0_group_law(n, x, a, b);
      if (!is_unit_triple(n, x, ab) && bad_closure.empty()) bad_closure = triple_string(a) + " * " + triple_string(b);
      inverses += ab == e;
    }
    if (inverses != 1 && bad_inverse.empty()) bad_inverse = triple_string(a) + " has " + std::to_string(inverses);
  }
  states.add(static_cast<std::uint64_t>(ts.size()) * ts.size() * ts.size());
  for (const auto& a : ts)
    for (const auto& b : ts) {
      const auto ab = h0_group_law(n, x, a, b);
      for (const auto& c : ts)
        if (bad_assoc.empty() && !(h0_group_law(n, x, ab, c) == h0_group_law(n, x, a, h0_group_law(n, x, b, c))))
          bad_assoc = triple_string(a) + ", " + triple_string(b) + ", " + triple_string(c);
    }
  r.verification.add("h0 law: identity (1,1,1)", bad_identity.empty(), bad_identity);
  r.verification.add("h0 law: unit triples closed", bad_closure.empty(), bad_closure);
  r.verification.add("h0 law: unique inverses", bad_inverse.empty(), bad_inverse);
  r.verification.add("h0 law: associative", bad_assoc.empty(), bad_assoc);
  r.verification.counts["h0_states"] = states.count();
}

json command_echo(const RunOptions& o) {
  json j{{"name", o.command}, {"max_states", o.limits.max_states}};
  if (!o.against.empty()) j["against"] = o.against;
  if (o.check_acyclic) j["check_acyclic"] = true;
  return j;
}

}  // namespace

Report run(const RunOptions& o, const ComplexSpecFile& spec) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = command_echo(o);
  json input{{"spec", to_json(spec)}};
  if (o.nerve) input["nerve"] = to_json(*o.nerve);
  r.input_digest = sha256_hex(input.dump());

  const bool crossed = spec.kind == "crossed_module";
  const std::string& c = o.command;
  if (c == "homology") {
    if (crossed) kind_mismatch(c, spec.kind);
    run_homology(spec, r);
  } else if (c == "units" || c == "contractible") {
    run_units(spec, o.limits, c == "units", r);
  } else if (c == "unit-complex") {
    run_unit_complex(spec, o.check_acyclic, r);
  } else if (c == "qiso") {
    run_qiso(spec, o.against, r);
  } else if (c == "cech-classify") {
    run_cech(o, spec, r);
  } else if (c == "crossed-verify" || c == "crossed-units") {
    if (!crossed) kind_mismatch(c, spec.kind);
    if (c == "crossed-verify") run_crossed_verify(spec, r);
    else run_crossed_units(o, spec, r);
  } else {
    throw InputError("unknown command " + c);
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace unital::cli
