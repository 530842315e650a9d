#include "fusion/cli.hpp"

#include "fusion/axioms.hpp"
#include "fusion/component.hpp"
#include "fusion/report_json.hpp"
#include "fusion/ring_spec.hpp"
#include "fusion/torsion.hpp"
#include "uq/numeric.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

namespace fusion::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string ring;
  std::string budget;
  bool json = false;
  std::uint64_t seed = AxiomCheckOptions{}.seed;
  std::size_t triples = 200;
  std::vector<std::string> labels;
  std::string generators;
  std::string kind = "generated";
  std::size_t bound = 20;
  std::size_t hom_table = 14;
  std::size_t max_stage = 4;
  std::uint64_t exponent_bound = 64;
  std::size_t dmax = 4;
  double q = -0.5;
  int nmax = 6;
  int crosscheck_nmax = 3;
  std::string branch = "plus";
};

Budget parse_budget(const std::string& text) {
  Budget b;
  if (text.empty()) return b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("budget entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoul(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("budget value in '" + item + "' is not a non-negative integer");
    }
    if (key == "max_irreducibles")
      b.max_irreducibles = value;
    else if (key == "max_rounds")
      b.max_rounds = value;
    else if (key == "max_label_size")
      b.max_label_size = value;
    else
      throw UsageError("unknown budget key '" + key + "'");
  }
  b.validate();
  return b;
}

std::vector<IrrLabel> resolve(const FusionProvider& ring, const std::vector<std::string>& ids) {
  std::vector<IrrLabel> out;
  for (const auto& id : ids) out.push_back(ring.label(id));
  return out;
}

std::string join(const std::vector<IrrLabel>& labels) {
  std::string out;
  for (const auto& u : labels) out += (out.empty() ? "" : ", ") + u.id;
  return "{" + out + "}";
}

std::string join(const LabelSet& labels) { return join(std::vector<IrrLabel>(labels.begin(), labels.end())); }

void print_subcategory(std::ostream& out, const Subcategory& s) {
  out << to_string(s.kind) << ": " << join(s.labels) << "\n";
  out << "  status: " << to_string(s.status) << " after " << s.rounds << " rounds\n";
  if (!s.frontier.empty()) out << "  frontier: " << join(s.frontier) << "\n";
}

struct Outcome {
  Json report;
  int code = kExitClean;
};

Outcome cmd_axioms(const FusionProvider& ring, const Budget& budget, const Options& opt, std::ostream& out) {
  AxiomCheckOptions ao;
  ao.seed = opt.seed;
  ao.associativity_triples = opt.triples;
  const AxiomReport r = check_axioms(ring, budget, ao);
  Json j = to_json_value(r);
  j["seed"] = opt.seed;
  if (!opt.json) {
    out << "labels checked: " << r.labels_checked << ", triples: " << r.triples_checked
        << ", associativity triples: " << r.associativity_checked << "\n";
    out << "violations: " << r.total_violations << "\n";
    for (const auto& v : r.violations) {
      std::string labels;
      for (const auto& l : v.labels) labels += (labels.empty() ? "" : ", ") + l;
      out << "  " << v.identity << " [" << labels << "]: " << v.detail << "\n";
    }
  }
  return {std::move(j), r.ok() ? kExitClean : kExitViolation};
}

Outcome cmd_decompose(const FusionProvider& ring, const Options& opt, std::ostream& out) {
  if (opt.labels.size() < 2) throw UsageError("decompose needs at least two labels");
  const auto labels = resolve(ring, opt.labels);
  VirtualElement acc = VirtualElement::of(labels[0]);
  for (std::size_t i = 1; i < labels.size(); ++i) acc = ring.multiply(acc, VirtualElement::of(labels[i]));
  const Decomposition d = acc.to_decomposition();
  if (!opt.json) out << join(labels) << " -> " << to_string(d) << "\n";
  return {{{"factors", to_json_value(labels)},
           {"decomposition", to_json_value(d)},
           {"dimension", to_json_value(d.total_dimension())}},
          kExitClean};
}

Outcome cmd_torsion(const FusionProvider& ring, const Budget& budget, const Options& opt, std::ostream& out) {
  if (!opt.labels.empty()) {
    Json verdicts = Json::array();
    for (const auto& u : resolve(ring, opt.labels)) {
      const TorsionVerdict v = is_torsion(ring, u, budget);
      if (!opt.json) {
        out << u.id << ": " << to_string(v.kind);
        if (!v.witness.empty()) out << " (" << v.witness << ")";
        if (v.closure) out << " closure " << join(v.closure->labels);
        out << "\n";
      }
      Json entry = to_json_value(v);
      entry["label"] = u.id;
      verdicts.push_back(std::move(entry));
    }
    return {{{"verdicts", std::move(verdicts)}}, kExitClean};
  }
  auto probe = std::async(std::launch::async, [&] { return connectedness_probe(ring, budget.max_irreducibles, budget); });
  const TorsionReport r = torsion_subcategory(ring, budget);
  const ConnectednessReport c = probe.get();
  if (!opt.json) {
    print_subcategory(out, r.torsion_set);
    out << "torsion: " << r.torsion.size() << ", non-torsion: " << r.non_torsion.size()
        << ", unknown: " << r.unknown.size() << "\n";
    out << "connectedness: " << to_string(c.verdict) << (c.certified() ? " (certified)" : " (one-sided)") << "\n";
    if (c.torsion_label) out << "  torsion label: " << c.torsion_label->id << "\n";
  }
  return {{{"torsion", to_json_value(r)}, {"connectedness", to_json_value(c)}}, kExitClean};
}

Outcome cmd_closure(const FusionProvider& ring, const Budget& budget, const Options& opt, std::ostream& out) {
  const auto gens = resolve(ring, split_labels(opt.generators));
  if (gens.empty()) throw UsageError("closure needs --generators");
  Subcategory s;
  if (opt.kind == "generated")
    s = generated_subring(ring, gens, budget);
  else if (opt.kind == "central")
    s = central_closure(ring, gens, budget);
  else if (opt.kind == "normal")
    s = normal_forcing_closure(ring, gens, budget);
  else
    throw UsageError("unknown closure kind '" + opt.kind + "'");
  Json j{{"closure", to_json_value(s)}};
  if (s.saturated()) {
    const auto violations = normality_consistency(ring, s.labels, opt.bound);
    Json list = Json::array();
    for (const auto& v : violations) list.push_back(to_json_value(v));
    j["normality_violations"] = std::move(list);
    j["normality_bound"] = opt.bound;
    if (!opt.json) {
      print_subcategory(out, s);
      out << "normality violations at bound " << opt.bound << ": " << violations.size() << "\n";
      for (const auto& v : violations) out << "  u = " << v.u.id << ", v = " << v.v.id << "\n";
    }
  } else if (!opt.json) {
    print_subcategory(out, s);
  }
  return {std::move(j), kExitClean};
}

Outcome cmd_nsequence(const FusionProvider& ring, const Budget& budget, const Options& opt, std::ostream& out) {
  const NSequenceReport r = n_sequence_cocommutative(ring, opt.max_stage, budget, opt.exponent_bound);
  if (!opt.json) {
    for (const auto& s : r.stages) {
      out << "N" << s.index << ": " << join(s.approximant.labels);
      if (s.whole_group) out << " (whole group)";
      if (s.trivial) out << " (trivial)";
      out << "\n  " << s.certificate << "\n";
    }
    out << "torsion degree: " << (r.torsion_degree ? std::to_string(*r.torsion_degree) : "not stabilized") << "\n";
    out << "identity component: " << to_string(r.identity_component) << "\n";
    out << "quotient: " << r.quotient << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
  }
  return {{{"nsequence", to_json_value(r)}, {"max_stage", opt.max_stage}, {"exponent_bound", opt.exponent_bound}},
          kExitClean};
}

Outcome cmd_component(const FusionProvider& ring, const Budget& budget, const Options& opt, std::ostream& out) {
  const ComponentReport r = identity_component_report(ring, {opt.bound, opt.hom_table}, budget);
  if (!opt.json) {
    out << "verdict: " << to_string(r.verdict) << "\n";
    out << "torsion set: " << join(r.torsion.torsion_set.labels) << " (" << to_string(r.torsion.torsion_set.status)
        << ")\n";
    out << "tensorial: " << (r.tensorial ? "yes" : "no") << ", commutative: " << (r.commutative ? "yes" : "no")
        << ", finite: " << (r.finite ? (*r.finite ? "yes" : "no") : "unknown") << "\n";
    if (r.component_group_order) out << "component group order: " << *r.component_group_order << "\n";
    if (r.witness) {
      out << "witness: " << r.witness->id << " (u = " << (r.witness_u ? r.witness_u->id : "?")
          << ", v = " << (r.witness_v ? r.witness_v->id : "?") << ")\n";
      out << "restriction to factor " << r.witness_factor << ": " << to_string(r.witness_restriction) << "\n";
      out << "invariant multiplicity " << r.invariant_multiplicity << ", trivial restriction would give "
          << r.trivial_multiplicity << "\n";
    }
    if (r.torsion_degree_bound) out << "torsion degree <= " << *r.torsion_degree_bound << "\n";
    if (!r.torsion_degree_note.empty()) out << "note: " << r.torsion_degree_note << "\n";
    for (const auto& reason : r.reasons) out << "- " << reason << "\n";
  }
  return {{{"component", to_json_value(r)}}, kExitClean};
}

Outcome cmd_chain(const FusionProvider& ring, const Budget& budget, const Options& opt, std::ostream& out) {
  GeneratorSequence X;
  if (dynamic_cast<const AuRing*>(&ring) && opt.generators.empty())
    X = au_balanced_sequence(ring);
  else if (!opt.generators.empty())
    X = prefix_sequence(resolve(ring, split_labels(opt.generators)));
  else
    throw UsageError("chain needs --generators for rings other than au");
  const ChainReport r = ascending_chain_probe(ring, X, opt.dmax, budget);
  bool balanced = true;
  for (const auto& s : r.steps)
    if (s.balanced && !*s.balanced) balanced = false;
  if (!opt.json) {
    for (const auto& s : r.steps) {
      out << "d = " << s.d << ": |closure| = " << s.closure_size << " at cap " << s.length_cap << " ("
          << to_string(s.status) << "), witness " << (s.witness ? s.witness->id : "none")
          << (s.witness_absent ? " absent" : " present");
      if (s.extended_cap != s.length_cap)
        out << ", at cap " << s.extended_cap << (s.witness_absent_extended ? " absent" : " present");
      if (s.balanced) out << (*s.balanced ? ", balanced" : ", UNBALANCED");
      out << "\n";
    }
    out << "strictly increasing up to d = " << r.strictly_increasing_up_to << "\n";
    if (r.stabilized_at) out << "stabilized at d = " << *r.stabilized_at << "\n";
  }
  return {{{"chain", to_json_value(r)}, {"dmax", opt.dmax}}, balanced ? kExitClean : kExitViolation};
}

Outcome cmd_dimideal(const FusionProvider& ring, const Budget& budget, const Options& opt, std::ostream& out) {
  if (!ring.cardinality()) throw NotFinite("dimideal needs a finite ring");
  std::vector<Subcategory> subrings;
  if (!opt.generators.empty()) {
    subrings.push_back(generated_subring(ring, resolve(ring, split_labels(opt.generators)), budget));
  } else {
    const auto all = ring.all_labels();
    if (all.size() > 12) throw UsageError("exhaustive dimideal is limited to rings with at most 12 irreducibles");
    std::map<std::vector<std::string>, Subcategory> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<IrrLabel> gens;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) gens.push_back(all[i]);
      Subcategory s = generated_subring(ring, gens, budget);
      std::vector<std::string> key;
      for (const auto& u : s.labels) key.push_back(u.id);
      seen.emplace(std::move(key), std::move(s));
    }
    for (auto& [k, s] : seen) subrings.push_back(std::move(s));
  }
  Json results = Json::array();
  std::size_t mismatches = 0;
  for (const auto& A : subrings) {
    const LabelSet recovered = dimension_ideal_recover(ring, A);
    const bool match = recovered == A.labels;
    mismatches += match ? 0 : 1;
    results.push_back({{"subring", to_json_value(A.labels)}, {"recovered", to_json_value(recovered)}, {"match", match}});
    if (!opt.json)
      out << join(A.labels) << " -> " << join(recovered) << (match ? "" : "  MISMATCH") << "\n";
  }
  if (!opt.json) out << subrings.size() << " subrings, " << mismatches << " mismatches\n";
  return {{{"results", std::move(results)}, {"mismatches", mismatches}}, mismatches ? kExitViolation : kExitClean};
}

Json complex_json(uq::Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Outcome cmd_uqverify(const Options& opt, std::ostream& out) {
  using namespace uq;
  const double q = opt.q;
  if (!(q < 0) || q == -1) throw BadParameter("uq verify needs q < 0, q != -1");
  if (opt.nmax < 1) throw UsageError("--nmax must be at least 1");
  Branch branch;
  if (opt.branch == "plus")
    branch = Branch::PlusI;
  else if (opt.branch == "minus")
    branch = Branch::MinusI;
  else
    throw UsageError("--branch must be plus or minus");
  bool ok = true;
  const Complex twists[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

  Json reps = Json::array();
  for (int n = 0; n <= opt.nmax; ++n) {
    for (int sign : {1, -1}) {
      const RepMatrices u = build_u(sign, n, q);
      const RelationResiduals rel = relation_residuals(u);
      const StarResiduals star = check_star(u);
      const bool pass = rel.pass() && star.pass();
      ok = ok && pass;
      reps.push_back({{"sign", sign}, {"n", n}, {"relations", rel.max()}, {"star_ef", star.ef}, {"star_k", star.k},
                      {"pass", pass}});
      if (!opt.json)
        out << "u" << (sign > 0 ? "+" : "-") << n << ": relations " << rel.max() << ", star " << std::max(star.ef, star.k)
            << (pass ? "" : "  FAIL") << "\n";
    }
  }

  Json unitarity = Json::array();
  for (int n = 1; n <= opt.nmax; ++n) {
    for (const Complex w : twists) {
      const RelationResiduals rel = relation_residuals(build_pi(w, n, q, branch));
      const UnitarizabilityResult su2 = unitarizability_witness(w, n, q, Form::SU2, branch);
      const UnitarizabilityResult su11 = unitarizability_witness(w, n, q, Form::SU11, branch);
      ok = ok && rel.pass() && !su2.unitarizable;
      if (su11.unitarizable) ok = ok && su11.verification.pass();
      unitarity.push_back({{"w", complex_json(w)},
                           {"n", n},
                           {"relations", rel.max()},
                           {"su2_obstructed", !su2.unitarizable},
                           {"su2_evidence", su2.evidence},
                           {"su11_unitarizable", su11.unitarizable},
                           {"su11_evidence", su11.evidence}});
      if (!opt.json) {
        out << "pi(w=" << w << ", n=" << n << "): su2 " << (su2.unitarizable ? "UNITARIZABLE" : "obstructed")
            << ", su11 " << (su11.unitarizable ? "unitarizable" : "obstructed");
        if (!su2.evidence.empty()) out << " [" << su2.evidence.front() << "]";
        out << "\n";
      }
    }
  }

  const ConjugateEquationsReport conj = verify_conjugate_equations(q);
  const bool conj_pass = conj.pass() && std::abs(conj.c_u - Complex(-std::abs(q), 0)) <= kTolerance &&
                         std::abs(conj.c_ubar - Complex(-std::abs(q), 0)) <= kTolerance;
  ok = ok && conj_pass;
  if (!opt.json)
    out << "conjugate equations: c = " << conj.c_u << ", " << conj.c_ubar << (conj_pass ? "" : "  FAIL") << "\n";

  Json perms = Json::array();
  for (int n = 0; n <= opt.nmax; ++n) {
    const PermutationReport p = verify_permutation_intertwiner(n, q);
    ok = ok && p.pass();
    perms.push_back({{"n", n}, {"residual", p.residual}, {"pass", p.pass()}});
    if (!opt.json) out << "permutation n=" << n << ": residual " << p.residual << (p.pass() ? "" : "  FAIL") << "\n";
  }

  const int cross_n = std::min(opt.nmax, opt.crosscheck_nmax);
  const FusionCrosscheck cross = fusion_crosscheck(cross_n, q);
  ok = ok && cross.pass();
  Json mismatches = Json::array();
  for (const auto& e : cross.mismatches)
    mismatches.push_back({{"a", {e.sign_a, e.n}}, {"b", {e.sign_b, e.m}}, {"c", {e.sign_c, e.k}},
                          {"numeric", e.numeric}, {"symbolic", e.symbolic}});
  if (!opt.json)
    out << "fusion crosscheck n,m <= " << cross_n << ": " << cross.entries.size() << " entries, "
        << cross.mismatches.size() << " mismatches\n"
        << (ok ? "all checks passed" : "FAILED") << "\n";

  Json j{{"schema_version", kSchemaVersion},
         {"command", "uqverify"},
         {"q", q},
         {"nmax", opt.nmax},
         {"branch", opt.branch},
         {"tolerance", kTolerance},
         {"representations", std::move(reps)},
         {"unitarizability", std::move(unitarity)},
         {"conjugate_equations",
          {{"c_u", complex_json(conj.c_u)},
           {"c_ubar", complex_json(conj.c_ubar)},
           {"scalar_residual", conj.scalar_residual},
           {"intertwiner_residual", conj.intertwiner_residual},
           {"r_norm_squared", conj.r_norm_squared},
           {"expected_c", -std::abs(q)},
           {"pass", conj_pass}}},
         {"permutation", std::move(perms)},
         {"fusion_crosscheck",
          {{"n_max", cross_n}, {"entries", cross.entries.size()}, {"mismatches", std::move(mismatches)}}},
         {"pass", ok}};
  return {std::move(j), ok ? kExitClean : kExitViolation};
}

void add_common(CLI::App* sub, Options& opt, bool needs_ring) {
  auto* ring = sub->add_option("--ring", opt.ring, "ring construction string");
  if (needs_ring) ring->required();
  sub->add_option("--budget", opt.budget, "budget overrides, e.g. max_irreducibles=30,max_label_size=6");
  sub->add_flag("--json", opt.json, "emit the JSON report");
  sub->add_option("--seed", opt.seed, "seed for randomized checks");
}

}  // namespace

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  if (args.size() >= 2 && args[0] == "uq" && args[1] == "verify") {
    args.erase(args.begin());
    args[0] = "uqverify";
  }

  CLI::App app{"Fusion-ring analysis of compact quantum groups", "fusionctl"};
  app.require_subcommand(1);
  Options opt;

  auto* axioms = app.add_subcommand("axioms", "check the fusion-ring identities");
  add_common(axioms, opt, true);
  axioms->add_option("--triples", opt.triples, "random associativity triples");

  auto* decompose = app.add_subcommand("decompose", "decompose a tensor product of labels");
  add_common(decompose, opt, true);
  decompose->add_option("labels", opt.labels, "labels to multiply, left to right")->required();

  auto* torsion = app.add_subcommand("torsion", "torsion verdicts and the torsion set");
  add_common(torsion, opt, true);
  torsion->add_option("labels", opt.labels, "decide only these labels");

  auto* closure = app.add_subcommand("closure", "closures of a label set");
  add_common(closure, opt, true);
  closure->add_option("--generators", opt.generators, "comma-separated labels")->required();
  closure->add_option("--kind", opt.kind, "generated, central or normal");
  closure->add_option("--bound", opt.bound, "probe labels for the normality check");

  auto* nseq = app.add_subcommand("nsequence", "cocommutative N-sequence and torsion degree");
  add_common(nseq, opt, true);
  nseq->add_option("--max-stage", opt.max_stage, "last stage computed");
  nseq->add_option("--exponent-bound", opt.exponent_bound, "largest power tried for root membership");

  auto* component = app.add_subcommand("component", "identity component report");
  add_common(component, opt, true);
  component->add_option("--bound", opt.bound, "probe labels for the normality check");
  component->add_option("--hom-table", opt.hom_table, "labels per axis of the hom-dimension table");

  auto* chain = app.add_subcommand("chain", "ascending-chain probe");
  add_common(chain, opt, true);
  chain->add_option("--dmax", opt.dmax, "last chain index");
  chain->add_option("--generators", opt.generators, "generator sequence for rings other than au");

  auto* dimideal = app.add_subcommand("dimideal", "recover subrings from their dimension ideals");
  add_common(dimideal, opt, true);
  dimideal->add_option("--generators", opt.generators, "one subring; all subrings when omitted");

  auto* uqverify = app.add_subcommand("uqverify", "numeric checks of the U_q(su(1,1)) representations");
  add_common(uqverify, opt, false);
  uqverify->add_option("--q", opt.q, "deformation parameter, q < 0");
  uqverify->add_option("--nmax", opt.nmax, "largest highest weight");
  uqverify->add_option("--crosscheck-nmax", opt.crosscheck_nmax, "largest weight in the fusion cross-check");
  uqverify->add_option("--branch", opt.branch, "square root of q: plus or minus");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    Outcome outcome;
    if (command == "uqverify") {
      outcome = cmd_uqverify(opt, out);
    } else {
      const Budget budget = parse_budget(opt.budget);
      ProviderPtr ring;
      try {
        ring = parse_provider(opt.ring);
      } catch (const RingRejected& e) {
        Json j = report_envelope(command, opt.ring, budget);
        j["rejected"] = to_json_value(e.report());
        if (opt.json) {
          out << j.dump(2) << "\n";
        } else {
          err << "error: " << e.what() << "\n";
          for (const auto& v : e.report().violations) {
            std::string labels;
            for (const auto& l : v.labels) labels += (labels.empty() ? "" : ", ") + l;
            out << "  " << v.identity << " [" << labels << "]: " << v.detail << "\n";
          }
        }
        return kExitViolation;
      }
      if (command == "axioms")
        outcome = cmd_axioms(*ring, budget, opt, out);
      else if (command == "decompose")
        outcome = cmd_decompose(*ring, opt, out);
      else if (command == "torsion")
        outcome = cmd_torsion(*ring, budget, opt, out);
      else if (command == "closure")
        outcome = cmd_closure(*ring, budget, opt, out);
      else if (command == "nsequence")
        outcome = cmd_nsequence(*ring, budget, opt, out);
      else if (command == "component")
        outcome = cmd_component(*ring, budget, opt, out);
      else if (command == "chain")
        outcome = cmd_chain(*ring, budget, opt, out);
      else
        outcome = cmd_dimideal(*ring, budget, opt, out);
      Json envelope = report_envelope(command, ring->name(), budget);
      envelope.update(outcome.report);
      outcome.report = std::move(envelope);
    }
    if (opt.json) out << outcome.report.dump(2) << "\n";
    return outcome.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const uq::IllConditioned& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace fusion::cli
