#include "fusion/report_json.hpp"

#include <limits>

namespace fusion {

Json to_json_value(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json_value(const IrrLabel& u) { return u.id; }

Json to_json_value(const Budget& b) {
  return {{"max_irreducibles", b.max_irreducibles},
          {"max_rounds", b.max_rounds},
          {"max_label_size", b.max_label_size}};
}

Json to_json_value(const Decomposition& d) {
  Json out = Json::array();
  for (const auto& [w, n] : d)
    out.push_back({{"label", w.id}, {"dim", to_json_value(w.dim)}, {"multiplicity", to_json_value(n)}});
  return out;
}

Json to_json_value(const VirtualElement& v) {
  Json out = Json::array();
  for (const auto& [w, c] : v)
    out.push_back({{"label", w.id}, {"dim", to_json_value(w.dim)}, {"coefficient", to_json_value(c)}});
  return out;
}

Json to_json_value(const LabelSet& s) {
  Json out = Json::array();
  for (const auto& u : s) out.push_back(u.id);
  return out;
}

Json to_json_value(const std::vector<IrrLabel>& labels) {
  Json out = Json::array();
  for (const auto& u : labels) out.push_back(u.id);
  return out;
}

Json to_json_value(const Subcategory& s) {
  return {{"kind", to_string(s.kind)},
          {"labels", to_json_value(s.labels)},
          {"status", to_string(s.status)},
          {"frontier", to_json_value(s.frontier)},
          {"budget", to_json_value(s.budget)},
          {"rounds", s.rounds}};
}

Json to_json_value(const AxiomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"identity", v.identity}, {"labels", v.labels}, {"detail", v.detail}});
  return {{"ok", r.ok()},
          {"violations", std::move(violations)},
          {"total_violations", r.total_violations},
          {"labels_checked", r.labels_checked},
          {"triples_checked", r.triples_checked},
          {"associativity_checked", r.associativity_checked}};
}

Json to_json_value(const TorsionVerdict& v) {
  Json out{{"kind", to_string(v.kind)}, {"budget", to_json_value(v.budget)}};
  if (v.closure) out["closure"] = to_json_value(*v.closure);
  if (!v.witness.empty()) out["witness"] = v.witness;
  return out;
}

Json to_json_value(const TorsionReport& r) {
  Json verdicts = Json::array();
  for (const auto& [u, v] : r.verdicts) {
    Json entry = to_json_value(v);
    entry["label"] = u.id;
    verdicts.push_back(std::move(entry));
  }
  return {{"torsion_set", to_json_value(r.torsion_set)},
          {"verdicts", std::move(verdicts)},
          {"torsion", to_json_value(r.torsion)},
          {"non_torsion", to_json_value(r.non_torsion)},
          {"unknown", to_json_value(r.unknown)}};
}

Json to_json_value(const NormalityViolation& v) {
  return {{"u", v.u.id}, {"v", v.v.id}, {"constituents", to_json_value(v.constituents)}};
}

Json to_json_value(const NSequenceReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages)
    stages.push_back({{"index", s.index},
                      {"approximant", to_json_value(s.approximant)},
                      {"whole_group", s.whole_group},
                      {"trivial", s.trivial},
                      {"certificate", s.certificate}});
  Json out{{"stages", std::move(stages)},
           {"identity_component", to_string(r.identity_component)},
           {"quotient", r.quotient},
           {"notes", r.notes}};
  out["torsion_degree"] = r.torsion_degree ? Json(*r.torsion_degree) : Json(nullptr);
  return out;
}

Json to_json_value(const ChainReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step{{"d", s.d},
              {"generators", to_json_value(s.generators)},
              {"length_cap", s.length_cap},
              {"closure_size", s.closure_size},
              {"status", to_string(s.status)},
              {"new_irreducibles", s.new_irreducibles},
              {"witness_absent", s.witness_absent},
              {"extended_cap", s.extended_cap},
              {"witness_absent_extended", s.witness_absent_extended},
              {"witness_in_next_generators", s.witness_in_next_generators}};
    step["witness"] = s.witness ? Json(s.witness->id) : Json(nullptr);
    step["balanced"] = s.balanced ? Json(*s.balanced) : Json(nullptr);
    steps.push_back(std::move(step));
  }
  Json out{{"steps", std::move(steps)}, {"strictly_increasing_up_to", r.strictly_increasing_up_to}};
  out["stabilized_at"] = r.stabilized_at ? Json(*r.stabilized_at) : Json(nullptr);
  return out;
}

Json to_json_value(const ConnectednessReport& r) {
  Json out{{"verdict", to_string(r.verdict)},
           {"certified", r.certified()},
           {"non_torsion", to_json_value(r.non_torsion)},
           {"unknowns", to_json_value(r.unknowns)}};
  out["torsion_label"] = r.torsion_label ? Json(r.torsion_label->id) : Json(nullptr);
  return out;
}

Json to_json_value(const ComponentReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.normality_violations) violations.push_back(to_json_value(v));
  Json out{{"verdict", to_string(r.verdict)},
           {"reasons", r.reasons},
           {"torsion", to_json_value(r.torsion)},
           {"generated", to_json_value(r.generated)},
           {"tensorial", r.tensorial},
           {"commutative", r.commutative},
           {"normality_violations", std::move(violations)},
           {"bounds", {{"normality", r.bounds.normality}, {"hom_table", r.bounds.hom_table}}},
           {"torsion_degree_note", r.torsion_degree_note}};
  out["finite"] = r.finite ? Json(*r.finite) : Json(nullptr);
  out["torsion_degree_bound"] = r.torsion_degree_bound ? Json(*r.torsion_degree_bound) : Json(nullptr);
  if (r.verdict == ComponentReport::Verdict::NormalWithFiniteComponentGroup) {
    out["component_group_order"] = r.component_group_order ? to_json_value(*r.component_group_order) : Json(nullptr);
    Json table = Json::array();
    for (const auto& e : r.hom_dims) table.push_back({{"u", e.u.id}, {"v", e.v.id}, {"value", to_json_value(e.value)}});
    out["hom_dims"] = std::move(table);
  }
  if (r.verdict == ComponentReport::Verdict::NonNormalWitness) {
    out["witness"] = {{"label", r.witness ? Json(r.witness->id) : Json(nullptr)},
                      {"u", r.witness_u ? Json(r.witness_u->id) : Json(nullptr)},
                      {"v", r.witness_v ? Json(r.witness_v->id) : Json(nullptr)},
                      {"factor", r.witness_factor},
                      {"restriction", to_json_value(r.witness_restriction)},
                      {"invariant_multiplicity", to_json_value(r.invariant_multiplicity)},
                      {"trivial_multiplicity", to_json_value(r.trivial_multiplicity)}};
  }
  return out;
}

Json report_envelope(const std::string& command, const std::string& ring, const Budget& budget) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"ring", ring}, {"budget", to_json_value(budget)}};
}

}  // namespace fusion
