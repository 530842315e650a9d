#include "fusion/providers.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fusion {

TableFusionRing::TableFusionRing(std::string name, std::string unit, std::vector<Irreducible> irreducibles,
                                 std::vector<std::vector<Decomposition>> table)
    : name_(std::move(name)), irreducibles_(std::move(irreducibles)), table_(std::move(table)) {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    if (!index_.emplace(irreducibles_[i].id, i).second)
      throw std::invalid_argument("duplicate irreducible '" + irreducibles_[i].id + "'");
  unit_ = index(unit);
  if (table_.size() != irreducibles_.size()) throw std::invalid_argument("fusion table has wrong shape");
  for (const auto& row : table_)
    if (row.size() != irreducibles_.size()) throw std::invalid_argument("fusion table has wrong shape");
  for (const auto& irr : irreducibles_) index(irr.conj);
}

std::size_t TableFusionRing::index(std::string_view id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  throw UnknownLabel(id);
}

std::optional<IrrLabel> TableFusionRing::find(std::string_view id) const {
  if (auto it = index_.find(id); it != index_.end()) return make(it->second);
  return std::nullopt;
}

IrrLabel TableFusionRing::conj(const IrrLabel& u) const { return make(index(irreducibles_[index(u.id)].conj)); }

Decomposition TableFusionRing::decompose(const IrrLabel& u, const IrrLabel& v) const {
  return table_[index(u.id)][index(v.id)];
}

std::size_t TableFusionRing::label_size(const IrrLabel& u) const {
  index(u.id);
  return 0;
}

std::vector<IrrLabel> TableFusionRing::labels_up_to_size(std::size_t) const {
  std::vector<IrrLabel> out;
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) out.push_back(make(i));
  return out;
}

namespace {

using nlohmann::json;

// Positive integer given as a JSON number or a decimal string.
std::optional<Integer> positive_integer(const json& j) {
  Integer x;
  if (j.is_number_unsigned())
    x = j.get<std::uint64_t>();
  else if (j.is_number_integer())
    x = j.get<std::int64_t>();
  else if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    x = Integer(s);
  } else {
    return std::nullopt;
  }
  if (x < 1) return std::nullopt;
  return x;
}

[[noreturn]] void reject(const std::string& name, AxiomReport report) {
  std::string what = name + ": ring rejected (" + std::to_string(report.total_violations) + " violation";
  if (report.total_violations != 1) what += "s";
  what += ")";
  if (!report.violations.empty())
    what += "; first: " + report.violations.front().identity + ": " + report.violations.front().detail;
  throw RingRejected(what, std::move(report));
}

}  // namespace

std::shared_ptr<const TableFusionRing> load_fusion_ring_json(std::string_view text, std::string name) {
  AxiomReport structure;
  auto fail = [&](const std::string& detail, std::vector<std::string> labels = {}) {
    structure.record({"structure", std::move(labels), detail});
  };

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
    reject(name, std::move(structure));
  }
  if (!doc.is_object() || !doc.contains("unit") || !doc.contains("irreducibles") || !doc.contains("fusion")) {
    fail("expected an object with keys unit, irreducibles, fusion");
    reject(name, std::move(structure));
  }
  for (const auto& [key, _] : doc.items())
    if (key != "unit" && key != "irreducibles" && key != "fusion") fail("unknown key '" + key + "'");
  if (!doc["unit"].is_string()) fail("unit must be a string");
  if (!doc["irreducibles"].is_array() || doc["irreducibles"].empty()) fail("irreducibles must be a nonempty array");
  if (!doc["fusion"].is_array()) fail("fusion must be an array");
  if (!structure.ok()) reject(name, std::move(structure));

  std::vector<TableFusionRing::Irreducible> irreducibles;
  std::map<std::string, std::size_t> index;
  for (const auto& entry : doc["irreducibles"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string() || !entry.contains("dim") ||
        !entry.contains("conj") || !entry["conj"].is_string()) {
      fail("irreducible entries need string id, positive dim, string conj");
      continue;
    }
    const std::string id = entry["id"];
    const auto dim = positive_integer(entry["dim"]);
    if (id.empty()) fail("empty irreducible id");
    if (!dim) fail("dimension must be a positive integer", {id});
    if (!index.emplace(id, irreducibles.size()).second) {
      fail("duplicate irreducible", {id});
      continue;
    }
    irreducibles.push_back({id, dim.value_or(1), entry["conj"]});
  }
  const std::string unit = doc["unit"];
  if (!index.count(unit)) fail("unit is not an irreducible", {unit});
  for (const auto& irr : irreducibles)
    if (!index.count(irr.conj)) fail("conj refers to an unknown irreducible", {irr.id, irr.conj});
  if (!structure.ok()) reject(name, std::move(structure));

  const std::size_t n = irreducibles.size();
  std::vector<std::vector<Decomposition>> table(n, std::vector<Decomposition>(n));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const auto& entry : doc["fusion"]) {
    if (!entry.is_object() || !entry.contains("left") || !entry["left"].is_string() || !entry.contains("right") ||
        !entry["right"].is_string() || !entry.contains("result") || !entry["result"].is_object()) {
      fail("fusion entries need string left, string right, object result");
      continue;
    }
    const std::string left = entry["left"], right = entry["right"];
    if (!index.count(left) || !index.count(right)) {
      fail("fusion entry refers to an unknown irreducible", {left, right});
      continue;
    }
    const std::size_t i = index[left], j = index[right];
    if (seen[i][j]) {
      fail("ordered pair listed twice", {left, right});
      continue;
    }
    seen[i][j] = true;
    for (const auto& [w, mult] : entry["result"].items()) {
      if (!index.count(w)) {
        fail("result refers to an unknown irreducible", {left, right, w});
        continue;
      }
      const auto m = positive_integer(mult);
      if (!m) {
        fail("multiplicities must be positive integers", {left, right, w});
        continue;
      }
      const auto& irr = irreducibles[index[w]];
      table[i][j].add(IrrLabel{irr.id, irr.dim}, *m);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[i][j]) fail("ordered pair missing from fusion", {irreducibles[i].id, irreducibles[j].id});
  if (!structure.ok()) reject(name, std::move(structure));

  auto ring = std::make_shared<TableFusionRing>(name, unit, std::move(irreducibles), std::move(table));
  Budget budget;
  budget.max_irreducibles = n;
  AxiomCheckOptions options;
  options.exhaustive_triple_limit = std::max<std::size_t>(options.exhaustive_triple_limit, 64 * 64 * 64);
  AxiomReport report = check_axioms(*ring, budget, options);
  if (!report.ok()) reject(name, std::move(report));
  return ring;
}

std::shared_ptr<const TableFusionRing> load_fusion_ring_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read fusion ring file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return load_fusion_ring_json(text.str(), "json:" + path.string());
}

}  // namespace fusion
