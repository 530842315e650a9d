#pragma once

#include "fusion/axioms.hpp"
#include "fusion/component.hpp"
#include "fusion/torsion.hpp"

#include "json.hpp"

namespace fusion {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Exact integers: a JSON number when the value fits in int64, a decimal string otherwise.
Json to_json_value(const Integer& x);
Json to_json_value(const IrrLabel& u);
Json to_json_value(const Budget& b);
Json to_json_value(const Decomposition& d);
Json to_json_value(const VirtualElement& v);
Json to_json_value(const LabelSet& s);
Json to_json_value(const std::vector<IrrLabel>& labels);
Json to_json_value(const Subcategory& s);
Json to_json_value(const AxiomReport& r);
Json to_json_value(const TorsionVerdict& v);
Json to_json_value(const TorsionReport& r);
Json to_json_value(const NormalityViolation& v);
Json to_json_value(const NSequenceReport& r);
Json to_json_value(const ChainReport& r);
Json to_json_value(const ConnectednessReport& r);
Json to_json_value(const ComponentReport& r);

/// {schema_version, command, ring, budget} header shared by every report.
Json report_envelope(const std::string& command, const std::string& ring, const Budget& budget);

}  // namespace fusion
