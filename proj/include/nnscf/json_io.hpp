#pragma once

#include "nnscf/hopf.hpp"

#include "json.hpp"

#include <string>

namespace nnscf {

// All serialization uses ordered JSON so that repeated runs are byte-identical.
using Json = nlohmann::ordered_json;

Json field_to_json(const Field& field);
FieldPtr field_from_json(const Json& j);

Json cyc_to_json(const CycNumber& c);
CycNumber cyc_from_json(const Json& j);

Json poset_to_json(const Poset& poset);
Poset poset_from_json(const Json& j);

// Labels are strings for prime fields and coefficient lists otherwise.
Json diagram_to_json(const ArcDiagram& d);
ArcDiagram diagram_from_json(const Json& j);
// Arcs only, against a known poset and field.
Json arcs_to_json(const ArcDiagram& d);
ArcDiagram arcs_from_json(const Json& j, const Poset& poset, const FieldPtr& field);

Json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j, const Poset& poset, const FieldPtr& field);

Json scf_vector_to_json(const ScfVector& v);
ScfVector scf_vector_from_json(const Json& j);

Json tensor_to_json(const TensorElement& t);

Json table_to_json(const CharacterTable& table);

Json check_results_to_json(const std::vector<CheckResult>& checks);
Json sct_report_to_json(const SctReport& report);
Json hopf_report_to_json(const HopfReport& report);
Json free_report_to_json(const FreeReport& report);

std::string dump_json(const Json& j);  // 2-space indent plus trailing newline

Json load_json_file(const std::string& path);  // parse_error on failure

}  // namespace nnscf
