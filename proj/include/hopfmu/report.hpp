// Machine-readable JSON reports.
#pragma once

#include <string>

#include <json.hpp>

#include "hopfmu/bundle_io.hpp"
#include "hopfmu/fibers.hpp"
#include "hopfmu/hopf.hpp"
#include "hopfmu/manifold.hpp"

namespace hopfmu {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

Json manifold_report_json(const ManifoldReport& r);
Json mu_table_json(const SimplicialMap& f);
Json fiber_diagram_json(const SimplicialMap& f, const Simplex& s, const FiberDiagram& d);
Json hopf_result_json(const HopfResult& h);
Json bound_report_json(const BoundReport& r);

// Full check-theorem document for one map.
Json theorem_report_json(const std::string& map_name, const SimplicialMap& f);

} // namespace hopfmu
