#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dynsamp/constructors.hpp"
#include "dynsamp/frame.hpp"
#include "dynsamp/recon.hpp"

namespace dynsamp {

/// Version tag carried by every JSON document this tool reads or writes.
inline constexpr const char* kSchema = "dynsamp/1";

using Json = nlohmann::json;

/// Kernels serialize as factor list plus split re/im symbol arrays.
Json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const Json& j);

/// Plans serialize omega as arrays of multi-indices (flat integers are also
/// accepted on input) with aligned depths.
Json plan_to_json(const SamplingPlan& plan);
SamplingPlan plan_from_json(const Json& j);

Json periodic_plan_to_json(const PeriodicPlan& plan);
Json periodic_plan2d_to_json(const PeriodicPlan2D& plan);

/// A plan document of any accepted type, reduced to the sampling plan it
/// induces; the periodic structure is kept when present.
struct ParsedPlan {
  SamplingPlan plan;
  std::optional<PeriodicPlan> periodic;
};
ParsedPlan any_plan_from_json(const Json& j);

Json frame_report_to_json(const FrameReport& report);
Json reconstruction_to_json(const ReconstructionResult& result);

/// Reads a JSON document from a file path or an inline literal (used by the
/// CLI's dual file/inline sources).
Json load_json_file(const std::string& path);

}  // namespace dynsamp
