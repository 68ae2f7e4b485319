#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "nv/cocycle.hpp"
#include "nv/element.hpp"
#include "nv/presentation.hpp"

namespace nv {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "nvtool";
inline constexpr std::string_view kVersion = "0.1.0";

class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(Rect const& r);
json to_json(DyadicPoint const& p);

/// {"n": 2, "pieces": [{"dom": ["00", ""], "ran": ["0", ""]}, ...]}, pieces sorted by dom.
json element_to_json(Element const& g);
/// Inverse of element_to_json; the result is validated. Throws JsonError.
Element element_from_json(json const& j);
Element element_from_json_text(std::string_view text);

json to_json(CheckReport const& r);
json to_json(TruncatedCocycle const& t, bool list_rects = true);
json to_json(CocycleIdentityReport const& r);
json to_json(FpProbeReport const& r);
json to_json(PropernessReport const& r);
json to_json(NormalizerReport const& r);

/// Set for dim >= 2 growing truncations: the data disagree with X being almost invariant.
std::string almost_invariance_finding(TruncatedCocycle const& t);

}  // namespace nv
