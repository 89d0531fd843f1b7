#ifndef DENSECUT_IO_H_
#define DENSECUT_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "densecut/cmc.h"
#include "densecut/graph.h"
#include "densecut/ratio_cuts.h"
#include "densecut/rational.h"
#include "densecut/regularity.h"

namespace densecut {

struct InstanceFile {
  Graph graph;
  std::optional<VertexCosts> costs;
  std::optional<Rational> rho;
  std::optional<Rational> zeta;
};

// {"n": int, "edges": [[u, v], ...], "costs": [...], "rho": int | "p/q",
//  "zeta": "p/q" | number}. Throws std::invalid_argument on bad input.
InstanceFile ParseInstanceJson(std::string_view text);
// "n m" header followed by m lines "u v".
InstanceFile ParseEdgeList(std::string_view text);
// JSON when the first non-blank character is '{', else edge list.
InstanceFile ParseInstance(std::string_view text);
InstanceFile LoadInstance(const std::string& path);

nlohmann::ordered_json InstanceToJson(const InstanceFile& inst);

// Rationals travel as "p/q" strings.
Rational RationalFromJson(const nlohmann::ordered_json& value);
inline std::string RationalToJson(const Rational& value) { return ToString(value); }

nlohmann::ordered_json CutToJson(const Cut& cut);
Cut CutFromJson(int n, const nlohmann::ordered_json& value);

nlohmann::ordered_json DecompositionToJson(const CutDecomposition& d);
nlohmann::ordered_json LargeReportToJson(const LargeReport& r);
nlohmann::ordered_json SmallReportToJson(const SmallReport& r);
nlohmann::ordered_json CmcReportToJson(const CmcReport& r);
nlohmann::ordered_json RatioResultToJson(ObjectiveKind kind, const RatioResult& r);

}  // namespace densecut

#endif  // DENSECUT_IO_H_
