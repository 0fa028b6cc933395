#pragma once

#include <json.hpp>

#include "xrc/graph.hpp"
#include "xrc/measure.hpp"

namespace xrc {

using Json = nlohmann::json;

// Configurations serialize as arrays of point strings ("p/q", "p", "inf");
// the loader also accepts bare JSON integers.
Json config_to_json(const Configuration& config);
Configuration config_from_json(const Json& j);

// {"n": int, "entries": [{"q": [i,j,k,l], "v": "p/q"}, ...]}. The loader
// completes a generating set through the axioms (sign-orbit closure plus
// two-of-three additivity inference to a fixpoint) and rejects inconsistent
// or underdetermined inputs with a named instance.
Json table_to_json(const CrossRatioTable& t);
CrossRatioTable table_from_json(const Json& j);

// {"n": int, "entries": [{"t": [i,j,k], "v": "p/q"}, ...]}, completed by
// alternation; every label triple must be covered.
Json cochain_to_json(const AltCochain2& phi);
AltCochain2 cochain_from_json(const Json& j);

// {"config": [...], "rects": [{"ab": [i,j], "cd": [k,l], "v": "p/q"}, ...]},
// completed by additivity and flip-antiinvariance.
Json measure_to_json(const RectMeasure& m);
RectMeasure measure_from_json(const Json& j);

// {"n": int, "edges": [[i,j], ...]}.
FiniteGraphSpace graph_from_json(const Json& j);

}  // namespace xrc
