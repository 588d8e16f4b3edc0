#pragma once

#include "json.hpp"

#include "colocal/analysis.hpp"
#include "colocal/conditions.hpp"
#include "colocal/poset.hpp"
#include "colocal/quiver.hpp"
#include "colocal/string_module.hpp"
#include "colocal/strings.hpp"

namespace colocal {

// insertion-ordered so emitted documents are stable
using Json = nlohmann::ordered_json;

Json quiver_json(const QuiverAlgebra& qa);
Json condition_json(const ConditionReport& r);
Json profile_json(const QuiverAlgebra& qa, const VertexPathProfile& p);
Json analysis_json(const QuiverAlgebra& qa, const AnalysisReport& r);
Json string_json(const QuiverAlgebra& qa, const StringWord& w);
Json module_json(const QuiverAlgebra& qa, const StringModule& m);
Json poset_json(const Poset& p);
Json tau_json(const QuiverAlgebra& qa, const TauVerification& v);
Json main_theorem_json(const QuiverAlgebra& qa, const MainTheoremCheck& c);
Json partition_json(const QuiverAlgebra& qa, const PartitionCheck& c);

}  // namespace colocal
