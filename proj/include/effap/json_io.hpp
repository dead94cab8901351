#pragma once

#include <json.hpp>

#include "effap/measure.hpp"
#include "effap/siegel.hpp"
#include "effap/thue.hpp"
#include "effap/zeroest.hpp"

namespace effap {

using Json = nlohmann::json;

Json interval_json(const Interval& v);
Json intpoly_json(const IntPoly& p);   // sparse {"i": coeff}
Json bipoly_json(const BiPoly& p);     // sparse {"i,j": coeff}
Json box_json(const Box& b);
Json ledger_json(const std::vector<LedgerEntry>& ledger);

Json aux_json(const AuxPoly& aux);
Json measure_outcome_json(const MeasureOutcome& out);
Json worksheet_json(const Worksheet& w);
Json corollary_json(const CorollaryConstants& c);
Json validation_json(const ConvergentValidation& v);
Json portrait_json(const RootPortrait& p);
Json rootboxes_json(const std::vector<RootBox>& roots);
Json solution_bound_json(const SolutionBound& b);
Json solutions_json(const std::vector<Solution>& sols);
Json count_ledger_json(const CountLedger& c);
Json upper_estimate_json(const UpperEstimateReport& r);

// minimal polynomial: "t^3-5*t^2+1" or a coefficient list, constant first
IntPoly poly_from_json(const Json& j);
// {"P": coeffs, "Q": coeffs, "a": "123"} or
// {"abc": {"shifts": [...], "quadratics": [[b, c], ...], "sign": 1}, "a": "10"}
FamilySpec family_from_json(const Json& j, const RunConfig& cfg = RunConfig());

}  // namespace effap
