#pragma once

#include <nlohmann/json.hpp>

#include "graphvn/decompose.hpp"
#include "graphvn/principal.hpp"
#include "graphvn/rmt.hpp"
#include "graphvn/tl.hpp"

namespace graphvn {

// All reports use ordered JSON with string-encoded exact scalars so that
// --json output is byte-stable for fixed inputs and seeds.
using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s);  // string: "p/q", decimal, or "inf"
Json graph_json(const WeightedGraph& g);
Json algebra_json(const VNAlgebra& a);

// report = "decompose".  `incremental` and `chain_parameters` are present
// when the incremental route ran; route_agreement when both routes did.
Json decompose_report(const WeightedGraph& g, const Decomposition& direct,
                      const IncrementalResult* incremental);

// report = "truncation-sequence".
Json truncation_report(const std::string& name, const Scalar& delta,
                       const std::vector<TruncationRow>& rows);

// report = "gjs-check".
Json gjs_report(const std::string& name, const Scalar& delta, const GjsCheck& check);

// report = "tl-moments".  Symbolic polynomials plus evaluated values;
// `symbolic` omits the evaluations and the Hankel check.
Json tl_report(const GrElement& g, int n_max, int hankel_size, bool symbolic = false);

// report = "simulate-edge".
Json edge_report_json(const EdgeReport& r);

// report = "simulate-semicircular".
Json semicircle_report_json(const SemicircleReport& r);

}  // namespace graphvn
