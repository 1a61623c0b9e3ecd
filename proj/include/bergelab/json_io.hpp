#ifndef BERGELAB_JSON_IO_HPP
#define BERGELAB_JSON_IO_HPP

#include <json.hpp>

#include "bergelab/census.hpp"
#include "bergelab/encode.hpp"
#include "bergelab/hypergraph.hpp"
#include "bergelab/randex.hpp"

namespace bergelab {

using Json = nlohmann::json;

// All from_* parsers validate structure and content; they throw
// ValidationError for anything malformed. Serializers emit canonical forms
// (sorted keys come from nlohmann::json's object ordering), so equal values
// always produce identical bytes.

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json to_json(const KGraph& s);

Json to_json(const EncodedTuple& t);
EncodedTuple tuple_from_json(const Json& j);

Json to_json(const ShadowRecord& rec);
ShadowRecord shadow_record_from_json(const Json& j);

Json to_json(const BergeCycleWitness& w);

Json to_json(const Fraction& f);
Json to_json(const ExponentTable& t);

/// Numbers that fit in 64 bits stay JSON numbers; larger values become
/// decimal strings.
Json bigint_to_json(const BigInt& x);

/// Parse text as JSON; wraps syntax errors in ValidationError.
Json parse_json_text(const std::string& text);

}  // namespace bergelab

#endif
