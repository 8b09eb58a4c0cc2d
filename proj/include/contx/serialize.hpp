#pragma once

#include "contx/bounds.hpp"
#include "contx/extremal.hpp"
#include "contx/oracle.hpp"
#include "contx/reflect.hpp"

#include <json.hpp>

namespace contx {

// Field order is fixed (insertion order) for diff-stable output; big values
// are always decimal strings.
using Json = nlohmann::ordered_json;

Json to_json(const Sequence& seq);
Json to_json(const ExtremalResult& result);
Json to_json(const TraceStep& step);
Json to_json(const TransitiveResult& result, const Sequence& input);
Json to_json(const BruteForceReport& report);
Json to_json(const BoundReport& report, const BigInt* exact_min);

Sequence sequence_from_json(const Json& j);

} // namespace contx
