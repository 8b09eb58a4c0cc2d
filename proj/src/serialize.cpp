#include "contx/serialize.hpp"

namespace contx {

Json to_json(const Sequence& seq) {
    Json arr = Json::array();
    for (Elem e : seq) arr.push_back(e);
    return arr;
}

Json to_json(const ExtremalResult& result) {
    Json j;
    j["family"] = result.family;
    Json params = Json::object();
    for (const auto& [key, value] : result.params) params[key] = value;
    j["params"] = params;
    j["witness"] = to_json(result.witness);
    j["value"] = to_decimal(result.value);
    Json ties = Json::array();
    for (const auto& w : result.tie_witnesses) ties.push_back(to_json(w));
    j["tie_witnesses"] = ties;
    return j;
}

Json to_json(const TraceStep& step) {
    Json j;
    j["lo"] = step.spec.lo;
    j["hi"] = step.spec.hi;
    j["before"] = to_decimal(step.before);
    j["after"] = to_decimal(step.after);
    return j;
}

Json to_json(const TransitiveResult& result, const Sequence& input) {
    Json j;
    j["input"] = to_json(input);
    Json steps = Json::array();
    for (const auto& s : result.steps) steps.push_back(to_json(s));
    j["steps"] = steps;
    j["final"] = to_json(result.final);
    j["value"] = to_decimal(continuant(result.final));
    return j;
}

Json to_json(const BruteForceReport& report) {
    Json j;
    j["cardinality"] = report.cardinality;
    j["min"] = to_decimal(report.min_value);
    j["max"] = to_decimal(report.max_value);
    Json mins = Json::array();
    for (const auto& w : report.argmin) mins.push_back(to_json(w));
    Json maxs = Json::array();
    for (const auto& w : report.argmax) maxs.push_back(to_json(w));
    j["argmin"] = mins;
    j["argmax"] = maxs;
    return j;
}

Json to_json(const BoundReport& report, const BigInt* exact_min) {
    Json j;
    j["S"] = report.S;
    j["n"] = report.n;
    j["bound"] = report.bound_decimal;
    if (exact_min) {
        j["min"] = to_decimal(*exact_min);
        // Lower bound of the certified margin min - bound.
        Q margin = Q(*exact_min) - report.bound.hi;
        j["margin"] = decimal_string(margin < 0 ? Q(0) : margin, 6);
    }
    return j;
}

Sequence sequence_from_json(const Json& j) {
    std::vector<Elem> v;
    for (const auto& e : j) v.push_back(e.get<Elem>());
    return Sequence(std::move(v));
}

} // namespace contx
