#pragma once

#include "contx/bigint.hpp"
#include "contx/extremal.hpp"
#include "contx/sequence.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace contx {

enum class Family { W, V, U_Stn, U_St, U_nS };

// A finite family of sequences to enumerate exhaustively. W and V take a
// multiset; the U families take (S, t, n) with the members the family
// needs. Validated against the family's nonemptiness conditions up front.
struct EnumerationRequest {
    Family family;
    std::optional<MultisetSpec> multiset;
    Elem S = 0;
    std::int64_t t = 0;
    Elem n = 0;

    static EnumerationRequest w(MultisetSpec ms);
    static EnumerationRequest v(MultisetSpec ms);
    static EnumerationRequest u_stn(Elem S, std::int64_t t, Elem n);
    static EnumerationRequest u_st(Elem S, std::int64_t t);
    static EnumerationRequest u_ns(Elem S, Elem n);
};

// Streams every member exactly once in lexicographic order.
void enumerate(const EnumerationRequest& req, const std::function<void(const Sequence&)>& visit);

std::uint64_t family_size(const EnumerationRequest& req);

struct BruteForceReport {
    BigInt min_value;
    BigInt max_value;
    std::vector<Sequence> argmin; // complete, lexicographic
    std::vector<Sequence> argmax;
    std::uint64_t cardinality = 0;
};

// Exhaustive ground truth: exact extrema with complete witness lists.
BruteForceReport brute_force(const EnumerationRequest& req);

// (a) every brute-force argmin has at most one element outside {1, n};
// (b) on sampled members, varying a pair of interior values (a, b) with
// fixed sum tau satisfies F_tau(a) > min(F_tau(a-1), F_tau(a+1)) whenever
// both neighbors stay in range. U(S,t,n) and U_n(S) only.
bool unit_variation_check(const EnumerationRequest& req);

// Whether all brute-force argmin (or argmax) witnesses fall into a single
// class under symmetry plus unit extraction.
bool uniqueness_check(const EnumerationRequest& req, bool maximum);

} // namespace contx
