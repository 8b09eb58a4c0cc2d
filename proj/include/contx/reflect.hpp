#pragma once

#include "contx/bigint.hpp"
#include "contx/continuant.hpp"
#include "contx/rational.hpp"
#include "contx/sequence.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace contx {

// Middle segment [lo, hi] (1-based, inclusive) of a host sequence: the
// reflection U,V,W -> U,reverse(V),W. Valid when 1 <= lo <= hi <= t and at
// least one of the prefix U / suffix W is nonempty.
struct ReflectionSpec {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

void validate_spec(const Sequence& seq, ReflectionSpec spec);

// Increasing / Decreasing: the reflected continuant is strictly larger /
// smaller. Equality splits into Neutral (palindromic middle: the reflection
// is the identity arrangement) and Trivial ([<-U] == [W-bar]: a genuine
// value-preserving substitution).
enum class ReflectionKind { Increasing, Decreasing, Trivial, Neutral };

struct Classification {
    ReflectionKind kind;
    int sign; // sign of a(U,V,W), decided by integer cross-products
};

Sequence apply_reflection(const Sequence& seq, ReflectionSpec spec);

// a(U,V,W) = ([<-U] - [W-bar]) ([<-V] - [V-bar]); empty sides contribute 0.
// Its sign equals the sign of continuant(reflected) - continuant(original).
Rational a_value(const Sequence& seq, ReflectionSpec spec);

Classification classify(const Sequence& seq, ReflectionSpec spec);

struct IndexPair {
    std::int64_t i = 0;
    std::int64_t j = 0;
};

// The correct pair (a_i > a_j, i < j) maximizing j - i, smallest i on ties;
// nullopt when the sequence is nondecreasing. Requires the minimum at
// position 1.
std::optional<IndexPair> most_remote_pair(const Sequence& seq);

struct TraceStep {
    ReflectionSpec spec;
    BigInt before;
    BigInt after;
};

struct TransitiveResult {
    Sequence final;
    std::vector<TraceStep> steps;
};

// Drives the sequence to the maximal arrangement over permutations with the
// minimal element leading, by most-remote-pair reflections; the continuant
// never decreases along the trace. A minimal element must sit at one end.
TransitiveResult transitive_maximize(const Sequence& seq);

// Drives the sequence to the zigzag minimum over all permutations of its
// multiset; the continuant never increases along the trace.
TransitiveResult transitive_minimize(const Sequence& seq);

enum class Majorization { NotMajorized, Majorized, StrictlyMajorized };

// Head-wise domination of <yHead ++ tail> by <xHead ++ tail>: both the full
// heads and the heads minus their last element compare <=. Strict when both
// are strict, or the full-head inequality is strict and the tail is nonempty.
Majorization majorizes(const Sequence& x_head, const Sequence& y_head, std::int64_t j_tail);

// Given <x> > <y>, decides [z_j; z_{j-1},...,z_1] >
// (<y_2..y_k> - <x_2..x_i>) / (<x> - <y>); when true,
// <z ++ x> > <z ++ y>. x, y, z must be nonempty.
bool prefix_extension_condition(const Sequence& x, const Sequence& y, const Sequence& z);

} // namespace contx
