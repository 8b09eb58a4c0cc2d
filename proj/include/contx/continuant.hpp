#pragma once

#include "contx/bigint.hpp"
#include "contx/rational.hpp"
#include "contx/sequence.hpp"

#include <vector>

namespace contx {

// <a_1..a_t> together with <a_1..a_{t-1}>. The empty sequence yields
// (1, 0). Consecutive continuants of a nonempty sequence are coprime.
struct ContinuantPair {
    BigInt full = 1;
    BigInt truncated = 0;
};

BigInt continuant(const Sequence& seq);
ContinuantPair continuant_pair(const Sequence& seq);

// <left><right> + <left minus last><right minus first>. Equals
// continuant(left ++ right) for every split.
BigInt split_identity_check(const Sequence& left, const Sequence& right);

// [a0; seq] as an exact rational; [a0;] = a0 and [0;] = 0.
Rational cf_value(const Sequence& seq, Elem leading);

// [0; seq]; shorthand used throughout the reflection calculus.
Rational cf0(const Sequence& seq);

// Every sequence reachable from seq by reversal and by unit extraction
// (a_1+1, ...) <-> (1, a_1, ...) applied at either end. All members share
// one continuant value; the orbit is finite.
std::vector<Sequence> trivial_orbit(const Sequence& seq);

// Lexicographically least member of the trivial orbit. Two sequences are
// trivially equal iff their normal forms coincide.
Sequence unit_normal_form(const Sequence& seq);

bool trivially_equal(const Sequence& a, const Sequence& b);

} // namespace contx
