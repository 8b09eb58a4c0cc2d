#pragma once

#include "contx/bigint.hpp"
#include "contx/interval.hpp"
#include "contx/sequence.hpp"

#include <cstdint>
#include <string>

namespace contx {

// lambda_n = (n + sqrt(n^2+4))/2 and mu_n = (n+2 + sqrt(n^2+4n))/2 as
// certified intervals; n <= lambda_n <= n+1 <= mu_n <= n+2.
struct SpectralConstants {
    Elem n = 0;
    RatInterval lambda;
    RatInterval mu;
};

SpectralConstants spectral_constants(Elem n, unsigned bits);

// K_{0,n} = 1, K_{1,n} = n+2, K_{j+1,n} = (n+2) K_{j,n} - K_{j-1,n}.
BigInt K_seq(Elem n, std::int64_t l);

// k_{l,n} = <n^l>.
BigInt k_seq(Elem n, std::int64_t l);

// The alternating-continuant identities: <1,n,...,1> (2l-1 elems) equals
// K_{l-1,n}; <n,1,...,n> (2l-1 elems) equals n K_{l-1,n}; <1,n,...,1,n>
// (2l elems) equals K_{l,n} - K_{l-1,n}.
bool alternating_continuant_check(Elem n, std::int64_t l);

// k_{l,n} == nearest_integer(lambda^{l+2}/(lambda^2+1)) and
// K_{l,n} == floor(mu^{l+2}/(mu^2-1)), decided with certified intervals.
// Throws precision_error when `bits` cannot separate the rounding.
bool closed_form_check(Elem n, std::int64_t l, unsigned bits);

// The three inequalities K_{n,n}-K_{n-1,n} < k_{n+1,n}, K_{n-1,n} < k_{n,n}
// and n > (n K_{n-1,n} - k_{n,n}) / (k_{n+1,n} - K_{n,n}), each evaluated
// as written (the last has a negative denominator for small n).
bool alternating_vs_uniform_check(Elem n);

// (1 + 1/lambda^2)/(1 - 1/mu^2) * (mu/lambda)^n < 41/40 * e^2, for n > 8.
bool spectral_ratio_check(Elem n, unsigned bits);

struct BoundReport {
    Elem S = 0;
    Elem n = 0;
    RatInterval bound;          // contains mu_n^{(S-n+1)/(n+1)} / e^2
    std::string bound_decimal;  // certified lower approximation
};

// Certified lower bound mu_n^{(S-n+1)/(n+1)} / e^2 for 2 <= n <= S-2,
// certified to `digits` decimal digits.
BoundReport growth_lower_bound(Elem S, Elem n, unsigned digits);

struct GrowthBaseComparison {
    std::string lhs_digits; // (3+sqrt(8))^(1/5)
    std::string rhs_digits; // sqrt(2+10^-6)
    bool lhs_greater = false;
};

// The growth-base comparison (3+sqrt(8))^(1/5) vs sqrt(2+10^-6): the n = 4
// bound base against the classical square-root constant.
GrowthBaseComparison growth_base_comparison(unsigned digits);

} // namespace contx
