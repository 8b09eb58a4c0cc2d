/**
 * @file bounds.cpp
 * @brief The quadratic-irrationality sequences K_{l,n}, k_{l,n}, their
 *        closed forms, and the certified growth bounds built on them.
 */
#include "contx/bounds.hpp"

#include "contx/continuant.hpp"
#include "contx/errors.hpp"

#include <stdexcept>

namespace contx {

SpectralConstants spectral_constants(Elem n, unsigned bits) {
    if (n < 1) throw domain_error("spectral_constants: requires n >= 1");
    SpectralConstants sc;
    sc.n = n;
    RatInterval half = ri_from(Q(1, 2));
    sc.lambda = ri_mul(ri_add(ri_from(Q(n)), sqrt_interval(Q(n) * Q(n) + 4, bits)), half);
    sc.mu = ri_mul(ri_add(ri_from(Q(n + 2)), sqrt_interval(Q(n) * Q(n) + 4 * Q(n), bits)), half);
    return sc;
}

BigInt K_seq(Elem n, std::int64_t l) {
    if (n < 1 || l < 0) throw domain_error("K_seq: requires n >= 1, l >= 0");
    BigInt prev = 1;        // K_0
    BigInt cur = n + 2;     // K_1
    if (l == 0) return prev;
    for (std::int64_t j = 1; j < l; ++j) {
        BigInt next = (n + 2) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt k_seq(Elem n, std::int64_t l) {
    if (n < 1 || l < 0) throw domain_error("k_seq: requires n >= 1, l >= 0");
    return continuant(Sequence::repeated(n, l));
}

namespace {

// (1,n,1,n,...) or (n,1,n,1,...) with `count` elements.
Sequence alternating(Elem n, std::int64_t count, bool start_with_one) {
    std::vector<Elem> v;
    v.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        const bool one = (i % 2 == 0) == start_with_one;
        v.push_back(one ? 1 : n);
    }
    return Sequence(std::move(v));
}

} // namespace

bool alternating_continuant_check(Elem n, std::int64_t l) {
    if (l < 1) throw domain_error("alternating_continuant_check: requires l >= 1");
    const BigInt k_prev = K_seq(n, l - 1);
    if (continuant(alternating(n, 2 * l - 1, true)) != k_prev) return false;
    if (continuant(alternating(n, 2 * l - 1, false)) != n * k_prev) return false;
    return continuant(alternating(n, 2 * l, true)) == K_seq(n, l) - k_prev;
}

bool closed_form_check(Elem n, std::int64_t l, unsigned bits) {
    if (l < 0) throw domain_error("closed_form_check: requires l >= 0");
    SpectralConstants sc = spectral_constants(n, bits);
    const Q quarter(1, 4);

    RatInterval k_expr = ri_div(ri_pow(sc.lambda, static_cast<unsigned>(l + 2)),
                                ri_add(ri_pow(sc.lambda, 2), ri_from(Q(1))));
    if (k_expr.width() >= quarter) throw precision_error("closed_form_check: k interval too wide");
    BigInt k_lo = q_floor(k_expr.lo + Q(1, 2));
    BigInt k_hi = q_floor(k_expr.hi + Q(1, 2));
    if (k_lo != k_hi) throw precision_error("closed_form_check: k rounding unresolved");

    RatInterval K_expr = ri_div(ri_pow(sc.mu, static_cast<unsigned>(l + 2)),
                                ri_sub(ri_pow(sc.mu, 2), ri_from(Q(1))));
    if (K_expr.width() >= quarter) throw precision_error("closed_form_check: K interval too wide");
    BigInt K_lo = q_floor(K_expr.lo);
    BigInt K_hi = q_floor(K_expr.hi);
    if (K_lo != K_hi) throw precision_error("closed_form_check: K rounding unresolved");

    return k_lo == k_seq(n, l) && K_lo == K_seq(n, l);
}

bool alternating_vs_uniform_check(Elem n) {
    if (n < 1) throw domain_error("alternating_vs_uniform_check: requires n >= 1");
    const BigInt K_n = K_seq(n, n);
    const BigInt K_prev = K_seq(n, n - 1);
    const BigInt k_next = k_seq(n, n + 1);
    const BigInt k_n = k_seq(n, n);
    if (!(K_n - K_prev < k_next)) return false;
    if (!(K_prev < k_n)) return false;
    // As printed: the denominator k_{n+1,n} - K_{n,n} may be negative for
    // small n, in which case the inequality holds vacuously.
    const Q lhs(n);
    const Q rhs = Q(n * K_prev - k_n) / Q(k_next - K_n);
    return lhs > rhs;
}

bool spectral_ratio_check(Elem n, unsigned bits) {
    if (n <= 8) throw domain_error("spectral_ratio_check: stated for n > 8 only");
    SpectralConstants sc = spectral_constants(n, bits);
    const RatInterval one = ri_from(Q(1));
    RatInterval lhs = ri_mul(
        ri_div(ri_add(one, ri_div(one, ri_pow(sc.lambda, 2))),
               ri_sub(one, ri_div(one, ri_pow(sc.mu, 2)))),
        ri_pow(ri_div(sc.mu, sc.lambda), static_cast<unsigned>(n)));
    RatInterval rhs = ri_mul(ri_from(Q(41, 40)), e_squared(bits));
    if (lhs.definitely_less(rhs)) return true;
    if (lhs.definitely_greater(rhs)) return false;
    throw precision_error("spectral_ratio_check: intervals overlap");
}

BoundReport growth_lower_bound(Elem S, Elem n, unsigned digits) {
    if (n < 2 || n > S - 2) throw domain_error("growth_lower_bound: requires 2 <= n <= S-2");
    Q tolerance = 1;
    for (unsigned i = 0; i < digits; ++i) tolerance /= 10;

    for (unsigned bits = 128; bits <= 1U << 14; bits *= 2) {
        SpectralConstants sc = spectral_constants(n, bits);
        const unsigned p = static_cast<unsigned>(S - n + 1);
        const unsigned q = static_cast<unsigned>(n + 1);
        RatInterval bound =
            ri_div(kth_root_interval(ri_pow(sc.mu, p), q, bits), e_squared(bits));
        if (bound.width() < tolerance) {
            BoundReport report;
            report.S = S;
            report.n = n;
            report.bound = bound;
            report.bound_decimal = decimal_string(bound.lo, digits);
            return report;
        }
    }
    throw precision_error("growth_lower_bound: precision cap reached");
}

GrowthBaseComparison growth_base_comparison(unsigned digits) {
    const unsigned bits = std::max(64u, digits * 4 + 32);
    RatInterval base = ri_add(ri_from(Q(3)), sqrt_interval(Q(8), bits));
    RatInterval lhs = kth_root_interval(base, 5, bits);
    RatInterval rhs = sqrt_interval(Q(2000001, 1000000), bits);
    if (!lhs.definitely_greater(rhs) && !lhs.definitely_less(rhs))
        throw precision_error("growth_base_comparison: intervals overlap");
    GrowthBaseComparison out;
    out.lhs_digits = decimal_string(lhs.lo, digits);
    out.rhs_digits = decimal_string(rhs.lo, digits);
    out.lhs_greater = lhs.definitely_greater(rhs);
    return out;
}

} // namespace contx
