#include "contx/interval.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace contx {

namespace mp = boost::multiprecision;

RatInterval ri_from(const Q& x) { return {x, x}; }

RatInterval ri_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval ri_sub(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval ri_mul(const RatInterval& a, const RatInterval& b) {
    if (a.lo < 0 || b.lo < 0) throw domain_error("ri_mul: operands must be nonnegative");
    return {a.lo * b.lo, a.hi * b.hi};
}

RatInterval ri_div(const RatInterval& a, const RatInterval& b) {
    if (b.lo <= 0) throw domain_error("ri_div: divisor must be positive");
    if (a.lo < 0) throw domain_error("ri_div: dividend must be nonnegative");
    return {a.lo / b.hi, a.hi / b.lo};
}

RatInterval ri_pow(const RatInterval& a, unsigned e) {
    if (a.lo < 0) throw domain_error("ri_pow: base must be nonnegative");
    RatInterval out = ri_from(Q(1));
    RatInterval base = a;
    while (e) {
        if (e & 1U) out = ri_mul(out, base);
        base = ri_mul(base, base);
        e >>= 1U;
    }
    return out;
}

BigInt iroot_floor(const BigInt& x, unsigned k) {
    if (x < 0) throw domain_error("iroot_floor: negative radicand");
    if (k == 0) throw domain_error("iroot_floor: zeroth root");
    if (k == 1 || x <= 1) return x;
    if (k == 2) return mp::sqrt(x);

    const unsigned bits = static_cast<unsigned>(mp::msb(x)) + 1;
    BigInt g = BigInt(1) << (bits / k + 1); // above the root
    for (;;) {
        BigInt y = ((k - 1) * g + x / mp::pow(g, k - 1)) / k;
        if (y >= g) break;
        g = y;
    }
    while (mp::pow(g, k) > x) --g;
    while (mp::pow(g + 1, k) <= x) ++g;
    return g;
}

RatInterval sqrt_interval(const Q& x, unsigned bits) {
    if (x < 0) throw domain_error("sqrt_interval: negative radicand");
    // sqrt(N/D) = sqrt(N*D)/D
    const BigInt num = mp::numerator(x);
    const BigInt den = mp::denominator(x);
    const BigInt scaled = num * den << (2 * bits);
    const BigInt r = mp::sqrt(scaled);
    const BigInt unit = den << bits;
    return {Q(r, unit), Q(r + 1, unit)};
}

namespace {

Q root_lower(const Q& x, unsigned k, unsigned bits) {
    const BigInt scaled = q_floor(x * Q(BigInt(1) << (k * bits)));
    return Q(iroot_floor(scaled, k), BigInt(1) << bits);
}

Q root_upper(const Q& x, unsigned k, unsigned bits) {
    const BigInt scaled = q_floor(x * Q(BigInt(1) << (k * bits)));
    return Q(iroot_floor(scaled, k) + 1, BigInt(1) << bits);
}

} // namespace

RatInterval kth_root_interval(const RatInterval& x, unsigned k, unsigned bits) {
    if (x.lo < 0) throw domain_error("kth_root_interval: negative radicand");
    return {root_lower(x.lo, k, bits), root_upper(x.hi, k, bits)};
}

RatInterval e_squared(unsigned bits) {
    // e = sum 1/i!; the tail beyond K is below 2/(K+1)!.
    Q sum = 0;
    BigInt factorial = 1;
    const BigInt limit = BigInt(1) << (bits + 2);
    unsigned i = 0;
    for (;;) {
        sum += Q(1, factorial);
        ++i;
        factorial *= i;
        if (factorial > limit && i > 2) break;
    }
    RatInterval e{sum, sum + Q(2, factorial)};
    return ri_mul(e, e);
}

BigInt q_floor(const Q& x) {
    BigInt num = mp::numerator(x);
    BigInt den = mp::denominator(x);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

BigInt q_nearest(const Q& x) {
    const Q shifted = x + Q(1, 2);
    if (mp::denominator(shifted) == 1)
        throw precision_error("q_nearest: value exactly between integers");
    return q_floor(shifted);
}

std::string decimal_string(const Q& x, unsigned digits) {
    if (x < 0) throw domain_error("decimal_string: negative value");
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = q_floor(x * Q(scale));
    std::string raw = scaled.str();
    if (digits == 0) return raw;
    if (raw.size() <= digits) raw.insert(0, digits + 1 - raw.size(), '0');
    raw.insert(raw.size() - digits, ".");
    return raw;
}

} // namespace contx
