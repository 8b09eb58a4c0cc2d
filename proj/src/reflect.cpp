/**
 * @file reflect.cpp
 * @brief Basic-substitution calculus: sign tests, classification and the
 *        transitive step-up / step-down reflection algorithms.
 */
#include "contx/reflect.hpp"

#include "contx/extremal.hpp"

#include <algorithm>
#include <stdexcept>

namespace contx {

void validate_spec(const Sequence& seq, ReflectionSpec spec) {
    const std::int64_t t = seq.size();
    if (spec.lo < 1 || spec.hi < spec.lo || spec.hi > t)
        throw domain_error("reflection spec out of range");
    if (spec.lo == 1 && spec.hi == t)
        throw domain_error("reflection needs a nonempty prefix or suffix");
}

Sequence apply_reflection(const Sequence& seq, ReflectionSpec spec) {
    validate_spec(seq, spec);
    std::vector<Elem> v = seq.elems();
    std::reverse(v.begin() + (spec.lo - 1), v.begin() + spec.hi);
    return Sequence(std::move(v));
}

namespace {

struct ReflectionSign {
    int head; // sign of [<-U] - [W-bar], via p'w - p w''
    int mid;  // sign of [<-V] - [V-bar], via v_pre - v_suf
};

// Signs of the two factors of a(U,V,W) from integer cross-products; the
// denominators <U><W><V> are positive.
ReflectionSign factor_signs(const Sequence& seq, ReflectionSpec spec) {
    const std::int64_t t = seq.size();
    Sequence u = seq.sub1(1, spec.lo - 1);
    Sequence v = seq.sub1(spec.lo, spec.hi);
    Sequence w = seq.sub1(spec.hi + 1, t);

    ContinuantPair up = continuant_pair(u); // ( <U>, <U minus last> ); (1,0) when empty
    BigInt wf = continuant(w);
    BigInt ws = w.empty() ? BigInt(0) : continuant(w.drop_first());
    // [<-U] - [W-bar] = (p' w - p w'') / (p w)
    BigInt head = up.truncated * wf - up.full * ws;

    BigInt v_pre = continuant(v.drop_last());
    BigInt v_suf = continuant(v.drop_first());
    // [<-V] - [V-bar] = (v_pre - v_suf) / <V>
    BigInt mid = v_pre - v_suf;

    return {head.sign(), mid.sign()};
}

} // namespace

Rational a_value(const Sequence& seq, ReflectionSpec spec) {
    validate_spec(seq, spec);
    const std::int64_t t = seq.size();
    Sequence u = seq.sub1(1, spec.lo - 1);
    Sequence v = seq.sub1(spec.lo, spec.hi);
    Sequence w = seq.sub1(spec.hi + 1, t);

    Rational left = (u.empty() ? Rational(0) : cf0(u.reversed())) -
                    (w.empty() ? Rational(0) : cf0(w));
    Rational right = cf0(v.reversed()) - cf0(v);
    return left * right;
}

Classification classify(const Sequence& seq, ReflectionSpec spec) {
    validate_spec(seq, spec);
    ReflectionSign s = factor_signs(seq, spec);
    const int sign = s.head * s.mid;
    Classification out{ReflectionKind::Neutral, sign};
    if (sign > 0) {
        out.kind = ReflectionKind::Increasing;
    } else if (sign < 0) {
        out.kind = ReflectionKind::Decreasing;
    } else {
        // Equality: Neutral when the middle reads the same both ways (the
        // reflection is the identity arrangement), Trivial otherwise
        // ([<-U] == [W-bar], a genuine value-preserving substitution).
        out.kind = s.mid == 0 ? ReflectionKind::Neutral : ReflectionKind::Trivial;
    }
    return out;
}

std::optional<IndexPair> most_remote_pair(const Sequence& seq) {
    if (seq.empty()) throw domain_error("most_remote_pair: empty sequence");
    if (seq.at1(1) != seq.min_element())
        throw domain_error("most_remote_pair: minimum must lead");
    const std::int64_t t = seq.size();
    std::optional<IndexPair> best;
    std::int64_t best_dist = 0;
    for (std::int64_t i = 1; i <= t; ++i) {
        for (std::int64_t j = i + 1; j <= t; ++j) {
            if (seq.at1(i) > seq.at1(j)) {
                std::int64_t dist = j - i;
                // scanning i ascending, the first max-distance pair found
                // already has the smallest i
                if (dist > best_dist) {
                    best = IndexPair{i, j};
                    best_dist = dist;
                }
            }
        }
    }
    return best;
}

namespace {

ReflectionSpec mirror_spec(ReflectionSpec spec, std::int64_t t) {
    return {t + 1 - spec.hi, t + 1 - spec.lo};
}

} // namespace

TransitiveResult transitive_maximize(const Sequence& seq) {
    if (seq.empty()) throw domain_error("transitive_maximize: empty sequence");
    const std::int64_t t = seq.size();
    if (t == 1) return {seq, {}};

    const Elem mn = seq.min_element();
    bool mirrored = false;
    if (seq.at1(1) != mn) {
        if (seq.at1(t) != mn)
            throw domain_error("transitive_maximize: a minimal element must sit at an end");
        mirrored = true;
    }

    Sequence cur = mirrored ? seq.reversed() : seq;
    TransitiveResult res;
    BigInt value = continuant(cur);
    const std::int64_t cap = std::max<std::int64_t>(1, t * (t - 1) / 2);
    for (std::int64_t step = 0;; ++step) {
        auto pair = most_remote_pair(cur);
        if (!pair) break;
        if (step >= cap) throw std::logic_error("transitive_maximize: step budget exceeded");
        ReflectionSpec spec{pair->i, pair->j};
        Sequence next = apply_reflection(cur, spec);
        BigInt after = continuant(next);
        if (after < value) throw std::logic_error("transitive_maximize: decreasing step");
        res.steps.push_back({mirrored ? mirror_spec(spec, t) : spec, value, after});
        cur = std::move(next);
        value = std::move(after);
    }
    res.final = mirrored ? cur.reversed() : cur;
    return res;
}

TransitiveResult transitive_minimize(const Sequence& seq) {
    if (seq.empty()) throw domain_error("transitive_minimize: empty sequence");
    const std::int64_t t = seq.size();
    if (t == 1) return {seq, {}};

    // Orientation with a_1 <= a_t; reflections map back through the mirror.
    const bool mirrored = seq.at1(t) < seq.at1(1);
    std::vector<Elem> cur = (mirrored ? seq.reversed() : seq).elems();

    SortedViews views(MultisetSpec::from_sequence(seq));
    const std::int64_t nu = views.t_plus() - 1;
    const std::int64_t mu = views.t_minus();
    auto n_of = [&](std::int64_t j) { return views.n_of(j); };
    auto m_of = [&](std::int64_t q) { return views.m_of(q); };

    TransitiveResult res;
    BigInt value = continuant(Sequence(cur));

    for (std::int64_t guard = 0; guard <= t + 1; ++guard) {
        // First slot of the zigzag fill order (n_0, m_1, n_1, m_2, ...)
        // whose value is wrong; fixed slots are never disturbed again.
        std::int64_t lo = 0, hi = 0; // 0-based reflection bounds
        bool found = false;
        for (std::int64_t k = 0; !found; ++k) {
            const std::int64_t km = k / 2;
            const std::int64_t kp = k - km;
            if (km > nu && kp > mu) break;
            if (k % 2 == 0) {
                if (km > nu || cur[km] == n_of(km)) continue;
                const Elem target = n_of(km);
                const std::int64_t fixed_right = std::min(km, mu);
                std::int64_t last = t - 1 - fixed_right;
                if (km == 0) last = t - 2; // keep the suffix W nonempty
                std::int64_t pos = -1;
                for (std::int64_t p = last; p > km; --p) {
                    if (cur[p] == target) {
                        pos = p;
                        break;
                    }
                }
                if (pos < 0) throw std::logic_error("transitive_minimize: target value not free");
                lo = km;
                hi = pos;
                found = true;
            } else {
                if (kp > mu || cur[t - kp] == m_of(kp)) continue;
                const Elem target = m_of(kp);
                const std::int64_t slot = t - kp;
                std::int64_t pos = -1;
                for (std::int64_t p = km + 1; p < slot; ++p) {
                    if (cur[p] == target) {
                        pos = p;
                        break;
                    }
                }
                if (pos < 0) throw std::logic_error("transitive_minimize: target value not free");
                lo = pos;
                hi = slot;
                found = true;
            }
        }
        if (!found) break;

        std::reverse(cur.begin() + lo, cur.begin() + hi + 1);
        BigInt after = continuant(Sequence(cur));
        if (after > value) throw std::logic_error("transitive_minimize: increasing step");
        ReflectionSpec spec{lo + 1, hi + 1};
        res.steps.push_back({mirrored ? mirror_spec(spec, t) : spec, value, after});
        value = std::move(after);
    }

    Sequence out(cur);
    res.final = mirrored ? out.reversed() : out;
    return res;
}

Majorization majorizes(const Sequence& x_head, const Sequence& y_head, std::int64_t j_tail) {
    if (j_tail < 0) throw domain_error("majorizes: tail length must be >= 0");
    ContinuantPair x = continuant_pair(x_head);
    ContinuantPair y = continuant_pair(y_head);
    if (y.full > x.full || y.truncated > x.truncated) return Majorization::NotMajorized;
    const bool strict_full = y.full < x.full;
    const bool strict_trunc = y.truncated < x.truncated;
    if ((strict_full && strict_trunc) || (strict_full && j_tail >= 1))
        return Majorization::StrictlyMajorized;
    return Majorization::Majorized;
}

bool prefix_extension_condition(const Sequence& x, const Sequence& y, const Sequence& z) {
    if (x.empty() || y.empty()) throw domain_error("prefix_extension_condition: heads must be nonempty");
    if (z.empty()) throw domain_error("prefix_extension_condition: tail must be nonempty");
    BigInt xf = continuant(x);
    BigInt yf = continuant(y);
    if (xf <= yf) throw domain_error("prefix_extension_condition: requires <x> > <y>");
    // [z_j; z_{j-1},...,z_1] = <z_1..z_j>/<z_1..z_{j-1}> by symmetry.
    ContinuantPair zp = continuant_pair(z);
    Rational lhs(zp.full, zp.truncated);
    Rational rhs(continuant(y.drop_first()) - continuant(x.drop_first()), xf - yf);
    return lhs > rhs;
}

} // namespace contx
