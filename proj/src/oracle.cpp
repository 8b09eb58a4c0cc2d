/**
 * @file oracle.cpp
 * @brief Exhaustive enumeration of the sequence families and brute-force
 *        extrema with complete witness lists. The oracle certifies every
 *        closed-form construction; it never samples.
 */
#include "contx/oracle.hpp"

#include "contx/continuant.hpp"
#include "contx/errors.hpp"

#include <algorithm>

namespace contx {

EnumerationRequest EnumerationRequest::w(MultisetSpec ms) {
    EnumerationRequest req{Family::W, std::move(ms)};
    return req;
}

EnumerationRequest EnumerationRequest::v(MultisetSpec ms) {
    EnumerationRequest req{Family::V, std::move(ms)};
    return req;
}

EnumerationRequest EnumerationRequest::u_stn(Elem S, std::int64_t t, Elem n) {
    EnumerationRequest req{Family::U_Stn, std::nullopt};
    req.S = S;
    req.t = t;
    req.n = n;
    return req;
}

EnumerationRequest EnumerationRequest::u_st(Elem S, std::int64_t t) {
    EnumerationRequest req{Family::U_St, std::nullopt};
    req.S = S;
    req.t = t;
    return req;
}

EnumerationRequest EnumerationRequest::u_ns(Elem S, Elem n) {
    EnumerationRequest req{Family::U_nS, std::nullopt};
    req.S = S;
    req.n = n;
    return req;
}

namespace {

void validate(const EnumerationRequest& req) {
    switch (req.family) {
    case Family::W:
    case Family::V:
        if (!req.multiset) throw domain_error("enumerate: W/V need a multiset");
        return;
    case Family::U_Stn:
        if (req.S < 1 || req.t < 1 || req.n < 1)
            throw domain_error("enumerate: U(S,t,n) needs S, t, n >= 1");
        if (req.S < req.t || req.S > req.n * req.t)
            throw infeasible_error("enumerate: U(S,t,n) is empty");
        return;
    case Family::U_St:
        if (req.S < 1 || req.t < 1) throw domain_error("enumerate: U(S,t) needs S, t >= 1");
        if (req.S < req.t) throw infeasible_error("enumerate: U(S,t) is empty");
        return;
    case Family::U_nS:
        if (req.S < 1 || req.n < 1) throw domain_error("enumerate: U_n(S) needs S, n >= 1");
        return;
    }
}

Elem part_bound(const EnumerationRequest& req) {
    // U(S,t) elements are forced below S-t+1 by positivity.
    return req.family == Family::U_St ? req.S - req.t + 1 : req.n;
}

// Compositions of `remaining` into exactly `parts` parts in [1, bound],
// lexicographic. Leaf values arrive through the continuant-pair stack.
template <typename Visit>
void walk_fixed_length(std::vector<Elem>& buf, std::vector<ContinuantPair>& pairs, Elem remaining,
                       std::int64_t parts, Elem bound, const Visit& visit) {
    if (parts == 0) {
        visit(buf, pairs.back());
        return;
    }
    const Elem lo = std::max<Elem>(1, remaining - (parts - 1) * bound);
    const Elem hi = std::min<Elem>(bound, remaining - (parts - 1));
    for (Elem a = lo; a <= hi; ++a) {
        const ContinuantPair& top = pairs.back();
        pairs.push_back({a * top.full + top.truncated, top.full});
        buf.push_back(a);
        walk_fixed_length(buf, pairs, remaining - a, parts - 1, bound, visit);
        buf.pop_back();
        pairs.pop_back();
    }
}

// Compositions of `remaining` into any number of parts in [1, bound].
template <typename Visit>
void walk_any_length(std::vector<Elem>& buf, std::vector<ContinuantPair>& pairs, Elem remaining,
                     Elem bound, const Visit& visit) {
    if (remaining == 0) {
        visit(buf, pairs.back());
        return;
    }
    const Elem hi = std::min<Elem>(bound, remaining);
    for (Elem a = 1; a <= hi; ++a) {
        const ContinuantPair& top = pairs.back();
        pairs.push_back({a * top.full + top.truncated, top.full});
        buf.push_back(a);
        walk_any_length(buf, pairs, remaining - a, bound, visit);
        buf.pop_back();
        pairs.pop_back();
    }
}

// All arrangements in lexicographic order; `fix_first_min` pins one copy of
// the smallest value to the front (the V family).
template <typename Visit>
void walk_permutations(const MultisetSpec& ms, bool fix_first_min, const Visit& visit) {
    std::vector<Elem> v = ms.ascending().elems();
    if (fix_first_min) {
        std::vector<Elem> rest(v.begin() + 1, v.end());
        const Elem head = v.front();
        do {
            std::vector<Elem> whole;
            whole.reserve(v.size());
            whole.push_back(head);
            whole.insert(whole.end(), rest.begin(), rest.end());
            visit(whole, continuant_pair(Sequence(whole)));
        } while (std::next_permutation(rest.begin(), rest.end()));
        return;
    }
    do {
        visit(v, continuant_pair(Sequence(v)));
    } while (std::next_permutation(v.begin(), v.end()));
}

template <typename Visit>
void for_each_member(const EnumerationRequest& req, const Visit& visit) {
    validate(req);
    std::vector<Elem> buf;
    std::vector<ContinuantPair> pairs{ContinuantPair{}};
    switch (req.family) {
    case Family::W:
        walk_permutations(*req.multiset, false, visit);
        return;
    case Family::V:
        walk_permutations(*req.multiset, true, visit);
        return;
    case Family::U_Stn:
    case Family::U_St:
        walk_fixed_length(buf, pairs, req.S, req.t, part_bound(req), visit);
        return;
    case Family::U_nS:
        walk_any_length(buf, pairs, req.S, req.n, visit);
        return;
    }
}

} // namespace

void enumerate(const EnumerationRequest& req, const std::function<void(const Sequence&)>& visit) {
    for_each_member(req, [&](const std::vector<Elem>& v, const ContinuantPair&) {
        visit(Sequence(v));
    });
}

std::uint64_t family_size(const EnumerationRequest& req) {
    std::uint64_t count = 0;
    for_each_member(req, [&](const std::vector<Elem>&, const ContinuantPair&) { ++count; });
    return count;
}

BruteForceReport brute_force(const EnumerationRequest& req) {
    BruteForceReport report;
    bool first = true;
    for_each_member(req, [&](const std::vector<Elem>& v, const ContinuantPair& pair) {
        ++report.cardinality;
        if (first || pair.full < report.min_value) {
            report.min_value = pair.full;
            report.argmin.clear();
            report.argmin.push_back(Sequence(v));
        } else if (pair.full == report.min_value) {
            report.argmin.push_back(Sequence(v));
        }
        if (first || pair.full > report.max_value) {
            report.max_value = pair.full;
            report.argmax.clear();
            report.argmax.push_back(Sequence(v));
        } else if (pair.full == report.max_value) {
            report.argmax.push_back(Sequence(v));
        }
        first = false;
    });
    if (first) throw infeasible_error("brute_force: empty family");
    return report;
}

bool unit_variation_check(const EnumerationRequest& req) {
    if (req.family != Family::U_Stn && req.family != Family::U_nS)
        throw domain_error("unit_variation_check: U(S,t,n) or U_n(S) only");
    const Elem n = req.n;

    BruteForceReport report = brute_force(req);
    for (const Sequence& seq : report.argmin) {
        std::int64_t interior = 0;
        for (Elem e : seq)
            if (e != 1 && e != n) ++interior;
        if (interior > 1) return false;
    }

    // Deterministic sample of members for the convexity inequality.
    const std::uint64_t stride = std::max<std::uint64_t>(1, report.cardinality / 128);
    std::vector<Sequence> sample;
    std::uint64_t index = 0;
    for_each_member(req, [&](const std::vector<Elem>& v, const ContinuantPair&) {
        if (index++ % stride == 0 && sample.size() < 200) sample.push_back(Sequence(v));
    });

    for (const Sequence& seq : sample) {
        const std::int64_t t = seq.size();
        for (std::int64_t i = 1; i <= t; ++i) {
            for (std::int64_t j = i + 1; j <= t; ++j) {
                const Elem a = seq.at1(i);
                const Elem b = seq.at1(j);
                if (a == 1 || a == n || b == 1 || b == n) continue;
                // F_tau with a at position i and tau-a at position j; both
                // unit variations must stay inside [1, n].
                auto variant = [&](Elem da) {
                    std::vector<Elem> v = seq.elems();
                    v[static_cast<std::size_t>(i - 1)] = a + da;
                    v[static_cast<std::size_t>(j - 1)] = b - da;
                    return continuant(Sequence(std::move(v)));
                };
                if (a - 1 < 1 || b + 1 > n || a + 1 > n || b - 1 < 1) continue;
                BigInt mid = continuant(seq);
                if (!(mid > std::min(variant(-1), variant(+1)))) return false;
            }
        }
    }
    return true;
}

bool uniqueness_check(const EnumerationRequest& req, bool maximum) {
    BruteForceReport report = brute_force(req);
    const std::vector<Sequence>& witnesses = maximum ? report.argmax : report.argmin;
    if (witnesses.empty()) return false;
    Sequence form = unit_normal_form(witnesses.front());
    for (std::size_t i = 1; i < witnesses.size(); ++i) {
        if (unit_normal_form(witnesses[i]) != form) return false;
    }
    return true;
}

} // namespace contx
