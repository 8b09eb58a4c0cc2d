/**
 * @file extremal.cpp
 * @brief Closed-form extremal constructions over the permutation and
 *        bounded-composition families, with the Diophantine parameter
 *        solvers behind them.
 */
#include "contx/extremal.hpp"

#include "contx/continuant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace contx {

namespace {

// Floor division (C++ / truncates toward zero).
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

std::string i2s(std::int64_t v) { return std::to_string(v); }

} // namespace

MultisetSpec::MultisetSpec(std::vector<Elem> values, std::vector<std::int64_t> mults)
    : values_(std::move(values)), mults_(std::move(mults)) {
    if (values_.empty()) throw domain_error("multiset needs at least one value");
    if (values_.size() != mults_.size())
        throw domain_error("multiset values and multiplicities differ in length");
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (values_[j] < 1) throw domain_error("multiset values must be >= 1");
        if (j > 0 && values_[j] <= values_[j - 1])
            throw domain_error("multiset values must be strictly increasing");
        if (mults_[j] < 1) throw domain_error("multiplicities must be >= 1");
    }
}

MultisetSpec MultisetSpec::from_sequence(const Sequence& seq) {
    if (seq.empty()) throw domain_error("cannot build a multiset from the empty sequence");
    std::map<Elem, std::int64_t> counts;
    for (Elem e : seq) ++counts[e];
    std::vector<Elem> values;
    std::vector<std::int64_t> mults;
    for (auto& [v, p] : counts) {
        values.push_back(v);
        mults.push_back(p);
    }
    return MultisetSpec(std::move(values), std::move(mults));
}

std::int64_t MultisetSpec::total() const {
    std::int64_t t = 0;
    for (auto p : mults_) t += p;
    return t;
}

Sequence MultisetSpec::ascending() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(total()));
    for (std::size_t j = 0; j < values_.size(); ++j)
        out.insert(out.end(), static_cast<std::size_t>(mults_[j]), values_[j]);
    return Sequence(std::move(out));
}

Sequence MultisetSpec::descending() const { return ascending().reversed(); }

std::string MultisetSpec::str() const {
    std::string out = "{";
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(values_[j]) + "^" + std::to_string(mults_[j]);
    }
    return out + "}";
}

ExtremalResult max_V(const MultisetSpec& ms) {
    ExtremalResult res;
    res.family = "max_V";
    res.witness = ms.ascending();
    res.value = continuant(res.witness);
    res.params.emplace_back("t", i2s(ms.total()));
    return res;
}

SplitSpec thm2_split(const MultisetSpec& ms) {
    const std::int64_t f = ms.distinct();
    SplitSpec split;
    split.l.resize(static_cast<std::size_t>(f));
    split.r.resize(static_cast<std::size_t>(f));
    for (std::int64_t j = 1; j <= f; ++j) {
        const std::int64_t p = ms.mults()[static_cast<std::size_t>(j - 1)];
        if (mod_floor(j - f, 2) == 0) { // j == f (mod 2)
            split.l[j - 1] = 1;
            split.r[j - 1] = p - 1;
        } else { // j == f-1 (mod 2)
            split.r[j - 1] = 1;
            split.l[j - 1] = p - 1;
        }
    }
    return split;
}

Sequence valley(const MultisetSpec& ms, const SplitSpec& split) {
    const std::size_t f = static_cast<std::size_t>(ms.distinct());
    if (split.l.size() != f || split.r.size() != f)
        throw domain_error("split spec does not match the multiset");
    std::vector<Elem> out;
    for (std::size_t j = f; j-- > 0;) {
        if (split.l[j] + split.r[j] != ms.mults()[j])
            throw domain_error("split spec must satisfy l_j + r_j = p_j");
        if (split.l[j] < 0 || split.r[j] < 0)
            throw domain_error("split spec parts must be >= 0");
        out.insert(out.end(), static_cast<std::size_t>(split.l[j]), ms.values()[j]);
    }
    for (std::size_t j = 0; j < f; ++j)
        out.insert(out.end(), static_cast<std::size_t>(split.r[j]), ms.values()[j]);
    return Sequence(std::move(out));
}

ExtremalResult max_W(const MultisetSpec& ms) {
    SplitSpec split = thm2_split(ms);
    ExtremalResult res;
    res.family = "max_W";
    res.witness = valley(ms, split);
    res.value = continuant(res.witness);
    std::string l, r;
    for (std::size_t j = 0; j < split.l.size(); ++j) {
        if (j) {
            l += ',';
            r += ',';
        }
        l += i2s(split.l[j]);
        r += i2s(split.r[j]);
    }
    res.params.emplace_back("l", l);
    res.params.emplace_back("r", r);
    return res;
}

SortedViews::SortedViews(const MultisetSpec& ms)
    : b_(ms.ascending()), c_(ms.descending()) {}

Elem SortedViews::n_of(std::int64_t j) const {
    if (j < 0 || j >= b_.size()) throw domain_error("SortedViews: n index out of range");
    return j % 2 == 0 ? b_[static_cast<std::size_t>(j)] : c_.at1(j);
}

Elem SortedViews::m_of(std::int64_t nu) const {
    if (nu < 1 || nu > b_.size()) throw domain_error("SortedViews: m index out of range");
    return nu % 2 == 0 ? c_.at1(nu) : b_[static_cast<std::size_t>(nu)];
}

Sequence zigzag(const MultisetSpec& ms) {
    SortedViews views(ms);
    const std::int64_t nu = views.t_plus() - 1;
    const std::int64_t mu = views.t_minus();
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(ms.total()));
    for (std::int64_t j = 0; j <= nu; ++j) out.push_back(views.n_of(j));
    for (std::int64_t q = mu; q >= 1; --q) out.push_back(views.m_of(q));
    return Sequence(std::move(out));
}

ExtremalResult min_W(const MultisetSpec& ms) {
    ExtremalResult res;
    res.family = "min_W";
    res.witness = zigzag(ms);
    res.value = continuant(res.witness);
    res.params.emplace_back("t", i2s(ms.total()));
    return res;
}

ExtremalResult max_Un(Elem S) {
    if (S < 1) throw domain_error("max_Un: S must be >= 1");
    ExtremalResult res;
    res.family = "max_Un";
    res.witness = Sequence::repeated(1, S);
    res.value = continuant(res.witness);
    res.params.emplace_back("S", i2s(S));
    return res;
}

Thm5Params solve_thm5(Elem S, std::int64_t t) {
    if (t < 2 || t > S) throw domain_error("solve_thm5: requires 2 <= t <= S");
    Thm5Params p;
    p.h1 = S / t;
    p.h2 = p.h1 + 1;
    p.d = S % t;
    p.c = t - p.d;
    return p;
}

ExtremalResult max_USt(Elem S, std::int64_t t) {
    Thm5Params p = solve_thm5(S, t);
    ExtremalResult res;
    res.family = "max_USt";
    if (p.d == 0) {
        res.witness = Sequence::repeated(p.h1, t);
    } else {
        res.witness = Sequence{p.h2}
                          .concat(Sequence::repeated(p.h1, p.c))
                          .concat(Sequence::repeated(p.h2, p.d - 1));
    }
    res.value = continuant(res.witness);
    res.params.emplace_back("h1", i2s(p.h1));
    res.params.emplace_back("h2", i2s(p.h2));
    res.params.emplace_back("c", i2s(p.c));
    res.params.emplace_back("d", i2s(p.d));
    return res;
}

Sequence build_N(Elem n, Elem z, std::int64_t x) {
    if (n < 1 || z < 1 || z > n) throw domain_error("build_N: requires 1 <= z <= n");
    if (x >= 0) return Sequence::repeated(n, x).concat(Sequence{z});
    return Sequence::repeated(1, -1 - x).concat(Sequence{z}).concat(Sequence{1});
}

Sequence build_T(const TzParams& params) {
    if (params.m < 0) throw domain_error("build_T: m must be >= 0");
    const std::int64_t m_minus = params.m / 2;
    const std::int64_t m_plus = params.m - m_minus;
    std::vector<Elem> out;
    for (std::int64_t i = 0; i < m_plus; ++i) {
        out.push_back(1);
        out.push_back(params.n);
    }
    Sequence center = build_N(params.n, params.z, params.x);
    out.insert(out.end(), center.begin(), center.end());
    for (std::int64_t i = 0; i < m_minus; ++i) {
        out.push_back(params.n);
        out.push_back(1);
    }
    return Sequence(std::move(out));
}

TzParams solve_thm6(Elem S, std::int64_t t, Elem n) {
    if (n < 2) throw domain_error("solve_thm6: requires n >= 2");
    if (t < 2 || S < t || S > n * t) throw domain_error("solve_thm6: requires 2 <= t <= S <= n*t");
    if (S == n * t) return TzParams{n, n, 0, t - 1}; // unique member (n^t)

    std::int64_t r = mod_floor(S - t + 1, n - 1);
    const Elem z = r == 0 ? n - 1 : r;
    const std::int64_t x = 2 * (S - t + 1 - z) / (n - 1) + 1 - t;
    const std::int64_t m = (t - (x < 0 ? -x : x) - 1) / 2;
    TzParams params{n, z, m, x};

    // Exactly one of the two defining systems must hold.
    const std::int64_t ax = x < 0 ? -x : x;
    if (m < 0 || (t - ax - 1) % 2 != 0) throw std::logic_error("solve_thm6: inconsistent m");
    const std::int64_t sum = x >= 0 ? m * (n + 1) + n * x + z : m * (n + 1) - x + z;
    const std::int64_t len = 2 * m + ax + 1;
    if (sum != S || len != t) throw std::logic_error("solve_thm6: system not satisfied");
    return params;
}

ExtremalResult min_UStn(Elem S, std::int64_t t, Elem n) {
    if (n < 1) throw domain_error("min_UStn: requires n >= 1");
    if (n == 1) {
        if (S != t || t < 2) throw domain_error("min_UStn: U(S,t,1) is empty unless S == t");
        ExtremalResult res;
        res.family = "min_UStn";
        res.witness = Sequence::repeated(1, t);
        res.value = continuant(res.witness);
        res.params.emplace_back("degenerate", "n=1");
        return res;
    }
    TzParams params = solve_thm6(S, t, n);
    ExtremalResult res;
    res.family = "min_UStn";
    res.witness = build_T(params);
    res.value = continuant(res.witness);
    res.params.emplace_back("z", i2s(params.z));
    res.params.emplace_back("m", i2s(params.m));
    res.params.emplace_back("x", i2s(params.x));
    return res;
}

std::pair<Elem, Elem> S0_S1(Elem S, Elem n) {
    if (S < 1 || n < 1) throw domain_error("S0_S1: requires S, n >= 1");
    const Elem s0 = mod_floor(S - 1, n + 1) + 1;
    const Elem s1 = mod_floor(S, n);
    return {s0, s1};
}

std::vector<Elem> P_of_S(Elem S, Elem n) {
    if (n < 2) throw domain_error("P_of_S: requires n >= 2");
    if (S < 1) throw domain_error("P_of_S: requires S >= 1");
    auto [s0, s1] = S0_S1(S, n);
    std::vector<Elem> out;
    auto push_range = [&](Elem lo, Elem hi) {
        for (Elem z = std::max<Elem>(lo, 1); z <= std::min<Elem>(hi, n - 1); ++z)
            out.push_back(z);
    };
    if (S >= n * n - 1) {
        push_range(1, n - 1);
    } else if (s0 <= s1) {
        push_range(s0, s1);
    } else {
        push_range(1, s1);
        push_range(s0, n - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool sylvester_representable(Elem T, Elem n) {
    if (T < 0 || n < 2) throw domain_error("sylvester_representable: requires T >= 0, n >= 2");
    const Elem frobenius = n * n - n - 1;
    if (T > frobenius) return true;
    if (T == frobenius) return false;
    return floor_div(T, n) - floor_div(T - 1, n + 1) == 1;
}

std::optional<TzParams> solve_thm7(Elem S, Elem n, Elem z) {
    if (n < 2) throw domain_error("solve_thm7: requires n >= 2");
    auto p = P_of_S(S, n);
    if (std::find(p.begin(), p.end(), z) == p.end())
        throw domain_error("solve_thm7: z not in P(S)");
    const std::int64_t x = mod_floor(z - S, n + 1);
    const std::int64_t m = (S - z - n * x) / (n + 1);
    if ((S - z - n * x) % (n + 1) != 0) throw std::logic_error("solve_thm7: non-integral m");
    if (m < 1) return std::nullopt;
    return TzParams{n, z, m, x};
}

ExtremalResult min_Un(Elem S, Elem n) {
    if (n < 2) throw domain_error("min_Un: requires n >= 2");
    if (S < 2 * n + 2) throw domain_error("min_Un: requires S >= 2n+2");
    ExtremalResult res;
    res.family = "min_Un";
    bool have = false;
    std::string z_list;
    for (Elem z : P_of_S(S, n)) {
        auto params = solve_thm7(S, n, z);
        if (!params) continue;
        Sequence witness = build_T(*params);
        BigInt value = continuant(witness);
        if (!have || value < res.value) {
            res.witness = witness;
            res.value = value;
            res.tie_witnesses.clear();
            res.tie_witnesses.push_back(witness);
            z_list = i2s(z);
            res.params.clear();
            res.params.emplace_back("z", i2s(params->z));
            res.params.emplace_back("m", i2s(params->m));
            res.params.emplace_back("x", i2s(params->x));
            have = true;
        } else if (value == res.value) {
            res.tie_witnesses.push_back(witness);
            z_list += "," + i2s(z);
        }
    }
    if (!have) throw infeasible_error("min_Un: P*(S) is empty");
    res.params.emplace_back("tie_z", z_list);
    return res;
}

} // namespace contx
