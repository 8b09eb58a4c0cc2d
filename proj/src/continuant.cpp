#include "contx/continuant.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace contx {

ContinuantPair continuant_pair(const Sequence& seq) {
    // (p, q) = (<a_1..a_j>, <a_1..a_{j-1}>), advanced by the recurrence
    // <a_1..a_{j+1}> = a_{j+1} <a_1..a_j> + <a_1..a_{j-1}>.
    ContinuantPair pair;
    for (Elem a : seq) {
        BigInt next = a * pair.full + pair.truncated;
        pair.truncated = pair.full;
        pair.full = std::move(next);
    }
    return pair;
}

BigInt continuant(const Sequence& seq) { return continuant_pair(seq).full; }

BigInt split_identity_check(const Sequence& left, const Sequence& right) {
    // <left minus last> and <right minus first> follow the pair convention:
    // 0 when the side itself is empty, <empty> = 1 when it is a singleton.
    BigInt left_trunc = continuant_pair(left).truncated;
    BigInt right_trunc = right.empty() ? BigInt(0) : continuant(right.drop_first());
    return continuant(left) * continuant(right) + left_trunc * right_trunc;
}

Rational cf_value(const Sequence& seq, Elem leading) {
    if (leading < 0) throw domain_error("cf_value: leading term must be >= 0");
    if (seq.empty()) return Rational(BigInt(leading), BigInt(1));
    // [a0; s] = a0 + <s_2..s_t>/<s_1..s_t>
    BigInt den = continuant(seq);
    BigInt num = continuant(seq.drop_first()) + leading * den;
    return Rational(num, den);
}

Rational cf0(const Sequence& seq) { return cf_value(seq, 0); }

namespace {

// Orbit moves: reversal, unit extraction at the left end in both directions,
// and the mirrored moves at the right end. All preserve the continuant.
std::vector<std::vector<Elem>> orbit_moves(const std::vector<Elem>& s) {
    std::vector<std::vector<Elem>> out;
    const std::size_t t = s.size();
    out.emplace_back(s.rbegin(), s.rend());
    if (s[0] >= 2) { // (a_1+1, rest) -> (1, a_1, rest)
        std::vector<Elem> v;
        v.reserve(t + 1);
        v.push_back(1);
        v.push_back(s[0] - 1);
        v.insert(v.end(), s.begin() + 1, s.end());
        out.push_back(std::move(v));
    }
    if (t >= 2 && s[0] == 1) { // (1, a_1, rest) -> (a_1+1, rest)
        std::vector<Elem> v;
        v.reserve(t - 1);
        v.push_back(s[1] + 1);
        v.insert(v.end(), s.begin() + 2, s.end());
        out.push_back(std::move(v));
    }
    if (s[t - 1] >= 2) {
        std::vector<Elem> v(s.begin(), s.end());
        v[t - 1] -= 1;
        v.push_back(1);
        out.push_back(std::move(v));
    }
    if (t >= 2 && s[t - 1] == 1) {
        std::vector<Elem> v(s.begin(), s.end() - 1);
        v[t - 2] += 1;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

std::vector<Sequence> trivial_orbit(const Sequence& seq) {
    if (seq.empty()) throw domain_error("trivial_orbit: empty sequence");
    std::set<std::vector<Elem>> seen;
    std::queue<std::vector<Elem>> todo;
    seen.insert(seq.elems());
    todo.push(seq.elems());
    while (!todo.empty()) {
        std::vector<Elem> cur = std::move(todo.front());
        todo.pop();
        for (auto& next : orbit_moves(cur)) {
            if (seen.insert(next).second) todo.push(std::move(next));
        }
        if (seen.size() > 1000000) throw std::logic_error("trivial_orbit: orbit unexpectedly large");
    }
    std::vector<Sequence> out;
    out.reserve(seen.size());
    for (auto& v : seen) out.push_back(Sequence(v));
    return out;
}

Sequence unit_normal_form(const Sequence& seq) {
    auto orbit = trivial_orbit(seq);
    return *std::min_element(orbit.begin(), orbit.end());
}

bool trivially_equal(const Sequence& a, const Sequence& b) {
    return unit_normal_form(a) == unit_normal_form(b);
}

} // namespace contx
