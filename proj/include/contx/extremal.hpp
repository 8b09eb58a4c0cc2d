#pragma once

#include "contx/bigint.hpp"
#include "contx/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace contx {

// Values h_1 < ... < h_f with multiplicities p_1, ..., p_f. Defines the
// permutation families W_f (all arrangements) and V_f (arrangements whose
// first element is h_1).
class MultisetSpec {
public:
    MultisetSpec(std::vector<Elem> values, std::vector<std::int64_t> mults);
    static MultisetSpec from_sequence(const Sequence& seq);

    const std::vector<Elem>& values() const { return values_; }
    const std::vector<std::int64_t>& mults() const { return mults_; }
    std::int64_t distinct() const { return static_cast<std::int64_t>(values_.size()); }
    std::int64_t total() const; // t = sum of multiplicities

    Sequence ascending() const;  // b_0 <= ... <= b_{t-1}
    Sequence descending() const; // c_1 >= ... >= c_t

    std::string str() const;

private:
    std::vector<Elem> values_;
    std::vector<std::int64_t> mults_;
};

// Per-value split p_j = l_j + r_j describing the valley arrangement D_f:
// values descending with multiplicities l_j, then ascending with r_j.
struct SplitSpec {
    std::vector<std::int64_t> l;
    std::vector<std::int64_t> r;
};

// The two sorted arrangements of a multiset and their interleavings:
// b_0 <= ... <= b_{t-1}, c_1 >= ... >= c_t, n_j = b_j for even j and c_j
// for odd j, m_nu = c_nu for even nu and b_nu for odd nu.
class SortedViews {
public:
    explicit SortedViews(const MultisetSpec& ms);

    const Sequence& b() const { return b_; }
    const Sequence& c() const { return c_; }
    Elem n_of(std::int64_t j) const;  // 0 <= j <= t-1
    Elem m_of(std::int64_t nu) const; // 1 <= nu <= t
    std::int64_t t_minus() const { return b_.size() / 2; }
    std::int64_t t_plus() const { return b_.size() - t_minus(); }

private:
    Sequence b_;
    Sequence c_;
};

// Parameters of the minimal-continuant template T_z(m, x): alternating 1,n
// wings around a center N_z(x) of n-repeats (x >= 0) or 1-repeats (x < 0)
// plus the residue element z.
struct TzParams {
    Elem n = 0;
    Elem z = 0;
    std::int64_t m = 0;
    std::int64_t x = 0;
};

struct ExtremalResult {
    std::string family;
    Sequence witness;
    BigInt value;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Sequence> tie_witnesses;
};

// Maximum over V_f: the nondecreasing arrangement (b_0, ..., b_{t-1}).
ExtremalResult max_V(const MultisetSpec& ms);

SplitSpec thm2_split(const MultisetSpec& ms);
Sequence valley(const MultisetSpec& ms, const SplitSpec& split);

// Maximum over W_f: the valley D_f with l_j = 1 for j == f (mod 2) and
// r_j = 1 for j == f-1 (mod 2), the partner taking p_j - 1.
ExtremalResult max_W(const MultisetSpec& ms);

// The zigzag arrangement (n_0, ..., n_nu, m_mu, ..., m_1) interleaving the
// sorted views.
Sequence zigzag(const MultisetSpec& ms);

// Minimum over W_f: the zigzag.
ExtremalResult min_W(const MultisetSpec& ms);

// Maximum over U_n(S) for every n: the all-ones sequence, value F_{S+1}.
ExtremalResult max_Un(Elem S);

struct Thm5Params {
    Elem h1 = 0;
    Elem h2 = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
};

// Unique solution of c*h1 + d*h2 = S, c + d = t, h2 = h1 + 1, d < t.
Thm5Params solve_thm5(Elem S, std::int64_t t);

// Maximum over U(S, t): (h1^t) when t | S, else (h2, h1^c, h2^{d-1}).
ExtremalResult max_USt(Elem S, std::int64_t t);

// N_z(x): x >= 0 -> (n^x, z); x < 0 -> (1^{-1-x}, z, 1).
Sequence build_N(Elem n, Elem z, std::int64_t x);

// T_z(m, x): 2*ceil(m/2) leading elements (1,n,...), N_z(x), then
// 2*floor(m/2) trailing elements (...,n,1).
Sequence build_T(const TzParams& params);

// Diophantine parameters for the minimum over U(S, t, n); the degenerate
// S = nt case is encoded as z = n, x = t-1, m = 0 (the all-n sequence).
TzParams solve_thm6(Elem S, std::int64_t t, Elem n);

// Minimum over U(S, t, n).
ExtremalResult min_UStn(Elem S, std::int64_t t, Elem n);

std::pair<Elem, Elem> S0_S1(Elem S, Elem n);

// Residues z in {1..n-1} for which S - z is a sum of terms n and n+1.
std::vector<Elem> P_of_S(Elem S, Elem n);

// Whether T is a sum of terms each equal to n or n+1 (the empty sum
// represents 0).
bool sylvester_representable(Elem T, Elem n);

// Unique (m, x) with m(n+1) + nx + z = S, m >= 0, 0 <= x <= n; nullopt when
// m < 1 (such z are excluded from P*(S)).
std::optional<TzParams> solve_thm7(Elem S, Elem n, Elem z);

// Minimum over U_n(S) for S >= 2n+2: min over z in P*(S) of T_z(m(z), x(z)).
// Ties resolved toward the smallest z; every tying witness is reported.
ExtremalResult min_Un(Elem S, Elem n);

} // namespace contx
