#include "contx/grids.hpp"

#include "contx/continuant.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <utility>

namespace contx {

namespace {

void multisets_rec(const std::vector<Elem>& values, std::size_t from, std::int64_t f_left,
                   std::int64_t t_left, std::vector<Elem>& vbuf, std::vector<std::int64_t>& mbuf,
                   std::vector<MultisetSpec>& out) {
    if (!vbuf.empty()) out.emplace_back(vbuf, mbuf);
    if (f_left == 0) return;
    for (std::size_t i = from; i < values.size(); ++i) {
        for (std::int64_t p = 1; p <= t_left; ++p) {
            vbuf.push_back(values[i]);
            mbuf.push_back(p);
            multisets_rec(values, i + 1, f_left - 1, t_left - p, vbuf, mbuf, out);
            vbuf.pop_back();
            mbuf.pop_back();
        }
    }
}

// Deterministic parallel map: results land by index regardless of timing.
template <typename In, typename Fn>
std::vector<GridPoint> parallel_points(const std::vector<In>& inputs, int jobs, const Fn& fn) {
    auto timed = [&fn](const In& input) {
        auto start = std::chrono::steady_clock::now();
        GridPoint p = fn(input);
        p.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        return p;
    };
    std::vector<GridPoint> out(inputs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = timed(inputs[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= inputs.size()) return;
            out[i] = timed(inputs[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

GridReport finish(std::string family, std::string ranges, std::vector<GridPoint> points,
                  const GridOptions& opt) {
    if (opt.inject_mismatch && !points.empty()) {
        GridPoint& p = points.front();
        p.formula_value += "1"; // deliberately wrong digit string
        p.match = false;
    }
    GridReport report;
    report.family = std::move(family);
    report.ranges = std::move(ranges);
    report.points = std::move(points);
    for (const auto& p : report.points)
        if (!p.match || !p.witness_in_set) ++report.mismatches;
    return report;
}

bool same_multiset(const Sequence& a, const Sequence& b) {
    std::vector<Elem> x = a.elems(), y = b.elems();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

} // namespace

std::vector<MultisetSpec> multiset_grid(std::int64_t f_max, Elem h_max, std::int64_t t_max) {
    std::vector<Elem> values;
    for (Elem h = 1; h <= h_max; ++h) values.push_back(h);
    std::vector<MultisetSpec> out;
    std::vector<Elem> vbuf;
    std::vector<std::int64_t> mbuf;
    multisets_rec(values, 0, f_max, t_max, vbuf, mbuf, out);
    return out;
}

namespace {

GridReport permutation_family_grid(const char* family, Elem h_max, std::int64_t f_max,
                                   std::int64_t t_max, const GridOptions& opt,
                                   bool first_fixed, bool maximum,
                                   const std::function<ExtremalResult(const MultisetSpec&)>& formula) {
    auto grid = multiset_grid(f_max, h_max, t_max);
    auto points = parallel_points(grid, opt.jobs, [&](const MultisetSpec& ms) {
        ExtremalResult res = formula(ms);
        auto req = first_fixed ? EnumerationRequest::v(ms) : EnumerationRequest::w(ms);
        BruteForceReport oracle = brute_force(req);
        GridPoint p;
        p.params = ms.str();
        p.formula_value = to_decimal(res.value);
        p.oracle_value = to_decimal(maximum ? oracle.max_value : oracle.min_value);
        p.match = p.formula_value == p.oracle_value;
        p.witness = res.witness;
        p.witness_in_set = same_multiset(res.witness, ms.ascending()) &&
                           (!first_fixed || res.witness.at1(1) == ms.values().front());
        return p;
    });
    return finish(family,
                  "h<=" + std::to_string(h_max) + " f<=" + std::to_string(f_max) +
                      " t<=" + std::to_string(t_max),
                  std::move(points), opt);
}

} // namespace

GridReport verify_thm1(Elem h_max, std::int64_t f_max, std::int64_t t_max, GridOptions opt) {
    return permutation_family_grid("thm1", h_max, f_max, t_max, opt, true, true, max_V);
}

GridReport verify_thm2(Elem h_max, std::int64_t f_max, std::int64_t t_max, GridOptions opt) {
    return permutation_family_grid("thm2", h_max, f_max, t_max, opt, false, true, max_W);
}

GridReport verify_thm3(Elem h_max, std::int64_t f_max, std::int64_t t_max, GridOptions opt) {
    return permutation_family_grid("thm3", h_max, f_max, t_max, opt, false, false, min_W);
}

GridReport verify_thm4(Elem S_max, Elem n_max, GridOptions opt) {
    std::vector<std::pair<Elem, Elem>> params;
    for (Elem S = 1; S <= S_max; ++S)
        for (Elem n = 2; n <= n_max; ++n) params.emplace_back(S, n);
    auto points = parallel_points(params, opt.jobs, [&](const std::pair<Elem, Elem>& sn) {
        auto [S, n] = sn;
        ExtremalResult res = max_Un(S);
        BruteForceReport oracle = brute_force(EnumerationRequest::u_ns(S, n));
        GridPoint p;
        p.params = "S=" + std::to_string(S) + " n=" + std::to_string(n);
        p.formula_value = to_decimal(res.value);
        p.oracle_value = to_decimal(oracle.max_value);
        p.match = p.formula_value == p.oracle_value;
        p.witness = res.witness;
        p.witness_in_set = res.witness.sum() == S;
        return p;
    });
    return finish("thm4", "S<=" + std::to_string(S_max) + " 2<=n<=" + std::to_string(n_max),
                  std::move(points), opt);
}

GridReport verify_thm5(Elem S_max, GridOptions opt) {
    std::vector<std::pair<Elem, std::int64_t>> params;
    for (Elem S = 2; S <= S_max; ++S)
        for (std::int64_t t = 2; t <= S; ++t) params.emplace_back(S, t);
    auto points = parallel_points(params, opt.jobs, [&](const std::pair<Elem, std::int64_t>& st) {
        auto [S, t] = st;
        ExtremalResult res = max_USt(S, t);
        BruteForceReport oracle = brute_force(EnumerationRequest::u_st(S, t));
        GridPoint p;
        p.params = "S=" + std::to_string(S) + " t=" + std::to_string(t);
        p.formula_value = to_decimal(res.value);
        p.oracle_value = to_decimal(oracle.max_value);
        p.match = p.formula_value == p.oracle_value;
        p.witness = res.witness;
        p.witness_in_set = res.witness.sum() == S && res.witness.size() == t;
        return p;
    });
    return finish("thm5", "2<=t<=S<=" + std::to_string(S_max), std::move(points), opt);
}

GridReport verify_thm6(Elem S_max, Elem n_max, GridOptions opt) {
    std::vector<std::array<std::int64_t, 3>> params;
    for (Elem n = 2; n <= n_max; ++n)
        for (std::int64_t t = 2; t <= S_max; ++t)
            for (Elem S = t; S <= std::min<Elem>(n * t, S_max); ++S)
                params.push_back({S, t, n});
    auto points = parallel_points(params, opt.jobs, [&](const std::array<std::int64_t, 3>& stn) {
        auto [S, t, n] = stn;
        ExtremalResult res = min_UStn(S, t, n);
        BruteForceReport oracle = brute_force(EnumerationRequest::u_stn(S, t, n));
        GridPoint p;
        p.params = "S=" + std::to_string(S) + " t=" + std::to_string(t) + " n=" + std::to_string(n);
        p.formula_value = to_decimal(res.value);
        p.oracle_value = to_decimal(oracle.min_value);
        p.match = p.formula_value == p.oracle_value;
        p.witness = res.witness;
        bool bounded = true;
        for (Elem e : res.witness) bounded = bounded && e <= n;
        p.witness_in_set = res.witness.sum() == S && res.witness.size() == t && bounded;
        return p;
    });
    return finish("thm6",
                  "2<=t<=S<=min(nt," + std::to_string(S_max) + ") 2<=n<=" + std::to_string(n_max),
                  std::move(points), opt);
}

GridReport verify_thm7(Elem S_max, Elem n_max, GridOptions opt) {
    std::vector<std::pair<Elem, Elem>> params;
    for (Elem n = 2; n <= n_max; ++n)
        for (Elem S = 2 * n + 2; S <= S_max; ++S) params.emplace_back(S, n);
    auto points = parallel_points(params, opt.jobs, [&](const std::pair<Elem, Elem>& sn) {
        auto [S, n] = sn;
        ExtremalResult res = min_Un(S, n);
        BruteForceReport oracle = brute_force(EnumerationRequest::u_ns(S, n));
        GridPoint p;
        p.params = "S=" + std::to_string(S) + " n=" + std::to_string(n);
        p.formula_value = to_decimal(res.value);
        p.oracle_value = to_decimal(oracle.min_value);
        p.match = p.formula_value == p.oracle_value;
        p.witness = res.witness;
        bool bounded = true;
        for (Elem e : res.witness) bounded = bounded && e <= n;
        p.witness_in_set = res.witness.sum() == S && bounded;
        return p;
    });
    return finish("thm7",
                  "2n+2<=S<=" + std::to_string(S_max) + " 2<=n<=" + std::to_string(n_max),
                  std::move(points), opt);
}

} // namespace contx
