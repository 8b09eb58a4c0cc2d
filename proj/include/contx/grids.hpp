#pragma once

#include "contx/extremal.hpp"
#include "contx/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace contx {

// Every multiset with at most f_max distinct values drawn from 1..h_max and
// total multiplicity at most t_max, in deterministic order.
std::vector<MultisetSpec> multiset_grid(std::int64_t f_max, Elem h_max, std::int64_t t_max);

struct GridPoint {
    std::string params;
    std::string formula_value;
    std::string oracle_value;
    bool match = false;
    bool witness_in_set = false;
    Sequence witness;
    std::int64_t runtime_us = 0;
};

struct GridReport {
    std::string family;
    std::string ranges; // the parameter ranges the grid covered
    std::vector<GridPoint> points;
    std::int64_t mismatches = 0;
};

struct GridOptions {
    int jobs = 1;
    // Test hook: corrupt the formula value at one grid point so the
    // mismatch path can be exercised.
    bool inject_mismatch = false;
};

GridReport verify_thm1(Elem h_max, std::int64_t f_max, std::int64_t t_max, GridOptions opt = {});
GridReport verify_thm2(Elem h_max, std::int64_t f_max, std::int64_t t_max, GridOptions opt = {});
GridReport verify_thm3(Elem h_max, std::int64_t f_max, std::int64_t t_max, GridOptions opt = {});
GridReport verify_thm4(Elem S_max, Elem n_max, GridOptions opt = {});
GridReport verify_thm5(Elem S_max, GridOptions opt = {});
GridReport verify_thm6(Elem S_max, Elem n_max, GridOptions opt = {});
GridReport verify_thm7(Elem S_max, Elem n_max, GridOptions opt = {});

} // namespace contx
