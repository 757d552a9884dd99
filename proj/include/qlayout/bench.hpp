#pragma once

#include <string>
#include <vector>

#include "qlayout/graph.hpp"

namespace qlayout {

double now_seconds();

/// Least-squares slope of log(time) against log(size).
double fit_exponent(const std::vector<double>& sizes, const std::vector<double>& times);

struct BenchRow {
    std::string name;
    int n = 0;
    double prepare_s = 0, layout_s = 0, collapse_s = 0, total_s = 0;
    int q1 = 0, q_final = 0;
};

/// Full pipeline over square grids of the given side lengths.
std::vector<BenchRow> bench_grid_series(const std::vector<int>& sides, int repeats = 1);

/// Direct matched-tree layout over instances of the given heights.
std::vector<BenchRow> bench_dm_series(const std::vector<int>& heights, int delta,
                                      int repeats = 3);

struct BitGrowthRow {
    int n = 0;
    size_t max_label_bits = 0;
};

/// Largest label bit-length over the path-plus-chord family: weights grow
/// geometrically with the layer of the rerouted level edge.
std::vector<BitGrowthRow> bench_path_chord_bits(const std::vector<int>& sizes);

std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace qlayout
