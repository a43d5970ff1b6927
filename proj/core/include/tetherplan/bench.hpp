#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetherplan/generator.hpp"

namespace tetherplan {

struct BenchRow {
    std::size_t size = 0;
    std::string method;  // "linear" | "bruteforce"
    std::uint64_t median_ns = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::string to_csv() const;  // header "size,method,median_ns"
};

// Per size: median wall time over `repeats` runs of the linear solve plus
// greedy path construction on a deterministic instance stream; sizes up to
// 5000 also time the quadratic slope scan. Rows are ordered by
// (size, method), independent of measurement.
BenchReport run_bench(const std::vector<std::size_t>& sizes,
                      std::size_t repeats, std::uint64_t seed);

}  // namespace tetherplan
