#include "tetherplan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "tetherplan/minlink.hpp"

namespace tetherplan {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return z ^ (z >> 27);
}

std::uint64_t median(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

std::string BenchReport::to_csv() const {
    std::ostringstream os;
    os << "size,method,median_ns\n";
    for (const BenchRow& r : rows)
        os << r.size << ',' << r.method << ',' << r.median_ns << '\n';
    return os.str();
}

BenchReport run_bench(const std::vector<std::size_t>& sizes,
                      std::size_t repeats, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    BenchReport report;
    if (repeats == 0) return report;

    std::vector<std::size_t> ordered = sizes;
    std::sort(ordered.begin(), ordered.end());

    for (std::size_t size : ordered) {
        std::vector<std::uint64_t> linear_ns, brute_ns;
        for (std::size_t rep = 0; rep < repeats; ++rep) {
            GenConfig cfg;
            cfg.n_segments = size;
            cfg.alpha = Rat(1);
            cfg.vertical_budget = Rat(2);
            cfg.seed = mix(seed, mix(size, rep));
            Instance inst = gen_instance(cfg);
            Corridor c = build_corridor(inst);

            auto t0 = clock::now();
            SlopeSolution sol = min_slope_linear(c);
            BetaPath path = build_min_link_path(c, sol);
            auto t1 = clock::now();
            linear_ns.push_back(static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                    .count()));
            // keep the optimizer honest
            if (path.links() == 0) std::abort();

            if (size <= 5000) {
                auto b0 = clock::now();
                SlopeSolution bf = min_slope_bruteforce(c);
                auto b1 = clock::now();
                brute_ns.push_back(static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(b1 -
                                                                         b0)
                        .count()));
                if (bf.beta_star != sol.beta_star) std::abort();
            }
        }
        report.rows.push_back({size, "linear", median(linear_ns)});
        if (!brute_ns.empty())
            report.rows.push_back({size, "bruteforce", median(brute_ns)});
    }
    return report;
}

}  // namespace tetherplan
