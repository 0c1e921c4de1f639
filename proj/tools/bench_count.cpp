// Point-counting throughput: evaluations per second per worker.
#include "supertube/zeta/count.hpp"

#include <chrono>
#include <cstdio>
#include <thread>

using namespace supertube::zeta;

int main(int argc, char** argv) {
    const unsigned workers = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 1;
    struct Case {
        const char* name;
        PrimePolyVariety v;
        int k;
    };
    const Case cases[] = {
        {"x^2+y^2-1 / F_2^6", PrimePolyVariety(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}}), 6},
        {"x^2+y^2-1 / F_3^6", PrimePolyVariety(3, 2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}}), 6},
        {"y^2-x^3-x-1 / F_5^6", PrimePolyVariety(5, 2, {{{0, 2}, 1}, {{3, 0}, -1}, {{1, 0}, -1}, {{0, 0}, -1}}), 6},
        {"x^3+y^3+z^3 / F_2^4", PrimePolyVariety(2, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}}), 4},
        {"x^5+x+1 / F_5^8 (no tables)", PrimePolyVariety(5, 1, {{{5}, 1}, {{1}, 1}, {{0}, 1}}), 8},
        {"x^7+x+1 / F_2^18 (no tables)", PrimePolyVariety(2, 1, {{{7}, 1}, {{1}, 1}, {{0}, 1}}), 18},
    };
    std::printf("%-32s %14s %12s %10s %16s\n", "case", "evaluations", "count", "seconds", "evals/s/worker");
    for (const auto& c : cases) {
        CountOptions opts;
        opts.workers = workers;
        const auto t0 = std::chrono::steady_clock::now();
        const auto n = count_points(c.v, c.k, opts);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double evals = static_cast<double>(count_cost(c.v, c.k));
        std::printf("%-32s %14.0f %12llu %10.3f %16.3g\n", c.name, evals, static_cast<unsigned long long>(n), secs,
                    evals / secs / workers);
        std::fflush(stdout);
    }
    return 0;
}
