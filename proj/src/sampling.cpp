#include "polydyn/sampling.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

namespace polydyn {

std::vector<Complex> sample_polydisk_point(uint64_t seed, uint64_t index, int dim,
                                           double radius) {
    // splitmix-style mixing keeps streams for different indices independent
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> p;
    p.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        double rho = radius * std::sqrt(unit(rng));
        double theta = 2.0 * M_PI * unit(rng);
        p.emplace_back(rho * std::cos(theta), rho * std::sin(theta));
    }
    return p;
}

int thread_count() {
    const char* env = std::getenv("POLYDYN_THREADS");
    long requested = 0;
    if (env && *env) requested = std::strtol(env, nullptr, 10);
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (requested <= 0) return static_cast<int>(hw);
    return static_cast<int>(requested);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int threads = std::min(thread_count(), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next(0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace polydyn
