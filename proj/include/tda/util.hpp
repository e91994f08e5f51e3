#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tda {

// Stateless mixer; all RNG streams in the project are derived from one
// master seed through these helpers so stages can be re-run independently.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t derive_seed(uint64_t master, std::string_view tag) {
    return splitmix64(master ^ fnv1a64(tag));
}

inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return splitmix64(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

// q-th percentile in [0,100] with linear interpolation between order
// statistics (the same rule everywhere a percentile is taken).
double percentile(std::vector<double> values, double q);

struct column_moments {
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;    // population
    double skewness = 0.0;  // 0 on constant columns
    double kurtosis = 0.0;  // excess, 0 on constant columns
};

column_moments moments(const std::vector<double>& values);

double mean_of(const std::vector<double>& values);
double median_of(std::vector<double> values);

// Runs fn(0..n-1); items must be independent. Results may be written by
// index, so the outcome does not depend on the thread count.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace tda
