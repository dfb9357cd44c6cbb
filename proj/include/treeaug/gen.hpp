#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treeaug/instance.hpp"

namespace treeaug {

// Deterministic across platforms: raw mt19937_64 words with multiply-shift
// range reduction (std distributions are implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  private:
    std::uint64_t state_;
};

struct SetCoverInstance {
    int elements = 0;                     // X = {1..n}
    std::vector<std::vector<int>> sets;   // 1-based element lists
    int budget = 0;                       // k
};

std::vector<std::string> validate_set_cover(const SetCoverInstance& sc);

// True iff some subcollection of size <= budget covers every element
// (exhaustive over subsets; the reduction's independent oracle).
bool set_cover_solvable(const SetCoverInstance& sc);

// The hardness gadget. Second component: the coverage threshold
// (k+1)n + 4m - k separating yes from no instances.
std::pair<Instance, long long> reduce_set_cover(const SetCoverInstance& sc);

// Uniform labeled arborescence plus independent edges with probability p.
Instance random_instance(int n, double p, std::uint64_t seed);

// rows x cols grid, BFS tree from the corner, rotation embedding included.
Instance grid_instance(int rows, int cols);

// Two root paths with random cross and within-arm edges.
Instance two_arm_instance(int n_l, int n_r, int m_cross, double p_back, std::uint64_t seed);

struct TightnessResult {
    Instance instance;
    Weight optimum;
    Weight better_of_two;
    double ratio = 1.0;  // optimum / better_of_two
};

// Searches instances with at most max_n nodes for a large gap between the
// optimum and the better canonical orientation. Ratios approach 2 as the
// budget grows.
TightnessResult search_tightness_family(int max_n, std::uint64_t seed = 1);

}  // namespace treeaug
