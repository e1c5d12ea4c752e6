#pragma once

#include <cstdint>
#include <stdexcept>

#include "approach/numeric.hpp"

namespace approach {

// Counter-based generator: each (seed, stage, role) triple names an
// independent stream, so player and adversary draws never share state and
// replicated runs are reproducible regardless of scheduling.
class StreamRng {
  public:
    enum class Role : uint64_t { Player = 1, Adversary = 2, Exploration = 3, Generic = 4 };

    StreamRng(uint64_t seed, uint64_t stage, Role role)
        : key_(mix(mix(mix(seed) ^ 0x9e3779b97f4a7c15ull) + stage) ^ static_cast<uint64_t>(role)) {}

    explicit StreamRng(uint64_t seed) : StreamRng(seed, 0, Role::Generic) {}

    uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Index i with probability w[i]/sum(w).
    size_t categorical(const Vec& w) {
        double total = 0.0;
        for (double x : w) total += x;
        if (total <= 0.0) throw std::invalid_argument("categorical: nonpositive weight vector");
        double u = next_double() * total;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            u -= w[i];
            if (u < 0.0) return i;
        }
        return w.empty() ? 0 : w.size() - 1;
    }

    size_t uniform_index(size_t n) { return static_cast<size_t>(next_u64() % n); }

    // Uniform point of the probability simplex (exponential spacings).
    Vec simplex_point(size_t n) {
        Vec w(n);
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double u = next_double();
            if (u <= 0.0) u = 1e-300;
            w[i] = -std::log(u);
            s += w[i];
        }
        for (size_t i = 0; i < n; ++i) w[i] /= s;
        return w;
    }

  private:
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace approach
