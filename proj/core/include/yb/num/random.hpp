#pragma once

#include <cstdint>
#include <random>

#include "yb/num/matrix.hpp"

namespace yb::num {

// Seeded sampler of generic complex points exp(U[-s,s] + i U[-s,s]).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    cplx box(double s) { return {uniform(-s, s), uniform(-s, s)}; }
    cplx unit_log(double s = 1.0) { return std::exp(box(s)); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace yb::num
