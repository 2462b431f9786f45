#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qpm/braidword.hpp"

namespace qpm {

/// Deterministic random source. mt19937_64 has a fully specified output
/// sequence; the rejection sampler below avoids std::uniform_int_distribution,
/// whose draw sequence varies across standard libraries.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform value in [0, bound), bound >= 1. Rejection keeps the result
    /// unbiased: draws below 2^64 mod bound are discarded.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform value in [lo, hi], inclusive on both ends.
    int in_range(int lo, int hi);

  private:
    std::mt19937_64 engine_;
};

struct GenOptions {
    int strand_count = 4;
    int count = 50;
    int min_len = 8;
    int max_len = 20;
    bool band_letters = false;
    std::uint64_t seed = 42;
};

/// Seeded random family of non-split words. Per word: one length draw in
/// [min_len, max_len], then per letter either one generator draw in
/// [1, n-1] or, in band mode, the i draw in [1, n-1] followed by the j draw
/// in [i+1, n]. Afterwards, for g = 1 .. n-1 in order, the band (g, g+1) is
/// appended whenever strands g and g+1 are still in different components;
/// the repair makes every word non-split and draws nothing.
std::vector<BandWord> generate_family(const GenOptions& options);

}  // namespace qpm
