#include "qpm/generate.hpp"

#include <stdexcept>

#include "union_find.hpp"

namespace qpm {

std::uint64_t Prng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t draw = engine_();
    while (draw < threshold) draw = engine_();
    return draw % bound;
}

int Prng::in_range(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t width = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(below(width));
}

std::vector<BandWord> generate_family(const GenOptions& options) {
    if (options.strand_count < 2)
        throw std::invalid_argument("generation needs at least 2 strands");
    if (options.count < 0) throw std::invalid_argument("count must be non-negative");
    if (options.min_len < 0 || options.min_len > options.max_len)
        throw std::invalid_argument("length bounds must satisfy 0 <= min <= max");

    const int n = options.strand_count;
    Prng rng(options.seed);
    std::vector<BandWord> family;
    family.reserve(static_cast<std::size_t>(options.count));

    for (int w = 0; w < options.count; ++w) {
        const int length = rng.in_range(options.min_len, options.max_len);
        std::vector<Band> letters;
        letters.reserve(static_cast<std::size_t>(length));
        detail::UnionFind components(n);
        for (int t = 0; t < length; ++t) {
            int i;
            int j;
            if (options.band_letters) {
                i = rng.in_range(1, n - 1);
                j = rng.in_range(i + 1, n);
            } else {
                i = rng.in_range(1, n - 1);
                j = i + 1;
            }
            letters.emplace_back(i, j);
            components.unite(i, j);
        }
        for (int g = 1; g <= n - 1; ++g) {
            if (components.connected(g, g + 1)) continue;
            letters.emplace_back(g, g + 1);
            components.unite(g, g + 1);
        }
        family.emplace_back(n, std::move(letters));
    }
    return family;
}

}  // namespace qpm
