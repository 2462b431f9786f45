#include "qpm/minors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpm {
namespace {

int class_of(int generator, int modulus) { return (generator - 1) % modulus + 1; }

// First e*(n-1) letters form e copies of delta_n = s_1 .. s_{n-1}. For n = 1
// the prefix is empty and the check is vacuous.
bool has_delta_prefix(const BandWord& w, int exponent) {
    const int n = w.strand_count();
    const long long need = static_cast<long long>(exponent) * (n - 1);
    if (need > w.length()) return false;
    for (long long t = 0; t < need; ++t) {
        const Band& b = w.letters()[static_cast<std::size_t>(t)];
        const int expect = static_cast<int>(t % (n - 1)) + 1;
        if (b.i() != expect || b.j() != expect + 1) return false;
    }
    return true;
}

}  // namespace

int minimal_modulus(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("ratio must lie in (0, 1)");
    // The loop sidesteps the floating-point trap in floor(1/(1-r)): for
    // r = 0.9 it lands on 11, not 10.
    int n = 2;
    while (1.0 / n >= 1.0 - r) ++n;
    return n;
}

int choose_residue(const PositiveWord& w, int modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    if (!is_nonsplit(w.word()))
        throw std::invalid_argument("choose_residue requires a non-split word");
    std::vector<long long> counts(static_cast<std::size_t>(modulus) + 1, 0);
    for (int g : w.generators()) ++counts[static_cast<std::size_t>(class_of(g, modulus))];
    int residue = 1;
    for (int c = 2; c <= modulus; ++c) {
        if (counts[static_cast<std::size_t>(c)] < counts[static_cast<std::size_t>(residue)])
            residue = c;
    }
    return residue;
}

ReductionReport reduce_mod(const PositiveWord& w, int modulus, double r) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("ratio must lie in (0, 1)");
    if (1.0 / modulus >= 1.0 - r)
        throw std::invalid_argument("modulus too small for the requested ratio");
    if (!is_nonsplit(w.word()))
        throw std::invalid_argument("reduce_mod requires a non-split word");

    const int residue = choose_residue(w, modulus);
    const std::vector<int> gens = w.generators();

    std::vector<int> kept_positions;
    std::vector<int> kept_gens;
    kept_positions.reserve(gens.size());
    kept_gens.reserve(gens.size());
    std::vector<char> seen(static_cast<std::size_t>(w.strand_count()), 0);
    for (int p = 1; p <= static_cast<int>(gens.size()); ++p) {
        const int g = gens[static_cast<std::size_t>(p - 1)];
        if (class_of(g, modulus) == residue) {
            if (seen[static_cast<std::size_t>(g)]) continue;
            seen[static_cast<std::size_t>(g)] = 1;
        }
        kept_positions.push_back(p);
        kept_gens.push_back(g);
    }

    PositiveWord reduced(w.strand_count(), kept_gens);
    const int chi_source = euler_characteristic(w.word());
    const int chi_reduced = euler_characteristic(reduced.word());
    const bool ratio_ok = std::abs(chi_reduced) >= r * std::abs(chi_source);
    return ReductionReport{w,         modulus,    residue,     r,       std::move(kept_positions),
                           std::move(reduced), chi_source, chi_reduced, ratio_ok};
}

SummandTuple decompose_connected_sum(const ReductionReport& report) {
    const PositiveWord& w = report.reduced;
    const int n = w.strand_count();
    if (report.modulus < 1) throw std::invalid_argument("modulus must be at least 1");
    if (report.residue < 1 || report.residue > report.modulus)
        throw std::invalid_argument("residue out of range");

    const std::vector<int> gens = w.generators();
    std::vector<int> occurrences(static_cast<std::size_t>(n), 0);
    for (int g : gens) ++occurrences[static_cast<std::size_t>(g)];

    std::vector<int> cuts;
    for (int g = report.residue; g <= n - 1; g += report.modulus) {
        if (occurrences[static_cast<std::size_t>(g)] != 1)
            throw std::invalid_argument("cut generator s" + std::to_string(g) +
                                        " must occur exactly once");
        cuts.push_back(g);
    }

    // Strand blocks (c_t, c_{t+1}] with sentinels c_0 = 0 and c_{s+1} = n; the
    // cut letters themselves are dropped and each block is rebased to strand 1.
    std::vector<int> bounds;
    bounds.reserve(cuts.size() + 2);
    bounds.push_back(0);
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(n);

    SummandTuple tuple;
    tuple.cut_count = static_cast<int>(cuts.size());
    tuple.components.reserve(bounds.size() - 1);
    for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
        const int lo = bounds[t];
        const int hi = bounds[t + 1];
        std::vector<int> block;
        for (int g : gens) {
            if (g > lo && g < hi) block.push_back(g - lo);
        }
        tuple.components.emplace_back(hi - lo, block);
    }
    return tuple;
}

SummandTuple complete_tuple(const SummandTuple& tuple, int target) {
    SummandTuple out;
    out.cut_count = tuple.cut_count;
    out.components.reserve(tuple.components.size());
    for (const PositiveWord& component : tuple.components)
        out.components.push_back(stabilize_to(component, target));
    return out;
}

std::optional<RMinorReport> r_minor_search(const std::vector<PositiveWord>& family, double r,
                                           std::optional<int> modulus, int parallelism) {
    const int n_mod = modulus.value_or(minimal_modulus(r));

    struct Prepared {
        ReductionReport reduction;
        SummandTuple tuple;
    };
    std::vector<Prepared> prepared;
    prepared.reserve(family.size());
    std::vector<std::vector<BandWord>> tuples;
    tuples.reserve(family.size());
    for (const PositiveWord& w : family) {
        // Every block has at most n_mod strands, so n_mod is a valid common
        // completion target.
        ReductionReport reduction = reduce_mod(w, n_mod, r);
        SummandTuple tuple = complete_tuple(decompose_connected_sum(reduction), n_mod);
        std::vector<BandWord> words;
        words.reserve(tuple.components.size());
        for (const PositiveWord& component : tuple.components) words.push_back(component.word());
        tuples.push_back(std::move(words));
        prepared.push_back(Prepared{std::move(reduction), std::move(tuple)});
    }

    auto hit = find_comparable_pair(
        tuples,
        [](const std::vector<BandWord>& a, const std::vector<BandWord>& b) {
            return tuple_embeds(a, b);
        },
        parallelism);
    if (!hit) return std::nullopt;

    Prepared& smaller = prepared[static_cast<std::size_t>(hit->smaller_index) - 1];
    Prepared& larger = prepared[static_cast<std::size_t>(hit->larger_index) - 1];
    const bool ratio_ok = smaller.reduction.ratio_ok && larger.reduction.ratio_ok;
    return RMinorReport{hit->smaller_index,
                        hit->larger_index,
                        n_mod,
                        r,
                        std::move(smaller.reduction),
                        std::move(larger.reduction),
                        std::move(smaller.tuple),
                        std::move(larger.tuple),
                        std::move(hit->certificate),
                        ratio_ok};
}

std::optional<int> twist_root_exponent(const BandWord& w, int root_order) {
    if (root_order < 1) throw std::invalid_argument("root order must be at least 1");
    const int k = w.strand_count() / root_order;
    if (!has_delta_prefix(w, k)) return std::nullopt;
    return k;
}

std::optional<Embedding> full_twist_certificate(const BandWord& w, int k) {
    if (k < 1) throw std::invalid_argument("twist size must be at least 1");
    const int n = w.strand_count();
    if (k > n || !has_delta_prefix(w, k)) return std::nullopt;

    // Block b of the prefix contributes its letters s_1 .. s_{k-1}; laid end
    // to end these k blocks spell delta_k^k on the first k strands.
    Embedding e;
    e.indices.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1));
    for (int b = 1; b <= k; ++b) {
        const int base = (b - 1) * (n - 1);
        for (int t = 1; t <= k - 1; ++t) e.indices.push_back(base + t);
    }
    return e;
}

int certified_twist_size(const BandWord& w) {
    const int n = w.strand_count();
    if (n == 1) return 1;
    int e = 0;
    while (e < n && has_delta_prefix(w, e + 1)) ++e;
    return e;
}

TwistReport twist_report(const BandWord& w, int root_order) {
    TwistReport report{w, root_order, twist_root_exponent(w, root_order), std::nullopt};
    const int k = certified_twist_size(w);
    if (k >= 1)
        report.contains_full_twist = TwistReport::Containment{k, *full_twist_certificate(w, k)};
    return report;
}

TwistPairReport twist_pair_search(const std::vector<BandWord>& family, int root_order,
                                  int parallelism) {
    for (std::size_t t = 0; t < family.size(); ++t) {
        if (!twist_root_exponent(family[t], root_order))
            throw std::invalid_argument("family member " + std::to_string(t + 1) +
                                        " is not in root form");
    }

    TwistPairReport report;
    report.root_order = root_order;

    const auto comparator = [](const BandWord& u, const BandWord& v) -> std::optional<Embedding> {
        if (u.strand_count() != v.strand_count()) return std::nullopt;
        return subword_embeds(u, v);
    };
    if (auto hit = find_comparable_pair(family, comparator, parallelism)) {
        report.kind = TwistPairReport::Kind::full;
        report.smaller_index = hit->smaller_index;
        report.larger_index = hit->larger_index;
        report.certificate = std::move(hit->certificate);
        return report;
    }

    // Partial branch: candidates ordered by certified twist size, largest
    // first and ties to the smaller index, each against the first other
    // member it covers. The word-to-twist step is certified; the
    // smaller-surface-into-twist step rests on Rudolph's characterization and
    // is cited, not certified.
    const int count = static_cast<int>(family.size());
    std::vector<std::pair<int, int>> candidates;  // (twist size, index)
    for (int j = 1; j <= count; ++j) {
        const int k = certified_twist_size(family[static_cast<std::size_t>(j) - 1]);
        if (k >= 1) candidates.emplace_back(k, j);
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [best_k, best] : candidates) {
        for (int i = 1; i <= count; ++i) {
            if (i == best) continue;
            const int size = family[static_cast<std::size_t>(i) - 1].strand_count();
            if (size > best_k) continue;
            report.kind = TwistPairReport::Kind::partial;
            report.smaller_index = i;
            report.larger_index = best;
            report.twist_size = size;
            report.certificate =
                full_twist_certificate(family[static_cast<std::size_t>(best) - 1], size);
            return report;
        }
    }
    return report;
}

}  // namespace qpm
