#pragma once

#include <future>
#include <optional>
#include <type_traits>
#include <vector>

#include "qpm/braidword.hpp"

namespace qpm {

/// Certificate that one word is a letter-deletion minor of another: the
/// strictly increasing 1-based positions of the kept letters in the larger
/// word.
struct Embedding {
    std::vector<int> indices;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Certificate between ordered tuples of words: strictly increasing target
/// positions plus one per-component Embedding.
struct TupleEmbedding {
    std::vector<int> targets;
    std::vector<Embedding> components;
    friend bool operator==(const TupleEmbedding&, const TupleEmbedding&) = default;
};

/// Greedy leftmost subsequence matching. Greedy is complete for subsequence
/// embedding, so the result is an Embedding iff u embeds into v at all.
template <class Letter>
std::optional<Embedding> subword_embeds(const std::vector<Letter>& u,
                                        const std::vector<Letter>& v) {
    Embedding e;
    e.indices.reserve(u.size());
    std::size_t p = 0;
    for (const Letter& letter : u) {
        while (p < v.size() && !(v[p] == letter)) ++p;
        if (p == v.size()) return std::nullopt;
        e.indices.push_back(static_cast<int>(p) + 1);
        ++p;
    }
    return e;
}

/// Independent certificate checker: strictly increasing, in range, letters
/// match. Shares nothing with subword_embeds beyond letter equality.
template <class Letter>
bool verify_embedding(const std::vector<Letter>& u, const std::vector<Letter>& v,
                      const Embedding& e) {
    if (e.indices.size() != u.size()) return false;
    int previous = 0;
    for (std::size_t t = 0; t < u.size(); ++t) {
        const int index = e.indices[t];
        if (index <= previous || index > static_cast<int>(v.size())) return false;
        if (!(v[static_cast<std::size_t>(index) - 1] == u[t])) return false;
        previous = index;
    }
    return true;
}

/// Greedy componentwise matching in the tuple order: each source component
/// goes to the earliest unused later target component that admits a subword
/// embedding. Component usability is monotone, so greedy is complete.
template <class Letter>
std::optional<TupleEmbedding> tuple_embeds(const std::vector<std::vector<Letter>>& a,
                                           const std::vector<std::vector<Letter>>& b) {
    if (a.size() > b.size()) return std::nullopt;
    TupleEmbedding te;
    te.targets.reserve(a.size());
    te.components.reserve(a.size());
    std::size_t next_target = 0;
    for (const std::vector<Letter>& component : a) {
        bool placed = false;
        while (next_target < b.size()) {
            if (auto e = subword_embeds(component, b[next_target])) {
                te.targets.push_back(static_cast<int>(next_target) + 1);
                te.components.push_back(std::move(*e));
                ++next_target;
                placed = true;
                break;
            }
            ++next_target;
        }
        if (!placed) return std::nullopt;
    }
    return te;
}

template <class Letter>
bool verify_tuple_embedding(const std::vector<std::vector<Letter>>& a,
                            const std::vector<std::vector<Letter>>& b,
                            const TupleEmbedding& te) {
    if (te.targets.size() != a.size() || te.components.size() != a.size()) return false;
    int previous = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const int target = te.targets[t];
        if (target <= previous || target > static_cast<int>(b.size())) return false;
        if (!verify_embedding(a[t], b[static_cast<std::size_t>(target) - 1], te.components[t]))
            return false;
        previous = target;
    }
    return true;
}

/// Certificate composition: from u <= v and v <= w, a certificate u <= w.
Embedding compose(const Embedding& first, const Embedding& second);
TupleEmbedding compose(const TupleEmbedding& first, const TupleEmbedding& second);

/// Band-word wrappers. Words compared as band letters must share a strand
/// count; a mismatch is an error, not incomparability.
std::optional<Embedding> subword_embeds(const BandWord& u, const BandWord& v);
bool verify_embedding(const BandWord& u, const BandWord& v, const Embedding& e);
std::optional<TupleEmbedding> tuple_embeds(const std::vector<BandWord>& a,
                                           const std::vector<BandWord>& b);
bool verify_tuple_embedding(const std::vector<BandWord>& a, const std::vector<BandWord>& b,
                            const TupleEmbedding& te);

/// A comparable pair inside a family: 1-based family positions plus the
/// certificate that family[smaller_index] embeds into family[larger_index].
template <class Cert>
struct PairReport {
    int smaller_index;
    int larger_index;
    Cert certificate;
};

/// Scans pairs (i, j), i < j, in lexicographic order, testing i -> j before
/// j -> i, and returns the first hit. parallelism > 1 evaluates comparisons
/// concurrently in blocks but keeps the sequential answer.
template <class Item, class Comparator>
auto find_comparable_pair(const std::vector<Item>& family, Comparator comparator,
                          int parallelism = 1)
    -> std::optional<PairReport<
        typename std::invoke_result_t<Comparator, const Item&, const Item&>::value_type>> {
    using Cert =
        typename std::invoke_result_t<Comparator, const Item&, const Item&>::value_type;
    using Report = PairReport<Cert>;

    const int count = static_cast<int>(family.size());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(count) * (count - 1) / 2);
    for (int i = 1; i <= count; ++i) {
        for (int j = i + 1; j <= count; ++j) pairs.emplace_back(i, j);
    }

    const auto evaluate = [&](const std::pair<int, int>& p) -> std::optional<Report> {
        const Item& a = family[static_cast<std::size_t>(p.first) - 1];
        const Item& b = family[static_cast<std::size_t>(p.second) - 1];
        if (auto cert = comparator(a, b))
            return Report{p.first, p.second, std::move(*cert)};
        if (auto cert = comparator(b, a))
            return Report{p.second, p.first, std::move(*cert)};
        return std::nullopt;
    };

    if (parallelism <= 1) {
        for (const auto& p : pairs) {
            if (auto report = evaluate(p)) return report;
        }
        return std::nullopt;
    }

    // Block-synchronous evaluation: results are joined in pair order, so the
    // first hit is the same one the sequential scan returns.
    const std::size_t block = static_cast<std::size_t>(parallelism) * 4;
    for (std::size_t begin = 0; begin < pairs.size(); begin += block) {
        const std::size_t end = std::min(pairs.size(), begin + block);
        std::vector<std::future<std::optional<Report>>> futures;
        futures.reserve(end - begin);
        for (std::size_t t = begin; t < end; ++t) {
            futures.push_back(
                std::async(std::launch::async, [&evaluate, &pairs, t] { return evaluate(pairs[t]); }));
        }
        std::optional<Report> hit;
        for (auto& f : futures) {
            auto result = f.get();
            if (result && !hit) hit = std::move(result);
        }
        if (hit) return hit;
    }
    return std::nullopt;
}

}  // namespace qpm
