#include "qpm/wqo.hpp"

#include <stdexcept>

namespace qpm {

Embedding compose(const Embedding& first, const Embedding& second) {
    Embedding out;
    out.indices.reserve(first.indices.size());
    for (int index : first.indices) {
        if (index < 1 || index > static_cast<int>(second.indices.size()))
            throw std::invalid_argument("embeddings do not compose");
        out.indices.push_back(second.indices[static_cast<std::size_t>(index) - 1]);
    }
    return out;
}

TupleEmbedding compose(const TupleEmbedding& first, const TupleEmbedding& second) {
    TupleEmbedding out;
    out.targets.reserve(first.targets.size());
    out.components.reserve(first.components.size());
    for (std::size_t t = 0; t < first.targets.size(); ++t) {
        const int middle = first.targets[t];
        if (middle < 1 || middle > static_cast<int>(second.targets.size()))
            throw std::invalid_argument("tuple embeddings do not compose");
        out.targets.push_back(second.targets[static_cast<std::size_t>(middle) - 1]);
        out.components.push_back(
            compose(first.components[t], second.components[static_cast<std::size_t>(middle) - 1]));
    }
    return out;
}

namespace {

void require_same_strands(const BandWord& u, const BandWord& v) {
    if (u.strand_count() != v.strand_count())
        throw std::invalid_argument("strand count mismatch");
}

std::vector<std::vector<Band>> letter_tuples(const std::vector<BandWord>& words) {
    std::vector<std::vector<Band>> out;
    out.reserve(words.size());
    for (const BandWord& w : words) out.push_back(w.letters());
    return out;
}

void require_uniform_strands(const std::vector<BandWord>& a, const std::vector<BandWord>& b) {
    const BandWord* reference = nullptr;
    for (const auto* tuple : {&a, &b}) {
        for (const BandWord& w : *tuple) {
            if (reference == nullptr) {
                reference = &w;
            } else if (w.strand_count() != reference->strand_count()) {
                throw std::invalid_argument("mixed strand counts in tuples");
            }
        }
    }
}

}  // namespace

std::optional<Embedding> subword_embeds(const BandWord& u, const BandWord& v) {
    require_same_strands(u, v);
    return subword_embeds(u.letters(), v.letters());
}

bool verify_embedding(const BandWord& u, const BandWord& v, const Embedding& e) {
    require_same_strands(u, v);
    return verify_embedding(u.letters(), v.letters(), e);
}

std::optional<TupleEmbedding> tuple_embeds(const std::vector<BandWord>& a,
                                           const std::vector<BandWord>& b) {
    require_uniform_strands(a, b);
    return tuple_embeds(letter_tuples(a), letter_tuples(b));
}

bool verify_tuple_embedding(const std::vector<BandWord>& a, const std::vector<BandWord>& b,
                            const TupleEmbedding& te) {
    require_uniform_strands(a, b);
    return verify_tuple_embedding(letter_tuples(a), letter_tuples(b), te);
}

}  // namespace qpm
