#include "qpm/braidword.hpp"

#include <algorithm>
#include <utility>

#include "union_find.hpp"

namespace qpm {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

Band::Band(int i, int j) : i_(i), j_(j) {
    if (i < 1) throw std::invalid_argument("band index must be at least 1");
    if (j <= i) throw std::invalid_argument("band requires i < j");
}

BandWord::BandWord(int strand_count, std::vector<Band> letters)
    : n_(strand_count), letters_(std::move(letters)) {
    if (n_ < 1) throw std::invalid_argument("strand count must be at least 1");
    for (const Band& b : letters_) {
        if (b.j() > n_) throw std::invalid_argument("band exceeds strand count");
    }
}

PositiveWord::PositiveWord(BandWord w) : word_(std::move(w)) {
    for (const Band& b : word_.letters()) {
        if (!b.adjacent())
            throw std::invalid_argument("word contains a non-adjacent band");
    }
}

PositiveWord::PositiveWord(int strand_count, const std::vector<int>& generators)
    : word_([&] {
          std::vector<Band> letters;
          letters.reserve(generators.size());
          for (int g : generators) letters.emplace_back(g, g + 1);
          return BandWord(strand_count, std::move(letters));
      }()) {}

std::optional<PositiveWord> PositiveWord::try_from(BandWord w) {
    for (const Band& b : w.letters()) {
        if (!b.adjacent()) return std::nullopt;
    }
    return PositiveWord(std::move(w));
}

std::vector<int> PositiveWord::generators() const {
    std::vector<int> out;
    out.reserve(word_.letters().size());
    for (const Band& b : word_.letters()) out.push_back(b.i());
    return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) throw std::invalid_argument("permutation must act on at least one point");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("image list is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) images[x - 1] = x;
    return Permutation(std::move(images));
}

int Permutation::apply(int x) const {
    if (x < 1 || x > size()) throw std::invalid_argument("point out of range");
    return images_[x - 1];
}

Permutation Permutation::then(const Permutation& after) const {
    if (size() != after.size())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<int> images(images_.size());
    for (int x = 1; x <= size(); ++x) images[x - 1] = after.apply(apply(x));
    return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (int x = start; !seen[x]; x = apply(x)) {
            seen[x] = true;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[start]) continue;
        ++count;
        for (int x = start; !seen[x]; x = apply(x)) seen[x] = true;
    }
    return count;
}

std::vector<SignedLetter> expand_band(const Band& b) {
    std::vector<SignedLetter> out;
    out.reserve(static_cast<std::size_t>(2 * (b.j() - b.i()) - 1));
    for (int t = b.i(); t <= b.j() - 2; ++t) out.push_back({t, Sign::positive});
    out.push_back({b.j() - 1, Sign::positive});
    for (int t = b.j() - 2; t >= b.i(); --t) out.push_back({t, Sign::negative});
    return out;
}

int euler_characteristic(const BandWord& w) {
    return w.strand_count() - w.length();
}

bool is_nonsplit(const BandWord& w) {
    detail::UnionFind uf(w.strand_count());
    for (const Band& b : w.letters()) uf.unite(b.i(), b.j());
    return uf.all_connected();
}

Permutation closure_permutation(const BandWord& w) {
    const int n = w.strand_count();
    // images[x] tracks the running product; pos is its inverse, so each
    // transposition updates both in O(1).
    std::vector<int> images(static_cast<std::size_t>(n) + 1);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int x = 1; x <= n; ++x) images[x] = pos[x] = x;
    for (const Band& b : w.letters()) {
        const int a = pos[b.i()];
        const int c = pos[b.j()];
        std::swap(images[a], images[c]);
        std::swap(pos[b.i()], pos[b.j()]);
    }
    return Permutation(std::vector<int>(images.begin() + 1, images.end()));
}

PositiveWord delta_power(int n, int k) {
    if (n < 1) throw std::invalid_argument("strand count must be at least 1");
    if (k < 0) throw std::invalid_argument("exponent must be non-negative");
    std::vector<int> generators;
    generators.reserve(static_cast<std::size_t>(k) * (n > 0 ? n - 1 : 0));
    for (int rep = 0; rep < k; ++rep) {
        for (int g = 1; g <= n - 1; ++g) generators.push_back(g);
    }
    return PositiveWord(n, generators);
}

BandWord delete_letters(const BandWord& w, const std::vector<int>& positions) {
    std::vector<bool> drop(static_cast<std::size_t>(w.length()) + 1, false);
    for (int p : positions) {
        if (p < 1 || p > w.length())
            throw std::invalid_argument("letter position out of range");
        drop[p] = true;
    }
    std::vector<Band> kept;
    kept.reserve(w.letters().size());
    for (int p = 1; p <= w.length(); ++p) {
        if (!drop[p]) kept.push_back(w.letters()[p - 1]);
    }
    return BandWord(w.strand_count(), std::move(kept));
}

PositiveWord stabilize_to(const PositiveWord& w, int target) {
    const int n = w.strand_count();
    if (target < n)
        throw std::invalid_argument("stabilization target below strand count");
    if (!is_nonsplit(w.word()))
        throw std::invalid_argument("stabilize_to requires a non-split word");
    std::vector<int> generators = w.generators();
    for (int g = n; g < target; ++g) generators.push_back(g);
    return PositiveWord(target, generators);
}

BandWord concat(const BandWord& a, const BandWord& b) {
    if (a.strand_count() != b.strand_count())
        throw std::invalid_argument("strand count mismatch");
    std::vector<Band> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BandWord(a.strand_count(), std::move(letters));
}

}  // namespace qpm
