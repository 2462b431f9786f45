#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qpm {

/// Error thrown by parse_braid. Positions are 1-based; line is 1 unless a
/// file reader rethrows with its own line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    /// Bare description without the position prefix what() carries.
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    int line_;
    int column_;
};

/// A positive band sigma_{i,j} with 1 <= i < j. Adjacent bands (j == i+1)
/// are the standard generators sigma_i.
class Band {
public:
    Band(int i, int j);
    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }
    bool adjacent() const noexcept { return j_ == i_ + 1; }
    friend bool operator==(const Band&, const Band&) = default;

private:
    int i_;
    int j_;
};

enum class Sign { positive, negative };

/// One letter of the expansion of a band into standard generators.
struct SignedLetter {
    int index;
    Sign sign;
    friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

/// A strongly quasipositive braid word: strand count n plus its bands in
/// word order. Word positions and strand indices are 1-based. Empty words
/// are legal (they stand for n disjoint discs). Immutable after
/// construction; safe to share across threads.
class BandWord {
public:
    explicit BandWord(int strand_count, std::vector<Band> letters = {});

    int strand_count() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Band>& letters() const noexcept { return letters_; }

    friend bool operator==(const BandWord&, const BandWord&) = default;

private:
    int n_;
    std::vector<Band> letters_;
};

/// A positive braid word: a BandWord in which every letter is adjacent.
class PositiveWord {
public:
    /// Throws std::invalid_argument if any letter of w is non-adjacent.
    explicit PositiveWord(BandWord w);
    /// Builds the word sigma_{g} for each generator index g in order.
    PositiveWord(int strand_count, const std::vector<int>& generators);

    static std::optional<PositiveWord> try_from(BandWord w);

    const BandWord& word() const noexcept { return word_; }
    int strand_count() const noexcept { return word_.strand_count(); }
    int length() const noexcept { return word_.length(); }
    /// Generator indices in word order (letter (i, i+1) yields i).
    std::vector<int> generators() const;

    friend bool operator==(const PositiveWord&, const PositiveWord&) = default;

private:
    BandWord word_;
};

/// A bijection on {1..n}, stored as the image list: images()[k] is the
/// image of k+1.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int apply(int x) const;
    const std::vector<int>& images() const noexcept { return images_; }

    /// Composition "this first, then after": result.apply(x) == after.apply(this->apply(x)).
    Permutation then(const Permutation& after) const;

    /// Cycles in canonical order: each cycle starts at its smallest element,
    /// cycles sorted by that element. Fixed points count as 1-cycles.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Parses one braid expression, grammar:
///
///   braid  = "B" nat ":" items
///   items  = { item }
///   item   = letter | "(" items ")" "^" nat
///   letter = "s" nat | "b(" nat "," nat ")"
///
/// Whitespace separates letters; '#' starts a comment running to the end of
/// the input. Group powers are expanded left-to-right; the exponent must be
/// at least 1.
BandWord parse_braid(std::string_view text);

/// Canonical text: adjacent bands print as "s<i>", all others as "b(<i>,<j>)",
/// no repetition sugar. parse_braid(format_braid(w)) == w for every w.
std::string format_braid(const BandWord& w);

/// Expands sigma_{i,j} = (s_i ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^{-1}.
/// The result has length 2(j-i)-1; adjacent bands expand to one positive letter.
std::vector<SignedLetter> expand_band(const Band& b);

/// chi of the disc-band surface: strand count minus word length.
int euler_characteristic(const BandWord& w);

/// True iff the graph on strands {1..n} with one edge {i,j} per letter is
/// connected. For positive words this is "every generator occurs at least
/// once"; in general it is the condition for the band surface to be connected.
bool is_nonsplit(const BandWord& w);

/// Product of the transpositions (i j) over the letters, leftmost letter
/// applied first. Its cycles are the boundary components of the band surface
/// (equivalently, the components of the closure link).
Permutation closure_permutation(const BandWord& w);

/// The word (s_1 s_2 ... s_{n-1})^k. k == n gives the positive full twist.
/// Throws on n < 1 or k < 0.
PositiveWord delta_power(int n, int k);

/// Removes the letters at the given 1-based positions (duplicates in the
/// list are harmless). The strand count is unchanged, so chi grows by the
/// number of removed positions. Throws on out-of-range positions.
BandWord delete_letters(const BandWord& w, const std::vector<int>& positions);

/// Markov stabilization chain: appends s_n s_{n+1} ... s_{target-1} while
/// raising the strand count to target. Requires w non-split and
/// target >= strand count; preserves chi, the closure's cycle count, and
/// non-splitness.
PositiveWord stabilize_to(const PositiveWord& w, int target);

/// Concatenation of two words on the same strand count.
BandWord concat(const BandWord& a, const BandWord& b);

}  // namespace qpm
