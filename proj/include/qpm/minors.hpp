#pragma once

#include <optional>
#include <vector>

#include "qpm/braidword.hpp"
#include "qpm/wqo.hpp"

namespace qpm {

/// Output of reduce_mod: the survivor positions double as the Embedding of
/// reduced into source. ratio_ok records |chi(reduced)| >= r*|chi(source)|;
/// it is reported, never enforced.
struct ReductionReport {
    PositiveWord source;
    int modulus;
    int residue;
    double r;
    std::vector<int> kept_positions;
    PositiveWord reduced;
    int chi_source;
    int chi_reduced;
    bool ratio_ok;
};

/// Connected-sum decomposition: each component rebased to start at strand 1.
/// chi(whole) == sum of component chi minus cut_count.
struct SummandTuple {
    std::vector<PositiveWord> components;
    int cut_count;
};

/// Outcome of the r-minor pipeline over a family. Indices are 1-based family
/// positions; tuples are the completed (stabilized) summand tuples the
/// certificate refers to.
struct RMinorReport {
    int smaller_index;
    int larger_index;
    int modulus;
    double r;
    ReductionReport smaller_reduction;
    ReductionReport larger_reduction;
    SummandTuple smaller_tuple;
    SummandTuple larger_tuple;
    TupleEmbedding certificate;
    bool ratio_ok;
};

/// Per-word root analysis. exponent is floor(n/N) when the delta-prefix
/// check succeeds. contains_full_twist carries the largest k whose full
/// twist on k strands is certified inside the word.
struct TwistReport {
    struct Containment {
        int k;
        Embedding certificate;
    };

    BandWord word;
    int root_order;
    std::optional<int> exponent;
    std::optional<Containment> contains_full_twist;
};

/// Outcome of the two-branch twist pair search. full: a word-level
/// certificate between two same-strand-count family members. partial: the
/// full twist on twist_size strands (the smaller member's strand count) is
/// certified inside the larger member; the remaining step, the smaller
/// surface into that full-twist fibre, rests on Rudolph's characterization
/// and is cited, not certified.
struct TwistPairReport {
    enum class Kind { none, full, partial };

    Kind kind = Kind::none;
    int root_order = 0;
    int smaller_index = 0;
    int larger_index = 0;
    std::optional<Embedding> certificate;
    int twist_size = 0;  // partial only
};

/// Smallest N with 1/N < 1 - r, the weakest modulus the reduction accepts
/// for the ratio r. Requires r in (0,1).
int minimal_modulus(double r);

/// The residue class in {1..N} whose generators occur least often in w
/// (indices m with m congruent to the class mod N); ties break to the
/// smallest class. Requires N >= 2 and non-split w. The winning count is at
/// most length/N by pigeonhole.
int choose_residue(const PositiveWord& w, int modulus);

/// Keeps the first occurrence of every generator in the chosen residue
/// class and deletes the rest. Requires non-split w, N >= 2, r in (0,1) and
/// 1/N < 1 - r so the caller's modulus matches the requested ratio. The
/// result is non-split and loses at most floor(length/N) letters.
ReductionReport reduce_mod(const PositiveWord& w, int modulus, double r);

/// Splits the reduced word at its cut generators (residue-class generators,
/// each of which must occur exactly once) into strand blocks, dropping the
/// cut letters and rebasing each block to start at strand 1.
SummandTuple decompose_connected_sum(const ReductionReport& report);

/// Stabilizes every component into B_target. Per-component chi, boundary
/// count and non-splitness are preserved.
SummandTuple complete_tuple(const SummandTuple& tuple, int target);

/// Full pipeline: reduce every family member mod the minimal N with
/// 1/N < 1 - r (or the given override), decompose, complete, then search the
/// completed tuples for a comparable pair in the tuple order.
std::optional<RMinorReport> r_minor_search(const std::vector<PositiveWord>& family, double r,
                                           std::optional<int> modulus = std::nullopt,
                                           int parallelism = 1);

/// k = floor(n/N) if the word starts with the k-th power of
/// delta_n = s_1 ... s_{n-1}; nullopt when that prefix is missing. n < N
/// makes the condition empty, so the result is 0.
std::optional<int> twist_root_exponent(const BandWord& w, int root_order);

/// Certificate that the full twist on k strands, delta_power(k, k), is a
/// word minor of w: selects s_1 .. s_{k-1} from each of the first k
/// delta-blocks of w's prefix. Requires the delta-prefix exponent >= k and
/// strand count >= k; returns nullopt otherwise.
std::optional<Embedding> full_twist_certificate(const BandWord& w, int k);

/// The largest k with full_twist_certificate(w, k) present; 0 when none.
int certified_twist_size(const BandWord& w);

TwistReport twist_report(const BandWord& w, int root_order);

/// Two-branch pair search over words that all pass twist_root_exponent.
/// Branch full: lexicographic pair scan with the band subword order,
/// skipping pairs of different strand count. Branch partial: candidates
/// ordered by certified_twist_size, largest first and ties to the smallest
/// index, each against the first other member whose strand count it covers.
TwistPairReport twist_pair_search(const std::vector<BandWord>& family, int root_order,
                                  int parallelism = 1);

}  // namespace qpm
