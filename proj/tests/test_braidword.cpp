#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "qpm/braidword.hpp"
#include "qpm/generate.hpp"

using namespace qpm;

namespace {

const char* kAnnulusWord = "B7: b(4,7) b(3,5) b(2,4) b(1,3) b(2,6) b(5,7) b(1,6)";

BandWord random_band_word(Prng& rng, int n, int length) {
    std::vector<Band> letters;
    letters.reserve(static_cast<std::size_t>(length));
    for (int t = 0; t < length; ++t) {
        const int i = rng.in_range(1, n - 1);
        letters.emplace_back(i, rng.in_range(i + 1, n));
    }
    return BandWord(n, letters);
}

}  // namespace

TEST_CASE("parse accepts the grammar") {
    const BandWord w = parse_braid("B3: s1 s2 s1");
    CHECK(w.strand_count() == 3);
    CHECK(w.length() == 3);
    CHECK(w.letters()[0] == Band(1, 2));
    CHECK(w.letters()[1] == Band(2, 3));

    const BandWord bands = parse_braid("B7: b(4,7) s2 b(1,3)");
    CHECK(bands.letters()[0] == Band(4, 7));
    CHECK(bands.letters()[1] == Band(2, 3));
    CHECK(bands.letters()[2] == Band(1, 3));

    CHECK(parse_braid("B5:").empty());
    CHECK(parse_braid("B1:").strand_count() == 1);
    CHECK(parse_braid("  B2 :  s1 ") == parse_braid("B2: s1"));
    CHECK(parse_braid("B2: s1 s1 # trailing comment") == parse_braid("B2: s1 s1"));
    CHECK(parse_braid("B2:# nothing").empty());
}

TEST_CASE("parse expands groups") {
    CHECK(parse_braid("B3: (s1 s2)^2") == parse_braid("B3: s1 s2 s1 s2"));
    CHECK(parse_braid("B3: (s1 (s2)^2)^3") ==
          parse_braid("B3: s1 s2 s2 s1 s2 s2 s1 s2 s2"));
    CHECK(parse_braid("B4: s3 (b(1,3) s2)^2 s1") ==
          parse_braid("B4: s3 b(1,3) s2 b(1,3) s2 s1"));
    CHECK(parse_braid("B2: (s1)^1") == parse_braid("B2: s1"));
}

TEST_CASE("parse reports 1-based columns") {
    const auto column_of = [](const std::string& text) {
        try {
            parse_braid(text);
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            return e.column();
        }
        return -1;
    };
    CHECK(column_of("A2: s1") == 1);            // expected 'B'
    CHECK(column_of("B: s1") == 2);             // missing strand count
    CHECK(column_of("B2 s1") == 4);             // missing ':'
    CHECK(column_of("B2: s1 s3") == 8);         // index exceeds strand count
    CHECK(column_of("B2: sx") == 6);            // missing generator index
    CHECK(column_of("B3: b(3,1)") == 5);        // band requires i < j
    CHECK(column_of("B3: (s1 s2)^0") == 13);    // exponent must be >= 1
    CHECK(column_of("B3: (s1 s2") == 11);       // unclosed group
    CHECK(column_of("B3: q1") == 5);            // unexpected character
    CHECK(column_of("B0: s1") == 2);            // strand count must be >= 1
}

TEST_CASE("parse error messages name the failed precondition") {
    CHECK_THROWS_WITH_AS(parse_braid("B2: s9"), "line 1, column 5: strand index exceeds strand count",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_braid("B3: b(2,2)"), "line 1, column 5: band requires i < j",
                         ParseError);
    try {
        parse_braid("B2: s0");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.message() == std::string("strand index must be at least 1"));
    }
}

TEST_CASE("format emits canonical text") {
    CHECK(format_braid(parse_braid("B3: (s1 s2)^2")) == "B3: s1 s2 s1 s2");
    CHECK(format_braid(parse_braid("B7: b(4,7) s2")) == "B7: b(4,7) s2");
    CHECK(format_braid(parse_braid("B4:")) == "B4:");
    CHECK(format_braid(parse_braid(kAnnulusWord)) == kAnnulusWord);
}

TEST_CASE("parse is a left inverse of format on random words") {
    Prng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = rng.in_range(2, 9);
        const BandWord w = random_band_word(rng, n, rng.in_range(0, 25));
        CHECK(parse_braid(format_braid(w)) == w);
    }
}

TEST_CASE("band expansion matches the defining formula") {
    CHECK(expand_band(Band(2, 3)) ==
          std::vector<SignedLetter>{SignedLetter{2, Sign::positive}});

    // sigma_{1,3} = s1 s2 s1^{-1}
    const std::vector<SignedLetter> expanded = expand_band(Band(1, 3));
    REQUIRE(expanded.size() == 3);
    CHECK(expanded[0] == SignedLetter{1, Sign::positive});
    CHECK(expanded[1] == SignedLetter{2, Sign::positive});
    CHECK(expanded[2] == SignedLetter{1, Sign::negative});

    for (int n = 2; n <= 9; ++n) {
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const std::vector<SignedLetter> letters = expand_band(Band(i, j));
                CHECK(letters.size() == static_cast<std::size_t>(2 * (j - i) - 1));
                int exponent_sum = 0;
                for (const SignedLetter& letter : letters)
                    exponent_sum += letter.sign == Sign::positive ? 1 : -1;
                CHECK(exponent_sum == 1);
                // Conjugating word: mirrored prefix and suffix, opposite signs.
                const std::size_t half = (letters.size() - 1) / 2;
                for (std::size_t t = 0; t < half; ++t) {
                    CHECK(letters[t].index == letters[letters.size() - 1 - t].index);
                    CHECK(letters[t].sign != letters[letters.size() - 1 - t].sign);
                }
                CHECK(letters[half] == SignedLetter{j - 1, Sign::positive});
            }
        }
    }
}

TEST_CASE("euler characteristic is discs minus bands") {
    CHECK(euler_characteristic(parse_braid("B4:")) == 4);
    CHECK(euler_characteristic(parse_braid("B2: s1")) == 1);
    CHECK(euler_characteristic(parse_braid(kAnnulusWord)) == 0);
    CHECK(euler_characteristic(parse_braid("B5: (s1 s2 s3 s4)^3")) == -7);
}

TEST_CASE("non-splitness is disc-band connectivity") {
    CHECK(is_nonsplit(parse_braid("B1:")));
    CHECK_FALSE(is_nonsplit(parse_braid("B2:")));
    CHECK(is_nonsplit(parse_braid("B2: s1")));
    CHECK_FALSE(is_nonsplit(parse_braid("B3: s1 s1")));
    CHECK_FALSE(is_nonsplit(parse_braid("B3: b(1,3)")));  // disc 2 is isolated
    CHECK(is_nonsplit(parse_braid(kAnnulusWord)));

    // A band sigma_{i,j} connects only discs i and j, not the ones between.
    CHECK_FALSE(is_nonsplit(parse_braid("B4: b(1,4) s2")));
    CHECK(is_nonsplit(parse_braid("B4: b(1,4) s2 b(1,2)")));
}

TEST_CASE("non-splitness agrees with the occurrence oracle on positive words") {
    Prng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.in_range(2, 8);
        std::vector<int> gens;
        const int length = rng.in_range(0, 3 * n);
        for (int t = 0; t < length; ++t) gens.push_back(rng.in_range(1, n - 1));
        const PositiveWord w(n, gens);
        CHECK(is_nonsplit(w.word()) == oracles::nonsplit_positive_oracle(w));
    }
}

TEST_CASE("closure permutation applies letters leftmost first") {
    const Permutation pi = closure_permutation(parse_braid("B3: s1 s2"));
    CHECK(pi.apply(1) == 3);
    CHECK(pi.apply(2) == 1);
    CHECK(pi.apply(3) == 2);
    CHECK(pi.cycle_count() == 1);
    CHECK(pi.cycles() == std::vector<std::vector<int>>{{1, 3, 2}});

    const Permutation annulus = closure_permutation(parse_braid(kAnnulusWord));
    CHECK(annulus.cycles() == std::vector<std::vector<int>>{{1, 3, 7}, {2, 4, 5, 6}});
    CHECK(annulus.cycle_count() == 2);

    CHECK(closure_permutation(parse_braid("B4:")) == Permutation::identity(4));
}

TEST_CASE("closure permutation agrees with the orbit-walk oracle") {
    Prng rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.in_range(2, 9);
        const BandWord w = random_band_word(rng, n, rng.in_range(0, 20));
        const Permutation pi = closure_permutation(w);
        for (int x = 1; x <= n; ++x) CHECK(pi.apply(x) == oracles::trace_strand(w, x));
        CHECK(pi.cycle_count() == oracles::cycle_count_oracle(w));
    }
}

TEST_CASE("permutation algebra") {
    const Permutation id = Permutation::identity(3);
    CHECK(id.cycle_count() == 3);
    CHECK(id.cycles() == std::vector<std::vector<int>>{{1}, {2}, {3}});

    const Permutation a({2, 1, 3});
    const Permutation b({1, 3, 2});
    // a first, then b.
    CHECK(a.then(b).apply(1) == 3);
    CHECK(b.then(a).apply(1) == 2);

    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(id.apply(0), std::invalid_argument);
    CHECK_THROWS_AS(id.apply(4), std::invalid_argument);
    CHECK_THROWS_AS(a.then(Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("delta powers") {
    CHECK(delta_power(4, 1).word() == parse_braid("B4: s1 s2 s3"));
    CHECK(delta_power(3, 3).word() == parse_braid("B3: (s1 s2)^3"));
    CHECK(delta_power(5, 0).word() == parse_braid("B5:"));
    CHECK(delta_power(1, 7).word() == parse_braid("B1:"));
    CHECK_THROWS_AS(delta_power(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(delta_power(3, -1), std::invalid_argument);
}

TEST_CASE("delete_letters removes 1-based positions") {
    const BandWord w = parse_braid("B3: s1 s2 s1 s2");
    CHECK(delete_letters(w, {2, 4}) == parse_braid("B3: s1 s1"));
    CHECK(delete_letters(w, {}) == w);
    CHECK(delete_letters(w, {1, 2, 3, 4}) == parse_braid("B3:"));
    CHECK(delete_letters(w, {2, 2}) == parse_braid("B3: s1 s1 s2"));
    CHECK_THROWS_AS(delete_letters(w, {0}), std::invalid_argument);
    CHECK_THROWS_AS(delete_letters(w, {5}), std::invalid_argument);
}

TEST_CASE("stabilization appends one ladder of new generators") {
    const PositiveWord w(parse_braid("B2: s1 s1 s1"));
    CHECK(stabilize_to(w, 4).word() == parse_braid("B4: s1 s1 s1 s2 s3"));
    CHECK(stabilize_to(w, 2) == w);
    CHECK(stabilize_to(PositiveWord(parse_braid("B1:")), 2).word() == parse_braid("B2: s1"));
    CHECK_THROWS_AS(stabilize_to(w, 1), std::invalid_argument);
    CHECK_THROWS_AS(stabilize_to(PositiveWord(parse_braid("B3: s1")), 4),
                    std::invalid_argument);
}

TEST_CASE("stabilization preserves chi, boundary count and non-splitness") {
    Prng rng(171717);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.in_range(2, 8);
        std::vector<int> gens;
        for (int g = 1; g < n; ++g) gens.push_back(g);
        const int extra = rng.in_range(0, 4 * n);
        for (int t = 0; t < extra; ++t) gens.push_back(rng.in_range(1, n - 1));
        const PositiveWord w(n, gens);
        for (int target = n; target <= n + 5; ++target) {
            const PositiveWord up = stabilize_to(w, target);
            CHECK(up.strand_count() == target);
            CHECK(euler_characteristic(up.word()) == euler_characteristic(w.word()));
            CHECK(closure_permutation(up.word()).cycle_count() ==
                  closure_permutation(w.word()).cycle_count());
            CHECK(is_nonsplit(up.word()));
        }
    }
}

TEST_CASE("concat joins words over the same strand count") {
    CHECK(concat(parse_braid("B3: s1"), parse_braid("B3: s2")) == parse_braid("B3: s1 s2"));
    CHECK(concat(parse_braid("B3:"), parse_braid("B3:")) == parse_braid("B3:"));
    CHECK_THROWS_AS(concat(parse_braid("B2: s1"), parse_braid("B3: s1")),
                    std::invalid_argument);
}

TEST_CASE("chi is additive over concatenation up to the shared discs") {
    Prng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.in_range(2, 7);
        const BandWord a = random_band_word(rng, n, rng.in_range(0, 10));
        const BandWord b = random_band_word(rng, n, rng.in_range(0, 10));
        CHECK(euler_characteristic(concat(a, b)) ==
              euler_characteristic(a) + euler_characteristic(b) - n);
    }
}

TEST_CASE("positive word conversions") {
    CHECK(PositiveWord(parse_braid("B3: s1 s2")).generators() == std::vector<int>{1, 2});
    CHECK_THROWS_WITH_AS(PositiveWord(parse_braid("B3: b(1,3)")),
                         "word contains a non-adjacent band", std::invalid_argument);
    CHECK_FALSE(PositiveWord::try_from(parse_braid("B3: b(1,3)")).has_value());
    CHECK(PositiveWord::try_from(parse_braid("B3: s1 b(2,3)")).has_value());
    const PositiveWord built(4, {3, 1, 2});
    CHECK(built.word() == parse_braid("B4: s3 s1 s2"));
    CHECK_THROWS_AS(PositiveWord(4, {4}), std::invalid_argument);
}

TEST_CASE("band and word validation") {
    CHECK_THROWS_AS(Band(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Band(2, 2), std::invalid_argument);
    CHECK(Band(1, 2).adjacent());
    CHECK_FALSE(Band(1, 3).adjacent());
    CHECK_THROWS_AS(BandWord(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(BandWord(2, {Band(1, 3)}), std::invalid_argument);
}

TEST_CASE("parser caps guard against pathological input") {
    CHECK_THROWS_AS(parse_braid("B2000000: s1"), ParseError);
    CHECK_THROWS_AS(parse_braid("B2: ((((((x"), ParseError);
    CHECK_THROWS_AS(parse_braid("B2: (s1)^1000001"), ParseError);
    // Deep nesting beyond the fixed limit.
    std::string deep = "B2: ";
    for (int t = 0; t < 70; ++t) deep += "(";
    deep += "s1";
    for (int t = 0; t < 70; ++t) deep += ")^1";
    CHECK_THROWS_AS(parse_braid(deep), ParseError);
}
