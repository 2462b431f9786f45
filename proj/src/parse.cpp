#include <cctype>
#include <string>

#include "qpm/braidword.hpp"

namespace qpm {

namespace {

constexpr long long kMaxNumber = 1'000'000;
constexpr long long kMaxLetters = 1'000'000;
constexpr int kMaxGroupDepth = 64;

// Recursive-descent parser over a single braid expression. Columns are
// 1-based; '#' ends the input.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BandWord parse() {
        skip_ws();
        expect('B', "expected 'B' at start of braid");
        n_ = parse_nat("expected strand count after 'B'");
        if (n_ < 1) fail("strand count must be at least 1", pos_);
        skip_ws();
        expect(':', "expected ':' after strand count");
        std::vector<Band> letters;
        parse_items(letters, 0);
        skip_ws();
        if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'", pos_ + 1);
        return BandWord(static_cast<int>(n_), std::move(letters));
    }

private:
    [[noreturn]] void fail(const std::string& message, std::size_t column) const {
        throw ParseError(message, 1, static_cast<int>(column));
    }

    bool at_end() const { return pos_ >= text_.size() || text_[pos_] == '#'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c, const std::string& message) {
        if (at_end() || text_[pos_] != c) fail(message, pos_ + 1);
        ++pos_;
    }

    long long parse_nat(const std::string& message) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(message, pos_ + 1);
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxNumber) fail("number too large", pos_ + 1);
            ++pos_;
        }
        return value;
    }

    // Parses items until end of input or a closing ')'. depth guards group
    // nesting; the caller consumes the ')'.
    void parse_items(std::vector<Band>& out, int depth) {
        for (;;) {
            skip_ws();
            if (at_end() || text_[pos_] == ')') return;
            const char c = text_[pos_];
            if (c == 's') {
                const std::size_t letter_col = pos_ + 1;
                ++pos_;
                const long long g = parse_nat("expected generator index after 's'");
                append_band(out, g, g + 1, letter_col);
            } else if (c == 'b') {
                const std::size_t letter_col = pos_ + 1;
                ++pos_;
                expect('(', "expected '(' after 'b'");
                skip_ws();
                const long long i = parse_nat("expected strand index");
                skip_ws();
                expect(',', "expected ',' in band");
                skip_ws();
                const long long j = parse_nat("expected strand index");
                skip_ws();
                expect(')', "expected ')' after band");
                append_band(out, i, j, letter_col);
            } else if (c == '(') {
                if (depth + 1 > kMaxGroupDepth) fail("groups nested too deeply", pos_ + 1);
                ++pos_;
                std::vector<Band> group;
                parse_items(group, depth + 1);
                skip_ws();
                expect(')', "expected ')' to close group");
                skip_ws();
                expect('^', "expected '^' after group");
                skip_ws();
                const std::size_t exp_col = pos_ + 1;
                const long long k = parse_nat("expected exponent after '^'");
                if (k < 1) fail("exponent must be at least 1", exp_col);
                if (static_cast<long long>(out.size()) + k * static_cast<long long>(group.size()) > kMaxLetters)
                    fail("word too long", exp_col);
                for (long long rep = 0; rep < k; ++rep)
                    out.insert(out.end(), group.begin(), group.end());
            } else {
                fail(std::string("unexpected character '") + c + "'", pos_ + 1);
            }
            if (static_cast<long long>(out.size()) > kMaxLetters) fail("word too long", pos_);
        }
    }

    void append_band(std::vector<Band>& out, long long i, long long j, std::size_t column) {
        if (i < 1) fail("strand index must be at least 1", column);
        if (j <= i) fail("band requires i < j", column);
        if (j > n_) fail("strand index exceeds strand count", column);
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    long long n_ = 0;
};

}  // namespace

BandWord parse_braid(std::string_view text) { return Parser(text).parse(); }

std::string format_braid(const BandWord& w) {
    std::string out = "B" + std::to_string(w.strand_count()) + ":";
    for (const Band& b : w.letters()) {
        out += ' ';
        if (b.adjacent()) {
            out += 's' + std::to_string(b.i());
        } else {
            out += "b(" + std::to_string(b.i()) + ',' + std::to_string(b.j()) + ')';
        }
    }
    return out;
}

}  // namespace qpm
