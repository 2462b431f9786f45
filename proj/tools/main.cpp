// braidminor: word-level minor calculus for quasipositive braid surfaces.
//
// Exit codes: 0 result produced, 1 success with an empty result (no pair,
// incomparable), 2 input or usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpm/braidword.hpp"
#include "qpm/generate.hpp"
#include "qpm/minors.hpp"
#include "qpm/report_json.hpp"
#include "qpm/surface.hpp"
#include "qpm/wqo.hpp"

namespace {

using qpm::ordered_json;

constexpr int kExitResult = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One braid per line; blank lines and '#' comments ignored. The argument is
// a path when a file exists there, otherwise it is parsed inline.
std::vector<qpm::BandWord> read_argument(const std::string& argument) {
    if (!std::filesystem::exists(argument)) {
        try {
            return {qpm::parse_braid(argument)};
        } catch (const qpm::ParseError& e) {
            throw InputError(e.what());
        }
    }
    std::ifstream in(argument);
    if (!in) throw InputError(argument + ": cannot open");
    std::vector<qpm::BandWord> words;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string text = line.substr(0, line.find('#'));
        const auto begin = text.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        text = text.substr(begin, text.find_last_not_of(" \t\r") - begin + 1);
        try {
            words.push_back(qpm::parse_braid(text));
        } catch (const qpm::ParseError& e) {
            throw InputError(argument + ":" + std::to_string(line_number) + ": column " +
                             std::to_string(e.column()) + ": " + e.message());
        }
    }
    return words;
}

std::vector<qpm::BandWord> read_arguments(const std::vector<std::string>& arguments) {
    std::vector<qpm::BandWord> words;
    for (const std::string& argument : arguments) {
        std::vector<qpm::BandWord> part = read_argument(argument);
        words.insert(words.end(), part.begin(), part.end());
    }
    return words;
}

qpm::BandWord read_single(const std::string& argument) {
    std::vector<qpm::BandWord> words = read_argument(argument);
    if (words.size() != 1)
        throw InputError(argument + ": expected exactly one braid, got " +
                         std::to_string(words.size()));
    return words.front();
}

std::vector<qpm::PositiveWord> to_positive(const std::vector<qpm::BandWord>& words) {
    std::vector<qpm::PositiveWord> out;
    out.reserve(words.size());
    for (const qpm::BandWord& w : words) out.emplace_back(w);
    return out;
}

// Text output is rendered from the same json values the --format json path
// dumps, so both formats carry identical numeric content.
std::string scalar_text(const ordered_json& value) {
    return value.is_string() ? value.get<std::string>() : value.dump();
}

bool all_scalar(const ordered_json& array) {
    for (const auto& element : array) {
        if (element.is_structured()) return false;
    }
    return true;
}

void render_lines(const ordered_json& value, const std::string& key, int depth,
                  std::ostream& os) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (value.is_object()) {
        if (!key.empty()) os << pad << key << ":\n";
        const int child_depth = key.empty() ? depth : depth + 1;
        for (const auto& [child_key, child] : value.items())
            render_lines(child, child_key, child_depth, os);
        return;
    }
    if (value.is_array() && !all_scalar(value)) {
        if (!key.empty()) os << pad << key << ":\n";
        const int child_depth = key.empty() ? depth : depth + 1;
        for (std::size_t t = 0; t < value.size(); ++t)
            render_lines(value[t], "[" + std::to_string(t) + "]", child_depth, os);
        return;
    }
    os << pad << key << ": " << scalar_text(value) << "\n";
}

std::string render_text(const ordered_json& report) {
    std::ostringstream os;
    if (report.is_array()) {
        for (std::size_t t = 0; t < report.size(); ++t) {
            if (t > 0) os << "\n";
            render_lines(report[t], "", 0, os);
        }
    } else {
        render_lines(report, "", 0, os);
    }
    return os.str();
}

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
    bool verify = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& options) {
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", options.out_path, "write output to PATH instead of stdout");
    cmd->add_flag("--verify", options.verify,
                  "replay all certificates through the independent checkers");
}

void write_output(const OutputOptions& options, const std::string& payload) {
    if (options.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) throw InputError(options.out_path + ": cannot write");
    out << payload;
}

// Emits the report in the requested format, optionally re-verifying every
// embedded certificate first. extra_text is appended to text output only
// (human-readable outcome lines carrying no numbers).
int emit_report(const OutputOptions& options, const ordered_json& report, int exit_code,
                const std::string& extra_text = "") {
    if (options.verify) {
        const std::vector<std::string> failures = qpm::verify_report(report);
        if (!failures.empty()) {
            for (const std::string& failure : failures)
                std::cerr << "verification failed: " << failure << "\n";
            return kExitError;
        }
    }
    if (options.format == "json") {
        write_output(options, report.dump(2) + "\n");
    } else {
        std::string text = render_text(report);
        if (!extra_text.empty()) text += extra_text + "\n";
        write_output(options, text);
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word-level minor calculus for quasipositive braid surfaces"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string left;
    std::string right;
    OutputOptions output;
    double ratio = 0.5;
    std::optional<int> modulus;
    int root_order = 2;
    qpm::GenOptions gen_options;

    auto* parse_cmd = app.add_subcommand("parse", "validate braids and print canonical form");
    parse_cmd->add_option("input", inputs, "braid file or inline braid")->required();
    add_output_options(parse_cmd, output);

    auto* invariants_cmd =
        app.add_subcommand("invariants", "chi, connectivity, boundary count, genus");
    invariants_cmd->add_option("input", inputs, "braid file or inline braid")->required();
    add_output_options(invariants_cmd, output);

    auto* reduce_cmd =
        app.add_subcommand("reduce", "residue-class reduction of positive words");
    reduce_cmd->add_option("input", inputs, "braid file or inline braid")->required();
    reduce_cmd->add_option("--r", ratio, "target chi ratio in (0,1)")->capture_default_str();
    reduce_cmd->add_option("--modulus", modulus, "residue modulus (default: minimal for r)");
    add_output_options(reduce_cmd, output);

    auto* decompose_cmd =
        app.add_subcommand("decompose", "reduce, then split into connected summands");
    decompose_cmd->add_option("input", inputs, "braid file or inline braid")->required();
    decompose_cmd->add_option("--r", ratio, "target chi ratio in (0,1)")->capture_default_str();
    decompose_cmd->add_option("--modulus", modulus, "residue modulus (default: minimal for r)");
    add_output_options(decompose_cmd, output);

    auto* embed_cmd = app.add_subcommand("embed", "test two braids for subword comparability");
    embed_cmd->add_option("left", left, "braid file or inline braid")->required();
    embed_cmd->add_option("right", right, "braid file or inline braid")->required();
    add_output_options(embed_cmd, output);

    auto* find_pair_cmd =
        app.add_subcommand("find-pair", "first comparable pair in a family");
    find_pair_cmd->add_option("input", inputs, "braid file or inline braids")->required();
    add_output_options(find_pair_cmd, output);

    auto* r_minor_cmd =
        app.add_subcommand("r-minor-search", "reduction pipeline plus tuple pair search");
    r_minor_cmd->add_option("input", inputs, "braid file or inline braids")->required();
    r_minor_cmd->add_option("--r", ratio, "target chi ratio in (0,1)")->capture_default_str();
    r_minor_cmd->add_option("--modulus", modulus, "residue modulus (default: minimal for r)");
    add_output_options(r_minor_cmd, output);

    auto* twist_root_cmd =
        app.add_subcommand("twist-root", "delta-prefix root detection and twist containment");
    twist_root_cmd->add_option("input", inputs, "braid file or inline braid")->required();
    twist_root_cmd->add_option("--n", root_order, "root order N")->capture_default_str();
    add_output_options(twist_root_cmd, output);

    auto* twist_pair_cmd =
        app.add_subcommand("twist-pair-search", "two-branch pair search over root-form words");
    twist_pair_cmd->add_option("input", inputs, "braid file or inline braids")->required();
    twist_pair_cmd->add_option("--n", root_order, "root order N")->capture_default_str();
    add_output_options(twist_pair_cmd, output);

    qpm::RenderOptions render_options;
    auto* render_cmd = app.add_subcommand("render", "disc-band diagram as SVG");
    render_cmd->add_option("input", inputs, "braid file or inline braid")->required();
    render_cmd->add_option("--out", output.out_path, "write SVG to PATH instead of stdout");
    render_cmd
        ->add_option("--disc-spacing", render_options.disc_spacing,
                     "vertical distance between disc tops")
        ->capture_default_str();
    render_cmd
        ->add_option("--band-thickness", render_options.band_thickness,
                     "stroke width of a band")
        ->capture_default_str();

    auto* gen_cmd = app.add_subcommand("gen", "seeded random family of non-split words");
    gen_cmd->add_option("--n", gen_options.strand_count, "strand count")->capture_default_str();
    gen_cmd->add_option("--count", gen_options.count, "number of words")->capture_default_str();
    gen_cmd->add_option("--min-len", gen_options.min_len, "minimum letters before repair")
        ->capture_default_str();
    gen_cmd->add_option("--max-len", gen_options.max_len, "maximum letters before repair")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen_options.seed, "64-bit random seed")->capture_default_str();
    gen_cmd->add_flag("--bands", gen_options.band_letters,
                      "draw band letters b(i,j) instead of generators");
    add_output_options(gen_cmd, output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (parse_cmd->parsed()) {
            const std::vector<qpm::BandWord> words = read_arguments(inputs);
            ordered_json report = ordered_json::array();
            std::string text;
            for (const qpm::BandWord& w : words) {
                report.push_back(qpm::format_braid(w));
                text += qpm::format_braid(w) + "\n";
            }
            if (output.format == "json") {
                write_output(output, report.dump(2) + "\n");
            } else {
                write_output(output, text);
            }
            return kExitResult;
        }

        if (invariants_cmd->parsed()) {
            const std::vector<qpm::BandWord> words = read_arguments(inputs);
            ordered_json report = ordered_json::array();
            for (const qpm::BandWord& w : words) report.push_back(qpm::invariants_json(w));
            return emit_report(output, report, kExitResult);
        }

        if (reduce_cmd->parsed() || decompose_cmd->parsed()) {
            const bool decompose = decompose_cmd->parsed();
            const std::vector<qpm::PositiveWord> words = to_positive(read_arguments(inputs));
            const int n_mod = modulus.value_or(qpm::minimal_modulus(ratio));
            ordered_json report = ordered_json::array();
            for (const qpm::PositiveWord& w : words) {
                const qpm::ReductionReport reduction = qpm::reduce_mod(w, n_mod, ratio);
                if (decompose) {
                    const qpm::SummandTuple tuple = qpm::decompose_connected_sum(reduction);
                    report.push_back(qpm::decomposition_json(reduction, tuple));
                } else {
                    report.push_back(qpm::reduction_json(reduction));
                }
            }
            return emit_report(output, report, kExitResult);
        }

        if (embed_cmd->parsed()) {
            const qpm::BandWord u = read_single(left);
            const qpm::BandWord v = read_single(right);
            std::optional<qpm::Embedding> certificate = qpm::subword_embeds(u, v);
            if (!certificate) certificate = qpm::subword_embeds(v, u);
            const ordered_json report = qpm::embed_pair_json(u, v, certificate);
            return emit_report(output, report, certificate ? kExitResult : kExitEmpty,
                               certificate ? "" : "incomparable");
        }

        if (find_pair_cmd->parsed()) {
            const std::vector<qpm::BandWord> words = read_arguments(inputs);
            for (const qpm::BandWord& w : words) {
                if (w.strand_count() != words.front().strand_count())
                    throw InputError("find-pair requires one common strand count");
            }
            const auto pair = qpm::find_comparable_pair(
                words,
                [](const qpm::BandWord& a, const qpm::BandWord& b) {
                    return qpm::subword_embeds(a, b);
                });
            const ordered_json report = qpm::subword_pair_json(words, pair);
            return emit_report(output, report, pair ? kExitResult : kExitEmpty,
                               pair ? "" : "no comparable pair");
        }

        if (r_minor_cmd->parsed()) {
            const std::vector<qpm::PositiveWord> words = to_positive(read_arguments(inputs));
            const int n_mod = modulus.value_or(qpm::minimal_modulus(ratio));
            const std::optional<qpm::RMinorReport> result =
                qpm::r_minor_search(words, ratio, n_mod);
            const ordered_json report = qpm::r_minor_json(n_mod, ratio, words.size(), result);
            return emit_report(output, report, result ? kExitResult : kExitEmpty,
                               result ? "" : "no comparable pair");
        }

        if (twist_root_cmd->parsed()) {
            const std::vector<qpm::BandWord> words = read_arguments(inputs);
            ordered_json report = ordered_json::array();
            for (const qpm::BandWord& w : words)
                report.push_back(qpm::twist_root_json(qpm::twist_report(w, root_order)));
            return emit_report(output, report, kExitResult);
        }

        if (twist_pair_cmd->parsed()) {
            const std::vector<qpm::BandWord> words = read_arguments(inputs);
            const qpm::TwistPairReport result = qpm::twist_pair_search(words, root_order);
            const ordered_json report = qpm::twist_pair_json(words, result);
            const bool found = result.kind != qpm::TwistPairReport::Kind::none;
            return emit_report(output, report, found ? kExitResult : kExitEmpty,
                               found ? "" : "no comparable pair");
        }

        if (render_cmd->parsed()) {
            const std::vector<qpm::BandWord> words = read_arguments(inputs);
            if (words.size() != 1) throw InputError("render expects exactly one braid");
            const std::string svg =
                qpm::render_svg(qpm::build_surface(words.front()), render_options);
            write_output(output, svg);
            return kExitResult;
        }

        if (gen_cmd->parsed()) {
            const std::vector<qpm::BandWord> words = qpm::generate_family(gen_options);
            ordered_json report = ordered_json::array();
            std::string text;
            for (const qpm::BandWord& w : words) {
                report.push_back(qpm::format_braid(w));
                text += qpm::format_braid(w) + "\n";
            }
            if (output.format == "json") {
                write_output(output, report.dump(2) + "\n");
            } else {
                write_output(output, text);
            }
            return kExitResult;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const qpm::ParseError& e) {
        std::cerr << "error: line " << e.line() << ", column " << e.column() << ": "
                  << e.message() << "\n";
        return kExitError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }

    return kExitError;
}
