#include "qpm/report_json.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

namespace qpm {
namespace {

std::string fmt(const BandWord& w) { return format_braid(w); }
std::string fmt(const PositiveWord& w) { return format_braid(w.word()); }

ordered_json words_json(const std::vector<PositiveWord>& words) {
    ordered_json out = ordered_json::array();
    for (const PositiveWord& w : words) out.push_back(fmt(w));
    return out;
}

ordered_json tuple_json(const SummandTuple& tuple) {
    return ordered_json{{"components", words_json(tuple.components)},
                        {"cut_count", tuple.cut_count}};
}

// Reduction payload without the envelope, reused nested inside r-minor pair
// reports.
ordered_json reduction_body(const ReductionReport& report) {
    return ordered_json{{"source", fmt(report.source)},
                        {"modulus", report.modulus},
                        {"residue", report.residue},
                        {"r", report.r},
                        {"kept_positions", report.kept_positions},
                        {"reduced", fmt(report.reduced)},
                        {"chi_source", report.chi_source},
                        {"chi_reduced", report.chi_reduced},
                        {"ratio_ok", report.ratio_ok}};
}

ordered_json envelope(const char* kind) {
    return ordered_json{{"kind", kind}, {"schema", kReportSchema}};
}

void merge(ordered_json& into, const ordered_json& from) {
    for (const auto& [key, value] : from.items()) into[key] = value;
}

// --- verification -----------------------------------------------------------

using Failures = std::vector<std::string>;

void fail(Failures& failures, const std::string& where, const std::string& what) {
    failures.push_back(where + ": " + what);
}

int occurrence_count(const BandWord& w, int generator) {
    int count = 0;
    for (const Band& b : w.letters()) {
        if (b.i() == generator && b.j() == generator + 1) ++count;
    }
    return count;
}

// Independent replay of one reduction payload: the kept positions must embed
// reduced into source, the chi values must recompute from the words, each
// residue-class generator must survive exactly once, and ratio_ok must match
// the |chi| inequality.
void verify_reduction_body(const ordered_json& j, const std::string& where, Failures& failures) {
    const BandWord source = parse_braid(j.at("source").get<std::string>());
    const BandWord reduced = parse_braid(j.at("reduced").get<std::string>());
    const int modulus = j.at("modulus").get<int>();
    const int residue = j.at("residue").get<int>();
    const double r = j.at("r").get<double>();

    Embedding kept{j.at("kept_positions").get<std::vector<int>>()};
    if (!verify_embedding(reduced, source, kept))
        fail(failures, where, "kept_positions do not embed reduced into source");

    if (j.at("chi_source").get<int>() != euler_characteristic(source))
        fail(failures, where, "chi_source does not match the source word");
    if (j.at("chi_reduced").get<int>() != euler_characteristic(reduced))
        fail(failures, where, "chi_reduced does not match the reduced word");

    for (int g = residue; g <= reduced.strand_count() - 1; g += modulus) {
        const int in_source = occurrence_count(source, g);
        const int in_reduced = occurrence_count(reduced, g);
        if (in_reduced != (in_source > 0 ? 1 : 0))
            fail(failures, where,
                 "class generator s" + std::to_string(g) + " occurs " +
                     std::to_string(in_reduced) + " times in reduced");
    }

    const bool ratio_ok = std::abs(euler_characteristic(reduced)) >=
                          r * std::abs(euler_characteristic(source));
    if (j.at("ratio_ok").get<bool>() != ratio_ok)
        fail(failures, where, "ratio_ok does not match the chi values");
}

// Components must account for reduced exactly: chi(reduced) = sum chi_t - s
// and comps(reduced) = sum comps_t - s.
void verify_decomposition(const ordered_json& j, const std::string& where, Failures& failures) {
    const BandWord reduced = parse_braid(j.at("reduced").get<std::string>());
    const int cut_count = j.at("cut_count").get<int>();
    const auto& components = j.at("components");
    if (static_cast<int>(components.size()) != cut_count + 1)
        fail(failures, where, "component count is not cut_count + 1");

    int chi_sum = 0;
    int comps_sum = 0;
    for (const auto& text : components) {
        const BandWord part = parse_braid(text.get<std::string>());
        chi_sum += euler_characteristic(part);
        comps_sum += closure_permutation(part).cycle_count();
        if (!is_nonsplit(part)) fail(failures, where, "split component " + fmt(part));
    }
    if (chi_sum - cut_count != euler_characteristic(reduced))
        fail(failures, where, "chi identity fails across components");
    if (comps_sum - cut_count != closure_permutation(reduced).cycle_count())
        fail(failures, where, "boundary identity fails across components");
}

std::vector<BandWord> parse_words(const ordered_json& texts) {
    std::vector<BandWord> words;
    words.reserve(texts.size());
    for (const auto& text : texts) words.push_back(parse_braid(text.get<std::string>()));
    return words;
}

void verify_pair(const ordered_json& j, const std::string& where, Failures& failures) {
    const std::string mode = j.at("mode").get<std::string>();
    if (!j.at("comparable").get<bool>()) return;

    if (mode == "embed" || mode == "subword") {
        const BandWord smaller = parse_braid(j.at("smaller").get<std::string>());
        const BandWord larger = parse_braid(j.at("larger").get<std::string>());
        const Embedding cert = embedding_from_json(j.at("certificate"));
        if (!verify_embedding(smaller, larger, cert))
            fail(failures, where, "certificate does not embed smaller into larger");
        return;
    }
    if (mode == "r-minor") {
        verify_reduction_body(j.at("smaller_reduction"), where + "/smaller_reduction", failures);
        verify_reduction_body(j.at("larger_reduction"), where + "/larger_reduction", failures);

        const std::vector<BandWord> smaller = parse_words(j.at("smaller_tuple").at("components"));
        const std::vector<BandWord> larger = parse_words(j.at("larger_tuple").at("components"));
        const int modulus = j.at("modulus").get<int>();
        for (const BandWord& w : smaller) {
            if (w.strand_count() != modulus)
                fail(failures, where, "tuple component not completed to the modulus");
        }
        for (const BandWord& w : larger) {
            if (w.strand_count() != modulus)
                fail(failures, where, "tuple component not completed to the modulus");
        }

        const TupleEmbedding cert = tuple_embedding_from_json(j.at("certificate"));
        if (!verify_tuple_embedding(smaller, larger, cert))
            fail(failures, where, "tuple certificate does not verify");

        // Stabilization preserves chi, so completed components still satisfy
        // the connected-sum identity against each reduced word.
        const auto tuple_chi_ok = [&](const char* reduction_key, const char* tuple_key,
                                      const std::vector<BandWord>& words) {
            int chi_sum = 0;
            for (const BandWord& w : words) chi_sum += euler_characteristic(w);
            const BandWord reduced =
                parse_braid(j.at(reduction_key).at("reduced").get<std::string>());
            const int cut_count = j.at(tuple_key).at("cut_count").get<int>();
            return chi_sum - cut_count == euler_characteristic(reduced);
        };
        if (!tuple_chi_ok("smaller_reduction", "smaller_tuple", smaller))
            fail(failures, where, "smaller tuple breaks the chi identity");
        if (!tuple_chi_ok("larger_reduction", "larger_tuple", larger))
            fail(failures, where, "larger tuple breaks the chi identity");

        const bool ratio_ok = j.at("smaller_reduction").at("ratio_ok").get<bool>() &&
                              j.at("larger_reduction").at("ratio_ok").get<bool>();
        if (j.at("ratio_ok").get<bool>() != ratio_ok)
            fail(failures, where, "ratio_ok does not match the member reductions");
        return;
    }
    fail(failures, where, "unknown pair mode " + mode);
}

bool delta_prefix_matches(const BandWord& w, int exponent, Failures& failures,
                          const std::string& where) {
    const std::vector<Band> delta =
        delta_power(w.strand_count(), exponent).word().letters();
    if (static_cast<int>(delta.size()) > w.length()) {
        fail(failures, where, "word shorter than the claimed delta prefix");
        return false;
    }
    for (std::size_t t = 0; t < delta.size(); ++t) {
        if (!(w.letters()[t] == delta[t])) {
            fail(failures, where, "delta prefix mismatch at letter " + std::to_string(t + 1));
            return false;
        }
    }
    return true;
}

void verify_twist(const ordered_json& j, const std::string& where, Failures& failures) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "root") {
        const BandWord w = parse_braid(j.at("word").get<std::string>());
        const int root_order = j.at("root_order").get<int>();
        if (!j.at("exponent").is_null()) {
            const int exponent = j.at("exponent").get<int>();
            if (exponent != w.strand_count() / root_order)
                fail(failures, where, "exponent is not floor(n / N)");
            delta_prefix_matches(w, exponent, failures, where);
        }
        if (!j.at("contains_full_twist").is_null()) {
            const auto& containment = j.at("contains_full_twist");
            const int k = containment.at("k").get<int>();
            const Embedding cert = embedding_from_json(containment.at("certificate"));
            // The full twist lives in B_k while w lives in B_n, so the check
            // runs on raw letter sequences.
            if (!verify_embedding(delta_power(k, k).word().letters(), w.letters(), cert))
                fail(failures, where, "full-twist certificate does not verify");
        }
        return;
    }
    if (mode == "pair") {
        const std::string result = j.at("result").get<std::string>();
        if (result == "none") return;
        const BandWord smaller = parse_braid(j.at("smaller").get<std::string>());
        const BandWord larger = parse_braid(j.at("larger").get<std::string>());
        const Embedding cert = embedding_from_json(j.at("certificate"));
        if (result == "full") {
            if (!verify_embedding(smaller, larger, cert))
                fail(failures, where, "certificate does not embed smaller into larger");
            return;
        }
        if (result == "partial") {
            const int twist_size = j.at("twist_size").get<int>();
            if (twist_size != smaller.strand_count())
                fail(failures, where, "twist_size is not the smaller strand count");
            if (!verify_embedding(delta_power(twist_size, twist_size).word().letters(),
                                  larger.letters(), cert))
                fail(failures, where, "full-twist certificate does not verify");
            return;
        }
        fail(failures, where, "unknown twist result " + result);
        return;
    }
    fail(failures, where, "unknown twist mode " + mode);
}

void verify_one(const ordered_json& j, const std::string& where, Failures& failures) {
    try {
        if (j.is_array()) {
            for (std::size_t t = 0; t < j.size(); ++t)
                verify_one(j[t], where + "[" + std::to_string(t) + "]", failures);
            return;
        }
        if (!j.is_object() || !j.contains("kind")) return;  // nothing certified
        if (j.at("schema").get<int>() != kReportSchema) {
            fail(failures, where, "unsupported schema version");
            return;
        }
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "reduction") {
            verify_reduction_body(j, where, failures);
            if (j.contains("components")) verify_decomposition(j, where, failures);
        } else if (kind == "pair") {
            verify_pair(j, where, failures);
        } else if (kind == "twist") {
            verify_twist(j, where, failures);
        } else {
            fail(failures, where, "unknown report kind " + kind);
        }
    } catch (const std::exception& e) {
        fail(failures, where, e.what());
    }
}

}  // namespace

ordered_json embedding_json(const Embedding& e) { return ordered_json{{"indices", e.indices}}; }

ordered_json tuple_embedding_json(const TupleEmbedding& te) {
    ordered_json components = ordered_json::array();
    for (const Embedding& e : te.components) components.push_back(e.indices);
    return ordered_json{{"targets", te.targets}, {"components", components}};
}

Embedding embedding_from_json(const ordered_json& j) {
    return Embedding{j.at("indices").get<std::vector<int>>()};
}

TupleEmbedding tuple_embedding_from_json(const ordered_json& j) {
    TupleEmbedding te;
    te.targets = j.at("targets").get<std::vector<int>>();
    for (const auto& indices : j.at("components"))
        te.components.push_back(Embedding{indices.get<std::vector<int>>()});
    return te;
}

ordered_json invariants_json(const BandWord& w) {
    const SurfaceInvariants inv = surface_invariants(build_surface(w));
    ordered_json j{{"word", fmt(w)},
                   {"strands", w.strand_count()},
                   {"length", w.length()},
                   {"chi", inv.chi},
                   {"connected", inv.connected},
                   {"boundary_components", inv.boundary_components}};
    if (inv.genus)
        j["genus"] = *inv.genus;
    else
        j["genus"] = nullptr;
    return j;
}

ordered_json reduction_json(const ReductionReport& report) {
    ordered_json j = envelope("reduction");
    merge(j, reduction_body(report));
    return j;
}

ordered_json decomposition_json(const ReductionReport& report, const SummandTuple& tuple) {
    ordered_json j = reduction_json(report);
    merge(j, tuple_json(tuple));
    return j;
}

ordered_json embed_pair_json(const BandWord& u, const BandWord& v,
                             const std::optional<Embedding>& certificate) {
    ordered_json j = envelope("pair");
    j["mode"] = "embed";
    j["comparable"] = certificate.has_value();
    j["left"] = fmt(u);
    j["right"] = fmt(v);
    if (certificate) {
        // The caller tried u <= v first; a certificate longer than u can only
        // mean the v <= u direction succeeded.
        const bool left_smaller = certificate->indices.size() == static_cast<std::size_t>(u.length());
        j["smaller"] = left_smaller ? fmt(u) : fmt(v);
        j["larger"] = left_smaller ? fmt(v) : fmt(u);
        j["certificate"] = embedding_json(*certificate);
    }
    return j;
}

ordered_json subword_pair_json(const std::vector<BandWord>& family,
                               const std::optional<PairReport<Embedding>>& pair) {
    ordered_json j = envelope("pair");
    j["mode"] = "subword";
    j["family_size"] = family.size();
    j["comparable"] = pair.has_value();
    if (pair) {
        j["smaller_index"] = pair->smaller_index;
        j["larger_index"] = pair->larger_index;
        j["smaller"] = fmt(family[static_cast<std::size_t>(pair->smaller_index) - 1]);
        j["larger"] = fmt(family[static_cast<std::size_t>(pair->larger_index) - 1]);
        j["certificate"] = embedding_json(pair->certificate);
    }
    return j;
}

ordered_json r_minor_json(int modulus, double r, std::size_t family_size,
                          const std::optional<RMinorReport>& report) {
    ordered_json j = envelope("pair");
    j["mode"] = "r-minor";
    j["modulus"] = modulus;
    j["r"] = r;
    j["family_size"] = family_size;
    j["comparable"] = report.has_value();
    if (report) {
        j["smaller_index"] = report->smaller_index;
        j["larger_index"] = report->larger_index;
        j["smaller_reduction"] = reduction_body(report->smaller_reduction);
        j["larger_reduction"] = reduction_body(report->larger_reduction);
        j["smaller_tuple"] = tuple_json(report->smaller_tuple);
        j["larger_tuple"] = tuple_json(report->larger_tuple);
        j["certificate"] = tuple_embedding_json(report->certificate);
        j["ratio_ok"] = report->ratio_ok;
    }
    return j;
}

ordered_json twist_root_json(const TwistReport& report) {
    ordered_json j = envelope("twist");
    j["mode"] = "root";
    j["word"] = fmt(report.word);
    j["root_order"] = report.root_order;
    if (report.exponent)
        j["exponent"] = *report.exponent;
    else
        j["exponent"] = nullptr;
    if (report.contains_full_twist) {
        j["contains_full_twist"] =
            ordered_json{{"k", report.contains_full_twist->k},
                         {"certificate", embedding_json(report.contains_full_twist->certificate)}};
    } else {
        j["contains_full_twist"] = nullptr;
    }
    return j;
}

ordered_json twist_pair_json(const std::vector<BandWord>& family, const TwistPairReport& report) {
    ordered_json j = envelope("twist");
    j["mode"] = "pair";
    j["root_order"] = report.root_order;
    j["family_size"] = family.size();
    switch (report.kind) {
        case TwistPairReport::Kind::none:
            j["result"] = "none";
            break;
        case TwistPairReport::Kind::full:
            j["result"] = "full";
            break;
        case TwistPairReport::Kind::partial:
            j["result"] = "partial";
            break;
    }
    if (report.kind != TwistPairReport::Kind::none) {
        j["smaller_index"] = report.smaller_index;
        j["larger_index"] = report.larger_index;
        j["smaller"] = fmt(family[static_cast<std::size_t>(report.smaller_index) - 1]);
        j["larger"] = fmt(family[static_cast<std::size_t>(report.larger_index) - 1]);
        j["certificate"] = embedding_json(report.certificate.value());
        if (report.kind == TwistPairReport::Kind::partial) {
            j["twist_size"] = report.twist_size;
            j["note"] =
                "smaller embeds into the full-twist fibre by Rudolph's characterization; "
                "cited, not certified";
        }
    }
    return j;
}

std::vector<std::string> verify_report(const ordered_json& report) {
    Failures failures;
    verify_one(report, "report", failures);
    return failures;
}

}  // namespace qpm
