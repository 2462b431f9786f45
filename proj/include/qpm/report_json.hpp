#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpm/braidword.hpp"
#include "qpm/minors.hpp"
#include "qpm/surface.hpp"
#include "qpm/wqo.hpp"

namespace qpm {

/// Key order is part of the stable output, hence ordered_json throughout.
using ordered_json = nlohmann::ordered_json;

/// Report schema v1. Reports carry {"kind": "reduction"|"pair"|"twist",
/// "schema": 1, ...}; words are embedded as canonical grammar text and
/// certificates as index arrays: {"indices": [...]} for one embedding,
/// {"targets": [...], "components": [[...], ...]} for a tuple embedding.
inline constexpr int kReportSchema = 1;

ordered_json embedding_json(const Embedding& e);
ordered_json tuple_embedding_json(const TupleEmbedding& te);
Embedding embedding_from_json(const ordered_json& j);
TupleEmbedding tuple_embedding_from_json(const ordered_json& j);

/// Plain (non-report) object for the parse/invariants subcommands.
ordered_json invariants_json(const BandWord& w);

ordered_json reduction_json(const ReductionReport& report);
ordered_json decomposition_json(const ReductionReport& report, const SummandTuple& tuple);
ordered_json embed_pair_json(const BandWord& u, const BandWord& v,
                             const std::optional<Embedding>& certificate);
ordered_json subword_pair_json(const std::vector<BandWord>& family,
                               const std::optional<PairReport<Embedding>>& pair);
ordered_json r_minor_json(int modulus, double r, std::size_t family_size,
                          const std::optional<RMinorReport>& report);
ordered_json twist_root_json(const TwistReport& report);
ordered_json twist_pair_json(const std::vector<BandWord>& family, const TwistPairReport& report);

/// Replays every certificate inside a report (or an array of reports)
/// through the independent checkers, re-deriving words from their embedded
/// canonical text. Returns human-readable failure descriptions; empty means
/// the report verifies.
std::vector<std::string> verify_report(const ordered_json& report);

}  // namespace qpm
