#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpm/braidword.hpp"

namespace qpm {

/// The disc-band surface of a band word: one horizontal disc per strand,
/// one band per letter, attached in word order.
struct SurfaceModel {
    struct Attachment {
        int i;
        int j;
        int word_position;  // 1-based
        friend bool operator==(const Attachment&, const Attachment&) = default;
    };

    int disc_count;
    std::vector<Attachment> bands;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Computable invariants of a SurfaceModel. genus is present only when the
/// surface is connected; then chi == 2 - 2*genus - boundary_components.
struct SurfaceInvariants {
    int chi;
    bool connected;
    int boundary_components;
    std::optional<int> genus;

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// Diagram layout knobs. Everything else about the drawing is fixed, so
/// equal inputs and options give byte-identical SVG.
struct RenderOptions {
    int disc_spacing = 40;    // vertical distance between disc tops
    int band_thickness = 6;   // stroke width of a band
};

SurfaceModel build_surface(const BandWord& w);

SurfaceInvariants surface_invariants(const SurfaceModel& s);

/// Deterministic SVG 1.1 diagram: disc_count <rect> discs stacked
/// vertically, one <path> per band placed left-to-right by word position,
/// later bands drawn on top.
std::string render_svg(const SurfaceModel& s, const RenderOptions& options = {});

}  // namespace qpm
