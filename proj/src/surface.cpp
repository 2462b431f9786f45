#include "qpm/surface.hpp"

#include <stdexcept>

namespace qpm {

SurfaceModel build_surface(const BandWord& w) {
    SurfaceModel s;
    s.disc_count = w.strand_count();
    s.bands.reserve(w.letters().size());
    int position = 1;
    for (const Band& b : w.letters()) {
        s.bands.push_back({b.i(), b.j(), position});
        ++position;
    }
    return s;
}

namespace {

BandWord to_word(const SurfaceModel& s) {
    std::vector<Band> letters;
    letters.reserve(s.bands.size());
    for (const SurfaceModel::Attachment& a : s.bands) letters.emplace_back(a.i, a.j);
    return BandWord(s.disc_count, std::move(letters));
}

}  // namespace

SurfaceInvariants surface_invariants(const SurfaceModel& s) {
    const BandWord w = to_word(s);
    SurfaceInvariants inv;
    inv.chi = euler_characteristic(w);
    inv.connected = is_nonsplit(w);
    inv.boundary_components = closure_permutation(w).cycle_count();
    if (inv.connected) {
        const int twice_genus = 2 - inv.chi - inv.boundary_components;
        if (twice_genus < 0 || twice_genus % 2 != 0)
            throw std::logic_error("genus formula produced an invalid value");
        inv.genus = twice_genus / 2;
    }
    return inv;
}

std::string render_svg(const SurfaceModel& s, const RenderOptions& options) {
    const int n = s.disc_count;
    const int m = static_cast<int>(s.bands.size());
    const int margin = 24;
    const int disc_height = 14;
    const int slot = options.band_thickness + 16;
    const int disc_width = slot * (m + 1);
    const int width = 2 * margin + disc_width;
    const int height = 2 * margin + (n - 1) * options.disc_spacing + disc_height;

    const auto disc_top = [&](int disc) {
        return margin + (disc - 1) * options.disc_spacing;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) + "\">\n";
    for (int disc = 1; disc <= n; ++disc) {
        svg += "  <rect id=\"disc-" + std::to_string(disc) + "\" class=\"disc\" x=\"" +
               std::to_string(margin) + "\" y=\"" + std::to_string(disc_top(disc)) +
               "\" width=\"" + std::to_string(disc_width) + "\" height=\"" +
               std::to_string(disc_height) +
               "\" rx=\"6\" fill=\"#d9d9d9\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    // Bands in word order, so later letters end up on top.
    for (const SurfaceModel::Attachment& a : s.bands) {
        const int x = margin + a.word_position * slot - slot / 2;
        const int y1 = disc_top(a.i) + disc_height;
        const int y2 = disc_top(a.j);
        svg += "  <path id=\"band-" + std::to_string(a.word_position) +
               "\" class=\"band\" d=\"M " + std::to_string(x) + " " + std::to_string(y1) +
               " L " + std::to_string(x) + " " + std::to_string(y2) +
               "\" stroke=\"#4a6fa5\" stroke-width=\"" + std::to_string(options.band_thickness) +
               "\" fill=\"none\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace qpm
