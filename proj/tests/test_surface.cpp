#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qpm/braidword.hpp"
#include "qpm/generate.hpp"
#include "qpm/surface.hpp"

using namespace qpm;

namespace {

const char* kAnnulusWord = "B7: b(4,7) b(3,5) b(2,4) b(1,3) b(2,6) b(5,7) b(1,6)";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("build_surface mirrors the word") {
    const SurfaceModel s = build_surface(parse_braid("B3: s2 b(1,3)"));
    CHECK(s.disc_count == 3);
    REQUIRE(s.bands.size() == 2);
    CHECK(s.bands[0] == SurfaceModel::Attachment{2, 3, 1});
    CHECK(s.bands[1] == SurfaceModel::Attachment{1, 3, 2});

    CHECK(build_surface(parse_braid("B4:")) == SurfaceModel{4, {}});
}

TEST_CASE("invariants of the seven-strand annulus") {
    const SurfaceInvariants inv = surface_invariants(build_surface(parse_braid(kAnnulusWord)));
    CHECK(inv.chi == 0);
    CHECK(inv.connected);
    CHECK(inv.boundary_components == 2);
    REQUIRE(inv.genus.has_value());
    CHECK(*inv.genus == 0);
}

TEST_CASE("genus cases") {
    // Single disc: chi 1, one boundary circle, genus 0.
    CHECK(surface_invariants(build_surface(parse_braid("B1:"))) ==
          SurfaceInvariants{1, true, 1, 0});
    // Unknot as closure of s1 in B2: disc-band annulus has chi 1... one band,
    // two discs: chi = 1, boundary = 1, genus 0.
    CHECK(surface_invariants(build_surface(parse_braid("B2: s1"))) ==
          SurfaceInvariants{1, true, 1, 0});
    // Trefoil fibre surface: chi -1, one boundary, genus 1.
    CHECK(surface_invariants(build_surface(parse_braid("B2: s1 s1 s1"))) ==
          SurfaceInvariants{-1, true, 1, 1});
    // Disconnected: genus absent.
    const SurfaceInvariants split = surface_invariants(build_surface(parse_braid("B2:")));
    CHECK(split.chi == 2);
    CHECK_FALSE(split.connected);
    CHECK(split.boundary_components == 2);
    CHECK_FALSE(split.genus.has_value());
}

TEST_CASE("invariants agree with the direct word computations") {
    Prng rng(909);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.in_range(1, 8);
        std::vector<Band> letters;
        const int length = n >= 2 ? rng.in_range(0, 16) : 0;
        for (int t = 0; t < length; ++t) {
            const int i = rng.in_range(1, n - 1);
            letters.emplace_back(i, rng.in_range(i + 1, n));
        }
        const BandWord w(n, letters);
        const SurfaceInvariants inv = surface_invariants(build_surface(w));
        CHECK(inv.chi == euler_characteristic(w));
        CHECK(inv.connected == is_nonsplit(w));
        CHECK(inv.boundary_components == oracles::cycle_count_oracle(w));
        if (inv.connected) {
            REQUIRE(inv.genus.has_value());
            CHECK(*inv.genus >= 0);
            CHECK(inv.chi == 2 - 2 * *inv.genus - inv.boundary_components);
        } else {
            CHECK_FALSE(inv.genus.has_value());
        }
    }
}

TEST_CASE("svg output is deterministic and structured") {
    const BandWord w = parse_braid("B3: s1 s2 s1 s1");
    const std::string svg = render_svg(build_surface(w));
    CHECK(svg == render_svg(build_surface(w)));

    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    for (int d = 1; d <= 3; ++d)
        CHECK(svg.find("id=\"disc-" + std::to_string(d) + "\"") != std::string::npos);
    for (int b = 1; b <= 4; ++b)
        CHECK(svg.find("id=\"band-" + std::to_string(b) + "\"") != std::string::npos);
    CHECK(svg.find("id=\"disc-4\"") == std::string::npos);
    CHECK(svg.find("id=\"band-5\"") == std::string::npos);
    // Integer-only geometry: no decimal point past the header (the xmlns URL
    // and version carry the only dots).
    CHECK(svg.find('.', svg.find("viewBox")) == std::string::npos);
}

TEST_CASE("render options move geometry deterministically") {
    const SurfaceModel s = build_surface(parse_braid("B2: s1"));
    RenderOptions wide;
    wide.disc_spacing = 80;
    wide.band_thickness = 10;
    const std::string a = render_svg(s);
    const std::string b = render_svg(s, wide);
    CHECK(a != b);
    CHECK(b.find("stroke-width=\"10\"") != std::string::npos);
}

TEST_CASE("annulus svg matches the golden bytes") {
    const std::string svg = render_svg(build_surface(parse_braid(kAnnulusWord)));
    CHECK(svg == read_file(std::string(GOLDEN_DIR) + "/annulus.svg"));
}
