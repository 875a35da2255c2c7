#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homalg/module.hpp"

namespace homalg {

using Support = std::vector<std::pair<Degree, uint32_t>>;  // (degree, multiplicity), canonical order

/// Free resolution F_s -> ... -> F_1 -> F_0 -> V -> 0, minimal by
/// construction: each F_i generator is a kernel element independent of the
/// images of generators at strictly smaller degrees, so the degree data of
/// F_i realizes H_i exactly (within the box).
struct ResolutionLevel {
    std::vector<Degree> gens;
    // level 0: ambient lifts into V's target (the cover surjection);
    // level i >= 1: differential images over the previous level's generators.
    std::vector<std::vector<std::pair<uint32_t, Scalar>>> images;
};

struct Resolution {
    std::vector<ResolutionLevel> levels;  // levels[i] = F_i
    PosetDesc box;
    bool certified = false;  // box provably contains every minimal syzygy degree

    Support level_support(uint32_t i) const;
    /// d_i composed with d_{i+1} as explicit columns at a degree (test hook).
    const ResolutionLevel& operator[](uint32_t i) const { return levels[i]; }
};

struct HdValues {
    int64_t gd = -1, pd = -1;
    uint64_t omega = 0;
    std::vector<int64_t> hd;  // hd[i], i = 0..s
};

struct HomologyReport {
    std::string moduleId;
    std::vector<Support> h;  // H_0 .. H_s
    HdValues sup, sum;
    PosetDesc box;
    bool certified = false;
};

/// Default homological box: grid -- active directions with per-direction
/// bound (max exponent over generators and relations) + 1, valid under the
/// sup norm; young -- join-closure bound per level, grown adaptively.
PosetDesc default_grid_box(const Presentation& V);

Support h0(const Presentation& V, const PosetDesc& box);

struct MinimalCover {
    FreeModule P;
    std::vector<Element> lifts;  // image of each P generator in V's ambient
    Presentation W;              // the kernel, minimally presented over the box
    PosetDesc box;
};

MinimalCover minimal_cover(const Presentation& V, const PosetDesc& box);

Resolution resolution(const Presentation& V, uint32_t length, std::optional<PosetDesc> box = {});

Support homology(const Presentation& V, uint32_t i, std::optional<PosetDesc> box = {});

int64_t hd(const Presentation& V, uint32_t i, NormKind norm, std::optional<PosetDesc> box = {});

HomologyReport homology_report(const Presentation& V, uint32_t s, std::optional<PosetDesc> box = {},
                               const std::string& id = "");

/// (gd, pd, omega) for both norms via a length-1 resolution.
HomologyReport pd_and_friends(const Presentation& V, std::optional<PosetDesc> box = {});

int64_t max_norm(const Support& s, NormKind n);

}  // namespace homalg
