#pragma once

#include <optional>
#include <vector>

#include "homalg/homology.hpp"
#include "homalg/module.hpp"

namespace homalg {

/// A module isomorphic to the left Kan extension of its value at
/// baseDegree: constant rank on { y >= base }, zero elsewhere, with
/// isomorphism structure maps.
struct InducedModule {
    Degree baseDegree;
    uint32_t rank = 0;
};

struct TorsionReport {
    std::vector<std::pair<Degree, uint32_t>> torsionDims;  // degrees with nonzero torsion
    std::vector<std::pair<uint32_t, int64_t>> tht;         // (direction, torsion height), active directions
    bool isTorsion = false;
    bool isTorsionFree = false;
    PosetDesc box;
    bool certified = false;
};

/// Sigma_i: pullback along x -> x + o_i, realized on presentations by
/// decrementing the i-th coordinate of every degree (clamped at 0).
Presentation shift(const Presentation& V, uint32_t direction);

/// The colimit shift along all directions: every positive coordinate of
/// every degree drops by one.
Presentation bs(const Presentation& V);

Presentation bs_power(const Presentation& V, uint32_t s);

/// Rank of the stabilized corner value = the sheafification of V for the
/// atomic topology on the grid poset; rank 0 iff V is torsion.
InducedModule sheafify_poset(const Presentation& V);

/// Presentation of an induced module (P(base)^rank).
Presentation induced_presentation(const InducedModule& I, const PosetDesc& poset, const Field& F);

struct TorsionPart {
    TorsionReport report;
    Presentation presentation;  // V_T
};

TorsionPart torsion_part(const Presentation& V, std::optional<PosetDesc> box = {});

/// tht_i per active direction: max x_i over scan degrees where the map
/// V_x -> V_{x+o_i} is not injective, -1 if none.
std::vector<std::pair<uint32_t, int64_t>> torsion_heights(const Presentation& V,
                                                          std::optional<PosetDesc> box = {});

struct InducedCheck {
    bool induced = false;
    uint32_t rank = 0;
};

InducedCheck is_induced_at(const Presentation& V, const Degree& x, const PosetDesc& box);

/// The stabilization corner dominating x: active directions pushed to
/// pd+1, others left alone.  Structure maps beyond it are isomorphisms.
Degree stabilization_corner(const Presentation& V, const Degree& x, int64_t supPd);

}  // namespace homalg
