#include "homalg/homology.hpp"

#include <algorithm>

namespace homalg {

namespace {

Support aggregate(const std::vector<Degree>& degs) {
    Support out;
    for (const Degree& d : degs) {
        if (!out.empty() && out.back().first == d) ++out.back().second;
        else out.emplace_back(d, 1);
    }
    return out;
}

}  // namespace

Support Resolution::level_support(uint32_t i) const {
    if (i >= levels.size()) return {};
    return aggregate(levels[i].gens);  // gens are adopted in canonical order
}

int64_t max_norm(const Support& s, NormKind n) {
    int64_t m = -1;
    for (auto& [d, mult] : s) {
        (void)mult;
        m = std::max<int64_t>(m, int64_t(norm_of(d, n)));
    }
    return m;
}

PosetDesc default_grid_box(const Presentation& V) {
    if (V.poset().kind != PosetKind::Grid)
        throw Error(ErrorKind::Unsupported, "default grid box requested for a non-grid module");
    std::vector<uint32_t> caps = active_direction_caps(V);
    uint32_t n0 = 0;
    for (uint32_t c : caps) n0 = std::max(n0, c);
    std::vector<uint32_t> dirMax(caps.size(), 0);
    for (uint32_t d = 0; d < caps.size(); ++d)
        if (caps[d] > 0) dirMax[d] = n0 + 1;
    return PosetDesc::grid(dirMax);
}

namespace {

// box within the module's declared region (never exceeds it)
PosetDesc clip_to_region(const PosetDesc& box, const PosetDesc& region, bool& clipped) {
    if (box.kind != region.kind) throw Error(ErrorKind::InvalidInput, "box kind disagrees with module poset");
    PosetDesc out = box;
    if (box.kind == PosetKind::Grid) {
        for (uint32_t d = 0; d < out.dirMax.size(); ++d) {
            uint32_t cap = d < region.dirMax.size() ? region.dirMax[d] : 0;
            if (out.dirMax[d] > cap) {
                out.dirMax[d] = cap;
                clipped = true;
            }
        }
        if (region.sumCap && (!out.sumCap || *out.sumCap > *region.sumCap)) {
            out.sumCap = region.sumCap;
            clipped = true;
        }
    } else if (box.kind == PosetKind::Young) {
        if (out.maxSum > region.maxSum) {
            out.maxSum = region.maxSum;
            clipped = true;
        }
    }
    return out;
}

struct H0Data {
    Support support;
    std::vector<Element> lifts;  // one per cover generator (multiplicity-expanded), ambient units
    std::vector<Degree> gens;
};

H0Data h0_with_lifts(const Presentation& V, const PosetDesc& box) {
    const Field& F = V.field();
    H0Data out;
    std::vector<Degree> degs;
    for (const Degree& z : box.enumerate()) {
        const GradedPiece& vz = V.evaluate(z);
        if (vz.dimension == 0) continue;
        Eliminator span(F, vz.dimension);
        for (const Degree& p : box.predecessors(z)) {
            auto cols = V.structure_map(p, z);
            for (auto& c : cols) span.insert(std::move(c));
        }
        if (span.rank() == vz.dimension) continue;
        // new H_0 classes: ambient units whose classes are independent of the span
        uint32_t added = 0;
        for (uint32_t k = 0; k < vz.dimension; ++k) {
            std::vector<Scalar> e(vz.dimension, F.zero());
            e[k] = F.one();
            if (!span.insert(std::move(e))) continue;
            Element lift;
            lift.degree = z;
            lift.coeffs.emplace_back(vz.activeGens[vz.repRows[k]], F.one());
            out.lifts.push_back(std::move(lift));
            degs.push_back(z);
            ++added;
        }
        if (added) out.support.emplace_back(z, added);
    }
    out.gens = std::move(degs);
    return out;
}

// One syzygy step: target T, source generators with ambient images into T;
// returns adopted minimal kernel generators as (degree, sparse coefficient
// vector over source generators).
std::vector<std::pair<Degree, std::vector<std::pair<uint32_t, Scalar>>>> syzygy_step(
    const Presentation& T, const std::vector<Degree>& srcDegrees, const std::vector<Element>& srcImages,
    const PosetDesc& box) {
    const Field& F = T.field();
    auto adopted = minimal_kernel_generators(T, srcDegrees, srcImages, box);
    std::vector<std::pair<Degree, std::vector<std::pair<uint32_t, Scalar>>>> out;
    for (auto& [d, vec] : adopted) {
        std::vector<std::pair<uint32_t, Scalar>> sparse;
        for (uint32_t g = 0; g < vec.size(); ++g)
            if (!F.is_zero(vec[g])) sparse.emplace_back(g, vec[g]);
        out.emplace_back(d, std::move(sparse));
    }
    return out;
}

Resolution resolve_in_box(const Presentation& V, uint32_t length, const PosetDesc& box) {
    Resolution R;
    R.box = box;
    H0Data h0d = h0_with_lifts(V, box);
    ResolutionLevel f0;
    f0.gens = h0d.gens;
    for (const Element& e : h0d.lifts) f0.images.push_back(e.coeffs);
    R.levels.push_back(std::move(f0));

    for (uint32_t i = 1; i <= length; ++i) {
        const ResolutionLevel& prev = R.levels.back();
        if (prev.gens.empty()) {
            R.levels.push_back({});
            continue;
        }
        std::vector<Element> images(prev.gens.size());
        for (uint32_t g = 0; g < prev.gens.size(); ++g)
            images[g] = Element{prev.gens[g], prev.images[g]};
        std::vector<std::pair<Degree, std::vector<std::pair<uint32_t, Scalar>>>> adopted;
        if (i == 1) {
            adopted = syzygy_step(V, prev.gens, images, box);
        } else {
            // kernel of a map between frees: the target is the free module
            // on the previous-previous level's generators
            FreeModule free;
            free.poset = V.poset();
            free.field = V.field();
            free.gens = R.levels[i - 2].gens;
            Presentation T(std::move(free), {});
            adopted = syzygy_step(T, prev.gens, images, box);
        }
        ResolutionLevel lvl;
        for (auto& [d, img] : adopted) {
            lvl.gens.push_back(d);
            lvl.images.push_back(std::move(img));
        }
        R.levels.push_back(std::move(lvl));
    }
    return R;
}

// Young boxes grow until they cover the join closure of every computed
// level's support (each syzygy lives below the join of the previous
// level's support degrees).
Resolution resolve_young(const Presentation& V, uint32_t length) {
    uint32_t B = 0;
    for (const Degree& d : V.target().gens) B = std::max<uint32_t>(B, uint32_t(norm_of(d, NormKind::Sum)));
    for (const Relation& r : V.relations()) B = std::max<uint32_t>(B, uint32_t(norm_of(r.degree, NormKind::Sum)));
    bool clipped = false;
    for (int rounds = 0; rounds < 16; ++rounds) {
        PosetDesc box = clip_to_region(PosetDesc::young(B), V.poset(), clipped);
        Resolution R = resolve_in_box(V, length, box);
        uint32_t needed = B;
        for (uint32_t i = 0; i + 1 < R.levels.size(); ++i) {
            Degree j = Degree::young({});
            for (const Degree& d : R.levels[i].gens) j = join(j, d);
            needed = std::max<uint32_t>(needed, uint32_t(norm_of(j, NormKind::Sum)));
        }
        if (needed <= box.maxSum || clipped) {
            R.certified = !clipped && needed <= box.maxSum;
            return R;
        }
        B = needed;
    }
    throw Error(ErrorKind::Internal, "young box failed to stabilize");
}

}  // namespace

Support h0(const Presentation& V, const PosetDesc& box) { return h0_with_lifts(V, box).support; }

Resolution resolution(const Presentation& V, uint32_t length, std::optional<PosetDesc> box) {
    if (box) {
        Resolution R = resolve_in_box(V, length, *box);
        R.certified = false;  // caller-supplied boxes are box-relative
        return R;
    }
    switch (V.poset().kind) {
        case PosetKind::Grid: {
            bool clipped = false;
            PosetDesc b = clip_to_region(default_grid_box(V), V.poset(), clipped);
            Resolution R = resolve_in_box(V, length, b);
            R.certified = !clipped;
            return R;
        }
        case PosetKind::Young:
            return resolve_young(V, length);
        case PosetKind::Orbit:
            throw Error(ErrorKind::Unsupported,
                        "orbit modules resolve through their grid restriction");
    }
    throw Error(ErrorKind::Internal, "unreachable");
}

MinimalCover minimal_cover(const Presentation& V, const PosetDesc& box) {
    Resolution R = resolve_in_box(V, 2, box);
    MinimalCover out;
    out.box = box;
    out.P.poset = V.poset();
    out.P.field = V.field();
    out.P.gens = R.levels[0].gens;
    for (uint32_t g = 0; g < R.levels[0].gens.size(); ++g)
        out.lifts.push_back(Element{R.levels[0].gens[g], R.levels[0].images[g]});
    FreeModule wTarget;
    wTarget.poset = V.poset();
    wTarget.field = V.field();
    wTarget.gens = R.levels[1].gens;
    std::vector<Relation> wRels;
    for (uint32_t g = 0; g < R.levels[2].gens.size(); ++g) {
        Relation r;
        r.degree = R.levels[2].gens[g];
        r.entries = R.levels[2].images[g];
        wRels.push_back(std::move(r));
    }
    out.W = Presentation(std::move(wTarget), std::move(wRels));
    return out;
}

Support homology(const Presentation& V, uint32_t i, std::optional<PosetDesc> box) {
    return resolution(V, i, box).level_support(i);
}

int64_t hd(const Presentation& V, uint32_t i, NormKind norm, std::optional<PosetDesc> box) {
    return max_norm(homology(V, i, box), norm);
}

HomologyReport homology_report(const Presentation& V, uint32_t s, std::optional<PosetDesc> box,
                               const std::string& id) {
    Resolution R = resolution(V, s, box);
    HomologyReport rep;
    rep.moduleId = id;
    rep.box = R.box;
    rep.certified = R.certified;
    for (uint32_t i = 0; i <= s; ++i) rep.h.push_back(R.level_support(i));
    for (NormKind n : {NormKind::Sup, NormKind::Sum}) {
        HdValues& v = n == NormKind::Sup ? rep.sup : rep.sum;
        for (uint32_t i = 0; i <= s; ++i) v.hd.push_back(max_norm(rep.h[i], n));
        v.gd = v.hd[0];
        v.pd = std::max(v.hd[0], s >= 1 ? v.hd[1] : int64_t(-1));
        v.omega = 0;
        for (auto& [d, m] : rep.h[0]) {
            (void)d;
            v.omega += m;
        }
    }
    return rep;
}

HomologyReport pd_and_friends(const Presentation& V, std::optional<PosetDesc> box) {
    return homology_report(V, 1, box);
}

}  // namespace homalg
