#include "homalg/random_module.hpp"

#include <algorithm>

namespace homalg {

namespace {

uint64_t draw(std::mt19937_64& rng, uint64_t n) { return n == 0 ? 0 : rng() % n; }

Scalar small_scalar(std::mt19937_64& rng, const Field& F) {
    static const long pool[] = {1, -1, 2, -2, 3, 1, -1, 1};
    return F.from_int(pool[draw(rng, 8)]);
}

Degree random_grid_degree(std::mt19937_64& rng, uint32_t directions, uint32_t maxExp) {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t d = 1; d <= directions; ++d) {
        uint32_t v = uint32_t(draw(rng, maxExp + 1));
        if (v > 0) e.emplace_back(d, v);
    }
    return Degree::grid(std::move(e));
}

Degree random_partition(std::mt19937_64& rng, uint32_t maxSum) {
    uint32_t total = uint32_t(draw(rng, maxSum + 1));
    std::vector<uint32_t> parts;
    uint32_t cap = total;
    while (total > 0) {
        uint32_t part = 1 + uint32_t(draw(rng, std::min(cap, total)));
        parts.push_back(part);
        cap = part;
        total -= part;
    }
    return Degree::young(std::move(parts));
}

}  // namespace

Presentation random_grid_module(uint64_t seed, const GridProfile& p) {
    std::mt19937_64 rng(seed);
    FreeModule F0;
    F0.poset = PosetDesc::grid(std::vector<uint32_t>(p.directions, p.maxExp + 3));
    F0.field = p.field;
    uint32_t nGens = 1 + uint32_t(draw(rng, p.maxGens));
    for (uint32_t g = 0; g < nGens; ++g)
        F0.gens.push_back(random_grid_degree(rng, p.directions, p.maxExp));
    uint32_t nRels = uint32_t(draw(rng, p.maxRels + 1));
    std::vector<Relation> rels;
    for (uint32_t r = 0; r < nRels; ++r) {
        // relation degree: join of a few generator degrees plus a small bump,
        // capped per coordinate by the profile exponent
        Degree d = F0.gens[draw(rng, nGens)];
        uint32_t extra = uint32_t(draw(rng, 2));
        for (uint32_t k = 0; k < 1 + extra; ++k) d = join(d, F0.gens[draw(rng, nGens)]);
        for (uint32_t dir = 1; dir <= p.directions; ++dir)
            if (draw(rng, 3) == 0 && d.grid_entry(dir) < p.maxExp) d = grid_add_unit(d, dir);
        Relation rel;
        rel.degree = d;
        for (uint32_t g = 0; g < nGens; ++g)
            if (leq(F0.gens[g], d) && draw(rng, 2) == 0)
                rel.entries.emplace_back(g, small_scalar(rng, p.field));
        if (rel.entries.empty()) continue;
        rels.push_back(std::move(rel));
    }
    return Presentation(std::move(F0), std::move(rels));
}

Presentation random_young_module(uint64_t seed, const YoungProfile& p) {
    std::mt19937_64 rng(seed);
    FreeModule F0;
    F0.poset = PosetDesc::young(48);
    F0.field = p.field;
    uint32_t nGens = 1 + uint32_t(draw(rng, p.maxGens));
    for (uint32_t g = 0; g < nGens; ++g) F0.gens.push_back(random_partition(rng, p.maxGenSum));
    uint32_t nRels = uint32_t(draw(rng, p.maxRels + 1));
    std::vector<Relation> rels;
    for (uint32_t r = 0; r < nRels; ++r) {
        Degree d = F0.gens[draw(rng, nGens)];
        uint32_t joins = 1 + uint32_t(draw(rng, 2));
        for (uint32_t k = 0; k < joins; ++k) d = join(d, F0.gens[draw(rng, nGens)]);
        if (norm_of(d, NormKind::Sum) < p.maxRelSum && draw(rng, 2) == 0) {
            // add one box to the first row
            std::vector<uint32_t> parts = d.parts;
            if (parts.empty()) parts.push_back(1);
            else ++parts[0];
            d = Degree::young(std::move(parts));
        }
        Relation rel;
        rel.degree = d;
        for (uint32_t g = 0; g < nGens; ++g)
            if (leq(F0.gens[g], d) && draw(rng, 2) == 0)
                rel.entries.emplace_back(g, small_scalar(rng, p.field));
        if (rel.entries.empty()) continue;
        rels.push_back(std::move(rel));
    }
    return Presentation(std::move(F0), std::move(rels));
}

OrbitPresentation random_orbit_module(uint64_t seed, const OrbitProfile& p) {
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> divisors;
    for (uint64_t d = 1; d <= p.modulus; ++d)
        if (p.modulus % d == 0) divisors.push_back(d);
    uint32_t nGens = 1 + uint32_t(draw(rng, p.maxGens));
    std::vector<uint64_t> gens;
    for (uint32_t g = 0; g < nGens; ++g) gens.push_back(divisors[draw(rng, divisors.size())]);
    uint32_t nRels = uint32_t(draw(rng, p.maxRels + 1));
    std::vector<OrbitRelation> rels;
    for (uint32_t r = 0; r < nRels; ++r) {
        OrbitRelation rel;
        rel.object = divisors[draw(rng, divisors.size())];
        for (uint32_t g = 0; g < nGens; ++g) {
            if (rel.object % gens[g] != 0 || draw(rng, 2) != 0) continue;
            OrbitRelationEntry e;
            e.gen = g;
            bool any = false;
            for (uint64_t t = 0; t < gens[g]; ++t) {
                if (draw(rng, 3) == 0) {
                    e.shifts.push_back(small_scalar(rng, p.field));
                    any = true;
                } else {
                    e.shifts.push_back(p.field.zero());
                }
            }
            if (!any) e.shifts[draw(rng, gens[g])] = p.field.one();
            rel.entries.push_back(std::move(e));
        }
        if (rel.entries.empty()) continue;
        rels.push_back(std::move(rel));
    }
    return OrbitPresentation(p.modulus, p.field, std::move(gens), std::move(rels));
}

Presentation random_torsion_free(uint64_t seed, const GridProfile& p) {
    std::mt19937_64 rng(seed);
    const Field& F = p.field;
    FreeModule F0;
    F0.poset = PosetDesc::grid(std::vector<uint32_t>(p.directions, p.maxExp + 3));
    F0.field = F;
    uint32_t nTargets = 1 + uint32_t(draw(rng, std::max<uint32_t>(1, p.maxGens / 2)));
    for (uint32_t g = 0; g < nTargets; ++g)
        F0.gens.push_back(random_grid_degree(rng, p.directions, p.maxExp));
    // source generators of a map F1 -> F0; its kernel is torsion free
    uint32_t nSrc = nTargets + 1 + uint32_t(draw(rng, p.maxGens));
    std::vector<Element> images;
    FreeModule F1;
    F1.poset = F0.poset;
    F1.field = F;
    for (uint32_t s = 0; s < nSrc; ++s) {
        Degree d = F0.gens[draw(rng, nTargets)];
        uint32_t joins = uint32_t(draw(rng, 2));
        for (uint32_t k = 0; k < joins; ++k) d = join(d, F0.gens[draw(rng, nTargets)]);
        F1.gens.push_back(d);
        Element img;
        img.degree = d;
        for (uint32_t g = 0; g < nTargets; ++g)
            if (leq(F0.gens[g], d) && draw(rng, 2) == 0)
                img.coeffs.emplace_back(g, small_scalar(rng, F));
        images.push_back(std::move(img));
    }
    Presentation freeTarget(F0, {});
    PosetDesc box = default_grid_box(Presentation(F1, {}));
    {
        // box must also cover the target data
        std::vector<uint32_t> caps = active_direction_caps(freeTarget);
        for (uint32_t d = 0; d < caps.size() && d < box.dirMax.size(); ++d)
            box.dirMax[d] = std::max(box.dirMax[d], caps[d] + 1);
    }
    auto kernel = minimal_kernel_generators(freeTarget, F1.gens, images, box);
    std::vector<Element> kgens;
    for (auto& [deg, vec] : kernel) {
        Element e;
        e.degree = deg;
        for (uint32_t g = 0; g < vec.size(); ++g)
            if (!F.is_zero(vec[g])) e.coeffs.emplace_back(g, vec[g]);
        kgens.push_back(std::move(e));
    }
    return submodule_presentation(F1, kgens).presentation;
}

SubmodulePresentation random_p0_submodule(uint64_t seed, const GridProfile& p) {
    std::mt19937_64 rng(seed);
    const Field& F = p.field;
    FreeModule F0;
    F0.poset = PosetDesc::grid(std::vector<uint32_t>(p.directions, 2 * p.maxExp + 2));
    F0.field = F;
    F0.gens = {Degree::grid_zero()};
    uint32_t nGens = 1 + uint32_t(draw(rng, p.maxGens));
    std::vector<Element> gens;
    for (uint32_t g = 0; g < nGens; ++g) {
        Element e;
        e.degree = random_grid_degree(rng, p.directions, p.maxExp);
        // unit ("monomial") or scaled coefficient on the single ambient generator
        e.coeffs.emplace_back(0, draw(rng, 2) == 0 ? F.one() : small_scalar(rng, F));
        gens.push_back(std::move(e));
    }
    return submodule_presentation(F0, gens);
}

}  // namespace homalg
