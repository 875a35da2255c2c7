#include "homalg/shift.hpp"

#include <algorithm>

namespace homalg {

namespace {

Degree decrement(const Degree& d, uint32_t direction) { return grid_sub_unit(d, direction); }

Degree decrement_all(const Degree& d) {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (auto& [dir, exp] : d.entries)
        if (exp > 1) e.emplace_back(dir, exp - 1);
    return Degree::grid(std::move(e));
}

Presentation map_degrees(const Presentation& V, auto&& f) {
    FreeModule t = V.target();
    for (Degree& d : t.gens) d = f(d);
    std::vector<Relation> rels = V.relations();
    for (Relation& r : rels) r.degree = f(r.degree);
    return Presentation(std::move(t), std::move(rels));
}

void require_grid(const Presentation& V, const char* op) {
    if (V.poset().kind != PosetKind::Grid)
        throw Error(ErrorKind::Unsupported, std::string(op) + " applies to grid modules");
}

int64_t certified_sup_pd(const Presentation& V) {
    // hd_0 <= max generator norm and hd_1 <= max relation norm under any
    // norm (supports of H_0 / H_1 sit inside those degree sets), so this
    // bound dominates the sup-norm pd without running a resolution.
    uint64_t b = 0;
    for (const Degree& d : V.target().gens) b = std::max(b, norm_of(d, NormKind::Sup));
    for (const Relation& r : V.relations()) b = std::max(b, norm_of(r.degree, NormKind::Sup));
    return int64_t(b);
}

}  // namespace

Presentation shift(const Presentation& V, uint32_t direction) {
    require_grid(V, "the shift functor");
    return map_degrees(V, [&](const Degree& d) { return decrement(d, direction); });
}

Presentation bs(const Presentation& V) {
    require_grid(V, "the colimit shift");
    return map_degrees(V, [](const Degree& d) { return decrement_all(d); });
}

Presentation bs_power(const Presentation& V, uint32_t s) {
    Presentation out = V;
    for (uint32_t i = 0; i < s; ++i) out = bs(out);
    return out;
}

Degree stabilization_corner(const Presentation& V, const Degree& x, int64_t supPd) {
    std::vector<uint32_t> caps = active_direction_caps(V);
    Degree c = x;
    for (uint32_t dir = 1; dir <= caps.size(); ++dir) {
        if (caps[dir - 1] == 0) continue;
        uint32_t want = uint32_t(std::max<int64_t>(supPd + 1, 0));
        while (c.grid_entry(dir) < want) c = grid_add_unit(c, dir);
    }
    return c;
}

InducedModule sheafify_poset(const Presentation& V) {
    require_grid(V, "poset sheafification");
    InducedModule out;
    out.baseDegree = Degree::grid_zero();
    int64_t pd = certified_sup_pd(V);
    Degree corner = stabilization_corner(V, Degree::grid_zero(), pd);
    out.rank = V.evaluate(corner).dimension;
    return out;
}

Presentation induced_presentation(const InducedModule& I, const PosetDesc& poset, const Field& F) {
    FreeModule t;
    t.poset = poset;
    t.field = F;
    t.gens.assign(I.rank, I.baseDegree);
    return Presentation(std::move(t), {});
}

TorsionPart torsion_part(const Presentation& V, std::optional<PosetDesc> box) {
    require_grid(V, "the torsion part");
    const Field& F = V.field();
    int64_t pd = certified_sup_pd(V);
    bool clippedBox = false;
    PosetDesc b = box ? *box : default_grid_box(V);
    if (!box) {
        // keep the scan inside the region
        for (uint32_t d = 0; d < b.dirMax.size(); ++d)
            if (d < V.poset().dirMax.size()) b.dirMax[d] = std::min(b.dirMax[d], V.poset().dirMax[d]);
            else { b.dirMax[d] = 0; clippedBox = true; }
    }
    TorsionPart out;
    out.report.box = b;
    out.report.certified = !box && !clippedBox && !V.poset().sumCap;

    std::vector<Element> torsionGens;
    bool allTorsion = true, anyTorsion = false;
    for (const Degree& z : b.enumerate()) {
        const GradedPiece& vz = V.evaluate(z);
        if (vz.dimension == 0) continue;
        Degree corner = stabilization_corner(V, z, pd);
        // kernel of V_z -> V_corner = the torsion subspace at z
        std::vector<std::vector<Scalar>> cols = V.structure_map(z, corner);
        auto kernel = kernel_basis_columns(cols, V.evaluate(corner).dimension, F);
        if (kernel.empty()) {
            allTorsion = false;
            continue;
        }
        anyTorsion = true;
        out.report.torsionDims.emplace_back(z, uint32_t(kernel.size()));
        if (kernel.size() < vz.dimension) allTorsion = false;
        // adopt only torsion vectors not generated from below
        Eliminator span(F, vz.dimension);
        for (const Element& e : torsionGens)
            if (leq(e.degree, z)) span.insert(V.push_ambient(e, z));
        for (auto& v : kernel) {
            std::vector<Scalar> probe = v;
            if (!span.insert(std::move(probe))) continue;
            Element e;
            e.degree = z;
            for (uint32_t k = 0; k < vz.dimension; ++k)
                if (!F.is_zero(v[k])) e.coeffs.emplace_back(vz.activeGens[vz.repRows[k]], v[k]);
            torsionGens.push_back(std::move(e));
        }
    }
    out.report.isTorsionFree = !anyTorsion;
    out.report.isTorsion = allTorsion;

    out.presentation = present_submodule(V, torsionGens, b).presentation;
    for (auto& [dir, h] : torsion_heights(V, b)) out.report.tht.emplace_back(dir, h);
    return out;
}

std::vector<std::pair<uint32_t, int64_t>> torsion_heights(const Presentation& V,
                                                          std::optional<PosetDesc> box) {
    require_grid(V, "torsion heights");
    const Field& F = V.field();
    std::vector<uint32_t> caps = active_direction_caps(V);
    int64_t pd = certified_sup_pd(V);
    PosetDesc scan = box ? *box : [&] {
        std::vector<uint32_t> dirMax(caps.size(), 0);
        for (uint32_t d = 0; d < caps.size(); ++d)
            if (caps[d] > 0) dirMax[d] = uint32_t(pd + 1);
        return PosetDesc::grid(dirMax);
    }();
    std::vector<std::pair<uint32_t, int64_t>> out;
    for (uint32_t dir = 1; dir <= caps.size(); ++dir) {
        if (caps[dir - 1] == 0) continue;
        int64_t h = -1;
        for (const Degree& z : scan.enumerate()) {
            const GradedPiece& vz = V.evaluate(z);
            if (vz.dimension == 0) continue;
            Degree up = grid_add_unit(z, dir);
            if (!V.poset().contains(up)) continue;
            auto cols = V.structure_map(z, up);
            if (rank_of_columns(cols, V.evaluate(up).dimension, F) < vz.dimension)
                h = std::max<int64_t>(h, z.grid_entry(dir));
        }
        out.emplace_back(dir, h);
    }
    return out;
}

InducedCheck is_induced_at(const Presentation& V, const Degree& x, const PosetDesc& box) {
    const Field& F = V.field();
    InducedCheck out;
    out.rank = V.evaluate(x).dimension;
    for (const Degree& z : box.enumerate()) {
        uint32_t dim = V.evaluate(z).dimension;
        if (leq(x, z)) {
            if (dim != out.rank) return out;
            auto cols = V.structure_map(x, z);
            if (rank_of_columns(cols, dim, F) != out.rank) return out;
        } else if (dim != 0) {
            return out;
        }
    }
    out.induced = true;
    return out;
}

}  // namespace homalg
