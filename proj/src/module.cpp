#include "homalg/module.hpp"

#include <algorithm>

namespace homalg {

Presentation::Presentation(FreeModule target, std::vector<Relation> relations)
    : target_(std::move(target)), relations_(std::move(relations)) {
    validate();
}

Presentation& Presentation::operator=(const Presentation& o) {
    if (this != &o) {
        target_ = o.target_;
        relations_ = o.relations_;
        std::lock_guard<std::mutex> g(*mtx_);
        cache_.clear();
    }
    return *this;
}

void Presentation::validate() const {
    for (const Degree& d : target_.gens)
        if (!target_.poset.contains(d))
            throw Error(ErrorKind::Truncation, "generator degree outside the truncation region");
    for (const Relation& r : relations_) {
        if (!target_.poset.contains(r.degree))
            throw Error(ErrorKind::Truncation, "relation degree outside the truncation region");
        for (auto& [g, s] : r.entries) {
            (void)s;
            if (g >= target_.gens.size())
                throw Error(ErrorKind::InvalidInput, "relation entry references a missing generator");
            if (!leq(target_.gens[g], r.degree))
                throw Error(ErrorKind::InvalidInput,
                            "incomparable degrees: relation entry on generator not below the relation");
        }
    }
}

const GradedPiece& Presentation::evaluate(const Degree& x) const {
    if (!target_.poset.contains(x))
        throw Error(ErrorKind::Truncation, "degree " + to_string(x) + " outside the truncation region");
    {
        std::lock_guard<std::mutex> g(*mtx_);
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
    }
    const Field& F = target_.field;
    GradedPiece piece;
    piece.degree = x;
    std::vector<int> posOfGen(target_.gens.size(), -1);
    for (uint32_t g = 0; g < target_.gens.size(); ++g)
        if (leq(target_.gens[g], x)) {
            posOfGen[g] = int(piece.activeGens.size());
            piece.activeGens.push_back(g);
        }
    uint32_t rows = uint32_t(piece.activeGens.size());
    std::vector<std::vector<Scalar>> cols;
    for (const Relation& r : relations_) {
        if (!leq(r.degree, x)) continue;
        std::vector<Scalar> col(rows, F.zero());
        for (auto& [g, s] : r.entries) col[posOfGen[g]] = s;
        cols.push_back(std::move(col));
    }
    CokernelData ck = cokernel_of_columns(cols, rows, F);
    piece.dimension = ck.dimension;
    piece.repRows = std::move(ck.repRows);
    piece.projection = std::move(ck.projection);

    std::lock_guard<std::mutex> g(*mtx_);
    return cache_.emplace(x, std::move(piece)).first->second;
}

std::vector<std::vector<Scalar>> Presentation::structure_map(const Degree& x, const Degree& y) const {
    if (!leq(x, y)) throw Error(ErrorKind::InvalidInput, "structure map requires x <= y");
    const Field& F = target_.field;
    const GradedPiece& px = evaluate(x);
    const GradedPiece& py = evaluate(y);
    std::vector<int> posOfGenY(target_.gens.size(), -1);
    for (uint32_t j = 0; j < py.activeGens.size(); ++j) posOfGenY[py.activeGens[j]] = int(j);
    std::vector<std::vector<Scalar>> out;
    out.reserve(px.dimension);
    for (uint32_t k = 0; k < px.dimension; ++k) {
        // basis vector k of V_x is the class of the ambient unit at repRows[k]
        uint32_t gen = px.activeGens[px.repRows[k]];
        uint32_t j = uint32_t(posOfGenY[gen]);
        std::vector<Scalar> col(py.dimension, F.zero());
        for (uint32_t i = 0; i < py.dimension; ++i) col[i] = py.projection[i][j];
        out.push_back(std::move(col));
    }
    return out;
}

std::vector<Scalar> Presentation::push_ambient(const Element& e, const Degree& y) const {
    const Field& F = target_.field;
    const GradedPiece& py = evaluate(y);
    std::vector<int> posOfGenY(target_.gens.size(), -1);
    for (uint32_t j = 0; j < py.activeGens.size(); ++j) posOfGenY[py.activeGens[j]] = int(j);
    std::vector<Scalar> out(py.dimension, F.zero());
    for (auto& [g, s] : e.coeffs) {
        if (posOfGenY[g] < 0)
            throw Error(ErrorKind::InvalidInput, "element coefficient on a generator not active at target degree");
        uint32_t j = uint32_t(posOfGenY[g]);
        for (uint32_t i = 0; i < py.dimension; ++i)
            if (!F.is_zero(py.projection[i][j])) out[i] = F.add(out[i], F.mul(py.projection[i][j], s));
    }
    return out;
}

bool Presentation::is_zero_module() const {
    for (const Degree& d : target_.gens)
        if (evaluate(d).dimension > 0) return false;
    return true;
}

Presentation direct_sum(const Presentation& V, const Presentation& W) {
    if (!(V.poset() == W.poset()) || V.field() != W.field())
        throw Error(ErrorKind::InvalidInput, "direct sum requires matching poset and field");
    FreeModule t = V.target();
    uint32_t shift = uint32_t(t.gens.size());
    for (const Degree& d : W.target().gens) t.gens.push_back(d);
    std::vector<Relation> rels = V.relations();
    for (const Relation& r : W.relations()) {
        Relation s;
        s.degree = r.degree;
        for (auto& [g, v] : r.entries) s.entries.emplace_back(g + shift, v);
        rels.push_back(std::move(s));
    }
    return Presentation(std::move(t), std::move(rels));
}

Presentation permute_generators(const Presentation& V, const std::vector<uint32_t>& perm) {
    std::vector<uint32_t> inv(perm.size());
    for (uint32_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    FreeModule t = V.target();
    for (uint32_t i = 0; i < perm.size(); ++i) t.gens[i] = V.target().gens[perm[i]];
    std::vector<Relation> rels = V.relations();
    for (Relation& r : rels) {
        for (auto& [g, v] : r.entries) g = inv[g];
        std::sort(r.entries.begin(), r.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return Presentation(std::move(t), std::move(rels));
}

namespace {

std::pair<PosetDesc, bool> default_submodule_box(const FreeModule& F, const std::vector<Element>& gens) {
    if (F.poset.kind == PosetKind::Grid) {
        // Submodules of frees are torsion free, so all homological degrees
        // are bounded by the generation degree under the sup norm.
        uint64_t supBound = 0;
        uint32_t topDir = 0;
        for (const Element& e : gens) {
            supBound = std::max(supBound, norm_of(e.degree, NormKind::Sup));
            if (!e.degree.entries.empty()) topDir = std::max(topDir, e.degree.entries.back().first);
        }
        for (const Degree& d : F.gens) {
            supBound = std::max(supBound, norm_of(d, NormKind::Sup));
            if (!d.entries.empty()) topDir = std::max(topDir, d.entries.back().first);
        }
        bool clamped = false;
        std::vector<uint32_t> dirMax(topDir, uint32_t(supBound) + 1);
        for (uint32_t d = 0; d < dirMax.size(); ++d) {
            uint32_t cap = d < F.poset.dirMax.size() ? F.poset.dirMax[d] : 0;
            if (cap < dirMax[d]) {
                dirMax[d] = cap;
                clamped = true;
            }
        }
        return {PosetDesc::grid(dirMax, F.poset.sumCap), !clamped && !F.poset.sumCap};
    }
    if (F.poset.kind == PosetKind::Young) {
        // The kernel of the canonical cover is generated at joins of the
        // generator degrees.
        Degree j = Degree::young({});
        for (const Element& e : gens) j = join(j, e.degree);
        for (const Degree& d : F.gens) j = join(j, d);
        uint32_t b = uint32_t(norm_of(j, NormKind::Sum));
        return {PosetDesc::young(std::min<uint32_t>(b, F.poset.maxSum)), b <= F.poset.maxSum};
    }
    return {F.poset, true};
}

}  // namespace

// Degreewise kernel of a graded map (+) P(deg_i) -> V with adoption of
// minimal generators in canonical degree order.  Returns the adopted
// (degree, coefficient vector over source generators) pairs.
std::vector<std::pair<Degree, std::vector<Scalar>>> minimal_kernel_generators(
    const Presentation& V, const std::vector<Degree>& srcDegrees,
    const std::vector<Element>& srcImages, const PosetDesc& box) {
    const Field& F = V.field();
    std::vector<std::pair<Degree, std::vector<Scalar>>> adopted;
    for (const Degree& z : box.enumerate()) {
        std::vector<uint32_t> active;
        for (uint32_t g = 0; g < srcDegrees.size(); ++g)
            if (leq(srcDegrees[g], z)) active.push_back(g);
        if (active.empty()) continue;
        const GradedPiece& vz = V.evaluate(z);
        std::vector<std::vector<Scalar>> cols;
        cols.reserve(active.size());
        for (uint32_t g : active) cols.push_back(V.push_ambient(srcImages[g], z));
        auto kernel = kernel_basis_columns(cols, vz.dimension, F);
        if (kernel.empty()) continue;
        std::vector<int> posOf(srcDegrees.size(), -1);
        for (uint32_t i = 0; i < active.size(); ++i) posOf[active[i]] = int(i);
        Eliminator span(F, uint32_t(active.size()));
        for (auto& [d, vec] : adopted) {
            if (!leq(d, z) || d == z) continue;
            std::vector<Scalar> padded(active.size(), F.zero());
            for (uint32_t g = 0; g < srcDegrees.size(); ++g)
                if (!F.is_zero(vec[g])) padded[posOf[g]] = vec[g];
            span.insert(std::move(padded));
        }
        for (auto& v : kernel) {
            std::vector<Scalar> probe = v;
            if (!span.insert(std::move(probe))) continue;
            std::vector<Scalar> full(srcDegrees.size(), F.zero());
            for (uint32_t i = 0; i < active.size(); ++i) full[active[i]] = v[i];
            adopted.emplace_back(z, std::move(full));
        }
    }
    return adopted;
}

SubmodulePresentation present_submodule(const Presentation& V, const std::vector<Element>& gens,
                                        const PosetDesc& box) {
    const Field& F = V.field();
    for (const Element& e : gens)
        for (auto& [g, s] : e.coeffs) {
            (void)s;
            if (g >= V.target().gens.size())
                throw Error(ErrorKind::InvalidInput, "submodule generator outside the stated module");
            if (!leq(V.target().gens[g], e.degree))
                throw Error(ErrorKind::InvalidInput,
                            "incomparable degrees: element coefficient on a generator not below its degree");
        }
    std::vector<Degree> srcDegrees;
    for (const Element& e : gens) srcDegrees.push_back(e.degree);
    auto adopted = minimal_kernel_generators(V, srcDegrees, gens, box);

    FreeModule t;
    t.poset = V.poset();
    t.field = F;
    t.gens = srcDegrees;
    std::vector<Relation> rels;
    for (auto& [d, vec] : adopted) {
        Relation r;
        r.degree = d;
        for (uint32_t g = 0; g < vec.size(); ++g)
            if (!F.is_zero(vec[g])) r.entries.emplace_back(g, vec[g]);
        rels.push_back(std::move(r));
    }
    SubmodulePresentation out;
    out.presentation = Presentation(std::move(t), std::move(rels));
    out.boxUsed = box;
    return out;
}

SubmodulePresentation submodule_presentation(const FreeModule& F, const std::vector<Element>& gens,
                                             std::optional<PosetDesc> box) {
    Presentation ambient(F, {});
    auto [deflt, certified] = default_submodule_box(F, gens);
    PosetDesc b = box ? *box : deflt;
    SubmodulePresentation out = present_submodule(ambient, gens, b);
    out.certified = !box && certified;
    return out;
}

const GradedPiece& eval_young_restriction(const Presentation& gridV, const Degree& lambda) {
    if (gridV.poset().kind != PosetKind::Grid)
        throw Error(ErrorKind::Unsupported, "young restriction applies to grid modules");
    return gridV.evaluate(young_to_grid(lambda));
}

const GradedPiece& eval_young_lift(const Presentation& youngW, const Degree& gridX) {
    if (youngW.poset().kind != PosetKind::Young)
        throw Error(ErrorKind::Unsupported, "young lift applies to young modules");
    return youngW.evaluate(grid_to_young(gridX));
}

std::vector<uint32_t> active_direction_caps(const Presentation& V) {
    std::vector<uint32_t> caps;
    auto absorb = [&](const Degree& d) {
        for (auto& [dir, exp] : d.entries) {
            if (dir > caps.size()) caps.resize(dir, 0);
            caps[dir - 1] = std::max(caps[dir - 1], exp);
        }
    };
    for (const Degree& d : V.target().gens) absorb(d);
    for (const Relation& r : V.relations()) absorb(r.degree);
    return caps;
}

}  // namespace homalg
