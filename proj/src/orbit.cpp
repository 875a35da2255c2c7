#include "homalg/orbit.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace homalg {

using json = nlohmann::ordered_json;

OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f) {
    if (f.target != g.source) throw Error(ErrorKind::InvalidInput, "orbit morphisms not composable");
    OrbitMorphism h;
    h.source = f.source;
    h.target = g.target;
    h.shift = (g.shift % f.source + f.shift) % f.source;
    return h;
}

OrbitMorphism orbit_identity(uint64_t n) { return OrbitMorphism{n, n, 0}; }

OrbitPresentation::OrbitPresentation(uint64_t modulus, Field field, std::vector<uint64_t> gens,
                                     std::vector<OrbitRelation> relations)
    : modulus_(modulus), field_(std::move(field)), gens_(std::move(gens)),
      relations_(std::move(relations)) {
    for (uint64_t n : gens_)
        if (n == 0 || modulus_ % n != 0)
            throw Error(ErrorKind::InvalidInput, "orbit generator object must divide the modulus");
    for (const OrbitRelation& r : relations_) {
        if (r.object == 0 || modulus_ % r.object != 0)
            throw Error(ErrorKind::InvalidInput, "orbit relation object must divide the modulus");
        for (const OrbitRelationEntry& e : r.entries) {
            if (e.gen >= gens_.size())
                throw Error(ErrorKind::InvalidInput, "orbit relation references missing generator");
            if (r.object % gens_[e.gen] != 0)
                throw Error(ErrorKind::InvalidInput, "orbit relation entry on a generator not below it");
            if (e.shifts.size() != gens_[e.gen])
                throw Error(ErrorKind::InvalidInput, "orbit relation shift vector has wrong length");
        }
    }
}

OrbitPresentation& OrbitPresentation::operator=(const OrbitPresentation& o) {
    if (this != &o) {
        modulus_ = o.modulus_;
        field_ = o.field_;
        gens_ = o.gens_;
        relations_ = o.relations_;
        std::lock_guard<std::mutex> g(*mtx_);
        cache_.clear();
    }
    return *this;
}

const OrbitPiece& OrbitPresentation::evaluate(uint64_t n) const {
    if (n == 0 || modulus_ % n != 0)
        throw Error(ErrorKind::Truncation, "object does not divide the modulus");
    {
        std::lock_guard<std::mutex> g(*mtx_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
    }
    const Field& F = field_;
    OrbitPiece piece;
    piece.object = n;
    std::vector<int> offset(gens_.size(), -1);
    for (uint32_t g = 0; g < gens_.size(); ++g) {
        if (n % gens_[g] != 0) continue;
        offset[g] = int(piece.ambientBasis.size());
        for (uint32_t t = 0; t < gens_[g]; ++t) piece.ambientBasis.emplace_back(g, t);
    }
    uint32_t rows = uint32_t(piece.ambientBasis.size());
    std::vector<std::vector<Scalar>> cols;
    for (const OrbitRelation& r : relations_) {
        if (n % r.object != 0) continue;
        for (uint64_t a = 0; a < r.object; ++a) {
            std::vector<Scalar> col(rows, F.zero());
            for (const OrbitRelationEntry& e : r.entries) {
                uint64_t ng = gens_[e.gen];
                for (uint32_t t = 0; t < ng; ++t) {
                    // pushforward along (shift a): coefficient v[(t - a) mod ng]
                    uint32_t src = uint32_t(((t + ng - a % ng) % ng));
                    if (!F.is_zero(e.shifts[src]))
                        col[offset[e.gen] + t] = F.add(col[offset[e.gen] + t], e.shifts[src]);
                }
            }
            cols.push_back(std::move(col));
        }
    }
    CokernelData ck = cokernel_of_columns(cols, rows, F);
    piece.dimension = ck.dimension;
    piece.repRows = std::move(ck.repRows);
    piece.projection = std::move(ck.projection);

    // the generator of G_n acts by (g, t) -> (g, t + 1 mod n_g)
    piece.action.assign(piece.dimension, std::vector<Scalar>(piece.dimension, F.zero()));
    for (uint32_t k = 0; k < piece.dimension; ++k) {
        auto [g, t] = piece.ambientBasis[piece.repRows[k]];
        uint32_t image = offset[g] + uint32_t((t + 1) % gens_[g]);
        for (uint32_t i = 0; i < piece.dimension; ++i) piece.action[k][i] = piece.projection[i][image];
    }

    std::lock_guard<std::mutex> g(*mtx_);
    return cache_.emplace(n, std::move(piece)).first->second;
}

std::vector<std::vector<Scalar>> OrbitPresentation::structure_map(uint64_t n, uint64_t m,
                                                                  uint64_t a) const {
    if (m % n != 0) throw Error(ErrorKind::InvalidInput, "orbit structure map requires n | m");
    const Field& F = field_;
    const OrbitPiece& pn = evaluate(n);
    const OrbitPiece& pm = evaluate(m);
    std::vector<int> offsetM(gens_.size(), -1);
    for (uint32_t i = 0; i < pm.ambientBasis.size(); ++i)
        if (pm.ambientBasis[i].second == 0) offsetM[pm.ambientBasis[i].first] = int(i);
    std::vector<std::vector<Scalar>> out;
    out.reserve(pn.dimension);
    for (uint32_t k = 0; k < pn.dimension; ++k) {
        auto [g, t] = pn.ambientBasis[pn.repRows[k]];
        uint32_t image = uint32_t(offsetM[g]) + uint32_t((a % gens_[g] + t) % gens_[g]);
        std::vector<Scalar> col(pm.dimension, F.zero());
        for (uint32_t i = 0; i < pm.dimension; ++i) col[i] = pm.projection[i][image];
        out.push_back(std::move(col));
    }
    return out;
}

Presentation restrict_to_grid(const OrbitPresentation& M) {
    const Field& F = M.field();
    Degree topDeg = divisibility_encode(M.modulus());
    uint32_t topDir = topDeg.entries.empty() ? 0 : topDeg.entries.back().first;
    std::vector<uint32_t> region(topDir, 0);
    for (auto& [d, v] : topDeg.entries) region[d - 1] = v + 2;

    FreeModule target;
    target.poset = PosetDesc::grid(region);
    target.field = F;
    std::vector<std::pair<uint32_t, uint32_t>> flat;  // (orbit gen, shift) per grid generator
    std::vector<int> offset(M.gens().size(), -1);
    for (uint32_t g = 0; g < M.gens().size(); ++g) {
        offset[g] = int(target.gens.size());
        Degree d = divisibility_encode(M.gens()[g]);
        for (uint32_t t = 0; t < M.gens()[g]; ++t) {
            target.gens.push_back(d);
            flat.emplace_back(g, t);
        }
    }
    std::vector<Relation> rels;
    for (const OrbitRelation& r : M.relations()) {
        Degree rd = divisibility_encode(r.object);
        for (uint64_t a = 0; a < r.object; ++a) {
            Relation rel;
            rel.degree = rd;
            for (const OrbitRelationEntry& e : r.entries) {
                uint64_t ng = M.gens()[e.gen];
                for (uint32_t t = 0; t < ng; ++t) {
                    uint32_t src = uint32_t((t + ng - a % ng) % ng);
                    if (!F.is_zero(e.shifts[src]))
                        rel.entries.emplace_back(uint32_t(offset[e.gen]) + t, e.shifts[src]);
                }
            }
            rels.push_back(std::move(rel));
        }
    }
    return Presentation(std::move(target), std::move(rels));
}

namespace {

std::vector<uint64_t> divisors_of(uint64_t m) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> proper_divisor_covers(uint64_t n) {
    std::vector<uint64_t> out;
    uint64_t rest = n;
    for (uint64_t q = 2; q * q <= rest; ++q)
        if (rest % q == 0) {
            out.push_back(n / q);
            while (rest % q == 0) rest /= q;
        }
    if (rest > 1) out.push_back(n / rest);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::pair<uint64_t, uint32_t>> orbit_h0(const OrbitPresentation& M) {
    const Field& F = M.field();
    std::vector<std::pair<uint64_t, uint32_t>> support;
    for (uint64_t n : divisors_of(M.modulus())) {
        const OrbitPiece& pn = M.evaluate(n);
        if (pn.dimension == 0) continue;
        Eliminator span(F, pn.dimension);
        for (uint64_t p : proper_divisor_covers(n))
            for (uint64_t a = 0; a < p; ++a)
                for (auto& c : M.structure_map(p, n, a)) span.insert(std::move(c));
        if (span.rank() < pn.dimension) support.emplace_back(n, pn.dimension - span.rank());
    }
    return support;
}

OrbitHd orbit_gd_pd(const OrbitPresentation& M, NormKind norm) {
    const Field& F = M.field();
    OrbitHd out;
    auto h0 = orbit_h0(M);
    for (auto& [n, mult] : h0) {
        (void)mult;
        out.gd = std::max(out.gd, int64_t(norm_of(divisibility_encode(n), norm)));
    }
    // free cover: for each H_0 class at n, one copy of P(n) mapping onto a lift
    struct CoverGen {
        uint64_t object;
        std::vector<Scalar> lift;  // ambient coordinates of the lifted class at `object`
    };
    std::vector<CoverGen> cover;
    for (auto& [n, mult] : h0) {
        const OrbitPiece& pn = M.evaluate(n);
        Eliminator span(F, pn.dimension);
        for (uint64_t p : proper_divisor_covers(n))
            for (uint64_t a = 0; a < p; ++a)
                for (auto& c : M.structure_map(p, n, a)) span.insert(std::move(c));
        uint32_t added = 0;
        for (uint32_t k = 0; k < pn.dimension && added < mult; ++k) {
            std::vector<Scalar> e(pn.dimension, F.zero());
            e[k] = F.one();
            if (!span.insert(std::move(e))) continue;
            CoverGen cg;
            cg.object = n;
            cg.lift.assign(pn.ambientBasis.size(), F.zero());
            cg.lift[pn.repRows[k]] = F.one();
            cover.push_back(std::move(cg));
            ++added;
        }
    }
    // kernel of the cover at each object, then H_0 of the kernel
    std::map<uint64_t, std::vector<std::vector<Scalar>>> kernelAt;   // coordinates over cover basis (c, t)
    std::map<uint64_t, std::vector<uint32_t>> coverOffset;           // per object: offset of cover gen c
    auto coverBasisAt = [&](uint64_t m) {
        std::vector<uint32_t>& off = coverOffset[m];
        if (!off.empty() || cover.empty()) return;
        uint32_t pos = 0;
        for (auto& cg : cover) {
            off.push_back(pos);
            if (m % cg.object == 0) pos += uint32_t(cg.object);
        }
        off.push_back(pos);
    };
    auto pushLift = [&](const CoverGen& cg, uint64_t m, uint64_t t) {
        // image in V_m of V_{shift t}(lift)
        const OrbitPiece& pm = M.evaluate(m);
        const OrbitPiece& pn = M.evaluate(cg.object);
        std::vector<int> offsetM(M.gens().size(), -1);
        for (uint32_t i = 0; i < pm.ambientBasis.size(); ++i)
            if (pm.ambientBasis[i].second == 0) offsetM[pm.ambientBasis[i].first] = int(i);
        std::vector<Scalar> amb(pm.ambientBasis.size(), F.zero());
        for (uint32_t i = 0; i < pn.ambientBasis.size(); ++i) {
            if (F.is_zero(cg.lift[i])) continue;
            auto [g, s] = pn.ambientBasis[i];
            uint64_t ng = M.gens()[g];
            uint32_t image = uint32_t(offsetM[g]) + uint32_t((t % ng + s) % ng);
            amb[image] = F.add(amb[image], cg.lift[i]);
        }
        return apply_rows(pm.projection, amb, F);
    };
    int64_t gdW = -1;
    for (uint64_t m : divisors_of(M.modulus())) {
        coverBasisAt(m);
        const auto& off = coverOffset[m];
        if (off.empty()) continue;
        uint32_t nCols = off.back();
        if (nCols == 0) continue;
        const OrbitPiece& pm = M.evaluate(m);
        std::vector<std::vector<Scalar>> cols;
        cols.reserve(nCols);
        for (uint32_t c = 0; c < cover.size(); ++c) {
            if (m % cover[c].object != 0) continue;
            for (uint64_t t = 0; t < cover[c].object; ++t) cols.push_back(pushLift(cover[c], m, t));
        }
        auto K = kernel_basis_columns(cols, pm.dimension, F);
        // span of images of kernels at proper divisors
        Eliminator span(F, nCols);
        for (uint64_t p : proper_divisor_covers(m)) {
            auto itK = kernelAt.find(p);
            if (itK == kernelAt.end()) continue;
            const auto& offP = coverOffset[p];
            for (uint64_t a = 0; a < p; ++a) {
                for (const auto& kv : itK->second) {
                    std::vector<Scalar> v(nCols, F.zero());
                    uint32_t posP = 0;
                    for (uint32_t c = 0; c < cover.size(); ++c) {
                        if (p % cover[c].object != 0) continue;
                        uint64_t nc = cover[c].object;
                        for (uint64_t t = 0; t < nc; ++t) {
                            const Scalar& s = kv[offP[c] + t];
                            if (!F.is_zero(s)) {
                                uint32_t img = off[c] + uint32_t((a % nc + t) % nc);
                                v[img] = F.add(v[img], s);
                            }
                        }
                        posP += uint32_t(nc);
                    }
                    span.insert(std::move(v));
                }
            }
        }
        uint32_t newDim = 0;
        for (auto& kv : K) {
            std::vector<Scalar> probe = kv;
            if (span.insert(std::move(probe))) ++newDim;
        }
        if (newDim > 0) gdW = std::max(gdW, int64_t(norm_of(divisibility_encode(m), norm)));
        kernelAt[m] = std::move(K);
    }
    out.pd = std::max(out.gd, gdW);
    return out;
}

IsotypicReport isotypic_decompose(const OrbitPresentation& M) {
    const Field& F = M.field();
    if (F.kind() != FieldKind::Cyclotomic || F.order() != M.modulus())
        throw Error(ErrorKind::InvalidInput,
                    "isotypic decomposition runs over cyclotomic(modulus)");
    IsotypicReport rep;
    uint64_t top = M.modulus();
    for (uint64_t n : divisors_of(top)) {
        const OrbitPiece& pn = M.evaluate(n);
        std::vector<EigenDim> eigens;
        for (uint64_t t = 0; t < top; ++t) {
            if ((t * n) % top != 0) continue;  // need xi^n = 1
            Scalar xi = F.root_of_unity(long(t));
            std::vector<std::vector<Scalar>> cols = pn.action;
            for (uint32_t k = 0; k < pn.dimension; ++k) cols[k][k] = F.sub(cols[k][k], xi);
            auto K = kernel_basis_columns(cols, pn.dimension, F);
            if (!K.empty()) eigens.push_back(EigenDim{uint32_t(t), uint32_t(K.size())});
            if (n == top) {
                SheafSummand s;
                s.t = uint32_t(t);
                s.order = top / std::gcd<uint64_t>(top, t);
                s.primitive = s.order == top;
                s.multiplicity = uint32_t(K.size());
                if (s.multiplicity > 0) rep.sheaf.push_back(s);
            }
        }
        rep.perObject.emplace_back(n, std::move(eigens));
    }
    return rep;
}

std::vector<SheafSummand> sheafify_orbit(const OrbitPresentation& M) {
    return isotypic_decompose(M).sheaf;
}

OrbitPresentation orbit_direct_sum(const OrbitPresentation& A, const OrbitPresentation& B) {
    if (A.modulus() != B.modulus() || A.field() != B.field())
        throw Error(ErrorKind::InvalidInput, "orbit direct sum requires matching modulus and field");
    std::vector<uint64_t> gens = A.gens();
    uint32_t shift = uint32_t(gens.size());
    for (uint64_t n : B.gens()) gens.push_back(n);
    std::vector<OrbitRelation> rels = A.relations();
    for (OrbitRelation r : B.relations()) {
        for (auto& e : r.entries) e.gen += shift;
        rels.push_back(std::move(r));
    }
    return OrbitPresentation(A.modulus(), A.field(), std::move(gens), std::move(rels));
}

OrbitPresentation orbit_free(uint64_t n, uint64_t modulus, const Field& F) {
    return OrbitPresentation(modulus, F, {n}, {});
}

OrbitPresentation orbit_Lxi(uint64_t n, uint32_t t, uint64_t modulus) {
    Field F = Field::cyclotomic(uint32_t(modulus));
    if ((uint64_t(t) * n) % modulus != 0)
        throw Error(ErrorKind::InvalidInput, "L_xi requires xi^n = 1");
    // kill the eigen-summands of P(n) at every other n-th root of unity:
    // w_xi' = sum_s xi'^{-s} (shift s) spans the xi'-eigenline.
    std::vector<OrbitRelation> rels;
    for (uint64_t u = 0; u < modulus; ++u) {
        if ((u * n) % modulus != 0 || u == t) continue;
        OrbitRelation r;
        r.object = n;
        OrbitRelationEntry e;
        e.gen = 0;
        for (uint64_t s = 0; s < n; ++s) e.shifts.push_back(F.root_of_unity(-long(u * s)));
        r.entries.push_back(std::move(e));
        rels.push_back(std::move(r));
    }
    return OrbitPresentation(modulus, F, {n}, std::move(rels));
}

OrbitPresentation orbit_torsion_module(uint64_t n, uint64_t m, uint64_t modulus, const Field& F) {
    if (m % n != 0 || m == n) throw Error(ErrorKind::InvalidInput, "need a proper multiple of n");
    OrbitRelation r;
    r.object = m;
    OrbitRelationEntry e;
    e.gen = 0;
    e.shifts.assign(n, F.zero());
    e.shifts[0] = F.one();
    r.entries.push_back(std::move(e));
    return OrbitPresentation(modulus, F, {n}, {std::move(r)});
}

std::string serialize_orbit(const OrbitPresentation& M) {
    const Field& F = M.field();
    json doc;
    doc["modulus"] = M.modulus();
    switch (F.kind()) {
        case FieldKind::Rational: doc["field"] = {{"kind", "rational"}}; break;
        case FieldKind::Prime: doc["field"] = {{"kind", "prime"}, {"p", F.char_p()}}; break;
        case FieldKind::Cyclotomic: doc["field"] = {{"kind", "cyclotomic"}, {"order", F.order()}}; break;
    }
    doc["generators"] = M.gens();
    doc["relations"] = json::array();
    for (const OrbitRelation& r : M.relations()) {
        json entries = json::array();
        for (const OrbitRelationEntry& e : r.entries) {
            json shifts = json::array();
            for (const Scalar& s : e.shifts) shifts.push_back(F.to_string(s));
            entries.push_back({{"gen", e.gen}, {"shifts", shifts}});
        }
        doc["relations"].push_back({{"object", r.object}, {"entries", entries}});
    }
    return doc.dump(2) + "\n";
}

OrbitPresentation parse_orbit(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("orbit document: not valid JSON (") + e.what() + ")");
    }
    try {
        uint64_t modulus = doc.at("modulus").get<uint64_t>();
        std::string fk = doc.at("field").at("kind").get<std::string>();
        Field F = fk == "rational" ? Field::rational()
                  : fk == "prime" ? Field::prime(doc.at("field").at("p").get<uint64_t>())
                                  : Field::cyclotomic(doc.at("field").at("order").get<uint32_t>());
        std::vector<uint64_t> gens = doc.at("generators").get<std::vector<uint64_t>>();
        std::vector<OrbitRelation> rels;
        for (auto& r : doc.at("relations")) {
            OrbitRelation rel;
            rel.object = r.at("object").get<uint64_t>();
            for (auto& e : r.at("entries")) {
                OrbitRelationEntry entry;
                entry.gen = e.at("gen").get<uint32_t>();
                for (auto& s : e.at("shifts")) entry.shifts.push_back(F.parse(s.get<std::string>()));
                rel.entries.push_back(std::move(entry));
            }
            rels.push_back(std::move(rel));
        }
        return OrbitPresentation(modulus, F, std::move(gens), std::move(rels));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("orbit document: missing or mistyped field (") + e.what() + ")");
    }
}

}  // namespace homalg
