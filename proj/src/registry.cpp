#include "homalg/registry.hpp"

#include <algorithm>
#include <sstream>

#include "homalg/homology.hpp"

namespace homalg {

namespace {

std::vector<std::vector<uint32_t>> parse_vector_list(const std::string& params) {
    std::vector<std::vector<uint32_t>> out;
    std::stringstream ss(params);
    std::string group;
    while (std::getline(ss, group, ';')) {
        std::vector<uint32_t> v;
        std::stringstream gs(group);
        std::string tok;
        while (std::getline(gs, tok, ',')) v.push_back(uint32_t(std::stoul(tok)));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<uint64_t> parse_ints(const std::string& params) {
    std::vector<uint64_t> out;
    std::stringstream ss(params);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    return out;
}

bool support_contains(const Support& s, const Degree& d, uint32_t mult) {
    for (auto& [deg, m] : s)
        if (deg == d) return m == mult;
    return false;
}

}  // namespace

std::vector<Element> counterexample_generators(uint32_t maxDirection, uint32_t ambientRank,
                                               const Field& F) {
    std::vector<Element> gens;
    for (uint32_t s = 1; s <= maxDirection; ++s) {
        Element e;
        e.degree = Degree::unit(s);
        if (s % 2 == 1) {
            // the paper's instances force b_{(s+1)/2} for odd s
            uint32_t idx = (s + 1) / 2;
            if (idx <= ambientRank) e.coeffs.emplace_back(idx - 1, F.one());
        } else {
            uint32_t i = s / 2;
            uint64_t p = nth_prime(i);
            uint64_t power = 1;
            for (uint32_t j = 1; j <= i + 1; ++j) {
                power *= p;
                if (power > ambientRank) break;
                e.coeffs.emplace_back(uint32_t(power) - 1, F.one());
            }
        }
        if (!e.coeffs.empty()) gens.push_back(std::move(e));
    }
    return gens;
}

RegistryEntry registry(const std::string& name, const std::string& params, const Field& field) {
    RegistryEntry entry;
    entry.name = name;
    entry.params = params;

    if (name == "counterexample") {
        auto p = parse_ints(params);
        if (p.size() != 2) throw Error(ErrorKind::InvalidInput, "counterexample expects params D,R");
        uint32_t D = uint32_t(p[0]), R = uint32_t(p[1]);
        FreeModule F0;
        F0.poset = PosetDesc::grid(std::vector<uint32_t>(D, 1));
        F0.field = field;
        F0.gens.assign(R, Degree::grid_zero());
        auto gens = counterexample_generators(D, R, field);
        PosetDesc box = PosetDesc::grid(std::vector<uint32_t>(D, 1), uint64_t(4));
        entry.module = submodule_presentation(F0, gens, box).presentation;
        entry.box = box;

        entry.facts.push_back(
            {"V is generated in degree 1 (sum norm): gd = 1", "[PAPER]", [](const RegistryEntry& e) {
                 Support s = h0(*e.module, *e.box);
                 return max_norm(s, NormKind::Sum) == 1;
             }});
        entry.facts.push_back(
            {"supp H_0(V) = {(o_s, 1)} for each surviving direction", "[PAPER]",
             [](const RegistryEntry& e) {
                 Support s = h0(*e.module, *e.box);
                 if (s.size() != e.module->target().gens.size()) return false;
                 for (auto& [d, m] : s)
                     if (m != 1 || norm_of(d, NormKind::Sum) != 1) return false;
                 return true;
             }});
        if (D >= 7) {
            entry.facts.push_back(
                {"dim H_0(K) = 1 at (0,1,1,0,0,0,1), sum norm 3 = p_1 + 1", "[PAPER]",
                 [](const RegistryEntry& e) {
                     Support s = resolution(*e.module, 1, e.box).level_support(1);
                     return support_contains(s, Degree::grid({{2, 1}, {3, 1}, {7, 1}}), 1);
                 }});
        }
        if (D >= 53) {
            entry.facts.push_back(
                {"dim H_0(K) = 1 at o_4+o_5+o_17+o_53, sum norm 4 = p_2 + 1", "[PAPER]",
                 [](const RegistryEntry& e) {
                     Support s = resolution(*e.module, 1, e.box).level_support(1);
                     return support_contains(s, Degree::grid({{4, 1}, {5, 1}, {17, 1}, {53, 1}}), 1);
                 }});
        }
        return entry;
    }

    if (name == "monomial-ideal") {
        auto vecs = parse_vector_list(params);
        if (vecs.empty()) throw Error(ErrorKind::InvalidInput, "monomial-ideal expects exponent vectors");
        uint32_t dirs = 0, maxExp = 0;
        for (auto& v : vecs) {
            dirs = std::max<uint32_t>(dirs, uint32_t(v.size()));
            for (uint32_t e : v) maxExp = std::max(maxExp, e);
        }
        FreeModule F0;
        F0.poset = PosetDesc::grid(std::vector<uint32_t>(dirs, maxExp + 2));
        F0.field = field;
        F0.gens.assign(1, Degree::grid_zero());
        std::vector<Element> gens;
        for (auto& v : vecs) {
            Element e;
            e.degree = Degree::grid_dense(v);
            e.coeffs.emplace_back(0, field.one());
            gens.push_back(std::move(e));
        }
        auto sub = submodule_presentation(F0, gens);
        entry.module = sub.presentation;
        entry.box = sub.boxUsed;
        uint32_t n = maxExp;
        entry.facts.push_back(
            {"every F_i generator degree in the minimal resolution has sup norm <= " + std::to_string(n),
             "[PAPER]", [n](const RegistryEntry& e) {
                 Resolution R = resolution(*e.module, 3);
                 for (uint32_t i = 0; i < R.levels.size(); ++i)
                     if (max_norm(R.level_support(i), NormKind::Sup) > int64_t(n)) return false;
                 return true;
             }});
        return entry;
    }

    if (name == "young-simple") {
        auto p = parse_ints(params);
        std::vector<uint32_t> parts(p.begin(), p.end());
        Degree lambda = Degree::young(parts);
        uint32_t B = uint32_t(norm_of(lambda, NormKind::Sum));
        FreeModule F0;
        F0.poset = PosetDesc::young(std::max<uint32_t>(24, 3 * B + 6));
        F0.field = field;
        F0.gens = {lambda};
        // kill every partition covering lambda
        std::vector<Relation> rels;
        PosetDesc region = F0.poset;
        for (const Degree& z : region.enumerate()) {
            if (norm_of(z, NormKind::Sum) != B + 1 || !leq(lambda, z)) continue;
            Relation r;
            r.degree = z;
            r.entries.emplace_back(0, field.one());
            rels.push_back(std::move(r));
        }
        entry.module = Presentation(std::move(F0), std::move(rels));
        entry.facts.push_back({"the simple module is supported exactly at lambda", "[TRIVIAL]",
                               [lambda, B](const RegistryEntry& e) {
                                   for (const Degree& z : PosetDesc::young(B + 2).enumerate()) {
                                       uint32_t d = e.module->evaluate(z).dimension;
                                       if ((z == lambda) != (d == 1)) return false;
                                       if (z != lambda && d != 0) return false;
                                   }
                                   return true;
                               }});
        return entry;
    }

    if (name == "grid-simple") {
        auto p = parse_ints(params);
        if (p.size() != 1) throw Error(ErrorKind::InvalidInput, "grid-simple expects params r");
        uint32_t r = uint32_t(p[0]);
        FreeModule F0;
        F0.poset = PosetDesc::grid(std::vector<uint32_t>(r, 4));
        F0.field = field;
        F0.gens = {Degree::grid_zero()};
        std::vector<Relation> rels;
        for (uint32_t d = 1; d <= r; ++d) {
            Relation rel;
            rel.degree = Degree::unit(d);
            rel.entries.emplace_back(0, field.one());
            rels.push_back(std::move(rel));
        }
        entry.module = Presentation(std::move(F0), std::move(rels));
        uint32_t r0 = r;
        entry.facts.push_back(
            {"Koszul homology: H_i supported at the squarefree degrees of weight i", "[DERIVED]",
             [r0](const RegistryEntry& e) {
                 Resolution R = resolution(*e.module, r0);
                 for (uint32_t i = 1; i <= r0; ++i) {
                     Support s = R.level_support(i);
                     uint64_t count = 0;
                     for (auto& [deg, m] : s) {
                         if (m != 1 || norm_of(deg, NormKind::Sup) != 1 ||
                             norm_of(deg, NormKind::Sum) != i)
                             return false;
                         ++count;
                     }
                     // binomial(r, i) squarefree degrees
                     uint64_t expect = 1;
                     for (uint32_t k = 1; k <= i; ++k) expect = expect * (r0 - k + 1) / k;
                     if (count != expect) return false;
                 }
                 return true;
             }});
        return entry;
    }

    if (name == "orbit-free") {
        auto p = parse_ints(params);
        if (p.size() != 2) throw Error(ErrorKind::InvalidInput, "orbit-free expects params n,M");
        entry.orbitModule = orbit_free(p[0], p[1], field);
        uint64_t n = p[0];
        entry.facts.push_back(
            {"restriction has graded dimensions n on multiples of n", "[PAPER]",
             [n](const RegistryEntry& e) {
                 Presentation res = restrict_to_grid(*e.orbitModule);
                 uint64_t M = e.orbitModule->modulus();
                 Degree dn = divisibility_encode(n);
                 for (uint64_t d = 1; d <= M; ++d) {
                     if (M % d != 0) continue;
                     Degree x = divisibility_encode(d);
                     uint32_t expect = leq(dn, x) ? uint32_t(n) : 0;
                     if (res.evaluate(x).dimension != expect) return false;
                 }
                 return true;
             }});
        return entry;
    }

    if (name == "orbit-Lxi") {
        auto p = parse_ints(params);
        if (p.size() != 3) throw Error(ErrorKind::InvalidInput, "orbit-Lxi expects params n,t,M");
        entry.orbitModule = orbit_Lxi(p[0], uint32_t(p[1]), p[2]);
        uint32_t t = uint32_t(p[1]);
        entry.facts.push_back(
            {"m_xi = 1 at xi = zeta^t and 0 elsewhere", "[PAPER]", [t](const RegistryEntry& e) {
                 auto sheaf = sheafify_orbit(*e.orbitModule);
                 return sheaf.size() == 1 && sheaf[0].t == t && sheaf[0].multiplicity == 1;
             }});
        return entry;
    }

    if (name == "orbit-torsion") {
        auto p = parse_ints(params);
        if (p.size() != 3) throw Error(ErrorKind::InvalidInput, "orbit-torsion expects params n,m,M");
        Field F = field.kind() == FieldKind::Cyclotomic ? field : Field::cyclotomic(uint32_t(p[2]));
        entry.orbitModule = orbit_torsion_module(p[0], p[1], p[2], F);
        entry.facts.push_back({"torsion modules sheafify to the empty decomposition", "[PAPER]",
                               [](const RegistryEntry& e) {
                                   return sheafify_orbit(*e.orbitModule).empty();
                               }});
        return entry;
    }

    throw Error(ErrorKind::InvalidInput, "unknown registry entry: " + name);
}

}  // namespace homalg
