#include "homalg/module_io.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace homalg {

using json = nlohmann::ordered_json;

namespace {

json degree_json(const Degree& d) {
    switch (d.kind) {
        case PosetKind::Grid: {
            json a = json::array();
            for (auto& [dir, exp] : d.entries) a.push_back({dir, exp});
            return a;
        }
        case PosetKind::Young: {
            json a = json::array();
            for (uint32_t p : d.parts) a.push_back(p);
            return a;
        }
        case PosetKind::Orbit:
            return d.n;
    }
    return {};
}

Degree degree_from_json(const json& j, PosetKind kind, const std::string& where) {
    try {
        switch (kind) {
            case PosetKind::Grid: {
                std::vector<std::pair<uint32_t, uint32_t>> e;
                for (auto& pair : j) e.emplace_back(pair.at(0).get<uint32_t>(), pair.at(1).get<uint32_t>());
                for (size_t i = 0; i + 1 < e.size(); ++i)
                    if (e[i].first >= e[i + 1].first)
                        throw Error(ErrorKind::InvalidInput, where + ": directions must be strictly ascending");
                return Degree::grid(std::move(e));
            }
            case PosetKind::Young:
                return Degree::young(j.get<std::vector<uint32_t>>());
            case PosetKind::Orbit:
                return Degree::orbit(j.get<uint64_t>());
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, where + ": malformed degree (" + e.what() + ")");
    }
    throw Error(ErrorKind::InvalidInput, where + ": malformed degree");
}

json field_json(const Field& F) {
    switch (F.kind()) {
        case FieldKind::Rational: return {{"kind", "rational"}};
        case FieldKind::Prime: return {{"kind", "prime"}, {"p", F.char_p()}};
        case FieldKind::Cyclotomic: return {{"kind", "cyclotomic"}, {"order", F.order()}};
    }
    return {};
}

Field field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Field::rational();
    if (kind == "prime") return Field::prime(j.at("p").get<uint64_t>());
    if (kind == "cyclotomic") return Field::cyclotomic(j.at("order").get<uint32_t>());
    throw Error(ErrorKind::InvalidInput, "field: unknown kind '" + kind + "'");
}

json poset_json(const PosetDesc& p) {
    switch (p.kind) {
        case PosetKind::Grid: {
            json box = {{"max", p.dirMax}};
            if (p.sumCap) box["sum"] = *p.sumCap;
            return {{"kind", "grid"}, {"directions", p.dirMax.size()}, {"box", box}};
        }
        case PosetKind::Young:
            return {{"kind", "young"}, {"box", {{"sum", p.maxSum}}}};
        case PosetKind::Orbit:
            return {{"kind", "orbit"}, {"modulus", p.modulus}};
    }
    return {};
}

PosetDesc poset_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "grid") {
        auto dirMax = j.at("box").at("max").get<std::vector<uint32_t>>();
        if (j.contains("directions") && j.at("directions").get<size_t>() != dirMax.size())
            throw Error(ErrorKind::InvalidInput, "poset: directions count disagrees with box");
        std::optional<uint64_t> cap;
        if (j.at("box").contains("sum")) cap = j.at("box").at("sum").get<uint64_t>();
        return PosetDesc::grid(std::move(dirMax), cap);
    }
    if (kind == "young") return PosetDesc::young(j.at("box").at("sum").get<uint32_t>());
    if (kind == "orbit") return PosetDesc::orbit(j.at("modulus").get<uint64_t>());
    throw Error(ErrorKind::InvalidInput, "poset: unknown kind '" + kind + "'");
}

}  // namespace

std::string degree_to_json(const Degree& d) { return degree_json(d).dump(); }

std::string serialize(const Presentation& V) {
    const Field& F = V.field();
    // canonical generator order with index remap
    std::vector<uint32_t> order(V.target().gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return canonical_less(V.target().gens[a], V.target().gens[b]);
    });
    std::vector<uint32_t> newIndex(order.size());
    for (uint32_t i = 0; i < order.size(); ++i) newIndex[order[i]] = i;

    json doc;
    doc["poset"] = poset_json(V.poset());
    doc["field"] = field_json(F);
    doc["generators"] = json::array();
    for (uint32_t i : order) doc["generators"].push_back({{"degree", degree_json(V.target().gens[i])}});

    std::vector<uint32_t> relOrder(V.relations().size());
    std::iota(relOrder.begin(), relOrder.end(), 0);
    std::stable_sort(relOrder.begin(), relOrder.end(), [&](uint32_t a, uint32_t b) {
        return canonical_less(V.relations()[a].degree, V.relations()[b].degree);
    });
    doc["relations"] = json::array();
    for (uint32_t i : relOrder) {
        const Relation& r = V.relations()[i];
        json entries = json::array();
        std::vector<std::pair<uint32_t, Scalar>> remapped;
        for (auto& [g, s] : r.entries) remapped.emplace_back(newIndex[g], s);
        std::sort(remapped.begin(), remapped.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [g, s] : remapped) entries.push_back({{"gen", g}, {"scalar", F.to_string(s)}});
        doc["relations"].push_back({{"degree", degree_json(r.degree)}, {"entries", entries}});
    }
    return doc.dump(2) + "\n";
}

Presentation parse_presentation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("module document: not valid JSON (") + e.what() + ")");
    }
    try {
        PosetDesc poset = poset_from_json(doc.at("poset"));
        Field F = field_from_json(doc.at("field"));
        FreeModule target;
        target.poset = poset;
        target.field = F;
        size_t gi = 0;
        for (auto& g : doc.at("generators")) {
            Degree d = degree_from_json(g.at("degree"), poset.kind, "generators[" + std::to_string(gi) + "]");
            if (!poset.contains(d))
                throw Error(ErrorKind::Truncation,
                            "generators[" + std::to_string(gi) + "]: degree outside the truncation region");
            target.gens.push_back(std::move(d));
            ++gi;
        }
        std::vector<Relation> rels;
        size_t ri = 0;
        for (auto& r : doc.at("relations")) {
            std::string where = "relations[" + std::to_string(ri) + "]";
            Relation rel;
            rel.degree = degree_from_json(r.at("degree"), poset.kind, where);
            if (!poset.contains(rel.degree))
                throw Error(ErrorKind::Truncation, where + ": degree outside the truncation region");
            for (auto& e : r.at("entries")) {
                uint32_t g = e.at("gen").get<uint32_t>();
                if (g >= target.gens.size())
                    throw Error(ErrorKind::InvalidInput, where + ": entry references missing generator");
                if (!leq(target.gens[g], rel.degree))
                    throw Error(ErrorKind::InvalidInput, where + ": incomparable degrees");
                rel.entries.emplace_back(g, F.parse(e.at("scalar").get<std::string>()));
            }
            rels.push_back(std::move(rel));
            ++ri;
        }
        return Presentation(std::move(target), std::move(rels));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("module document: missing or mistyped field (") + e.what() + ")");
    }
}

}  // namespace homalg
