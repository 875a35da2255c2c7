#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homalg/module.hpp"
#include "homalg/orbit.hpp"

namespace homalg {

/// A catalogued module with machine-checkable expected facts.  Every fact
/// carries a provenance tag in its metadata.
struct RegistryEntry {
    std::string name;
    std::string params;
    std::optional<Presentation> module;
    std::optional<OrbitPresentation> orbitModule;
    std::optional<PosetDesc> box;  // recommended computation box

    struct Fact {
        std::string description;
        std::string tag;  // provenance metadata
        std::function<bool(const RegistryEntry&)> check;
    };
    std::vector<Fact> facts;
};

/// Known entries:
///   counterexample(maxDirection, ambientRank)   params "D,R"
///   monomial-ideal(exponent vectors)            params "a,b,c;d,e,f;..."
///   young-simple(lambda)                        params "2,1"
///   grid-simple(r)                              params "r"
///   orbit-free(n, M)                            params "n,M"
///   orbit-Lxi(n, t, M)                          params "n,t,M"
///   orbit-torsion(n, m, M)                      params "n,m,M"
RegistryEntry registry(const std::string& name, const std::string& params,
                       const Field& field = Field::rational());

/// The submodule generators of the countably-presented example: at o_s the
/// ambient element b_{(s+1)/2} (s odd) or b_{p_i} + ... + b_{p_i^{i+1}}
/// (s = 2i), basis indices capped by the ambient rank; empty generators
/// are dropped.
std::vector<Element> counterexample_generators(uint32_t maxDirection, uint32_t ambientRank,
                                               const Field& F);

}  // namespace homalg
