#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "homalg/field.hpp"
#include "homalg/module.hpp"

namespace homalg {

/// A morphism n -> m (n | m) of the opposite orbit category of (Z,+):
/// the G-map Z/m -> Z/n, x -> x + shift.  The endomorphisms of n form the
/// cyclic group G_n of order n acting regularly on every hom-set from n.
struct OrbitMorphism {
    uint64_t source = 1, target = 1;
    uint64_t shift = 0;  // in Z/source
};

/// g after f (f: l -> n, g: n -> m) = shift (g.shift + f.shift) mod l.
OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f);
OrbitMorphism orbit_identity(uint64_t n);

struct OrbitRelationEntry {
    uint32_t gen = 0;
    std::vector<Scalar> shifts;  // length = object of `gen`, indexed by shift
};

struct OrbitRelation {
    uint64_t object = 1;
    std::vector<OrbitRelationEntry> entries;
};

/// Value of an orbit module at one object, with the shift-1 action of the
/// endomorphism group.  Ambient basis vectors are pairs (generator, shift).
struct OrbitPiece {
    uint64_t object = 1;
    uint32_t dimension = 0;
    std::vector<std::pair<uint32_t, uint32_t>> ambientBasis;
    std::vector<uint32_t> repRows;
    std::vector<std::vector<Scalar>> projection;            // dimension x |ambientBasis|
    std::vector<std::vector<Scalar>> action;                // columns of the G_n generator acting on the value
};

/// Finitely presented module over the opposite orbit category, truncated
/// at the divisors of `modulus`.
class OrbitPresentation {
public:
    OrbitPresentation() = default;
    OrbitPresentation(uint64_t modulus, Field field, std::vector<uint64_t> gens,
                      std::vector<OrbitRelation> relations);

    OrbitPresentation(const OrbitPresentation& o)
        : modulus_(o.modulus_), field_(o.field_), gens_(o.gens_), relations_(o.relations_) {}
    OrbitPresentation& operator=(const OrbitPresentation& o);
    OrbitPresentation(OrbitPresentation&&) = default;
    OrbitPresentation& operator=(OrbitPresentation&&) = default;

    uint64_t modulus() const { return modulus_; }
    const Field& field() const { return field_; }
    const std::vector<uint64_t>& gens() const { return gens_; }
    const std::vector<OrbitRelation>& relations() const { return relations_; }

    const OrbitPiece& evaluate(uint64_t n) const;

    /// Columns of V_f for f = (shift a : n -> m).
    std::vector<std::vector<Scalar>> structure_map(uint64_t n, uint64_t m, uint64_t a) const;

private:
    uint64_t modulus_ = 1;
    Field field_ = Field::rational();
    std::vector<uint64_t> gens_;
    std::vector<OrbitRelation> relations_;
    mutable std::map<uint64_t, OrbitPiece> cache_;
    mutable std::unique_ptr<std::mutex> mtx_ = std::make_unique<std::mutex>();
};

/// Restriction along the divisibility embedding: each orbit generator at n
/// expands to n grid generators at encode(n), each orbit relation at d to
/// its d shifted relation rows.
Presentation restrict_to_grid(const OrbitPresentation& M);

struct OrbitHd {
    int64_t gd = -1, pd = -1;
};

/// Support of H_0 over the divisors of the modulus.
std::vector<std::pair<uint64_t, uint32_t>> orbit_h0(const OrbitPresentation& M);

/// gd and pd computed orbit-side (free cover kernel), per norm on the
/// encoded degrees.
OrbitHd orbit_gd_pd(const OrbitPresentation& M, NormKind norm);

struct EigenDim {
    uint32_t t = 0;  // eigenvalue zeta_M^t
    uint32_t dim = 0;
};

struct SheafSummand {
    uint32_t t = 0;
    uint64_t order = 1;  // exact order of zeta_M^t
    bool primitive = false;
    uint32_t multiplicity = 0;
};

struct IsotypicReport {
    std::vector<std::pair<uint64_t, std::vector<EigenDim>>> perObject;
    std::vector<SheafSummand> sheaf;  // multiplicities at the top object
};

IsotypicReport isotypic_decompose(const OrbitPresentation& M);
std::vector<SheafSummand> sheafify_orbit(const OrbitPresentation& M);

OrbitPresentation orbit_direct_sum(const OrbitPresentation& A, const OrbitPresentation& B);

/// The free module P(n) = k Z^op(n, -), truncated at `modulus`.
OrbitPresentation orbit_free(uint64_t n, uint64_t modulus, const Field& F);
/// The irreducible sheaf generator L_xi for xi = zeta_M^t (requires xi^n = 1):
/// P(n) modulo the complementary eigen-summands at n.
OrbitPresentation orbit_Lxi(uint64_t n, uint32_t t, uint64_t modulus);
/// P(n) with every morphism to the proper multiple m killed; its value
/// vanishes on multiples of m, so it is torsion in the truncated tower.
OrbitPresentation orbit_torsion_module(uint64_t n, uint64_t m, uint64_t modulus, const Field& F);

std::string serialize_orbit(const OrbitPresentation& M);
OrbitPresentation parse_orbit(const std::string& text);

}  // namespace homalg
