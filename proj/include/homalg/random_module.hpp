#pragma once

#include <cstdint>
#include <random>

#include "homalg/module.hpp"
#include "homalg/orbit.hpp"

namespace homalg {

/// Deterministic generation: all draws go through mt19937_64 with modulo
/// reduction, so a (seed, profile) pair pins the module bit-for-bit.
struct GridProfile {
    uint32_t directions = 2;
    uint32_t maxExp = 3;
    uint32_t maxGens = 6;
    uint32_t maxRels = 6;
    Field field = Field::rational();
};

struct YoungProfile {
    uint32_t maxGenSum = 4;
    uint32_t maxRelSum = 8;
    uint32_t maxGens = 4;
    uint32_t maxRels = 4;
    Field field = Field::rational();
};

struct OrbitProfile {
    uint64_t modulus = 12;
    uint32_t maxGens = 3;
    uint32_t maxRels = 3;
    Field field = Field::rational();
};

Presentation random_grid_module(uint64_t seed, const GridProfile& p);
Presentation random_young_module(uint64_t seed, const YoungProfile& p);
OrbitPresentation random_orbit_module(uint64_t seed, const OrbitProfile& p);

/// A torsion-free module: the kernel of a random map between frees,
/// presented via its degreewise minimal generators.
Presentation random_torsion_free(uint64_t seed, const GridProfile& p);

/// A random submodule of P(0) with unit and scaled scalar generators.
SubmodulePresentation random_p0_submodule(uint64_t seed, const GridProfile& p);

}  // namespace homalg
