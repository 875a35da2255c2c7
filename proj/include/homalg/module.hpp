#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "homalg/degree.hpp"
#include "homalg/field.hpp"
#include "homalg/matrix.hpp"

namespace homalg {

/// Free graded module: one generator per listed degree.  The graded piece
/// at y has one basis vector per generator g with deg(g) <= y.
struct FreeModule {
    PosetDesc poset;
    Field field = Field::rational();
    std::vector<Degree> gens;
};

/// One relation row: an element of the free target at `degree`, with a
/// scalar per generator (the coefficient along the unique morphism from
/// the generator's degree).
struct Relation {
    Degree degree;
    std::vector<std::pair<uint32_t, Scalar>> entries;  // (generator index, scalar)
};

/// The value V_x of a presentation at one degree, with the canonical
/// quotient basis.  repRows[k] is the index (into activeGens) of the
/// ambient basis vector representing the k-th quotient basis class.
struct GradedPiece {
    Degree degree;
    uint32_t dimension = 0;
    std::vector<uint32_t> activeGens;
    std::vector<uint32_t> repRows;
    std::vector<std::vector<Scalar>> projection;  // dimension x |activeGens|, row-major
};

/// An element of the ambient free module: sparse coefficients over the
/// target generators, all of degree <= `degree`.
struct Element {
    Degree degree;
    std::vector<std::pair<uint32_t, Scalar>> coeffs;
};

/// Finitely presented graded module V = coker(F1 -> F0).  Immutable after
/// construction; evaluation caches graded pieces per degree.
class Presentation {
public:
    Presentation() = default;
    Presentation(FreeModule target, std::vector<Relation> relations);

    Presentation(const Presentation& o) : target_(o.target_), relations_(o.relations_) {}
    Presentation& operator=(const Presentation& o);
    Presentation(Presentation&&) = default;
    Presentation& operator=(Presentation&&) = default;

    const FreeModule& target() const { return target_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const PosetDesc& poset() const { return target_.poset; }
    const Field& field() const { return target_.field; }

    /// V_x as a cokernel with deterministic basis.  Throws a truncation
    /// error when x is outside the region.
    const GradedPiece& evaluate(const Degree& x) const;

    /// Columns of V_f : V_x -> V_y (f the unique morphism); column k is the
    /// image of the k-th basis vector of V_x in V_y coordinates.
    std::vector<std::vector<Scalar>> structure_map(const Degree& x, const Degree& y) const;

    /// Image in V_y coordinates of an ambient element given at degree <= y.
    std::vector<Scalar> push_ambient(const Element& e, const Degree& y) const;

    bool is_zero_module() const;

private:
    FreeModule target_;
    std::vector<Relation> relations_;
    mutable std::map<Degree, GradedPiece, DegreeLess> cache_;
    mutable std::unique_ptr<std::mutex> mtx_ = std::make_unique<std::mutex>();

    void validate() const;
};

Presentation direct_sum(const Presentation& V, const Presentation& W);

/// Reorder generators by `perm` (new index i takes old generator perm[i]).
Presentation permute_generators(const Presentation& V, const std::vector<uint32_t>& perm);

struct SubmodulePresentation {
    Presentation presentation;
    PosetDesc boxUsed;
    bool certified = false;  // true when the box provably contains all minimal syzygy degrees
};

/// Presentation of the submodule of F generated by `gens`: one target
/// generator per element, relations = minimal generators of the kernel of
/// (+) P(deg g) -> F computed degreewise over the box.
SubmodulePresentation submodule_presentation(const FreeModule& F, const std::vector<Element>& gens,
                                             std::optional<PosetDesc> box = {});

/// Same, for a submodule of an arbitrary presentation V (each generator an
/// ambient element whose class generates the submodule).
SubmodulePresentation present_submodule(const Presentation& V, const std::vector<Element>& gens,
                                        const PosetDesc& box);

/// Evaluation-level Young functors: restriction along the inclusion of the
/// Young lattice into the grid, and the lift along the quotient.
const GradedPiece& eval_young_restriction(const Presentation& gridV, const Degree& lambda);
const GradedPiece& eval_young_lift(const Presentation& youngW, const Degree& gridX);

/// Per-direction exponent bounds actually used by a module's data; the
/// default homological box derives from these.
std::vector<uint32_t> active_direction_caps(const Presentation& V);

/// Degreewise kernel of the graded map (+) P(deg srcImages[i]) -> V with
/// minimal-generator adoption in canonical degree order: a kernel element
/// is adopted iff it is independent of the images of generators adopted at
/// strictly smaller degrees.  Shared by submodule presentation and the
/// resolution engine.
std::vector<std::pair<Degree, std::vector<Scalar>>> minimal_kernel_generators(
    const Presentation& V, const std::vector<Degree>& srcDegrees,
    const std::vector<Element>& srcImages, const PosetDesc& box);

}  // namespace homalg
