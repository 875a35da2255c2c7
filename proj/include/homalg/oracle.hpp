#pragma once

#include "homalg/homology.hpp"
#include "homalg/module.hpp"

namespace homalg {

/// Independent homology oracle: H_i(V)_y as the i-th homology of the
/// relative bar complex C_n(y) = (+) over strictly decreasing chains
/// y > x_1 > ... > x_n (within the box) of V_{x_n}, C_0(y) = V_y, with the
/// alternating-sum differential that deletes interior chain entries and
/// applies the innermost structure map.  Guarded to small boxes: the chain
/// count is exponential in chain length.
Support oracle_homology(const Presentation& V, uint32_t i, const PosetDesc& box);

}  // namespace homalg
