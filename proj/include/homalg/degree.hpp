#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homalg {

enum class PosetKind { Grid, Young, Orbit };

enum class NormKind { Sup, Sum };

// Error with a coarse category so the CLI can map it to an exit code.
enum class ErrorKind { InvalidInput, Truncation, Unsupported, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// A point of the grading poset.
///
/// grid:  sparse exponent vector, entries (direction >= 1, exponent >= 1)
///        sorted by direction; zero exponents are never stored.
/// young: weakly decreasing sequence of positive parts.
/// orbit: a positive integer object of the divisibility tower.
struct Degree {
    PosetKind kind = PosetKind::Grid;
    std::vector<std::pair<uint32_t, uint32_t>> entries;  // grid
    std::vector<uint32_t> parts;                         // young
    uint64_t n = 1;                                      // orbit

    static Degree grid_zero() { return Degree{PosetKind::Grid, {}, {}, 1}; }
    static Degree grid(std::vector<std::pair<uint32_t, uint32_t>> e);
    static Degree grid_dense(const std::vector<uint32_t>& exps);  // exps[i] for direction i+1
    static Degree unit(uint32_t direction);                       // o_i
    static Degree young(std::vector<uint32_t> parts);
    static Degree orbit(uint64_t n);

    uint32_t grid_entry(uint32_t direction) const;
    bool is_zero() const;

    bool operator==(const Degree& o) const;
    bool operator!=(const Degree& o) const { return !(*this == o); }
};

/// Canonical order: graded-lexicographic by (sum norm, then lex on the
/// dense entry sequence).  Total on degrees of one kind.
bool canonical_less(const Degree& a, const Degree& b);

struct DegreeLess {
    bool operator()(const Degree& a, const Degree& b) const { return canonical_less(a, b); }
};

uint64_t norm_of(const Degree& x, NormKind n);
bool leq(const Degree& x, const Degree& y);
Degree join(const Degree& x, const Degree& y);

// x + o_i and x - o_i (grid only; subtraction clamps at 0).
Degree grid_add_unit(const Degree& x, uint32_t direction);
Degree grid_sub_unit(const Degree& x, uint32_t direction);

/// Prime-exponent encoding of the divisibility poset.
Degree divisibility_encode(uint64_t n);
uint64_t divisibility_decode(const Degree& x);
uint64_t nth_prime(uint32_t i);  // 1-based: nth_prime(1) = 2

// Young <-> grid conversions for the inclusion/quotient functors of the
// Young lattice: pad parts with zeros, or sort a grid degree descending.
Degree young_to_grid(const Degree& lambda);
Degree grid_to_young(const Degree& x);

/// Truncation data: the finite downward-closed region all computations
/// run over.  grid: per-direction max exponent (directions 1..r) plus an
/// optional sum-norm cap; young: max sum; orbit: divisors of the modulus.
struct PosetDesc {
    PosetKind kind = PosetKind::Grid;
    std::vector<uint32_t> dirMax;       // grid: dirMax[i] = cap for direction i+1
    std::optional<uint64_t> sumCap;     // grid
    uint32_t maxSum = 0;                // young
    uint64_t modulus = 1;               // orbit

    static PosetDesc grid(std::vector<uint32_t> dirMax, std::optional<uint64_t> sumCap = {});
    static PosetDesc young(uint32_t maxSum);
    static PosetDesc orbit(uint64_t modulus);

    bool contains(const Degree& x) const;
    /// All region degrees in canonical order.
    std::vector<Degree> enumerate() const;
    /// Maximal elements strictly below x: grid x - o_i, young corner
    /// removals, orbit n/q for prime q | n.  Canonically sorted.
    std::vector<Degree> predecessors(const Degree& x) const;

    bool operator==(const PosetDesc& o) const;
};

std::string to_string(const Degree& x);

}  // namespace homalg
