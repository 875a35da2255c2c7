#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "homalg/degree.hpp"

namespace homalg {

enum class FieldKind { Rational, Prime, Cyclotomic };

/// An element of the active field.  Rationals hold one coefficient,
/// cyclotomic elements a coefficient vector reduced mod Phi_N; prime-field
/// residues live in `r`.
struct Scalar {
    std::vector<mpq_class> c;
    uint64_t r = 0;
};

/// Exact field arithmetic.  cyclotomic(N) is Q[z]/Phi_N(z) with z the
/// fixed primitive N-th root of unity; cyclotomic(1) coincides with Q.
class Field {
public:
    static Field rational();
    static Field prime(uint64_t p);
    static Field cyclotomic(uint32_t order);

    FieldKind kind() const { return kind_; }
    uint64_t char_p() const { return p_; }
    uint32_t order() const { return order_; }
    uint32_t degree() const { return uint32_t(phi_.size()) - 1; }  // cyclotomic only

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_mpq(const mpq_class& v) const;

    bool is_zero(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// a -= m*b, the elimination kernel step.
    void submul(Scalar& a, const Scalar& m, const Scalar& b) const;

    /// zeta_N^t for cyclotomic fields.
    Scalar root_of_unity(long t) const;

    std::string to_string(const Scalar& a) const;
    Scalar parse(const std::string& text) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_ && order_ == o.order_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    FieldKind kind_ = FieldKind::Rational;
    uint64_t p_ = 0;
    uint32_t order_ = 0;
    std::vector<mpq_class> phi_;  // monic cyclotomic polynomial, phi_[i] = coeff of z^i

    void reduce(std::vector<mpq_class>& v) const;
};

/// Coefficients of Phi_N, computed from x^N - 1 = prod_{d|N} Phi_d.
std::vector<mpq_class> cyclotomic_polynomial(uint32_t N);

constexpr uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

}  // namespace homalg
