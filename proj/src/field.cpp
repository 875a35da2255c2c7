#include "homalg/field.hpp"

#include <algorithm>
#include <sstream>

namespace homalg {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return uint64_t((__uint128_t)a * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

void poly_trim(std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// a = q*b + r with deg r < deg b; returns q, leaves r in a.
std::vector<mpq_class> poly_divmod(std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    if (a.size() < b.size()) return {mpq_class(0)};
    std::vector<mpq_class> q(a.size() - b.size() + 1, mpq_class(0));
    for (size_t k = q.size(); k-- > 0;) {
        mpq_class f = a[k + b.size() - 1] / b.back();
        if (f == 0) continue;
        q[k] = f;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
    }
    poly_trim(a);
    return q;
}

// quotient of exact polynomial division a / b (monic b), over Q
std::vector<mpq_class> poly_div_exact(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    return poly_divmod(a, b);
}

}  // namespace

std::vector<mpq_class> cyclotomic_polynomial(uint32_t N) {
    if (N == 0) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be >= 1");
    // x^N - 1
    std::vector<mpq_class> poly(N + 1, mpq_class(0));
    poly[0] = -1;
    poly[N] = 1;
    for (uint32_t d = 1; d < N; ++d)
        if (N % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    return poly;
}

Field Field::rational() {
    Field f;
    f.kind_ = FieldKind::Rational;
    return f;
}

Field Field::prime(uint64_t p) {
    if (!is_prime_u64(p)) throw Error(ErrorKind::InvalidInput, "field characteristic must be prime");
    Field f;
    f.kind_ = FieldKind::Prime;
    f.p_ = p;
    return f;
}

Field Field::cyclotomic(uint32_t order) {
    Field f;
    f.kind_ = FieldKind::Cyclotomic;
    f.order_ = order;
    f.phi_ = cyclotomic_polynomial(order);
    return f;
}

Scalar Field::zero() const {
    Scalar s;
    if (kind_ == FieldKind::Rational) s.c.assign(1, mpq_class(0));
    else if (kind_ == FieldKind::Cyclotomic) s.c.assign(degree(), mpq_class(0));
    return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
    Scalar s = zero();
    if (kind_ == FieldKind::Prime) {
        long m = v % (long)p_;
        s.r = uint64_t(m < 0 ? m + (long)p_ : m);
    } else {
        s.c[0] = v;
    }
    return s;
}

Scalar Field::from_mpq(const mpq_class& v) const {
    if (kind_ == FieldKind::Prime) {
        mpz_class num = v.get_num() % mpz_class((unsigned long)p_);
        mpz_class den = v.get_den() % mpz_class((unsigned long)p_);
        if (num < 0) num += mpz_class((unsigned long)p_);
        uint64_t n = num.get_ui(), d = den.get_ui();
        if (d == 0) throw Error(ErrorKind::InvalidInput, "denominator divisible by the characteristic");
        Scalar s;
        s.r = mulmod(n, powmod(d, p_ - 2, p_), p_);
        return s;
    }
    Scalar s = zero();
    s.c[0] = v;
    return s;
}

bool Field::is_zero(const Scalar& a) const {
    if (kind_ == FieldKind::Prime) return a.r == 0;
    for (auto& x : a.c)
        if (x != 0) return false;
    return true;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Prime) return a.r == b.r;
    return a.c == b.c;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Prime) {
        Scalar s;
        s.r = a.r + b.r;
        if (s.r >= p_) s.r -= p_;
        return s;
    }
    Scalar s = a;
    for (size_t i = 0; i < s.c.size(); ++i) s.c[i] += b.c[i];
    return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Prime) {
        Scalar s;
        s.r = a.r >= b.r ? a.r - b.r : a.r + p_ - b.r;
        return s;
    }
    Scalar s = a;
    for (size_t i = 0; i < s.c.size(); ++i) s.c[i] -= b.c[i];
    return s;
}

Scalar Field::neg(const Scalar& a) const { return sub(zero(), a); }

void Field::reduce(std::vector<mpq_class>& v) const {
    // reduce a coefficient vector of length >= degree() mod Phi
    size_t d = degree();
    for (size_t i = v.size(); i-- > d;) {
        if (v[i] == 0) continue;
        mpq_class f = v[i];
        for (size_t j = 0; j < d; ++j) v[i - d + j] -= f * phi_[j];
        v[i] = 0;
    }
    v.resize(d);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
        case FieldKind::Prime: {
            Scalar s;
            s.r = mulmod(a.r, b.r, p_);
            return s;
        }
        case FieldKind::Rational: {
            Scalar s;
            s.c.assign(1, a.c[0] * b.c[0]);
            return s;
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> prod(2 * degree(), mpq_class(0));
            for (size_t i = 0; i < a.c.size(); ++i) {
                if (a.c[i] == 0) continue;
                for (size_t j = 0; j < b.c.size(); ++j)
                    if (b.c[j] != 0) prod[i + j] += a.c[i] * b.c[j];
            }
            reduce(prod);
            Scalar s;
            s.c = std::move(prod);
            return s;
        }
    }
    return zero();
}

void Field::submul(Scalar& a, const Scalar& m, const Scalar& b) const {
    switch (kind_) {
        case FieldKind::Prime:
            a.r = (a.r + p_ - mulmod(m.r, b.r, p_)) % p_;
            return;
        case FieldKind::Rational:
            a.c[0] -= m.c[0] * b.c[0];
            return;
        case FieldKind::Cyclotomic:
            a = sub(a, mul(m, b));
            return;
    }
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw Error(ErrorKind::InvalidInput, "division by zero");
    switch (kind_) {
        case FieldKind::Prime: {
            Scalar s;
            s.r = powmod(a.r, p_ - 2, p_);
            return s;
        }
        case FieldKind::Rational: {
            Scalar s;
            s.c.assign(1, mpq_class(1) / a.c[0]);
            return s;
        }
        case FieldKind::Cyclotomic: {
            // extended Euclid in Q[z]: Phi_N is irreducible over Q, so any
            // nonzero residue is coprime to it.  Invariant: s_i * a = r_i (mod Phi).
            std::vector<mpq_class> r0 = phi_, r1 = a.c;
            poly_trim(r1);
            std::vector<mpq_class> s0 = {mpq_class(0)}, s1 = {mpq_class(1)};
            while (r1.size() > 1) {
                std::vector<mpq_class> r2 = r0;
                std::vector<mpq_class> q = poly_divmod(r2, r1);
                if (r2.empty()) throw Error(ErrorKind::Internal, "Phi_N not coprime to element");
                std::vector<mpq_class> s2(std::max(s0.size(), q.size() + s1.size() - 1), mpq_class(0));
                for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
                for (size_t i = 0; i < q.size(); ++i)
                    if (q[i] != 0)
                        for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
                poly_trim(s2);
                r0 = std::move(r1);
                r1 = std::move(r2);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            mpq_class lead = r1[0];
            std::vector<mpq_class> res(s1.size());
            for (size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] / lead;
            res.resize(std::max<size_t>(res.size(), degree()), mpq_class(0));
            reduce(res);
            Scalar s;
            s.c = std::move(res);
            return s;
        }
    }
    return zero();
}

Scalar Field::root_of_unity(long t) const {
    if (kind_ != FieldKind::Cyclotomic)
        throw Error(ErrorKind::Unsupported, "roots of unity live in cyclotomic fields");
    long m = t % (long)order_;
    if (m < 0) m += order_;
    std::vector<mpq_class> v(size_t(m) + 1, mpq_class(0));
    v[size_t(m)] = 1;
    if (v.size() < degree()) v.resize(degree(), mpq_class(0));
    reduce(v);
    Scalar s;
    s.c = std::move(v);
    return s;
}

std::string Field::to_string(const Scalar& a) const {
    std::ostringstream os;
    switch (kind_) {
        case FieldKind::Prime:
            os << a.r << " mod " << p_;
            break;
        case FieldKind::Rational:
            os << a.c[0];
            break;
        case FieldKind::Cyclotomic: {
            bool any = false;
            for (size_t i = 0; i < a.c.size(); ++i) {
                if (a.c[i] == 0) continue;
                if (any) os << "+";
                os << a.c[i];
                if (i == 1) os << "*z";
                else if (i > 1) os << "*z^" << i;
                any = true;
            }
            if (!any) os << "0";
            break;
        }
    }
    return os.str();
}

Scalar Field::parse(const std::string& text) const {
    try {
        switch (kind_) {
            case FieldKind::Prime: {
                size_t at = text.find(" mod ");
                std::string num = at == std::string::npos ? text : text.substr(0, at);
                if (at != std::string::npos) {
                    uint64_t p = std::stoull(text.substr(at + 5));
                    if (p != p_) throw Error(ErrorKind::InvalidInput, "scalar written mod a different prime");
                }
                mpq_class q(num);
                q.canonicalize();
                return from_mpq(q);
            }
            case FieldKind::Rational: {
                mpq_class q(text);
                q.canonicalize();
                return from_mpq(q);
            }
            case FieldKind::Cyclotomic: {
                Scalar s = zero();
                size_t pos = 0;
                while (pos < text.size()) {
                    size_t next = text.find('+', pos);
                    if (next == std::string::npos) next = text.size();
                    std::string term = text.substr(pos, next - pos);
                    pos = next + 1;
                    if (term.empty()) continue;
                    size_t star = term.find("*z");
                    mpq_class coeff(star == std::string::npos ? term : term.substr(0, star));
                    coeff.canonicalize();
                    size_t power = 0;
                    if (star != std::string::npos) {
                        power = 1;
                        size_t caret = term.find('^', star);
                        if (caret != std::string::npos) power = std::stoul(term.substr(caret + 1));
                    }
                    if (power >= degree())
                        throw Error(ErrorKind::InvalidInput, "cyclotomic coefficient exceeds field degree");
                    s.c[power] += coeff;
                }
                return s;
            }
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw Error(ErrorKind::InvalidInput, "malformed scalar: " + text);
}

}  // namespace homalg
