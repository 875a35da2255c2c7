#include "homalg/degree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace homalg {

Degree Degree::grid(std::vector<std::pair<uint32_t, uint32_t>> e) {
    std::sort(e.begin(), e.end());
    std::vector<std::pair<uint32_t, uint32_t>> clean;
    for (auto& [d, v] : e) {
        if (d == 0) throw Error(ErrorKind::InvalidInput, "grid directions are 1-based");
        if (!clean.empty() && clean.back().first == d)
            throw Error(ErrorKind::InvalidInput, "duplicate direction in grid degree");
        if (v > 0) clean.emplace_back(d, v);
    }
    Degree x;
    x.kind = PosetKind::Grid;
    x.entries = std::move(clean);
    return x;
}

Degree Degree::grid_dense(const std::vector<uint32_t>& exps) {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (uint32_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) e.emplace_back(i + 1, exps[i]);
    return grid(std::move(e));
}

Degree Degree::unit(uint32_t direction) { return grid({{direction, 1}}); }

Degree Degree::young(std::vector<uint32_t> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw Error(ErrorKind::InvalidInput, "young parts must be weakly decreasing");
    for (uint32_t v : p)
        if (v == 0) throw Error(ErrorKind::InvalidInput, "young parts must be positive");
    Degree x;
    x.kind = PosetKind::Young;
    x.parts = std::move(p);
    return x;
}

Degree Degree::orbit(uint64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "orbit objects are positive integers");
    Degree x;
    x.kind = PosetKind::Orbit;
    x.n = n;
    return x;
}

uint32_t Degree::grid_entry(uint32_t direction) const {
    for (auto& [d, v] : entries)
        if (d == direction) return v;
    return 0;
}

bool Degree::is_zero() const {
    switch (kind) {
        case PosetKind::Grid: return entries.empty();
        case PosetKind::Young: return parts.empty();
        case PosetKind::Orbit: return n == 1;
    }
    return false;
}

bool Degree::operator==(const Degree& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case PosetKind::Grid: return entries == o.entries;
        case PosetKind::Young: return parts == o.parts;
        case PosetKind::Orbit: return n == o.n;
    }
    return false;
}

bool canonical_less(const Degree& a, const Degree& b) {
    if (a.kind != b.kind) throw Error(ErrorKind::InvalidInput, "comparing degrees of different kinds");
    if (a.kind == PosetKind::Orbit) return a.n < b.n;
    uint64_t sa = norm_of(a, NormKind::Sum), sb = norm_of(b, NormKind::Sum);
    if (sa != sb) return sa < sb;
    if (a.kind == PosetKind::Young) return a.parts < b.parts;
    // lex on the dense exponent sequence x_1, x_2, ...
    size_t i = 0, j = 0;
    uint32_t dir = 1;
    while (i < a.entries.size() || j < b.entries.size()) {
        uint32_t ea = (i < a.entries.size() && a.entries[i].first == dir) ? a.entries[i].second : 0;
        uint32_t eb = (j < b.entries.size() && b.entries[j].first == dir) ? b.entries[j].second : 0;
        if (ea != eb) return ea < eb;
        if (i < a.entries.size() && a.entries[i].first == dir) ++i;
        if (j < b.entries.size() && b.entries[j].first == dir) ++j;
        ++dir;
        // skip to the next direction either degree mentions
        uint32_t next = UINT32_MAX;
        if (i < a.entries.size()) next = std::min(next, a.entries[i].first);
        if (j < b.entries.size()) next = std::min(next, b.entries[j].first);
        if (next != UINT32_MAX && next > dir) dir = next;
    }
    return false;
}

uint64_t norm_of(const Degree& x, NormKind n) {
    if (x.kind == PosetKind::Orbit)
        throw Error(ErrorKind::Unsupported, "norms act on grid or young degrees; encode orbit objects first");
    uint64_t acc = 0;
    if (x.kind == PosetKind::Grid) {
        for (auto& [d, v] : x.entries) {
            (void)d;
            if (n == NormKind::Sup) acc = std::max<uint64_t>(acc, v);
            else acc += v;
        }
    } else {
        for (uint32_t v : x.parts) {
            if (n == NormKind::Sup) acc = std::max<uint64_t>(acc, v);
            else acc += v;
        }
    }
    return acc;
}

bool leq(const Degree& x, const Degree& y) {
    if (x.kind != y.kind) throw Error(ErrorKind::InvalidInput, "comparing degrees of different kinds");
    switch (x.kind) {
        case PosetKind::Grid: {
            size_t j = 0;
            for (auto& [d, v] : x.entries) {
                while (j < y.entries.size() && y.entries[j].first < d) ++j;
                if (j == y.entries.size() || y.entries[j].first != d || y.entries[j].second < v) return false;
            }
            return true;
        }
        case PosetKind::Young: {
            if (x.parts.size() > y.parts.size()) return false;
            for (size_t i = 0; i < x.parts.size(); ++i)
                if (x.parts[i] > y.parts[i]) return false;
            return true;
        }
        case PosetKind::Orbit:
            return y.n % x.n == 0;
    }
    return false;
}

Degree join(const Degree& x, const Degree& y) {
    if (x.kind != y.kind) throw Error(ErrorKind::InvalidInput, "joining degrees of different kinds");
    switch (x.kind) {
        case PosetKind::Grid: {
            std::vector<std::pair<uint32_t, uint32_t>> e;
            size_t i = 0, j = 0;
            while (i < x.entries.size() || j < y.entries.size()) {
                if (j == y.entries.size() || (i < x.entries.size() && x.entries[i].first < y.entries[j].first))
                    e.push_back(x.entries[i++]);
                else if (i == x.entries.size() || y.entries[j].first < x.entries[i].first)
                    e.push_back(y.entries[j++]);
                else {
                    e.emplace_back(x.entries[i].first, std::max(x.entries[i].second, y.entries[j].second));
                    ++i, ++j;
                }
            }
            return Degree::grid(std::move(e));
        }
        case PosetKind::Young: {
            std::vector<uint32_t> p(std::max(x.parts.size(), y.parts.size()));
            for (size_t i = 0; i < p.size(); ++i)
                p[i] = std::max(i < x.parts.size() ? x.parts[i] : 0, i < y.parts.size() ? y.parts[i] : 0);
            return Degree::young(std::move(p));
        }
        case PosetKind::Orbit:
            return Degree::orbit(std::lcm(x.n, y.n));
    }
    return x;
}

Degree grid_add_unit(const Degree& x, uint32_t direction) {
    if (x.kind != PosetKind::Grid) throw Error(ErrorKind::Unsupported, "unit shifts act on grid degrees");
    Degree y = x;
    for (auto& [d, v] : y.entries)
        if (d == direction) {
            ++v;
            return y;
        }
    y.entries.emplace_back(direction, 1);
    std::sort(y.entries.begin(), y.entries.end());
    return y;
}

Degree grid_sub_unit(const Degree& x, uint32_t direction) {
    if (x.kind != PosetKind::Grid) throw Error(ErrorKind::Unsupported, "unit shifts act on grid degrees");
    Degree y = x;
    for (size_t i = 0; i < y.entries.size(); ++i)
        if (y.entries[i].first == direction) {
            if (--y.entries[i].second == 0) y.entries.erase(y.entries.begin() + i);
            return y;
        }
    return y;
}

namespace {

std::vector<uint64_t>& prime_table() {
    static std::vector<uint64_t> primes = {2, 3, 5, 7, 11, 13};
    return primes;
}

void extend_primes(size_t count) {
    auto& primes = prime_table();
    uint64_t c = primes.back();
    while (primes.size() < count) {
        c += 2;
        bool ok = true;
        for (uint64_t p : primes) {
            if (p * p > c) break;
            if (c % p == 0) {
                ok = false;
                break;
            }
        }
        if (ok) primes.push_back(c);
    }
}

}  // namespace

uint64_t nth_prime(uint32_t i) {
    if (i == 0) throw Error(ErrorKind::InvalidInput, "prime indices are 1-based");
    extend_primes(i);
    return prime_table()[i - 1];
}

Degree divisibility_encode(uint64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "0 is not an object of the divisibility poset");
    std::vector<std::pair<uint32_t, uint32_t>> e;
    uint32_t idx = 0;
    while (n > 1) {
        ++idx;
        uint64_t p = nth_prime(idx);
        uint32_t v = 0;
        while (n % p == 0) {
            n /= p;
            ++v;
        }
        if (v > 0) e.emplace_back(idx, v);
        if (p * p > n && n > 1) {
            // n is prime; find its index
            uint32_t j = idx;
            for (;;) {
                ++j;
                if (nth_prime(j) == n) break;
                if (nth_prime(j) > n) throw Error(ErrorKind::Internal, "prime search overshot");
            }
            e.emplace_back(j, 1);
            n = 1;
        }
    }
    return Degree::grid(std::move(e));
}

uint64_t divisibility_decode(const Degree& x) {
    if (x.kind != PosetKind::Grid) throw Error(ErrorKind::InvalidInput, "divisibility decoding expects a grid degree");
    uint64_t n = 1;
    for (auto& [d, v] : x.entries) {
        uint64_t p = nth_prime(d);
        for (uint32_t i = 0; i < v; ++i) n *= p;
    }
    return n;
}

Degree young_to_grid(const Degree& lambda) {
    if (lambda.kind != PosetKind::Young) throw Error(ErrorKind::InvalidInput, "expected a young degree");
    std::vector<std::pair<uint32_t, uint32_t>> e;
    for (size_t i = 0; i < lambda.parts.size(); ++i) e.emplace_back(uint32_t(i + 1), lambda.parts[i]);
    return Degree::grid(std::move(e));
}

Degree grid_to_young(const Degree& x) {
    if (x.kind != PosetKind::Grid) throw Error(ErrorKind::InvalidInput, "expected a grid degree");
    std::vector<uint32_t> p;
    for (auto& [d, v] : x.entries) {
        (void)d;
        p.push_back(v);
    }
    std::sort(p.rbegin(), p.rend());
    return Degree::young(std::move(p));
}

PosetDesc PosetDesc::grid(std::vector<uint32_t> dirMax, std::optional<uint64_t> sumCap) {
    PosetDesc p;
    p.kind = PosetKind::Grid;
    p.dirMax = std::move(dirMax);
    p.sumCap = sumCap;
    return p;
}

PosetDesc PosetDesc::young(uint32_t maxSum) {
    PosetDesc p;
    p.kind = PosetKind::Young;
    p.maxSum = maxSum;
    return p;
}

PosetDesc PosetDesc::orbit(uint64_t modulus) {
    if (modulus == 0) throw Error(ErrorKind::InvalidInput, "orbit modulus must be positive");
    PosetDesc p;
    p.kind = PosetKind::Orbit;
    p.modulus = modulus;
    return p;
}

bool PosetDesc::contains(const Degree& x) const {
    if (x.kind != kind) return false;
    switch (kind) {
        case PosetKind::Grid: {
            uint64_t s = 0;
            for (auto& [d, v] : x.entries) {
                if (d > dirMax.size() || v > dirMax[d - 1]) return false;
                s += v;
            }
            return !sumCap || s <= *sumCap;
        }
        case PosetKind::Young:
            return norm_of(x, NormKind::Sum) <= maxSum;
        case PosetKind::Orbit:
            return modulus % x.n == 0;
    }
    return false;
}

namespace {

void enumerate_grid(const PosetDesc& p, uint32_t dir, uint64_t sumLeft,
                    std::vector<std::pair<uint32_t, uint32_t>>& cur, std::vector<Degree>& out) {
    if (dir > p.dirMax.size()) {
        out.push_back(Degree::grid(cur));
        return;
    }
    uint32_t cap = p.dirMax[dir - 1];
    for (uint32_t v = 0; v <= cap && v <= sumLeft; ++v) {
        if (v > 0) cur.emplace_back(dir, v);
        enumerate_grid(p, dir + 1, sumLeft - v, cur, out);
        if (v > 0) cur.pop_back();
    }
}

void enumerate_partitions(uint32_t leftover, uint32_t maxPart, std::vector<uint32_t>& cur,
                          std::vector<Degree>& out) {
    out.push_back(Degree::young(cur));
    for (uint32_t v = std::min(leftover, maxPart); v >= 1; --v) {
        cur.push_back(v);
        enumerate_partitions(leftover - v, v, cur, out);
        cur.pop_back();
        if (v == 1) break;
    }
}

}  // namespace

std::vector<Degree> PosetDesc::enumerate() const {
    std::vector<Degree> out;
    switch (kind) {
        case PosetKind::Grid: {
            std::vector<std::pair<uint32_t, uint32_t>> cur;
            uint64_t cap = sumCap ? *sumCap : UINT64_MAX;
            enumerate_grid(*this, 1, cap, cur, out);
            break;
        }
        case PosetKind::Young: {
            std::vector<uint32_t> cur;
            enumerate_partitions(maxSum, maxSum, cur, out);
            break;
        }
        case PosetKind::Orbit: {
            for (uint64_t d = 1; d * d <= modulus; ++d)
                if (modulus % d == 0) {
                    out.push_back(Degree::orbit(d));
                    if (d != modulus / d) out.push_back(Degree::orbit(modulus / d));
                }
            break;
        }
    }
    std::sort(out.begin(), out.end(), DegreeLess{});
    return out;
}

std::vector<Degree> PosetDesc::predecessors(const Degree& x) const {
    std::vector<Degree> out;
    switch (kind) {
        case PosetKind::Grid:
            for (auto& [d, v] : x.entries) {
                (void)v;
                out.push_back(grid_sub_unit(x, d));
            }
            break;
        case PosetKind::Young:
            for (size_t i = 0; i < x.parts.size(); ++i) {
                // removable corner: last part of each run of equal parts
                if (i + 1 < x.parts.size() && x.parts[i] == x.parts[i + 1]) continue;
                std::vector<uint32_t> p = x.parts;
                if (--p[i] == 0) p.erase(p.begin() + i);
                out.push_back(Degree::young(std::move(p)));
            }
            break;
        case PosetKind::Orbit: {
            uint64_t n = x.n;
            for (uint64_t q = 2; q * q <= n; ++q)
                if (n % q == 0) {
                    out.push_back(Degree::orbit(n / q));
                    while (n % q == 0) n /= q;
                }
            if (n > 1) out.push_back(Degree::orbit(x.n / n));
            break;
        }
    }
    std::sort(out.begin(), out.end(), DegreeLess{});
    return out;
}

bool PosetDesc::operator==(const PosetDesc& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case PosetKind::Grid: return dirMax == o.dirMax && sumCap == o.sumCap;
        case PosetKind::Young: return maxSum == o.maxSum;
        case PosetKind::Orbit: return modulus == o.modulus;
    }
    return false;
}

std::string to_string(const Degree& x) {
    std::ostringstream os;
    switch (x.kind) {
        case PosetKind::Grid: {
            os << "(";
            uint32_t top = x.entries.empty() ? 0 : x.entries.back().first;
            for (uint32_t d = 1; d <= top; ++d) {
                if (d > 1) os << ",";
                os << x.grid_entry(d);
            }
            os << ")";
            break;
        }
        case PosetKind::Young: {
            os << "[";
            for (size_t i = 0; i < x.parts.size(); ++i) {
                if (i) os << ",";
                os << x.parts[i];
            }
            os << "]";
            break;
        }
        case PosetKind::Orbit:
            os << x.n;
            break;
    }
    return os.str();
}

}  // namespace homalg
