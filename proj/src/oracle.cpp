#include "homalg/oracle.hpp"

#include <algorithm>
#include <map>

namespace homalg {

namespace {

void check_box_small(const PosetDesc& box) {
    if (box.kind == PosetKind::Grid) {
        uint32_t dirs = 0, cap = 0;
        for (uint32_t m : box.dirMax)
            if (m > 0) {
                ++dirs;
                cap = std::max(cap, m);
            }
        if (dirs > 3 || cap > 3)
            throw Error(ErrorKind::InvalidInput,
                        "oracle box too large (grid: at most 3 directions with exponents <= 3)");
    } else if (box.kind == PosetKind::Young) {
        if (box.maxSum > 6)
            throw Error(ErrorKind::InvalidInput, "oracle box too large (young: max sum <= 6)");
    } else {
        throw Error(ErrorKind::Unsupported, "the bar oracle runs on grid and young modules");
    }
}

// sparse column with exact entries, rows sorted ascending
using SparseCol = std::vector<std::pair<uint32_t, Scalar>>;

void axpy(SparseCol& a, const Scalar& m, const SparseCol& b, const Field& F) {
    SparseCol out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, F.neg(F.mul(m, b[j].second)));
            ++j;
        } else {
            Scalar v = a[i].second;
            F.submul(v, m, b[j].second);
            if (!F.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    a = std::move(out);
}

/// rank by column reduction against the lowest (largest-index) nonzero row
uint32_t sparse_rank(std::vector<SparseCol> cols, const Field& F) {
    std::map<uint32_t, SparseCol> pivotCol;  // pivot row -> reduced column scaled to pivot 1
    uint32_t rank = 0;
    for (auto& c : cols) {
        while (!c.empty()) {
            uint32_t low = c.back().first;
            auto it = pivotCol.find(low);
            if (it == pivotCol.end()) break;
            axpy(c, c.back().second, it->second, F);
        }
        if (c.empty()) continue;
        Scalar inv = F.inv(c.back().second);
        for (auto& [r, v] : c) v = F.mul(v, inv);
        pivotCol.emplace(c.back().first, std::move(c));
        ++rank;
    }
    return rank;
}

struct ChainLevel {
    std::vector<std::vector<uint32_t>> chains;            // each chain: x_1 > ... > x_n as box indices
    std::map<std::vector<uint32_t>, uint32_t> index;      // chain -> position
    std::vector<uint32_t> offset;                         // column offset per chain (by dim V_bottom)
    uint32_t total = 0;
};

}  // namespace

Support oracle_homology(const Presentation& V, uint32_t i, const PosetDesc& box) {
    check_box_small(box);
    const Field& F = V.field();
    std::vector<Degree> degs = box.enumerate();
    std::map<Degree, uint32_t, DegreeLess> degIndex;
    for (uint32_t k = 0; k < degs.size(); ++k) degIndex[degs[k]] = k;
    std::vector<uint32_t> dim(degs.size());
    for (uint32_t k = 0; k < degs.size(); ++k) dim[k] = V.evaluate(degs[k]).dimension;
    // strict order lists
    std::vector<std::vector<uint32_t>> below(degs.size());
    for (uint32_t a = 0; a < degs.size(); ++a)
        for (uint32_t b = 0; b < degs.size(); ++b)
            if (a != b && leq(degs[b], degs[a])) below[a].push_back(b);

    Support out;
    for (uint32_t yi = 0; yi < degs.size(); ++yi) {
        // chain levels 0..i+1 (level n = chains of length n below y)
        std::vector<ChainLevel> levels(i + 2);
        levels[0].chains.push_back({});
        levels[0].index[{}] = 0;
        levels[0].offset = {0};
        levels[0].total = dim[yi];
        for (uint32_t n = 1; n <= i + 1; ++n) {
            ChainLevel& lvl = levels[n];
            for (const auto& chain : levels[n - 1].chains) {
                uint32_t last = chain.empty() ? yi : chain.back();
                for (uint32_t nxt : below[last]) {
                    std::vector<uint32_t> c = chain;
                    c.push_back(nxt);
                    lvl.index.emplace(c, uint32_t(lvl.chains.size()));
                    lvl.chains.push_back(std::move(c));
                }
            }
            lvl.offset.resize(lvl.chains.size());
            uint32_t pos = 0;
            for (uint32_t k = 0; k < lvl.chains.size(); ++k) {
                lvl.offset[k] = pos;
                pos += dim[lvl.chains[k].back()];
            }
            lvl.total = pos;
        }

        // ranks of d_n for n = i, i+1 (and d_i needs level i's dimension)
        auto rank_d = [&](uint32_t n) -> uint32_t {
            if (n == 0 || n > i + 1 || levels[n].total == 0) return 0;
            const ChainLevel& src = levels[n];
            const ChainLevel& dst = levels[n - 1];
            std::vector<SparseCol> cols;
            cols.reserve(src.total);
            for (uint32_t ci = 0; ci < src.chains.size(); ++ci) {
                const auto& chain = src.chains[ci];
                uint32_t bottom = chain.back();
                if (dim[bottom] == 0) continue;
                // innermost structure map columns
                uint32_t upper = chain.size() >= 2 ? chain[chain.size() - 2] : yi;
                auto inner = V.structure_map(degs[bottom], degs[upper]);
                std::vector<uint32_t> shorter(chain.begin(), chain.end() - 1);
                uint32_t innerChain = dst.index.at(shorter);
                bool innerSignPos = (chain.size() % 2) == 1;  // (-1)^{n+1}
                for (uint32_t v = 0; v < dim[bottom]; ++v) {
                    std::map<uint32_t, Scalar> entries;
                    // delete x_j, 1 <= j <= n-1: same bottom vector
                    for (uint32_t j = 0; j + 1 < chain.size(); ++j) {
                        std::vector<uint32_t> face;
                        face.reserve(chain.size() - 1);
                        for (uint32_t k = 0; k < chain.size(); ++k)
                            if (k != j) face.push_back(chain[k]);
                        uint32_t fc = dst.index.at(face);
                        uint32_t row = dst.offset[fc] + v;
                        Scalar s = (j % 2 == 0) ? F.one() : F.neg(F.one());  // (-1)^{j+1}, j 1-based
                        auto [it, fresh] = entries.emplace(row, s);
                        if (!fresh) it->second = F.add(it->second, s);
                    }
                    for (uint32_t w = 0; w < inner[v].size(); ++w) {
                        if (F.is_zero(inner[v][w])) continue;
                        uint32_t row = dst.offset[innerChain] + w;
                        Scalar s = innerSignPos ? inner[v][w] : F.neg(inner[v][w]);
                        auto [it, fresh] = entries.emplace(row, s);
                        if (!fresh) it->second = F.add(it->second, s);
                    }
                    SparseCol col;
                    for (auto& [r, s] : entries)
                        if (!F.is_zero(s)) col.emplace_back(r, s);
                    cols.push_back(std::move(col));
                }
            }
            return sparse_rank(std::move(cols), F);
        };

        uint32_t dimCi = levels[i].total;
        uint32_t ri = rank_d(i);
        uint32_t ri1 = rank_d(i + 1);
        uint32_t h = dimCi - ri - ri1;
        if (h > 0) out.emplace_back(degs[yi], h);
    }
    return out;
}

}  // namespace homalg
