#include "obstr/tensor.hpp"

#include <stdexcept>

#include "obstr/rng.hpp"

namespace obstr {

void SparseTensor3::set(int i, int j, int k, const Rat& v) {
    if (i < 1 || i > dims[0] || j < 1 || j > dims[1] || k < 1 || k > dims[2])
        throw std::out_of_range("tensor index out of range");
    if (v == 0)
        entries.erase({i, j, k});
    else
        entries[{i, j, k}] = v;
}

Rat SparseTensor3::at(int i, int j, int k) const {
    auto it = entries.find({i, j, k});
    return it == entries.end() ? Rat(0) : it->second;
}

SparseTensor3 assemble(const Rank1Decomposition& d) {
    SparseTensor3 t;
    t.dims = d.dims;
    for (const auto& tr : d.triples) {
        for (int i = 1; i <= d.dims[0]; ++i) {
            if (tr[0][i - 1] == 0) continue;
            for (int j = 1; j <= d.dims[1]; ++j) {
                if (tr[1][j - 1] == 0) continue;
                Rat uv = tr[0][i - 1] * tr[1][j - 1];
                for (int k = 1; k <= d.dims[2]; ++k) {
                    if (tr[2][k - 1] == 0) continue;
                    auto& e = t.entries[{i, j, k}];
                    e += uv * tr[2][k - 1];
                }
            }
        }
    }
    std::erase_if(t.entries, [](const auto& kv) { return kv.second == 0; });
    return t;
}

void GroupElementTriple::require_invertible() const {
    for (int k = 0; k < 3; ++k) {
        if (g[k].empty()) throw std::invalid_argument("empty group element matrix");
        if (rat_det(g[k]) == 0)
            throw std::invalid_argument("group element matrix is singular");
    }
}

GroupElementTriple identity_group_element(const std::array<int, 3>& dims) {
    GroupElementTriple e;
    for (int k = 0; k < 3; ++k) {
        e.g[k].assign(dims[k], RatVec(dims[k], Rat(0)));
        for (int i = 0; i < dims[k]; ++i) e.g[k][i][i] = 1;
    }
    return e;
}

GroupElementTriple diagonal_group_element(const std::array<RatVec, 3>& alpha) {
    GroupElementTriple e;
    for (int k = 0; k < 3; ++k) {
        int n = static_cast<int>(alpha[k].size());
        e.g[k].assign(n, RatVec(n, Rat(0)));
        for (int i = 0; i < n; ++i) e.g[k][i][i] = alpha[k][i];
    }
    return e;
}

static RatVec apply(const RatMatrix& m, const RatVec& v) {
    size_t rows = m.size();
    RatVec out(rows, Rat(0));
    for (size_t i = 0; i < rows; ++i) {
        if (m[i].size() != v.size())
            throw std::invalid_argument("matrix/vector size mismatch");
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    }
    return out;
}

Rank1Decomposition act(const GroupElementTriple& g, const Rank1Decomposition& w) {
    Rank1Decomposition out;
    for (int k = 0; k < 3; ++k)
        out.dims[k] = static_cast<int>(g.g[k].size());
    out.triples.reserve(w.triples.size());
    for (const auto& tr : w.triples)
        out.triples.push_back({apply(g.g[0], tr[0]), apply(g.g[1], tr[1]), apply(g.g[2], tr[2])});
    return out;
}

SparseTensor3 act(const GroupElementTriple& g, const SparseTensor3& w) {
    SparseTensor3 out;
    for (int k = 0; k < 3; ++k)
        out.dims[k] = static_cast<int>(g.g[k].size());
    for (const auto& [idx, v] : w.entries)
        for (int i = 1; i <= out.dims[0]; ++i) {
            const Rat& a = g.g[0][i - 1][idx[0] - 1];
            if (a == 0) continue;
            for (int j = 1; j <= out.dims[1]; ++j) {
                const Rat& b = g.g[1][j - 1][idx[1] - 1];
                if (b == 0) continue;
                for (int k = 1; k <= out.dims[2]; ++k) {
                    const Rat& c = g.g[2][k - 1][idx[2] - 1];
                    if (c == 0) continue;
                    out.entries[{i, j, k}] += v * a * b * c;
                }
            }
        }
    std::erase_if(out.entries, [](const auto& kv) { return kv.second == 0; });
    return out;
}

static RatVec basis_vec(int dim, int one_at) {   // 1-based position
    RatVec v(dim, Rat(0));
    v[one_at - 1] = 1;
    return v;
}

Rank1Decomposition mamu_tensor(int m) {
    if (m < 1) throw std::invalid_argument("mamu_tensor: m must be positive");
    int n = m * m;
    auto flat = [m](int i, int j) { return (i - 1) * m + j; };
    Rank1Decomposition d;
    d.dims = {n, n, n};
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int l = 1; l <= m; ++l)
                d.triples.push_back({basis_vec(n, flat(i, j)),
                                     basis_vec(n, flat(j, l)),
                                     basis_vec(n, flat(l, i))});
    return d;
}

Rank1Decomposition unit_tensor(int n) {
    if (n < 1) throw std::invalid_argument("unit_tensor: n must be positive");
    Rank1Decomposition d;
    d.dims = {n, n, n};
    for (int i = 1; i <= n; ++i)
        d.triples.push_back({basis_vec(n, i), basis_vec(n, i), basis_vec(n, i)});
    return d;
}

Rank1Decomposition random_low_rank(const std::array<int, 3>& dims, int r,
                                   long lo, long hi, std::uint64_t seed) {
    if (r < 0) throw std::invalid_argument("random_low_rank: negative rank");
    if (lo > hi) throw std::invalid_argument("random_low_rank: empty entry range");
    Rng rng(seed);
    Rank1Decomposition d;
    d.dims = dims;
    for (int t = 0; t < r; ++t) {
        std::array<RatVec, 3> tr;
        for (int k = 0; k < 3; ++k) {
            RatVec v(dims[k]);
            bool nonzero = false;
            do {
                nonzero = false;
                for (int i = 0; i < dims[k]; ++i) {
                    long e = rng.range(lo, hi);
                    v[i] = e;
                    if (e != 0) nonzero = true;
                }
            } while (!nonzero);
            tr[k] = std::move(v);
        }
        d.triples.push_back(std::move(tr));
    }
    return d;
}

int flattening_rank(const SparseTensor3& t, int k) {
    if (k < 0 || k > 2) throw std::invalid_argument("flattening_rank: direction in {0,1,2}");
    int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
    RatMatrix m(t.dims[k], RatVec(static_cast<size_t>(t.dims[k1]) * t.dims[k2], Rat(0)));
    for (const auto& [idx, v] : t.entries) {
        int row = idx[k] - 1;
        int col = (idx[k1] - 1) * t.dims[k2] + (idx[k2] - 1);
        m[row][col] = v;
    }
    return rat_rank(std::move(m));
}

} // namespace obstr
