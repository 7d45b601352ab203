#include "obstr/hook.hpp"

#include <algorithm>
#include <stdexcept>

#include "obstr/coloring.hpp"
#include "obstr/errors.hpp"

namespace obstr {

ObstructionDesign hook_design(int kappa) {
    if (kappa < 0) throw std::invalid_argument("hook_design: negative kappa");
    std::vector<std::array<int, 3>> pts;
    pts.push_back({1, 1, 1});
    for (int v = 2; v <= kappa + 1; ++v) {
        pts.push_back({v, 1, 1});
        pts.push_back({1, v, 1});
        pts.push_back({1, 1, v});
    }
    int side = kappa + 1;
    return ObstructionDesign({side, side, side}, std::move(pts));
}

static int flat(int i, int j, int m) { return (i - 1) * m + j; }   // 1-based

MatrixTriple matrix_triple(int m) {
    std::vector<int> phi(static_cast<size_t>(m) * m, 0);
    int a = (m + 1) / 2;
    int next = 2;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == a && j == a) continue;
            phi[flat(i, j, m) - 1] = next++;
        }
    return matrix_triple(m, phi);
}

MatrixTriple matrix_triple(int m, const std::vector<int>& phi) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("matrix_triple: m must be odd, m >= 3");
    int n = m * m;
    int a = (m + 1) / 2;
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("matrix_triple: phi must cover the grid");
    std::vector<char> hit(n + 1, 0);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            int v = phi[flat(i, j, m) - 1];
            if (i == a && j == a) {
                if (v != 0 && v != 1)
                    throw std::invalid_argument("matrix_triple: center must map to 1 or 0");
                continue;
            }
            if (v < 2 || v > n || hit[v])
                throw std::invalid_argument("matrix_triple: phi must biject onto 2..m^2");
            hit[v] = 1;
        }

    MatrixTriple t;
    t.m = m;
    t.arity = 3 * m;
    t.phi = phi;
    for (int k = 0; k < 3; ++k) {
        PolyMatrix mat(n, n, t.arity);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                int col = flat(i, j, m) - 1;
                if (i == a && j == a) {
                    mat.at(0, col) = MultiPoly::variable(t.arity, k * m + (a - 1));
                } else if (j == m + 1 - i) {
                    mat.at(phi[col] - 1, col) = MultiPoly::constant(t.arity, 1);
                    mat.at(0, col) = MultiPoly::variable(t.arity, k * m + (i - 1));
                } else {
                    mat.at(phi[col] - 1, col) = MultiPoly::constant(t.arity, 1);
                }
            }
        t.a[k] = std::move(mat);
    }
    return t;
}

Cell tau_cell(Cell c, int m) { return {c.second, m + 1 - c.first}; }

std::vector<Cell> tau_set(const std::vector<Cell>& s, int m) {
    std::vector<Cell> out;
    out.reserve(s.size());
    for (Cell c : s) out.push_back(tau_cell(c, m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> complement_set(const std::vector<Cell>& s, int m) {
    int a = (m + 1) / 2;
    std::vector<Cell> out;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == a && j == a) continue;
            Cell c{i, j};
            if (!std::binary_search(s.begin(), s.end(), c)) out.push_back(c);
        }
    return out;
}

Monomial target_monomial(int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("target_monomial: m must be odd");
    int a = (m + 1) / 2;
    Monomial e(3 * m, 0);
    for (int k = 0; k < 3; ++k) {
        e[k * m + (a - 1)] += 1;
        for (int i = 1; i <= m; ++i) e[k * m + (i - 1)] += std::abs(2 * i - m - 1);
    }
    return e;
}

bool is_valid_set(const std::vector<Cell>& s, int m) {
    int a = (m + 1) / 2;
    std::vector<Cell> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Cell c : sorted) {
        if (c.first < 1 || c.first > m || c.second < 1 || c.second > m) return false;
        if (c.first == a && c.second == a) return false;
    }
    if (static_cast<int>(sorted.size()) != (m * m - 1) / 2) return false;
    if (tau_set(sorted, m) != complement_set(sorted, m)) return false;
    std::vector<int> row_count(m + 1, 0);
    for (Cell c : sorted) ++row_count[c.first];
    for (int i = 1; i <= m; ++i)
        if (row_count[i] != std::abs(2 * i - m - 1)) return false;
    return true;
}

std::vector<std::vector<Cell>> enumerate_valid_sets(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("enumerate_valid_sets: m must be odd, m >= 3");
    std::vector<Cell> base;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            int jb = m + 1 - j;
            bool in = (i < j && i < jb) || (i > j && i > jb);
            if (in) base.push_back({i, j});
        }
    int half = (m - 1) / 2;
    std::vector<std::vector<Cell>> out;
    for (int mask = 0; mask < (1 << half); ++mask) {
        std::vector<Cell> s = base;
        for (int i = 1; i <= half; ++i) {
            int ib = m + 1 - i;
            if (mask & (1 << (i - 1))) {
                s.push_back({i, ib});
                s.push_back({ib, i});
            } else {
                s.push_back({i, i});
                s.push_back({ib, ib});
            }
        }
        std::sort(s.begin(), s.end());
        if (!is_valid_set(s, m))
            throw InvalidSet("constructed set fails validity at m=" + std::to_string(m));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::array<int, 3>> canonical_labeling(const std::vector<Cell>& s, int m) {
    if (!is_valid_set(s, m)) throw InvalidSet("canonical_labeling requires a valid set");
    int a = (m + 1) / 2;
    int kappa = (m * m - 1) / 2;

    std::vector<Cell> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    // arm along axis 3 carries first components from S itself
    std::vector<Cell> third_arm = sorted;
    // arm along axis 2 carries first components from the inverse turn of S
    std::vector<Cell> second_arm;
    for (Cell c : sorted) {
        // tau^{-1}(i,j) = (m+1-j, i)
        second_arm.push_back({m + 1 - c.second, c.first});
    }
    std::sort(second_arm.begin(), second_arm.end());
    // arm along axis 1 carries second components from the complement of tau(S)
    std::vector<Cell> first_arm = complement_set(tau_set(sorted, m), m);
    std::sort(first_arm.begin(), first_arm.end());

    // hook points in lex order: center, axis-3 arm, axis-2 arm, axis-1 arm
    std::vector<std::array<int, 3>> labels(3 * kappa + 1);
    labels[0] = {a, a, a};
    for (int t = 0; t < kappa; ++t) {
        auto [i, j] = third_arm[t];
        labels[1 + t] = {i, j, m + 1 - i};
    }
    for (int t = 0; t < kappa; ++t) {
        auto [i, j] = second_arm[t];
        labels[1 + kappa + t] = {i, j, m + 1 - j};
    }
    for (int t = 0; t < kappa; ++t) {
        auto [p, q] = first_arm[t];
        labels[1 + 2 * kappa + t] = {m + 1 - p, p, q};
    }
    return labels;
}

static std::vector<Int> per_set_impl(const MatrixTriple& a) {
    int m = a.m;
    int kappa = (m * m - 1) / 2;
    if (m > 7) throw ScaleExceeded("hook coefficient supported for m <= 7");
    ObstructionDesign h = hook_design(kappa);
    Monomial target = target_monomial(m);

    std::vector<Int> per_set;
    for (const auto& s : enumerate_valid_sets(m)) {
        auto labels = canonical_labeling(s, m);
        std::array<std::vector<std::vector<MultiPoly>>, 3> columns;
        for (int k = 0; k < 3; ++k) {
            columns[k].resize(labels.size());
            for (size_t p = 0; p < labels.size(); ++p) {
                auto [i, j, l] = labels[p];
                int col = k == 0 ? flat(i, j, m) : k == 1 ? flat(j, l, m) : flat(l, i, m);
                std::vector<MultiPoly> column(m * m, MultiPoly(a.arity));
                for (int row = 0; row < m * m; ++row)
                    column[row] = a.a[k].at(row, col - 1);
                columns[k][p] = std::move(column);
            }
        }
        MultiPoly value = eval_design_labeling_poly(h, columns);
        per_set.push_back(poly_coefficient(value, target));
    }
    return per_set;
}

static HookCoefficient hook_coefficient_impl(const MatrixTriple& a) {
    int m = a.m;
    int kappa = (m * m - 1) / 2;

    HookCoefficient res;
    res.m = m;
    res.kappa = kappa;
    res.monomial = target_monomial(m);
    Int kf = factorial(static_cast<unsigned long>(kappa));
    res.multiplicity = kf * kf * kf;

    res.per_set = per_set_impl(a);
    Int sum = 0;
    for (const Int& c : res.per_set) sum += c;
    for (size_t i = 1; i < res.per_set.size(); ++i)
        if (res.per_set[i] != res.per_set[0])
            throw CancellationDetected("valid-set contributions disagree: " +
                                       res.per_set[0].get_str() + " vs " +
                                       res.per_set[i].get_str());
    res.total = res.multiplicity * sum;
    if (res.total == 0)
        throw WitnessVanished("target monomial coefficient vanished");
    return res;
}

std::vector<Int> hook_per_set_contributions(int m) { return per_set_impl(matrix_triple(m)); }

std::vector<Int> hook_per_set_contributions(int m, const std::vector<int>& phi) {
    return per_set_impl(matrix_triple(m, phi));
}

HookCoefficient hook_coefficient(int m) { return hook_coefficient_impl(matrix_triple(m)); }

HookCoefficient hook_coefficient(int m, const std::vector<int>& phi) {
    return hook_coefficient_impl(matrix_triple(m, phi));
}

MatmulBound matmul_bound(int m) {
    MatmulBound b;
    b.m = m;
    b.witness = hook_coefficient(m);
    ObstructionDesign h = hook_design(b.witness.kappa);
    b.chromatic_index = chromatic_index_exact(h).colors;
    b.bound = Int(3) * m * m;
    b.bound = (b.bound - 1) / 2;
    if (b.bound != b.chromatic_index)
        throw std::logic_error("hook chromatic index mismatch");
    return b;
}

} // namespace obstr
