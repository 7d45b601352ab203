#include "obstr/latin.hpp"

#include <stdexcept>
#include <vector>

#include "obstr/errors.hpp"
#include "obstr/evaluate.hpp"

namespace obstr {

ObstructionDesign latin_design(int n) {
    if (n < 1) throw std::invalid_argument("latin_design: n must be positive");
    std::vector<std::array<int, 3>> pts;
    pts.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pts.push_back({i, j, (i - 1) * n + j});
    return ObstructionDesign({n, n, n * n}, std::move(pts));
}

namespace {

int perm_sign(const std::vector<int>& perm) {   // 1-based values
    int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j] - 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

struct LatinWalk {
    int n;
    std::vector<std::vector<int>> square;   // values 1..n
    std::vector<unsigned> col_used;         // bitmask per column
    Int count = 0, signed_count = 0;
    bool signs;

    void run() {
        square.assign(n, std::vector<int>(n, 0));
        col_used.assign(n, 0);
        cell(0, 0, 0u);
    }

    void cell(int i, int j, unsigned row_used) {
        if (j == n) {
            if (i + 1 == n) {
                finish();
                return;
            }
            cell(i + 1, 0, 0u);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            unsigned bit = 1u << v;
            if ((row_used & bit) || (col_used[j] & bit)) continue;
            square[i][j] = v;
            col_used[j] |= bit;
            cell(i, j + 1, row_used | bit);
            col_used[j] &= ~bit;
        }
        square[i][j] = 0;
    }

    void finish() {
        ++count;
        if (!signs) return;
        int s = 1;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) perm[j] = square[i][j];
            s *= perm_sign(perm);
        }
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) perm[i] = square[i][j];
            s *= perm_sign(perm);
        }
        signed_count += s;
    }
};

} // namespace

Int count_latin_squares(int n) {
    if (n < 1) throw std::invalid_argument("count_latin_squares: n must be positive");
    if (n > 6) throw ScaleExceeded("count_latin_squares supports n <= 6");
    LatinWalk w;
    w.n = n;
    w.signs = false;
    w.run();
    return w.count;
}

Int alon_tarsi_difference(int n, AlonTarsiMethod method) {
    if (n < 1) throw std::invalid_argument("alon_tarsi_difference: n must be positive");
    if (n > 6) throw ScaleExceeded("alon_tarsi_difference supports n <= 6");

    Int via_enum = 0, via_eval = 0;
    if (method != AlonTarsiMethod::Eval) {
        LatinWalk w;
        w.n = n;
        w.signs = true;
        w.run();
        via_enum = w.signed_count;
    }
    if (method != AlonTarsiMethod::Enumerate) {
        Rank1Decomposition w;
        w.dims = {n, n, n * n};
        for (int i = 1; i <= n; ++i) {
            RatVec u(n, Rat(0)), v(n, Rat(0)), x(n * n, Rat(0));
            u[i - 1] = 1;
            v[i - 1] = 1;
            x[0] = 1;
            w.triples.push_back({u, v, x});
        }
        EvalOptions opts;
        opts.node_budget = 200'000'000;   // n=5 pushes past the small default
        Rat val = eval_fH(latin_design(n), w, opts).value;
        if (val.get_den() != 1)
            throw std::logic_error("signed Latin count came out non-integral");
        via_eval = val.get_num();
    }
    if (method == AlonTarsiMethod::Both && via_enum != via_eval)
        throw CancellationDetected("evaluation and enumeration disagree: " +
                                   via_eval.get_str() + " vs " + via_enum.get_str());
    return method == AlonTarsiMethod::Enumerate ? via_enum : via_eval;
}

} // namespace obstr
