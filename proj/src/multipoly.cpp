#include "obstr/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace obstr {

MultiPoly MultiPoly::constant(int arity, Int c) {
    MultiPoly p(arity);
    if (c != 0) p.terms_.emplace(Monomial(arity, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(int arity, int index, int power) {
    if (index < 0 || index >= arity)
        throw std::invalid_argument("variable index out of range");
    MultiPoly p(arity);
    Monomial m(arity, 0);
    m[index] = power;
    p.terms_.emplace(std::move(m), Int(1));
    return p;
}

MultiPoly MultiPoly::monomial(int arity, Monomial m, Int c) {
    if (static_cast<int>(m.size()) != arity)
        throw std::invalid_argument("monomial arity mismatch");
    MultiPoly p(arity);
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

Int MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(arity_);
    Monomial prod(arity_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            for (int i = 0; i < arity_; ++i) prod[i] = m1[i] + m2[i];
            r.add_term(prod, c1 * c2);
        }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

std::map<Monomial, Int>::const_iterator MultiPoly::leading() const {
    auto best = terms_.begin();
    int best_deg = std::accumulate(best->first.begin(), best->first.end(), 0);
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        int deg = std::accumulate(it->first.begin(), it->first.end(), 0);
        if (deg > best_deg || (deg == best_deg && it->first > best->first)) {
            best = it;
            best_deg = deg;
        }
    }
    return best;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quot(arity_);
    auto dl = divisor.leading();
    while (!rem.is_zero()) {
        auto rl = rem.leading();
        Monomial qm(arity_);
        for (int i = 0; i < arity_; ++i) {
            qm[i] = rl->first[i] - dl->first[i];
            if (qm[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(),
                    rl->second.get_mpz_t(), dl->second.get_mpz_t());
        if (r != 0) throw std::domain_error("inexact polynomial division");
        MultiPoly t = MultiPoly::monomial(arity_, qm, qc);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(m.begin(), m.end(), [](int e) { return e != 0; });
        if (ac != 1 || !any_var) os << ac.get_str();
        bool started = (ac != 1 || !any_var);
        for (int i = 0; i < arity_; ++i) {
            if (m[i] == 0) continue;
            if (started) os << "*";
            started = true;
            if (static_cast<size_t>(i) < names.size()) os << names[i];
            else os << "x" << i;
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

Int poly_coefficient(const MultiPoly& p, const Monomial& m) {
    if (static_cast<int>(m.size()) != p.arity())
        throw std::invalid_argument("poly_coefficient: arity mismatch");
    return p.coefficient(m);
}

namespace {

// index bookkeeping for the peeling determinant
struct DetWork {
    const PolyMatrix* m;
    std::vector<int> rows, cols;   // live indices

    int nz_in_row(int ri, int* only_col) const {
        int cnt = 0;
        for (int cj : cols)
            if (!m->at(ri, cj).is_zero()) {
                ++cnt;
                if (only_col) *only_col = cj;
            }
        return cnt;
    }
    int nz_in_col(int cj, int* only_row) const {
        int cnt = 0;
        for (int ri : rows)
            if (!m->at(ri, cj).is_zero()) {
                ++cnt;
                if (only_row) *only_row = ri;
            }
        return cnt;
    }
};

// sign of removing rows[i]/cols[j] from the live index lists
int removal_sign(const std::vector<int>& live, int idx) {
    int pos = static_cast<int>(std::lower_bound(live.begin(), live.end(), idx) - live.begin());
    return pos % 2 == 0 ? 1 : -1;
}

MultiPoly det_recursive(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols);

// Bareiss fraction-free elimination for all-constant live submatrices.
MultiPoly det_constant(const PolyMatrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    int n = static_cast<int>(rows.size());
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    auto const_of = [](const MultiPoly& p) -> Int {
        if (p.is_zero()) return Int(0);
        return p.terms().begin()->second;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = const_of(m.at(rows[i], cols[j]));

    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return MultiPoly(m.arity);   // singular
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return MultiPoly::constant(m.arity, sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1]);
}

MultiPoly det_cofactor(const PolyMatrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    // expand along the row with fewest nonzeros
    DetWork w{&m, rows, cols};
    int best_row = rows[0], best_cnt = static_cast<int>(cols.size()) + 1;
    for (int ri : rows) {
        int cnt = w.nz_in_row(ri, nullptr);
        if (cnt < best_cnt) { best_cnt = cnt; best_row = ri; }
    }
    if (best_cnt == 0) return MultiPoly(m.arity);
    MultiPoly acc(m.arity);
    std::vector<int> sub_rows = rows;
    std::erase(sub_rows, best_row);
    int rsign = removal_sign(rows, best_row);
    for (int cj : cols) {
        const MultiPoly& e = m.at(best_row, cj);
        if (e.is_zero()) continue;
        std::vector<int> sub_cols = cols;
        std::erase(sub_cols, cj);
        int s = rsign * removal_sign(cols, cj);
        MultiPoly minor = det_recursive(m, sub_rows, sub_cols);
        if (minor.is_zero()) continue;
        MultiPoly term = e * minor;
        if (s < 0) term = -term;
        acc += term;
    }
    return acc;
}

MultiPoly det_recursive(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    MultiPoly unit_factor = MultiPoly::constant(m.arity, 1);
    int sign = 1;

    // peel singleton rows/columns until none remain
    for (;;) {
        if (rows.empty()) break;
        DetWork w{&m, rows, cols};
        bool peeled = false;
        for (int ri : rows) {
            int cj = -1;
            int cnt = w.nz_in_row(ri, &cj);
            if (cnt == 0) return MultiPoly(m.arity);
            if (cnt == 1) {
                sign *= removal_sign(rows, ri) * removal_sign(cols, cj);
                unit_factor *= m.at(ri, cj);
                std::erase(rows, ri);
                std::erase(cols, cj);
                peeled = true;
                break;
            }
        }
        if (peeled) continue;
        for (int cj : cols) {
            int ri = -1;
            int cnt = w.nz_in_col(cj, &ri);
            if (cnt == 0) return MultiPoly(m.arity);
            if (cnt == 1) {
                sign *= removal_sign(rows, ri) * removal_sign(cols, cj);
                unit_factor *= m.at(ri, cj);
                std::erase(rows, ri);
                std::erase(cols, cj);
                peeled = true;
                break;
            }
        }
        if (!peeled) break;
    }

    MultiPoly core;
    if (rows.empty()) {
        core = MultiPoly::constant(m.arity, 1);
    } else {
        bool all_const = true;
        for (int ri : rows)
            for (int cj : cols)
                if (!m.at(ri, cj).is_constant()) { all_const = false; break; }
        if (all_const && rows.size() >= 5)
            core = det_constant(m, rows, cols);
        else
            core = det_cofactor(m, rows, cols);
    }
    MultiPoly r = unit_factor * core;
    if (sign < 0) r = -r;
    return r;
}

} // namespace

MultiPoly poly_det(const PolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("poly_det: matrix not square");
    if (m.rows == 0) return MultiPoly::constant(m.arity, 1);
    std::vector<int> rows(m.rows), cols(m.cols);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return det_recursive(m, std::move(rows), std::move(cols));
}

} // namespace obstr
