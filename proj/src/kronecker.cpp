#include "obstr/kronecker.hpp"

#include "obstr/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace obstr {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

// Character recursion on beta-sets: removing a border strip of length len
// means lowering one beta number by len, staying nonnegative and distinct;
// the strip height is the number of beta numbers jumped over.
Int mn_character(const std::vector<int>& lambda, const std::vector<int>& mu,
                 std::map<Key, Int>& memo) {
    if (mu.empty()) return Int(1);   // lambda is empty too when sizes match
    Key key{lambda, mu};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int len = mu.front();
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());
    int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);

    Int total = 0;
    for (int i = 0; i < L; ++i) {
        int t = beta[i] - len;
        if (t < 0) continue;
        bool clash = false;
        int jumped = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == t) { clash = true; break; }
            if (beta[j] > t && beta[j] < beta[i]) ++jumped;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = t;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nl(L);
        for (int r = 0; r < L; ++r) nl[r] = nb[r] - (L - 1 - r);
        while (!nl.empty() && nl.back() == 0) nl.pop_back();
        Int sub = mn_character(nl, mu_rest, memo);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    memo[key] = total;
    return total;
}

} // namespace

Int sym_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character: partition sizes differ");
    static std::map<Key, Int> memo;
    return mn_character(lambda.parts, mu.parts, memo);
}

Int conjugacy_class_size(const Partition& mu) {
    // d! / z_mu with z_mu = prod over part sizes k of k^{m_k} * m_k!
    Int z = 1;
    int run = 0;
    for (size_t i = 0; i < mu.parts.size(); ++i) {
        ++run;
        if (i + 1 == mu.parts.size() || mu.parts[i + 1] != mu.parts[i]) {
            z *= int_pow(Int(mu.parts[i]), run) * factorial(run);
            run = 0;
        }
    }
    Int d_fact = factorial(mu.size());
    Int cls;
    mpz_divexact(cls.get_mpz_t(), d_fact.get_mpz_t(), z.get_mpz_t());
    return cls;
}

Int kronecker_coefficient(const PartitionTriple& lambda) {
    int d = lambda.common_size();
    if (d > 12) throw ScaleExceeded("character sum supports common size <= 12");
    Int sum = 0;
    for (const Partition& mu : partitions_of(d)) {
        Int term = conjugacy_class_size(mu);
        for (int k = 0; k < 3 && term != 0; ++k)
            term *= sym_character(lambda.comp[k], mu);
        sum += term;
    }
    Int d_fact = factorial(d);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), d_fact.get_mpz_t());
    if (r != 0)
        throw std::logic_error("character inner product not integral");
    return q;
}

} // namespace obstr
