#include "obstr/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "obstr/errors.hpp"
#include "obstr/kronecker.hpp"
#include "obstr/linalg.hpp"
#include "obstr/rng.hpp"

namespace obstr {

Rat eval_blocks(const std::vector<std::vector<int>>& blocks,
                const std::vector<RatVec>& column_of_element) {
    Rat prod = 1;
    for (const auto& block : blocks) {
        size_t s = block.size();
        RatMatrix m(s, RatVec(s));
        for (size_t c = 0; c < s; ++c) {
            const RatVec& col = column_of_element.at(block[c]);
            if (col.size() < s)
                throw BlockTooLarge("block of size " + std::to_string(s) +
                                    " exceeds ambient dimension " + std::to_string(col.size()));
            for (size_t r = 0; r < s; ++r) m[r][c] = col[r];
        }
        Rat det = rat_det(std::move(m));
        if (det == 0) return Rat(0);
        prod *= det;
    }
    return prod;
}

MultiPoly eval_blocks_poly(const std::vector<std::vector<int>>& blocks,
                           const std::vector<std::vector<MultiPoly>>& column_of_element) {
    int arity = 0;
    for (const auto& col : column_of_element)
        for (const auto& p : col)
            arity = std::max(arity, p.arity());
    MultiPoly prod = MultiPoly::constant(arity, 1);
    for (const auto& block : blocks) {
        size_t s = block.size();
        PolyMatrix m(static_cast<int>(s), static_cast<int>(s), arity);
        for (size_t c = 0; c < s; ++c) {
            const auto& col = column_of_element.at(block[c]);
            if (col.size() < s)
                throw BlockTooLarge("block of size " + std::to_string(s) +
                                    " exceeds ambient dimension " + std::to_string(col.size()));
            for (size_t r = 0; r < s; ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
        }
        MultiPoly det = poly_det(m);
        if (det.is_zero()) return MultiPoly(arity);
        prod *= det;
    }
    return prod;
}

Rat eval_set_partition(const std::vector<std::vector<int>>& blocks,
                       const std::vector<RatVec>& column_of_element) {
    return eval_blocks(blocks, column_of_element);
}

Rat eval_design_labeling(const ObstructionDesign& h, const std::vector<int>& labeling,
                         const Rank1Decomposition& t) {
    if (static_cast<int>(labeling.size()) != h.point_count())
        throw std::invalid_argument("labeling length mismatch");
    Rat prod = 1;
    for (int k = 0; k < 3; ++k) {
        std::vector<RatVec> cols(h.point_count());
        for (int p = 0; p < h.point_count(); ++p) {
            int term = labeling[p];
            if (term < 0 || term >= t.rank_bound())
                throw std::invalid_argument("labeling refers to missing term");
            cols[p] = t.triples[term][k];
        }
        prod *= eval_blocks(h.slices(k), cols);
        if (prod == 0) return prod;
    }
    return prod;
}

MultiPoly eval_design_labeling_poly(
    const ObstructionDesign& h,
    const std::array<std::vector<std::vector<MultiPoly>>, 3>& columns) {
    int arity = 0;
    for (int k = 0; k < 3; ++k)
        for (const auto& col : columns[k])
            for (const auto& p : col) arity = std::max(arity, p.arity());
    MultiPoly prod = MultiPoly::constant(arity, 1);
    for (int k = 0; k < 3; ++k) {
        prod *= eval_blocks_poly(h.slices(k), columns[k]);
        if (prod.is_zero()) return prod;
    }
    return prod;
}

namespace {

// shared precomputation for the labeling sum
struct EvalPlan {
    const ObstructionDesign* h;
    const Rank1Decomposition* t;
    int d, r;
    // earlier_mates[p] = (direction, earlier point) pairs sharing a slice
    std::vector<std::vector<std::pair<int, int>>> earlier_mates;
    // closing[p] = (direction, slice) blocks whose last point is p
    std::vector<std::vector<std::pair<int, int>>> closing;
    // eq[k][a*r+b] = component vectors of terms a, b in direction k equal
    std::array<std::vector<char>, 3> eq;

    void build() {
        d = h->point_count();
        r = t->rank_bound();
        for (int k = 0; k < 3; ++k)
            for (const auto& s : h->slices(k))
                if (s.size() > static_cast<size_t>(t->dims[k]))
                    throw BlockTooLarge("slice of size " + std::to_string(s.size()) +
                                        " exceeds ambient dimension " +
                                        std::to_string(t->dims[k]));
        earlier_mates.assign(d, {});
        closing.assign(d, {});
        for (int k = 0; k < 3; ++k)
            for (size_t s = 0; s < h->slices(k).size(); ++s) {
                const auto& members = h->slices(k)[s];
                for (size_t i = 1; i < members.size(); ++i)
                    for (size_t j = 0; j < i; ++j)
                        earlier_mates[members[i]].push_back({k, members[j]});
                if (!members.empty())
                    closing[members.back()].push_back({k, static_cast<int>(s)});
            }
        for (int k = 0; k < 3; ++k) {
            eq[k].assign(static_cast<size_t>(r) * r, 0);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    eq[k][static_cast<size_t>(a) * r + b] =
                        t->triples[a][k] == t->triples[b][k];
        }
    }
};

// per-thread walker over a region of the labeling tree
struct EvalWalker {
    const EvalPlan* plan;
    std::atomic<std::uint64_t>* nodes;
    std::uint64_t budget;
    std::vector<int> label;
    std::vector<Rat> partial;   // partial[p] = product after assigning point p
    Rat sum = 0;
    std::uint64_t completed = 0, pruned = 0;

    // memoized block determinants, keyed by packed member labels
    bool memo_ok = false;
    std::array<std::vector<std::unordered_map<std::uint64_t, Rat>>, 3> memo;

    void init() {
        label.assign(plan->d, -1);
        partial.assign(plan->d + 1, Rat(1));
        memo_ok = plan->r > 0 && plan->r <= 64;
        if (memo_ok)
            for (int k = 0; k < 3; ++k) {
                memo[k].resize(plan->h->slices(k).size());
                for (const auto& s : plan->h->slices(k))
                    if (s.size() > 10) { memo_ok = false; break; }
            }
    }

    Rat block_det(int k, int s) {
        const auto& members = plan->h->slices(k)[s];
        std::uint64_t key = 0;
        if (memo_ok) {
            for (int p : members) key = key * 64 + static_cast<std::uint64_t>(label[p]);
            auto it = memo[k][s].find(key);
            if (it != memo[k][s].end()) return it->second;
        }
        size_t n = members.size();
        RatMatrix m(n, RatVec(n));
        for (size_t c = 0; c < n; ++c) {
            const RatVec& col = plan->t->triples[label[members[c]]][k];
            for (size_t rr = 0; rr < n; ++rr) m[rr][c] = col[rr];
        }
        Rat det = rat_det(std::move(m));
        if (memo_ok) memo[k][s].emplace(key, det);
        return det;
    }

    void walk(int p) {
        if (p == plan->d) {
            sum += partial[p];
            ++completed;
            return;
        }
        for (int term = 0; term < plan->r; ++term) {
            if (nodes->fetch_add(1, std::memory_order_relaxed) + 1 > budget)
                throw LimitExceeded("labeling sum budget exhausted");
            bool clash = false;
            for (const auto& [k, q] : plan->earlier_mates[p])
                if (plan->eq[k][static_cast<size_t>(label[q]) * plan->r + term]) {
                    clash = true;
                    break;
                }
            if (clash) {
                ++pruned;
                continue;
            }
            label[p] = term;
            Rat acc = partial[p];
            bool dead = false;
            for (const auto& [k, s] : plan->closing[p]) {
                Rat det = block_det(k, s);
                if (det == 0) {
                    dead = true;
                    break;
                }
                acc *= det;
            }
            if (dead) {
                ++pruned;
                label[p] = -1;
                continue;
            }
            partial[p + 1] = std::move(acc);
            walk(p + 1);
            label[p] = -1;
        }
    }

    // continue from a fixed prefix (labels and running product preassigned)
    void walk_from(const std::vector<int>& prefix, const Rat& prefix_product) {
        int q = static_cast<int>(prefix.size());
        for (int i = 0; i < q; ++i) label[i] = prefix[i];
        partial[q] = prefix_product;
        walk(q);
    }
};

} // namespace

EvalResult eval_fH(const ObstructionDesign& h, const Rank1Decomposition& t,
                   const EvalOptions& opts) {
    EvalPlan plan;
    plan.h = &h;
    plan.t = &t;
    plan.build();

    EvalResult out;
    std::atomic<std::uint64_t> nodes{0};

    if (plan.d == 0) {
        // single empty labeling, empty product
        out.value = 1;
        return out;
    }
    if (plan.r == 0) {
        out.value = 0;
        return out;
    }

    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        EvalWalker w;
        w.plan = &plan;
        w.nodes = &nodes;
        w.budget = opts.node_budget;
        w.init();
        w.walk(0);
        out.value = w.sum;
        out.stats = {nodes.load(), w.completed, w.pruned};
        return out;
    }

    // prefix depth: enough prefixes to spread across threads
    int depth = 0;
    long count = 1;
    while (depth < plan.d && count < threads * 8L) {
        count *= plan.r;
        ++depth;
    }

    // enumerate surviving prefixes sequentially with the same rules
    struct Prefix {
        std::vector<int> labels;
        Rat product;
    };
    std::vector<Prefix> prefixes;
    EvalWalker head;
    head.plan = &plan;
    head.nodes = &nodes;
    head.budget = opts.node_budget;
    head.init();
    std::uint64_t head_pruned = 0;
    {
        struct Rec {
            EvalWalker* w;
            const EvalPlan* plan;
            int depth;
            std::vector<Prefix>* out;
            std::uint64_t* pruned;

            void go(int p, const Rat& acc) {
                if (p == depth) {
                    out->push_back({std::vector<int>(w->label.begin(), w->label.begin() + p), acc});
                    return;
                }
                for (int term = 0; term < plan->r; ++term) {
                    if (w->nodes->fetch_add(1, std::memory_order_relaxed) + 1 > w->budget)
                        throw LimitExceeded("labeling sum budget exhausted");
                    bool clash = false;
                    for (const auto& [k, q] : plan->earlier_mates[p])
                        if (plan->eq[k][static_cast<size_t>(w->label[q]) * plan->r + term]) {
                            clash = true;
                            break;
                        }
                    if (clash) {
                        ++*pruned;
                        continue;
                    }
                    w->label[p] = term;
                    Rat next = acc;
                    bool dead = false;
                    for (const auto& [k, s] : plan->closing[p]) {
                        Rat det = w->block_det(k, s);
                        if (det == 0) {
                            dead = true;
                            break;
                        }
                        next *= det;
                    }
                    if (dead) {
                        ++*pruned;
                        w->label[p] = -1;
                        continue;
                    }
                    go(p + 1, next);
                    w->label[p] = -1;
                }
            }
        };
        Rec rec{&head, &plan, depth, &prefixes, &head_pruned};
        rec.go(0, Rat(1));
    }

    std::vector<EvalWalker> workers(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        workers[w].plan = &plan;
        workers[w].nodes = &nodes;
        workers[w].budget = opts.node_budget;
        pool.emplace_back([&, w] {
            try {
                workers[w].init();
                for (size_t i = w; i < prefixes.size(); i += threads)
                    workers[w].walk_from(prefixes[i].labels, prefixes[i].product);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Rat total = 0;
    std::uint64_t completed = 0, pruned = head_pruned;
    for (auto& w : workers) {
        total += w.sum;
        completed += w.completed;
        pruned += w.pruned;
    }
    out.value = total;
    out.stats = {nodes.load(), completed, pruned};
    return out;
}

namespace {

// determinant of unit-vector columns over the first s rows: nonzero only
// when the indices are exactly 1..s, value is the permutation sign
int unit_det(const std::vector<int>& indices) {
    int s = static_cast<int>(indices.size());
    std::vector<int> seen(s, 0);
    for (int v : indices) {
        if (v < 1 || v > s) return 0;
        if (seen[v - 1]++) return 0;
    }
    int sign = 1;
    std::vector<int> perm(indices);
    for (int i = 0; i < s; ++i)
        while (perm[i] != i + 1) {
            std::swap(perm[i], perm[perm[i] - 1]);
            sign = -sign;
        }
    return sign;
}

} // namespace

Rat eval_fH_general_argument(const SetPartitionTriple& s, const TensorPowerElement& t) {
    if (t.d != s.d) throw std::invalid_argument("tensor power order mismatch");
    if (t.d > 4 || t.dims[0] > 3 || t.dims[1] > 3 || t.dims[2] > 3)
        throw ScaleExceeded("dense symmetrized evaluation supports order <= 4, dimension <= 3");
    // A block wider than the ambient dimension makes its functional vanish
    // identically; the unit determinants below return 0 for it on every
    // basis tensor, so no separate case is needed.
    int d = s.d;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    do {
        for (const auto& [basis, coeff] : t.entries) {
            if (static_cast<int>(basis.size()) != d)
                throw std::invalid_argument("basis entry of wrong order");
            Rat term = coeff;
            for (int k = 0; k < 3 && term != 0; ++k)
                for (const auto& block : s.blocks[k]) {
                    std::vector<int> idx;
                    idx.reserve(block.size());
                    // position p holds factor perm^{-1}(p); equivalently
                    // factor f lands at position perm[f]
                    for (int pos : block) {
                        int factor = -1;
                        for (int f = 0; f < d; ++f)
                            if (perm[f] == pos) { factor = f; break; }
                        idx.push_back(basis[factor][k]);
                    }
                    int det = unit_det(idx);
                    if (det == 0) { term = 0; break; }
                    if (det < 0) term = -term;
                }
            total += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / Rat(factorial(static_cast<unsigned long>(d)));
}

IdentityCheck check_weight_scaling(const ObstructionDesign& h, const Rank1Decomposition& w,
                                   const std::array<RatVec, 3>& alpha,
                                   const EvalOptions& opts) {
    for (int k = 0; k < 3; ++k) {
        if (static_cast<int>(alpha[k].size()) != w.dims[k])
            throw std::invalid_argument("alpha dimension mismatch");
        for (const Rat& a : alpha[k])
            if (a == 0) throw std::invalid_argument("alpha entries must be nonzero");
    }
    PartitionTriple type = design_type(h);
    IdentityCheck c;
    c.lhs = eval_fH(h, act(diagonal_group_element(alpha), w), opts).value;
    Rat scale = 1;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < type.comp[k].length(); ++i)
            scale *= rat_pow(alpha[k][i], static_cast<unsigned long>(type.comp[k].parts[i]));
    c.rhs = scale * eval_fH(h, w, opts).value;
    c.ok = c.lhs == c.rhs;
    return c;
}

IdentityCheck check_unipotent_invariance(const ObstructionDesign& h,
                                         const Rank1Decomposition& w,
                                         const GroupElementTriple& l,
                                         const EvalOptions& opts) {
    for (int k = 0; k < 3; ++k) {
        const RatMatrix& m = l.g[k];
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i].size() != m.size())
                throw std::invalid_argument("triangular factor must be square");
            if (m[i][i] != 1)
                throw std::invalid_argument("triangular factor needs unit diagonal");
            for (size_t j = i + 1; j < m[i].size(); ++j)
                if (m[i][j] != 0)
                    throw std::invalid_argument("triangular factor must be lower triangular");
        }
    }
    IdentityCheck c;
    c.lhs = eval_fH(h, act(l, w), opts).value;
    c.rhs = eval_fH(h, w, opts).value;
    c.ok = c.lhs == c.rhs;
    return c;
}

SpanRankResult span_rank(const PartitionTriple& lambda, int n, int samples,
                         std::uint64_t seed, const EvalOptions& opts) {
    if (n < lambda.max_length())
        throw std::invalid_argument("ambient dimension below partition length");
    auto reps = enumerate_designs(lambda, true, opts.node_budget);
    SpanRankResult res;
    res.class_count = static_cast<int>(reps.size());
    res.samples = samples;
    if (reps.empty() || samples == 0) return res;

    // random tensors of generic enough rank: n + 2 rank-one terms covers
    // the whole space densely for the small ambients used here
    std::vector<Rank1Decomposition> ts;
    ts.reserve(samples);
    Rng rng(seed);
    for (int i = 0; i < samples; ++i)
        ts.push_back(random_low_rank({n, n, n}, n + 2, -5, 5, rng.next_u64()));

    RatMatrix m(reps.size(), RatVec(samples));
    for (size_t i = 0; i < reps.size(); ++i)
        for (int j = 0; j < samples; ++j)
            m[i][j] = eval_fH(reps[i], ts[j], opts).value;
    res.rank = rat_rank(std::move(m));
    return res;
}

} // namespace obstr
