// Dedicated acceptance gate: each numbered criterion prints a single
// PASS/FAIL line; the exit code is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "obstr/certificate.hpp"
#include "obstr/coloring.hpp"
#include "obstr/errors.hpp"
#include "obstr/evaluate.hpp"
#include "obstr/hook.hpp"
#include "obstr/io.hpp"
#include "obstr/kronecker.hpp"
#include "obstr/latin.hpp"
#include "obstr/rng.hpp"
#include "obstr/tensor.hpp"

using namespace obstr;

namespace {

int failures = 0;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

void criterion(int num, const std::string& name, double limit_seconds,
               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    std::string verdict = "PASS";
    try {
        detail = body();
    } catch (const std::exception& e) {
        verdict = "FAIL";
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (verdict == "PASS" && limit_seconds > 0 && secs > limit_seconds) {
        verdict = "FAIL";
        detail += " [exceeded time limit]";
    }
    if (verdict == "FAIL") ++failures;
    std::printf("%s  criterion %2d  %-38s  %7.1fs  %s\n", verdict.c_str(), num, name.c_str(),
                secs, detail.c_str());
    std::fflush(stdout);
}

// ---- corpus helpers -------------------------------------------------------

struct StopEnumeration {};

std::optional<ObstructionDesign> first_design(const PartitionTriple& t) {
    std::optional<ObstructionDesign> out;
    try {
        for_each_design(t, [&](const ObstructionDesign& h) {
            out = h;
            throw StopEnumeration{};
        });
    } catch (const StopEnumeration&) {
    }
    return out;
}

std::vector<PartitionTriple> types_of_size(int d, int max_len) {
    std::vector<PartitionTriple> out;
    auto parts = partitions_of(d, max_len);
    for (const Partition& a : parts)
        for (const Partition& b : parts)
            for (const Partition& c : parts) out.push_back(PartitionTriple{{a, b, c}});
    return out;
}

std::vector<ObstructionDesign> identity_corpus() {
    std::vector<ObstructionDesign> corpus;
    for (int d = 1; d <= 4; ++d)
        for (const PartitionTriple& t : types_of_size(d, 3)) {
            Classification c = classify_designs(t);
            for (const auto& cl : c.classes) corpus.push_back(cl.representative);
        }
    for (int d = 5; d <= 7; ++d)
        for (const PartitionTriple& t : types_of_size(d, 3))
            if (auto h = first_design(t)) corpus.push_back(*h);
    corpus.push_back(hook_design(1));
    corpus.push_back(hook_design(2));
    corpus.push_back(latin_design(2));
    std::vector<std::array<int, 3>> cube;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) cube.push_back({i, j, k});
    corpus.push_back(ObstructionDesign({2, 2, 2}, cube));
    return corpus;
}

std::array<int, 3> ambient_dims(const ObstructionDesign& h) {
    std::array<int, 3> dims;
    for (int k = 0; k < 3; ++k) {
        size_t mx = 1;
        for (const auto& s : h.slices(k)) mx = std::max(mx, s.size());
        dims[k] = static_cast<int>(mx);
    }
    return dims;
}

std::array<RatVec, 3> random_alpha(Rng& rng, const std::array<int, 3>& dims) {
    std::array<RatVec, 3> alpha;
    for (int k = 0; k < 3; ++k) {
        alpha[k].resize(dims[k]);
        for (auto& a : alpha[k]) {
            Rat v(rng.range(1, 3), rng.range(1, 2));
            v.canonicalize();
            a = rng.range(0, 1) ? v : -v;
        }
    }
    return alpha;
}

GroupElementTriple random_lower_unit(Rng& rng, const std::array<int, 3>& dims) {
    GroupElementTriple l = identity_group_element(dims);
    for (int k = 0; k < 3; ++k)
        for (int i = 1; i < dims[k]; ++i)
            for (int j = 0; j < i; ++j) {
                Rat v(rng.range(-3, 3), rng.range(1, 2));
                v.canonicalize();
                l.g[k][i][j] = v;
            }
    return l;
}

// all set partitions of {0..d-1}, blocks ordered by least element
void set_partitions(int d, std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<std::vector<int>> acc;
    auto rec = [&](auto&& self, int e) -> void {
        if (e == d) {
            out.push_back(acc);
            return;
        }
        // index, not iterate: deeper calls grow and shrink the block list
        size_t existing = acc.size();
        for (size_t b = 0; b < existing; ++b) {
            acc[b].push_back(e);
            self(self, e + 1);
            acc[b].pop_back();
        }
        acc.push_back({e});
        self(self, e + 1);
        acc.pop_back();
    };
    rec(rec, 0);
}

bool violates_intersection(const SetPartitionTriple& s) {
    for (int x = 0; x < s.d; ++x)
        for (int y = x + 1; y < s.d; ++y) {
            bool together = true;
            for (int k = 0; k < 3 && together; ++k) {
                bool shared = false;
                for (const auto& b : s.blocks[k]) {
                    bool hx = false, hy = false;
                    for (int e : b) {
                        hx |= (e == x);
                        hy |= (e == y);
                    }
                    if (hx && hy) shared = true;
                }
                together = shared;
            }
            if (together) return true;
        }
    return false;
}

} // namespace

int main() {
    criterion(1, "matrix multiplication bound m=3", 60, [] {
        MatmulBound b = matmul_bound(3);
        expect(b.bound == 13, "implied bound is not 13");
        expect(b.chromatic_index == 13, "chromatic index is not 13");
        expect(b.witness.per_set.size() == 2, "expected 2 valid-set contributions");
        expect(b.witness.per_set[0] == b.witness.per_set[1], "contributions differ");
        expect(b.witness.total != 0, "witness coefficient vanished");
        BoundCertificate cert = matmul_certificate(3);
        std::string why;
        expect(check_certificate(cert, &why), "certificate rejected: " + why);
        expect(cert.chromatic_index == 13, "certificate chromatic index is not 13");
        return "bound 13, contributions " + cert.hook->per_set[0].get_str() + "," +
               cert.hook->per_set[1].get_str() + ", coefficient " + cert.hook->total.get_str();
    });

    criterion(2, "matrix multiplication bound m=5", 900, [] {
        MatmulBound b = matmul_bound(5);
        expect(b.bound == 37, "implied bound is not 37");
        expect(b.chromatic_index == 37, "chromatic index is not 37");
        expect(b.witness.per_set.size() == 4, "expected 4 valid-set contributions");
        for (const Int& c : b.witness.per_set)
            expect(c == b.witness.per_set[0], "contributions differ");
        expect(b.witness.total != 0, "witness coefficient vanished");
        BoundCertificate cert = matmul_certificate(5);
        std::string why;
        expect(check_certificate(cert, &why), "certificate rejected: " + why);
        return "bound 37, coefficient " + b.witness.total.get_str();
    });

    criterion(3, "vanishing below the chromatic index", 300, [] {
        ObstructionDesign h = hook_design(2);
        ColoringResult c = chromatic_index_exact(h);
        expect(c.colors == 7, "hook chromatic index is not 7");
        Rng rng(97003);
        for (int t = 0; t < 50; ++t) {
            Rank1Decomposition w = random_low_rank({5, 5, 5}, 6, -5, 5, rng.next_u64());
            EvalResult r = eval_fH(h, w);
            expect(r.value == 0, "rank-6 tensor not annihilated");
        }
        return std::string("50 rank-6 tensors annihilated, chromatic index 7");
    });

    criterion(4, "highest weight identities on the corpus", 0, [] {
        std::vector<ObstructionDesign> corpus = identity_corpus();
        Rng master(97004);
        for (size_t i = 0; i < corpus.size(); ++i) {
            const ObstructionDesign& h = corpus[i];
            std::array<int, 3> dims = ambient_dims(h);
            int chi = chromatic_index_exact(h).colors;
            Rng rng = master.fork(i);
            for (int t = 0; t < 100; ++t) {
                int r = t < 98 ? 2 : chi;
                Rank1Decomposition w = random_low_rank(dims, r, -3, 3, rng.next_u64());
                IdentityCheck ws = check_weight_scaling(h, w, random_alpha(rng, dims));
                expect(ws.ok, "weight scaling failed on design " + std::to_string(i));
                IdentityCheck ui = check_unipotent_invariance(h, w, random_lower_unit(rng, dims));
                expect(ui.ok, "triangular invariance failed on design " + std::to_string(i));
            }
        }
        return std::to_string(corpus.size()) + " designs x 100 scaling + 100 triangular pairs";
    });

    criterion(5, "zero pattern on violating partitions", 0, [] {
        long violating = 0, checked = 0;
        for (int d = 2; d <= 3; ++d) {
            std::vector<std::vector<std::vector<int>>> parts;
            set_partitions(d, parts);
            for (const auto& p1 : parts)
                for (const auto& p2 : parts)
                    for (const auto& p3 : parts) {
                        SetPartitionTriple s;
                        s.d = d;
                        s.blocks = {p1, p2, p3};
                        bool bad = violates_intersection(s);
                        // cross-check the library's reconstruction guard
                        bool threw = false;
                        try {
                            from_set_partitions(s);
                        } catch (const IntersectionViolation&) {
                            threw = true;
                        }
                        expect(threw == bad, "violation detection disagrees");
                        if (!bad) continue;
                        ++violating;
                        for (int n = 1; n <= 2; ++n) {
                            TensorPowerElement t;
                            t.d = d;
                            t.dims = {n, n, n};
                            int cells = n * n * n;
                            std::vector<int> digits(d, 0);
                            while (true) {
                                std::vector<std::array<int, 3>> tuple(d);
                                for (int p = 0; p < d; ++p) {
                                    int c = digits[p];
                                    tuple[p] = {c / (n * n) + 1, (c / n) % n + 1, c % n + 1};
                                }
                                t.entries.clear();
                                t.entries[tuple] = 1;
                                expect(eval_fH_general_argument(s, t) == 0,
                                       "violating partition failed to annihilate a basis tensor");
                                ++checked;
                                int p = d - 1;
                                while (p >= 0 && digits[p] == cells - 1) digits[p--] = 0;
                                if (p < 0) break;
                                ++digits[p];
                            }
                        }
                    }
        }
        std::ostringstream os;
        os << violating << " violating triples, " << checked << " basis evaluations, all zero";
        return os.str();
    });

    criterion(6, "multiplicity cross-validation d <= 6", 1800, [] {
        int types = 0, nonzero = 0;
        for (int d = 1; d <= 6; ++d)
            for (const PartitionTriple& t : types_of_size(d, 3)) {
                Int k = kronecker_coefficient(t);
                Int n_classes = count_classes(t);
                expect(k <= n_classes,
                       "multiplicity exceeds class count for " + t.str());
                int n = std::max(2, t.max_length());
                int samples = static_cast<int>(n_classes.get_si()) + 4;
                SpanRankResult r = span_rank(t, n, samples, 97006);
                expect(Int(r.rank) == k, "span rank " + std::to_string(r.rank) +
                                             " differs from multiplicity " + k.get_str() +
                                             " for " + t.str());
                ++types;
                if (k > 0) ++nonzero;
            }
        std::ostringstream os;
        os << types << " types validated, " << nonzero << " with positive multiplicity";
        return os.str();
    });

    criterion(7, "cube design multiplicity and covariance", 0, [] {
        PartitionTriple t = triple_from_str("2,2,2,2|2,2,2,2|2,2,2,2");
        expect(count_classes(t) == 1, "cube class count is not 1");
        expect(kronecker_coefficient(t) == 1, "cube multiplicity is not 1");
        std::vector<std::array<int, 3>> pts;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k) pts.push_back({i, j, k});
        ObstructionDesign h({2, 2, 2}, pts);
        EvalOptions opts{kDefaultNodeBudget, 4};
        Rng rng(97007);
        std::optional<Rank1Decomposition> witness;
        Rat value;
        int tried = 0;
        for (int s = 0; s < 1000 && !witness; ++s) {
            ++tried;
            Rank1Decomposition w = random_low_rank({4, 4, 4}, 5, -2, 2, rng.next_u64());
            Rat v = eval_fH(h, w, opts).value;
            if (v != 0) {
                witness = w;
                value = v;
            }
        }
        expect(witness.has_value(), "no nonzero integer tensor found in 1000 samples");
        Rng grng(97107);
        for (int trial = 0; trial < 20; ++trial) {
            GroupElementTriple g;
            Rat det_product = 1;
            for (int k = 0; k < 3; ++k) {
                while (true) {
                    RatMatrix m(4, RatVec(4));
                    for (auto& row : m)
                        for (auto& x : row) x = Rat(grng.range(-2, 2));
                    Rat dm = rat_det(m);
                    if (dm != 0) {
                        g.g[k] = m;
                        det_product *= dm;
                        break;
                    }
                }
            }
            Rat lhs = eval_fH(h, act(g, *witness), opts).value;
            expect(lhs == det_product * det_product * value,
                   "determinant covariance failed");
        }
        std::ostringstream os;
        os << "class count 1, multiplicity 1, witness after " << tried
           << " samples, 20 covariance checks";
        return os.str();
    });

    criterion(8, "signed Latin square counts", 120, [] {
        for (int n : {2, 3, 4, 5}) {
            Int by_eval = alon_tarsi_difference(n, AlonTarsiMethod::Eval);
            Int by_enum = alon_tarsi_difference(n, AlonTarsiMethod::Enumerate);
            expect(by_eval == by_enum,
                   "routes disagree at order " + std::to_string(n));
        }
        expect(alon_tarsi_difference(3, AlonTarsiMethod::Both) == 0, "order 3 not zero");
        expect(alon_tarsi_difference(5, AlonTarsiMethod::Both) == 0, "order 5 not zero");
        Int two = alon_tarsi_difference(2, AlonTarsiMethod::Both);
        expect(two == 2, "order 2 value is not 2");
        Int four = alon_tarsi_difference(4, AlonTarsiMethod::Both);
        expect(four != 0, "order 4 value vanished");
        expect(four == 576, "order 4 value is not 576");
        return "orders 3,5 zero; order 2 = 2; order 4 = " + four.get_str() +
               " on both routes";
    });

    criterion(9, "chromatic bounds on random designs", 0, [] {
        Rng rng(97009);
        for (int t = 0; t < 200; ++t) {
            ObstructionDesign h = random_design(10, 4, rng.next_u64());
            int n = h.point_count();
            ColoringResult g = chromatic_index_greedy(h);
            ColoringResult e = chromatic_index_exact(h);
            expect(coloring_is_proper(h, g.coloring), "greedy coloring improper");
            expect(coloring_is_proper(h, e.coloring), "exact coloring improper");
            expect(g.colors <= std::max(1, 3 * n - 2), "greedy exceeded 3n-2");
            expect(e.colors <= g.colors, "exact exceeded greedy");
            expect(static_cast<int>(e.clique.size()) <= e.colors, "clique above exact");
        }
        for (int kappa = 1; kappa <= 6; ++kappa)
            expect(chromatic_index_exact(hook_design(kappa)).colors == 3 * kappa + 1,
                   "hook chromatic index wrong at kappa " + std::to_string(kappa));
        return std::string("200 random designs bounded, hooks exact through kappa 6");
    });

    criterion(10, "determinism across reruns and threads", 0, [] {
        // evaluation artifacts across thread counts
        ObstructionDesign hook2 = hook_design(2);
        Rank1Decomposition w3 = random_low_rank({5, 5, 5}, 7, -3, 3, 971001);
        std::string e1 = rat_str(eval_fH(hook2, w3, EvalOptions{kDefaultNodeBudget, 1}).value);
        std::string e4 = rat_str(eval_fH(hook2, w3, EvalOptions{kDefaultNodeBudget, 4}).value);
        std::string e4b = rat_str(eval_fH(hook2, w3, EvalOptions{kDefaultNodeBudget, 4}).value);
        expect(e1 == e4 && e4 == e4b, "evaluation differs across thread counts");

        // chromatic artifacts rerun with the identical seed
        {
            Rng ra(97009), rb(97009);
            for (int t = 0; t < 40; ++t) {
                ObstructionDesign ha = random_design(10, 4, ra.next_u64());
                ObstructionDesign hb = random_design(10, 4, rb.next_u64());
                expect(ha == hb, "seeded design stream not reproducible");
                ColoringResult ga = chromatic_index_greedy(ha);
                ColoringResult gb = chromatic_index_greedy(hb);
                ColoringResult ea = chromatic_index_exact(ha);
                ColoringResult eb = chromatic_index_exact(hb);
                expect(ga.colors == gb.colors && ga.coloring == gb.coloring,
                       "greedy coloring artifact not reproducible");
                expect(ea.colors == eb.colors && ea.coloring == eb.coloring &&
                           ea.clique == eb.clique,
                       "exact coloring artifact not reproducible");
            }
        }

        // seeded tensor artifact
        std::string t1 = tensor_to_json(random_low_rank({3, 3, 3}, 4, -5, 5, 971002)).dump(2);
        std::string t2 = tensor_to_json(random_low_rank({3, 3, 3}, 4, -5, 5, 971002)).dump(2);
        expect(t1 == t2, "seeded tensor artifact not reproducible");

        // span rank reruns with identical seed
        SpanRankResult s1 = span_rank(triple_from_str("2,1|2,1|2,1"), 3, 8, 971003);
        SpanRankResult s2 = span_rank(triple_from_str("2,1|2,1|2,1"), 3, 8, 971003,
                                      EvalOptions{kDefaultNodeBudget, 4});
        expect(s1.rank == s2.rank, "span rank differs across thread counts");

        // identity checks across thread counts
        Rng rng(971004);
        ObstructionDesign latin2 = latin_design(2);
        std::array<int, 3> dims = ambient_dims(latin2);
        for (int t = 0; t < 10; ++t) {
            Rank1Decomposition w = random_low_rank(dims, 3, -3, 3, rng.next_u64());
            auto alpha = random_alpha(rng, dims);
            IdentityCheck a = check_weight_scaling(latin2, w, alpha,
                                                   EvalOptions{kDefaultNodeBudget, 1});
            IdentityCheck b = check_weight_scaling(latin2, w, alpha,
                                                   EvalOptions{kDefaultNodeBudget, 4});
            expect(rat_str(a.lhs) == rat_str(b.lhs) && rat_str(a.rhs) == rat_str(b.rhs),
                   "identity artifacts differ across thread counts");
        }

        // signed Latin counts rerun
        expect(alon_tarsi_difference(4, AlonTarsiMethod::Both) ==
                   alon_tarsi_difference(4, AlonTarsiMethod::Both),
               "signed count not reproducible");
        return std::string("evaluation, coloring, tensor, rank, and identity artifacts "
                           "byte-identical");
    });

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                failures);
    return failures == 0 ? 0 : 1;
}
