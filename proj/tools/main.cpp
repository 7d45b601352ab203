#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "obstr/coloring.hpp"
#include "obstr/errors.hpp"
#include "obstr/evaluate.hpp"
#include "obstr/hook.hpp"
#include "obstr/io.hpp"
#include "obstr/kronecker.hpp"
#include "obstr/latin.hpp"
#include "obstr/rng.hpp"

namespace {

using namespace obstr;

struct RunConfig {
    std::uint64_t budget = kDefaultNodeBudget;
    std::optional<std::uint64_t> seed;
    int threads = 1;

    EvalOptions eval() const { return EvalOptions{budget, threads}; }

    std::uint64_t need_seed() const {
        if (!seed) throw CLI::ValidationError("--seed", "this subcommand is randomized; pass --seed");
        return *seed;
    }
};

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(out_path, j);
}

Rank1Decomposition load_decomposition(const std::string& path) {
    TensorFile f = tensor_from_json(read_json_file(path));
    if (!f.decomposition)
        throw std::invalid_argument(path + " has no rank-one decomposition");
    return *f.decomposition;
}

int run(int argc, char** argv) {
    CLI::App app{"exact evaluation of slice-design polynomials and border rank certificates"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--budget", cfg.budget, "search node budget");
    std::uint64_t seed_val = 0;
    auto* seed_opt = app.add_option("--seed", seed_val, "seed for randomized subcommands");
    app.add_option("--threads", cfg.threads, "worker threads for evaluation")
        ->check(CLI::Range(1, 256));

    // mamu
    auto* mamu = app.add_subcommand("mamu", "matrix multiplication tensor");
    int mamu_m = 2;
    std::string mamu_out;
    mamu->add_option("--m", mamu_m, "matrix side")->required()->check(CLI::Range(1, 16));
    mamu->add_option("--out", mamu_out, "output file (default stdout)");

    // unit
    auto* unit = app.add_subcommand("unit", "diagonal unit tensor");
    int unit_n = 2;
    std::string unit_out;
    unit->add_option("--n", unit_n, "size")->required()->check(CLI::Range(1, 64));
    unit->add_option("--out", unit_out, "output file (default stdout)");

    // design
    auto* design = app.add_subcommand("design", "design inspection and enumeration");
    design->require_subcommand(1);
    auto* dval = design->add_subcommand("validate", "check a design file");
    std::string dval_file;
    dval->add_option("file", dval_file)->required();
    auto* dtype = design->add_subcommand("type", "print the partition triple of a design");
    std::string dtype_file;
    dtype->add_option("file", dtype_file)->required();
    auto* denum = design->add_subcommand("enumerate", "designs of a given type");
    std::string denum_type, denum_out;
    bool denum_canonical = false;
    denum->add_option("--type", denum_type, "partition triple a|b|c")->required();
    denum->add_flag("--canonical", denum_canonical, "one representative per class");
    denum->add_option("--out", denum_out, "output file (default stdout)");
    auto* dcount = design->add_subcommand("count", "class count of a given type");
    std::string dcount_type;
    dcount->add_option("--type", dcount_type, "partition triple a|b|c")->required();

    // chromatic
    auto* chrom = app.add_subcommand("chromatic", "chromatic index of the conflict graph");
    std::string chrom_design;
    bool chrom_greedy = false;
    chrom->add_option("--design", chrom_design)->required();
    chrom->add_flag("--greedy", chrom_greedy, "greedy upper bound only");

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate a design at a tensor");
    std::string ev_design, ev_tensor;
    bool ev_symbolic = false;
    ev->add_option("--design", ev_design)->required();
    ev->add_option("--tensor", ev_tensor)->required();
    ev->add_flag("--symbolic", ev_symbolic,
                 "substitute structured columns (matrix multiplication targets only)");

    // hwv check
    auto* hwv = app.add_subcommand("hwv", "highest weight property checks");
    hwv->require_subcommand(1);
    auto* hcheck = hwv->add_subcommand("check", "scaling and triangular invariance trials");
    std::string hcheck_design;
    int hcheck_trials = 20;
    hcheck->add_option("--design", hcheck_design)->required();
    hcheck->add_option("--trials", hcheck_trials)->check(CLI::Range(1, 100000));

    // kron
    auto* kron = app.add_subcommand("kron", "symmetry multiplicity of a partition triple");
    std::string kron_lambda, kron_via = "characters";
    kron->add_option("--lambda", kron_lambda, "partition triple a|b|c")->required();
    kron->add_option("--via", kron_via)->check(CLI::IsMember({"characters", "span"}));

    // bound
    auto* bound = app.add_subcommand("bound", "border rank lower bound certificates");
    bound->require_subcommand(1);
    auto* bcert = bound->add_subcommand("certify", "build a certificate");
    std::string bcert_design, bcert_tensor, bcert_out, bcert_strategy = "direct";
    bcert->add_option("--design", bcert_design)->required();
    bcert->add_option("--tensor", bcert_tensor)->required();
    bcert->add_option("--strategy", bcert_strategy)->check(CLI::IsMember({"direct", "symbolic"}));
    bcert->add_option("--out", bcert_out, "certificate file (default stdout)");
    auto* bcheck = bound->add_subcommand("check", "re-verify a certificate");
    std::string bcheck_cert;
    bcheck->add_option("--cert", bcheck_cert)->required();
    auto* bmm = bound->add_subcommand("matmul", "certificate for the matrix multiplication tensor");
    int bmm_m = 3;
    std::string bmm_out;
    bmm->add_option("--m", bmm_m)->required()->check(CLI::Range(3, 7));
    bmm->add_option("--out", bmm_out, "certificate file (default stdout)");

    // alontarsi
    auto* at = app.add_subcommand("alontarsi", "signed Latin square count");
    int at_n = 2;
    std::string at_method = "both";
    at->add_option("--n", at_n)->required()->check(CLI::Range(1, 6));
    at->add_option("--method", at_method)->check(CLI::IsMember({"eval", "enumerate", "both"}));

    app.parse(argc, argv);
    if (seed_opt->count()) cfg.seed = seed_val;

    if (*mamu) {
        emit(tensor_to_json(mamu_tensor(mamu_m)), mamu_out);
        return 0;
    }
    if (*unit) {
        emit(tensor_to_json(unit_tensor(unit_n)), unit_out);
        return 0;
    }
    if (*dval) {
        try {
            ObstructionDesign h = design_from_json(read_json_file(dval_file));
            std::cout << "valid design: " << h.point_count() << " points, type "
                      << design_type(h).str() << "\n";
            return 0;
        } catch (const std::invalid_argument& e) {
            std::cout << "invalid design: " << e.what() << "\n";
            return 1;
        } catch (const IntersectionViolation& e) {
            std::cout << "invalid design: " << e.what() << "\n";
            return 1;
        }
    }
    if (*dtype) {
        std::cout << design_type(design_from_json(read_json_file(dtype_file))).str() << "\n";
        return 0;
    }
    if (*denum) {
        PartitionTriple t = triple_from_str(denum_type);
        auto designs = enumerate_designs(t, denum_canonical, cfg.budget);
        Json arr = Json::array();
        for (const auto& h : designs) arr.push_back(design_to_json(h));
        emit(arr, denum_out);
        return 0;
    }
    if (*dcount) {
        PartitionTriple t = triple_from_str(dcount_type);
        Classification c = classify_designs(t, cfg.budget);
        std::cout << "classes " << c.classes.size() << "\n";
        std::cout << "designs " << c.raw_count.get_str() << "\n";
        return 0;
    }
    if (*chrom) {
        ObstructionDesign h = design_from_json(read_json_file(chrom_design));
        ColoringResult r =
            chrom_greedy ? chromatic_index_greedy(h) : chromatic_index_exact(h, cfg.budget);
        std::cout << (chrom_greedy ? "greedy colors " : "chromatic index ") << r.colors << "\n";
        return 0;
    }
    if (*ev) {
        ObstructionDesign h = design_from_json(read_json_file(ev_design));
        if (ev_symbolic) {
            // structured substitution over the matrix multiplication target
            TensorFile f = tensor_from_json(read_json_file(ev_tensor));
            if (!f.decomposition) throw std::invalid_argument("tensor file lacks decomposition");
            int m = 0;
            for (int c = 1; c * c <= f.dims()[0]; ++c)
                if (c * c == f.dims()[0] && assemble(mamu_tensor(c)).entries ==
                                                assemble(*f.decomposition).entries)
                    m = c;
            if (m == 0 || m % 2 == 0)
                throw std::invalid_argument(
                    "--symbolic needs an odd matrix multiplication tensor target");
            MatrixTriple a = matrix_triple(m);
            // sum over labelings symbolically; budget-guarded
            std::uint64_t nodes = 0;
            MultiPoly total(a.arity);
            std::vector<int> label(h.point_count(), 0);
            auto labels_of = [&](int term) {
                int mm = m * m;
                int i = term / mm, rest = term % mm;
                return std::array<int, 3>{i, rest / m, rest % m};
            };
            (void)labels_of;
            // direct recursion over m^3 labels per point
            int d = h.point_count();
            std::vector<std::array<int, 3>> lab(d);
            auto rec = [&](auto&& self, int p) -> void {
                if (p == d) {
                    std::array<std::vector<std::vector<MultiPoly>>, 3> columns;
                    for (int k = 0; k < 3; ++k) {
                        columns[k].resize(d);
                        for (int q = 0; q < d; ++q) {
                            auto [i, j, l] = lab[q];
                            int col = k == 0 ? (i - 1) * m + j
                                      : k == 1 ? (j - 1) * m + l
                                               : (l - 1) * m + i;
                            std::vector<MultiPoly> column(m * m, MultiPoly(a.arity));
                            for (int row = 0; row < m * m; ++row)
                                column[row] = a.a[k].at(row, col - 1);
                            columns[k][q] = std::move(column);
                        }
                    }
                    total += eval_design_labeling_poly(h, columns);
                    return;
                }
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= m; ++j)
                        for (int l = 1; l <= m; ++l) {
                            if (++nodes > cfg.budget)
                                throw LimitExceeded("symbolic labeling sum budget exhausted");
                            lab[p] = {i, j, l};
                            self(self, p + 1);
                        }
            };
            rec(rec, 0);
            std::cout << total.str() << "\n";
            return 0;
        }
        Rank1Decomposition t = load_decomposition(ev_tensor);
        EvalResult r = eval_fH(h, t, cfg.eval());
        std::cout << "value " << rat_str(r.value) << "\n";
        std::cout << "labelings " << r.stats.completed << " pruned " << r.stats.pruned << "\n";
        return 0;
    }
    if (*hcheck) {
        ObstructionDesign h = design_from_json(read_json_file(hcheck_design));
        Rng rng(cfg.need_seed());
        int chi = chromatic_index_exact(h, cfg.budget).colors;
        std::array<int, 3> dims;
        for (int k = 0; k < 3; ++k) {
            size_t mx = 1;
            for (const auto& s : h.slices(k)) mx = std::max(mx, s.size());
            dims[k] = static_cast<int>(mx);
        }
        int r = std::min(chi + 1, 8);
        int bad = 0;
        for (int trial = 0; trial < hcheck_trials; ++trial) {
            Rank1Decomposition w = random_low_rank(dims, r, -3, 3, rng.next_u64());
            std::array<RatVec, 3> alpha;
            for (int k = 0; k < 3; ++k) {
                alpha[k].resize(dims[k]);
                for (int i = 0; i < dims[k]; ++i) {
                    long v = rng.range(1, 3);
                    alpha[k][i] = rng.range(0, 1) ? Rat(v) : Rat(-v);
                }
            }
            GroupElementTriple l = identity_group_element(dims);
            for (int k = 0; k < 3; ++k)
                for (int i = 1; i < dims[k]; ++i)
                    for (int j = 0; j < i; ++j) l.g[k][i][j] = rng.range(-3, 3);
            if (!check_weight_scaling(h, w, alpha, cfg.eval()).ok) ++bad;
            if (!check_unipotent_invariance(h, w, l, cfg.eval()).ok) ++bad;
        }
        std::cout << (bad ? "FAIL" : "ok") << " trials " << hcheck_trials
                  << " violations " << bad << "\n";
        return bad ? 1 : 0;
    }
    if (*kron) {
        PartitionTriple lambda = triple_from_str(kron_lambda);
        if (kron_via == "characters") {
            std::cout << kronecker_coefficient(lambda).get_str() << "\n";
        } else {
            int n = std::max(lambda.max_length(), 2);
            Classification c = classify_designs(lambda, cfg.budget);
            int samples = static_cast<int>(c.classes.size()) + 4;
            SpanRankResult r = span_rank(lambda, n, samples, cfg.need_seed(), cfg.eval());
            std::cout << r.rank << "\n";
        }
        return 0;
    }
    if (*bcert) {
        ObstructionDesign h = design_from_json(read_json_file(bcert_design));
        Rank1Decomposition t = load_decomposition(bcert_tensor);
        WitnessStrategy s =
            bcert_strategy == "direct" ? WitnessStrategy::Direct : WitnessStrategy::Symbolic;
        BoundCertificate cert = certify_lower_bound(h, t, s, cfg.eval());
        emit(certificate_to_json(cert), bcert_out);
        return 0;
    }
    if (*bcheck) {
        BoundCertificate cert = certificate_from_json(read_json_file(bcheck_cert));
        std::string why;
        if (check_certificate(cert, &why, cfg.eval())) {
            std::cout << "certificate ok: bound " << cert.implied_bound.get_str() << "\n";
            return 0;
        }
        std::cout << "certificate rejected: " << why << "\n";
        return 1;
    }
    if (*bmm) {
        BoundCertificate cert = matmul_certificate(bmm_m);
        emit(certificate_to_json(cert), bmm_out);
        return 0;
    }
    if (*at) {
        AlonTarsiMethod m = at_method == "eval"        ? AlonTarsiMethod::Eval
                            : at_method == "enumerate" ? AlonTarsiMethod::Enumerate
                                                       : AlonTarsiMethod::Both;
        std::cout << alon_tarsi_difference(at_n, m).get_str() << "\n";
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = dummy.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const WitnessVanished& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const CancellationDetected& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
