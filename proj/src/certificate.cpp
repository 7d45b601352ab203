#include "obstr/certificate.hpp"

#include <algorithm>

#include "obstr/coloring.hpp"
#include "obstr/errors.hpp"

namespace obstr {

namespace {

bool is_mamu_of(const Rank1Decomposition& t, int* m_out) {
    for (int m = 1; m * m <= t.dims[0]; ++m)
        if (m * m == t.dims[0]) {
            Rank1Decomposition ref = mamu_tensor(m);
            if (ref.dims == t.dims && assemble(ref).entries == assemble(t).entries) {
                *m_out = m;
                return true;
            }
        }
    return false;
}

} // namespace

BoundCertificate certify_lower_bound(const ObstructionDesign& h,
                                     const Rank1Decomposition& target,
                                     WitnessStrategy strategy,
                                     const EvalOptions& opts) {
    BoundCertificate cert{h, 0, {}, {}, Int(0)};
    ColoringResult chi = chromatic_index_exact(h, opts.node_budget);
    cert.chromatic_index = chi.colors;
    cert.coloring = chi.coloring;
    cert.clique = chi.clique;
    cert.implied_bound = chi.colors;

    if (strategy == WitnessStrategy::Direct) {
        cert.strategy = WitnessStrategy::Direct;
        cert.target = target;
        cert.value = eval_fH(h, target, opts).value;
        if (cert.value == 0)
            throw WitnessVanished("design evaluates to zero at the target");
        return cert;
    }

    int m = 0;
    if (!is_mamu_of(target, &m))
        throw std::invalid_argument(
            "symbolic witnesses require the matrix multiplication tensor");
    if (!equivalent(h, hook_design((m * m - 1) / 2)))
        throw std::invalid_argument(
            "symbolic witnesses require the matching hook design");
    cert.strategy = WitnessStrategy::Symbolic;
    cert.hook = hook_coefficient(m);
    cert.target = target;
    return cert;
}

BoundCertificate matmul_certificate(int m) {
    MatmulBound b = matmul_bound(m);
    ObstructionDesign h = hook_design(b.witness.kappa);
    ColoringResult chi = chromatic_index_exact(h);
    BoundCertificate cert{h, chi.colors, chi.coloring, chi.clique, b.bound};
    cert.strategy = WitnessStrategy::Symbolic;
    cert.hook = b.witness;
    cert.target = mamu_tensor(m);
    return cert;
}

bool check_certificate(const BoundCertificate& c, std::string* why,
                       const EvalOptions& opts) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (!coloring_is_proper(c.design, c.coloring))
        return fail("stored coloring is not proper");
    int used = c.coloring.empty() ? 0 : *std::max_element(c.coloring.begin(), c.coloring.end());
    if (used != c.chromatic_index)
        return fail("stored coloring does not use the claimed color count");
    // clique members must conflict pairwise, proving the coloring optimal
    auto adj = conflict_adjacency(c.design);
    for (size_t i = 0; i < c.clique.size(); ++i)
        for (size_t j = i + 1; j < c.clique.size(); ++j) {
            int p = c.clique[i], q = c.clique[j];
            if (p < 0 || p >= c.design.point_count() || q < 0 || q >= c.design.point_count())
                return fail("clique index out of range");
            if (std::find(adj[p].begin(), adj[p].end(), q) == adj[p].end())
                return fail("claimed clique is not pairwise conflicting");
        }
    if (static_cast<int>(c.clique.size()) != c.chromatic_index) {
        // clique alone does not witness optimality; redo the search
        ColoringResult chi = chromatic_index_exact(c.design, opts.node_budget);
        if (chi.colors != c.chromatic_index)
            return fail("chromatic index does not recompute to the stored value");
    }
    if (c.implied_bound != c.chromatic_index)
        return fail("implied bound must equal the chromatic index");

    if (c.strategy == WitnessStrategy::Direct) {
        if (!c.target) return fail("direct certificate lacks a target");
        if (c.value == 0) return fail("stored witness value is zero");
        Rat v = eval_fH(c.design, *c.target, opts).value;
        if (v != c.value) return fail("witness value does not recompute");
        return true;
    }

    if (!c.hook) return fail("symbolic certificate lacks coefficient data");
    int m = c.hook->m;
    if (!c.target) return fail("symbolic certificate lacks a target");
    int m_found = 0;
    if (!is_mamu_of(*c.target, &m_found) || m_found != m)
        return fail("symbolic target is not the matrix multiplication tensor");
    if (!equivalent(c.design, hook_design((m * m - 1) / 2)))
        return fail("symbolic design is not the hook");
    HookCoefficient fresh = hook_coefficient(m);
    if (fresh.total != c.hook->total || fresh.per_set != c.hook->per_set ||
        fresh.monomial != c.hook->monomial)
        return fail("coefficient pipeline does not recompute the stored witness");
    if (fresh.total == 0) return fail("stored witness total is zero");
    return true;
}

} // namespace obstr
