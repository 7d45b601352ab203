#pragma once
#include <optional>
#include <string>
#include <vector>

#include "obstr/design.hpp"
#include "obstr/evaluate.hpp"
#include "obstr/hook.hpp"

namespace obstr {

enum class WitnessStrategy { Direct, Symbolic };

// Everything needed to re-check a border rank lower bound: the design,
// its exact chromatic index with coloring and clique, and a nonzero
// evaluation witness against the target tensor.
struct BoundCertificate {
    ObstructionDesign design;
    int chromatic_index = 0;
    std::vector<int> coloring;
    std::vector<int> clique;
    Int implied_bound;

    WitnessStrategy strategy = WitnessStrategy::Direct;
    // direct witness
    std::optional<Rank1Decomposition> target;
    Rat value;
    // symbolic witness (structured matrix multiplication route)
    std::optional<HookCoefficient> hook;
};

// Direct: evaluate the design at the target exactly; the nonzero value
// plus the chromatic index yields the bound. Symbolic: only defined when
// the design is the hook and the target is the matrix multiplication
// tensor; delegates to the coefficient pipeline.
BoundCertificate certify_lower_bound(const ObstructionDesign& h,
                                     const Rank1Decomposition& target,
                                     WitnessStrategy strategy,
                                     const EvalOptions& opts = {});

// certificate for the matrix multiplication tensor at odd m
BoundCertificate matmul_certificate(int m);

// Recompute everything the certificate asserts. Returns true when every
// part checks out; otherwise false with a reason.
bool check_certificate(const BoundCertificate& c, std::string* why,
                       const EvalOptions& opts = {});

} // namespace obstr
