#include <doctest.h>

#include <set>

#include "obstr/certificate.hpp"
#include "obstr/coloring.hpp"
#include "obstr/errors.hpp"
#include "obstr/hook.hpp"
#include "obstr/io.hpp"
#include "obstr/latin.hpp"
#include "obstr/rng.hpp"

using namespace obstr;

TEST_CASE("conflict adjacency of the smallest hook is complete") {
    ObstructionDesign h = hook_design(1);
    auto adj = conflict_adjacency(h);
    REQUIRE(adj.size() == 4);
    for (int i = 0; i < 4; ++i) {
        std::vector<int> others;
        for (int j = 0; j < 4; ++j)
            if (j != i) others.push_back(j);
        CHECK(adj[i] == others);
    }
}

TEST_CASE("single point needs one color") {
    ObstructionDesign h({1, 1, 1}, {{1, 1, 1}});
    ColoringResult r = chromatic_index_exact(h);
    CHECK(r.colors == 1);
    CHECK(coloring_is_proper(h, r.coloring));
}

TEST_CASE("hooks have complete conflict graphs") {
    for (int kappa = 1; kappa <= 6; ++kappa) {
        ObstructionDesign h = hook_design(kappa);
        ColoringResult r = chromatic_index_exact(h);
        CHECK(r.colors == 3 * kappa + 1);
        CHECK(static_cast<int>(r.clique.size()) == 3 * kappa + 1);
        CHECK(coloring_is_proper(h, r.coloring));
    }
}

TEST_CASE("full cube needs one color per slice cell") {
    std::vector<std::array<int, 3>> pts;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) pts.push_back({i, j, k});
    ObstructionDesign h({2, 2, 2}, pts);
    CHECK(chromatic_index_exact(h).colors == 4);
}

TEST_CASE("row-column grids color like their side") {
    for (int n = 2; n <= 4; ++n) {
        ColoringResult r = chromatic_index_exact(latin_design(n));
        CHECK(r.colors == n);
        CHECK(coloring_is_proper(latin_design(n), r.coloring));
    }
}

TEST_CASE("odd cycle needs three colors despite clique two") {
    // conflicts form exactly a 5-cycle
    ObstructionDesign h({3, 3, 3},
                        {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 1}});
    auto adj = conflict_adjacency(h);
    std::size_t half_edges = 0;
    for (int i = 0; i < 5; ++i) {
        CHECK(adj[i].size() == 2);
        half_edges += adj[i].size();
    }
    CHECK(half_edges == 10);
    ColoringResult r = chromatic_index_exact(h);
    CHECK(r.colors == 3);
    CHECK(r.clique.size() == 2);
}

TEST_CASE("greedy bounds the exact value on random designs") {
    Rng rng(3001);
    for (int t = 0; t < 60; ++t) {
        ObstructionDesign h = random_design(10, 4, rng.next_u64());
        int n = h.point_count();
        ColoringResult g = chromatic_index_greedy(h);
        ColoringResult e = chromatic_index_exact(h);
        CHECK(coloring_is_proper(h, g.coloring));
        CHECK(coloring_is_proper(h, e.coloring));
        CHECK(g.colors <= std::max(1, 3 * n - 2));
        CHECK(e.colors <= g.colors);
        CHECK(static_cast<int>(e.clique.size()) <= e.colors);
        // improper recolorings are detected
        if (n >= 2 && e.colors >= 2) {
            std::vector<int> bad(e.coloring);
            bad.assign(n, 1);
            CHECK(!coloring_is_proper(h, bad));
        }
    }
}

TEST_CASE("direct certificate for the order-2 grid") {
    ObstructionDesign h = latin_design(2);
    // diagonal tensor sum_i |i,i,1> carried by the grid evaluation
    Rank1Decomposition w;
    w.dims = {2, 2, 4};
    for (int i = 1; i <= 2; ++i) {
        std::array<RatVec, 3> triple;
        triple[0].assign(2, Rat(0));
        triple[1].assign(2, Rat(0));
        triple[2].assign(4, Rat(0));
        triple[0][i - 1] = 1;
        triple[1][i - 1] = 1;
        triple[2][0] = 1;
        w.triples.push_back(triple);
    }
    BoundCertificate cert = certify_lower_bound(h, w, WitnessStrategy::Direct);
    CHECK(cert.chromatic_index == 2);
    CHECK(cert.implied_bound == 2);
    CHECK(cert.value != 0);
    std::string why;
    CHECK(check_certificate(cert, &why));

    // round trip through serialization
    BoundCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(check_certificate(back, &why));
    CHECK(back.value == cert.value);
    CHECK(back.design == cert.design);

    // tampering is caught
    BoundCertificate tampered = cert;
    tampered.implied_bound += 1;
    CHECK(!check_certificate(tampered, &why));
    CHECK(!why.empty());
    BoundCertificate worse = cert;
    worse.value += 1;
    CHECK(!check_certificate(worse, &why));
    BoundCertificate recolored = cert;
    recolored.coloring.assign(recolored.coloring.size(), 1);
    CHECK(!check_certificate(recolored, &why));
}

TEST_CASE("vanishing witnesses are refused") {
    // order-3 grid against the diagonal tensor: the signed square count is
    // zero, so no certificate can be built
    ObstructionDesign h = latin_design(3);
    Rank1Decomposition w;
    w.dims = {3, 3, 9};
    for (int i = 1; i <= 3; ++i) {
        std::array<RatVec, 3> triple;
        triple[0].assign(3, Rat(0));
        triple[1].assign(3, Rat(0));
        triple[2].assign(9, Rat(0));
        triple[0][i - 1] = 1;
        triple[1][i - 1] = 1;
        triple[2][0] = 1;
        w.triples.push_back(triple);
    }
    CHECK_THROWS_AS(certify_lower_bound(h, w, WitnessStrategy::Direct), WitnessVanished);
}

TEST_CASE("symbolic strategy requires the structured target") {
    ObstructionDesign h = latin_design(2);
    Rank1Decomposition w = unit_tensor(2);
    CHECK_THROWS_AS(certify_lower_bound(h, w, WitnessStrategy::Symbolic),
                    std::invalid_argument);
}
