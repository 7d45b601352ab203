#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "obstr/design.hpp"
#include "obstr/errors.hpp"
#include "obstr/hook.hpp"
#include "obstr/rng.hpp"

using namespace obstr;

namespace {

ObstructionDesign permute_values(const ObstructionDesign& h, Rng& rng) {
    std::array<std::vector<int>, 3> perm;
    for (int k = 0; k < 3; ++k) {
        perm[k].resize(h.box()[k]);
        for (int i = 0; i < h.box()[k]; ++i) perm[k][i] = i + 1;
        for (int i = h.box()[k] - 1; i > 0; --i)
            std::swap(perm[k][i], perm[k][rng.below(i + 1)]);
    }
    std::vector<std::array<int, 3>> pts;
    for (const auto& p : h.points())
        pts.push_back({perm[0][p[0] - 1], perm[1][p[1] - 1], perm[2][p[2] - 1]});
    return ObstructionDesign(h.box(), pts);
}

} // namespace

TEST_CASE("points are stored sorted and validated") {
    ObstructionDesign h({2, 2, 2}, {{2, 1, 1}, {1, 2, 2}});
    CHECK(h.points() == std::vector<std::array<int, 3>>{{1, 2, 2}, {2, 1, 1}});
    CHECK(h.point_count() == 2);
    CHECK_THROWS_AS(ObstructionDesign({2, 2, 2}, {{1, 1, 1}, {1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ObstructionDesign({2, 2, 2}, {{3, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ObstructionDesign({2, 2, 2}, {{0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("point list order at construction is irrelevant") {
    Rng rng(900);
    for (int t = 0; t < 20; ++t) {
        ObstructionDesign h = random_design(7, 4, rng.next_u64());
        std::vector<std::array<int, 3>> pts = h.points();
        for (size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.below(i)]);
        ObstructionDesign g(h.box(), pts);
        CHECK(g == h);
    }
}

TEST_CASE("slice structure of a hand design") {
    // three points, two sharing the first coordinate
    ObstructionDesign h({2, 3, 3}, {{1, 1, 1}, {1, 2, 2}, {2, 3, 3}});
    CHECK(h.slices(0) == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(h.slices(1) == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(h.slice_values(0) == std::vector<int>{1, 2});
    CHECK(h.slice_of(0, 0) == 0);
    CHECK(h.slice_of(0, 2) == 1);
    CHECK(h.sorted_marginal(0) == partition_from_str("2,1"));
    CHECK(design_type(h).str() == "2,1|3|3");
}

TEST_CASE("hook design shape and type") {
    for (int kappa = 1; kappa <= 4; ++kappa) {
        ObstructionDesign h = hook_design(kappa);
        CHECK(h.point_count() == 3 * kappa + 1);
        PartitionTriple t = design_type(h);
        Partition expect = [&] {
            std::vector<int> parts{kappa + 1};
            parts.insert(parts.end(), 2 * kappa, 1);
            return Partition(parts);
        }();
        for (int k = 0; k < 3; ++k) CHECK(t.comp[k] == expect);
    }
}

TEST_CASE("set partition round trip preserves the class") {
    Rng rng(901);
    for (int t = 0; t < 25; ++t) {
        ObstructionDesign h = random_design(8, 4, rng.next_u64());
        SetPartitionTriple s = slices_as_set_partitions(h);
        CHECK(s.d == h.point_count());
        for (int k = 0; k < 3; ++k) {
            // blocks ordered by least element, each sorted
            int last = -1;
            size_t covered = 0;
            for (const auto& b : s.blocks[k]) {
                CHECK(!b.empty());
                CHECK(std::is_sorted(b.begin(), b.end()));
                CHECK(b[0] > last);
                last = b[0];
                covered += b.size();
            }
            CHECK(covered == static_cast<size_t>(s.d));
        }
        ObstructionDesign back = from_set_partitions(s);
        CHECK(design_type(back) == design_type(h));
        CHECK(equivalent(back, h));
    }
}

TEST_CASE("triple intersection violations are rejected") {
    SetPartitionTriple s;
    s.d = 2;
    for (int k = 0; k < 3; ++k) s.blocks[k] = {{0, 1}};
    CHECK_THROWS_AS(from_set_partitions(s), IntersectionViolation);

    SetPartitionTriple t;
    t.d = 3;
    t.blocks[0] = {{0, 1}, {2}};
    t.blocks[1] = {{0, 1, 2}};
    t.blocks[2] = {{0, 1}, {2}};
    CHECK_THROWS_AS(from_set_partitions(t), IntersectionViolation);

    SetPartitionTriple ok;
    ok.d = 3;
    ok.blocks[0] = {{0, 1}, {2}};
    ok.blocks[1] = {{0, 2}, {1}};
    ok.blocks[2] = {{0}, {1, 2}};
    ObstructionDesign h = from_set_partitions(ok);
    CHECK(h.point_count() == 3);
}

TEST_CASE("malformed set partitions are rejected") {
    SetPartitionTriple s;
    s.d = 3;
    s.blocks[0] = {{0, 1}};   // element 2 missing
    s.blocks[1] = {{0}, {1}, {2}};
    s.blocks[2] = {{0}, {1}, {2}};
    CHECK_THROWS_AS(from_set_partitions(s), std::invalid_argument);
    s.blocks[0] = {{0, 1}, {1, 2}};   // element 1 twice
    CHECK_THROWS_AS(from_set_partitions(s), std::invalid_argument);
}

TEST_CASE("canonical form is invariant under coordinate relabelings") {
    Rng rng(902);
    for (int t = 0; t < 30; ++t) {
        ObstructionDesign h = random_design(8, 4, rng.next_u64());
        ObstructionDesign c = canonical_form(h);
        CHECK(equivalent(h, c));
        CHECK(canonical_form(c) == c);
        for (int rep = 0; rep < 3; ++rep) {
            ObstructionDesign g = permute_values(h, rng);
            CHECK(equivalent(g, h));
            CHECK(canonical_form(g) == c);
        }
    }
}

TEST_CASE("equivalence distinguishes different types") {
    ObstructionDesign a({2, 2, 2}, {{1, 1, 1}, {2, 2, 2}});
    ObstructionDesign b({2, 2, 2}, {{1, 1, 1}, {1, 2, 2}});
    CHECK(equivalent(a, a));
    CHECK(!equivalent(a, b));
}

TEST_CASE("enumeration of the all-singleton type") {
    PartitionTriple t = triple_from_str("2|2|2");
    auto raw = enumerate_designs(t, false);
    CHECK(raw.size() == 4);
    Classification c = classify_designs(t);
    CHECK(c.raw_count == 4);
    CHECK(c.classes.size() == 1);
    CHECK(c.classes[0].orbit_size == 4);
    for (const auto& h : raw) CHECK(design_type(h) == t);
}

TEST_CASE("enumeration order is deterministic and lexicographic") {
    PartitionTriple t = triple_from_str("2,1|2,1|2,1");
    auto a = enumerate_designs(t, false);
    auto b = enumerate_designs(t, false);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) {
        return x.points() < y.points();
    }));
}

TEST_CASE("classification of the order-2 row-column type") {
    // two slices of two in the first two directions, four singleton slices
    // in the third
    Classification c = classify_designs(triple_from_str("2,2|2,2|4"));
    CHECK(c.raw_count == 36);
    CHECK(c.classes.size() == 2);
    std::vector<Int> orbits;
    Int total = 0;
    for (const auto& cl : c.classes) {
        orbits.push_back(cl.orbit_size);
        total += cl.orbit_size;
        CHECK(design_type(cl.representative) == triple_from_str("2,2|2,2|4"));
        CHECK(canonical_form(cl.representative) == cl.representative);
    }
    std::sort(orbits.begin(), orbits.end());
    CHECK(orbits == std::vector<Int>{12, 24});
    CHECK(total == c.raw_count);
}

TEST_CASE("single point and cube types") {
    CHECK(count_classes(triple_from_str("1|1|1")) == 1);
    Classification cube = classify_designs(triple_from_str("2,2,2,2|2,2,2,2|2,2,2,2"));
    CHECK(cube.raw_count == 1);
    CHECK(cube.classes.size() == 1);
    CHECK(cube.classes[0].representative.point_count() == 8);
}

TEST_CASE("types forcing shared triples have no designs") {
    // both points would share the single slice in every direction
    CHECK(count_classes(triple_from_str("1,1|1,1|1,1")) == 0);
    CHECK(enumerate_designs(triple_from_str("1,1|1,1|1,1"), false).empty());
}

TEST_CASE("orbit sizes always sum to the raw count") {
    for (const char* type : {"2,1|2,1|3", "3,1|2,2|2,1,1", "2,2|2,1,1|4", "3|2,1|2,1"}) {
        Classification c = classify_designs(triple_from_str(type));
        Int total = 0;
        for (const auto& cl : c.classes) total += cl.orbit_size;
        CHECK(total == c.raw_count);
    }
}

TEST_CASE("enumeration respects the node budget") {
    CHECK_THROWS_AS(classify_designs(triple_from_str("6|6|6"), 50), LimitExceeded);
}

TEST_CASE("random designs are seeded deterministically") {
    ObstructionDesign a = random_design(9, 4, 7);
    ObstructionDesign b = random_design(9, 4, 7);
    CHECK(a == b);
    CHECK(a.point_count() >= 1);
    CHECK(a.point_count() <= 9);
}
