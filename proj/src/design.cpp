#include "obstr/design.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "obstr/errors.hpp"
#include "obstr/rng.hpp"

namespace obstr {

ObstructionDesign::ObstructionDesign(std::array<int, 3> box,
                                     std::vector<std::array<int, 3>> points)
    : box_(box), points_(std::move(points)) {
    for (int k = 0; k < 3; ++k)
        if (box_[k] < 0) throw std::invalid_argument("negative box side");
    std::sort(points_.begin(), points_.end());
    for (size_t i = 0; i < points_.size(); ++i) {
        for (int k = 0; k < 3; ++k)
            if (points_[i][k] < 1 || points_[i][k] > box_[k])
                throw std::invalid_argument("design point outside box");
        if (i > 0 && points_[i] == points_[i - 1])
            throw std::invalid_argument("duplicate design point");
    }
    for (int k = 0; k < 3; ++k) {
        std::map<int, std::vector<int>> by_value;
        for (size_t i = 0; i < points_.size(); ++i)
            by_value[points_[i][k]].push_back(static_cast<int>(i));
        slice_of_[k].assign(points_.size(), -1);
        for (auto& [value, members] : by_value) {
            slice_values_[k].push_back(value);
            for (int p : members)
                slice_of_[k][p] = static_cast<int>(slices_[k].size());
            slices_[k].push_back(std::move(members));
        }
    }
}

Partition ObstructionDesign::sorted_marginal(int k) const {
    std::vector<int> counts;
    counts.reserve(slices_[k].size());
    for (const auto& s : slices_[k]) counts.push_back(static_cast<int>(s.size()));
    return partition_from_counts(std::move(counts));
}

PartitionTriple design_type(const ObstructionDesign& h) {
    PartitionTriple t;
    for (int k = 0; k < 3; ++k)
        t.comp[k] = transpose_partition(h.sorted_marginal(k));
    return t;
}

SetPartitionTriple slices_as_set_partitions(const ObstructionDesign& h) {
    SetPartitionTriple s;
    s.d = h.point_count();
    for (int k = 0; k < 3; ++k) {
        s.blocks[k] = h.slices(k);
        std::sort(s.blocks[k].begin(), s.blocks[k].end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }
    return s;
}

static void validate_partition(const std::vector<std::vector<int>>& blocks, int d, int k) {
    std::vector<int> seen(d, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block in set partition");
        for (int v : b) {
            if (v < 0 || v >= d)
                throw std::invalid_argument("set partition element out of range");
            if (seen[v]++)
                throw std::invalid_argument("element repeated in direction " +
                                            std::to_string(k + 1) + " partition");
        }
    }
    for (int v = 0; v < d; ++v)
        if (!seen[v])
            throw std::invalid_argument("element missing from direction " +
                                        std::to_string(k + 1) + " partition");
}

ObstructionDesign from_set_partitions(const SetPartitionTriple& s) {
    for (int k = 0; k < 3; ++k) validate_partition(s.blocks[k], s.d, k);
    std::array<std::vector<int>, 3> block_of;
    for (int k = 0; k < 3; ++k) {
        block_of[k].assign(s.d, -1);
        for (size_t b = 0; b < s.blocks[k].size(); ++b)
            for (int v : s.blocks[k][b]) block_of[k][v] = static_cast<int>(b);
    }
    std::map<std::array<int, 3>, int> first_at;
    std::vector<std::array<int, 3>> points;
    for (int v = 0; v < s.d; ++v) {
        std::array<int, 3> pt{block_of[0][v] + 1, block_of[1][v] + 1, block_of[2][v] + 1};
        auto [it, fresh] = first_at.emplace(pt, v);
        if (!fresh) {
            std::ostringstream os;
            os << "elements " << it->second << " and " << v
               << " share a block in every direction (blocks "
               << pt[0] - 1 << ", " << pt[1] - 1 << ", " << pt[2] - 1 << ")";
            throw IntersectionViolation(os.str());
        }
        points.push_back(pt);
    }
    std::array<int, 3> box{static_cast<int>(s.blocks[0].size()),
                           static_cast<int>(s.blocks[1].size()),
                           static_cast<int>(s.blocks[2].size())};
    return ObstructionDesign(box, std::move(points));
}

std::vector<std::vector<int>> conflict_adjacency(const ObstructionDesign& h) {
    int d = h.point_count();
    std::vector<std::vector<int>> adj(d);
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
            bool share = false;
            for (int k = 0; k < 3 && !share; ++k)
                share = h.slice_of(k, p) == h.slice_of(k, q);
            if (share) {
                adj[p].push_back(q);
                adj[q].push_back(p);
            }
        }
    return adj;
}

// tight copy: drop empty slices, compress coordinate values
static ObstructionDesign tighten(const ObstructionDesign& h) {
    std::array<std::map<int, int>, 3> relabel;
    for (int k = 0; k < 3; ++k) {
        int next = 1;
        for (int v : h.slice_values(k)) relabel[k][v] = next++;
    }
    std::vector<std::array<int, 3>> pts;
    pts.reserve(h.point_count());
    for (const auto& p : h.points())
        pts.push_back({relabel[0].at(p[0]), relabel[1].at(p[1]), relabel[2].at(p[2])});
    std::array<int, 3> box{static_cast<int>(relabel[0].size()),
                           static_cast<int>(relabel[1].size()),
                           static_cast<int>(relabel[2].size())};
    return ObstructionDesign(box, std::move(pts));
}

namespace {

struct IsoState {
    const ObstructionDesign *a, *b;
    std::array<std::vector<int>, 3> val_map;    // a-value -> b-value (1-based, 0 = unset)
    std::array<std::vector<int>, 3> val_used;   // b-value taken
    std::vector<int> pt_used;                   // b-point taken

    bool match(int p) {
        int d = a->point_count();
        if (p == d) return true;
        const auto& pa = a->points()[p];
        for (int q = 0; q < d; ++q) {
            if (pt_used[q]) continue;
            const auto& pb = b->points()[q];
            bool ok = true;
            std::array<int, 3> set_here{0, 0, 0};
            for (int k = 0; k < 3 && ok; ++k) {
                int va = pa[k], vb = pb[k];
                if (val_map[k][va] == 0) {
                    if (val_used[k][vb]) { ok = false; break; }
                    // slice sizes must agree for the map to extend
                    if (a->slices(k)[a->slice_of(k, p)].size() !=
                        b->slices(k)[b->slice_of(k, q)].size()) { ok = false; break; }
                    val_map[k][va] = vb;
                    val_used[k][vb] = 1;
                    set_here[k] = va;
                } else if (val_map[k][va] != vb) {
                    ok = false;
                }
            }
            if (ok) {
                pt_used[q] = 1;
                if (match(p + 1)) return true;
                pt_used[q] = 0;
            }
            for (int k = 0; k < 3; ++k)
                if (set_here[k]) {
                    val_used[k][val_map[k][set_here[k]]] = 0;
                    val_map[k][set_here[k]] = 0;
                }
        }
        return false;
    }
};

bool iso_tight(const ObstructionDesign& a, const ObstructionDesign& b) {
    if (a.point_count() != b.point_count()) return false;
    for (int k = 0; k < 3; ++k) {
        if (a.box()[k] != b.box()[k]) return false;
        if (a.sorted_marginal(k) != b.sorted_marginal(k)) return false;
    }
    IsoState st;
    st.a = &a;
    st.b = &b;
    for (int k = 0; k < 3; ++k) {
        st.val_map[k].assign(a.box()[k] + 1, 0);
        st.val_used[k].assign(b.box()[k] + 1, 0);
    }
    st.pt_used.assign(b.point_count(), 0);
    return st.match(0);
}

} // namespace

bool equivalent(const ObstructionDesign& a, const ObstructionDesign& b) {
    return iso_tight(tighten(a), tighten(b));
}

namespace {

// Lex-min search. New labels are handed out inside marginal groups
// (runs of equal sorted marginal); at every step only points realizing
// the minimal achievable next tuple are branched on.
struct CanonState {
    const ObstructionDesign* h;
    int d;
    std::array<std::vector<int>, 3> group_of_value;   // per direction, 1-based value -> group id
    std::array<std::vector<int>, 3> group_lo;         // group id -> first new label
    std::array<std::vector<int>, 3> group_next;       // group id -> next free new label
    std::array<std::vector<int>, 3> new_label;        // value -> assigned new label (0 = none)
    std::vector<int> used;                            // point already placed
    std::vector<std::array<int, 3>> out;              // list under construction
    std::vector<std::array<int, 3>> best;
    bool have_best = false;
    std::uint64_t nodes = 0, budget = 0;

    std::array<int, 3> candidate(int p) const {
        std::array<int, 3> c;
        for (int k = 0; k < 3; ++k) {
            int v = h->points()[p][k];
            c[k] = new_label[k][v] ? new_label[k][v]
                                   : group_next[k][group_of_value[k][v]];
        }
        return c;
    }

    void step(int depth) {
        if (++nodes > budget) throw LimitExceeded("canonical form search budget exhausted");
        if (depth == d) {
            if (!have_best || out < best) {
                best = out;
                have_best = true;
            }
            return;
        }
        std::array<int, 3> min_c{0, 0, 0};
        bool any = false;
        for (int p = 0; p < d; ++p) {
            if (used[p]) continue;
            auto c = candidate(p);
            if (!any || c < min_c) {
                min_c = c;
                any = true;
            }
        }
        for (int p = 0; p < d; ++p) {
            if (used[p] || candidate(p) != min_c) continue;
            std::array<int, 3> assigned{0, 0, 0};
            for (int k = 0; k < 3; ++k) {
                int v = h->points()[p][k];
                if (!new_label[k][v]) {
                    int g = group_of_value[k][v];
                    new_label[k][v] = group_next[k][g]++;
                    assigned[k] = v;
                }
            }
            used[p] = 1;
            out.push_back(min_c);
            step(depth + 1);
            out.pop_back();
            used[p] = 0;
            for (int k = 0; k < 3; ++k)
                if (assigned[k]) {
                    int g = group_of_value[k][assigned[k]];
                    --group_next[k][g];
                    new_label[k][assigned[k]] = 0;
                }
        }
    }
};

} // namespace

ObstructionDesign canonical_form(const ObstructionDesign& h, std::uint64_t budget) {
    ObstructionDesign t = tighten(h);
    if (t.point_count() == 0)
        return t;
    CanonState st;
    st.h = &t;
    st.d = t.point_count();
    st.budget = budget;
    for (int k = 0; k < 3; ++k) {
        // values sorted by decreasing marginal; equal marginals share a group
        std::vector<std::pair<int, int>> value_size;   // (-size, value)
        for (size_t s = 0; s < t.slices(k).size(); ++s)
            value_size.push_back({-static_cast<int>(t.slices(k)[s].size()),
                                  t.slice_values(k)[s]});
        std::sort(value_size.begin(), value_size.end());
        st.group_of_value[k].assign(t.box()[k] + 1, -1);
        int label = 1;
        for (size_t i = 0; i < value_size.size(); ++i) {
            if (i == 0 || value_size[i].first != value_size[i - 1].first) {
                st.group_lo[k].push_back(label);
                st.group_next[k].push_back(label);
            }
            st.group_of_value[k][value_size[i].second] =
                static_cast<int>(st.group_lo[k].size()) - 1;
            ++label;
        }
        st.new_label[k].assign(t.box()[k] + 1, 0);
    }
    st.used.assign(st.d, 0);
    st.step(0);
    return ObstructionDesign(t.box(), std::move(st.best));
}

namespace {

struct EnumState {
    std::array<std::vector<int>, 3> cap;   // remaining marginal per value (0-based)
    std::array<int, 3> box;
    std::vector<std::array<int, 3>> pts;
    const std::function<void(const ObstructionDesign&)>* fn;
    std::uint64_t nodes = 0, budget = 0;

    // fill direction-1 values in order; within one value choose (j,k)
    // cells in lex order starting after `from`
    void fill(int i, int need, int from) {
        if (++nodes > budget) throw LimitExceeded("design enumeration budget exhausted");
        if (need == 0) {
            next_value(i + 1);
            return;
        }
        int total_cells = box[1] * box[2];
        // not enough cells left in this slice
        if (total_cells - from < need) return;
        for (int cell = from; cell <= total_cells - need; ++cell) {
            int j = cell / box[2], k = cell % box[2];
            if (cap[1][j] == 0 || cap[2][k] == 0) continue;
            --cap[1][j];
            --cap[2][k];
            pts.push_back({i + 1, j + 1, k + 1});
            fill(i, need - 1, cell + 1);
            pts.pop_back();
            ++cap[1][j];
            ++cap[2][k];
        }
    }

    void next_value(int i) {
        if (i == box[0]) {
            (*fn)(ObstructionDesign(box, pts));
            return;
        }
        fill(i, cap[0][i], 0);
    }
};

} // namespace

void for_each_design(const PartitionTriple& type,
                     const std::function<void(const ObstructionDesign&)>& fn,
                     std::uint64_t budget) {
    int d = type.common_size();
    if (d == 0) {
        fn(ObstructionDesign({0, 0, 0}, {}));
        return;
    }
    std::array<Partition, 3> marg;
    for (int k = 0; k < 3; ++k) marg[k] = transpose_partition(type.comp[k]);
    EnumState st;
    for (int k = 0; k < 3; ++k) {
        st.box[k] = marg[k].length();
        st.cap[k] = marg[k].parts;
    }
    st.fn = &fn;
    st.budget = budget;
    st.next_value(0);
}

Classification classify_designs(const PartitionTriple& type, std::uint64_t budget) {
    // bucket by a cheap invariant (sorted point profiles), then match
    // against known representatives by the backtracking orbit test
    struct Bucket {
        std::vector<int> class_ids;
    };
    std::vector<ObstructionDesign> reps;
    std::vector<Int> orbit;
    std::map<std::vector<std::array<int, 3>>, Bucket> buckets;
    Int raw = 0;

    for_each_design(type, [&](const ObstructionDesign& h) {
        ++raw;
        std::vector<std::array<int, 3>> profile;
        profile.reserve(h.point_count());
        for (int p = 0; p < h.point_count(); ++p) {
            std::array<int, 3> sz;
            for (int k = 0; k < 3; ++k)
                sz[k] = static_cast<int>(h.slices(k)[h.slice_of(k, p)].size());
            std::sort(sz.begin(), sz.end());
            profile.push_back(sz);
        }
        std::sort(profile.begin(), profile.end());
        auto& bucket = buckets[profile];
        for (int id : bucket.class_ids)
            if (iso_tight(h, reps[id])) {
                orbit[id] += 1;
                return;
            }
        bucket.class_ids.push_back(static_cast<int>(reps.size()));
        reps.push_back(h);
        orbit.push_back(1);
    }, budget);

    Classification c;
    c.raw_count = raw;
    for (size_t i = 0; i < reps.size(); ++i)
        c.classes.push_back({canonical_form(reps[i], budget), orbit[i]});
    std::sort(c.classes.begin(), c.classes.end(),
              [](const DesignClass& x, const DesignClass& y) {
                  return x.representative.points() < y.representative.points();
              });
    return c;
}

std::vector<ObstructionDesign> enumerate_designs(const PartitionTriple& type,
                                                 bool canonical, std::uint64_t budget) {
    std::vector<ObstructionDesign> out;
    if (canonical) {
        for (auto& cl : classify_designs(type, budget).classes)
            out.push_back(std::move(cl.representative));
    } else {
        for_each_design(type, [&](const ObstructionDesign& h) { out.push_back(h); }, budget);
    }
    return out;
}

Int count_classes(const PartitionTriple& type, std::uint64_t budget) {
    return Int(static_cast<long>(classify_designs(type, budget).classes.size()));
}

ObstructionDesign random_design(int max_d, int max_side, std::uint64_t seed) {
    if (max_d < 1 || max_side < 1)
        throw std::invalid_argument("random_design: sizes must be positive");
    Rng rng(seed);
    std::array<int, 3> box;
    long volume = 1;
    for (int k = 0; k < 3; ++k) {
        box[k] = static_cast<int>(rng.range(1, max_side));
        volume *= box[k];
    }
    int d = static_cast<int>(rng.range(1, std::min<long>(max_d, volume)));
    std::vector<std::array<int, 3>> pts;
    while (static_cast<int>(pts.size()) < d) {
        std::array<int, 3> p;
        for (int k = 0; k < 3; ++k) p[k] = static_cast<int>(rng.range(1, box[k]));
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return ObstructionDesign(box, std::move(pts));
}

} // namespace obstr
