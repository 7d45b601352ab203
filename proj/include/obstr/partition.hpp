#pragma once
#include <array>
#include <string>
#include <vector>

namespace obstr {

// Integer partition: weakly decreasing positive parts. An empty part list
// is the partition of 0.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;              // sum of parts
    int length() const { return static_cast<int>(parts.size()); }
    int first() const { return parts.empty() ? 0 : parts[0]; }
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const;       // "3,1,1"
};

Partition transpose_partition(const Partition& p);
Partition partition_from_str(const std::string& s);

// sorts a multiset of positive counts into a partition (zeros dropped)
Partition partition_from_counts(std::vector<int> counts);

// all partitions of d, optionally with at most max_len parts (0 = no cap)
std::vector<Partition> partitions_of(int d, int max_len = 0);

struct PartitionTriple {
    std::array<Partition, 3> comp;

    bool same_size() const;
    int common_size() const;       // requires same_size()
    int max_length() const;
    bool operator==(const PartitionTriple&) const = default;
    auto operator<=>(const PartitionTriple&) const = default;
    std::string str() const;       // "3,1|2,2|2,1,1"
};

PartitionTriple triple_from_str(const std::string& s);

} // namespace obstr
