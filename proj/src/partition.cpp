#include "obstr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace obstr {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    return os.str();
}

Partition transpose_partition(const Partition& p) {
    std::vector<int> t;
    for (int i = 1; i <= p.first(); ++i) {
        int c = 0;
        for (int part : p.parts)
            if (part >= i) ++c;
        t.push_back(c);
    }
    return Partition(std::move(t));
}

Partition partition_from_str(const std::string& s) {
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

Partition partition_from_counts(std::vector<int> counts) {
    std::erase(counts, 0);
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    return Partition(std::move(counts));
}

static void gen_partitions(int rem, int maxpart, int max_len,
                           std::vector<int>& cur, std::vector<Partition>& out) {
    if (rem == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rem - p, p, max_len, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int d, int max_len) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(d, d, max_len, cur, out);
    return out;
}

bool PartitionTriple::same_size() const {
    return comp[0].size() == comp[1].size() && comp[1].size() == comp[2].size();
}

int PartitionTriple::common_size() const {
    if (!same_size())
        throw std::invalid_argument("partition triple components differ in size");
    return comp[0].size();
}

int PartitionTriple::max_length() const {
    return std::max({comp[0].length(), comp[1].length(), comp[2].length()});
}

std::string PartitionTriple::str() const {
    return comp[0].str() + "|" + comp[1].str() + "|" + comp[2].str();
}

PartitionTriple triple_from_str(const std::string& s) {
    std::array<Partition, 3> comp;
    std::istringstream is(s);
    std::string tok;
    int i = 0;
    while (std::getline(is, tok, '|')) {
        if (i >= 3) throw std::invalid_argument("partition triple needs exactly 3 components");
        comp[i++] = partition_from_str(tok);
    }
    if (i != 3) throw std::invalid_argument("partition triple needs exactly 3 components");
    return PartitionTriple{comp};
}

} // namespace obstr
