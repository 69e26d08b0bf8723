#include "tww/partition.hpp"

#include <algorithm>
#include <string>

namespace tww {

Partition::Partition(int ground_size, std::vector<std::vector<int>> parts)
    : ground_size_(ground_size), parts_(std::move(parts)), part_of_(ground_size, -1) {
    if (ground_size < 0)
        throw invalid_input("negative ground size");
    std::size_t covered = 0;
    for (auto& part : parts_) {
        if (part.empty())
            throw invalid_input("empty part in partition");
        std::sort(part.begin(), part.end());
        for (int v : part) {
            if (v < 0 || v >= ground_size_)
                throw invalid_input("partition member out of range: " + std::to_string(v));
            if (part_of_[v] != -1)
                throw invalid_input("overlapping parts: vertex " + std::to_string(v) +
                                    " appears twice");
            part_of_[v] = 0; // placeholder until parts are ordered
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(ground_size_))
        throw invalid_input("partition does not cover the ground set (" +
                            std::to_string(covered) + " of " + std::to_string(ground_size_) + ")");
    std::sort(parts_.begin(), parts_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int i = 0; i < static_cast<int>(parts_.size()); ++i)
        for (int v : parts_[i])
            part_of_[v] = i;
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> parts;
    parts.reserve(n);
    for (int v = 0; v < n; ++v)
        parts.push_back({v});
    return Partition(n, std::move(parts));
}

const std::vector<int>& Partition::part(int i) const {
    if (i < 0 || i >= part_count())
        throw invalid_input("part index out of range: " + std::to_string(i));
    return parts_[i];
}

int Partition::part_of(int v) const {
    if (v < 0 || v >= ground_size_)
        throw invalid_input("unknown vertex: v = " + std::to_string(v));
    return part_of_[v];
}

Partition Partition::merged(int i, int j) const {
    if (i == j)
        throw invalid_input("cannot merge a part with itself");
    part(i);
    part(j);
    std::vector<std::vector<int>> next;
    next.reserve(parts_.size() - 1);
    std::vector<int> joined = parts_[i];
    joined.insert(joined.end(), parts_[j].begin(), parts_[j].end());
    for (int k = 0; k < static_cast<int>(parts_.size()); ++k)
        if (k != i && k != j)
            next.push_back(parts_[k]);
    next.push_back(std::move(joined));
    return Partition(ground_size_, std::move(next));
}

bool Partition::operator==(const Partition& other) const {
    return ground_size_ == other.ground_size_ && parts_ == other.parts_;
}

Trigraph quotient(const Graph& g, const Partition& p) {
    if (p.ground_size() != g.vertex_count())
        throw invalid_input("partition ground size does not match the graph");
    const int k = p.part_count();
    Trigraph t(k);
    for (int i = 0; i < k; ++i)
        t.add_vertex(i);

    // membership bitsets once per part
    std::vector<bitset> member(k, bitset(g.vertex_count()));
    for (int i = 0; i < k; ++i)
        for (int v : p.part(i))
            member[i].set(v);

    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool all = true, none = true;
            for (int v : p.part(i)) {
                const std::size_t hits = (g.neighbors(v) & member[j]).count();
                if (hits != member[j].count())
                    all = false;
                if (hits != 0)
                    none = false;
                if (!all && !none)
                    break;
            }
            if (all)
                t.add_black(i, j);
            else if (!none)
                t.add_red(i, j);
        }
    }
    return t;
}

} // namespace tww
