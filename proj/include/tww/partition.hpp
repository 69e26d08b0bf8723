#ifndef TWW_PARTITION_HPP
#define TWW_PARTITION_HPP

#include <vector>

#include "tww/trigraph.hpp"

namespace tww {

/// Partition of the ground set {0..n-1} into disjoint nonempty parts.
/// Parts are kept sorted internally and ordered by smallest member, so two
/// partitions of the same family compare equal.
class Partition {
public:
    Partition(int ground_size, std::vector<std::vector<int>> parts);

    static Partition singletons(int n);

    int ground_size() const { return ground_size_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& part(int i) const;
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    int part_of(int v) const;

    /// New partition with parts i and j merged.
    Partition merged(int i, int j) const;

    bool operator==(const Partition& other) const;

private:
    int ground_size_ = 0;
    std::vector<std::vector<int>> parts_; // each sorted; ordered by min member
    std::vector<int> part_of_;
};

/// Quotient trigraph of G by P: vertex i stands for P.part(i); a pair of
/// parts gets a black edge when fully adjacent, a red edge when neither
/// fully adjacent nor fully non-adjacent.
Trigraph quotient(const Graph& g, const Partition& p);

} // namespace tww

#endif
