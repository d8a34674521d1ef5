#pragma once

#include <vector>

#include "regenum/rational.hpp"

namespace regenum {

// Integer partition, parts weakly decreasing.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}
    Partition(std::initializer_list<int> p) : parts(p) {}

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition&) const = default;
};

// z_lambda = 1^{n_1} n_1! 2^{n_2} n_2! ... , the squared norm of p_lambda.
Int z_of(const Partition& lambda);

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

// Partitions of n with every part <= max_part, same order.
std::vector<Partition> partitions_of_bounded(int n, int max_part);

}  // namespace regenum
