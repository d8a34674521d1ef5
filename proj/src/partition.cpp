#include "regenum/partition.hpp"

#include <stdexcept>

namespace regenum {

Int z_of(const Partition& lambda) {
    // group equal parts: z = prod k^{n_k} n_k!
    Int z = 1;
    size_t i = 0;
    const auto& p = lambda.parts;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        unsigned long mult = static_cast<unsigned long>(j - i);
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), mult);
        z *= pw * factorial(mult);
        i = j;
    }
    return z;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of_bounded(n, n); }

std::vector<Partition> partitions_of_bounded(int n, int max_part) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n == 0) {
        out.emplace_back(cur);
        return out;
    }
    if (max_part < 1) return out;
    gen_partitions(n, max_part, cur, out);
    return out;
}

}  // namespace regenum
