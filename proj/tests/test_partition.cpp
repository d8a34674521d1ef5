#include <vector>

#include "doctest.h"
#include "regenum/partition.hpp"

using namespace regenum;

namespace {

// Independent partition-count oracle (classic DP), used to check the
// generator's output size.
long partition_count(int n) {
    std::vector<long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int w = part; w <= n; ++w) p[static_cast<size_t>(w)] += p[static_cast<size_t>(w - part)];
    return p[static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("z_of on small partitions") {
    CHECK(z_of(Partition({})) == 1);
    CHECK(z_of(Partition({1, 1})) == 2);
    CHECK(z_of(Partition({2})) == 2);
    CHECK(z_of(Partition({2, 1, 1})) == 4);
    CHECK(z_of(Partition({3, 3, 2})) == Int(3 * 3 * 2 * 2));  // 3^2*2!*2^1*1!
}

TEST_CASE("partitions_of enumerates each partition once in reverse-lex order") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition({})});

    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    CHECK(partitions_of(5).size() == static_cast<size_t>(partition_count(5)));
    for (int n = 0; n <= 12; ++n) {
        auto ps = partitions_of(n);
        CHECK(ps.size() == static_cast<size_t>(partition_count(n)));
        for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i].parts > ps[i + 1].parts);
        for (const auto& lambda : ps) {
            CHECK(lambda.weight() == n);
            for (size_t i = 0; i + 1 < lambda.parts.size(); ++i)
                CHECK(lambda.parts[i] >= lambda.parts[i + 1]);
        }
    }
}

TEST_CASE("bounded partitions respect the part cap") {
    auto ps = partitions_of_bounded(6, 2);
    CHECK(ps.size() == 4);  // 2+2+2, 2+2+1+1, 2+1^4, 1^6
    for (const auto& lambda : ps)
        for (int part : lambda.parts) CHECK(part <= 2);
}
