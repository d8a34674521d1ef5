#include <random>

#include "doctest.h"
#include "regenum/enumerate.hpp"
#include "regenum/guess.hpp"

using namespace regenum;

namespace {

// matchings: a_{n+2} = (n+1) a_n, a_0 = 1, a_1 = 0
std::vector<Rat> matchings_terms(long N) {
    std::vector<Rat> a{Rat(1), Rat(0)};
    for (long n = 2; n <= N; ++n) a.push_back(Rat(n - 1) * a[static_cast<size_t>(n - 2)]);
    return a;
}

std::vector<Rat> to_rats(const std::vector<Int>& v) {
    return std::vector<Rat>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("perfect matchings: order-2 recurrence recovered") {
    auto terms = matchings_terms(59);
    GuessOptions opts;
    opts.max_order = 4;
    opts.max_degree = 3;
    auto rec = guess_recurrence(terms, opts);
    REQUIRE(rec.has_value());
    CHECK(rec->order() == 2);
    CHECK(rec->degree() <= 1);
    // canonical: a_{n+2} - (n+1) a_n = 0
    CHECK(rec->coeff[0] == RatPoly{-1, -1});
    CHECK(rec->coeff[1].is_zero());
    CHECK(rec->coeff[2] == RatPoly{1});
    CHECK(rec->annihilates(terms));
    CHECK(extend_terms(*rec, 59) == terms);
}

TEST_CASE("two-regular graphs: order-3 degree-2 recurrence from engine terms") {
    Sequence seq = count_adjoint(parse_species("E[e2]"), RegularityProfile::of({2}), 50);
    auto terms = to_rats(seq.terms);
    GuessOptions opts;
    opts.max_order = 4;
    opts.max_degree = 3;
    auto rec = guess_recurrence(terms, opts);
    REQUIRE(rec.has_value());
    CHECK(rec->order() <= 3);
    CHECK(rec->degree() <= 2);
    CHECK(rec->annihilates(terms));
    // derived two ways: classical series expansion by hand, and the engine
    CHECK(seq.terms[10] == 286884);
    auto extended = extend_terms(*rec, 80);
    for (size_t i = 0; i < terms.size(); ++i) CHECK(extended[i] == terms[i]);
}

TEST_CASE("zero tail collapses to a_{n+1} = 0") {
    std::vector<Rat> terms(60, Rat(0));
    terms[0] = 1;
    auto rec = guess_recurrence(terms, {});
    REQUIRE(rec.has_value());
    CHECK(rec->order() == 1);
    CHECK(rec->coeff[0].is_zero());
    CHECK(rec->coeff[1] == RatPoly{1});
    std::vector<Rat> expect(11, Rat(0));
    expect[0] = 1;
    CHECK(extend_terms(*rec, 10) == expect);
}

TEST_CASE("guards reject spurious fits on truncated inputs") {
    std::mt19937 rng(99);
    auto full = matchings_terms(120);
    for (int trial = 0; trial < 6; ++trial) {
        long len = 52 + static_cast<long>(rng() % 60);
        std::vector<Rat> cut(full.begin(), full.begin() + len);
        auto rec = guess_recurrence(cut, {});
        REQUIRE(rec.has_value());
        CHECK(rec->annihilates(full));  // must hold far beyond the fit window
    }
}

TEST_CASE("insufficient terms raise") {
    std::vector<Rat> tiny(10, Rat(1));
    CHECK_THROWS_AS(guess_recurrence(tiny, {}), std::invalid_argument);
}

TEST_CASE("egf mode fits in coefficient space and reports in term space") {
    // a_n = n! * 2^n satisfies a_{n+1} = 2(n+1) a_n; b_n = 2^n is order 1 deg 0
    std::vector<Rat> a{Rat(1)};
    for (long n = 1; n <= 59; ++n)
        a.push_back(a.back() * Rat(2) * Rat(n));
    GuessOptions opts;
    opts.egf_mode = true;
    opts.max_order = 3;
    opts.max_degree = 2;
    auto rec = guess_recurrence(a, opts);
    REQUIRE(rec.has_value());
    CHECK(rec->egf_fitted);
    CHECK(rec->annihilates(a));
    CHECK(rec->order() == 1);
    auto ext = extend_terms(*rec, 70);
    for (size_t i = 0; i < a.size(); ++i) CHECK(ext[i] == a[i]);
}
