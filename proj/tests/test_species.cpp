#include <map>

#include "doctest.h"
#include "regenum/species.hpp"
#include "regenum/symfunc.hpp"

using namespace regenum;

namespace {

// All simple graphs on n labelled vertices by exact degree vector,
// enumerated as edge subsets. Ground truth for the product encoding.
std::map<std::vector<int>, long> degree_vector_census(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    std::map<std::vector<int>, long> census;
    for (unsigned long mask = 0; mask < (1ul << edges.size()); ++mask) {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (size_t e = 0; e < edges.size(); ++e)
            if (mask & (1ul << e)) {
                ++deg[static_cast<size_t>(edges[e].first)];
                ++deg[static_cast<size_t>(edges[e].second)];
            }
        ++census[deg];
    }
    return census;
}

}  // namespace

TEST_CASE("atom index polynomials") {
    CHECK(atom_index_poly({AtomKind::SetK, 2}, IndexMode::Asymmetry) == e_poly(2));
    CHECK(atom_index_poly({AtomKind::SetK, 2}, IndexMode::CycleIndex) == h_poly(2));
    CHECK(atom_index_poly({AtomKind::MultisetK, 3}, IndexMode::Asymmetry) == h_poly(3));
    CHECK(atom_index_poly({AtomKind::CycleK, 3}, IndexMode::CycleIndex) == cycle_z_poly(3));
    CHECK(atom_index_poly({AtomKind::ListK, 4}, IndexMode::CycleIndex) == PowerSumPoly::var(1, 4));
    CHECK(atom_index_poly({AtomKind::Singleton, 1}, IndexMode::Asymmetry) == PowerSumPoly::var(1));
    CHECK_THROWS_AS(atom_index_poly({AtomKind::CycleK, 3}, IndexMode::Asymmetry),
                    std::invalid_argument);
}

TEST_CASE("compiled exponents for the two-variable graph series") {
    SpeciesExpr simple = parse_species("E[e2]");
    PowerSumPoly g = compile_exponent(simple, 2, 8);
    PowerSumPoly expected(8);
    expected.add_term(PowerMonomial::var(1, 2), make_rat(1, 2));
    expected.add_term(PowerMonomial::var(2), make_rat(-1, 2));
    expected.add_term(PowerMonomial::var(2, 2), make_rat(-1, 4));
    CHECK(g == expected);

    SpeciesExpr multi_loops = parse_species("Z(E o E2)");
    PowerSumPoly g2 = compile_exponent(multi_loops, 2, 8);
    PowerSumPoly expected2(8);
    expected2.add_term(PowerMonomial::var(1, 2), make_rat(1, 2));
    expected2.add_term(PowerMonomial::var(2), make_rat(1, 2));
    expected2.add_term(PowerMonomial::var(2, 2), make_rat(1, 4));
    CHECK(g2 == expected2);
}

TEST_CASE("one-variable compilation specializes to the labelled EGF") {
    // simple graphs restricted to p_1 count perfect matchings
    SpeciesExpr simple = parse_species("E[e2]");
    PowerSumPoly g = compile_exponent(simple, 1, 8);
    PowerSumPoly F = exp_trunc(g, 8);
    UniSeries egf = theta(F, 8);
    // matchings oracle: m(n) = m(n-1)... on n vertices all-degree-1 graphs:
    // a(n) = (n-1) a(n-2), a(0)=1, a(1)=0
    std::vector<Rat> a{Rat(1), Rat(0)};
    for (int n = 2; n <= 8; ++n) a.push_back(Rat(n - 1) * a[static_cast<size_t>(n - 2)]);
    for (int n = 0; n <= 8; ++n)
        CHECK(egf.at(n) * Rat(factorial(static_cast<unsigned long>(n))) == a[static_cast<size_t>(n)]);
}

TEST_CASE("product encoding: exponent series matches the edge-subset census") {
    SpeciesExpr simple = parse_species("E[e2]");
    for (int n = 3; n <= 5; ++n) {
        auto census = degree_vector_census(n);
        int m = n - 1;  // max possible degree
        PowerSumPoly F = exp_trunc(compile_exponent(simple, m, 2l * n * m), 2l * n * m);
        for (const auto& [deg, cnt] : census) {
            std::vector<int> sorted = deg;
            std::sort(sorted.begin(), sorted.end(), std::greater<int>());
            while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
            // coefficient of x^deg in prod (1 + x_i x_j) = <F, h_deg>
            PowerSumPoly h_prod = PowerSumPoly::constant(Rat(1));
            for (int d : sorted) h_prod = mul(h_prod, h_poly(d));
            CHECK(scalar_product(F, h_prod) == Rat(cnt));
        }
    }
}

TEST_CASE("ogf specialization of set partitions gives the partition numbers") {
    // sets of nonempty sets, unlabelled: integer partitions (parts <= 4)
    SpeciesExpr parts = parse_species("H[h1+h2+h3+h4]");
    PowerSumPoly Z = exp_trunc(compile_exponent(parts, 4, 4), 4);
    std::vector<long> pc{1, 1, 2, 3, 5};  // DP oracle values, parts unrestricted to 4
    UniSeries ogf = specialize_ogf(Z, 4);
    for (int n = 0; n <= 4; ++n) CHECK(ogf.at(n) == pc[static_cast<size_t>(n)]);
}

TEST_CASE("compile_exponent is additive over inner sums") {
    SpeciesExpr e12 = parse_species("E[e1+e2]");
    SpeciesExpr e1 = parse_species("E[e1]");
    SpeciesExpr e2 = parse_species("E[e2]");
    CHECK(compile_exponent(e12, 3, 9) ==
          add(compile_exponent(e1, 3, 9), compile_exponent(e2, 3, 9)));
}

TEST_CASE("monomial-basis coefficients of preset series are counting numbers") {
    for (const auto& preset : presets()) {
        int m = 3;
        PowerSumPoly F = exp_trunc(compile_exponent(preset.expr, m, 6), 6);
        for (int w = 0; w <= 6; ++w)
            for (const auto& mu : partitions_of_bounded(w, m)) {
                PowerSumPoly h_prod = PowerSumPoly::constant(Rat(1));
                for (int d : mu.parts) h_prod = mul(h_prod, h_poly(d));
                Rat c = scalar_product(F, h_prod);
                CHECK(is_integer(c));
                CHECK(c >= 0);
            }
    }
}

TEST_CASE("species grammar") {
    CHECK(parse_species("E[e2]").canonical() == "E[e2]");
    CHECK(parse_species("H[h2]").canonical() == "H[h2]");
    CHECK(parse_species("E[e1+e2+e3+e4]").canonical() == "E[e1+e2+e3+e4]");
    CHECK(parse_species("Z(E o L2)").canonical() == "H[l2]");
    CHECK(parse_species("Z(E o E2)").canonical() == "H[h2]");
    CHECK(parse_species("G(E o E2)").canonical() == "E[e2]");
    CHECK(parse_species("E[ e1 + 2*e2 ]").canonical() == "E[e1+2*e2]");
    CHECK(parse_species("H[x]").canonical() == "H[x]");
    CHECK(parse_species("simple_graphs").canonical() == "E[e2]");
    CHECK(parse_species("multigraphs_loops").canonical() == "H[h2]");
    CHECK(parse_species("digraphs").canonical() == "H[l2]");
    CHECK_THROWS_AS(parse_species("E[c3]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_species("G(E o C3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_species("Q[x]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_species("E[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_species("E[e2] trailing"), std::invalid_argument);
    CHECK(parse_species("H[c3]").canonical() == "H[c3]");
}

TEST_CASE("preset catalog") {
    CHECK(lookup_preset("simple_graphs").has_value());
    CHECK(lookup_preset("young_tableaux")->canonical() == "H[e1+e2]");
    CHECK(lookup_preset("covers_le4")->canonical() == "E[e1+e2+e3+e4]");
    CHECK(!lookup_preset("nope").has_value());
    CHECK(!preset_catalog_hash().empty());
    // every preset compiles at every small truncation
    for (const auto& p : presets())
        for (int m = 1; m <= 4; ++m) CHECK_NOTHROW(compile_exponent(p.expr, m, 4 * m));
}
