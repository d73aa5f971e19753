#include <doctest.h>

#include "braidkit/error.hpp"
#include "braidkit/nilq.hpp"
#include "braidkit/smallgrp.hpp"
#include "oracles.hpp"

namespace {

bk::Presentation custom(int n, const std::vector<std::vector<int>>& relators) {
    bk::Presentation p;
    for (int i = 1; i <= n; ++i) p.generators.push_back("x" + std::to_string(i));
    for (const auto& r : relators) p.relators.push_back(bk::Word::reduce(std::span<const int>(r), n));
    return p;
}

// Affine maps (a, b) -> (a + 1, b) and (a, b) -> (a, b + a) of (Z/3)^2.
bk::FiniteGroup heisenberg_model() {
    std::vector<int> x(9), y(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            x[static_cast<std::size_t>(3 * a + b)] = 3 * ((a + 1) % 3) + b;
            y[static_cast<std::size_t>(3 * a + b)] = 3 * a + (a + b) % 3;
        }
    return bk::FiniteGroup::generated_by({bk::Permutation(x), bk::Permutation(y)}, 9);
}

struct SmallCase {
    const char* name;
    bk::Presentation presentation;
    bk::FiniteGroup model;
};

std::vector<SmallCase> small_cases() {
    std::vector<SmallCase> out;
    for (int k = 3; k <= 8; ++k)
        out.push_back({"dihedral", custom(2, {std::vector<int>(static_cast<std::size_t>(k), 1), {2, 2}, {1, 2, 1, 2}}),
                       bk::dihedral_group(k)});
    // x^4, x^2 y^-2, y^-1 x y x
    out.push_back({"quaternion", custom(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}), bk::dicyclic(2)});
    out.push_back({"dicyclic12", custom(2, {{1, 1, 1, 1, 1, 1}, {1, 1, 1, -2, -2}, {-2, 1, 2, 1}}), bk::dicyclic(3)});
    // s^3, t^4, t^-1 s t s
    out.push_back({"z3z4", custom(2, {{1, 1, 1}, {2, 2, 2, 2}, {-2, 1, 2, 1}}), bk::z3_semidirect_z4()});
    // (12), (1234): a^2, b^4, (ab)^3, [a, b^2]^2
    out.push_back({"s4", custom(2, {{1, 1}, {2, 2, 2, 2}, {1, 2, 1, 2, 1, 2}, {1, -2, -2, 1, 2, 2, 1, -2, -2, 1, 2, 2}}),
                   bk::symmetric_group(4)});
    // Heisenberg mod 3: x^3, y^3, [x,y]^3, [[x,y],x], [[x,y],y]
    out.push_back({"heisenberg3",
                   custom(2, {{1, 1, 1}, {2, 2, 2}, {-1, -2, 1, 2, -1, -2, 1, 2, -1, -2, 1, 2},
                              {-2, -1, 2, 1, -1, -1, -2, 1, 2, 1}, {-2, -1, 2, 1, -2, -1, -2, 1, 2, 2}}),
                   heisenberg_model()});
    return out;
}

mpz_class order_or_zero(const bk::FgAbelianGroup& g) { return g.order(); }

} // namespace

TEST_SUITE("nilq") {

TEST_CASE("free layer ranks against Lyndon words") {
    CHECK(oracle::witt_mismatches(4, 3) == 0);
    CHECK(oracle::lyndon_count(2, 3) == 2);
    CHECK(oracle::lyndon_count(3, 2) == 3);
    CHECK(bk::free_layer_rank(4, 3) == 20);
    CHECK_THROWS_AS(bk::free_layer_rank(2, 4), bk::Unsupported);
}

TEST_CASE("free groups have free layers") {
    for (int n = 1; n <= 4; ++n) {
        const auto q = bk::nilpotent_quotient(custom(n, {}), 3);
        for (int w = 1; w <= 3; ++w) CHECK(q.layers[static_cast<std::size_t>(w - 1)] == ab(static_cast<int>(bk::free_layer_rank(n, w))));
    }
}

TEST_CASE("small layer examples") {
    // Z^2
    const auto z2 = bk::nilpotent_quotient(custom(2, {{-1, -2, 1, 2}}), 3);
    CHECK(z2.layers == std::vector<bk::FgAbelianGroup>{ab(2), ab(0), ab(0)});
    // free class-2 group on two generators
    const auto heis = bk::nilpotent_quotient(custom(2, {{-2, -1, 2, 1, -1, -1, -2, 1, 2, 1}, {-2, -1, 2, 1, -2, -1, -2, 1, 2, 2}}), 3);
    CHECK(heis.layers == std::vector<bk::FgAbelianGroup>{ab(2), ab(1), ab(0)});
    // cyclic
    CHECK(bk::lcs_layer(custom(1, {{1, 1, 1, 1, 1}}), 1) == ab(0, {5}));
    CHECK(bk::lcs_layer(custom(1, {{1, 1, 1, 1, 1}}), 2) == ab(0));
}

TEST_CASE("layer orders match a finite permutation model") {
    for (const auto& c : small_cases()) {
        CAPTURE(std::string(c.name));
        const auto inv = bk::finite_group_invariants(c.model.elements);
        if (std::string(c.name) == "heisenberg3") CHECK(inv.order == 27);
        const auto q = bk::nilpotent_quotient(c.presentation, 3);
        CHECK(q.layers[0] == inv.abelianization);
        std::vector<std::size_t> lcs = inv.lcs_orders;
        while (lcs.size() < 4) lcs.push_back(lcs.back());
        for (std::size_t w = 0; w < 3; ++w) CHECK(order_or_zero(q.layers[w]) == mpz_class(static_cast<unsigned long>(lcs[w] / lcs[w + 1])));
    }
}

TEST_CASE("surface layers") {
    CHECK(bk::lcs_layer(bk::closed_orientable(2, 1), 2) == ab(5));
    CHECK(bk::lcs_layer(bk::closed_orientable(3, 1), 2) == ab(14));
    CHECK(bk::lcs_layer(bk::closed_orientable(1, 2), 2) == ab(0, {2, 2, 2}));
    CHECK(bk::lcs_layer(bk::closed_orientable(1, 3), 2) == ab(0, {3}));
    CHECK(bk::lcs_layer(bk::closed_orientable(2, 4), 2) == ab(0, {5}));
    CHECK(bk::lcs_layer(bk::boundary_orientable(1, 3), 2) == ab(1));
    CHECK(bk::lcs_layer(bk::nonorientable(2, 3), 2) == ab(0));
    CHECK(bk::lcs_layer(bk::closed_orientable(0, 4), 2) == ab(0));
    CHECK(bk::lcs_layer(bk::closed_orientable(1, 2), 3) == ab(0, {2, 2, 2, 2, 2}));
    CHECK(bk::lcs_layer(bk::closed_orientable(1, 3), 3) == ab(0));
    CHECK(bk::lcs_layer(bk::closed_orientable(1, 4), 3) == ab(0));
    CHECK(bk::lcs_layer(bk::boundary_orientable(1, 3), 3) == ab(0));
}

TEST_CASE("braid group and its class-2 quotient share the lower layers") {
    for (int g = 1; g <= 2; ++g)
        for (int n = 3; n <= 5; ++n) {
            CAPTURE(g);
            CAPTURE(n);
            const auto full = bk::nilpotent_quotient(bk::closed_orientable(g, n), 2);
            const auto quot = bk::nilpotent_quotient(bk::class2_quotient_presentation(g, n), 2);
            CHECK(full.layers == quot.layers);
            CHECK(full.layers[1] == ab(0, {n + g - 1}));
        }
}

TEST_CASE("first layer is the abelianization") {
    for (const auto& gp : builder_grid(2, 4)) {
        CAPTURE(gp.surface);
        CAPTURE(gp.genus);
        CAPTURE(gp.strands);
        const auto p = bk::build_family(gp.surface, gp.genus, gp.strands);
        CHECK(bk::lcs_layer(p, 1) == bk::abelianization(p));
    }
}

TEST_CASE("class 3 quotient agrees with class 2 on the lower layers") {
    for (const auto& gp : builder_grid(2, 4)) {
        if (std::string(gp.surface) == "nonorientable" && gp.genus == 2 && gp.strands == 4) continue;
        CAPTURE(gp.surface);
        CAPTURE(gp.genus);
        CAPTURE(gp.strands);
        const auto p = bk::build_family(gp.surface, gp.genus, gp.strands);
        const auto two = bk::nilpotent_quotient(p, 2);
        const auto three = bk::nilpotent_quotient(p, 3);
        CHECK(three.layers[0] == two.layers[0]);
        CHECK(three.layers[1] == two.layers[1]);
    }
}

TEST_CASE("extra relators only shrink layers") {
    for (const auto& gp : builder_grid(1, 3)) {
        const auto p = bk::build_family(gp.surface, gp.genus, gp.strands);
        if (p.generator_count() == 0) continue;
        const auto base = bk::nilpotent_quotient(p, 2);
        for (int trial = 0; trial < 3; ++trial) {
            const auto letters = random_letters(p.generator_count(), uniform(1, 6));
            const auto q = bk::add_relators(p, {bk::Word::reduce(std::span<const int>(letters), p.generator_count())});
            const auto smaller = bk::nilpotent_quotient(q, 2);
            CAPTURE(gp.surface);
            CAPTURE(gp.genus);
            CAPTURE(gp.strands);
            for (std::size_t w = 0; w < 2; ++w) CHECK(bk::admits_epimorphism(base.layers[w], smaller.layers[w]));
        }
    }
}

TEST_CASE("bad classes and layers") {
    CHECK_THROWS_AS(bk::nilpotent_quotient(custom(2, {}), 4), bk::Unsupported);
    CHECK_THROWS_AS(bk::nilpotent_quotient(custom(2, {}), 0), bk::InvalidInput);
    CHECK_THROWS_AS(bk::lcs_layer(custom(2, {}), 4), bk::Unsupported);
    CHECK_THROWS_AS(bk::lcs_layer(custom(2, {}), 0), bk::InvalidInput);
}

}
