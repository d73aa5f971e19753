#include <doctest.h>

#include <algorithm>

#include "braidkit/error.hpp"
#include "braidkit/fpgroup.hpp"
#include "braidkit/nilq.hpp"
#include "braidkit/zlinalg.hpp"
#include "support.hpp"

using bk::Presentation;
using bk::Word;

namespace {

std::size_t relators(const Presentation& p) { return p.relators.size(); }

std::vector<Word> braid_generators(const Presentation& p) {
    std::vector<Word> out;
    for (int i : p.braid_generator_indices()) out.push_back(Word::generator(i + 1, p.generator_count()));
    return out;
}

bool contains(const Presentation& p, const Word& w) {
    return std::find(p.relators.begin(), p.relators.end(), w) != p.relators.end();
}

} // namespace

TEST_SUITE("fpgroup") {

TEST_CASE("artin presentations") {
    CHECK(bk::artin_presentation(2).generator_count() == 1);
    CHECK(relators(bk::artin_presentation(2)) == 0);
    CHECK(bk::artin_presentation(3).generator_count() == 2);
    CHECK(bk::artin_presentation(3).relators.front().letters() == std::vector<int>{1, 2, 1, -2, -1, -2});
    const Presentation b4 = bk::artin_presentation(4);
    CHECK(b4.generator_count() == 3);
    CHECK(relators(b4) == 3);
    CHECK(bk::artin_presentation(1).generator_count() == 0);
    CHECK_THROWS_AS(bk::artin_presentation(0), bk::InvalidInput);
}

TEST_CASE("closed orientable relator counts") {
    const Presentation t2 = bk::closed_orientable(1, 2);
    CHECK(t2.generators == std::vector<std::string>{"a1", "b1", "s1"});
    CHECK(relators(t2) == 4);
    const Presentation s3 = bk::closed_orientable(0, 3);
    CHECK(s3.generator_count() == 2);
    CHECK(relators(s3) == 2);
    CHECK(s3.relators.back().letters() == std::vector<int>{-1, -2, -2, -1});
    CHECK(bk::closed_orientable(1, 3).generator_count() == 4);
    CHECK(relators(bk::closed_orientable(1, 3)) == 7);
    CHECK_THROWS_AS(bk::closed_orientable(-1, 3), bk::InvalidInput);
    CHECK_THROWS_AS(bk::closed_orientable(1, 0), bk::InvalidInput);
}

TEST_CASE("boundary family drops the surface relator") {
    CHECK(bk::boundary_orientable(1, 3).generator_count() == 4);
    CHECK(relators(bk::boundary_orientable(1, 3)) == 6);
    CHECK(bk::boundary_orientable(1, 1).generator_count() == 2);
    CHECK(relators(bk::boundary_orientable(1, 1)) == 0);
    CHECK(bk::boundary_orientable(2, 1).generator_count() == 4);
    CHECK(relators(bk::boundary_orientable(2, 1)) == 0);
    CHECK_THROWS_AS(bk::boundary_orientable(0, 3), bk::InvalidInput);
    for (int g = 1; g <= 3; ++g)
        for (int n = 1; n <= 5; ++n) {
            const Presentation c = bk::closed_orientable(g, n), b = bk::boundary_orientable(g, n);
            CHECK(b.relators.size() + 1 == c.relators.size());
            CHECK(std::equal(b.relators.begin(), b.relators.end(), c.relators.begin()));
        }
}

TEST_CASE("nonorientable relator counts") {
    const Presentation p12 = bk::nonorientable(1, 2);
    CHECK(p12.generator_count() == 2);
    CHECK(relators(p12) == 2);
    CHECK(bk::nonorientable(2, 3).generator_count() == 4);
    CHECK(relators(bk::nonorientable(2, 3)) == 7);
    const Presentation rp2 = bk::nonorientable(1, 1);
    CHECK(rp2.generator_count() == 1);
    REQUIRE(relators(rp2) == 1);
    CHECK(rp2.relators[0].letters() == std::vector<int>{-1, -1});
    CHECK(bk::abelianization(rp2) == ab(0, {2}));
    CHECK_THROWS_AS(bk::nonorientable(0, 2), bk::InvalidInput);
}

TEST_CASE("one strand leaves a single surface relator") {
    for (int g = 1; g <= 3; ++g) {
        CHECK(bk::closed_orientable(g, 1).generator_count() == 2 * g);
        CHECK(relators(bk::closed_orientable(g, 1)) == 1);
        CHECK(bk::nonorientable(g, 1).generator_count() == g);
        CHECK(relators(bk::nonorientable(g, 1)) == 1);
    }
}

TEST_CASE("exponent sums") {
    // Surface generators a_i, b_i, r_i never carry a net exponent, except in
    // the non-orientable surface relator where each r_i has exponent -2. The
    // surface relator has sigma exponent -2 on every strand generator.
    for (const auto& gp : builder_grid(3, 5)) {
        if (std::string(gp.surface) == "artin") continue;
        CAPTURE(gp.surface);
        CAPTURE(gp.genus);
        CAPTURE(gp.strands);
        const Presentation p = bk::build_family(gp.surface, gp.genus, gp.strands);
        const auto braid = p.braid_generator_indices();
        const bool nonor = std::string(gp.surface) == "nonorientable";
        const bool has_surface_relator = std::string(gp.surface) != "boundary-orientable";
        for (std::size_t r = 0; r < p.relators.size(); ++r) {
            const auto e = bk::exponent_vector(p.relators[r], p.generator_count());
            const bool last = has_surface_relator && r + 1 == p.relators.size();
            for (int i = 0; i < p.generator_count(); ++i) {
                const bool is_braid = std::find(braid.begin(), braid.end(), i) != braid.end();
                if (!is_braid) CHECK(e[static_cast<std::size_t>(i)] == (last && nonor ? -2 : 0));
                if (is_braid && last) CHECK(e[static_cast<std::size_t>(i)] == -2);
            }
        }
    }
}

TEST_CASE("builders are deterministic") {
    for (const auto& gp : builder_grid(2, 4)) {
        if (std::string(gp.surface) == "artin" && gp.strands == 0) continue;
        CHECK(bk::build_family(gp.surface, gp.genus, gp.strands) == bk::build_family(gp.surface, gp.genus, gp.strands));
    }
}

TEST_CASE("class-2 quotient presentation") {
    const Presentation q14 = bk::class2_quotient_presentation(1, 4);
    CHECK(q14.generators == std::vector<std::string>{"a1", "b1", "s"});
    CHECK(contains(q14, Word::generator(3, 3).power(8)));
    CHECK(contains(bk::class2_quotient_presentation(1, 3), Word::generator(3, 3).power(6)));
    const Presentation q34 = bk::class2_quotient_presentation(3, 4);
    CHECK(q34.generator_count() == 7);
    int twisted = 0;
    for (int i = 0; i < 3; ++i) {
        const Word a = Word::generator(2 * i + 1, 7), b = Word::generator(2 * i + 2, 7);
        twisted += contains(q34, bk::commutator(a, b) * Word::generator(7, 7).power(-2));
    }
    CHECK(twisted == 3);
    CHECK_THROWS_AS(bk::class2_quotient_presentation(1, 2), bk::InvalidInput);
    CHECK_THROWS_AS(bk::class2_quotient_presentation(0, 4), bk::InvalidInput);
}

TEST_CASE("quotients by the braid generators") {
    const Presentation c13 = bk::closed_orientable(1, 3);
    CHECK(bk::abelianization(bk::add_relators(c13, braid_generators(c13))) == ab(2));
    CHECK(bk::add_relators(c13, {}) == c13);
    CHECK(bk::add_relators(c13, {Word(4)}) == c13);
    const Presentation n23 = bk::nonorientable(2, 3);
    CHECK(bk::lcs_layer(bk::add_relators(n23, braid_generators(n23)), 2).is_trivial());
    CHECK_THROWS_AS(bk::add_relators(c13, {Word::generator(1, 2)}), bk::InvalidInput);
}

TEST_CASE("family dispatch") {
    CHECK(bk::build_family("closed-orientable", 1, 3) == bk::closed_orientable(1, 3));
    CHECK(bk::build_family("artin", 0, 4) == bk::artin_presentation(4));
    CHECK(bk::build_family("class2-quotient", 1, 4) == bk::class2_quotient_presentation(1, 4));
    CHECK_THROWS_AS(bk::build_family("boundary-orientable", 1, 3, 2), bk::Unsupported);
    CHECK_THROWS_AS(bk::build_family("klein", 1, 3), bk::Unsupported);
}

TEST_CASE("presentation json round trip") {
    for (const auto& gp : builder_grid(2, 4)) {
        const Presentation p = bk::build_family(gp.surface, gp.genus, gp.strands);
        CHECK(bk::presentation_from_json(bk::to_json(p)) == p);
    }
    CHECK_THROWS_AS(bk::presentation_from_json({{"generators", {"x"}}, {"relators", {{2}}}}), bk::InvalidInput);
    CHECK_THROWS_AS(bk::presentation_from_json(nlohmann::json::array()), bk::InvalidInput);
}

}
