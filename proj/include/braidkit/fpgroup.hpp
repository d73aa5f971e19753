#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braidkit/word.hpp"

namespace braidkit {

/// Provenance of a builder-made presentation.
struct Family {
    std::string surface; // closed-orientable | boundary-orientable | nonorientable | artin | class2-quotient | custom
    int genus = 0;
    int strands = 0;

    friend bool operator==(const Family&, const Family&) = default;
};

/// A finite presentation. Relators are nonempty and freely reduced over an
/// alphabet of size generators.size().
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::optional<Family> family;

    int generator_count() const noexcept { return static_cast<int>(generators.size()); }

    /// Indices (0-based) of the braid generators sigma_i when the family is
    /// known; empty for custom presentations.
    std::vector<int> braid_generator_indices() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Artin braid group B_n: sigma_1..sigma_{n-1} with commuting relators
/// followed by braid relators.
Presentation artin_presentation(int strands);

/// B_n of the closed orientable surface of genus g (g = 0 is the sphere).
/// Generators a1,b1,...,ag,bg,s1,...,s{n-1}; relators grouped in the order
/// commuting, braid, c_i/sigma_j commuting, c_i sigma_1 c_i sigma_1,
/// a_i sigma_1 b_i, mixed-handle, surface relation.
Presentation closed_orientable(int genus, int strands);

/// One boundary component: the closed presentation without the surface
/// relation. g >= 1.
Presentation boundary_orientable(int genus, int strands);

/// B_n of the non-orientable surface U_g (connected sum of g projective
/// planes). Generators r1..rg, s1..s{n-1}.
Presentation nonorientable(int genus, int strands);

/// Class-2 quotient B_n(Sigma_g)/Gamma_3 on a1,b1,...,ag,bg,s; n >= 3.
Presentation class2_quotient_presentation(int genus, int strands);

/// The same shape with an arbitrary order for s: s^sigma_order = 1, all
/// generator pairs commute except (a_i, b_i), [a_i, b_i] = s^2.
Presentation class2_quotient_group(int genus, int sigma_order);

/// Quotient by extra relators (reduced; empty words dropped).
Presentation add_relators(const Presentation& p, const std::vector<Word>& extra);

/// Builds a family by its surface name (see Family::surface). Boundary
/// counts other than 1 are rejected as an unsupported family.
Presentation build_family(const std::string& surface, int genus, int strands, int boundaries = 1);

nlohmann::json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

} // namespace braidkit
