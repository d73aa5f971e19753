#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braidkit/fpgroup.hpp"
#include "braidkit/permgrp.hpp"

namespace braidkit {

/// Images in S_degree of the generators of some presentation, in its
/// generator order.
struct GeneratorAssignment {
    int degree = 0;
    std::vector<Permutation> images;

    friend bool operator==(const GeneratorAssignment&, const GeneratorAssignment&) = default;
};

nlohmann::json to_json(const GeneratorAssignment& a, const Presentation& p);
GeneratorAssignment assignment_from_json(const nlohmann::json& j, const Presentation& p);

/// Image of a word under the assignment (left-to-right products).
Permutation evaluate(const Word& w, const GeneratorAssignment& a);

struct Verification {
    bool ok = true;
    int failing_relator = 0;   // 1-based; 0 when ok
};

Verification verify_hom(const Presentation& p, const GeneratorAssignment& a);

struct HomClassification {
    bool valid = false;
    std::size_t image_order = 0;
    bool abelian = false;
    bool cyclic = false;
    bool transitive = false;
    bool primitive = false;
    bool surjective = false;                 // image is all of S_m
    std::optional<std::vector<int>> block;   // 0-based witness when not primitive
};

/// InvalidInput naming the failing relator when the assignment is not a
/// homomorphism; BoundExceeded if the image closure passes `bound`.
HomClassification classify_hom(const Presentation& p, const GeneratorAssignment& a,
                               std::size_t bound = kDefaultClosureBound);

nlohmann::json to_json(const HomClassification& c);

/// Conjunction of image properties; parsed from a comma list of
/// any, transitive, primitive, imprimitive, surjective, abelian, nonabelian, cyclic.
struct HomFilter {
    bool transitive = false;
    bool primitive = false;
    bool imprimitive = false;
    bool surjective = false;
    bool abelian = false;
    bool nonabelian = false;
    bool cyclic = false;

    static HomFilter parse(const std::string& text);
    std::string to_string() const;
};

struct SearchOptions {
    HomFilter filter;
    std::size_t max_representatives = 5;
    int threads = 1;
    double bound = 1e10;   // cap on |S_m|^generators; BRAIDKIT_BOUND overrides
};

struct Census {
    std::uint64_t count = 0;
    std::vector<GeneratorAssignment> representatives;   // lexicographically smallest image tuples
};

nlohmann::json to_json(const Census& c, const Presentation& p);

inline constexpr int kMaxSearchDegree = 8;

/// Counts homomorphisms P -> S_m passing the filter.
Census enumerate_homs(const Presentation& p, int m, const SearchOptions& options = {});

/// Calls `visit` on every homomorphism passing the filter, in search order.
/// Returning false from `visit` stops the search.
void for_each_hom(const Presentation& p, int m, const HomFilter& filter,
                  const std::function<bool(const GeneratorAssignment&)>& visit, double bound = 1e10);

/// Block-diagonal sum; summands must have equal generator counts.
GeneratorAssignment direct_sum(const std::vector<GeneratorAssignment>& parts);

/// Assignment of the class-2 quotient generators (a_i, b_i, s) pulled back
/// to closed_orientable(genus, strands): every sigma_j goes to the image of s.
GeneratorAssignment through_projection(const GeneratorAssignment& quotient, int genus, int strands);

/// Genus-1 example in S_8: a1 -> (1,3)(2,4), b1 -> (1,5)(2,6)(3,7)(4,8),
/// s -> (1,2,3,4)(5,6,7,8). Over the class-2 quotient generators.
GeneratorAssignment exo1_assignment();
/// Genus 3 in S_32 (needs strands even).
GeneratorAssignment theta3_assignment();
/// Genus 2 in S_16 (needs strands odd).
GeneratorAssignment theta21_assignment();
/// Genus 1 in S_{2n^2}: n blocks of 2n points; a1 rotates block k by 2k,
/// b1 moves block k to block k-1, s rotates every block by 1.
GeneratorAssignment exo2_assignment(int n);
/// direct_sum of exo2 for n = 3, 5, 7, 11, degree 408.
GeneratorAssignment remark1_assignment();

} // namespace braidkit
