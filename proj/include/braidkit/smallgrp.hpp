#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/permgrp.hpp"

namespace braidkit {

/// A finite group given by a faithful permutation model: its generators and
/// the sorted list of all elements.
struct FiniteGroup {
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    static FiniteGroup generated_by(const std::vector<Permutation>& gens, int degree);

    std::size_t order() const noexcept { return elements.size(); }
    int degree() const noexcept { return elements.empty() ? 0 : elements.front().degree(); }
};

FiniteGroup symmetric_group(int m);
FiniteGroup cyclic_group(int n);
/// Symmetries of a k-gon, order 2k.
FiniteGroup dihedral_group(int k);

/// Dic_{4n} = <x, y | x^{2n}, x^n = y^2, y x y^-1 = x^-1>, in its right
/// regular representation on 4n points (x^a y^b is point a + 2n b).
FiniteGroup dicyclic(int n);
/// Order 12: s = (1,2,3) inverted by t = (1,2)(4,5,6,7) of order 4.
FiniteGroup z3_semidirect_z4();

std::size_t center_order(const FiniteGroup& g);
std::size_t count_elements_of_order(const FiniteGroup& g, std::size_t k);

/// |G| = 2k, k >= 2, with r of order k and an involution s outside <r>
/// such that s r s = r^-1. The Klein four group qualifies.
bool is_dihedral(const FiniteGroup& g);

/// G / <normal_gens>; InvalidInput unless that subgroup is normal. The model
/// is the action on right cosets.
FiniteGroup quotient(const FiniteGroup& g, const std::vector<Permutation>& normal_gens);

struct SubgroupFilter {
    std::optional<std::size_t> order;       // exact order
    std::optional<std::size_t> min_order;
    bool dihedral = false;
};

inline constexpr std::size_t kSubgroupScanLimit = 10'000;

/// All subgroups passing the filter, sorted by order then elements.
std::vector<FiniteGroup> subgroup_scan(const FiniteGroup& g, const SubgroupFilter& filter);

/// Z x Z with (a, b)(c, d) = (a + (-1)^b c, b + d).
struct KleinElement {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const KleinElement&, const KleinElement&) = default;
};

KleinElement klein_mul(const KleinElement& x, const KleinElement& y);
KleinElement klein_inv(const KleinElement& x);
/// x y x y == y^-1 x y x
bool klein_relation_holds(const KleinElement& x, const KleinElement& y);

struct KleinScan {
    int radius = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t solutions = 0;
    std::vector<std::pair<KleinElement, KleinElement>> nontrivial;   // solutions with y != identity
};

KleinScan klein_relation_scan(int radius);

} // namespace braidkit
