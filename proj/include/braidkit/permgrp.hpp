#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "braidkit/zlinalg.hpp"

namespace braidkit {

/// A permutation of {0, ..., m-1}. Products apply left to right:
/// (p * q)(i) = q(p(i)). Text I/O uses 1-based cycle notation.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(int degree);                 // identity
    explicit Permutation(std::vector<int> images);    // 0-based image array

    static Permutation parse(const std::string& cycles, int degree);
    static Permutation cycle(const std::vector<int>& points_one_based, int degree);

    int degree() const noexcept { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const noexcept { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    Permutation pow(std::int64_t k) const;
    mpz_class order() const;

    /// 1-based cycles, fixed points omitted, "()" for the identity.
    std::string to_string() const;

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

/// [p, q] = p^-1 q^-1 p q.
Permutation commutator(const Permutation& p, const Permutation& q);

/// counts[k] = number of k-cycles, k = 1..m (counts[0] unused).
struct CycleType {
    std::vector<int> counts;

    int degree() const;
    std::string to_string() const;   // "(1)^2(3)^1"
    friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);

/// |C_{S_m}(u)| for u of the given type: prod k^{l_k} l_k!.
mpz_class centralizer_order(const CycleType& t);

/// Orbits of <gens> on {0..m-1}, each sorted, ordered by least point.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int m);

bool is_transitive(const std::vector<Permutation>& gens, int m);

/// Smallest block of <gens> containing all of `seed` (union-find closure).
/// Meaningful for transitive groups.
std::vector<int> minimal_block(const std::vector<Permutation>& gens, int m, const std::vector<int>& seed);

struct Primitivity {
    bool primitive = false;
    std::optional<std::vector<int>> witness;   // 0-based; a nontrivial block or an orbit
};

/// Degree <= 2 counts as primitive; intransitive groups are imprimitive with
/// the orbit of point 0 as witness.
Primitivity is_primitive(const std::vector<Permutation>& gens, int m);

/// Every block of a transitive <gens> containing point 0, other than {0}
/// and the whole set; sorted by size then lexicographically.
std::vector<std::vector<int>> blocks_containing_first_point(const std::vector<Permutation>& gens, int m);

/// Whether every image of `block` under <gens> is equal to it or disjoint
/// from it (checked on the orbit of the set, not just generator images).
bool is_block(const std::vector<Permutation>& gens, const std::vector<int>& block);

inline constexpr std::size_t kDefaultClosureBound = 1'000'000;

/// Reads BRAIDKIT_BOUND when set, otherwise `fallback`.
std::size_t bound_from_env(std::size_t fallback);

/// All elements of <gens>, sorted; BoundExceeded past `bound` elements.
std::vector<Permutation> closure(const std::vector<Permutation>& gens, int m,
                                 std::size_t bound = kDefaultClosureBound);

/// A closed set of permutations with index lookup.
class ElementTable {
  public:
    /// Throws InvalidInput unless the set is a group.
    explicit ElementTable(std::vector<Permutation> elements);

    std::size_t size() const noexcept { return elems_.size(); }
    int degree() const noexcept { return elems_.empty() ? 0 : elems_.front().degree(); }
    const Permutation& at(std::size_t i) const { return elems_[i]; }
    const std::vector<Permutation>& elements() const noexcept { return elems_; }
    std::optional<std::size_t> index_of(const Permutation& p) const;
    std::size_t identity() const noexcept { return identity_; }

    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const;
    std::size_t comm(std::size_t a, std::size_t b) const;   // a^-1 b^-1 a b
    std::size_t order_of(std::size_t a) const;

    /// Elements of the subgroup generated by `gens`, as a membership mask.
    std::vector<bool> subgroup(const std::vector<std::size_t>& gens) const;
    /// Normal closure of `gens` under conjugation by `over` (a generating set of the ambient group).
    std::vector<bool> normal_closure(const std::vector<std::size_t>& gens, const std::vector<std::size_t>& over) const;

    /// A small generating set found greedily, in index order.
    std::vector<std::size_t> generators() const;
    std::vector<std::size_t> generators_of(const std::vector<bool>& mask) const;

  private:
    std::vector<Permutation> elems_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
    std::size_t identity_ = 0;
};

/// Abelian invariants of a finite abelian group given by element-order counts.
FgAbelianGroup abelian_invariants_from_orders(const std::vector<std::uint64_t>& element_orders);

struct FiniteGroupInvariants {
    std::size_t order = 0;
    FgAbelianGroup abelianization;
    std::vector<std::size_t> lcs_orders;   // |Gamma_1|, |Gamma_2|, ... until it repeats or reaches 1
};

FiniteGroupInvariants finite_group_invariants(const std::vector<Permutation>& elements);

/// G / [G, G] of a subgroup mask inside a table.
FgAbelianGroup abelianization_of(const ElementTable& g, const std::vector<bool>& subgroup);

} // namespace braidkit
