#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "braidkit/fpgroup.hpp"

namespace braidkit {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    mpz_class& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const mpz_class& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    void append_row(const std::vector<mpz_class>& row);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> data_;
};

struct SmithForm {
    IntMatrix diagonal;               // same shape as the input
    int rank = 0;
    std::vector<mpz_class> factors;   // nonzero diagonal entries > 1, in chain order
    std::optional<IntMatrix> left;    // U with diagonal = U * M * V
    std::optional<IntMatrix> right;   // V
};

/// Smith normal form by smallest-|entry| pivoting, scanning row-major.
/// Transforms are accumulated only when asked for.
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Z^free_rank + Z_{d1} + ... + Z_{dk}, d1 | d2 | ... | dk, every di >= 2.
class FgAbelianGroup {
  public:
    FgAbelianGroup() = default;

    /// Canonicalises arbitrary cyclic orders: 0 adds to the free rank, 1 is
    /// dropped, the rest are rewritten as an invariant-factor chain.
    FgAbelianGroup(int free_rank, const std::vector<mpz_class>& cyclic_orders);

    static FgAbelianGroup trivial() { return {}; }
    static FgAbelianGroup free(int rank) { return FgAbelianGroup(rank, {}); }
    static FgAbelianGroup cyclic(long order) { return FgAbelianGroup(0, {mpz_class(order)}); }

    int free_rank() const noexcept { return free_rank_; }
    const std::vector<mpz_class>& torsion() const noexcept { return torsion_; }
    bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const noexcept { return free_rank_ == 0; }
    /// Number of cyclic factors in the invariant-factor decomposition.
    int rank() const noexcept { return free_rank_ + static_cast<int>(torsion_.size()); }
    /// Order, or 0 when infinite.
    mpz_class order() const;

    /// Direct sum.
    friend FgAbelianGroup operator+(const FgAbelianGroup& a, const FgAbelianGroup& b);
    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

  private:
    int free_rank_ = 0;
    std::vector<mpz_class> torsion_;
};

std::string to_string(const FgAbelianGroup& a);
nlohmann::json to_json(const FgAbelianGroup& a);
FgAbelianGroup abelian_from_json(const nlohmann::json& j);

/// Relator exponent matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

/// Cokernel Z^cols / rowspace(m).
FgAbelianGroup cokernel(const IntMatrix& m);

FgAbelianGroup abelianization(const Presentation& p);

/// Whether some homomorphism a -> b is onto.
bool admits_epimorphism(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Minimal number of generators of the abelianization, a lower bound for
/// the group itself.
int min_generators_lower_bound(const Presentation& p);

nlohmann::json mpz_to_json(const mpz_class& z);
mpz_class mpz_from_json(const nlohmann::json& j);

} // namespace braidkit
