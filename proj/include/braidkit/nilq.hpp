#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "braidkit/fpgroup.hpp"
#include "braidkit/zlinalg.hpp"

namespace braidkit {

/// Basic commutators of weight <= 3 on n generators (0-based indices).
struct HallBasis {
    int n = 0;
    std::vector<std::pair<int, int>> weight2;   // (j, i) = [x_j, x_i], j > i
    std::vector<std::array<int, 3>> weight3;    // (j, i, k) = [[x_j, x_i], x_k], j > i, k >= i

    explicit HallBasis(int generators);

    int size(int weight) const;
};

/// Witt necklace count: rank of the weight-w layer of a free group of rank n.
std::int64_t free_layer_rank(int n, int weight);

/// G / Gamma_{c+1}(G) for G = <X | R>, summarised by its layers.
struct NilpotentQuotient {
    int nilpotency_class = 0;
    std::vector<IntMatrix> lattices;       // lattices[w-1]: relation rows over the weight-w basis
    std::vector<FgAbelianGroup> layers;    // layers[w-1] = Gamma_w / Gamma_{w+1}
};

/// Class c in {1, 2, 3}.
NilpotentQuotient nilpotent_quotient(const Presentation& p, int nilpotency_class);

/// Gamma_i(G) / Gamma_{i+1}(G), i in {1, 2, 3}.
FgAbelianGroup lcs_layer(const Presentation& p, int i);

} // namespace braidkit
