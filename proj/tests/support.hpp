#pragma once

#include <random>
#include <vector>

#include <gmpxx.h>

#include "braidkit/fpgroup.hpp"
#include "braidkit/permgrp.hpp"
#include "braidkit/zlinalg.hpp"

namespace bk = braidkit;

inline bk::FgAbelianGroup ab(int free_rank, std::vector<long> torsion = {}) {
    std::vector<mpz_class> t(torsion.begin(), torsion.end());
    return bk::FgAbelianGroup(free_rank, t);
}

inline bk::Permutation perm(const char* cycles, int degree) { return bk::Permutation::parse(cycles, degree); }

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline std::vector<int> random_letters(int alphabet, int length) {
    std::vector<int> out;
    for (int i = 0; i < length; ++i) {
        const int g = uniform(1, alphabet);
        out.push_back(uniform(0, 1) ? g : -g);
    }
    return out;
}

// Surface families in the builder grid: (surface, genus, strands).
struct GridPoint {
    const char* surface;
    int genus;
    int strands;
};

inline std::vector<GridPoint> builder_grid(int max_genus, int max_strands) {
    std::vector<GridPoint> out;
    for (int n = 1; n <= max_strands; ++n) {
        for (int g = 0; g <= max_genus; ++g) out.push_back({"closed-orientable", g, n});
        for (int g = 1; g <= max_genus; ++g) {
            out.push_back({"boundary-orientable", g, n});
            out.push_back({"nonorientable", g, n});
        }
        out.push_back({"artin", 0, n});
    }
    return out;
}
