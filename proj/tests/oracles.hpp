#pragma once

// Brute-force reference computations shared by the unit suites and the
// acceptance runner.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "braidkit/nilq.hpp"
#include "braidkit/permgrp.hpp"
#include "braidkit/zlinalg.hpp"
#include "support.hpp"

namespace oracle {

inline mpz_class det(std::vector<std::vector<mpz_class>> a) {
    // Bareiss fraction-free elimination.
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void subsets(int n, int k, std::vector<int>& cur, int from, const std::function<void(const std::vector<int>&)>& f) {
    if (static_cast<int>(cur.size()) == k) return f(cur);
    for (int i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, cur, i + 1, f);
        cur.pop_back();
    }
}

// gcd of all k x k minors.
inline mpz_class minor_gcd(const bk::IntMatrix& m, int k) {
    mpz_class g = 0;
    std::vector<int> rs, cs;
    subsets(m.rows(), k, rs, 0, [&](const std::vector<int>& rows) {
        subsets(m.cols(), k, cs, 0, [&](const std::vector<int>& cols) {
            std::vector<std::vector<mpz_class>> sub(static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (int c : cols) sub[i].push_back(m(rows[i], c));
            const mpz_class d = det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

inline mpz_class square_det(const bk::IntMatrix& m) {
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(i)].push_back(m(i, j));
    return det(a);
}

inline bk::IntMatrix random_matrix(int rows, int cols, int bound = 9) {
    bk::IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
    return m;
}

// Failures of the Smith form of m against the minor-gcd characterisation,
// the divisibility chain, and U M V = D with unimodular U, V.
inline int snf_defects(const bk::IntMatrix& m) {
    const auto s = bk::smith_normal_form(m, true);
    int bad = 0;
    const int k_max = std::min(m.rows(), m.cols());
    mpz_class running = 1;
    int rank = 0;
    for (int k = 1; k <= k_max; ++k) {
        const mpz_class dk = s.diagonal(k - 1, k - 1);
        if (dk < 0) ++bad;
        if (k > 1 && dk != 0 && !mpz_divisible_p(dk.get_mpz_t(), s.diagonal(k - 2, k - 2).get_mpz_t())) ++bad;
        running *= dk;
        if (running != minor_gcd(m, k)) ++bad;
        rank += dk != 0;
    }
    if (rank != s.rank) ++bad;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && s.diagonal(i, j) != 0) ++bad;
    if (!s.left || !s.right) return bad + 1;
    if (*s.left * m * *s.right != s.diagonal) ++bad;
    if (abs(square_det(*s.left)) != 1 || abs(square_det(*s.right)) != 1) ++bad;
    return bad;
}

// Finite abelian group Z_{o_1} + ... + Z_{o_k}, elements numbered in mixed radix.
struct Finite {
    std::vector<int> orders;
    int size = 1;
    std::vector<int> sum;   // size x size addition table

    explicit Finite(std::vector<int> o) : orders(std::move(o)) {
        for (int x : orders) size *= x;
        sum.resize(static_cast<std::size_t>(size * size));
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y) {
                auto a = digits(x), b = digits(y);
                for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
                sum[static_cast<std::size_t>(x * size + y)] = index(a);
            }
    }
    std::vector<int> digits(int e) const {
        std::vector<int> d;
        for (int o : orders) {
            d.push_back(e % o);
            e /= o;
        }
        return d;
    }
    int index(const std::vector<int>& d) const {
        int e = 0;
        for (std::size_t i = orders.size(); i-- > 0;) e = e * orders[i] + ((d[i] % orders[i]) + orders[i]) % orders[i];
        return e;
    }
    int add(int x, int y) const { return sum[static_cast<std::size_t>(x * size + y)]; }
    int times(int k, int x) const {
        int y = 0;
        for (int i = 0; i < k; ++i) y = add(y, x);
        return y;
    }
};

// Enumerates homomorphisms from Z_{source_1} + ... (generator images killed
// by the source orders) and reports whether one is onto.
inline bool surjects(const std::vector<int>& source, const Finite& target) {
    std::vector<int> tail(source.size() + 1, 1);
    for (std::size_t i = source.size(); i-- > 0;) tail[i] = tail[i + 1] * source[i];
    std::function<bool(std::size_t, const std::vector<char>&, int)> go = [&](std::size_t i, const std::vector<char>& sub, int sub_size) {
        if (sub_size == target.size) return true;
        if (i == source.size() || static_cast<long>(sub_size) * tail[i] < target.size) return false;
        for (int x = 0; x < target.size; ++x) {
            if (target.times(source[i], x) != 0) continue;
            std::vector<char> next = sub;
            int count = sub_size;
            for (int h = 0; h < target.size; ++h) {
                if (!sub[static_cast<std::size_t>(h)]) continue;
                int y = h;
                for (int k = 1; k < source[i]; ++k) {
                    y = target.add(y, x);
                    if (!next[static_cast<std::size_t>(y)]) {
                        next[static_cast<std::size_t>(y)] = 1;
                        ++count;
                    }
                }
            }
            if (go(i + 1, next, count)) return true;
        }
        return false;
    };
    std::vector<char> trivial(static_cast<std::size_t>(target.size), 0);
    trivial[0] = 1;
    return go(0, trivial, 1);
}

// Invariant-factor chains of every finite abelian group of order <= max_order.
inline std::vector<std::vector<int>> abelian_chains(int max_order) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int product) {
        out.push_back(cur);
        for (int d = 2; product * d <= max_order; ++d) {
            if (!cur.empty() && d % cur.back() != 0) continue;
            cur.push_back(d);
            go(product * d);
            cur.pop_back();
        }
    };
    go(1);
    return out;
}

inline bk::FgAbelianGroup finite_abelian(const std::vector<int>& chain) {
    return ab(0, std::vector<long>(chain.begin(), chain.end()));
}

// Disagreements of admits_epimorphism with enumeration over all pairs.
inline int epimorphism_mismatches(int max_order, int* pairs = nullptr) {
    const auto groups = abelian_chains(max_order);
    std::vector<Finite> models;
    for (const auto& g : groups) models.emplace_back(g);
    int bad = 0;
    for (const auto& a : groups)
        for (std::size_t b = 0; b < groups.size(); ++b)
            if (bk::admits_epimorphism(finite_abelian(a), finite_abelian(groups[b])) != surjects(a, models[b])) ++bad;
    if (pairs) *pairs = static_cast<int>(groups.size() * groups.size());
    return bad;
}

// Lyndon words of length w over n letters, by enumeration.
inline std::int64_t lyndon_count(int n, int w) {
    if (n == 0) return 0;
    std::int64_t count = 0;
    std::vector<int> word(static_cast<std::size_t>(w), 0);
    while (true) {
        bool lyndon = true;
        for (int r = 1; r < w && lyndon; ++r) {
            std::vector<int> rot(word.begin() + r, word.end());
            rot.insert(rot.end(), word.begin(), word.begin() + r);
            if (!(word < rot)) lyndon = false;
        }
        count += lyndon;
        int i = w - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == n - 1) word[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    return count;
}

inline int witt_mismatches(int max_n, int max_w) {
    int bad = 0;
    for (int n = 0; n <= max_n; ++n)
        for (int w = 1; w <= max_w; ++w)
            if (bk::free_layer_rank(n, w) != lyndon_count(n, w) || bk::HallBasis(n).size(w) != lyndon_count(n, w)) ++bad;
    return bad;
}

inline std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<std::vector<int>> all;
    std::vector<int> a(static_cast<std::size_t>(m));
    std::iota(a.begin(), a.end(), 0);
    do all.push_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return all;
}

// Elements u of S_m whose centralizer order disagrees with a count over S_m.
inline std::vector<std::vector<int>> centralizer_mismatches(int m) {
    const auto all = all_permutations(m);
    std::vector<std::vector<int>> bad;
    for (const auto& u : all) {
        unsigned long count = 0;
        for (const auto& v : all) {
            bool commute = true;
            for (std::size_t i = 0; i < u.size() && commute; ++i)
                commute = u[static_cast<std::size_t>(v[i])] == v[static_cast<std::size_t>(u[i])];
            count += commute;
        }
        if (bk::centralizer_order(bk::cycle_type(bk::Permutation(u))) != count) bad.push_back(u);
    }
    return bad;
}

} // namespace oracle
