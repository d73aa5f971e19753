#include "braidkit/smallgrp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "braidkit/error.hpp"

namespace braidkit {

FiniteGroup FiniteGroup::generated_by(const std::vector<Permutation>& gens, int degree) {
    return FiniteGroup{gens, closure(gens, degree)};
}

FiniteGroup symmetric_group(int m) {
    if (m < 1) throw InvalidInput("degree must be >= 1");
    std::vector<Permutation> gens;
    if (m >= 2) {
        gens.push_back(Permutation::cycle({1, 2}, m));
        std::vector<int> all(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) all[static_cast<std::size_t>(i)] = i + 1;
        gens.push_back(Permutation::cycle(all, m));
    }
    return FiniteGroup::generated_by(gens, m);
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw InvalidInput("order must be >= 1");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return FiniteGroup::generated_by({Permutation::cycle(all, n)}, n);
}

FiniteGroup dihedral_group(int k) {
    if (k < 2) throw InvalidInput("dihedral group needs k >= 2");
    std::vector<int> rot(static_cast<std::size_t>(k)), ref(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        rot[static_cast<std::size_t>(i)] = (i + 1) % k;
        ref[static_cast<std::size_t>(i)] = (k - i) % k;
    }
    if (k == 2) {
        // Klein four acting regularly.
        return FiniteGroup::generated_by({Permutation::parse("(1,2)(3,4)", 4), Permutation::parse("(1,3)(2,4)", 4)}, 4);
    }
    return FiniteGroup::generated_by({Permutation(rot), Permutation(ref)}, k);
}

FiniteGroup dicyclic(int n) {
    if (n < 2) throw InvalidInput("dicyclic parameter must be >= 2");
    const int two_n = 2 * n, size = 4 * n;
    auto index = [&](int a, int b) { return ((a % two_n) + two_n) % two_n + two_n * b; };
    auto times = [&](int a1, int b1, int a2, int b2) {
        if (b1 == 0) return index(a1 + a2, b2);
        if (b2 == 0) return index(a1 - a2, 1);
        return index(a1 - a2 + n, 0);   // y^2 = x^n
    };
    std::vector<int> x(static_cast<std::size_t>(size)), y(static_cast<std::size_t>(size));
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < two_n; ++a) {
            x[static_cast<std::size_t>(index(a, b))] = times(a, b, 1, 0);
            y[static_cast<std::size_t>(index(a, b))] = times(a, b, 0, 1);
        }
    return FiniteGroup::generated_by({Permutation(x), Permutation(y)}, size);
}

FiniteGroup z3_semidirect_z4() {
    return FiniteGroup::generated_by({Permutation::parse("(1,2,3)", 7), Permutation::parse("(1,2)(4,5,6,7)", 7)}, 7);
}

std::size_t center_order(const FiniteGroup& g) {
    std::size_t count = 0;
    for (const auto& z : g.elements) {
        bool central = true;
        for (const auto& s : g.generators)
            if (z * s != s * z) {
                central = false;
                break;
            }
        count += central;
    }
    return count;
}

std::size_t count_elements_of_order(const FiniteGroup& g, std::size_t k) {
    std::size_t count = 0;
    for (const auto& e : g.elements)
        if (e.order() == static_cast<unsigned long>(k)) ++count;
    return count;
}

bool is_dihedral(const FiniteGroup& g) {
    const std::size_t n = g.order();
    if (n < 4 || n % 2 != 0) return false;
    const std::size_t k = n / 2;
    for (const auto& r : g.elements) {
        if (r.order() != static_cast<unsigned long>(k)) continue;
        std::set<Permutation> cyc;
        for (std::size_t i = 0; i < k; ++i) cyc.insert(r.pow(static_cast<std::int64_t>(i)));
        const Permutation r_inv = r.inverse();
        for (const auto& s : g.elements) {
            if (s.order() != 2 || cyc.count(s)) continue;
            if (s * r * s == r_inv) return true;
        }
    }
    return false;
}

FiniteGroup quotient(const FiniteGroup& g, const std::vector<Permutation>& normal_gens) {
    const ElementTable t(g.elements);
    std::vector<std::size_t> hg;
    for (const auto& p : normal_gens) {
        auto i = t.index_of(p);
        if (!i) throw InvalidInput("quotient generator " + p.to_string() + " is not in the group");
        hg.push_back(*i);
    }
    const std::vector<bool> h = t.subgroup(hg);
    for (std::size_t e = 0; e < t.size(); ++e) {
        if (!h[e]) continue;
        for (const auto& s : g.generators) {
            const std::size_t si = *t.index_of(s);
            if (!h[t.mul(t.mul(t.inv(si), e), si)]) throw InvalidInput("subgroup is not normal");
        }
    }
    std::vector<std::size_t> members;
    for (std::size_t e = 0; e < t.size(); ++e)
        if (h[e]) members.push_back(e);
    std::vector<int> coset(t.size(), -1);
    std::vector<std::size_t> reps;
    for (std::size_t e = 0; e < t.size(); ++e) {
        if (coset[e] >= 0) continue;
        for (std::size_t d : members) coset[t.mul(d, e)] = static_cast<int>(reps.size());
        reps.push_back(e);
    }
    const int m = static_cast<int>(reps.size());
    std::vector<Permutation> gens;
    for (const auto& s : g.generators) {
        const std::size_t si = *t.index_of(s);
        std::vector<int> img(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c) img[static_cast<std::size_t>(c)] = coset[t.mul(reps[static_cast<std::size_t>(c)], si)];
        gens.emplace_back(std::move(img));
    }
    return FiniteGroup::generated_by(gens, m);
}

std::vector<FiniteGroup> subgroup_scan(const FiniteGroup& g, const SubgroupFilter& filter) {
    if (g.order() > kSubgroupScanLimit)
        throw BoundExceeded("subgroup scan is limited to groups of order " + std::to_string(kSubgroupScanLimit));
    const ElementTable t(g.elements);
    const auto size_of = [](const std::vector<bool>& m) {
        return static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
    };
    std::set<std::vector<bool>> all;
    std::vector<std::pair<std::size_t, std::vector<bool>>> cyclic;   // generator, subgroup
    for (std::size_t e = 0; e < t.size(); ++e) {
        auto m = t.subgroup({e});
        if (all.insert(m).second) cyclic.emplace_back(e, std::move(m));
    }
    std::vector<std::vector<bool>> frontier(all.begin(), all.end());
    // Every subgroup is a join of cyclic ones; grow joins one cyclic factor at a time.
    while (!frontier.empty()) {
        std::vector<std::vector<bool>> next;
        for (const auto& s : frontier) {
            if (filter.order && size_of(s) >= *filter.order) continue;
            const auto sg = t.generators_of(s);
            for (const auto& cyc : cyclic) {
                if (s[cyc.first]) continue;
                auto gens = sg;
                gens.push_back(cyc.first);
                auto joined = t.subgroup(gens);
                if (all.insert(joined).second) next.push_back(std::move(joined));
            }
        }
        frontier = std::move(next);
    }
    std::vector<FiniteGroup> out;
    for (const auto& m : all) {
        const std::size_t n = size_of(m);
        if (filter.order && n != *filter.order) continue;
        if (filter.min_order && n < *filter.min_order) continue;
        FiniteGroup sub;
        for (std::size_t e : t.generators_of(m)) sub.generators.push_back(t.at(e));
        for (std::size_t e = 0; e < t.size(); ++e)
            if (m[e]) sub.elements.push_back(t.at(e));
        std::sort(sub.elements.begin(), sub.elements.end());
        if (filter.dihedral && !is_dihedral(sub)) continue;
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

KleinElement klein_mul(const KleinElement& x, const KleinElement& y) {
    const std::int64_t sign = (x.b % 2 == 0) ? 1 : -1;
    return {x.a + sign * y.a, x.b + y.b};
}

KleinElement klein_inv(const KleinElement& x) {
    const std::int64_t sign = (x.b % 2 == 0) ? 1 : -1;
    return {-sign * x.a, -x.b};
}

bool klein_relation_holds(const KleinElement& x, const KleinElement& y) {
    const KleinElement xy = klein_mul(x, y);
    const KleinElement lhs = klein_mul(xy, xy);
    const KleinElement rhs = klein_mul(klein_mul(klein_inv(y), xy), x);
    return lhs == rhs;
}

KleinScan klein_relation_scan(int radius) {
    if (radius < 1) throw InvalidInput("scan radius must be >= 1");
    KleinScan out;
    out.radius = radius;
    for (std::int64_t a = -radius; a <= radius; ++a)
        for (std::int64_t b = -radius; b <= radius; ++b)
            for (std::int64_t c = -radius; c <= radius; ++c)
                for (std::int64_t d = -radius; d <= radius; ++d) {
                    ++out.pairs_checked;
                    const KleinElement x{a, b}, y{c, d};
                    if (!klein_relation_holds(x, y)) continue;
                    ++out.solutions;
                    if (c != 0 || d != 0) out.nontrivial.emplace_back(x, y);
                }
    return out;
}

} // namespace braidkit
