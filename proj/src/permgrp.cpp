#include "braidkit/permgrp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "braidkit/error.hpp"

namespace braidkit {

Permutation::Permutation(int degree) : img_(static_cast<std::size_t>(degree)) {
    if (degree < 0) throw InvalidInput("negative degree");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size());
    for (int x : img_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
            throw InvalidInput("image array is not a bijection");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::cycle(const std::vector<int>& points, int degree) {
    Permutation p(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree));
    for (std::size_t k = 0; k < points.size(); ++k) {
        const int a = points[k];
        if (a < 1 || a > degree) throw InvalidInput("point " + std::to_string(a) + " outside 1.." + std::to_string(degree));
        if (used[static_cast<std::size_t>(a - 1)]) throw InvalidInput("point " + std::to_string(a) + " repeated in cycle");
        used[static_cast<std::size_t>(a - 1)] = true;
        p.img_[static_cast<std::size_t>(a - 1)] = points[(k + 1) % points.size()] - 1;
    }
    return p;
}

Permutation Permutation::parse(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) {
        throw InvalidInput("cycle notation '" + text + "': " + why + " at offset " + std::to_string(i));
    };
    skip();
    if (i == text.size()) fail("empty string");
    while (i < text.size()) {
        if (text[i] != '(') fail("expected '('");
        ++i;
        std::vector<int> cyc;
        skip();
        while (i < text.size() && text[i] != ')') {
            skip();
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) fail("expected a point");
            cyc.push_back(std::stoi(text.substr(i, j - i)));
            i = j;
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip();
                if (i < text.size() && text[i] == ')') fail("dangling ','");
            }
        }
        if (i == text.size()) fail("unterminated cycle");
        ++i;
        skip();
        cycles.push_back(std::move(cyc));
    }
    std::vector<bool> used(static_cast<std::size_t>(std::max(degree, 0)));
    Permutation p(degree);
    for (const auto& cyc : cycles) {
        for (int a : cyc) {
            if (a < 1 || a > degree)
                throw InvalidInput("point " + std::to_string(a) + " outside 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(a - 1)]) throw InvalidInput("cycles of '" + text + "' are not disjoint");
            used[static_cast<std::size_t>(a - 1)] = true;
        }
        if (cyc.size() > 1) p = p * cycle(cyc, degree);
    }
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Permutation Permutation::pow(std::int64_t k) const {
    std::vector<int> out(img_.size());
    std::vector<bool> seen(img_.size());
    std::vector<int> cyc;
    for (std::size_t s = 0; s < img_.size(); ++s) {
        if (seen[s]) continue;
        cyc.clear();
        for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x);
        }
        const auto len = static_cast<std::int64_t>(cyc.size());
        const std::int64_t shift = ((k % len) + len) % len;
        for (std::int64_t t = 0; t < len; ++t)
            out[static_cast<std::size_t>(cyc[static_cast<std::size_t>(t)])] = cyc[static_cast<std::size_t>((t + shift) % len)];
    }
    return Permutation(std::move(out));
}

mpz_class Permutation::order() const {
    mpz_class l = 1;
    const CycleType t = cycle_type(*this);
    for (std::size_t k = 1; k < t.counts.size(); ++k)
        if (t.counts[k] > 0) {
            mpz_class kk = static_cast<unsigned long>(k);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kk.get_mpz_t());
        }
    return l;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> seen(img_.size());
    for (std::size_t s = 0; s < img_.size(); ++s) {
        if (seen[s] || img_[s] == static_cast<int>(s)) continue;
        out += '(';
        for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            if (x != static_cast<int>(s)) out += ',';
            out += std::to_string(x + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw InvalidInput("degree mismatch: " + std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
    Permutation r;
    r.img_.resize(p.img_.size());
    for (std::size_t i = 0; i < p.img_.size(); ++i) r.img_[i] = q.img_[static_cast<std::size_t>(p.img_[i])];
    return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
}

Permutation commutator(const Permutation& p, const Permutation& q) { return p.inverse() * q.inverse() * p * q; }

int CycleType::degree() const {
    int m = 0;
    for (std::size_t k = 1; k < counts.size(); ++k) m += static_cast<int>(k) * counts[k];
    return m;
}

std::string CycleType::to_string() const {
    std::string out;
    for (std::size_t k = 1; k < counts.size(); ++k)
        if (counts[k] > 0) out += "(" + std::to_string(k) + ")^" + std::to_string(counts[k]);
    return out.empty() ? "()" : out;
}

CycleType cycle_type(const Permutation& p) {
    CycleType t;
    t.counts.assign(static_cast<std::size_t>(p.degree()) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()));
    for (int s = 0; s < p.degree(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int len = 0;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
        }
        ++t.counts[static_cast<std::size_t>(len)];
    }
    return t;
}

mpz_class centralizer_order(const CycleType& t) {
    mpz_class total = 1;
    for (std::size_t k = 1; k < t.counts.size(); ++k) {
        const int l = t.counts[k];
        if (l < 0) throw InvalidInput("negative cycle multiplicity");
        if (l == 0) continue;
        mpz_class pk, fact;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(l));
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(l));
        total *= pk * fact;
    }
    return total;
}

namespace {

void check_degrees(const std::vector<Permutation>& gens, int m) {
    for (const auto& g : gens)
        if (g.degree() != m)
            throw InvalidInput("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                               std::to_string(m));
}

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        return true;
    }

  private:
    std::vector<int> parent_;
};

} // namespace

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int m) {
    check_degrees(gens, m);
    UnionFind uf(m);
    for (const auto& g : gens)
        for (int i = 0; i < m; ++i) uf.unite(i, g(i));
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < m; ++i) by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, pts] : by_root) out.push_back(std::move(pts));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_transitive(const std::vector<Permutation>& gens, int m) { return m <= 1 || orbits(gens, m).size() == 1; }

std::vector<int> minimal_block(const std::vector<Permutation>& gens, int m, const std::vector<int>& seed) {
    check_degrees(gens, m);
    if (seed.empty()) throw InvalidInput("empty block seed");
    UnionFind uf(m);
    std::deque<std::pair<int, int>> queue;
    for (std::size_t k = 1; k < seed.size(); ++k)
        if (uf.unite(seed[0], seed[k])) queue.emplace_back(seed[0], seed[k]);
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            const int c = uf.find(g(a)), d = uf.find(g(b));
            if (uf.unite(c, d)) queue.emplace_back(c, d);
        }
    }
    std::vector<int> block;
    const int root = uf.find(seed[0]);
    for (int i = 0; i < m; ++i)
        if (uf.find(i) == root) block.push_back(i);
    return block;
}

Primitivity is_primitive(const std::vector<Permutation>& gens, int m) {
    check_degrees(gens, m);
    if (m <= 2) return {true, std::nullopt};
    auto orb = orbits(gens, m);
    if (orb.size() > 1) return {false, orb.front()};
    std::optional<std::vector<int>> best;
    for (int b = 1; b < m; ++b) {
        auto block = minimal_block(gens, m, {0, b});
        if (static_cast<int>(block.size()) < m && (!best || block.size() < best->size())) best = std::move(block);
    }
    if (best) return {false, std::move(best)};
    return {true, std::nullopt};
}

std::vector<std::vector<int>> blocks_containing_first_point(const std::vector<Permutation>& gens, int m) {
    check_degrees(gens, m);
    std::set<std::vector<int>> found;
    for (int b = 1; b < m; ++b) {
        auto block = minimal_block(gens, m, {0, b});
        if (static_cast<int>(block.size()) < m) found.insert(std::move(block));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<std::vector<int>> current(found.begin(), found.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::vector<int> seed;
                std::set_union(current[i].begin(), current[i].end(), current[j].begin(), current[j].end(),
                               std::back_inserter(seed));
                auto block = minimal_block(gens, m, seed);
                if (static_cast<int>(block.size()) < m && found.insert(std::move(block)).second) grew = true;
            }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

bool is_block(const std::vector<Permutation>& gens, const std::vector<int>& block) {
    const std::set<int> start(block.begin(), block.end());
    std::set<std::vector<int>> seen{std::vector<int>(start.begin(), start.end())};
    std::vector<std::vector<int>> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        const std::vector<int> b = std::move(todo.back());
        todo.pop_back();
        for (const auto& g : gens) {
            std::vector<int> img;
            for (int x : b) img.push_back(g(x));
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) todo.push_back(std::move(img));
        }
    }
    // Orbit sets must be pairwise equal or disjoint.
    std::map<int, const std::vector<int>*> cover;
    for (const auto& b : seen)
        for (int x : b) {
            const auto [it, fresh] = cover.emplace(x, &b);
            if (!fresh && it->second != &b) return false;
        }
    return true;
}

std::size_t bound_from_env(std::size_t fallback) {
    if (const char* v = std::getenv("BRAIDKIT_BOUND"); v && *v) {
        char* end = nullptr;
        const double x = std::strtod(v, &end);
        if (end && *end == '\0' && x >= 1) return static_cast<std::size_t>(x);
        throw InvalidInput(std::string("BRAIDKIT_BOUND is not a positive number: ") + v);
    }
    return fallback;
}

std::vector<Permutation> closure(const std::vector<Permutation>& gens, int m, std::size_t bound) {
    check_degrees(gens, m);
    if (bound < 1) throw InvalidInput("closure bound must be >= 1");
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> out;
    std::deque<Permutation> frontier;
    auto add = [&](Permutation p) {
        if (seen.insert(p).second) {
            if (seen.size() > bound)
                throw BoundExceeded("group closure exceeded " + std::to_string(bound) + " elements");
            out.push_back(p);
            frontier.push_back(std::move(p));
        }
    };
    add(Permutation(m));
    while (!frontier.empty()) {
        Permutation x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) add(x * g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ElementTable::ElementTable(std::vector<Permutation> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw InvalidInput("a group has at least one element");
    const int m = elems_.front().degree();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i].degree() != m) throw InvalidInput("elements of mixed degree");
        if (!index_.emplace(elems_[i], i).second) throw InvalidInput("repeated element");
    }
    const auto id = index_of(Permutation(m));
    if (!id) throw InvalidInput("element set lacks the identity");
    identity_ = *id;
    // Closed iff a greedy generating set regenerates exactly this set.
    const auto gens = generators();
    const auto mask = subgroup(gens);
    if (std::count(mask.begin(), mask.end(), true) != static_cast<std::ptrdiff_t>(elems_.size()))
        throw InvalidInput("element set is not closed");
}

std::optional<std::size_t> ElementTable::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ElementTable::mul(std::size_t a, std::size_t b) const {
    auto r = index_of(elems_[a] * elems_[b]);
    if (!r) throw InvalidInput("element set is not closed under products");
    return *r;
}

std::size_t ElementTable::inv(std::size_t a) const {
    auto r = index_of(elems_[a].inverse());
    if (!r) throw InvalidInput("element set is not closed under inverses");
    return *r;
}

std::size_t ElementTable::comm(std::size_t a, std::size_t b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

std::size_t ElementTable::order_of(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

std::vector<bool> ElementTable::subgroup(const std::vector<std::size_t>& gens) const {
    std::vector<bool> in(elems_.size());
    std::vector<std::size_t> stack{identity_};
    in[identity_] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t g : gens) {
            const std::size_t y = mul(x, g);
            if (!in[y]) {
                in[y] = true;
                stack.push_back(y);
            }
        }
    }
    return in;
}

std::vector<bool> ElementTable::normal_closure(const std::vector<std::size_t>& gens,
                                               const std::vector<std::size_t>& over) const {
    std::vector<std::size_t> current = gens;
    std::vector<bool> mask = subgroup(current);
    for (;;) {
        bool grew = false;
        for (std::size_t h = 0; h < elems_.size() && !grew; ++h) {
            if (!mask[h]) continue;
            for (std::size_t x : over) {
                const std::size_t c = mul(mul(inv(x), h), x);
                if (!mask[c]) {
                    current.push_back(c);
                    mask = subgroup(current);
                    grew = true;
                    break;
                }
            }
        }
        if (!grew) return mask;
    }
}

std::vector<std::size_t> ElementTable::generators_of(const std::vector<bool>& target) const {
    std::vector<std::size_t> gens;
    std::vector<bool> have = subgroup(gens);
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (target[i] && !have[i]) {
            gens.push_back(i);
            have = subgroup(gens);
        }
    return gens;
}

std::vector<std::size_t> ElementTable::generators() const {
    return generators_of(std::vector<bool>(elems_.size(), true));
}

FgAbelianGroup abelian_invariants_from_orders(const std::vector<std::uint64_t>& orders) {
    const std::uint64_t n = orders.size();
    std::vector<mpz_class> cyclic;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; rest > 1; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        // s_k = log_p #{x : x^{p^k} = 1} = sum_i min(k, e_i)
        std::vector<int> s{0};
        std::uint64_t pk = 1;
        for (;;) {
            pk *= p;
            std::uint64_t count = 0;
            for (auto o : orders)
                if (pk % o == 0) ++count;
            int e = 0;
            while (count > 1) {
                count /= p;
                ++e;
            }
            if (e == s.back()) break;
            s.push_back(e);
        }
        // #{i : e_i >= k} = s_k - s_{k-1}
        for (std::size_t k = 1; k < s.size(); ++k) {
            const int at_least_k = s[k] - s[k - 1];
            const int at_least_next = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
            mpz_class pp;
            mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
            for (int c = 0; c < at_least_k - at_least_next; ++c) cyclic.push_back(pp);
        }
    }
    return FgAbelianGroup(0, cyclic);
}

FgAbelianGroup abelianization_of(const ElementTable& g, const std::vector<bool>& subgroup) {
    const auto gens = g.generators_of(subgroup);
    std::vector<std::size_t> comms;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) comms.push_back(g.comm(gens[a], gens[b]));
    const std::vector<bool> derived = g.normal_closure(comms, gens);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (derived[i]) members.push_back(i);
    std::vector<bool> assigned(g.size());
    std::vector<std::uint64_t> orders;
    for (std::size_t h = 0; h < g.size(); ++h) {
        if (!subgroup[h] || assigned[h]) continue;
        for (std::size_t d : members) assigned[g.mul(d, h)] = true;
        std::uint64_t k = 1;
        for (std::size_t x = h; !derived[x]; x = g.mul(x, h)) ++k;
        orders.push_back(k);
    }
    return abelian_invariants_from_orders(orders);
}

FiniteGroupInvariants finite_group_invariants(const std::vector<Permutation>& elements) {
    const ElementTable g(elements);
    FiniteGroupInvariants out;
    out.order = g.size();
    const std::vector<bool> all(g.size(), true);
    out.abelianization = abelianization_of(g, all);
    const auto gens = g.generators();
    std::vector<bool> term = all;
    out.lcs_orders.push_back(g.size());
    while (out.lcs_orders.back() > 1) {
        std::vector<std::size_t> comms;
        for (std::size_t h = 0; h < g.size(); ++h)
            if (term[h])
                for (std::size_t x : gens) comms.push_back(g.comm(x, h));
        std::sort(comms.begin(), comms.end());
        comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
        term = g.normal_closure(comms, gens);
        const auto size = static_cast<std::size_t>(std::count(term.begin(), term.end(), true));
        const bool repeated = size == out.lcs_orders.back();
        out.lcs_orders.push_back(size);
        if (repeated) break;
    }
    return out;
}

} // namespace braidkit
