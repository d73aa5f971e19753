#include "braidkit/homsearch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "braidkit/error.hpp"

namespace braidkit {

nlohmann::json to_json(const GeneratorAssignment& a, const Presentation& p) {
    if (static_cast<int>(a.images.size()) != p.generator_count())
        throw InvalidInput("assignment has " + std::to_string(a.images.size()) + " images for " +
                           std::to_string(p.generator_count()) + " generators");
    nlohmann::json images = nlohmann::json::object();
    for (std::size_t i = 0; i < a.images.size(); ++i) images[p.generators[i]] = a.images[i].to_string();
    return {{"degree", a.degree}, {"images", images}};
}

GeneratorAssignment assignment_from_json(const nlohmann::json& j, const Presentation& p) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("images") || !j["images"].is_object())
        throw InvalidInput("assignment JSON needs 'degree' and an 'images' object");
    if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 1)
        throw InvalidInput("assignment degree must be a positive integer");
    GeneratorAssignment a;
    a.degree = j["degree"].get<int>();
    const auto& images = j["images"];
    for (auto it = images.begin(); it != images.end(); ++it)
        if (std::find(p.generators.begin(), p.generators.end(), it.key()) == p.generators.end())
            throw InvalidInput("assignment names unknown generator '" + it.key() + "'");
    for (const auto& name : p.generators) {
        if (!images.contains(name)) throw InvalidInput("assignment lacks an image for '" + name + "'");
        if (!images[name].is_string()) throw InvalidInput("image of '" + name + "' must be a cycle string");
        a.images.push_back(Permutation::parse(images[name].get<std::string>(), a.degree));
    }
    return a;
}

namespace {

void check_arity(const Presentation& p, const GeneratorAssignment& a) {
    if (static_cast<int>(a.images.size()) != p.generator_count())
        throw InvalidInput("assignment has " + std::to_string(a.images.size()) + " images, presentation has " +
                           std::to_string(p.generator_count()) + " generators");
    for (const auto& img : a.images)
        if (img.degree() != a.degree) throw InvalidInput("image degree differs from assignment degree");
}

} // namespace

Permutation evaluate(const Word& w, const GeneratorAssignment& a) {
    std::vector<int> pts(static_cast<std::size_t>(a.degree));
    std::iota(pts.begin(), pts.end(), 0);
    std::vector<std::optional<Permutation>> inverses(a.images.size());
    for (int x : w.letters()) {
        const auto g = static_cast<std::size_t>(std::abs(x) - 1);
        if (g >= a.images.size()) throw InvalidInput("word letter outside the assignment");
        const Permutation* img = &a.images[g];
        if (x < 0) {
            if (!inverses[g]) inverses[g] = a.images[g].inverse();
            img = &*inverses[g];
        }
        for (int& q : pts) q = (*img)(q);
    }
    return Permutation(std::move(pts));
}

Verification verify_hom(const Presentation& p, const GeneratorAssignment& a) {
    check_arity(p, a);
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        if (!evaluate(p.relators[r], a).is_identity()) return {false, static_cast<int>(r) + 1};
    return {};
}

HomClassification classify_hom(const Presentation& p, const GeneratorAssignment& a, std::size_t bound) {
    const Verification v = verify_hom(p, a);
    if (!v.ok) throw InvalidInput("not a homomorphism: relator " + std::to_string(v.failing_relator) + " fails");
    HomClassification c;
    c.valid = true;
    const auto elems = closure(a.images, a.degree, bound);
    c.image_order = elems.size();
    c.abelian = true;
    for (std::size_t i = 0; i < a.images.size() && c.abelian; ++i)
        for (std::size_t j = i + 1; j < a.images.size(); ++j)
            if (a.images[i] * a.images[j] != a.images[j] * a.images[i]) {
                c.abelian = false;
                break;
            }
    if (c.abelian)
        for (const auto& e : elems)
            if (e.order() == static_cast<unsigned long>(elems.size())) {
                c.cyclic = true;
                break;
            }
    c.transitive = is_transitive(a.images, a.degree);
    auto prim = is_primitive(a.images, a.degree);
    c.primitive = prim.primitive;
    c.block = std::move(prim.witness);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(a.degree));
    c.surjective = fact == static_cast<unsigned long>(elems.size());
    return c;
}

nlohmann::json to_json(const HomClassification& c) {
    nlohmann::json j = {{"valid", c.valid},           {"image_order", c.image_order}, {"abelian", c.abelian},
                        {"cyclic", c.cyclic},         {"transitive", c.transitive},   {"primitive", c.primitive},
                        {"surjective", c.surjective}, {"block", nullptr}};
    if (c.block) {
        nlohmann::json b = nlohmann::json::array();
        for (int x : *c.block) b.push_back(x + 1);
        j["block"] = b;
    }
    return j;
}

HomFilter HomFilter::parse(const std::string& text) {
    HomFilter f;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(start, end - start);
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty() || tok == "any") {
        } else if (tok == "transitive") {
            f.transitive = true;
        } else if (tok == "primitive") {
            f.primitive = true;
        } else if (tok == "imprimitive") {
            f.imprimitive = true;
        } else if (tok == "surjective") {
            f.surjective = true;
        } else if (tok == "abelian") {
            f.abelian = true;
        } else if (tok == "nonabelian") {
            f.nonabelian = true;
        } else if (tok == "cyclic") {
            f.cyclic = true;
        } else {
            throw InvalidInput("unknown filter '" + tok + "'");
        }
        start = end + 1;
    }
    return f;
}

std::string HomFilter::to_string() const {
    std::vector<std::string> parts;
    if (transitive) parts.push_back("transitive");
    if (primitive) parts.push_back("primitive");
    if (imprimitive) parts.push_back("imprimitive");
    if (surjective) parts.push_back("surjective");
    if (abelian) parts.push_back("abelian");
    if (nonabelian) parts.push_back("nonabelian");
    if (cyclic) parts.push_back("cyclic");
    if (parts.empty()) return "any";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "," + parts[i];
    return out;
}

nlohmann::json to_json(const Census& c, const Presentation& p) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : c.representatives) reps.push_back(to_json(r, p));
    return {{"count", c.count}, {"representatives", reps}};
}

namespace {

// S_m with elements numbered in lexicographic order of their image arrays.
class SymmetricTable {
  public:
    explicit SymmetricTable(int m) : m_(m) {
        std::vector<int> p(static_cast<std::size_t>(m));
        std::iota(p.begin(), p.end(), 0);
        do perms_.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        const std::size_t n = perms_.size();
        inv_.resize(n);
        order_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<int> q(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) q[static_cast<std::size_t>(perms_[a][static_cast<std::size_t>(i)])] = i;
            inv_[a] = rank(q);
        }
        if (m <= 6) {
            table_.resize(n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = compose(a, b);
        }
        for (std::size_t a = 0; a < n; ++a) {
            int k = 1;
            for (int x = static_cast<int>(a); x != 0; x = mul(x, static_cast<int>(a))) ++k;
            order_[a] = k;
        }
    }

    int degree() const { return m_; }
    int size() const { return static_cast<int>(perms_.size()); }
    const std::vector<int>& perm(int a) const { return perms_[static_cast<std::size_t>(a)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int order(int a) const { return order_[static_cast<std::size_t>(a)]; }
    int mul(int a, int b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * perms_.size() + static_cast<std::size_t>(b)];
        return compose(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }

  private:
    int compose(std::size_t a, std::size_t b) const {
        std::vector<int> r(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) r[static_cast<std::size_t>(i)] = perms_[b][static_cast<std::size_t>(perms_[a][static_cast<std::size_t>(i)])];
        return rank(r);
    }

    int rank(const std::vector<int>& p) const {
        int r = 0;
        std::vector<bool> used(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            int smaller = 0;
            for (int v = 0; v < p[static_cast<std::size_t>(i)]; ++v) smaller += !used[static_cast<std::size_t>(v)];
            used[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = true;
            r = r * (m_ - i) + smaller;
        }
        return r;
    }

    int m_;
    std::vector<std::vector<int>> perms_;
    std::vector<int> inv_, order_, table_;
};

struct Plan {
    std::vector<int> order;                   // generator indices in assignment order
    std::vector<std::vector<int>> check_at;   // relators completed at each position
};

Plan make_plan(const Presentation& p) {
    const int n = p.generator_count();
    Plan plan;
    std::vector<int> rest;
    const auto braid = p.braid_generator_indices();
    if (!braid.empty()) {
        plan.order = braid;
        for (int g = 0; g < n; ++g)
            if (std::find(braid.begin(), braid.end(), g) == braid.end()) plan.order.push_back(g);
    } else {
        std::vector<int> uses(static_cast<std::size_t>(n));
        for (const Word& w : p.relators)
            for (int x : w.letters()) ++uses[static_cast<std::size_t>(std::abs(x) - 1)];
        plan.order.resize(static_cast<std::size_t>(n));
        std::iota(plan.order.begin(), plan.order.end(), 0);
        std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
            return uses[static_cast<std::size_t>(a)] > uses[static_cast<std::size_t>(b)];
        });
    }
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) position[static_cast<std::size_t>(plan.order[static_cast<std::size_t>(k)])] = k;
    plan.check_at.resize(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        int last = 0;
        for (int x : p.relators[r].letters()) last = std::max(last, position[static_cast<std::size_t>(std::abs(x) - 1)]);
        plan.check_at[static_cast<std::size_t>(last)].push_back(static_cast<int>(r));
    }
    return plan;
}

using Tuple = std::vector<int>;   // image indices in presentation order

class Searcher {
  public:
    Searcher(const Presentation& p, const SymmetricTable& s, const Plan& plan, const HomFilter& filter)
        : p_(p), s_(s), plan_(plan), filter_(filter), images_(static_cast<std::size_t>(p.generator_count()), 0) {}

    // Explores assignments whose first image index is congruent to `shard` mod `shards`.
    void run(int shard, int shards, const std::function<bool(const Tuple&)>& leaf) {
        leaf_ = &leaf;
        stop_ = false;
        if (plan_.order.empty()) {
            if (passes()) (*leaf_)(images_);
            return;
        }
        dfs(0, shard, shards);
    }

  private:
    void dfs(std::size_t pos, int shard, int shards) {
        const int g = plan_.order[pos];
        const int start = pos == 0 ? shard : 0, step = pos == 0 ? shards : 1;
        for (int e = start; e < s_.size() && !stop_; e += step) {
            images_[static_cast<std::size_t>(g)] = e;
            bool ok = true;
            for (int r : plan_.check_at[pos])
                if (!relator_holds(p_.relators[static_cast<std::size_t>(r)])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (pos + 1 == plan_.order.size()) {
                if (passes() && !(*leaf_)(images_)) stop_ = true;
            } else {
                dfs(pos + 1, shard, shards);
            }
        }
    }

    bool relator_holds(const Word& w) const {
        int cur = 0;
        for (int x : w.letters()) {
            const int img = images_[static_cast<std::size_t>(std::abs(x) - 1)];
            cur = s_.mul(cur, x > 0 ? img : s_.inv(img));
        }
        return cur == 0;
    }

    bool passes() const {
        const HomFilter& f = filter_;
        const int m = s_.degree();
        if (f.abelian || f.nonabelian || f.cyclic) {
            bool ab = true;
            for (std::size_t i = 0; i < images_.size() && ab; ++i)
                for (std::size_t j = i + 1; j < images_.size(); ++j)
                    if (s_.mul(images_[i], images_[j]) != s_.mul(images_[j], images_[i])) {
                        ab = false;
                        break;
                    }
            if (f.abelian && !ab) return false;
            if (f.nonabelian && ab) return false;
            if (f.cyclic && !ab) return false;
        }
        if (f.transitive || f.primitive || f.imprimitive || f.surjective) {
            std::vector<int> root(static_cast<std::size_t>(m));
            std::iota(root.begin(), root.end(), 0);
            auto find = [&](int x) {
                while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
                return x;
            };
            int classes = m;
            for (int img : images_)
                for (int i = 0; i < m; ++i) {
                    const int a = find(i), b = find(s_.perm(img)[static_cast<std::size_t>(i)]);
                    if (a != b) {
                        root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
                        --classes;
                    }
                }
            const bool transitive = classes <= 1;
            if ((f.transitive || f.surjective) && !transitive) return false;
            if (f.primitive || f.imprimitive) {
                std::vector<Permutation> gens;
                for (int img : images_) gens.emplace_back(s_.perm(img));
                const bool prim = is_primitive(gens, m).primitive;
                if (f.primitive && !prim) return false;
                if (f.imprimitive && prim) return false;
            }
        }
        if (f.surjective || f.cyclic) {
            const int size = image_order();
            if (f.surjective && size != s_.size()) return false;
            if (f.cyclic && !has_element_of_order(size)) return false;
        }
        return true;
    }

    int image_order() const {
        mark_.assign(static_cast<std::size_t>(s_.size()), 0);
        stack_.assign(1, 0);
        mark_[0] = 1;
        int count = 1;
        while (!stack_.empty()) {
            const int x = stack_.back();
            stack_.pop_back();
            for (int img : images_) {
                const int y = s_.mul(x, img);
                if (!mark_[static_cast<std::size_t>(y)]) {
                    mark_[static_cast<std::size_t>(y)] = 1;
                    ++count;
                    stack_.push_back(y);
                }
            }
        }
        return count;
    }

    // Uses the marks left by image_order().
    bool has_element_of_order(int k) const {
        for (int x = 0; x < s_.size(); ++x)
            if (mark_[static_cast<std::size_t>(x)] && s_.order(x) == k) return true;
        return false;
    }

    const Presentation& p_;
    const SymmetricTable& s_;
    const Plan& plan_;
    const HomFilter& filter_;
    Tuple images_;
    const std::function<bool(const Tuple&)>* leaf_ = nullptr;
    bool stop_ = false;
    mutable std::vector<char> mark_;
    mutable std::vector<int> stack_;
};

void check_search_size(const Presentation& p, int m, double bound) {
    if (m < 1) throw InvalidInput("target degree must be >= 1");
    if (m > kMaxSearchDegree)
        throw BoundExceeded("homomorphism search supports target degree up to " + std::to_string(kMaxSearchDegree));
    const double limit = static_cast<double>(bound_from_env(static_cast<std::size_t>(bound)));
    double fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    const double space = std::pow(fact, p.generator_count());
    if (space > limit)
        throw BoundExceeded("search space " + std::to_string(space) + " exceeds bound " + std::to_string(limit) +
                            " (set BRAIDKIT_BOUND to raise it)");
}

GeneratorAssignment to_assignment(const Tuple& t, const SymmetricTable& s) {
    GeneratorAssignment a;
    a.degree = s.degree();
    for (int x : t) a.images.emplace_back(s.perm(x));
    return a;
}

} // namespace

Census enumerate_homs(const Presentation& p, int m, const SearchOptions& options) {
    check_search_size(p, m, options.bound);
    const SymmetricTable table(m);
    const Plan plan = make_plan(p);
    const int shards = std::max(1, std::min(options.threads, table.size()));
    const std::size_t keep = options.max_representatives;

    struct Shard {
        std::uint64_t count = 0;
        std::set<Tuple> reps;
    };
    std::vector<Shard> results(static_cast<std::size_t>(shards));
    auto work = [&](int k) {
        Shard& out = results[static_cast<std::size_t>(k)];
        Searcher searcher(p, table, plan, options.filter);
        const std::function<bool(const Tuple&)> leaf = [&](const Tuple& t) {
            ++out.count;
            if (keep > 0 && (out.reps.size() < keep || t < *out.reps.rbegin())) {
                out.reps.insert(t);
                if (out.reps.size() > keep) out.reps.erase(std::prev(out.reps.end()));
            }
            return true;
        };
        searcher.run(k, shards, leaf);
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < shards; ++k) pool.emplace_back(work, k);
        for (auto& t : pool) t.join();
    }
    Census census;
    std::set<Tuple> merged;
    for (const auto& r : results) {
        census.count += r.count;
        merged.insert(r.reps.begin(), r.reps.end());
    }
    for (const auto& t : merged) {
        if (census.representatives.size() >= keep) break;
        census.representatives.push_back(to_assignment(t, table));
    }
    return census;
}

void for_each_hom(const Presentation& p, int m, const HomFilter& filter,
                  const std::function<bool(const GeneratorAssignment&)>& visit, double bound) {
    check_search_size(p, m, bound);
    const SymmetricTable table(m);
    const Plan plan = make_plan(p);
    Searcher searcher(p, table, plan, filter);
    const std::function<bool(const Tuple&)> leaf = [&](const Tuple& t) { return visit(to_assignment(t, table)); };
    searcher.run(0, 1, leaf);
}

GeneratorAssignment direct_sum(const std::vector<GeneratorAssignment>& parts) {
    if (parts.empty()) throw InvalidInput("direct sum of no assignments");
    const std::size_t gens = parts.front().images.size();
    int degree = 0;
    for (const auto& a : parts) {
        if (a.images.size() != gens) throw InvalidInput("summands are over different presentations");
        degree += a.degree;
    }
    GeneratorAssignment out;
    out.degree = degree;
    for (std::size_t g = 0; g < gens; ++g) {
        std::vector<int> img;
        img.reserve(static_cast<std::size_t>(degree));
        int offset = 0;
        for (const auto& a : parts) {
            for (int x : a.images[g].images()) img.push_back(x + offset);
            offset += a.degree;
        }
        out.images.emplace_back(std::move(img));
    }
    return out;
}

GeneratorAssignment through_projection(const GeneratorAssignment& quotient, int genus, int strands) {
    if (static_cast<int>(quotient.images.size()) != 2 * genus + 1)
        throw InvalidInput("expected images for a1, b1, ..., s of genus " + std::to_string(genus));
    GeneratorAssignment out;
    out.degree = quotient.degree;
    out.images.assign(quotient.images.begin(), quotient.images.begin() + 2 * genus);
    for (int j = 1; j < strands; ++j) out.images.push_back(quotient.images.back());
    return out;
}

namespace {

GeneratorAssignment from_cycles(int degree, const std::vector<std::string>& cycles) {
    GeneratorAssignment a;
    a.degree = degree;
    for (const auto& c : cycles) a.images.push_back(Permutation::parse(c, degree));
    return a;
}

} // namespace

GeneratorAssignment exo1_assignment() {
    return from_cycles(8, {"(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)", "(1,2,3,4)(5,6,7,8)"});
}

GeneratorAssignment theta3_assignment() {
    return from_cycles(
        32, {
                "(1,3)(2,4)(9,11)(10,12)(17,19)(18,20)(25,27)(26,28)",
                "(1,5)(2,6)(3,7)(4,8)(9,13)(10,14)(11,15)(12,16)(17,21)(18,22)(19,23)(20,24)"
                "(25,29)(26,30)(27,31)(28,32)",
                "(1,3)(2,4)(5,7)(6,8)(17,19)(18,20)(21,23)(22,24)",
                "(1,9)(2,10)(3,11)(4,12)(5,13)(6,14)(7,15)(8,16)(17,25)(18,26)(19,27)(20,28)"
                "(21,29)(22,30)(23,31)(24,32)",
                "(1,3)(2,4)(5,7)(6,8)(9,11)(10,12)(13,15)(14,16)",
                "(1,17)(2,18)(3,19)(4,20)(5,21)(6,22)(7,23)(8,24)(9,25)(10,26)(11,27)(12,28)"
                "(13,29)(14,30)(15,31)(16,32)",
                "(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16)(17,18,19,20)(21,22,23,24)"
                "(25,26,27,28)(29,30,31,32)",
            });
}

GeneratorAssignment theta21_assignment() {
    return from_cycles(16, {
                               "(1,3)(2,4)(9,11)(10,12)",
                               "(1,5)(2,6)(3,7)(4,8)(9,13)(10,14)(11,15)(12,16)",
                               "(1,3)(2,4)(5,7)(6,8)",
                               "(1,9)(2,10)(3,11)(4,12)(5,13)(6,14)(7,15)(8,16)",
                               "(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16)",
                           });
}

GeneratorAssignment exo2_assignment(int n) {
    if (n < 3) throw InvalidInput("block construction needs n >= 3");
    const int len = 2 * n, degree = n * len;
    auto point = [&](int block, int pos) {
        return ((block % n) + n) % n * len + ((pos % len) + len) % len;
    };
    std::vector<int> a(static_cast<std::size_t>(degree)), b(a), s(a);
    for (int k = 0; k < n; ++k)
        for (int q = 0; q < len; ++q) {
            a[static_cast<std::size_t>(point(k, q))] = point(k, q + 2 * k);
            b[static_cast<std::size_t>(point(k, q))] = point(k - 1, q);
            s[static_cast<std::size_t>(point(k, q))] = point(k, q + 1);
        }
    GeneratorAssignment out;
    out.degree = degree;
    out.images = {Permutation(a), Permutation(b), Permutation(s)};
    return out;
}

GeneratorAssignment remark1_assignment() {
    return direct_sum({exo2_assignment(3), exo2_assignment(5), exo2_assignment(7), exo2_assignment(11)});
}

} // namespace braidkit
