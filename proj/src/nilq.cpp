#include "braidkit/nilq.hpp"

#include <deque>
#include <optional>

#include "braidkit/error.hpp"

namespace braidkit {

HallBasis::HallBasis(int generators) : n(generators) {
    if (generators < 0) throw InvalidInput("negative generator count");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) weight2.emplace_back(j, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = i; k < n; ++k) weight3.push_back({j, i, k});
}

int HallBasis::size(int weight) const {
    switch (weight) {
    case 1: return n;
    case 2: return static_cast<int>(weight2.size());
    case 3: return static_cast<int>(weight3.size());
    default: throw Unsupported("Hall basis is built up to weight 3");
    }
}

std::int64_t free_layer_rank(int n, int weight) {
    if (n < 0) throw InvalidInput("negative generator count");
    const std::int64_t m = n;
    switch (weight) {
    case 1: return m;
    case 2: return (m * m - m) / 2;
    case 3: return (m * m * m - m) / 3;
    default: throw Unsupported("free layer rank is provided for weights 1..3");
    }
}

namespace {

using Series = std::vector<mpz_class>;

// Truncated Magnus algebra Z<<X_1..X_n>> / (degree > c). A group element
// 1 + A is stored by its non-constant part A; monomials of degree d are
// numbered base n after the blocks of lower degree.
class Magnus {
  public:
    Magnus(int n, int c) : n_(n), c_(c) {
        std::size_t width = 1, at = 0;
        for (int d = 1; d <= c; ++d) {
            width *= static_cast<std::size_t>(n);
            offset_[d] = at;
            width_[d] = width;
            at += width;
        }
        size_ = at;
    }

    int generators() const { return n_; }
    int nilpotency_class() const { return c_; }

    Series one() const { return Series(size_); }

    // x_i - 1 = X_i;  x_i^-1 - 1 = -X_i + X_i^2 - ...
    Series letter(int i, bool inverse) const {
        Series s(size_);
        const std::size_t step = static_cast<std::size_t>(i);
        if (!inverse) {
            s[offset_[1] + step] = 1;
            return s;
        }
        std::size_t idx = step;
        for (int d = 1; d <= c_; ++d) {
            s[offset_[d] + idx] = d % 2 == 1 ? -1 : 1;
            idx = idx * n_ + step;
        }
        return s;
    }

    std::size_t mono(int i) const { return offset_[1] + i; }
    std::size_t mono(int i, int j) const { return offset_[2] + static_cast<std::size_t>(i) * n_ + j; }
    std::size_t mono(int i, int j, int k) const {
        return offset_[3] + (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }

    // a * b with the constant terms dropped.
    Series product(const Series& a, const Series& b) const {
        Series r(size_);
        for (int da = 1; da < c_; ++da)
            for (std::size_t ia = 0; ia < width_[da]; ++ia) {
                const mpz_class& x = a[offset_[da] + ia];
                if (x == 0) continue;
                for (int db = 1; da + db <= c_; ++db) {
                    const std::size_t base = offset_[da + db] + ia * width_[db];
                    for (std::size_t ib = 0; ib < width_[db]; ++ib) {
                        const mpz_class& y = b[offset_[db] + ib];
                        if (y != 0) r[base + ib] += x * y;
                    }
                }
            }
        return r;
    }

    // (1+a)(1+b) - 1
    Series mul(const Series& a, const Series& b) const {
        Series r = product(a, b);
        for (std::size_t k = 0; k < size_; ++k) r[k] += a[k] + b[k];
        return r;
    }

    std::vector<Series> powers(const Series& a) const {
        std::vector<Series> p{a};
        for (int j = 2; j <= c_; ++j) p.push_back(product(p.back(), a));
        return p;
    }

    // (1+a)^k = sum_j binom(k, j) a^j, valid for negative k.
    Series power(const std::vector<Series>& pw, const mpz_class& k) const {
        Series r(size_);
        if (k == 0) return r;
        mpz_class binom = 1;
        for (int j = 1; j <= c_; ++j) {
            binom *= k - (j - 1);
            binom /= j;
            if (binom == 0) break;
            const Series& aj = pw[static_cast<std::size_t>(j - 1)];
            for (std::size_t t = 0; t < size_; ++t)
                if (aj[t] != 0) r[t] += binom * aj[t];
        }
        return r;
    }

    Series power(const Series& a, const mpz_class& k) const { return power(powers(a), k); }
    Series inverse(const Series& a) const { return power(a, mpz_class(-1)); }

    // [a, b] = a^-1 b^-1 a b
    Series commutator(const Series& a, const Series& b) const {
        return mul(mul(inverse(a), inverse(b)), mul(a, b));
    }

  private:
    int n_, c_;
    std::size_t offset_[4] = {0, 0, 0, 0};
    std::size_t width_[4] = {1, 0, 0, 0};
    std::size_t size_ = 0;
};

// Subgroup of the free class-c nilpotent group held as an induced
// polycyclic sequence: at most one entry per Mal'cev depth, each with a
// positive leading exponent there.
class NormalClosure {
  public:
    NormalClosure(int n, int c) : mg_(n, c), hb_(n), c_(c) {
        start_[1] = 0;
        start_[2] = n;
        start_[3] = n + hb_.size(2);
        depth_ = 0;
        for (int w = 1; w <= c; ++w) depth_ += hb_.size(w);
        for (int i = 0; i < n; ++i) add_basis(mg_.letter(i, false));
        if (c >= 2)
            for (auto [j, i] : hb_.weight2) add_basis(mg_.commutator(mg_.letter(j, false), mg_.letter(i, false)));
        if (c >= 3)
            for (auto [j, i, k] : hb_.weight3) {
                const Series inner = mg_.commutator(mg_.letter(j, false), mg_.letter(i, false));
                add_basis(mg_.commutator(inner, mg_.letter(k, false)));
            }
        table_.resize(static_cast<std::size_t>(depth_));
    }

    const Magnus& magnus() const { return mg_; }

    Series evaluate(const Word& w) const {
        Series r = mg_.one();
        for (int x : w.letters()) r = mg_.mul(r, mg_.letter(std::abs(x) - 1, x < 0));
        return r;
    }

    int weight_of(int depth) const {
        int w = 1;
        while (w < c_ && depth >= start_[w + 1]) ++w;
        return w;
    }

    // Mal'cev coordinates over the Hall basis.
    std::vector<mpz_class> coordinates(const Series& g) const {
        std::vector<mpz_class> e(static_cast<std::size_t>(depth_));
        const int n = mg_.generators();
        Series h = g;
        bool any = false;
        for (int i = 0; i < n; ++i) {
            e[i] = h[mg_.mono(i)];
            any = any || e[i] != 0;
        }
        if (c_ == 1) return e;
        if (any) h = strip(h, e, 1);
        any = false;
        for (std::size_t t = 0; t < hb_.weight2.size(); ++t) {
            auto [j, i] = hb_.weight2[t];
            auto& slot = e[static_cast<std::size_t>(start_[2]) + t];
            slot = h[mg_.mono(j, i)];
            any = any || slot != 0;
        }
        if (c_ == 2) return e;
        if (any) h = strip(h, e, 2);
        for (std::size_t t = 0; t < hb_.weight3.size(); ++t) {
            auto [j, i, k] = hb_.weight3[t];
            e[static_cast<std::size_t>(start_[3]) + t] = k > i ? mpz_class(-h[mg_.mono(i, j, k)]) : h[mg_.mono(j, i, i)];
        }
        return e;
    }

    // Adds g to the subgroup; true when the table changed.
    bool sift(const Series& g) {
        bool changed = false;
        std::deque<Series> pending{g};
        while (!pending.empty()) {
            Series x = std::move(pending.front());
            pending.pop_front();
            for (;;) {
                auto co = coordinates(x);
                int d = 0;
                while (d < depth_ && co[static_cast<std::size_t>(d)] == 0) ++d;
                if (d == depth_) break;
                auto& slot = table_[static_cast<std::size_t>(d)];
                const mpz_class b = co[static_cast<std::size_t>(d)];
                if (!slot) {
                    if (b < 0) {
                        x = mg_.inverse(x);
                        for (auto& v : co) v = -v;
                    }
                    slot = Entry{std::move(x), std::move(co)};
                    dirty_.push_back(d);
                    changed = true;
                    break;
                }
                const mpz_class a = slot->coords[static_cast<std::size_t>(d)];
                if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
                    x = mg_.mul(mg_.power(slot->series, mpz_class(-b / a)), x);
                    continue;
                }
                mpz_class gcd, s, t;
                mpz_gcdext(gcd.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                Series combined = mg_.mul(mg_.power(slot->series, s), mg_.power(x, t));
                pending.push_back(std::move(slot->series));
                pending.push_back(std::move(x));
                auto cc = coordinates(combined);
                slot = Entry{std::move(combined), std::move(cc)};
                dirty_.push_back(d);
                changed = true;
                break;
            }
        }
        return changed;
    }

    // Saturates until the table describes a normal subgroup: every entry
    // changed since the last pass is conjugated by the generators and
    // commuted with every other entry.
    void close() {
        const int n = mg_.generators();
        std::vector<Series> gens, gens_inv;
        for (int i = 0; i < n; ++i) {
            gens.push_back(mg_.letter(i, false));
            gens_inv.push_back(mg_.letter(i, true));
        }
        while (!dirty_.empty()) {
            const int d1 = dirty_.back();
            dirty_.pop_back();
            const int w1 = weight_of(d1);
            if (w1 >= c_) continue;
            const Series t1 = table_[static_cast<std::size_t>(d1)]->series;
            for (int i = 0; i < n; ++i) {
                sift(mg_.commutator(t1, gens[static_cast<std::size_t>(i)]));
                sift(mg_.commutator(t1, gens_inv[static_cast<std::size_t>(i)]));
            }
            for (int d2 = 0; d2 < depth_; ++d2) {
                if (d2 == d1 || !table_[static_cast<std::size_t>(d2)]) continue;
                if (w1 + weight_of(d2) > c_) break;
                const Series t2 = table_[static_cast<std::size_t>(d2)]->series;
                sift(mg_.commutator(t2, t1));
                sift(mg_.commutator(t2, mg_.inverse(t1)));
            }
        }
    }

    IntMatrix lattice(int w) const {
        const int width = hb_.size(w);
        IntMatrix m(0, width);
        for (int d = start_[w]; d < start_[w] + width; ++d) {
            const auto& slot = table_[static_cast<std::size_t>(d)];
            if (!slot) continue;
            m.append_row(std::vector<mpz_class>(slot->coords.begin() + start_[w],
                                                slot->coords.begin() + start_[w] + width));
        }
        return m;
    }

    int width(int w) const { return hb_.size(w); }

  private:
    struct Entry {
        Series series;
        std::vector<mpz_class> coords;
    };

    void add_basis(Series s) { basis_.push_back(mg_.powers(s)); }

    // h * (prod over the weight-w block of basis^e)^-1 ... applied on the left.
    Series strip(const Series& h, const std::vector<mpz_class>& e, int w) const {
        Series prod = mg_.one();
        for (int d = start_[w]; d < start_[w] + hb_.size(w); ++d) {
            const auto& k = e[static_cast<std::size_t>(d)];
            if (k != 0) prod = mg_.mul(prod, mg_.power(basis_[static_cast<std::size_t>(d)], k));
        }
        return mg_.mul(mg_.inverse(prod), h);
    }

    Magnus mg_;
    HallBasis hb_;
    int c_;
    int start_[4] = {0, 0, 0, 0};
    int depth_ = 0;
    std::vector<std::vector<Series>> basis_;
    std::vector<std::optional<Entry>> table_;
    std::vector<int> dirty_;
};

} // namespace

NilpotentQuotient nilpotent_quotient(const Presentation& p, int c) {
    if (c < 1) throw InvalidInput("nilpotency class must be >= 1");
    if (c > 3) throw Unsupported("nilpotent quotients are computed up to class 3");
    NilpotentQuotient q;
    q.nilpotency_class = c;
    const int n = p.generator_count();
    if (n == 0) {
        for (int w = 1; w <= c; ++w) {
            q.lattices.emplace_back(0, 0);
            q.layers.push_back(FgAbelianGroup::trivial());
        }
        return q;
    }
    NormalClosure nc(n, c);
    for (const Word& r : p.relators) {
        if (r.alphabet_size() != n) throw InvalidInput("relator alphabet does not match generator count");
        nc.sift(nc.evaluate(r));
    }
    nc.close();
    for (int w = 1; w <= c; ++w) {
        q.lattices.push_back(nc.lattice(w));
        q.layers.push_back(cokernel(q.lattices.back()));
    }
    return q;
}

FgAbelianGroup lcs_layer(const Presentation& p, int i) {
    if (i > 3) throw Unsupported("layer " + std::to_string(i) + " requested; only layers 1..3 are computed");
    if (i < 1) throw InvalidInput("layer index must be >= 1");
    return nilpotent_quotient(p, i).layers[static_cast<std::size_t>(i - 1)];
}

} // namespace braidkit
