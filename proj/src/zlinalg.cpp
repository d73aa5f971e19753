#include "braidkit/zlinalg.hpp"

#include <algorithm>
#include <utility>

#include "braidkit/error.hpp"

namespace braidkit {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw InvalidInput("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::append_row(const std::vector<mpz_class>& row) {
    if (rows_ == 0 && data_.empty()) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_) throw InvalidInput("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const mpz_class& x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

namespace {

class SmithReducer {
  public:
    SmithReducer(const IntMatrix& m, bool track) : a_(m), track_(track) {
        if (track) {
            u_ = IntMatrix::identity(m.rows());
            v_ = IntMatrix::identity(m.cols());
        }
    }

    SmithForm run() && {
        const int r = a_.rows(), c = a_.cols();
        int t = 0;
        for (; t < std::min(r, c); ++t) {
            if (!place_smallest(t)) break;
            settle(t);
            if (a_(t, t) < 0) negate_row(t);
        }
        SmithForm out;
        out.rank = t;
        for (int i = 0; i < t; ++i)
            if (a_(i, i) > 1) out.factors.push_back(a_(i, i));
        out.diagonal = std::move(a_);
        if (track_) {
            out.left = std::move(u_);
            out.right = std::move(v_);
        }
        return out;
    }

  private:
    // Moves the smallest nonzero |entry| of the trailing block to (t, t).
    bool place_smallest(int t) {
        int bi = -1, bj = -1;
        for (int i = t; i < a_.rows(); ++i)
            for (int j = t; j < a_.cols(); ++j) {
                const mpz_class& x = a_(i, j);
                if (x != 0 && (bi < 0 || abs(x) < abs(a_(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void settle(int t) {
        const int r = a_.rows(), c = a_.cols();
        for (;;) {
            for (int i = t + 1; i < r; ++i)
                if (a_(i, t) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                    add_row(i, t, -q);
                }
            for (int j = t + 1; j < c; ++j)
                if (a_(t, j) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                    add_col(j, t, -q);
                }
            // Remainders are smaller than the pivot; promote the smallest.
            int bi = -1, bj = -1;
            for (int i = t + 1; i < r; ++i)
                if (a_(i, t) != 0 && (bi < 0 || abs(a_(i, t)) < abs(a_(bi, bj)))) bi = i, bj = t;
            for (int j = t + 1; j < c; ++j)
                if (a_(t, j) != 0 && (bi < 0 || abs(a_(t, j)) < abs(a_(bi, bj)))) bi = t, bj = j;
            if (bi >= 0) {
                if (bj == t)
                    swap_rows(t, bi);
                else
                    swap_cols(t, bj);
                continue;
            }
            bool divisible = true;
            for (int i = t + 1; i < r && divisible; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) return;
        }
    }

    void swap_rows(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
        if (track_)
            for (int j = 0; j < u_.cols(); ++j) std::swap(u_(i, j), u_(k, j));
    }
    void swap_cols(int j, int k) {
        if (j == k) return;
        for (int i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
        if (track_)
            for (int i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, k));
    }
    // row_dst += q * row_src
    void add_row(int dst, int src, const mpz_class& q) {
        for (int j = 0; j < a_.cols(); ++j)
            if (a_(src, j) != 0) a_(dst, j) += q * a_(src, j);
        if (track_)
            for (int j = 0; j < u_.cols(); ++j)
                if (u_(src, j) != 0) u_(dst, j) += q * u_(src, j);
    }
    void add_col(int dst, int src, const mpz_class& q) {
        for (int i = 0; i < a_.rows(); ++i)
            if (a_(i, src) != 0) a_(i, dst) += q * a_(i, src);
        if (track_)
            for (int i = 0; i < v_.rows(); ++i)
                if (v_(i, src) != 0) v_(i, dst) += q * v_(i, src);
    }
    void negate_row(int i) {
        for (int j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
        if (track_)
            for (int j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
    }

    IntMatrix a_;
    bool track_;
    IntMatrix u_, v_;
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
    return SmithReducer(m, with_transforms).run();
}

FgAbelianGroup::FgAbelianGroup(int free_rank, const std::vector<mpz_class>& cyclic_orders) : free_rank_(free_rank) {
    if (free_rank < 0) throw InvalidInput("negative free rank");
    const int k = static_cast<int>(cyclic_orders.size());
    if (k == 0) return;
    IntMatrix d(k, k);
    for (int i = 0; i < k; ++i) d(i, i) = abs(cyclic_orders[static_cast<std::size_t>(i)]);
    SmithForm s = smith_normal_form(d);
    free_rank_ += k - s.rank;
    torsion_ = std::move(s.factors);
}

mpz_class FgAbelianGroup::order() const {
    if (free_rank_ > 0) return 0;
    mpz_class n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
}

FgAbelianGroup operator+(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<mpz_class> t = a.torsion_;
    t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
    return FgAbelianGroup(a.free_rank_ + b.free_rank_, t);
}

std::string to_string(const FgAbelianGroup& a) {
    if (a.is_trivial()) return "0";
    std::string out;
    if (a.free_rank() > 0) out = a.free_rank() == 1 ? "Z" : "Z^" + std::to_string(a.free_rank());
    for (const auto& d : a.torsion()) {
        if (!out.empty()) out += " + ";
        out += "Z_" + d.get_str();
    }
    return out;
}

nlohmann::json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("not an integer: " + j.get<std::string>());
        return z;
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

nlohmann::json to_json(const FgAbelianGroup& a) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& d : a.torsion()) t.push_back(mpz_to_json(d));
    return {{"free_rank", a.free_rank()}, {"torsion", t}};
}

FgAbelianGroup abelian_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInput("abelian group JSON must be an object");
    std::vector<mpz_class> t;
    for (const auto& d : j.value("torsion", nlohmann::json::array())) t.push_back(mpz_from_json(d));
    const int r = j.value("free_rank", 0);
    return FgAbelianGroup(r, t);
}

IntMatrix relation_matrix(const Presentation& p) {
    const int n = p.generator_count();
    IntMatrix m(0, n);
    for (const Word& w : p.relators) {
        std::vector<mpz_class> row;
        for (auto e : exponent_vector(w, n)) row.emplace_back(static_cast<long>(e));
        m.append_row(row);
    }
    return m;
}

FgAbelianGroup cokernel(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    return FgAbelianGroup(m.cols() - s.rank, s.factors);
}

FgAbelianGroup abelianization(const Presentation& p) { return cokernel(relation_matrix(p)); }

namespace {

std::vector<mpz_class> largest_first(const FgAbelianGroup& a) {
    std::vector<mpz_class> out(static_cast<std::size_t>(a.free_rank()), mpz_class(0));
    out.insert(out.end(), a.torsion().rbegin(), a.torsion().rend());
    return out;
}

bool divides(const mpz_class& x, const mpz_class& y) {
    if (y == 0) return true;
    if (x == 0) return false;
    return mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()) != 0;
}

} // namespace

bool admits_epimorphism(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    const auto la = largest_first(a), lb = largest_first(b);
    if (la.size() < lb.size()) return false;
    for (std::size_t i = 0; i < lb.size(); ++i)
        if (!divides(lb[i], la[i])) return false;
    return true;
}

int min_generators_lower_bound(const Presentation& p) { return abelianization(p).rank(); }

} // namespace braidkit
