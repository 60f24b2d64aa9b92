#include "extq/intmat.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace extq {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw Error("ragged row in matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

VecZ IntMatrix::apply(const VecZ& v) const {
    if (int(v.size()) != cols_) throw Error("matrix apply shape mismatch");
    VecZ r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

VecQ IntMatrix::apply(const VecQ& v) const {
    if (int(v.size()) != cols_) throw Error("matrix apply shape mismatch");
    VecQ r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += mpq_class(at(i, j)) * v[j];
    return r;
}

mpz_class IntMatrix::det() const {
    if (rows_ != cols_) throw NonSquare("det of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = at(i, j);
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = q;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix IntMatrix::inverse_unimodular() const {
    if (rows_ != cols_) throw NonSquare("inverse of non-square matrix");
    mpz_class d = det();
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
    // Adjugate via cofactors; matrices here are tiny.
    int n = rows_;
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = at(r, c);
                    ++cc;
                }
                ++rr;
            }
            mpz_class cof = minor.rows() ? minor.det() : mpz_class(1);
            if ((i + j) % 2) cof = -cof;
            inv.at(j, i) = cof * d;  // divide by det = multiply by ±1
        }
    return inv;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

namespace {

struct SnfWork {
    IntMatrix d, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const mpz_class& f) {  // row_dst += f * row_src
        for (int c = 0; c < d.cols(); ++c) d.at(dst, c) += f * d.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(int dst, int src, const mpz_class& f) {
        for (int r = 0; r < d.rows(); ++r) d.at(r, dst) += f * d.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }

    bool pivot_is_lone(int k) const {
        for (int i = k + 1; i < d.rows(); ++i)
            if (d.at(i, k) != 0) return false;
        for (int j = k + 1; j < d.cols(); ++j)
            if (d.at(k, j) != 0) return false;
        return true;
    }

    // Smallest nonzero |entry| in the trailing submatrix; false if all zero.
    bool locate_min(int k, int& bi, int& bj) const {
        bool found = false;
        mpz_class best;
        for (int i = k; i < d.rows(); ++i)
            for (int j = k; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                mpz_class a = abs(d.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        return found;
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    int nmin = std::min(m.rows(), m.cols());

    for (int k = 0; k < nmin; ++k) {
        int bi, bj;
        if (!w.locate_min(k, bi, bj)) break;  // trailing submatrix is zero
        for (;;) {
            w.locate_min(k, bi, bj);
            w.swap_rows(k, bi);
            w.swap_cols(k, bj);
            for (int i = k + 1; i < w.d.rows(); ++i) {
                if (w.d.at(i, k) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.d.at(i, k).get_mpz_t(), w.d.at(k, k).get_mpz_t());
                w.add_row(i, k, -q);
            }
            for (int j = k + 1; j < w.d.cols(); ++j) {
                if (w.d.at(k, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.d.at(k, j).get_mpz_t(), w.d.at(k, k).get_mpz_t());
                w.add_col(j, k, -q);
            }
            if (!w.pivot_is_lone(k)) continue;
            // Pivot must divide the rest of the submatrix.
            int ri = -1, rj = -1;
            for (int i = k + 1; i < w.d.rows() && ri < 0; ++i)
                for (int j = k + 1; j < w.d.cols(); ++j)
                    if (w.d.at(i, j) % w.d.at(k, k) != 0) { ri = i; rj = j; break; }
            if (ri < 0) break;
            w.add_row(k, ri, 1);
            (void)rj;
        }
        if (w.d.at(k, k) < 0) w.negate_row(k);
    }

    SnfResult r;
    r.U = w.u;
    r.V = w.v;
    r.D = w.d;
    for (int k = 0; k < nmin; ++k) {
        r.invariant_factors.push_back(w.d.at(k, k));
        if (w.d.at(k, k) != 0) ++r.rank;
    }
    return r;
}

CoinvariantDecomposition coinvariant_decomposition(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("coinvariant decomposition needs a square matrix");
    SnfResult s = smith_normal_form(m);
    CoinvariantDecomposition c;
    int n = m.rows();
    c.free_rank = n - s.rank;
    for (int i = 0; i < n; ++i) {
        const mpz_class& d = s.D.at(i, i);
        if (d <= 1) continue;
        c.torsion.push_back(d);
        VecQ lift(n);
        for (int j = 0; j < n; ++j) lift[j] = mod1(mpq_class(s.U.at(i, j), d));
        c.torsion_lifts.push_back(lift);
    }
    return c;
}

std::vector<VecZ> kernel_basis(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    std::vector<VecZ> basis;
    int nmin = std::min(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        bool zero_col = j >= nmin || s.D.at(j, j) == 0;
        if (!zero_col) continue;
        VecZ v(m.cols());
        for (int i = 0; i < m.cols(); ++i) v[i] = s.V.at(i, j);
        basis.push_back(v);
    }
    return basis;
}

std::optional<VecQ> solve_linear(const std::vector<VecQ>& columns, const VecQ& target) {
    if (columns.empty()) {
        for (const auto& q : target)
            if (q != 0) return std::nullopt;
        return VecQ{};
    }
    size_t m = columns[0].size(), n = columns.size();
    std::vector<VecQ> a(m, VecQ(n + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
        a[i][n] = target[i];
    }
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[row], a[p]);
        mpq_class inv = 1 / a[row][col];
        for (size_t j = col; j <= n; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(int(col));
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (a[i][n] != 0) return std::nullopt;
    VecQ sol(n, 0);
    for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) sol[pivot_col[r2]] = a[r2][n];
    return sol;
}

mpq_class mod1(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    mpq_class r = q - mpq_class(fl);
    r.canonicalize();
    return r;
}

bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

VecQ mod1(const VecQ& v) {
    VecQ r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = mod1(v[i]);
    return r;
}

}  // namespace extq
