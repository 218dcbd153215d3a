#pragma once

#include "scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinstat {

struct not_hermitian_error : std::runtime_error {
    not_hermitian_error() : std::runtime_error("matrix is not Hermitian") {}
};
struct kind_mismatch_error : std::runtime_error {
    explicit kind_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};
struct singular_matrix_error : std::runtime_error {
    singular_matrix_error() : std::runtime_error("matrix is singular") {}
};

using Vec = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).  All arithmetic is exact.
struct GMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<GaussianRational> entries;  // rows * cols, row-major

    GMatrix() = default;
    GMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    GaussianRational& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const GaussianRational& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }

    static GMatrix identity(int n) {
        GMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational::one();
        return m;
    }
    static GMatrix from_rows(const std::vector<Vec>& rows_in) {
        if (rows_in.empty()) return GMatrix();
        GMatrix m(static_cast<int>(rows_in.size()), static_cast<int>(rows_in[0].size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
        return m;
    }
    static GMatrix column(const Vec& v) {
        GMatrix m(static_cast<int>(v.size()), 1);
        for (int i = 0; i < m.rows; ++i) m.at(i, 0) = v[i];
        return m;
    }

    bool is_square() const { return rows == cols; }

    GMatrix transpose() const {
        GMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }
    GMatrix conjugate() const {
        GMatrix c = *this;
        for (auto& e : c.entries) e = e.conj();
        return c;
    }
    GMatrix dagger() const { return conjugate().transpose(); }

    friend bool operator==(const GMatrix& a, const GMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
    friend bool operator!=(const GMatrix& a, const GMatrix& b) { return !(a == b); }

    friend GMatrix operator+(const GMatrix& a, const GMatrix& b) {
        GMatrix r = a;
        for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] += b.entries[k];
        return r;
    }
    friend GMatrix operator-(const GMatrix& a, const GMatrix& b) {
        GMatrix r = a;
        for (std::size_t k = 0; k < r.entries.size(); ++k) r.entries[k] -= b.entries[k];
        return r;
    }
    friend GMatrix operator*(const GMatrix& a, const GMatrix& b) {
        GMatrix r(a.rows, b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                const GaussianRational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols; ++j) {
                    const GaussianRational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend GMatrix operator*(const GaussianRational& s, const GMatrix& a) {
        GMatrix r = a;
        for (auto& e : r.entries) e *= s;
        return r;
    }

    Vec apply(const Vec& v) const {
        Vec out(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            GaussianRational acc;
            for (int j = 0; j < cols; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    bool is_hermitian() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j <= i; ++j)
                if (at(i, j) != at(j, i).conj()) return false;
        return true;
    }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < i; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
    bool is_real() const {
        for (const auto& e : entries)
            if (e.im != 0) return false;
        return true;
    }
};

inline std::string to_string(const Vec& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += to_string(v[k]);
    }
    return s + "]";
}

inline std::string to_string(const GMatrix& m) {
    std::string s = "[";
    for (int i = 0; i < m.rows; ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < m.cols; ++j) {
            if (j) s += ",";
            s += to_string(m.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

/// Row echelon form with deterministic pivoting (lowest row index with a
/// nonzero entry in the lowest unused column).  Returns pivot column list.
inline std::vector<int> rref_in_place(GMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        GaussianRational inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col);
            for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(GMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

/// Basis of the right null space, echelon-normalized: each vector has first
/// nonzero entry 1 and the vectors are ordered by free column index.
inline std::vector<Vec> kernel_basis(GMatrix m) {
    std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(m.cols));
        v[static_cast<std::size_t>(f)] = GaussianRational::one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), f);
        // normalize so the first nonzero entry is 1
        for (auto& x : v)
            if (!x.is_zero()) {
                GaussianRational inv = x.inverse();
                for (auto& y : v) y *= inv;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline GaussianRational determinant(GMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    GaussianRational det = GaussianRational::one();
    int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) { sel = r; break; }
        if (sel < 0) return GaussianRational::zero();
        if (sel != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        GaussianRational inv = m.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col) * inv;
            for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return det;
}

inline GMatrix inverse(const GMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    GMatrix work(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) work.at(i, j) = m.at(i, j);
        work.at(i, n + i) = GaussianRational::one();
    }
    std::vector<int> pivots = rref_in_place(work);
    // invertible exactly when the pivots fill the first n columns
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n) - 1] != n - 1)
        throw singular_matrix_error();
    GMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = work.at(i, n + j);
    return out;
}

inline GaussianRational leading_principal_minor(const GMatrix& m, int k) {
    GMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
    return determinant(std::move(sub));
}

/// Sylvester criterion: a Hermitian form is positive-definite iff every
/// leading principal minor is a positive rational.  Minors of a Hermitian
/// matrix are real; singular forms come out "false", never an error.
inline bool is_positive_definite_hermitian(const GMatrix& g) {
    if (!g.is_hermitian()) throw not_hermitian_error();
    for (int k = 1; k <= g.rows; ++k) {
        GaussianRational d = leading_principal_minor(g, k);
        if (d.im != 0) throw std::logic_error("Hermitian minor with nonzero imaginary part");
        if (!(d.re > 0)) return false;
    }
    return true;
}

enum class FormKind { Hermitian, ComplexSymmetric };

/// Real symmetric Gram matrix of twice the real part of the form on the
/// underlying real space, in the blocked basis (e_1..e_n, i*e_1..i*e_n).
inline GMatrix realify_form(const GMatrix& g, FormKind kind) {
    if (!g.is_square()) throw kind_mismatch_error("realify_form requires a square matrix");
    if (kind == FormKind::Hermitian && !g.is_hermitian())
        throw kind_mismatch_error("realify_form: matrix is not Hermitian");
    if (kind == FormKind::ComplexSymmetric && !g.is_symmetric())
        throw kind_mismatch_error("realify_form: matrix is not complex-symmetric");
    int n = g.rows;
    GMatrix out(2 * n, 2 * n);
    Rational two(2);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Rational re2 = two * g.at(j, k).re;
            Rational im2 = two * g.at(j, k).im;
            out.at(j, k) = GaussianRational(re2);
            out.at(j, n + k) = GaussianRational(-im2);
            if (kind == FormKind::Hermitian) {
                out.at(n + j, k) = GaussianRational(im2);
                out.at(n + j, n + k) = GaussianRational(re2);
            } else {
                out.at(n + j, k) = GaussianRational(-im2);
                out.at(n + j, n + k) = GaussianRational(-re2);
            }
        }
    return out;
}

/// Conjugate-congruence diagonalization of a Hermitian matrix: returns C with
/// invertible columns and the real diagonal d of C^dagger G C.  Exact; used
/// for signatures and non-positivity witnesses.
struct HermitianDiagonalization {
    GMatrix basis;          // columns c_i
    std::vector<Rational> diag;  // d_i = c_i^* G c_i
};

inline HermitianDiagonalization diagonalize_hermitian(const GMatrix& g_in) {
    if (!g_in.is_hermitian()) throw not_hermitian_error();
    int n = g_in.rows;
    GMatrix g = g_in;
    GMatrix c = GMatrix::identity(n);
    auto add_col = [&](GMatrix& m, int dst, int src, const GaussianRational& f) {
        for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
    };
    auto swap_col = [&](GMatrix& m, int a, int b) {
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
    };
    for (int k = 0; k < n; ++k) {
        if (g.at(k, k).is_zero()) {
            int sel = -1;
            for (int j = k + 1; j < n; ++j)
                if (!g.at(j, j).is_zero()) { sel = j; break; }
            if (sel >= 0) {
                swap_col(g, k, sel);
                for (int j = 0; j < n; ++j) std::swap(g.at(k, j), g.at(sel, j));
                swap_col(c, k, sel);
            } else {
                // all remaining diagonal entries vanish; manufacture one from an
                // off-diagonal entry g_jk != 0 via e_j + t*e_k
                int sj = -1, sk = -1;
                for (int a = k; a < n && sj < 0; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (!g.at(a, b).is_zero()) { sj = a; sk = b; break; }
                if (sj < 0) break;  // remaining block is zero
                GaussianRational t = GaussianRational::one();
                if (g.at(sj, sk).re == 0) t = GaussianRational::i();
                // col_sj += t * col_sk, row_sj += conj(t) * row_sk
                add_col(g, sj, sk, t);
                for (int j = 0; j < n; ++j) g.at(sj, j) += t.conj() * g.at(sk, j);
                add_col(c, sj, sk, t);
                if (sj != k) {
                    swap_col(g, k, sj);
                    for (int j = 0; j < n; ++j) std::swap(g.at(k, j), g.at(sj, j));
                    swap_col(c, k, sj);
                }
            }
        }
        if (g.at(k, k).is_zero()) continue;
        GaussianRational inv = g.at(k, k).inverse();
        for (int j = k + 1; j < n; ++j) {
            if (g.at(k, j).is_zero()) continue;
            GaussianRational f = -(inv * g.at(k, j));
            add_col(g, j, k, f);
            // corresponding row operation: row_j += conj(f) * row_k
            for (int r = 0; r < n; ++r) g.at(j, r) += f.conj() * g.at(k, r);
            add_col(c, j, k, f);
        }
    }
    HermitianDiagonalization out;
    out.basis = c;
    out.diag.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        if (g.at(k, k).im != 0) throw std::logic_error("diagonalization produced complex diagonal");
        out.diag[static_cast<std::size_t>(k)] = g.at(k, k).re;
    }
    return out;
}

/// (positive count, negative count) of a Hermitian form; zeros are dropped.
inline std::pair<int, int> signature_hermitian(const GMatrix& g) {
    HermitianDiagonalization d = diagonalize_hermitian(g);
    int pos = 0, neg = 0;
    for (const Rational& x : d.diag) {
        if (x > 0) ++pos;
        else if (x < 0) ++neg;
    }
    return {pos, neg};
}

/// A vector v with v^* G v <= 0, when the Hermitian form is not
/// positive-definite (nullopt for positive-definite and for 0x0 forms).
inline std::optional<Vec> nonpositive_witness(const GMatrix& g) {
    HermitianDiagonalization d = diagonalize_hermitian(g);
    for (int k = 0; k < g.rows; ++k) {
        if (d.diag[static_cast<std::size_t>(k)] <= 0) {
            Vec v(static_cast<std::size_t>(g.rows));
            for (int r = 0; r < g.rows; ++r) v[static_cast<std::size_t>(r)] = d.basis.at(r, k);
            return v;
        }
    }
    return std::nullopt;
}

inline GMatrix kronecker(const GMatrix& a, const GMatrix& b) {
    GMatrix out(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int p = 0; p < b.rows; ++p)
                for (int q = 0; q < b.cols; ++q)
                    out.at(i * b.rows + p, j * b.cols + q) = a.at(i, j) * b.at(p, q);
        }
    return out;
}

/// Quotient of an ambient coordinate space by the span of a list of vectors.
/// The quotient basis is the set of classes [e_q] for the non-pivot columns q
/// of the echelonized span; `projection` maps ambient coordinates to quotient
/// coordinates.
struct QuotientSpace {
    int ambient_dim = 0;
    std::vector<Vec> span_echelon;  // echelon basis of the span (rows)
    std::vector<int> pivot_cols;
    std::vector<int> class_cols;  // representatives e_q
    GMatrix projection;           // (ambient - rank) x ambient

    int dim() const { return static_cast<int>(class_cols.size()); }
    Vec representative(int j) const {
        Vec v(static_cast<std::size_t>(ambient_dim));
        v[static_cast<std::size_t>(class_cols[static_cast<std::size_t>(j)])] = GaussianRational::one();
        return v;
    }
    Vec project(const Vec& v) const { return projection.apply(v); }
};

inline QuotientSpace quotient_by_span(const std::vector<Vec>& span, int ambient_dim) {
    GMatrix m(static_cast<int>(span.size()), ambient_dim);
    for (std::size_t i = 0; i < span.size(); ++i)
        for (int j = 0; j < ambient_dim; ++j) m.at(static_cast<int>(i), j) = span[i][static_cast<std::size_t>(j)];
    std::vector<int> pivots = rref_in_place(m);
    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    q.pivot_cols = pivots;
    std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_dim), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int jcol = 0; jcol < ambient_dim; ++jcol)
        if (!is_pivot[static_cast<std::size_t>(jcol)]) q.class_cols.push_back(jcol);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Vec row(static_cast<std::size_t>(ambient_dim));
        for (int j = 0; j < ambient_dim; ++j) row[static_cast<std::size_t>(j)] = m.at(static_cast<int>(r), j);
        q.span_echelon.push_back(std::move(row));
    }
    q.projection = GMatrix(q.dim(), ambient_dim);
    for (int j = 0; j < q.dim(); ++j) {
        int qc = q.class_cols[static_cast<std::size_t>(j)];
        q.projection.at(j, qc) = GaussianRational::one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            q.projection.at(j, pivots[r]) = -q.span_echelon[r][static_cast<std::size_t>(qc)];
    }
    return q;
}

}  // namespace spinstat
