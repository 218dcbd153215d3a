#pragma once

#include "matrix.hpp"

#include <atomic>
#include <string>
#include <vector>

namespace spinstat {

struct invalid_algebra_error : std::runtime_error {
    explicit invalid_algebra_error(const std::string& what) : std::runtime_error(what) {}
};

struct Violation {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string code, std::string detail) {
        violations.push_back({std::move(code), std::move(detail)});
    }
    std::string summary() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.code + ": " + v.detail;
        }
        return s.empty() ? "ok" : s;
    }
};

/// Finite-dimensional superalgebra over Q(i), given by a homogeneous basis
/// with parities, the structure tensor c[i][j][k] (e_i e_j = sum_k c[i][j][k] e_k)
/// and the coefficient vector of the unit.  Values are immutable once built;
/// the axiom-check result is cached (atomically, so shared instances can be
/// validated from several threads).
struct SuperAlgebra {
    int dim = 0;
    std::vector<int> parity;             // 0/1 per basis index
    std::vector<GaussianRational> c;     // dim^3, index (i*dim + j)*dim + k
    Vec unit;

    // 0 = unknown, 1 = valid, 2 = invalid
    mutable std::atomic<signed char> valid_cache{0};

    SuperAlgebra() = default;
    SuperAlgebra(const SuperAlgebra& o)
        : dim(o.dim), parity(o.parity), c(o.c), unit(o.unit), valid_cache(o.valid_cache.load()) {}
    SuperAlgebra(SuperAlgebra&& o) noexcept
        : dim(o.dim), parity(std::move(o.parity)), c(std::move(o.c)), unit(std::move(o.unit)),
          valid_cache(o.valid_cache.load()) {}
    SuperAlgebra& operator=(const SuperAlgebra& o) {
        dim = o.dim;
        parity = o.parity;
        c = o.c;
        unit = o.unit;
        valid_cache.store(o.valid_cache.load());
        return *this;
    }
    SuperAlgebra& operator=(SuperAlgebra&& o) noexcept {
        dim = o.dim;
        parity = std::move(o.parity);
        c = std::move(o.c);
        unit = std::move(o.unit);
        valid_cache.store(o.valid_cache.load());
        return *this;
    }

    const GaussianRational& sc(int i, int j, int k) const {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    GaussianRational& sc(int i, int j, int k) {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    bool purely_even() const {
        for (int p : parity)
            if (p) return false;
        return true;
    }

    Vec basis_product(int i, int j) const {
        Vec v(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) v[static_cast<std::size_t>(k)] = sc(i, j, k);
        return v;
    }

    Vec multiply(const Vec& x, const Vec& y) const {
        Vec out(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            if (x[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (y[static_cast<std::size_t>(j)].is_zero()) continue;
                GaussianRational f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                for (int k = 0; k < dim; ++k) {
                    const GaussianRational& s = sc(i, j, k);
                    if (!s.is_zero()) out[static_cast<std::size_t>(k)] += f * s;
                }
            }
        }
        return out;
    }

    /// Matrix of left multiplication by x: (L_x)[k][j] = (x e_j)_k.
    GMatrix left_mult(const Vec& x) const {
        GMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (x[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) {
                    const GaussianRational& s = sc(i, j, k);
                    if (!s.is_zero()) m.at(k, j) += x[static_cast<std::size_t>(i)] * s;
                }
        }
        return m;
    }
    GMatrix left_mult_basis(int i) const {
        GMatrix m(dim, dim);
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) m.at(k, j) = sc(i, j, k);
        return m;
    }
    /// Matrix of right multiplication by e_i: (R_i)[k][j] = (e_j e_i)_k.
    GMatrix right_mult_basis(int i) const {
        GMatrix m(dim, dim);
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) m.at(k, j) = sc(j, i, k);
        return m;
    }

    Vec basis_vec(int i) const {
        Vec v(static_cast<std::size_t>(dim));
        v[static_cast<std::size_t>(i)] = GaussianRational::one();
        return v;
    }
};

inline ValidationReport validate_algebra(const SuperAlgebra& a) {
    ValidationReport rep;
    if (static_cast<int>(a.parity.size()) != a.dim)
        rep.add("shape", "parity length != dim");
    if (a.c.size() != static_cast<std::size_t>(a.dim) * a.dim * a.dim)
        rep.add("shape", "structure tensor has wrong size");
    if (static_cast<int>(a.unit.size()) != a.dim) rep.add("shape", "unit length != dim");
    if (!rep.ok()) return rep;

    for (int i = 0; i < a.dim; ++i)
        if (a.parity[static_cast<std::size_t>(i)] != 0 && a.parity[static_cast<std::size_t>(i)] != 1)
            rep.add("grading", "parity[" + std::to_string(i) + "] not in {0,1}");

    // grading: c[i][j][k] = 0 unless |k| = |i| + |j| mod 2
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                if (!a.sc(i, j, k).is_zero() &&
                    ((a.parity[static_cast<std::size_t>(i)] + a.parity[static_cast<std::size_t>(j)]) & 1) !=
                        a.parity[static_cast<std::size_t>(k)]) {
                    rep.add("grading", "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                            std::to_string(k) + "] breaks parity");
                }

    // unit laws and evenness
    for (int i = 0; i < a.dim; ++i)
        if (a.parity[static_cast<std::size_t>(i)] == 1 && !a.unit[static_cast<std::size_t>(i)].is_zero())
            rep.add("unit", "unit has odd component at " + std::to_string(i));
    for (int j = 0; j < a.dim; ++j) {
        Vec ej = a.basis_vec(j);
        if (a.multiply(a.unit, ej) != ej) rep.add("unit", "unit*e_" + std::to_string(j) + " != e_" + std::to_string(j));
        if (a.multiply(ej, a.unit) != ej) rep.add("unit", "e_" + std::to_string(j) + "*unit != e_" + std::to_string(j));
    }

    // associativity on basis triples, with sparse accumulation
    const int d = a.dim;
    std::vector<std::vector<std::pair<int, const GaussianRational*>>> nz(
        static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const GaussianRational& s = a.sc(i, j, k);
                if (!s.is_zero()) nz[static_cast<std::size_t>(i) * d + j].push_back({k, &s});
            }
    Vec buf_l(static_cast<std::size_t>(d)), buf_r(static_cast<std::size_t>(d));
    std::vector<int> touched;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& ij = nz[static_cast<std::size_t>(i) * d + j];
            for (int k = 0; k < d; ++k) {
                for (const auto& [m, cm] : ij)
                    for (const auto& [l, cl] : nz[static_cast<std::size_t>(m) * d + k]) {
                        if (buf_l[static_cast<std::size_t>(l)].is_zero() &&
                            buf_r[static_cast<std::size_t>(l)].is_zero())
                            touched.push_back(l);
                        buf_l[static_cast<std::size_t>(l)] += *cm * *cl;
                    }
                for (const auto& [m, cm] : nz[static_cast<std::size_t>(j) * d + k])
                    for (const auto& [l, cl] : nz[static_cast<std::size_t>(i) * d + m]) {
                        if (buf_l[static_cast<std::size_t>(l)].is_zero() &&
                            buf_r[static_cast<std::size_t>(l)].is_zero())
                            touched.push_back(l);
                        buf_r[static_cast<std::size_t>(l)] += *cm * *cl;
                    }
                bool bad = false;
                for (int l : touched)
                    if (buf_l[static_cast<std::size_t>(l)] != buf_r[static_cast<std::size_t>(l)]) bad = true;
                if (bad)
                    rep.add("associativity", "(e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                                 ") e_" + std::to_string(k) + " != e_" + std::to_string(i) +
                                                 " (e_" + std::to_string(j) + " e_" + std::to_string(k) + ")");
                for (int l : touched) {
                    buf_l[static_cast<std::size_t>(l)] = GaussianRational();
                    buf_r[static_cast<std::size_t>(l)] = GaussianRational();
                }
                touched.clear();
            }
        }
    return rep;
}

inline void require_valid(const SuperAlgebra& a) {
    signed char cached = a.valid_cache.load();
    if (cached == 1) return;
    if (cached == 2) throw invalid_algebra_error("algebra failed validation");
    ValidationReport rep = validate_algebra(a);
    a.valid_cache.store(rep.ok() ? 1 : 2);
    if (!rep.ok()) throw invalid_algebra_error(rep.summary());
}

/// Nondegeneracy of the trace form of the left regular representation of the
/// underlying ungraded algebra; over characteristic zero this is exactly
/// semisimplicity.
inline GMatrix regular_trace_form(const SuperAlgebra& a) {
    // T[i][j] = trace(L_i L_j) = sum_{b,k} c[i][b][k] c[j][k][b]
    GMatrix t(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i) {
        for (int b = 0; b < a.dim; ++b)
            for (int k = 0; k < a.dim; ++k) {
                const GaussianRational& x = a.sc(i, b, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < a.dim; ++j) {
                    const GaussianRational& y = a.sc(j, k, b);
                    if (!y.is_zero()) t.at(i, j) += x * y;
                }
            }
    }
    return t;
}

inline bool is_semisimple(const SuperAlgebra& a) {
    require_valid(a);
    if (a.dim == 0) return true;
    return !determinant(regular_trace_form(a)).is_zero();
}

/// Echelon-normalized basis of the ungraded center.
inline std::vector<Vec> center(const SuperAlgebra& a) {
    require_valid(a);
    // z central iff for all j,k: sum_i z_i (c[i][j][k] - c[j][i][k]) = 0
    std::vector<Vec> rows;
    for (int j = 0; j < a.dim; ++j)
        for (int k = 0; k < a.dim; ++k) {
            Vec row(static_cast<std::size_t>(a.dim));
            bool nonzero = false;
            for (int i = 0; i < a.dim; ++i) {
                GaussianRational d = a.sc(i, j, k) - a.sc(j, i, k);
                if (!d.is_zero()) nonzero = true;
                row[static_cast<std::size_t>(i)] = d;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    GMatrix m(static_cast<int>(rows.size()), a.dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int i = 0; i < a.dim; ++i) m.at(static_cast<int>(r), i) = rows[r][static_cast<std::size_t>(i)];
    return kernel_basis(std::move(m));
}

/// Quotient by the span of the ungraded commutators e_i e_j - e_j e_i.
inline QuotientSpace cocenter(const SuperAlgebra& a) {
    require_valid(a);
    std::vector<Vec> span;
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j) {
            Vec v = a.basis_product(i, j);
            Vec w = a.basis_product(j, i);
            bool nonzero = false;
            for (int k = 0; k < a.dim; ++k) {
                v[static_cast<std::size_t>(k)] -= w[static_cast<std::size_t>(k)];
                if (!v[static_cast<std::size_t>(k)].is_zero()) nonzero = true;
            }
            if (nonzero) span.push_back(std::move(v));
        }
    return quotient_by_span(span, a.dim);
}

/// Quotient by the span of the super-commutators e_i e_j - (-1)^{|i||j|} e_j e_i.
inline QuotientSpace super_cocenter(const SuperAlgebra& a, bool twist_by_parity = false) {
    require_valid(a);
    std::vector<Vec> span;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            int sgn = (a.parity[static_cast<std::size_t>(i)] & a.parity[static_cast<std::size_t>(j)]) ? -1 : 1;
            if (twist_by_parity && a.parity[static_cast<std::size_t>(j)]) sgn = -sgn;
            Vec v = a.basis_product(i, j);
            Vec w = a.basis_product(j, i);
            bool nonzero = false;
            for (int k = 0; k < a.dim; ++k) {
                if (sgn > 0)
                    v[static_cast<std::size_t>(k)] -= w[static_cast<std::size_t>(k)];
                else
                    v[static_cast<std::size_t>(k)] += w[static_cast<std::size_t>(k)];
                if (!v[static_cast<std::size_t>(k)].is_zero()) nonzero = true;
            }
            if (nonzero) span.push_back(std::move(v));
        }
    return quotient_by_span(span, a.dim);
}

inline SuperAlgebra underlying_algebra(const SuperAlgebra& a) {
    SuperAlgebra out = a;
    std::fill(out.parity.begin(), out.parity.end(), 0);
    return out;
}

/// Graded opposite: c_op[i][j][k] = (-1)^{|i||j|} c[j][i][k].
inline SuperAlgebra opposite(const SuperAlgebra& a) {
    require_valid(a);
    SuperAlgebra out = a;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            int sgn = (a.parity[static_cast<std::size_t>(i)] & a.parity[static_cast<std::size_t>(j)]) ? -1 : 1;
            for (int k = 0; k < a.dim; ++k)
                out.sc(i, j, k) = sgn > 0 ? a.sc(j, i, k) : -a.sc(j, i, k);
        }
    return out;
}

inline SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
    require_valid(a);
    require_valid(b);
    SuperAlgebra out;
    out.dim = a.dim + b.dim;
    out.parity = a.parity;
    out.parity.insert(out.parity.end(), b.parity.begin(), b.parity.end());
    out.c.assign(static_cast<std::size_t>(out.dim) * out.dim * out.dim, GaussianRational());
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) out.sc(i, j, k) = a.sc(i, j, k);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < b.dim; ++k) out.sc(a.dim + i, a.dim + j, a.dim + k) = b.sc(i, j, k);
    out.unit = a.unit;
    out.unit.insert(out.unit.end(), b.unit.begin(), b.unit.end());
    return out;
}

/// A semidirect product A x Z/2 = A + A*eps for the parity action: eps is
/// even, eps^2 = 1 and eps a = (-1)^{|a|} a eps.  Basis order: e_0..e_{d-1},
/// e_0 eps .. e_{d-1} eps.
inline SuperAlgebra parity_semidirect(const SuperAlgebra& a) {
    require_valid(a);
    int d = a.dim;
    SuperAlgebra out;
    out.dim = 2 * d;
    out.parity.resize(static_cast<std::size_t>(2 * d));
    for (int i = 0; i < d; ++i) {
        out.parity[static_cast<std::size_t>(i)] = a.parity[static_cast<std::size_t>(i)];
        out.parity[static_cast<std::size_t>(d + i)] = a.parity[static_cast<std::size_t>(i)];
    }
    out.c.assign(static_cast<std::size_t>(out.dim) * out.dim * out.dim, GaussianRational());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int sj = a.parity[static_cast<std::size_t>(j)] ? -1 : 1;
            for (int k = 0; k < d; ++k) {
                const GaussianRational& s = a.sc(i, j, k);
                if (s.is_zero()) continue;
                // e_i * e_j
                out.sc(i, j, k) = s;
                // e_i * (e_j eps) = (e_i e_j) eps
                out.sc(i, d + j, d + k) = s;
                // (e_i eps) * e_j = (-1)^{|j|} (e_i e_j) eps
                out.sc(d + i, j, d + k) = sj > 0 ? s : -s;
                // (e_i eps) * (e_j eps) = (-1)^{|j|} e_i e_j
                out.sc(d + i, d + j, k) = sj > 0 ? s : -s;
            }
        }
    out.unit = a.unit;
    out.unit.resize(static_cast<std::size_t>(2 * d));
    return out;
}

// ---------------------------------------------------------------------------
// Star structures and trace functionals

enum class StarFlavor { Ordinary, Twisted };

/// Antilinear map x -> x* encoded as (matrix, implicit conjugation): the image
/// of a coefficient vector v is matrix * conj(v).
struct StarStructure {
    GMatrix matrix;
    StarFlavor flavor = StarFlavor::Ordinary;

    Vec apply(const Vec& v) const {
        Vec cv = v;
        for (auto& x : cv) x = x.conj();
        return matrix.apply(cv);
    }
};

inline ValidationReport validate_star(const SuperAlgebra& a, const StarStructure& s) {
    ValidationReport rep;
    if (s.matrix.rows != a.dim || s.matrix.cols != a.dim) {
        rep.add("shape", "star matrix is not dim x dim");
        return rep;
    }
    // involutive: S * conj(S) = I
    if (s.matrix * s.matrix.conjugate() != GMatrix::identity(a.dim))
        rep.add("involution", "(x*)* != x");
    // parity preserving
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (!s.matrix.at(i, j).is_zero() &&
                a.parity[static_cast<std::size_t>(i)] != a.parity[static_cast<std::size_t>(j)])
                rep.add("parity", "star mixes parities at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    // sign rule on homogeneous basis pairs
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec lhs = s.apply(a.basis_product(i, j));
            Vec rhs = a.multiply(s.apply(a.basis_vec(j)), s.apply(a.basis_vec(i)));
            bool flip = s.flavor == StarFlavor::Ordinary &&
                        (a.parity[static_cast<std::size_t>(i)] & a.parity[static_cast<std::size_t>(j)]);
            if (flip)
                for (auto& x : rhs) x = -x;
            if (lhs != rhs)
                rep.add("sign-rule", "(e_" + std::to_string(i) + " e_" + std::to_string(j) + ")* mismatch");
        }
    return rep;
}

struct TraceFunctional {
    Vec covector;

    GaussianRational operator()(const Vec& v) const {
        GaussianRational acc;
        for (std::size_t k = 0; k < covector.size(); ++k)
            if (!covector[k].is_zero() && !v[k].is_zero()) acc += covector[k] * v[k];
        return acc;
    }
};

// ---------------------------------------------------------------------------
// Catalog constructors

/// Clifford algebra Cliff(n) with odd generators x_1..x_n, x_j^2 = 1 and
/// x_j x_k = -x_k x_j.  Basis monomials x_S indexed by subsets of {1..n} as
/// bitmasks in increasing mask order.
inline SuperAlgebra cliff(int n) {
    int d = 1 << n;
    SuperAlgebra a;
    a.dim = d;
    a.parity.resize(static_cast<std::size_t>(d));
    for (int s = 0; s < d; ++s) a.parity[static_cast<std::size_t>(s)] = __builtin_popcount(static_cast<unsigned>(s)) & 1;
    a.c.assign(static_cast<std::size_t>(d) * d * d, GaussianRational());
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
            // sign from moving each generator of t left past the larger generators of s
            int sign = 1;
            for (int g = 0; g < n; ++g) {
                if (!(t & (1 << g))) continue;
                int higher = s >> (g + 1);
                if (__builtin_popcount(static_cast<unsigned>(higher)) & 1) sign = -sign;
            }
            a.sc(s, t, s ^ t) = GaussianRational(sign);
        }
    a.unit.assign(static_cast<std::size_t>(d), GaussianRational());
    a.unit[0] = GaussianRational::one();
    return a;
}

/// Purely even matrix algebra Mat_k with basis E_{ab} at index a*k + b.
inline SuperAlgebra mat(int k) {
    int d = k * k;
    SuperAlgebra a;
    a.dim = d;
    a.parity.assign(static_cast<std::size_t>(d), 0);
    a.c.assign(static_cast<std::size_t>(d) * d * d, GaussianRational());
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s)
                    if (q == r) a.sc(p * k + q, r * k + s, p * k + s) = GaussianRational::one();
    a.unit.assign(static_cast<std::size_t>(d), GaussianRational());
    for (int p = 0; p < k; ++p) a.unit[static_cast<std::size_t>(p * k + p)] = GaussianRational::one();
    return a;
}

/// Group algebra of Z/n, purely even, basis g^0..g^{n-1}.
inline SuperAlgebra group_algebra_zn(int n) {
    SuperAlgebra a;
    a.dim = n;
    a.parity.assign(static_cast<std::size_t>(n), 0);
    a.c.assign(static_cast<std::size_t>(n) * n * n, GaussianRational());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.sc(i, j, (i + j) % n) = GaussianRational::one();
    a.unit.assign(static_cast<std::size_t>(n), GaussianRational());
    a.unit[0] = GaussianRational::one();
    return a;
}

/// Q(i)[x]/(x^2 = s) with x even.
inline SuperAlgebra poly_sq(const GaussianRational& s) {
    SuperAlgebra a;
    a.dim = 2;
    a.parity = {0, 0};
    a.c.assign(8, GaussianRational());
    a.sc(0, 0, 0) = GaussianRational::one();
    a.sc(0, 1, 1) = GaussianRational::one();
    a.sc(1, 0, 1) = GaussianRational::one();
    a.sc(1, 1, 0) = s;
    a.unit = {GaussianRational::one(), GaussianRational::zero()};
    return a;
}

inline SuperAlgebra scalar_algebra() {
    SuperAlgebra a;
    a.dim = 1;
    a.parity = {0};
    a.c = {GaussianRational::one()};
    a.unit = {GaussianRational::one()};
    return a;
}

/// Split commutative algebra Q(i)^n on orthogonal idempotents.
inline SuperAlgebra split_algebra(int n) {
    SuperAlgebra a;
    a.dim = n;
    a.parity.assign(static_cast<std::size_t>(n), 0);
    a.c.assign(static_cast<std::size_t>(n) * n * n, GaussianRational());
    for (int i = 0; i < n; ++i) a.sc(i, i, i) = GaussianRational::one();
    a.unit.assign(static_cast<std::size_t>(n), GaussianRational::one());
    return a;
}

inline SuperAlgebra zero_algebra() { return SuperAlgebra{}; }

/// Star with x_j* = i x_j (ordinary flavor) or x_j* = x_j (twisted flavor) on
/// Cliff(n), extended as an antilinear anti-automorphism with the flavor's
/// sign rule.
inline StarStructure cliff_star(const SuperAlgebra& a, int n, StarFlavor flavor) {
    int d = 1 << n;
    StarStructure st;
    st.flavor = flavor;
    st.matrix = GMatrix(d, d);
    for (int s = 0; s < d; ++s) {
        // star of the monomial x_S: reversed product of generator stars
        Vec img = a.unit;
        std::vector<int> gens;
        for (int g = 0; g < n; ++g)
            if (s & (1 << g)) gens.push_back(g);
        for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
            Vec xg = a.basis_vec(1 << *it);
            if (flavor == StarFlavor::Ordinary)
                for (auto& x : xg) x *= GaussianRational::i();
            img = a.multiply(img, xg);
        }
        if (flavor == StarFlavor::Ordinary) {
            // the ordinary sign rule inserts (-1)^{|u||v|} per swap; for a
            // monomial of length m this accumulates to (-1)^{m(m-1)/2}
            int m = static_cast<int>(gens.size());
            if (((m * (m - 1) / 2) & 1) != 0)
                for (auto& x : img) x = -x;
        }
        for (int k = 0; k < d; ++k) st.matrix.at(k, s) = img[static_cast<std::size_t>(k)];
    }
    return st;
}

/// Complex-conjugation star on a purely even algebra with real structure
/// constants (the identity matrix with implicit conjugation).
inline StarStructure conjugation_star(const SuperAlgebra& a) {
    StarStructure st;
    st.flavor = StarFlavor::Ordinary;
    st.matrix = GMatrix::identity(a.dim);
    return st;
}

}  // namespace spinstat
