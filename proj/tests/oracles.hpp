#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <spinstat/catalog.hpp>

#include <random>

namespace oracles {

using namespace spinstat;

// ---------------------------------------------------------------------------
// Seeded generators

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long small_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }
    Rational rational() {
        long num = small_int(-4, 4);
        long den = small_int(1, 3);
        return Rational(num, den);
    }
    GaussianRational scalar() { return {rational(), rational()}; }

    GMatrix hermitian(int n) {
        GMatrix g(n, n);
        for (int i = 0; i < n; ++i) {
            g.at(i, i) = GaussianRational(rational());
            for (int j = i + 1; j < n; ++j) {
                g.at(i, j) = scalar();
                g.at(j, i) = g.at(i, j).conj();
            }
        }
        return g;
    }
    GMatrix invertible(int n) {
        for (;;) {
            GMatrix m(n, n);
            for (auto& e : m.entries) e = GaussianRational(Rational(small_int(-3, 3)));
            if (!determinant(m).is_zero()) return m;
        }
    }
};

// ---------------------------------------------------------------------------
// Definiteness oracle: LDL^dagger without pivoting.  For a Hermitian matrix,
// positive-definiteness is equivalent to the factorization running to
// completion with every pivot positive.

inline bool ldl_positive_definite(GMatrix g) {
    if (!g.is_hermitian()) throw std::invalid_argument("ldl oracle needs Hermitian input");
    int n = g.rows;
    for (int k = 0; k < n; ++k) {
        GaussianRational piv = g.at(k, k);
        if (piv.im != 0) throw std::logic_error("Hermitian diagonal must be real");
        if (!(piv.re > 0)) return false;
        GaussianRational inv = piv.inverse();
        // Schur complement of the leading 1x1 block
        for (int i = k + 1; i < n; ++i) {
            if (g.at(i, k).is_zero()) continue;
            GaussianRational f = g.at(i, k) * inv;
            for (int j = k + 1; j < n; ++j) g.at(i, j) -= f * g.at(k, j);
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Determinant by cofactor expansion (small matrices only).

inline GaussianRational cofactor_determinant(const GMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("square only");
    int n = m.rows;
    if (n == 0) return GaussianRational::one();
    if (n == 1) return m.at(0, 0);
    GaussianRational det;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        GMatrix sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        GaussianRational term = m.at(0, j) * cofactor_determinant(sub);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// ---------------------------------------------------------------------------
// Genus-g partition value by explicit cap/pants/copants matrix composition:
// Z_g = counit . (pants . copants)^g . unit, where pants is the
// multiplication matrix A (x) A -> A and copants the comultiplication
// A -> A (x) A dual to it under the Gram form (inverted by cofactors).

inline GaussianRational pants_partition(const FrobeniusAlgebra& f, int genus) {
    int d = f.algebra.dim;
    // Gram inverse via adjugate (independent of Gaussian elimination)
    GMatrix g = f.gram();
    GaussianRational det = cofactor_determinant(g);
    if (det.is_zero()) throw std::invalid_argument("degenerate Frobenius form");
    GMatrix ginv(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            GMatrix sub(d - 1, d - 1);
            for (int r = 0, rr = 0; r < d; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < d; ++c) {
                    if (c == i) continue;
                    sub.at(rr, cc++) = g.at(r, c);
                }
                ++rr;
            }
            GaussianRational cof = cofactor_determinant(sub);
            if ((i + j) % 2 == 1) cof = -cof;
            ginv.at(i, j) = cof / det;
        }
    // pants: (d) x (d^2), column (a*d + b) = coefficients of e_a e_b
    GMatrix pants(d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int k = 0; k < d; ++k) pants.at(k, a * d + b) = f.algebra.sc(a, b, k);
    // copants: (d^2) x (d), column k = sum_i (e_k e_i) (x) e^i
    GMatrix copants(d * d, d);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) {
            Vec prod = f.algebra.basis_product(k, i);
            for (int a = 0; a < d; ++a) {
                if (prod[static_cast<std::size_t>(a)].is_zero()) continue;
                for (int j = 0; j < d; ++j) {
                    // e^i = sum_j ginv[j][i] e_j
                    GaussianRational term = prod[static_cast<std::size_t>(a)] * ginv.at(j, i);
                    if (!term.is_zero()) copants.at(a * d + j, k) += term;
                }
            }
        }
    GMatrix handle_op = pants * copants;  // d x d
    Vec state = f.algebra.unit;
    for (int s = 0; s < genus; ++s) state = handle_op.apply(state);
    return f.trace(state);
}

// ---------------------------------------------------------------------------
// Radical certificate: the kernel of the regular trace form, verified to be a
// nilpotent two-sided ideal.  Semisimplicity holds exactly when the certified
// radical is zero.

struct RadicalCertificate {
    std::vector<Vec> basis;      // radical basis
    bool verified_ideal = false;
    bool verified_nilpotent = false;
};

inline RadicalCertificate radical_certificate(const SuperAlgebra& a) {
    RadicalCertificate cert;
    cert.basis = kernel_basis(regular_trace_form(a));
    // span helper: echelon reduce and test membership
    auto in_span = [](const std::vector<Vec>& span, const Vec& v) {
        if (span.empty()) {
            for (const auto& x : v)
                if (!x.is_zero()) return false;
            return true;
        }
        int dim = static_cast<int>(v.size());
        GMatrix m(static_cast<int>(span.size()) + 1, dim);
        for (std::size_t r = 0; r < span.size(); ++r)
            for (int c = 0; c < dim; ++c) m.at(static_cast<int>(r), c) = span[r][static_cast<std::size_t>(c)];
        int base_rank = rank(m);
        for (int c = 0; c < dim; ++c) m.at(static_cast<int>(span.size()), c) = v[static_cast<std::size_t>(c)];
        return rank(m) == base_rank;
    };
    cert.verified_ideal = true;
    for (const Vec& r : cert.basis)
        for (int j = 0; j < a.dim; ++j) {
            if (!in_span(cert.basis, a.multiply(r, a.basis_vec(j)))) cert.verified_ideal = false;
            if (!in_span(cert.basis, a.multiply(a.basis_vec(j), r))) cert.verified_ideal = false;
        }
    // nilpotency: iterated products of the radical eventually span only zero
    std::vector<Vec> power = cert.basis;
    int steps = 0;
    while (!power.empty() && steps <= a.dim) {
        std::vector<Vec> next;
        for (const Vec& u : power)
            for (const Vec& v : cert.basis) {
                Vec w = a.multiply(u, v);
                bool nonzero = false;
                for (const auto& x : w)
                    if (!x.is_zero()) nonzero = true;
                if (nonzero) next.push_back(std::move(w));
            }
        power = std::move(next);
        ++steps;
    }
    cert.verified_nilpotent = power.empty();
    return cert;
}

inline bool semisimple_oracle(const SuperAlgebra& a) {
    RadicalCertificate cert = radical_certificate(a);
    if (!cert.verified_ideal || !cert.verified_nilpotent)
        throw std::logic_error("radical certificate failed verification");
    return cert.basis.empty();
}

// ---------------------------------------------------------------------------
// |H^2(Z/2; A)| by brute-force enumeration of normalized 2-cocycles modulo
// coboundaries, for a small abelian group A given by cyclic orders.

inline long h2_z2_oracle(const FiniteAbelianGroup& coeffs) {
    // elements of A as tuples
    std::vector<std::vector<long>> elts{{}};
    for (long n : coeffs.cyclic_orders) {
        std::vector<std::vector<long>> next;
        for (const auto& e : elts)
            for (long v = 0; v < n; ++v) {
                auto e2 = e;
                e2.push_back(v);
                next.push_back(std::move(e2));
            }
        elts = std::move(next);
    }
    auto add = [&](const std::vector<long>& x, const std::vector<long>& y) {
        std::vector<long> z(x.size());
        for (std::size_t k = 0; k < x.size(); ++k)
            z[k] = (x[k] + y[k]) % coeffs.cyclic_orders[k];
        return z;
    };
    auto neg = [&](const std::vector<long>& x) {
        std::vector<long> z(x.size());
        for (std::size_t k = 0; k < x.size(); ++k)
            z[k] = (coeffs.cyclic_orders[k] - x[k]) % coeffs.cyclic_orders[k];
        return z;
    };
    // normalized 2-cocycles on Z/2 = {0,1}: f(0,-) = f(-,0) = 0, so the only
    // free value is f(1,1) = c; the cocycle condition is vacuous and
    // coboundaries df(g,h) = f(g) + f(h) - f(gh) with f(0) = 0 give
    // df(1,1) = 2 f(1).  So H^2 = A / 2A; enumerate it honestly.
    std::vector<std::vector<long>> reps;
    auto equal = [](const std::vector<long>& x, const std::vector<long>& y) { return x == y; };
    for (const auto& c : elts) {
        bool seen = false;
        for (const auto& r : reps)
            for (const auto& f1 : elts)
                if (equal(add(c, neg(add(f1, f1))), r)) seen = true;
        if (!seen) reps.push_back(c);
    }
    return static_cast<long>(reps.size());
}

// ---------------------------------------------------------------------------
// Abstract invariants used to compare algebras up to isomorphism-insensitive
// data: (dimension, semisimplicity, center dimension).

struct AlgebraInvariants {
    int dim = 0;
    bool semisimple = false;
    int center_dim = 0;
    friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

inline AlgebraInvariants invariants(const SuperAlgebra& a) {
    return {a.dim, is_semisimple(a), static_cast<int>(center(a).size())};
}

}  // namespace oracles
