#pragma once

#include "theory.hpp"

namespace spinstat {

struct untagged_reality_error : std::runtime_error {
    untagged_reality_error() : std::runtime_error("Hilbert data carries no usable reality tag") {}
};

// ---------------------------------------------------------------------------
// Groupoid-cardinality integration

struct GroupoidObject {
    std::string label;
    long automorphism_order = 1;
    GaussianRational weight = GaussianRational::one();
};

struct FiniteGroupoid {
    std::vector<GroupoidObject> objects;
};

/// sum over objects of weight / |Aut|.
inline GaussianRational groupoid_integral(const FiniteGroupoid& g) {
    GaussianRational acc;
    for (const auto& o : g.objects) {
        if (o.automorphism_order < 1) throw std::invalid_argument("automorphism order must be >= 1");
        acc += o.weight * GaussianRational(Rational(1, o.automorphism_order));
    }
    return acc;
}

/// The groupoid of spin structures on the circle: two isomorphism classes,
/// each with automorphism group of order 2.
inline FiniteGroupoid spins_circle_groupoid() {
    return FiniteGroupoid{{{"bounding", 2, GaussianRational::one()},
                           {"nonbounding", 2, GaussianRational::one()}}};
}

inline FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    FiniteGroupoid g = a;
    g.objects.insert(g.objects.end(), b.objects.begin(), b.objects.end());
    return g;
}

// ---------------------------------------------------------------------------
// Hilbert data (state spaces with a tagged Gram form)

enum class RealityTag { RealSymmetric, Hermitian, ComplexSymmetric, OrientedPair };

inline const char* reality_tag_name(RealityTag t) {
    switch (t) {
        case RealityTag::RealSymmetric: return "real-symmetric";
        case RealityTag::Hermitian: return "hermitian";
        case RealityTag::ComplexSymmetric: return "complex-symmetric";
        case RealityTag::OrientedPair: return "oriented-pair";
    }
    return "?";
}

struct HilbertData {
    int dim = 0;
    GMatrix gram;
    RealityTag tag = RealityTag::RealSymmetric;
    std::vector<int> parity;  // optional; empty when not graded
};

// ---------------------------------------------------------------------------
// Integration over Spins/Or: B = A + A*

/// The integrated Frobenius data together with the star it inherits.
struct IntegratedTheory {
    FrobeniusAlgebra frob;
    std::optional<StarStructure> star;
};

/// B = A + A* with (a+alpha)(b+beta) = (ab + phi(alpha (x) beta)) + (a.beta + alpha.b)
/// and tr(a+alpha) = alpha(1).  Basis order: e_0..e_{d-1}, f^0..f^{d-1}.
/// Restricted to purely even A (every spin trivialization in scope is even).
/// When a star structure and a reality flag are supplied, B inherits the star
/// (a+alpha)* = a* + kappa bar(alpha) with kappa = 1 for real phi and kappa = i
/// for pure-imaginary phi.
inline IntegratedTheory spins_to_or(const SuperAlgebra& a, const SpinTrivialization& t,
                                    const StarStructure* star = nullptr,
                                    Reality reality = Reality::None, bool validate = true) {
    if (validate) {
        ValidationReport rep = validate_spin(a, t, Reality::None, nullptr);
        if (!rep.ok()) throw invalid_trivialization_error(rep.summary());
    }
    if (!a.purely_even()) throw not_even_error();
    int d = a.dim;
    SuperAlgebra b;
    b.dim = 2 * d;
    b.parity.assign(static_cast<std::size_t>(2 * d), 0);
    b.c.assign(static_cast<std::size_t>(b.dim) * b.dim * b.dim, GaussianRational());
    // e_i e_j as in A
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const GaussianRational& s = a.sc(i, j, k);
                if (!s.is_zero()) b.sc(i, j, k) = s;
            }
    // e_i . f^j = sum_l c[l][i][j] f^l ;  f^j . e_i = sum_l c[i][l][j] f^l
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                const GaussianRational& s1 = a.sc(l, i, j);
                if (!s1.is_zero()) b.sc(i, d + j, d + l) = s1;
                const GaussianRational& s2 = a.sc(i, l, j);
                if (!s2.is_zero()) b.sc(d + j, i, d + l) = s2;
            }
    // f^i . f^j = phi([e^i (x) e^j])
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec img = t.apply_ambient_basis(i, j);
            for (int k = 0; k < d; ++k)
                if (!img[static_cast<std::size_t>(k)].is_zero())
                    b.sc(d + i, d + j, k) = img[static_cast<std::size_t>(k)];
        }
    b.unit.assign(static_cast<std::size_t>(2 * d), GaussianRational());
    for (int i = 0; i < d; ++i) b.unit[static_cast<std::size_t>(i)] = a.unit[static_cast<std::size_t>(i)];

    TraceFunctional tr;
    tr.covector.assign(static_cast<std::size_t>(2 * d), GaussianRational());
    for (int j = 0; j < d; ++j) tr.covector[static_cast<std::size_t>(d + j)] = a.unit[static_cast<std::size_t>(j)];

    IntegratedTheory out;
    out.frob = FrobeniusAlgebra{std::move(b), std::move(tr), FrobeniusSymmetry::SymmetricSuper};
    if (star != nullptr && reality != Reality::None) {
        GaussianRational kappa = reality == Reality::Real ? GaussianRational::one() : GaussianRational::i();
        StarStructure sb;
        sb.flavor = StarFlavor::Ordinary;
        sb.matrix = GMatrix(2 * d, 2 * d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                sb.matrix.at(k, i) = star->matrix.at(k, i);
                // bar(e^j)_l = conj(S[j][l]), scaled by kappa
                sb.matrix.at(d + k, d + i) = kappa * star->matrix.at(i, k).conj();
            }
        out.star = std::move(sb);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integration over Spins/Or for spin-statistics data: Forget(A x| Z/2)

/// Underlying even algebra of A x| Z/2 = A + A eps, carrying the Frobenius
/// trace tr(a + b eps) = 2 t(a) with t = Phi^{-1}(1) (zero on the eps
/// component, doubled by the two-fold groupoid weight of the spin circle), and
/// the star J(a + b eps) = lambda^{|a|} a* + lambda^{|b|} b* eps with
/// lambda^2 = -1 for an ordinary star and lambda^2 = 1 for a twisted one.
/// J agrees with b -> b* eps^{|b|} on the even part; on odd elements the
/// eps-valued formula is not involutive and the lambda phase is the unique
/// in-A correction.
inline IntegratedTheory spinstats_to_or(const SuperAlgebra& a, const SpinStatTrivialization& t,
                                        const StarStructure* star = nullptr) {
    {
        ValidationReport rep = validate_spinstat(a, t);
        if (!rep.ok()) throw invalid_trivialization_error(rep.summary());
    }
    int d = a.dim;
    SuperAlgebra b = underlying_algebra(parity_semidirect(a));
    TraceFunctional induced = spinstat_induced_trace(a, t);
    TraceFunctional tr;
    tr.covector.assign(static_cast<std::size_t>(2 * d), GaussianRational());
    for (int i = 0; i < d; ++i)
        tr.covector[static_cast<std::size_t>(i)] = GaussianRational(2) * induced.covector[static_cast<std::size_t>(i)];

    IntegratedTheory out;
    out.frob = FrobeniusAlgebra{std::move(b), std::move(tr), FrobeniusSymmetry::SymmetricSuper};
    if (star != nullptr) {
        GaussianRational lambda = star->flavor == StarFlavor::Ordinary
                                      ? GaussianRational(Rational(0), Rational(-1))
                                      : GaussianRational::one();
        StarStructure sb;
        sb.flavor = StarFlavor::Ordinary;
        sb.matrix = GMatrix(2 * d, 2 * d);
        for (int i = 0; i < d; ++i) {
            GaussianRational li = a.parity[static_cast<std::size_t>(i)] ? lambda : GaussianRational::one();
            GaussianRational lie = a.parity[static_cast<std::size_t>(i)]
                                       ? lambda * GaussianRational(Rational(-1))
                                       : GaussianRational::one();
            for (int k = 0; k < d; ++k) {
                if (star->matrix.at(k, i).is_zero()) continue;
                sb.matrix.at(k, i) = li * star->matrix.at(k, i);
                sb.matrix.at(d + k, d + i) = lie * star->matrix.at(k, i);
            }
        }
        out.star = std::move(sb);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integration over orientations / over Spec(C)

/// Algebra-level integration over orientations: B + B^op, with the trace
/// applied on each summand.
inline FrobeniusAlgebra or_double(const FrobeniusAlgebra& f) {
    require_valid(f);
    FrobeniusAlgebra out;
    out.algebra = direct_sum(f.algebra, opposite(f.algebra));
    out.trace.covector = f.trace.covector;
    out.trace.covector.insert(out.trace.covector.end(), f.trace.covector.begin(), f.trace.covector.end());
    out.symmetry = f.symmetry;
    return out;
}

/// State-space integration over orientations.  An oriented state space V
/// becomes V + V* with the hyperbolic pairing [[0,I],[I,0]]; a Hermitian state
/// space becomes its underlying real space with twice the real part.
inline HilbertData integrate_or(const HilbertData& h) {
    if (h.tag == RealityTag::OrientedPair) {
        int n = h.dim;
        HilbertData out;
        out.dim = 2 * n;
        out.tag = RealityTag::RealSymmetric;
        out.gram = GMatrix(2 * n, 2 * n);
        for (int i = 0; i < n; ++i) {
            out.gram.at(i, n + i) = GaussianRational::one();
            out.gram.at(n + i, i) = GaussianRational::one();
        }
        return out;
    }
    if (h.tag == RealityTag::Hermitian) {
        HilbertData out;
        out.dim = 2 * h.dim;
        out.tag = RealityTag::RealSymmetric;
        out.gram = realify_form(h.gram, FormKind::Hermitian);
        return out;
    }
    throw untagged_reality_error();
}

/// 2 Re(c): the integral of a closed-manifold value over Spec(C).
inline GaussianRational integrate_complex_scalar(const GaussianRational& c) {
    return GaussianRational(Rational(2) * c.re);
}

/// Integration over Spec(C) / Spec(SuperVect_C).  Complex-symmetric data
/// realifies to twice its real part (signature-split).  Hermitian data with a
/// parity vector is the super case: the Gram must pair only basis vectors of
/// mismatched parity (the boson/fermion sector block form), which forces the
/// split signature; it is returned unchanged as the recorded circle form.
inline HilbertData integrate_complex(const HilbertData& h) {
    if (h.tag == RealityTag::ComplexSymmetric) {
        HilbertData out;
        out.dim = 2 * h.dim;
        out.tag = RealityTag::RealSymmetric;
        out.gram = realify_form(h.gram, FormKind::ComplexSymmetric);
        return out;
    }
    if (h.tag == RealityTag::Hermitian && static_cast<int>(h.parity.size()) == h.dim) {
        if (!h.gram.is_hermitian()) throw kind_mismatch_error("super circle form is not Hermitian");
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j)
                if (!h.gram.at(i, j).is_zero() &&
                    h.parity[static_cast<std::size_t>(i)] == h.parity[static_cast<std::size_t>(j)])
                    throw kind_mismatch_error("super circle form pairs matched parities");
        return h;
    }
    throw kind_mismatch_error("integrate_complex expects complex-symmetric or parity-tagged Hermitian data");
}

}  // namespace spinstat
