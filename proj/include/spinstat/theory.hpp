#pragma once

#include "frobenius.hpp"

#include <optional>

namespace spinstat {

struct invalid_trivialization_error : std::runtime_error {
    explicit invalid_trivialization_error(const std::string& what) : std::runtime_error(what) {}
};
struct kind_payload_mismatch_error : std::runtime_error {
    explicit kind_payload_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};
struct validation_failed_error : std::runtime_error {
    ValidationReport report;
    explicit validation_failed_error(ValidationReport rep)
        : std::runtime_error(rep.summary()), report(std::move(rep)) {}
};

// ---------------------------------------------------------------------------
// Dual bimodule conventions.
//
// A* carries the dual of the regular bimodule.  In coordinates (alpha is the
// coefficient vector of a covector in the basis e^j, L_m/R_m are left/right
// multiplication matrices):
//
//   left action   (a.alpha)(x) = alpha(x a)                -> a.alpha = R_a^T alpha
//   right action  (alpha.b)(x) = (-1)^{|b|(|alpha|+|x|)} alpha(b x)
//
// The Koszul sign on the right action is the unique choice (up to swapping the
// two actions) under which a twisted trivialization Phi: A* -> A with
// Phi(a.alpha.b) = a Phi(alpha) (-1)^{|b|} b induces a trace with
// tr(ab) = (-1)^{|a|(|b|+1)} tr(ba).  On purely even algebras both actions are
// sign-free.

/// a . alpha for a = e_m.
inline Vec dual_left_basis(const SuperAlgebra& a, int m, const Vec& alpha) {
    return a.right_mult_basis(m).transpose().apply(alpha);
}

/// alpha . b for homogeneous alpha of the given parity and general b.
inline Vec dual_right_act(const SuperAlgebra& a, const Vec& alpha, int alpha_parity, const Vec& b) {
    Vec out(static_cast<std::size_t>(a.dim));
    for (int m = 0; m < a.dim; ++m) {
        if (b[static_cast<std::size_t>(m)].is_zero()) continue;
        // (alpha . e_m)_l = (-1)^{|m|(|alpha|+|l|)} (L_m^T alpha)_l
        for (int l = 0; l < a.dim; ++l) {
            GaussianRational acc;
            for (int j = 0; j < a.dim; ++j) {
                const GaussianRational& lm = a.sc(m, l, j);  // (L_m)[j][l]
                if (!lm.is_zero() && !alpha[static_cast<std::size_t>(j)].is_zero())
                    acc += lm * alpha[static_cast<std::size_t>(j)];
            }
            if (acc.is_zero()) continue;
            int sgn = (a.parity[static_cast<std::size_t>(m)] &
                       ((alpha_parity + a.parity[static_cast<std::size_t>(l)]) & 1))
                          ? -1
                          : 1;
            GaussianRational term = b[static_cast<std::size_t>(m)] * acc;
            out[static_cast<std::size_t>(l)] += sgn > 0 ? term : -term;
        }
    }
    return out;
}

/// Antilinear involution on A* induced by a star structure:
/// bar(alpha)(x) = sigma^{|alpha|} conj(alpha(x*)), where sigma is -1 for an
/// ordinary star and +1 for a twisted one.  The flavor sign is the Koszul
/// correction for dualizing an odd antilinear map; on even covectors both
/// conventions agree.  On basis covectors, bar(e^j)_l = sigma^{|j|} conj(S[j][l]).
inline Vec dual_bar_basis(const SuperAlgebra& a, const StarStructure& star, int j) {
    bool flip = star.flavor == StarFlavor::Ordinary && a.parity[static_cast<std::size_t>(j)] != 0;
    Vec v(static_cast<std::size_t>(a.dim));
    for (int l = 0; l < a.dim; ++l) {
        GaussianRational x = star.matrix.at(j, l).conj();
        v[static_cast<std::size_t>(l)] = flip ? -x : x;
    }
    return v;
}

// ---------------------------------------------------------------------------
// The bimodule quotient A* (x)_A A*

/// A* (x)_A A* presented as the quotient of the dim^2 ambient space with basis
/// e^j (x) e^k (index j*dim + k) by the middle relations
/// (alpha.a) (x) beta - alpha (x) (a.beta).
struct BimoduleQuotient {
    int algebra_dim = 0;
    QuotientSpace space;
};

inline BimoduleQuotient build_bimodule_quotient(const SuperAlgebra& a) {
    require_valid(a);
    int d = a.dim;
    std::vector<Vec> relations;
    for (int m = 0; m < d; ++m) {
        int pm = a.parity[static_cast<std::size_t>(m)];
        GMatrix lmt = a.left_mult_basis(m).transpose();
        GMatrix rmt = a.right_mult_basis(m).transpose();
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec rel(static_cast<std::size_t>(d) * d);
                bool nonzero = false;
                // (e^j . e_m) (x) e^k, with the signed right action
                for (int l = 0; l < d; ++l) {
                    GaussianRational x = lmt.at(l, j);
                    if (x.is_zero()) continue;
                    int sgn = (pm & ((a.parity[static_cast<std::size_t>(j)] +
                                      a.parity[static_cast<std::size_t>(l)]) & 1))
                                  ? -1
                                  : 1;
                    rel[static_cast<std::size_t>(l) * d + k] += sgn > 0 ? x : -x;
                    nonzero = true;
                }
                // minus e^j (x) (e_m . e^k), with the plain left action
                for (int l = 0; l < d; ++l) {
                    GaussianRational x = rmt.at(l, k);
                    if (x.is_zero()) continue;
                    rel[static_cast<std::size_t>(j) * d + l] -= x;
                    nonzero = true;
                }
                if (nonzero) relations.push_back(std::move(rel));
            }
    }
    BimoduleQuotient bq;
    bq.algebra_dim = d;
    bq.space = quotient_by_span(relations, d * d);
    return bq;
}

/// Trivialization datum of a 2d spin theory: an invertible bimodule map
/// phi: A* (x)_A A* -> A satisfying the associativity identity.
struct SpinTrivialization {
    BimoduleQuotient quotient;
    GMatrix phi;  // algebra_dim x quotient dim, acting on quotient coordinates

    Vec apply_ambient(const Vec& ambient) const { return phi.apply(quotient.space.project(ambient)); }
    Vec apply_ambient_basis(int j, int k) const {
        Vec v(static_cast<std::size_t>(quotient.algebra_dim) * quotient.algebra_dim);
        v[static_cast<std::size_t>(j) * quotient.algebra_dim + k] = GaussianRational::one();
        return apply_ambient(v);
    }
};

enum class Reality { None, Real, Imaginary };

inline ValidationReport validate_spin(const SuperAlgebra& a, const SpinTrivialization& t,
                                      Reality reality = Reality::None,
                                      const StarStructure* star = nullptr) {
    ValidationReport rep = validate_algebra(a);
    if (!rep.ok()) return rep;
    if (!is_semisimple(a)) rep.add("semisimple", "algebra is not semisimple");
    int d = a.dim;
    if (t.phi.rows != d || t.phi.cols != t.quotient.space.dim()) {
        rep.add("shape", "phi is not dim x quotient-dim");
        return rep;
    }
    if (t.phi.rows != t.phi.cols || determinant(t.phi).is_zero()) {
        rep.add("invertible", "phi is not invertible");
        return rep;
    }

    // bimodule condition: phi(a.[v].b) = a.phi([v]).b on all ambient basis
    // vectors e^j (x) e^k and basis algebra elements
    for (int m = 0; m < d && rep.ok(); ++m) {
        GMatrix lm = a.left_mult_basis(m);
        GMatrix rm = a.right_mult_basis(m);
        GMatrix rmt = rm.transpose();
        int pm = a.parity[static_cast<std::size_t>(m)];
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec base = t.apply_ambient_basis(j, k);
                // left: e_m . (e^j (x) e^k) = (R_m^T e^j) (x) e^k
                Vec lhs(static_cast<std::size_t>(d) * d);
                for (int l = 0; l < d; ++l)
                    lhs[static_cast<std::size_t>(l) * d + k] = rmt.at(l, j);
                if (t.apply_ambient(lhs) != lm.apply(base)) {
                    rep.add("bimodule", "left action fails at m=" + std::to_string(m) + " j=" +
                                            std::to_string(j) + " k=" + std::to_string(k));
                    continue;
                }
                // right: (e^j (x) e^k) . e_m = e^j (x) (e^k . e_m), signed
                Vec rhs(static_cast<std::size_t>(d) * d);
                for (int l = 0; l < d; ++l) {
                    GaussianRational x = a.sc(m, l, k);  // (L_m^T)[l][k] = (L_m)[k][l]
                    if (x.is_zero()) continue;
                    int sgn = (pm & ((a.parity[static_cast<std::size_t>(k)] +
                                      a.parity[static_cast<std::size_t>(l)]) & 1))
                                  ? -1
                                  : 1;
                    rhs[static_cast<std::size_t>(j) * d + l] = sgn > 0 ? x : -x;
                }
                if (t.apply_ambient(rhs) != rm.apply(base))
                    rep.add("bimodule", "right action fails at m=" + std::to_string(m) + " j=" +
                                            std::to_string(j) + " k=" + std::to_string(k));
            }
    }

    // associativity: phi([e^i e^j]) . e^k = e^i . phi([e^j e^k]) in A*
    if (rep.ok()) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    Vec left_elt = t.apply_ambient_basis(i, j);
                    Vec lhs(static_cast<std::size_t>(d));
                    {
                        // a . e^k with a = phi([ij]): (a.gamma) = R_a^T gamma
                        for (int l = 0; l < d; ++l) {
                            GaussianRational acc;
                            for (int mi = 0; mi < d; ++mi) {
                                if (left_elt[static_cast<std::size_t>(mi)].is_zero()) continue;
                                const GaussianRational& s = a.sc(l, mi, k);  // (R_{e_mi})[k][l]
                                if (!s.is_zero()) acc += left_elt[static_cast<std::size_t>(mi)] * s;
                            }
                            lhs[static_cast<std::size_t>(l)] = acc;
                        }
                    }
                    Vec right_elt = t.apply_ambient_basis(j, k);
                    Vec rhs = dual_right_act(a, a.basis_vec(i), a.parity[static_cast<std::size_t>(i)],
                                             right_elt);
                    if (lhs != rhs) {
                        rep.add("associativity", "triple (" + std::to_string(i) + "," + std::to_string(j) +
                                                     "," + std::to_string(k) + ") fails");
                        if (rep.violations.size() > 8) return rep;
                    }
                }
    }

    // declared reality against the induced antilinear involution
    if (reality != Reality::None) {
        if (star == nullptr) {
            rep.add("reality", "reality declared but no star structure attached");
            return rep;
        }
        for (int q = 0; q < t.quotient.space.dim(); ++q) {
            int idx = t.quotient.space.class_cols[static_cast<std::size_t>(q)];
            int j = idx / d, k = idx % d;
            // bar(e^j (x) e^k) = bar(e^k) (x) bar(e^j)  (factorwise bar + swap)
            Vec bj = dual_bar_basis(a, *star, j);
            Vec bk = dual_bar_basis(a, *star, k);
            Vec w(static_cast<std::size_t>(d) * d);
            for (int l = 0; l < d; ++l)
                for (int m2 = 0; m2 < d; ++m2) {
                    GaussianRational x = bk[static_cast<std::size_t>(l)] * bj[static_cast<std::size_t>(m2)];
                    if (!x.is_zero()) w[static_cast<std::size_t>(l) * d + m2] = x;
                }
            Vec u1 = t.apply_ambient(w);
            Vec u2 = star->apply(t.apply_ambient_basis(j, k));
            if (reality == Reality::Imaginary)
                for (auto& x : u2) x = -x;
            if (u1 != u2) rep.add("reality", "phi is not " +
                                      std::string(reality == Reality::Real ? "real" : "pure-imaginary") +
                                      " on class " + std::to_string(q));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Spin-statistics trivialization: Phi : A* -> (-1)^f-twisted A

struct SpinStatTrivialization {
    GMatrix phi;  // dim x dim, e^j -> sum_k phi[k][j] e_k
};

/// Trace induced by Phi: tr = Phi^{-1}(1), as a covector.
inline TraceFunctional spinstat_induced_trace(const SuperAlgebra& a, const SpinStatTrivialization& t) {
    return TraceFunctional{inverse(t.phi).apply(a.unit)};
}

/// Trivialization with Phi = G^{-1} for the Gram matrix of a given
/// twisted-symmetric trace; the inverse construction to
/// spinstat_induced_trace.
inline SpinStatTrivialization spinstat_from_trace(const SuperAlgebra& a, const TraceFunctional& tr) {
    GMatrix g(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) g.at(i, j) = tr(a.basis_product(i, j));
    return SpinStatTrivialization{inverse(g)};
}

inline ValidationReport validate_spinstat(const SuperAlgebra& a, const SpinStatTrivialization& t,
                                          Reality reality = Reality::None,
                                          const StarStructure* star = nullptr) {
    ValidationReport rep = validate_algebra(a);
    if (!rep.ok()) return rep;
    if (!is_semisimple(a)) rep.add("semisimple", "algebra is not semisimple");
    int d = a.dim;
    const GMatrix& p = t.phi;
    if (p.rows != d || p.cols != d) {
        rep.add("shape", "Phi is not dim x dim");
        return rep;
    }
    if (determinant(p).is_zero()) {
        rep.add("invertible", "Phi is not invertible");
        return rep;
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!p.at(i, j).is_zero() &&
                a.parity[static_cast<std::size_t>(i)] != a.parity[static_cast<std::size_t>(j)])
                rep.add("parity", "Phi mixes parities at (" + std::to_string(i) + "," + std::to_string(j) + ")");

    // twisted bimodule conditions, for every homogeneous basis element m:
    //   left:  P R_m^T = L_m P
    //   right: D^{|m|} (P L_m^T) D^{|m|} = (-1)^{|m|} R_m P
    for (int m = 0; m < d; ++m) {
        GMatrix lm = a.left_mult_basis(m);
        GMatrix rm = a.right_mult_basis(m);
        if (p * rm.transpose() != lm * p) {
            rep.add("bimodule", "left condition fails at m=" + std::to_string(m));
            continue;
        }
        GMatrix lhs = p * lm.transpose();
        GMatrix rhs = rm * p;
        bool odd = a.parity[static_cast<std::size_t>(m)] != 0;
        bool okay = true;
        for (int i = 0; i < d && okay; ++i)
            for (int j = 0; j < d; ++j) {
                GaussianRational want = rhs.at(i, j);
                if (odd) {
                    int sgn = 1 + a.parity[static_cast<std::size_t>(i)] + a.parity[static_cast<std::size_t>(j)];
                    if (sgn & 1) want = -want;
                }
                if (lhs.at(i, j) != want) { okay = false; break; }
            }
        if (!okay) rep.add("bimodule", "twisted right condition fails at m=" + std::to_string(m));
    }

    // the induced trace must be twisted-symmetric and nondegenerate
    if (rep.ok()) {
        FrobeniusAlgebra f{a, spinstat_induced_trace(a, t), FrobeniusSymmetry::TwistedSymmetric};
        ValidationReport frep = validate_frobenius(f);
        for (auto& v : frep.violations) rep.add("induced-trace/" + v.code, v.detail);
    }

    // reality: Phi . bar_{A*} = star . Phi, checked on basis covectors with
    // the flavor-signed dual involution
    if (reality != Reality::None) {
        if (star == nullptr) {
            rep.add("reality", "reality declared but no star structure attached");
            return rep;
        }
        for (int j = 0; j < d; ++j) {
            Vec lhs = p.apply(dual_bar_basis(a, *star, j));
            Vec rhs = star->apply(p.apply(a.basis_vec(j)));
            if (reality == Reality::Imaginary)
                for (auto& x : rhs) x = -x;
            if (lhs != rhs) {
                rep.add("reality", std::string("Phi is not ") +
                                       (reality == Reality::Real ? "real" : "pure-imaginary") +
                                       " on e^" + std::to_string(j));
                break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Theory descriptors

enum class TheoryKind {
    Unoriented,
    Oriented,
    Complex,
    Hermitian,
    HermitianSpin,
    TwistedHermitianSpin,
    HermitianSuper,
    TwistedHermitianSuper,
    HermitianSpinStatistics,
    TwistedHermitianSpinStatistics,
    RealSpinStatistics,
};

inline const char* kind_name(TheoryKind k) {
    switch (k) {
        case TheoryKind::Unoriented: return "unoriented";
        case TheoryKind::Oriented: return "oriented";
        case TheoryKind::Complex: return "complex";
        case TheoryKind::Hermitian: return "hermitian";
        case TheoryKind::HermitianSpin: return "hermitian-spin";
        case TheoryKind::TwistedHermitianSpin: return "twisted-hermitian-spin";
        case TheoryKind::HermitianSuper: return "hermitian-super";
        case TheoryKind::TwistedHermitianSuper: return "twisted-hermitian-super";
        case TheoryKind::HermitianSpinStatistics: return "hermitian-spin-statistics";
        case TheoryKind::TwistedHermitianSpinStatistics: return "twisted-hermitian-spin-statistics";
        case TheoryKind::RealSpinStatistics: return "real-spin-statistics";
    }
    return "?";
}

inline std::optional<TheoryKind> kind_from_name(const std::string& s) {
    for (TheoryKind k : {TheoryKind::Unoriented, TheoryKind::Oriented, TheoryKind::Complex,
                         TheoryKind::Hermitian, TheoryKind::HermitianSpin, TheoryKind::TwistedHermitianSpin,
                         TheoryKind::HermitianSuper, TheoryKind::TwistedHermitianSuper,
                         TheoryKind::HermitianSpinStatistics, TheoryKind::TwistedHermitianSpinStatistics,
                         TheoryKind::RealSpinStatistics})
        if (s == kind_name(k)) return k;
    return std::nullopt;
}

struct TheorySpec {
    TheoryKind kind = TheoryKind::Unoriented;
    SuperAlgebra algebra;
    std::optional<TraceFunctional> trace;
    FrobeniusSymmetry symmetry = FrobeniusSymmetry::SymmetricSuper;
    std::optional<SpinTrivialization> spin;
    std::optional<SpinStatTrivialization> spinstat;
    std::optional<StarStructure> star;
    Reality reality = Reality::None;

    bool is_zero_theory() const { return algebra.dim == 0; }

    FrobeniusAlgebra frobenius() const {
        if (!trace) throw kind_payload_mismatch_error("theory carries no trace payload");
        return FrobeniusAlgebra{algebra, *trace, symmetry};
    }
};

namespace detail {

inline bool wants_trace(TheoryKind k) {
    return k == TheoryKind::Unoriented || k == TheoryKind::Oriented || k == TheoryKind::Complex ||
           k == TheoryKind::Hermitian || k == TheoryKind::HermitianSuper ||
           k == TheoryKind::TwistedHermitianSuper;
}
inline bool wants_spin(TheoryKind k) {
    return k == TheoryKind::HermitianSpin || k == TheoryKind::TwistedHermitianSpin;
}
inline bool wants_spinstat(TheoryKind k) {
    return k == TheoryKind::HermitianSpinStatistics ||
           k == TheoryKind::TwistedHermitianSpinStatistics || k == TheoryKind::RealSpinStatistics;
}
inline bool wants_star(TheoryKind k) {
    return k == TheoryKind::Hermitian || k == TheoryKind::HermitianSpin ||
           k == TheoryKind::TwistedHermitianSpin || k == TheoryKind::HermitianSuper ||
           k == TheoryKind::TwistedHermitianSuper || k == TheoryKind::HermitianSpinStatistics ||
           k == TheoryKind::TwistedHermitianSpinStatistics;
}
inline StarFlavor star_flavor_for(TheoryKind k) {
    return (k == TheoryKind::TwistedHermitianSuper || k == TheoryKind::TwistedHermitianSpinStatistics)
               ? StarFlavor::Twisted
               : StarFlavor::Ordinary;
}
inline Reality required_reality(TheoryKind k) {
    if (k == TheoryKind::HermitianSpin || k == TheoryKind::HermitianSpinStatistics ||
        k == TheoryKind::TwistedHermitianSpinStatistics || k == TheoryKind::RealSpinStatistics)
        return Reality::Real;
    if (k == TheoryKind::TwistedHermitianSpin) return Reality::Imaginary;
    return Reality::None;
}

}  // namespace detail

/// Validates the payload of a theory descriptor and returns it.  The zero
/// algebra is accepted for every kind.  Throws kind_payload_mismatch_error for
/// a payload whose shape does not fit the kind and validation_failed_error
/// when a validator rejects the data.
inline TheorySpec build_theory(TheorySpec spec) {
    if (spec.is_zero_theory()) return spec;

    if (detail::wants_trace(spec.kind) && !spec.trace)
        throw kind_payload_mismatch_error(std::string(kind_name(spec.kind)) + " needs a trace payload");
    if (detail::wants_spin(spec.kind) && !spec.spin)
        throw kind_payload_mismatch_error(std::string(kind_name(spec.kind)) + " needs a spin trivialization");
    if (!detail::wants_spin(spec.kind) && spec.spin)
        throw kind_payload_mismatch_error(std::string(kind_name(spec.kind)) +
                                          " does not take a spin trivialization");
    if (detail::wants_spinstat(spec.kind) && !spec.spinstat)
        throw kind_payload_mismatch_error(std::string(kind_name(spec.kind)) +
                                          " needs a spin-statistics trivialization");
    if (!detail::wants_spinstat(spec.kind) && spec.spinstat)
        throw kind_payload_mismatch_error(std::string(kind_name(spec.kind)) +
                                          " does not take a spin-statistics trivialization");
    if (detail::wants_star(spec.kind) && !spec.star)
        throw kind_payload_mismatch_error(std::string(kind_name(spec.kind)) + " needs a star structure");

    ValidationReport rep = validate_algebra(spec.algebra);
    if (!rep.ok()) throw validation_failed_error(std::move(rep));
    if (!is_semisimple(spec.algebra)) {
        rep.add("semisimple", "algebra is not semisimple");
        throw validation_failed_error(std::move(rep));
    }

    bool even_kind = spec.kind == TheoryKind::Unoriented || spec.kind == TheoryKind::Oriented ||
                     spec.kind == TheoryKind::Complex || spec.kind == TheoryKind::Hermitian;
    if (even_kind && !spec.algebra.purely_even()) {
        rep.add("parity", std::string(kind_name(spec.kind)) + " theories take purely even algebras");
        throw validation_failed_error(std::move(rep));
    }

    if (spec.star) {
        StarFlavor want = detail::star_flavor_for(spec.kind);
        if (spec.star->flavor != want) {
            rep.add("star-flavor", "star flavor does not match the theory kind");
            throw validation_failed_error(std::move(rep));
        }
        ValidationReport srep = validate_star(spec.algebra, *spec.star);
        if (!srep.ok()) throw validation_failed_error(std::move(srep));
    }

    Reality need = detail::required_reality(spec.kind);
    if (need != Reality::None) spec.reality = need;

    if (spec.trace) {
        FrobeniusSymmetry want = FrobeniusSymmetry::SymmetricSuper;
        spec.symmetry = want;
        ValidationReport frep = validate_frobenius(spec.frobenius());
        if (!frep.ok()) throw validation_failed_error(std::move(frep));
    }
    if (spec.spin) {
        ValidationReport vrep = validate_spin(spec.algebra, *spec.spin, spec.reality,
                                              spec.star ? &*spec.star : nullptr);
        if (!vrep.ok()) throw validation_failed_error(std::move(vrep));
    }
    if (spec.spinstat) {
        if (spec.kind == TheoryKind::RealSpinStatistics) {
            bool real = spec.spinstat->phi.is_real() &&
                        GMatrix::from_rows({spec.algebra.unit}).is_real();
            for (const auto& e : spec.algebra.c)
                if (e.im != 0) real = false;
            if (!real) {
                rep.add("reality", "real-spin-statistics data must have real coefficients");
                throw validation_failed_error(std::move(rep));
            }
            ValidationReport vrep = validate_spinstat(spec.algebra, *spec.spinstat);
            if (!vrep.ok()) throw validation_failed_error(std::move(vrep));
        } else {
            ValidationReport vrep = validate_spinstat(spec.algebra, *spec.spinstat, spec.reality,
                                                      spec.star ? &*spec.star : nullptr);
            if (!vrep.ok()) throw validation_failed_error(std::move(vrep));
        }
    }
    return spec;
}

}  // namespace spinstat
