#pragma once

#include "integrate.hpp"

namespace spinstat {

struct ill_defined_error : std::runtime_error {
    explicit ill_defined_error(const std::string& what) : std::runtime_error(what) {}
};
struct unsupported_kind_error : std::runtime_error {
    explicit unsupported_kind_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

/// Central representatives of the cocenter classes: columns z_q with
/// projection(z_q) = delta_q.  Requires algebra = center + [A,A]; the trace of
/// a central element against a commutator vanishes for a cyclic trace, which
/// makes the circle pairing on these representatives well-defined.
inline std::vector<Vec> central_representatives(const SuperAlgebra& a, const QuotientSpace& coc,
                                                const std::vector<Vec>& zbasis) {
    int q = coc.dim();
    if (static_cast<int>(zbasis.size()) != q)
        throw ill_defined_error("center dimension differs from cocenter dimension");
    GMatrix zmat(a.dim, q);
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < a.dim; ++i) zmat.at(i, j) = zbasis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    GMatrix m = coc.projection * zmat;  // q x q
    GMatrix minv;
    try {
        minv = inverse(m);
    } catch (const singular_matrix_error&) {
        throw ill_defined_error("center does not complement the commutator span");
    }
    GMatrix reps = zmat * minv;
    std::vector<Vec> out;
    for (int j = 0; j < q; ++j) {
        Vec v(static_cast<std::size_t>(a.dim));
        for (int i = 0; i < a.dim; ++i) v[static_cast<std::size_t>(i)] = reps.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// Circle state space of a purely even Frobenius algebra: the cocenter,
/// presented by central representatives, with Gram tr(z_q z_r) (bilinear,
/// real-symmetric tag) or tr(z_q* z_r) (Hermitian tag when a star is given).
/// A pure-imaginary trivialization makes the raw sesquilinear pairing
/// non-Hermitian; its anti-Hermitian component dies under the real-part
/// integration, so twisted routes pass hermitian_part = true to record the
/// Hermitian component (G + G^dagger)/2.
inline HilbertData circle_state_space(const FrobeniusAlgebra& f, const StarStructure* star = nullptr,
                                      bool hermitian_part = false) {
    require_valid(f);
    if (!f.algebra.purely_even()) throw not_even_error();
    // a cyclic trace is what makes the pairing descend to the cocenter
    GMatrix g = f.gram();
    if (!g.is_symmetric()) throw ill_defined_error("trace is not symmetric on the underlying algebra");
    QuotientSpace coc = cocenter(f.algebra);
    std::vector<Vec> reps = detail::central_representatives(f.algebra, coc, center(f.algebra));
    int q = coc.dim();
    HilbertData h;
    h.dim = q;
    h.tag = star ? RealityTag::Hermitian : RealityTag::RealSymmetric;
    h.gram = GMatrix(q, q);
    for (int i = 0; i < q; ++i) {
        Vec lhs = star ? star->apply(reps[static_cast<std::size_t>(i)]) : reps[static_cast<std::size_t>(i)];
        for (int j = 0; j < q; ++j)
            h.gram.at(i, j) = f.trace(f.algebra.multiply(lhs, reps[static_cast<std::size_t>(j)]));
    }
    if (star && hermitian_part) {
        GMatrix sym(q, q);
        GaussianRational half(Rational(1, 2));
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                sym.at(i, j) = half * (h.gram.at(i, j) + h.gram.at(j, i).conj());
        h.gram = std::move(sym);
    }
    if (star && !h.gram.is_hermitian())
        throw ill_defined_error("star and trace do not produce a Hermitian circle pairing");
    if (!star && !h.gram.is_symmetric())
        throw ill_defined_error("circle pairing is not symmetric");
    return h;
}

/// Boson/fermion sector data of a super Frobenius algebra with star: the
/// untwisted and (-1)^f-twisted super-cocenters, paired off-diagonally by
/// C[q][r] = tr(u_q* w_r) on the echelon class representatives.  The assembled
/// Hermitian form [[0,C],[C*,0]] pairs only mismatched parities, so its
/// signature is split whenever C is invertible.
inline HilbertData super_circle_sectors(const FrobeniusAlgebra& f, const StarStructure& star) {
    require_valid(f);
    QuotientSpace u = super_cocenter(f.algebra, false);
    QuotientSpace t = super_cocenter(f.algebra, true);
    if (u.dim() != t.dim())
        throw ill_defined_error("boson and fermion sectors have different dimensions");
    int n = u.dim();
    // descent checks against the canonical representatives
    for (const Vec& s : u.span_echelon)
        for (int r = 0; r < n; ++r)
            if (!f.trace(f.algebra.multiply(star.apply(s), t.representative(r))).is_zero())
                throw ill_defined_error("sector pairing is not defined on the untwisted quotient");
    for (int qi = 0; qi < n; ++qi)
        for (const Vec& s : t.span_echelon)
            if (!f.trace(f.algebra.multiply(star.apply(u.representative(qi)), s)).is_zero())
                throw ill_defined_error("sector pairing is not defined on the twisted quotient");
    GMatrix c(n, n);
    for (int qi = 0; qi < n; ++qi)
        for (int r = 0; r < n; ++r)
            c.at(qi, r) = f.trace(f.algebra.multiply(star.apply(u.representative(qi)), t.representative(r)));
    if (n > 0 && determinant(c).is_zero())
        throw ill_defined_error("sector pairing is degenerate");
    HilbertData h;
    h.dim = 2 * n;
    h.tag = RealityTag::Hermitian;
    h.gram = GMatrix(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            h.gram.at(i, n + j) = c.at(i, j);
            h.gram.at(n + j, i) = c.at(i, j).conj();
        }
    h.parity.assign(static_cast<std::size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i) h.parity[static_cast<std::size_t>(n + i)] = 1;
    return h;
}

// ---------------------------------------------------------------------------
// Genus-g partition values

struct PartitionResult {
    GaussianRational value;
    bool via_center = false;  // noncommutative input evaluated on its center
};

inline bool is_commutative(const SuperAlgebra& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < i; ++j)
            if (a.basis_product(i, j) != a.basis_product(j, i)) return false;
    return true;
}

/// Genus-g closed-surface value tr(h^g) for the handle element h.
/// Noncommutative even inputs are evaluated through the commutative Frobenius
/// structure on their center (the cocenter presented by central
/// representatives) and flagged.
inline PartitionResult partition_genus(const FrobeniusAlgebra& f, int genus) {
    require_valid(f);
    if (!f.algebra.purely_even()) throw not_even_error();
    if (genus < 0) throw std::invalid_argument("genus must be >= 0");
    if (is_commutative(f.algebra)) {
        Vec h = handle_element(f);
        Vec p = f.algebra.unit;
        for (int s = 0; s < genus; ++s) p = f.algebra.multiply(p, h);
        return {f.trace(p), false};
    }
    // center subalgebra with the restricted trace
    std::vector<Vec> z = center(f.algebra);
    int n = static_cast<int>(z.size());
    GMatrix zmat(f.algebra.dim, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < f.algebra.dim; ++i)
            zmat.at(i, j) = z[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    // coordinates of products z_i z_j in the z basis, via least-squares-free
    // exact solve: zmat * x = product
    GMatrix zsolve;
    {
        // [zmat | I] row-reduction gives a left inverse on the column span
        GMatrix work(f.algebra.dim, n + f.algebra.dim);
        for (int i = 0; i < f.algebra.dim; ++i) {
            for (int j = 0; j < n; ++j) work.at(i, j) = zmat.at(i, j);
            work.at(i, n + i) = GaussianRational::one();
        }
        rref_in_place(work);
        zsolve = GMatrix(n, f.algebra.dim);
        for (int r = 0; r < n; ++r)
            for (int i = 0; i < f.algebra.dim; ++i) zsolve.at(r, i) = work.at(r, n + i);
    }
    SuperAlgebra zc;
    zc.dim = n;
    zc.parity.assign(static_cast<std::size_t>(n), 0);
    zc.c.assign(static_cast<std::size_t>(n) * n * n, GaussianRational());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec prod = f.algebra.multiply(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
            Vec coeff = zsolve.apply(prod);
            if (zmat.apply(coeff) != prod)
                throw invalid_frobenius_error("center is not closed under multiplication");
            for (int k = 0; k < n; ++k) zc.sc(i, j, k) = coeff[static_cast<std::size_t>(k)];
        }
    zc.unit = zsolve.apply(f.algebra.unit);
    TraceFunctional ztr;
    ztr.covector.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) ztr.covector[static_cast<std::size_t>(j)] = f.trace(z[static_cast<std::size_t>(j)]);
    FrobeniusAlgebra fc{std::move(zc), std::move(ztr), FrobeniusSymmetry::SymmetricSuper};
    PartitionResult r = partition_genus(fc, genus);
    return {r.value, true};
}

// ---------------------------------------------------------------------------
// Reflection positivity

enum class RpVerdict { Positive, NotPositive, VacuousZero };

inline const char* verdict_name(RpVerdict v) {
    switch (v) {
        case RpVerdict::Positive: return "positive";
        case RpVerdict::NotPositive: return "not-positive";
        case RpVerdict::VacuousZero: return "vacuous-zero";
    }
    return "?";
}

enum class RouteOverride { Auto, Oriented, Hermitian };

struct RpResult {
    RpVerdict verdict = RpVerdict::VacuousZero;
    std::string route;
    HilbertData circle;             // reported circle form (pre-realification)
    HilbertData decided;            // the form definiteness was decided on
    std::optional<Vec> witness;     // vector with v* G v <= 0 in decided coordinates
    int integrated_dim = 0;         // dim of the integrated algebra, when one exists
};

namespace detail {

inline RpResult decide_hermitian(HilbertData circle, std::string route) {
    RpResult r;
    r.route = std::move(route);
    r.circle = circle;
    r.decided.dim = 2 * circle.dim;
    r.decided.tag = RealityTag::RealSymmetric;
    r.decided.gram = realify_form(circle.gram, FormKind::Hermitian);
    bool pd = is_positive_definite_hermitian(r.decided.gram);
    r.verdict = pd ? RpVerdict::Positive : RpVerdict::NotPositive;
    if (!pd) r.witness = nonpositive_witness(r.decided.gram);
    return r;
}

inline RpResult decide_real(HilbertData circle, std::string route) {
    RpResult r;
    r.route = std::move(route);
    if (!circle.gram.is_real()) throw ill_defined_error("real route reached a non-real Gram matrix");
    r.circle = circle;
    r.decided = circle;
    bool pd = is_positive_definite_hermitian(r.decided.gram);
    r.verdict = pd ? RpVerdict::Positive : RpVerdict::NotPositive;
    if (!pd) r.witness = nonpositive_witness(r.decided.gram);
    return r;
}

inline RpResult decide_oriented(int n, std::string route) {
    HilbertData v;
    v.dim = n;
    v.tag = RealityTag::OrientedPair;
    v.gram = GMatrix(n, n);
    RpResult r;
    r.route = std::move(route);
    r.circle = integrate_or(v);
    r.circle.tag = RealityTag::RealSymmetric;
    r.decided = r.circle;
    bool pd = is_positive_definite_hermitian(r.decided.gram);
    r.verdict = pd ? RpVerdict::Positive : RpVerdict::NotPositive;
    if (!pd) r.witness = nonpositive_witness(r.decided.gram);
    return r;
}

}  // namespace detail

/// Decides reflection positivity of a validated theory along the route
/// dictated by its kind.  The verdict is decided on S^1 alone: every closed
/// 1-manifold is a disjoint union of circles and positive-definiteness is
/// closed under tensor products of forms.
inline RpResult is_reflection_positive(const TheorySpec& spec, RouteOverride ov = RouteOverride::Auto) {
    if (spec.is_zero_theory()) {
        RpResult r;
        r.verdict = RpVerdict::VacuousZero;
        r.route = "zero";
        return r;
    }

    auto with_override = [&](const FrobeniusAlgebra& f, const StarStructure* st,
                             const std::string& route) -> RpResult {
        if (ov == RouteOverride::Oriented) {
            HilbertData h = circle_state_space(f);
            return detail::decide_oriented(h.dim, route + "+oriented-override");
        }
        if (ov == RouteOverride::Hermitian) {
            if (st == nullptr) throw kind_mismatch_error("hermitian route needs a star structure");
            return detail::decide_hermitian(circle_state_space(f, st), route + "+hermitian-override");
        }
        throw std::logic_error("with_override called without an override");
    };

    switch (spec.kind) {
        case TheoryKind::Unoriented: {
            FrobeniusAlgebra f = spec.frobenius();
            if (ov != RouteOverride::Auto) return with_override(f, spec.star ? &*spec.star : nullptr, "unoriented");
            return detail::decide_real(circle_state_space(f), "unoriented");
        }
        case TheoryKind::Oriented: {
            FrobeniusAlgebra f = spec.frobenius();
            if (ov == RouteOverride::Hermitian)
                return with_override(f, spec.star ? &*spec.star : nullptr, "oriented");
            HilbertData h = circle_state_space(f);
            RpResult r = detail::decide_oriented(h.dim, "oriented:V+V*");
            r.integrated_dim = 2 * spec.algebra.dim;
            return r;
        }
        case TheoryKind::Complex: {
            FrobeniusAlgebra f = spec.frobenius();
            if (ov != RouteOverride::Auto) return with_override(f, spec.star ? &*spec.star : nullptr, "complex");
            HilbertData h = circle_state_space(f);
            h.tag = RealityTag::ComplexSymmetric;
            RpResult r;
            r.route = "complex:2Re";
            r.circle = h;
            r.decided = integrate_complex(h);
            bool pd = is_positive_definite_hermitian(r.decided.gram);
            r.verdict = pd ? RpVerdict::Positive : RpVerdict::NotPositive;
            if (!pd) r.witness = nonpositive_witness(r.decided.gram);
            return r;
        }
        case TheoryKind::Hermitian: {
            FrobeniusAlgebra f = spec.frobenius();
            if (ov == RouteOverride::Oriented) return with_override(f, nullptr, "hermitian");
            return detail::decide_hermitian(circle_state_space(f, &*spec.star), "hermitian:realify");
        }
        case TheoryKind::HermitianSpin:
        case TheoryKind::TwistedHermitianSpin: {
            IntegratedTheory ib = spins_to_or(spec.algebra, *spec.spin, &*spec.star, spec.reality);
            RpResult r;
            if (ov == RouteOverride::Oriented) {
                r = with_override(ib.frob, nullptr, "spins-to-or");
            } else {
                bool twisted = spec.kind == TheoryKind::TwistedHermitianSpin;
                r = detail::decide_hermitian(circle_state_space(ib.frob, &*ib.star, twisted),
                                             "spins-to-or+hermitian");
            }
            r.integrated_dim = ib.frob.algebra.dim;
            return r;
        }
        case TheoryKind::HermitianSpinStatistics:
        case TheoryKind::TwistedHermitianSpinStatistics: {
            IntegratedTheory ib = spinstats_to_or(spec.algebra, *spec.spinstat, &*spec.star);
            RpResult r;
            if (ov == RouteOverride::Oriented) {
                r = with_override(ib.frob, nullptr, "spinstats-to-or");
            } else {
                r = detail::decide_hermitian(circle_state_space(ib.frob, &*ib.star),
                                             "spinstats-to-or+hermitian");
            }
            r.integrated_dim = ib.frob.algebra.dim;
            return r;
        }
        case TheoryKind::RealSpinStatistics: {
            IntegratedTheory ib = spinstats_to_or(spec.algebra, *spec.spinstat);
            HilbertData h = circle_state_space(ib.frob);
            RpResult r = detail::decide_oriented(h.dim, "spinstats-to-or+oriented:V+V*");
            r.integrated_dim = ib.frob.algebra.dim;
            return r;
        }
        case TheoryKind::HermitianSuper:
        case TheoryKind::TwistedHermitianSuper: {
            FrobeniusAlgebra f = spec.frobenius();
            HilbertData h = super_circle_sectors(f, *spec.star);
            RpResult r;
            r.route = "super-sectors:Spec(SuperVect)";
            r.circle = h;
            r.decided = integrate_complex(h);
            bool pd = r.decided.dim == 0 || is_positive_definite_hermitian(r.decided.gram);
            r.verdict = pd ? RpVerdict::Positive : RpVerdict::NotPositive;
            if (!pd) r.witness = nonpositive_witness(r.decided.gram);
            return r;
        }
    }
    throw unsupported_kind_error("kind is not supported by the positivity router");
}

}  // namespace spinstat
