#pragma once

#include "eval.hpp"
#include "torsors.hpp"

#include <functional>
#include <mutex>
#include <map>

namespace spinstat {

struct unknown_catalog_entry : std::runtime_error {
    explicit unknown_catalog_entry(const std::string& name)
        : std::runtime_error("unknown catalog entry: " + name) {}
};

namespace catalog_detail {

/// Even-part matrix trace of Cliff(n): tr(1) = 2^floor(n/2), zero on every
/// other basis monomial.
inline TraceFunctional cliff_trace(int n) {
    TraceFunctional t;
    t.covector.assign(static_cast<std::size_t>(1) << n, GaussianRational());
    Int v = Int(1) << (n / 2);
    t.covector[0] = GaussianRational(Rational(v));
    return t;
}

inline TheorySpec cliff_spinstats(int n, StarFlavor flavor) {
    TheorySpec spec;
    spec.kind = flavor == StarFlavor::Ordinary ? TheoryKind::HermitianSpinStatistics
                                               : TheoryKind::TwistedHermitianSpinStatistics;
    spec.algebra = cliff(n);
    spec.spinstat = spinstat_from_trace(spec.algebra, cliff_trace(n));
    spec.star = cliff_star(spec.algebra, n, flavor);
    return spec;
}

inline TheorySpec cliff_spinstats_real(int n) {
    TheorySpec spec;
    spec.kind = TheoryKind::RealSpinStatistics;
    spec.algebra = cliff(n);
    spec.spinstat = spinstat_from_trace(spec.algebra, cliff_trace(n));
    return spec;
}

/// Hermitian spin theory on the split algebra Q(i)^n with phi acting on the
/// class of v_i (x) v_i by the i-th entry of `values`.
inline TheorySpec split_spin(const std::vector<GaussianRational>& values, Reality reality) {
    int n = static_cast<int>(values.size());
    TheorySpec spec;
    spec.kind = reality == Reality::Real ? TheoryKind::HermitianSpin : TheoryKind::TwistedHermitianSpin;
    spec.algebra = split_algebra(n);
    SpinTrivialization t;
    t.quotient = build_bimodule_quotient(spec.algebra);
    t.phi = GMatrix(n, t.quotient.space.dim());
    for (int q = 0; q < t.quotient.space.dim(); ++q) {
        int idx = t.quotient.space.class_cols[static_cast<std::size_t>(q)];
        int summand = idx / (n + 1);  // surviving classes sit at v_i (x) v_i
        t.phi.at(summand, q) = values[static_cast<std::size_t>(summand)];
    }
    spec.spin = std::move(t);
    spec.star = conjugation_star(spec.algebra);
    return spec;
}

inline TheorySpec frobenius_theory(TheoryKind kind, SuperAlgebra a, Vec trace_covector,
                                   bool with_conj_star = false) {
    TheorySpec spec;
    spec.kind = kind;
    spec.algebra = std::move(a);
    spec.trace = TraceFunctional{std::move(trace_covector)};
    if (with_conj_star) spec.star = conjugation_star(spec.algebra);
    return spec;
}

inline TheorySpec super_cliff2(StarFlavor flavor) {
    TheorySpec spec;
    spec.kind = flavor == StarFlavor::Ordinary ? TheoryKind::HermitianSuper
                                               : TheoryKind::TwistedHermitianSuper;
    spec.algebra = cliff(2);
    Vec tr(4);
    tr[3] = GaussianRational::i();  // tr(xy) = i, all other monomials 0
    spec.trace = TraceFunctional{std::move(tr)};
    spec.star = cliff_star(spec.algebra, 2, flavor);
    return spec;
}

}  // namespace catalog_detail

struct CatalogEntry {
    std::string name;
    std::string description;
    std::function<TheorySpec()> make;
};

inline const std::vector<CatalogEntry>& catalog() {
    using namespace catalog_detail;
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        auto add = [&](std::string name, std::string desc, std::function<TheorySpec()> make) {
            v.push_back({std::move(name), std::move(desc), std::move(make)});
        };

        add("zero-theory", "dimension-zero theory; vacuously reflection-positive", [] {
            TheorySpec s;
            s.kind = TheoryKind::HermitianSpin;
            return s;
        });

        // hermitian-spin / twisted-hermitian-spin instances over Q(i)^n
        add("spin-phi-plus-one", "Hermitian spin theory on Q(i), phi = +1",
            [] { return split_spin({GaussianRational(1)}, Reality::Real); });
        add("spin-phi-minus-one", "Hermitian spin theory on Q(i), phi = -1",
            [] { return split_spin({GaussianRational(-1)}, Reality::Real); });
        add("spin-qi2-plus-plus", "Hermitian spin theory on Q(i)^2, phi = (1,1)",
            [] { return split_spin({GaussianRational(1), GaussianRational(1)}, Reality::Real); });
        add("spin-qi2-plus-minus", "Hermitian spin theory on Q(i)^2, phi = (1,-1)",
            [] { return split_spin({GaussianRational(1), GaussianRational(-1)}, Reality::Real); });
        add("spin-qi3-plus-plus-plus", "Hermitian spin theory on Q(i)^3, phi = (1,1,1)", [] {
            return split_spin({GaussianRational(1), GaussianRational(1), GaussianRational(1)},
                              Reality::Real);
        });
        add("spin-qi3-mixed", "Hermitian spin theory on Q(i)^3, phi = (1,-1,2)", [] {
            return split_spin({GaussianRational(1), GaussianRational(-1), GaussianRational(2)},
                              Reality::Real);
        });
        add("twisted-spin-phi-i", "twisted-Hermitian spin theory on Q(i), phi = i",
            [] { return split_spin({GaussianRational::i()}, Reality::Imaginary); });
        add("twisted-spin-phi-minus-i", "twisted-Hermitian spin theory on Q(i), phi = -i",
            [] { return split_spin({-GaussianRational::i()}, Reality::Imaginary); });

        // spin-statistics theories on Clifford algebras
        for (int n = 1; n <= 5; ++n) {
            add("cliff" + std::to_string(n) + "-spinstats",
                "Hermitian spin-statistics theory on Cliff(" + std::to_string(n) + ")",
                [n] { return cliff_spinstats(n, StarFlavor::Ordinary); });
        }
        add("cliff1-spinstats-twisted", "twisted-Hermitian spin-statistics theory on Cliff(1)",
            [] { return cliff_spinstats(1, StarFlavor::Twisted); });
        add("cliff2-spinstats-twisted", "twisted-Hermitian spin-statistics theory on Cliff(2)",
            [] { return cliff_spinstats(2, StarFlavor::Twisted); });
        add("cliff1-spinstats-real", "real spin-statistics theory on Cliff(1)",
            [] { return cliff_spinstats_real(1); });

        // Hermitian super theories
        add("super-cliff2", "Hermitian super theory on Cliff(2), tr(xy) = i",
            [] { return super_cliff2(StarFlavor::Ordinary); });
        add("super-cliff2-twisted", "twisted-Hermitian super theory on Cliff(2), tr(xy) = i",
            [] { return super_cliff2(StarFlavor::Twisted); });

        // oriented theories
        add("oriented-qi", "oriented theory on Q(i), tr(1) = 1", [] {
            return frobenius_theory(TheoryKind::Oriented, scalar_algebra(), {GaussianRational(1)});
        });
        add("oriented-qix2-plus", "oriented theory on Q(i)[x]/(x^2=1), tr(a+bx) = b", [] {
            return frobenius_theory(TheoryKind::Oriented, poly_sq(GaussianRational(1)),
                                    {GaussianRational(0), GaussianRational(1)});
        });
        add("oriented-z3", "oriented theory on the group algebra of Z/3", [] {
            return frobenius_theory(TheoryKind::Oriented, group_algebra_zn(3),
                                    {GaussianRational(1), GaussianRational(0), GaussianRational(0)});
        });
        add("oriented-mat2", "oriented theory on Mat_2 with the matrix trace", [] {
            return frobenius_theory(TheoryKind::Oriented, mat(2),
                                    {GaussianRational(1), GaussianRational(0), GaussianRational(0),
                                     GaussianRational(1)});
        });

        // unstructured theories
        add("unoriented-z2", "unoriented theory on the group algebra of Z/2", [] {
            return frobenius_theory(TheoryKind::Unoriented, group_algebra_zn(2),
                                    {GaussianRational(1), GaussianRational(0)});
        });
        add("unoriented-qix2-indefinite", "unoriented theory on Q(i)[x]/(x^2=1), tr(a+bx) = b", [] {
            return frobenius_theory(TheoryKind::Unoriented, poly_sq(GaussianRational(1)),
                                    {GaussianRational(0), GaussianRational(1)});
        });

        // complex-linear theories
        add("complex-qi", "complex-linear theory on Q(i), tr(1) = 1", [] {
            return frobenius_theory(TheoryKind::Complex, scalar_algebra(), {GaussianRational(1)});
        });
        add("complex-qix2", "complex-linear theory on Q(i)[x]/(x^2=1), tr(a+bx) = b", [] {
            return frobenius_theory(TheoryKind::Complex, poly_sq(GaussianRational(1)),
                                    {GaussianRational(0), GaussianRational(1)});
        });

        // Hermitian theories
        add("hermitian-qi", "Hermitian theory on Q(i), tr(1) = 1", [] {
            return frobenius_theory(TheoryKind::Hermitian, scalar_algebra(), {GaussianRational(1)}, true);
        });
        add("hermitian-qi-negative", "Hermitian theory on Q(i), tr(1) = -1", [] {
            return frobenius_theory(TheoryKind::Hermitian, scalar_algebra(), {GaussianRational(-1)}, true);
        });
        add("hermitian-z2", "Hermitian theory on the group algebra of Z/2", [] {
            return frobenius_theory(TheoryKind::Hermitian, group_algebra_zn(2),
                                    {GaussianRational(1), GaussianRational(0)}, true);
        });
        return v;
    }();
    return entries;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
}

/// Builds and validates the named entry.  Entries are immutable values, so
/// built theories are memoized.
inline TheorySpec catalog_entry(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, TheorySpec> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(name);
        if (it != cache.end()) return it->second;
    }
    for (const auto& e : catalog())
        if (e.name == name) {
            TheorySpec spec = build_theory(e.make());
            std::lock_guard<std::mutex> lock(mu);
            return cache.emplace(name, std::move(spec)).first->second;
        }
    throw unknown_catalog_entry(name);
}

inline std::string catalog_description(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e.description;
    throw unknown_catalog_entry(name);
}

}  // namespace spinstat
