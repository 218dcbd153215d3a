#pragma once

#include "superalgebra.hpp"

#include <memory>
#include <mutex>

namespace spinstat {

struct invalid_frobenius_error : std::runtime_error {
    explicit invalid_frobenius_error(const std::string& what) : std::runtime_error(what) {}
};
struct not_even_error : std::runtime_error {
    not_even_error() : std::runtime_error("operation requires a purely even algebra") {}
};

enum class FrobeniusSymmetry { SymmetricSuper, TwistedSymmetric };

/// Frobenius structure: a trace functional whose Gram matrix tr(e_i e_j) is
/// invertible, with a declared symmetry flavor.  The Gram inverse backing the
/// dual basis is computed once and cached on the value (copies share it).
struct FrobeniusAlgebra {
    SuperAlgebra algebra;
    TraceFunctional trace;
    FrobeniusSymmetry symmetry = FrobeniusSymmetry::SymmetricSuper;
    mutable std::shared_ptr<const GMatrix> gram_inverse_cache;

    FrobeniusAlgebra() = default;
    FrobeniusAlgebra(SuperAlgebra a, TraceFunctional t,
                     FrobeniusSymmetry s = FrobeniusSymmetry::SymmetricSuper)
        : algebra(std::move(a)), trace(std::move(t)), symmetry(s) {}

    GMatrix gram() const {
        GMatrix g(algebra.dim, algebra.dim);
        for (int i = 0; i < algebra.dim; ++i)
            for (int j = 0; j < algebra.dim; ++j) g.at(i, j) = trace(algebra.basis_product(i, j));
        return g;
    }

    const GMatrix& gram_inverse() const;
};

inline ValidationReport validate_frobenius(const FrobeniusAlgebra& f) {
    ValidationReport rep = validate_algebra(f.algebra);
    if (!rep.ok()) return rep;
    if (static_cast<int>(f.trace.covector.size()) != f.algebra.dim) {
        rep.add("shape", "trace covector length != dim");
        return rep;
    }
    GMatrix g = f.gram();
    if (f.algebra.dim > 0 && determinant(g).is_zero()) rep.add("degenerate", "Gram matrix tr(e_i e_j) is singular");
    for (int i = 0; i < f.algebra.dim; ++i)
        for (int j = 0; j < f.algebra.dim; ++j) {
            bool flip = f.symmetry == FrobeniusSymmetry::SymmetricSuper &&
                        (f.algebra.parity[static_cast<std::size_t>(i)] &
                         f.algebra.parity[static_cast<std::size_t>(j)]);
            GaussianRational want = flip ? -g.at(j, i) : g.at(j, i);
            if (g.at(i, j) != want)
                rep.add("symmetry", "tr(e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                        ") breaks the declared flavor");
        }
    return rep;
}

inline void require_valid(const FrobeniusAlgebra& f) {
    ValidationReport rep = validate_frobenius(f);
    if (!rep.ok()) throw invalid_frobenius_error(rep.summary());
}

inline const GMatrix& FrobeniusAlgebra::gram_inverse() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!gram_inverse_cache) gram_inverse_cache = std::make_shared<const GMatrix>(inverse(gram()));
    return *gram_inverse_cache;
}

/// Gram-dual basis: e^j = sum_k (G^{-1})[k][j] e_k, so tr(e_i e^j) = delta_ij.
inline std::vector<Vec> dual_basis(const FrobeniusAlgebra& f) {
    const GMatrix& ginv = f.gram_inverse();
    std::vector<Vec> dual;
    dual.reserve(static_cast<std::size_t>(f.algebra.dim));
    for (int j = 0; j < f.algebra.dim; ++j) {
        Vec v(static_cast<std::size_t>(f.algebra.dim));
        for (int k = 0; k < f.algebra.dim; ++k) v[static_cast<std::size_t>(k)] = ginv.at(k, j);
        dual.push_back(std::move(v));
    }
    return dual;
}

/// Handle element h = sum_i e_i e^i of a purely even Frobenius algebra; h is
/// central and tr(h) = dim.
inline Vec handle_element(const FrobeniusAlgebra& f) {
    require_valid(f);
    if (!f.algebra.purely_even()) throw not_even_error();
    std::vector<Vec> dual = dual_basis(f);
    Vec h(static_cast<std::size_t>(f.algebra.dim));
    for (int i = 0; i < f.algebra.dim; ++i) {
        Vec term = f.algebra.multiply(f.algebra.basis_vec(i), dual[static_cast<std::size_t>(i)]);
        for (int k = 0; k < f.algebra.dim; ++k) h[static_cast<std::size_t>(k)] += term[static_cast<std::size_t>(k)];
    }
    return h;
}

}  // namespace spinstat
