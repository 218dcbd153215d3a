#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spinstat;

namespace {

FrobeniusAlgebra cliff2_super_frobenius() {
    // tr(xy) = i, tr(1) = tr(x) = tr(y) = 0
    Vec t(4);
    t[3] = GaussianRational::i();
    return {cliff(2), TraceFunctional{t}, FrobeniusSymmetry::SymmetricSuper};
}

FrobeniusAlgebra cliff1_twisted_frobenius() {
    // the even-part matrix trace: tr(1) = 1, tr(x) = 0
    return {cliff(1), TraceFunctional{{GaussianRational(1), GaussianRational(0)}},
            FrobeniusSymmetry::TwistedSymmetric};
}

}  // namespace

TEST_CASE("validate_frobenius") {
    CHECK(validate_frobenius(cliff2_super_frobenius()).ok());
    CHECK(validate_frobenius(cliff1_twisted_frobenius()).ok());

    // a zero trace is degenerate
    FrobeniusAlgebra zero{cliff(1), TraceFunctional{Vec(2)}, FrobeniusSymmetry::TwistedSymmetric};
    ValidationReport rep = validate_frobenius(zero);
    CHECK_FALSE(rep.ok());
    bool saw_degenerate = false;
    for (const auto& v : rep.violations) saw_degenerate |= v.code == "degenerate";
    CHECK(saw_degenerate);

    // flavor mismatch: the Cliff(2) trace with tr(xy) = i is symmetric-super,
    // not twisted-symmetric (tr(xy) != tr(yx))
    FrobeniusAlgebra wrong = cliff2_super_frobenius();
    wrong.symmetry = FrobeniusSymmetry::TwistedSymmetric;
    CHECK_FALSE(validate_frobenius(wrong).ok());
}

TEST_CASE("dual basis") {
    FrobeniusAlgebra f{poly_sq(GaussianRational(1)),
                       TraceFunctional{{GaussianRational(0), GaussianRational(1)}},
                       FrobeniusSymmetry::SymmetricSuper};
    std::vector<Vec> dual = dual_basis(f);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            GaussianRational v = f.trace(f.algebra.multiply(f.algebra.basis_vec(i), dual[static_cast<std::size_t>(j)]));
            CHECK(v == (i == j ? GaussianRational::one() : GaussianRational::zero()));
        }
}

TEST_CASE("handle element") {
    // 1-dimensional algebra with tr(1) = lambda: h = (1/lambda) 1
    FrobeniusAlgebra f1{scalar_algebra(), TraceFunctional{{GaussianRational(Rational(3))}},
                        FrobeniusSymmetry::SymmetricSuper};
    CHECK(handle_element(f1) == Vec{GaussianRational(Rational(1, 3))});

    // Q(i)[x]/(x^2=1) with tr(a+bx) = b: dual basis of {1,x} is {x,1}, h = 2x
    FrobeniusAlgebra f2{poly_sq(GaussianRational(1)),
                        TraceFunctional{{GaussianRational(0), GaussianRational(1)}},
                        FrobeniusSymmetry::SymmetricSuper};
    CHECK(handle_element(f2) == Vec{GaussianRational(0), GaussianRational(2)});

    // Mat_2 with the matrix trace: explicit summation over E_ab E_ba gives
    // h = 2*Id, central, with counit value tr(h) = 4 = dim
    FrobeniusAlgebra fm{mat(2),
                        TraceFunctional{{GaussianRational(1), GaussianRational(0), GaussianRational(0),
                                         GaussianRational(1)}},
                        FrobeniusSymmetry::SymmetricSuper};
    Vec oracle_h(4);
    {
        std::vector<Vec> dual = dual_basis(fm);
        for (int i = 0; i < 4; ++i) {
            Vec term = fm.algebra.multiply(fm.algebra.basis_vec(i), dual[static_cast<std::size_t>(i)]);
            for (int k = 0; k < 4; ++k) oracle_h[static_cast<std::size_t>(k)] += term[static_cast<std::size_t>(k)];
        }
    }
    Vec h = handle_element(fm);
    CHECK(h == oracle_h);
    CHECK(h == Vec{GaussianRational(2), GaussianRational(0), GaussianRational(0), GaussianRational(2)});
    CHECK(fm.trace(h) == GaussianRational(4));

    // centrality across commutative and matrix examples
    for (const FrobeniusAlgebra& f : {f1, f2, fm}) {
        Vec hh = handle_element(f);
        for (int j = 0; j < f.algebra.dim; ++j) {
            Vec ej = f.algebra.basis_vec(j);
            CHECK(f.algebra.multiply(hh, ej) == f.algebra.multiply(ej, hh));
        }
    }

    // restricted to purely even algebras
    CHECK_THROWS_AS(handle_element(cliff1_twisted_frobenius()), not_even_error);
    // invalid Frobenius data is rejected
    FrobeniusAlgebra bad{scalar_algebra(), TraceFunctional{{GaussianRational(0)}},
                         FrobeniusSymmetry::SymmetricSuper};
    CHECK_THROWS_AS(handle_element(bad), invalid_frobenius_error);
}

TEST_CASE("gram matrices of the flagship Frobenius structures") {
    // Cliff(1) with the even-part matrix trace has Gram = identity
    CHECK(cliff1_twisted_frobenius().gram() == GMatrix::identity(2));

    // Cliff(2) super-symmetric Gram pairs complementary monomials by +/- i
    GMatrix g = cliff2_super_frobenius().gram();
    CHECK(g.at(0, 3) == GaussianRational::i());
    CHECK(g.at(1, 2) == GaussianRational::i());
    CHECK(g.at(2, 1) == -GaussianRational::i());
    CHECK(g.at(3, 0) == GaussianRational::i());
    CHECK_FALSE(determinant(g).is_zero());
}
