#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spinstat;

namespace {

GMatrix from_longs(int r, int c, std::initializer_list<long> vals) {
    GMatrix m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = GaussianRational(*it++);
    return m;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(GMatrix::identity(2)).empty());

    auto kb = kernel_basis(from_longs(2, 2, {1, 1, 1, 1}));
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == Vec{GaussianRational(1), GaussianRational(-1)});

    auto kb2 = kernel_basis(from_longs(1, 2, {0, 0}));
    REQUIRE(kb2.size() == 2);
    CHECK(kb2[0] == Vec{GaussianRational(1), GaussianRational(0)});
    CHECK(kb2[1] == Vec{GaussianRational(0), GaussianRational(1)});

    // m v = 0 and rank + |basis| = cols, on random matrices
    oracles::Rng rng(0x5eed0011);
    for (int t = 0; t < 60; ++t) {
        int r = static_cast<int>(rng.small_int(1, 5));
        int c = static_cast<int>(rng.small_int(1, 5));
        GMatrix m(r, c);
        for (auto& e : m.entries) e = GaussianRational(Rational(rng.small_int(-2, 2)));
        auto basis = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(basis.size()) == c);
        for (const auto& v : basis) {
            CHECK(is_zero_vec(m.apply(v)));
            // echelon-normalized: first nonzero entry is 1
            for (const auto& x : v)
                if (!x.is_zero()) {
                    CHECK(x == GaussianRational::one());
                    break;
                }
        }
    }
}

TEST_CASE("sylvester positive definiteness") {
    CHECK(is_positive_definite_hermitian(GMatrix::identity(2)));
    // a purely off-diagonal pairing is never positive-definite
    CHECK_FALSE(is_positive_definite_hermitian(from_longs(2, 2, {0, 1, 1, 0})));

    // leading minors 2 and 3, cross-checked by cofactor expansion
    GMatrix g = from_longs(2, 2, {2, 1, 1, 2});
    CHECK(oracles::cofactor_determinant(from_longs(1, 1, {2})) == GaussianRational(2));
    CHECK(oracles::cofactor_determinant(g) == GaussianRational(3));
    CHECK(is_positive_definite_hermitian(g));

    // degenerate forms are "not positive-definite", not an error
    CHECK_FALSE(is_positive_definite_hermitian(from_longs(2, 2, {0, 0, 0, 1})));
    CHECK(is_positive_definite_hermitian(GMatrix()));  // 0x0, vacuous

    CHECK_THROWS_AS(is_positive_definite_hermitian(from_longs(2, 2, {1, 2, 3, 4})),
                    not_hermitian_error);
    GMatrix h(1, 1);
    h.at(0, 0) = GaussianRational::i();
    CHECK_THROWS_AS(is_positive_definite_hermitian(h), not_hermitian_error);
}

TEST_CASE("sylvester agrees with the LDL oracle on seeded Hermitian samples") {
    oracles::Rng rng(0x5eed0012);
    int checked = 0;
    while (checked < 220) {
        int n = static_cast<int>(rng.small_int(1, 6));
        GMatrix g = rng.hermitian(n);
        CHECK(is_positive_definite_hermitian(g) == oracles::ldl_positive_definite(g));
        // definite matrices are rare in the random sample; also test shifted
        // diagonally dominant variants so both verdicts occur
        GMatrix shifted = g;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += GaussianRational(12);
        CHECK(is_positive_definite_hermitian(shifted) == oracles::ldl_positive_definite(shifted));
        checked += 2;
    }
}

TEST_CASE("realify_form") {
    GMatrix h2(1, 1);
    h2.at(0, 0) = GaussianRational(2);
    CHECK(realify_form(h2, FormKind::Hermitian) == from_longs(2, 2, {4, 0, 0, 4}));

    GMatrix cs(1, 1);
    cs.at(0, 0) = GaussianRational(1);
    CHECK(realify_form(cs, FormKind::ComplexSymmetric) == from_longs(2, 2, {2, 0, 0, -2}));

    GMatrix empty;
    CHECK(realify_form(empty, FormKind::Hermitian).rows == 0);

    GMatrix skew(2, 2);
    skew.at(0, 1) = GaussianRational(1);
    skew.at(1, 0) = GaussianRational(-1);
    CHECK_THROWS_AS(realify_form(skew, FormKind::Hermitian), kind_mismatch_error);
    CHECK_THROWS_AS(realify_form(skew, FormKind::ComplexSymmetric), kind_mismatch_error);

    oracles::Rng rng(0x5eed0013);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng.small_int(1, 4));
        GMatrix g = rng.hermitian(n);
        // definiteness is preserved by realification
        CHECK(is_positive_definite_hermitian(g) ==
              is_positive_definite_hermitian(realify_form(g, FormKind::Hermitian)));
        // complex-symmetric forms realify to split-signature forms
        GMatrix sym(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) sym.at(i, j) = sym.at(j, i) = rng.scalar();
        GMatrix re = realify_form(sym, FormKind::ComplexSymmetric);
        CHECK_FALSE(is_positive_definite_hermitian(re));
        auto [pos, neg] = signature_hermitian(re);
        CHECK(pos == neg);
    }
}

TEST_CASE("hermitian congruence diagonalization, signature and witnesses") {
    oracles::Rng rng(0x5eed0014);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.small_int(1, 5));
        GMatrix g = rng.hermitian(n);
        HermitianDiagonalization d = diagonalize_hermitian(g);
        CHECK_FALSE(determinant(d.basis).is_zero());
        GMatrix check = d.basis.dagger() * g * d.basis;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    CHECK(check.at(i, j) == GaussianRational(d.diag[static_cast<std::size_t>(i)]));
                else
                    CHECK(check.at(i, j).is_zero());
            }
        auto w = nonpositive_witness(g);
        if (is_positive_definite_hermitian(g)) {
            CHECK_FALSE(w.has_value());
        } else {
            REQUIRE(w.has_value());
            // v* G v <= 0
            GaussianRational val;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    val += (*w)[static_cast<std::size_t>(i)].conj() * g.at(i, j) *
                           (*w)[static_cast<std::size_t>(j)];
            CHECK(val.im == 0);
            CHECK(val.re <= 0);
            CHECK_FALSE(is_zero_vec(*w));
        }
    }
}

TEST_CASE("determinant and inverse") {
    oracles::Rng rng(0x5eed0015);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng.small_int(1, 4));
        GMatrix m(n, n);
        for (auto& e : m.entries) e = rng.scalar();
        CHECK(determinant(m) == oracles::cofactor_determinant(m));
        if (!determinant(m).is_zero()) CHECK(m * inverse(m) == GMatrix::identity(n));
    }
    CHECK_THROWS_AS(inverse(from_longs(2, 2, {1, 1, 1, 1})), singular_matrix_error);
}

TEST_CASE("quotient by span") {
    // quotient of Q^3 by span{(1,1,0)}
    QuotientSpace q = quotient_by_span({{GaussianRational(1), GaussianRational(1), GaussianRational(0)}}, 3);
    CHECK(q.dim() == 2);
    CHECK(q.class_cols == std::vector<int>{1, 2});
    // [e_0] = -[e_1] in the quotient
    Vec p = q.project({GaussianRational(1), GaussianRational(0), GaussianRational(0)});
    CHECK(p == Vec{GaussianRational(-1), GaussianRational(0)});
    // projection kills the span
    CHECK(is_zero_vec(q.project({GaussianRational(2), GaussianRational(2), GaussianRational(0)})));
}
