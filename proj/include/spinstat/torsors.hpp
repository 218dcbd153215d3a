#pragma once

#include "theory.hpp"

#include <numeric>

namespace spinstat {

struct out_of_range_error : std::runtime_error {
    explicit out_of_range_error(const std::string& what) : std::runtime_error(what) {}
};
struct unsupported_two_group_error : std::runtime_error {
    explicit unsupported_two_group_error(const std::string& what) : std::runtime_error(what) {}
};

/// Finite abelian group as a list of cyclic orders (not necessarily invariant
/// factors; order and homs only depend on the multiset).
struct FiniteAbelianGroup {
    std::vector<long> cyclic_orders;

    static FiniteAbelianGroup trivial() { return {}; }
    static FiniteAbelianGroup cyclic(long n) {
        FiniteAbelianGroup g;
        if (n > 1) g.cyclic_orders.push_back(n);
        return g;
    }
    long order() const {
        long o = 1;
        for (long n : cyclic_orders) o *= n;
        return o;
    }
    bool is_trivial() const { return order() == 1; }
    std::string name() const {
        if (cyclic_orders.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < cyclic_orders.size(); ++k) {
            if (k) s += "+";
            s += "Z/" + std::to_string(cyclic_orders[k]);
        }
        return s;
    }
    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        auto x = a.cyclic_orders, y = b.cyclic_orders;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }
};

inline long hom_count(long n, const FiniteAbelianGroup& coeffs) {
    // |Hom(Z/n, A)| = prod gcd(n, d)
    long c = 1;
    for (long d : coeffs.cyclic_orders) c *= std::gcd(n, d);
    return c;
}

/// H^k(B(Z/n); M) for a trivial module M, from the 2-periodic resolution
///   ... -> Z[C_n] --(N)--> Z[C_n] --(t-1)--> Z[C_n] -> Z:
/// H^0 = M, H^{2j+1} = M[n] and H^{2j+2} = M/nM, and both torsion groups are
/// direct sums of Z/gcd(n, d) over the cyclic factors Z/d of M.
inline FiniteAbelianGroup cohomology_cyclic(int degree, long n, const FiniteAbelianGroup& coeffs) {
    if (degree < 0 || degree > 4) throw out_of_range_error("degree must be in 0..4");
    if (n < 1 || n > 12) throw out_of_range_error("modulus must be in 1..12");
    if (degree == 0) return coeffs;
    FiniteAbelianGroup out;
    for (long d : coeffs.cyclic_orders) {
        long g = std::gcd(n, d);
        if (g > 1) out.cyclic_orders.push_back(g);
    }
    return out;  // same answer in every positive degree for trivial action
}

/// Companion table for the Eilenberg-MacLane space B^2(Z/2) = K(Z/2, 2) in
/// degrees <= 2: H^0 = M, H^1 = 0 (simply connected), H^2 = Hom(Z/2, M).
inline FiniteAbelianGroup cohomology_b2_z2(int degree, const FiniteAbelianGroup& coeffs) {
    if (degree < 0 || degree > 2) throw out_of_range_error("B^2(Z/2) table covers degrees 0..2");
    if (degree == 0) return coeffs;
    if (degree == 1) return FiniteAbelianGroup::trivial();
    FiniteAbelianGroup out;
    for (long d : coeffs.cyclic_orders) {
        long g = std::gcd(2L, d);
        if (g > 1) out.cyclic_orders.push_back(g);
    }
    return out;
}

/// Split 2-group pi_0 x B(pi_1) with trivial action and k-invariant.
struct PicardTwoGroup {
    FiniteAbelianGroup pi0;
    FiniteAbelianGroup pi1;
    bool trivial_k_invariant = true;

    static PicardTwoGroup galois_r() {
        return {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(2), true};
    }
};

/// Number of categorified G-torsor classes over the reals:
/// |Hom(Z/2, pi_0)| * |H^2(B(Z/2); pi_1)| * |H^2(B^2(Z/2); pi_1)|
/// (the H^1(B^2(Z/2); -) factor is always trivial).
inline long count_torsor_classes(const PicardTwoGroup& g) {
    if (!g.trivial_k_invariant)
        throw unsupported_two_group_error("only split 2-groups with trivial k-invariant are supported");
    long a = hom_count(2, g.pi0);
    long b = cohomology_cyclic(2, 2, g.pi1).order();
    long c = cohomology_b2_z2(2, g.pi1).order();
    return a * b * c;
}

/// One of the eight tangential-structure classes that become spin structures
/// after base change: a triple (a, b, c) in (Z/2)^3 recording whether
/// orientation reversal acts by complex conjugation, whether 360-degree
/// rotation acts by the parity automorphism, and the mixing class in
/// H^2(Z/2; Z/2).
struct EtaleSpinClass {
    int conj_equals_reversal = 0;  // a
    int parity_equals_twist = 0;   // b
    int mixing = 0;                // c
    std::string name;
    TheoryKind kind = TheoryKind::Oriented;
    bool distinguished = false;
};

/// The eight classes with their canonical names and the theory-kind tag whose
/// classification data realizes each.  The trivial triple is the plain spin
/// structure; the distinguished class has both identifications switched on
/// and no mixing.  Real super data classifies the (0,1,0) class, and the
/// quaternionic twisted-real variants are folded into the
/// "real-spin-statistics" row, which carries the twisted statistics tag.
inline std::vector<EtaleSpinClass> enumerate_etale_spin_classes() {
    std::vector<EtaleSpinClass> out;
    out.push_back({0, 0, 0, "oriented-spin", TheoryKind::Oriented, false});
    out.push_back({1, 0, 0, "hermitian-spin", TheoryKind::HermitianSpin, false});
    out.push_back({1, 0, 1, "twisted-hermitian-spin", TheoryKind::TwistedHermitianSpin, false});
    out.push_back({0, 1, 0, "oriented/real-super", TheoryKind::RealSpinStatistics, false});
    out.push_back({1, 1, 0, "hermitian-spin-statistics", TheoryKind::HermitianSpinStatistics, true});
    out.push_back({1, 1, 1, "hermitian-super", TheoryKind::HermitianSuper, false});
    out.push_back({0, 1, 1, "real-spin-statistics", TheoryKind::TwistedHermitianSpinStatistics, false});
    out.push_back({0, 0, 1, "twisted-hermitian-super", TheoryKind::TwistedHermitianSuper, false});
    return out;
}

}  // namespace spinstat
