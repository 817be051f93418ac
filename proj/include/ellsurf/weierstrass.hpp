#pragma once

#include "ellsurf/poly.hpp"

#include <vector>

namespace ellsurf {

struct DegenerateParameter : std::domain_error {
    DegenerateParameter() : std::domain_error("family parameter (0,0) is not a point of P^1") {}
};

struct UnclassifiableTriple : std::domain_error {
    explicit UnclassifiableTriple(const std::string& what) : std::domain_error(what) {}
};

struct NoSquareRootInK : std::domain_error {
    NoSquareRootInK() : std::domain_error("twist scalar has no square root in Q(i,sqrt2)") {}
};

struct ZeroDiscriminant : std::domain_error {
    ZeroDiscriminant() : std::domain_error("discriminant is identically zero") {}
};

enum class FiberKind { I0, In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

struct FiberType {
    FiberKind kind = FiberKind::I0;
    int n = 0; // for In (n >= 1) and In* (n >= 0)

    std::string name() const;
    friend bool operator==(const FiberType& a, const FiberType& b) {
        return a.kind == b.kind && a.n == b.n;
    }
};

/// Value class of the J-function at a point: 0, 1, infinity, or another value.
struct JClass {
    enum class Tag { zero, one, infinity, other } tag;
    K value; // meaningful for tag == other

    static JClass zero() { return {Tag::zero, K(0)}; }
    static JClass one() { return {Tag::one, K(1)}; }
    static JClass infinity() { return {Tag::infinity, K(0)}; }
    static JClass of(const K& v) {
        if (v == K(0)) return zero();
        if (v == K(1)) return one();
        return {Tag::other, v};
    }
    std::string str() const;
};

/// Ramification index e_p(J); `exact` is false for the table rows that only
/// bound it below (it is exactly 1 whenever the J-function has degree one).
struct EpInfo {
    int value = 1;
    bool exact = true;
};

/// Weierstrass data of a family member: binary forms g2 (deg 4), g3 (deg 6)
/// in (S,T) with disc = g2^3 - 27 g3^2 not identically zero.
struct WeierstrassData {
    K a, b;
    Poly g2, g3, disc;
};

/// g2 = 27 T (T-S)(aT-bS)^2, g3 = 27 T (T-S)^2 (aT-bS)^3.
WeierstrassData family_coefficients(const K& a, const K& b);

/// The octahedral-cover member: (a,b) = (E(alpha,beta)^2, F(alpha,beta)^3).
WeierstrassData cover_coefficients(const K& alpha, const K& beta);

/// The classification table row for vanishing orders (v(g2),v(g3),v(disc))
/// and J-class; throws UnclassifiableTriple when no row matches.
FiberType classify_fiber(const std::array<int, 3>& orders, const JClass& j,
                         EpInfo* ep = nullptr);

struct FiberRecord {
    std::pair<K, K> position; // (s0 : t0)
    FiberType type;
    std::array<int, 3> orders;
    JClass j;
    EpInfo ep;
};

/// Singular fibers of the family member, in base order (infinity, 0, 1, J0).
std::vector<FiberRecord> fiber_configuration(const K& a, const K& b);
std::vector<FiberRecord> fiber_configuration_cover(const K& alpha, const K& beta);

struct TwistReport {
    K sqrt_k;
    bool g2_scales;
    bool g3_scales;
    bool equation_matches;
    bool ok() const { return g2_scales && g3_scales && equation_matches; }
};

/// Checks that (a,b) -> (ka,kb) rescales g2,g3 by k^2,k^3 and that
/// (X:Y:Z) -> (kX : k sqrt(k) Y : Z) carries one equation into the other.
TwistReport verify_twist(const K& a, const K& b, const K& k);

/// J = g2^3 / disc (multiply by 1728 for the classical normalization).
RationalFn j_function(const WeierstrassData& data, bool classical = false);

/// Y^2 Z - 4 X^3 + g2 X Z^2 + g3 Z^3 as a polynomial in (S,T,X,Y,Z).
Poly weierstrass_polynomial(const WeierstrassData& data);

} // namespace ellsurf
