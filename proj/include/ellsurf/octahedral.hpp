#pragma once

#include "ellsurf/poly.hpp"

namespace ellsurf {

struct NonRationalCoefficient : std::logic_error {
    NonRationalCoefficient()
        : std::logic_error("Molien series coefficient is not a non-negative rational integer") {}
};

struct NotSignedPermutation : std::logic_error {
    NotSignedPermutation()
        : std::logic_error("group element does not permute V1,V2,V3 up to sign") {}
};

/// 2x2 matrix over K with determinant 1, acting on (alpha,beta).
struct Mat2 {
    K a, b, c, d;

    static Mat2 identity() { return {K(1), K(0), K(0), K(1)}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 inverse() const { return {d, -b, -c, a}; } // valid since det = 1
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    K det() const { return a * d - b * c; }
    K trace() const { return a + d; }
    Mat2 conj_transpose() const { return {a.conj_i(), c.conj_i(), b.conj_i(), d.conj_i()}; }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

struct GroupElement {
    Mat2 mat;
    bool quaternion;   // member of the order-8 quaternion subgroup
    bool tetrahedral;  // member of the order-24 binary tetrahedral subgroup
};

enum class Subgroup { quaternion, tetrahedral, octahedral };

/// The 24 coset representatives of the binary octahedral group modulo +-1;
/// the full binary octahedral group is these together with their negatives.
const std::vector<Mat2>& octahedral_coset_reps();

/// All 8 / 24 / 48 elements of the chosen subgroup.
const std::vector<GroupElement>& enumerate_group(Subgroup which);

/// Contragredient action on polynomials in (alpha,beta): p |-> p o sigma^{-1}.
Poly act(const Mat2& sigma, const Poly& p);

/// Signed permutation pi with sigma*(V_k) = sign[k] * V_{pi[k]} (0-indexed).
struct SignedPerm {
    std::array<int, 3> image{0, 1, 2};
    std::array<int, 3> sign{1, 1, 1};

    static SignedPerm identity() { return {}; }
    /// Composition matching the action: (sigma tau)* = sigma* o tau*.
    friend SignedPerm compose(const SignedPerm& sigma, const SignedPerm& tau) {
        SignedPerm r;
        for (int k = 0; k < 3; ++k) {
            r.image[k] = sigma.image[tau.image[k]];
            r.sign[k] = tau.sign[k] * sigma.sign[tau.image[k]];
        }
        return r;
    }
    friend bool operator==(const SignedPerm& x, const SignedPerm& y) {
        return x.image == y.image && x.sign == y.sign;
    }
    std::string str() const;
};

SignedPerm action_signature(const Mat2& sigma);

/// Coefficients t^0..t^N of (1/|G|) sum 1/det(I - tA), computed exactly over
/// K; throws NonRationalCoefficient if any coefficient fails to be a
/// non-negative rational integer.
std::vector<Rat> molien_series(Subgroup which, int N);

/// Power-series expansion of the closed-form Hilbert-Poincare series of the
/// invariant ring of the chosen subgroup.
std::vector<Rat> hilbert_closed_form(Subgroup which, int N);

/// The invariant catalog as binary forms in (alpha,beta).
namespace invariants {
const Poly& V();  // degree 6, vanishes at the octahedron vertices
const Poly& E();  // degree 12, vanishes at the edge midpoints
const Poly& F();  // degree 8, vanishes at the face centers
const Poly& V1(); // -2i*alpha*beta
const Poly& V2(); // i*(alpha^2 - beta^2)
const Poly& V3(); // alpha^2 + beta^2
const Poly& E1();
const Poly& E2();
const Poly& E3();
const Poly& Ek(int k);      // k = 1,2,3
const Poly& E_plus(int k);  // sqrt2*i*E_k + 3*V_i*V_j
const Poly& E_minus(int k); // sqrt2*i*E_k - 3*V_i*V_j
} // namespace invariants

/// The same catalog on the formal conic coordinates v1,v2,v3, where only the
/// relation v1^2 + v2^2 + v3^2 = 0 is assumed.
namespace vforms {
const Poly& V();
const Poly& E();
const Poly& F();
const Poly& Ek(int k);
const Poly& E_plus(int k);
const Poly& E_minus(int k);
Poly Vpair(int i, int j); // v_i * v_j

/// Normal form modulo the conic: v3-degree reduced below 2.
Poly reduce(const Poly& p);
bool is_zero_mod_conic(const Poly& p);
} // namespace vforms

} // namespace ellsurf
