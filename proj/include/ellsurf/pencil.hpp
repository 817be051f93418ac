#pragma once

#include "ellsurf/octahedral.hpp"
#include "ellsurf/weierstrass.hpp"

#include <vector>

namespace ellsurf {

struct VertexDegeneration : std::domain_error {
    VertexDegeneration() : std::domain_error("V = 0: base points degenerate at a vertex") {}
};

struct NodePoint : std::domain_error {
    NodePoint() : std::domain_error("the node is not in the fiber group") {}
};

struct CuspPoint : std::domain_error {
    CuspPoint() : std::domain_error("the cusp is not in the fiber group") {}
};

struct SingularPointInput : std::domain_error {
    SingularPointInput() : std::domain_error("singular point passed to the group law") {}
};

struct ConfluentCase : std::domain_error {
    explicit ConfluentCase(const std::string& what) : std::domain_error(what) {}
};

struct NotOnCurve : std::domain_error {
    NotOnCurve() : std::domain_error("point does not lie on the cubic") {}
};

/// Which coefficient ring symbolic statements are phrased in: the explicit
/// binary forms in (alpha,beta), or the conic coordinates (v1,v2,v3) where
/// only v1^2+v2^2+v3^2 = 0 is used.
enum class Ring { cover, conic };

const Poly& ring_V(Ring r);
const Poly& ring_E(Ring r);
const Poly& ring_F(Ring r);
const Poly& ring_Ek(Ring r, int k);
const Poly& ring_E_plus(Ring r, int k);
const Poly& ring_E_minus(Ring r, int k);
Poly ring_pair(Ring r, int i, int j); // V_i * V_j
Poly ring_reduce(Ring r, const Poly& p);
bool ring_zero(Ring r, const Poly& p);
bool ring_equal(Ring r, const RationalFn& a, const RationalFn& b);

/// Outcome of one named identity check; `detail` holds the first failing
/// polynomial difference when pass is false.
struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

/// The cubic pencil T*(E^2 Y^2 Z - 4X^3 + 27XZ^2 + 27Z^3) = S*(F^3 Y^2 Z - 4X^3).
struct CubicPencil {
    Ring ring;
    Poly cubic_t; // coefficient of T
    Poly cubic_s; // coefficient of S
    Poly member() const; // T*cubic_t - S*cubic_s, a form in (X,Y,Z,S,T,ring vars)
};
CubicPencil cubic_pencil(Ring r);

struct LabeledCubic {
    std::string label;
    std::pair<K, K> at; // pencil parameter (S:T) of the member
    Poly curve;
};
/// The four singular members (nodal, cuspidal, conic+tangent, concurrent lines).
std::vector<LabeledCubic> singular_members(Ring r);

/// A base point of the pencil: six affine points plus the infinitely-near
/// triple at (0:1:0).
struct BasePoint {
    bool infinitely_near = false;
    int multiplicity = 1;
    int i = 0, j = 0, sign = 0; // V_i V_j pair and the Y-sign, for affine points
    RationalFn x, y;            // affine coordinates (X/Z, Y/Z)
};
std::vector<BasePoint> base_points(Ring r);
/// The six affine base points evaluated at a parameter; throws
/// VertexDegeneration when V(alpha,beta) = 0.
std::vector<std::pair<K, K>> base_points_at(const K& alpha, const K& beta);

/// Birational transform to the Weierstrass model at pencil parameter (s:t):
/// (X:Y:Z) -> ((t-s)(at-bs) X : (t-s)(at-bs)^2 Y : Z).
std::array<K, 3> to_weierstrass(const std::array<K, 3>& pt, const K& s, const K& t, const K& a,
                                const K& b);

/// Mordell-Weil section generator: X/Z and Y/Z as rational functions in
/// (S,T) over the chosen ring, indexed by 1 <= i < j <= 3 and a sign.
struct SectionGenerator {
    int i, j, sign;
    RationalFn X, Y;
};
SectionGenerator section_generator(Ring r, int i, int j, int sign);

/// Exact Weierstrass point of a section generator at (alpha,beta), (s:t);
/// returned projectively. Throws VertexDegeneration when V_i V_j = 0.
std::array<K, 3> eval_section(const K& alpha, const K& beta, const K& s, const K& t, int i,
                              int j, int sign);

// --- group structures on the singular fibers ----------------------------

/// Plane cubic in the shape A Y^2 Z = B X^3 + C X Z^2 + D Z^3 (A, B nonzero).
struct ShapedCubic {
    K A, B, C, D;
};

struct CubicPoint {
    bool at_infinity = true;
    K x, y;

    static CubicPoint infinity() { return {}; }
    static CubicPoint affine(K px, K py) { return {false, std::move(px), std::move(py)}; }
    friend bool operator==(const CubicPoint& p, const CubicPoint& q) {
        if (p.at_infinity != q.at_infinity) return false;
        return p.at_infinity || (p.x == q.x && p.y == q.y);
    }
};

bool on_curve(const ShapedCubic& c, const CubicPoint& p);
bool is_singular_point(const ShapedCubic& c, const CubicPoint& p);

/// Chord-tangent addition with identity (0:1:0); rejects singular points.
CubicPoint cubic_add(const ShapedCubic& c, const CubicPoint& p, const CubicPoint& q);
CubicPoint cubic_negate(const CubicPoint& p);

/// The nodal member E^2 Y^2 Z = (X-3Z)(2X+3Z)^2 at a parameter value; throws
/// ConfluentCase when E = 0 (no I1 fiber).
ShapedCubic nodal_member(const K& alpha, const K& beta);
/// The cuspidal member F^3 Y^2 Z = 4X^3; throws ConfluentCase when F = 0.
ShapedCubic cuspidal_member(const K& alpha, const K& beta);

/// Multiplicative coordinate on the nodal member:
/// mu = (2EY - 3 sqrt2 i (2X+3Z)) / (2EY + 3 sqrt2 i (2X+3Z)), mu(0:1:0) = 1.
/// `reciprocal` swaps the two tangent-cone branches (mu -> 1/mu).
K mu_value(const K& e_value, const CubicPoint& p, bool reciprocal = false);
CubicPoint mu_inverse_point(const K& e_value, const K& mu, bool reciprocal = false);

/// Additive coordinate on the cuspidal member: nu = X/(F Y), nu(0:1:0) = 0.
K nu_value(const K& f_value, const CubicPoint& p);
CubicPoint nu_inverse_point(const K& f_value, const K& nu);

enum class FiberGroupKind { I1, II };

/// The three generator values of the section group inside the fiber:
/// ratios E_k^+/E_k^- for I1, representative values V2V3, V1V3, V1V2 for II.
std::array<K, 3> singular_group_generators(FiberGroupKind kind, const K& alpha, const K& beta);

/// xi_k = F / (4 (V_i V_j)^2), the nontrivial I0*-component intersection
/// abscissas (together with infinity they are the four component meeting
/// points of the I0* fiber).
std::array<RationalFn, 3> xi_values(Ring r);

// --- named verification suites -------------------------------------------

std::vector<Check> section_generator_checks();     // the six Weierstrass identities
std::vector<Check> pencil_consistency_checks();    // transform, members, factorizations
std::vector<Check> base_point_checks();            // base points on both cubics; stability
std::vector<Check> group_law_oracle_checks(unsigned seed, int pairs);
std::vector<Check> fiber_group_value_checks();     // mu/nu generator values, quartic curve
enum class AnnihilatorKind { degree6, degree12 };
std::vector<Check> annihilator_check(AnnihilatorKind kind);
std::vector<Check> xi_relation_checks();           // cubic, sum, product
std::vector<Check> xi_subfield_relations();
std::vector<Check> modulus_relations();            // kappa, kappa', rho
std::vector<Check> lambda_orbit_checks();
std::vector<Check> torus_j_transfer();

std::vector<Check> verify_sections_suite();
std::vector<Check> verify_fibergroups_suite();
std::vector<Check> verify_modulus_suite();
std::vector<Check> verify_all();

} // namespace ellsurf
