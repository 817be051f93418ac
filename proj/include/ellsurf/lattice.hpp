#pragma once

#include "ellsurf/rational.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellsurf {

struct UnknownName : std::domain_error {
    explicit UnknownName(const std::string& n) : std::domain_error("unknown class name: " + n) {}
};

struct NotNumericalSection : std::domain_error {
    NotNumericalSection() : std::domain_error("class is not a numerical section") {}
};

/// Divisor class in NS(S) on the basis (l, e1..e9); the pairing is the
/// unimodular odd form of signature (1,9): l^2 = 1, e_i^2 = -1, mixed 0.
struct DivisorClass {
    std::array<long long, 10> c{};

    static DivisorClass l() {
        DivisorClass d;
        d.c[0] = 1;
        return d;
    }
    static DivisorClass e(int k) { // k = 1..9
        DivisorClass d;
        d.c[k] = 1;
        return d;
    }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r;
        for (int k = 0; k < 10; ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r;
        for (int k = 0; k < 10; ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    DivisorClass operator-() const {
        DivisorClass r;
        for (int k = 0; k < 10; ++k) r.c[k] = -c[k];
        return r;
    }
    friend DivisorClass operator*(long long n, const DivisorClass& a) {
        DivisorClass r;
        for (int k = 0; k < 10; ++k) r.c[k] = n * a.c[k];
        return r;
    }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c == b.c; }
    bool is_zero() const {
        for (long long v : c)
            if (v) return false;
        return true;
    }
    std::string str() const; // e.g. "3l - e2 - e3 - 2e4"
};

long long gram(const DivisorClass& u, const DivisorClass& v);

/// Catalog of the named classes: l, e1..e9, f, s0, u0, u1, v0..v4, and the
/// roots rij (= ei - ej) and rijk (= l - ei - ej - ek).
DivisorClass named_class(const std::string& name);

/// Index (n1,n2,n3) of the Mordell-Weil element n1 s(e1) + n2 s(e2) + n3 s(e3),
/// with the derived parity data used by the divisor-class formula.
struct SectionIndex {
    long long n1, n2, n3;
    int eps1, eps2, eps3; // n_i mod 2 in {0,1}
    int eps;              // eps1+eps2+eps3
    int eps_half;         // floor(eps/2)
    long long m;          // (n1^2+n2^2+n3^2-eps)/4, always an integer

    SectionIndex(long long a, long long b, long long c);
    SectionIndex operator+(const SectionIndex& o) const {
        return {n1 + o.n1, n2 + o.n2, n3 + o.n3};
    }
    SectionIndex operator-() const { return {-n1, -n2, -n3}; }
};

/// The divisor class of the section with the given index, per the closed
/// coefficient formula on (l, e1..e9).
DivisorClass section_class(const SectionIndex& idx);

/// Check s.f = 1 and s.s = -1 (effectivity is not certified here).
bool is_numerical_section(const DivisorClass& s);

/// Addition of numerical sections: s0 + (s1-s0) + (s2-s0) - ((s1-s0).(s2-s0)) f.
DivisorClass mw_add(const DivisorClass& s1, const DivisorClass& s2);

/// The numerical section corresponding to -r under the U-perp bijection.
DivisorClass mw_negate(const DivisorClass& s);

/// Coordinates of the orthogonal projection onto span(r14, r25, r36); returns
/// (n1/2, n2/2, n3/2) for section classes.
std::array<Rat, 3> mw_project(const DivisorClass& s);

/// Height pairing of MW elements in the generic case: (n.n')/2.
Rat height_pairing(const SectionIndex& a, const SectionIndex& b);

/// Intersection numbers with the reducible-fiber components.
struct FiberMeeting {
    int u0, u1;
    std::array<int, 4> v; // v0..v3
    int v4;
};
FiberMeeting fiber_intersections(const SectionIndex& idx);

enum class ConfigCase { generic, e_zero, f_zero, v_zero };

struct ShiodaTateReport {
    ConfigCase which;
    std::string configuration; // e.g. "[I1, II, III, I0*]"
    std::string l_type;        // root type of the sublattice L
    int l_rank;
    int mw_rank;
    std::string mw_lattice;
    int oguiso_shioda_number;
};
ShiodaTateReport shioda_tate_report(ConfigCase which);

/// Exact solve of sum_k x_k gen_k = target; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_in_span(std::span<const DivisorClass> generators,
                                              const DivisorClass& target);

/// Membership in the integer span of {f, u1, v1, v2, v3, v4} (= <f> + L).
bool in_fiber_span(const DivisorClass& d);

} // namespace ellsurf
