#pragma once

#include "ellsurf/field.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace ellsurf {

struct MissingVariable : std::runtime_error {
    explicit MissingVariable(const std::string& v)
        : std::runtime_error("no value assigned to variable " + v) {}
};

struct ZeroForm : std::domain_error {
    ZeroForm() : std::domain_error("vanishing order of the zero form") {}
};

struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("rational function with zero denominator") {}
};

/// The fixed variable universe.  alpha,beta parametrize the octahedral cover;
/// S,T the base curve; X,Y,Z the plane; x,t are scratch/series variables;
/// v1,v2,v3 are the formal degree-2 forms subject to v1^2+v2^2+v3^2 = 0.
enum class Var : int { alpha = 0, beta, S, T, X, Y, Z, x, t, v1, v2, v3 };
inline constexpr int kNumVars = 12;

const char* var_name(Var v);

/// Exponent vector of a monomial, graded-lex ordered.
struct Mono {
    std::array<std::uint16_t, kNumVars> e{};

    int degree() const {
        int d = 0;
        for (auto k : e) d += k;
        return d;
    }
    std::uint16_t operator[](Var v) const { return e[static_cast<int>(v)]; }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator<(const Mono& a, const Mono& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int k = 0; k < kNumVars; ++k) r.e[k] = e[k] + o.e[k];
        return r;
    }
};

/// Sparse multivariate polynomial over K.  No zero coefficients are stored;
/// terms are kept in graded-lex order, so equality is coefficient-wise.
class Poly {
  public:
    Poly() = default;
    Poly(const K& c) { insert(Mono{}, c); }
    Poly(int n) : Poly(K(n)) {}
    Poly(const Rat& r) : Poly(K(r)) {}
    static Poly var(Var v, unsigned exp = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, K>& terms() const { return terms_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.terms_ != b.terms_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    Poly pow(unsigned e) const;

    int degree() const; // total; -1 for zero
    int degree_in(Var v) const;
    bool uses(Var v) const { return degree_in(v) > 0; }
    std::set<Var> variables() const;

    /// Homogeneity in a variable group: every monomial has the same total
    /// degree d over `vars`; returns d (0 for the zero polynomial).
    bool is_homogeneous(const std::vector<Var>& vars, int* degree_out = nullptr) const;

    /// Coefficient of v^k, a polynomial in the remaining variables.
    Poly coeff_of(Var v, int k) const;
    K coeff(const Mono& m) const;

    /// Exact evaluation; the assignment must cover every variable in use.
    K eval(const std::map<Var, K>& assignment) const;

    /// Composition: variables not present in `subs` substitute as themselves.
    Poly substitute(const std::map<Var, Poly>& subs) const;

    /// Replace v^2 by `repl` until the exponent of v is 0 or 1.
    Poly replace_square(Var v, const Poly& repl) const;

    Poly derivative(Var v) const;

    /// Exact polynomial division; nullopt when the divisor does not divide.
    std::optional<Poly> try_divide(const Poly& divisor) const;

    std::string str() const;
    static Poly parse(std::string_view text);

  private:
    void insert(const Mono& m, const K& c);
    std::map<Mono, K> terms_;
};

inline Poly operator*(const K& c, const Poly& p) { return Poly(c) * p; }
inline Poly operator*(int c, const Poly& p) { return Poly(c) * p; }
inline Poly operator+(int c, const Poly& p) { return Poly(c) + p; }
inline Poly operator-(int c, const Poly& p) { return Poly(c) - p; }

/// Multiplicity of the linear factor (t0*S - s0*T) in a binary form in (S,T).
int vanishing_order(const Poly& form, const K& s0, const K& t0);

/// Quotient of polynomials; equality is tested by cross-multiplication, no
/// canonical gcd form is maintained.
class RationalFn {
  public:
    RationalFn() : num_(0), den_(1) {}
    RationalFn(Poly num) : num_(std::move(num)), den_(1) {}
    RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroDenominator();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    RationalFn operator-() const { return RationalFn(-num_, den_); }
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFn substitute(const std::map<Var, Poly>& subs) const {
        return RationalFn(num_.substitute(subs), den_.substitute(subs));
    }
    /// Exact evaluation; throws ZeroDenominator if the denominator vanishes.
    K eval(const std::map<Var, K>& a) const {
        K d = den_.eval(a);
        if (d.is_zero()) throw ZeroDenominator();
        return num_.eval(a) / d;
    }

  private:
    Poly num_, den_;
};

} // namespace ellsurf
