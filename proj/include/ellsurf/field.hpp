#pragma once

#include "ellsurf/rational.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ellsurf {

struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("inverse of zero in Q(i,sqrt2)") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Element of K = Q(i, sqrt 2), stored as exact rational coordinates on the
/// basis {1, i, r2, i*r2} where r2 denotes sqrt 2.  Coordinates are kept in
/// lowest terms with positive denominator, so equality is coefficient-wise.
class K {
  public:
    K() : c_{} {}
    K(int n) : c_{Rat(n), Rat(), Rat(), Rat()} {}
    K(long long n) : c_{Rat(n), Rat(), Rat(), Rat()} {}
    K(const Int& n) : c_{Rat(n), Rat(), Rat(), Rat()} {}
    K(const Rat& r) : c_{r, Rat(), Rat(), Rat()} {}
    K(Rat c0, Rat c1, Rat c2, Rat c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static K i() { return K(0, 1, 0, 0); }
    static K r2() { return K(0, 0, 1, 0); }
    static K i_r2() { return K(0, 0, 0, 1); }

    const Rat& operator[](int k) const { return c_[k]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    /// The rational part; only meaningful together with is_rational().
    const Rat& rat() const { return c_[0]; }

    friend bool operator==(const K& a, const K& b) { return a.c_ == b.c_; }
    friend bool operator!=(const K& a, const K& b) { return a.c_ != b.c_; }

    K operator-() const { return K(-c_[0], -c_[1], -c_[2], -c_[3]); }

    friend K operator+(const K& a, const K& b) {
        return K(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
    }
    friend K operator-(const K& a, const K& b) {
        return K(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
    }
    friend K operator*(const K& a, const K& b);
    friend K operator/(const K& a, const K& b) { return a * b.inv(); }

    K& operator+=(const K& b) { return *this = *this + b; }
    K& operator-=(const K& b) { return *this = *this - b; }
    K& operator*=(const K& b) { return *this = *this * b; }
    K& operator/=(const K& b) { return *this = *this / b; }

    /// Galois conjugation i -> -i (complex conjugation); fixes sqrt 2.
    K conj_i() const { return K(c_[0], -c_[1], c_[2], -c_[3]); }
    /// Galois conjugation sqrt2 -> -sqrt2; fixes i.
    K conj_r2() const { return K(c_[0], c_[1], -c_[2], -c_[3]); }

    /// Field norm down to Q: product of the four Galois conjugates.
    Rat norm() const;

    /// Multiplicative inverse; throws ZeroInverse on zero.
    K inv() const;

    /// Exact square root in K, if one exists.
    std::optional<K> sqrt() const;

    K pow(unsigned e) const;

    /// Numeric embedding with i -> sqrt(-1), r2 -> +sqrt(2).  Diagnostics only;
    /// never used in identity checks.
    std::complex<double> to_complex() const;

    /// Text form `p/q + p/q*i + p/q*r2 + p/q*i*r2` with zero terms omitted.
    std::string str() const;
    static K parse(std::string_view text);

  private:
    std::array<Rat, 4> c_;
};

inline K operator*(int n, const K& a) { return K(n) * a; }

} // namespace ellsurf
