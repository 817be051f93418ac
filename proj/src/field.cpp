#include "ellsurf/field.hpp"

#include <cctype>

namespace ellsurf {

std::optional<Int> sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rat> sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto n = sqrt_exact(numerator(r));
    auto d = sqrt_exact(denominator(r));
    if (n && d) return Rat(*n, *d);
    return std::nullopt;
}

K operator*(const K& a, const K& b) {
    const auto& x = a.c_;
    const auto& y = b.c_;
    return K(x[0] * y[0] - x[1] * y[1] + 2 * x[2] * y[2] - 2 * x[3] * y[3],
             x[0] * y[1] + x[1] * y[0] + 2 * x[2] * y[3] + 2 * x[3] * y[2],
             x[0] * y[2] + x[2] * y[0] - x[1] * y[3] - x[3] * y[1],
             x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1]);
}

Rat K::norm() const {
    K n = *this * conj_i() * conj_r2() * conj_i().conj_r2();
    // The product of all four conjugates is Galois-fixed, hence rational.
    if (!n.is_rational()) throw std::logic_error("norm not rational");
    return n.rat();
}

K K::inv() const {
    if (is_zero()) throw ZeroInverse();
    K cof = conj_i() * conj_r2() * conj_i().conj_r2();
    Rat n = (*this * cof).rat();
    Rat ninv = Rat(1) / n;
    return K(cof[0] * ninv, cof[1] * ninv, cof[2] * ninv, cof[3] * ninv);
}

K K::pow(unsigned e) const {
    K r(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

namespace {

// Square root in the real subfield Q(sqrt2); elements as (c + d*r2).
std::optional<std::pair<Rat, Rat>> sqrt_q_r2(const Rat& c, const Rat& d) {
    if (c == 0 && d == 0) return std::make_pair(Rat(0), Rat(0));
    if (d == 0) {
        if (auto p = sqrt_exact(c)) return std::make_pair(*p, Rat(0));
        if (auto q = sqrt_exact(c / 2)) return std::make_pair(Rat(0), *q);
        return std::nullopt;
    }
    // (p + q*r2)^2 = p^2 + 2q^2 + 2pq*r2; solving gives p^2 = (c +- s)/2 with
    // s^2 = c^2 - 2d^2.
    auto s = sqrt_exact(c * c - 2 * d * d);
    if (!s) return std::nullopt;
    for (int sign : {1, -1}) {
        Rat p2 = (c + sign * *s) / 2;
        if (auto p = sqrt_exact(p2)) {
            if (*p == 0) continue;
            Rat q = d / (2 * *p);
            if (*p * *p + 2 * q * q == c && 2 * *p * q == d) return std::make_pair(*p, q);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<K> K::sqrt() const {
    // Split K = L(i), L = Q(sqrt2): this = A + B*i with A,B in L.
    const Rat &a0 = c_[0], &a1 = c_[2]; // A = a0 + a1*r2
    const Rat &b0 = c_[1], &b1 = c_[3]; // B = b0 + b1*r2
    auto check = [&](const K& x) -> std::optional<K> {
        if (x * x == *this) return x;
        return std::nullopt;
    };
    if (b0 == 0 && b1 == 0) {
        if (auto u = sqrt_q_r2(a0, a1)) return K(u->first, 0, u->second, 0);
        if (auto v = sqrt_q_r2(-a0, -a1)) return K(0, v->first, 0, v->second);
        return std::nullopt;
    }
    // N_{K/L}(this) = A^2 + B^2; then u^2 = (A +- sqrt(N))/2, v = B/(2u).
    Rat nc = a0 * a0 + 2 * a1 * a1 + b0 * b0 + 2 * b1 * b1;
    Rat nd = 2 * a0 * a1 + 2 * b0 * b1;
    auto s = sqrt_q_r2(nc, nd);
    if (!s) return std::nullopt;
    for (int sign : {1, -1}) {
        Rat u2c = (a0 + sign * s->first) / 2;
        Rat u2d = (a1 + sign * s->second) / 2;
        auto u = sqrt_q_r2(u2c, u2d);
        if (!u || (u->first == 0 && u->second == 0)) continue;
        K uu(u->first, 0, u->second, 0);
        K vv = K(b0, 0, b1, 0) / (2 * uu);
        if (auto r = check(uu + K::i() * vv)) return r;
    }
    return std::nullopt;
}

std::complex<double> K::to_complex() const {
    const double s2 = 1.4142135623730951;
    return {c_[0].convert_to<double>() + s2 * c_[2].convert_to<double>(),
            c_[1].convert_to<double>() + s2 * c_[3].convert_to<double>()};
}

namespace {

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace

std::string K::str() const {
    static const char* suffix[4] = {"", "*i", "*r2", "*i*r2"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (c_[k] == 0) continue;
        Rat v = c_[k];
        if (out.empty()) {
            if (v < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        out += rat_str(v);
        out += suffix[k];
    }
    return out.empty() ? "0" : out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t p = 0;
    void skip_ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char c) {
        skip_ws();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(p, w.size()) == w) {
            p += w.size();
            return true;
        }
        return false;
    }
    bool at_digit() {
        skip_ws();
        return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]));
    }
    Int integer() {
        skip_ws();
        size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) throw ParseError("expected integer in field element");
        return Int(std::string(s.substr(start, p - start)));
    }
};

} // namespace

K K::parse(std::string_view text) {
    Cursor c{text};
    K result;
    bool first = true;
    for (;;) {
        c.skip_ws();
        if (c.p >= c.s.size()) {
            if (first) throw ParseError("empty field element");
            break;
        }
        int sign = 1;
        if (c.eat('-'))
            sign = -1;
        else if (!c.eat('+') && !first)
            throw ParseError("expected '+' or '-' in field element");
        Rat coeff(1);
        bool have_coeff = false;
        if (c.at_digit()) {
            Int num = c.integer();
            Int den(1);
            if (c.eat('/')) den = c.integer();
            if (den == 0) throw ParseError("zero denominator");
            coeff = Rat(num, den);
            have_coeff = true;
        }
        int slot = 0;
        bool have_rad = false;
        if (!have_coeff || c.eat('*')) {
            if (c.eat_word("i")) {
                slot = 1;
                have_rad = true;
                if (c.eat('*')) {
                    if (!c.eat_word("r2")) throw ParseError("expected r2 after i*");
                    slot = 3;
                }
            } else if (c.eat_word("r2")) {
                slot = 2;
                have_rad = true;
            } else if (!have_coeff) {
                throw ParseError("expected number, i, or r2");
            } else {
                throw ParseError("expected i or r2 after '*'");
            }
        }
        (void)have_rad;
        Rat term = sign * coeff;
        result = result + K(slot == 0 ? term : Rat(0), slot == 1 ? term : Rat(0),
                            slot == 2 ? term : Rat(0), slot == 3 ? term : Rat(0));
        first = false;
    }
    return result;
}

} // namespace ellsurf
