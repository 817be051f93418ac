#include "ellsurf/poly.hpp"

#include <cctype>

namespace ellsurf {

const char* var_name(Var v) {
    static const char* names[kNumVars] = {"alpha", "beta", "S",  "T", "X", "Y",
                                          "Z",     "x",    "t",  "v1", "v2", "v3"};
    return names[static_cast<int>(v)];
}

void Poly::insert(const Mono& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::var(Var v, unsigned exp) {
    Poly p;
    Mono m;
    m.e[static_cast<int>(v)] = static_cast<std::uint16_t>(exp);
    p.insert(m, K(1));
    return p;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.insert(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.insert(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.insert(ma * mb, ca * cb);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

int Poly::degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m[v]);
    return d;
}

std::set<Var> Poly::variables() const {
    std::set<Var> vs;
    for (const auto& [m, c] : terms_)
        for (int k = 0; k < kNumVars; ++k)
            if (m.e[k] > 0) vs.insert(static_cast<Var>(k));
    return vs;
}

bool Poly::is_homogeneous(const std::vector<Var>& vars, int* degree_out) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (Var v : vars) s += m[v];
        if (d < 0)
            d = s;
        else if (s != d)
            return false;
    }
    if (degree_out) *degree_out = d < 0 ? 0 : d;
    return true;
}

Poly Poly::coeff_of(Var v, int k) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m[v] != k) continue;
        Mono m2 = m;
        m2.e[static_cast<int>(v)] = 0;
        r.insert(m2, c);
    }
    return r;
}

K Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
}

K Poly::eval(const std::map<Var, K>& assignment) const {
    // Powers are cached per variable across terms.
    std::array<std::vector<K>, kNumVars> powers;
    auto power = [&](int v, int e) -> const K& {
        auto& tab = powers[v];
        if (tab.empty()) {
            auto it = assignment.find(static_cast<Var>(v));
            if (it == assignment.end()) throw MissingVariable(var_name(static_cast<Var>(v)));
            tab.push_back(K(1));
            tab.push_back(it->second);
        }
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * tab[1]);
        return tab[e];
    };
    K total(0);
    for (const auto& [m, c] : terms_) {
        K term = c;
        for (int v = 0; v < kNumVars; ++v)
            if (m.e[v] > 0) term *= power(v, m.e[v]);
        total += term;
    }
    return total;
}

Poly Poly::substitute(const std::map<Var, Poly>& subs) const {
    std::array<std::vector<Poly>, kNumVars> powers;
    auto power = [&](int v, int e) -> const Poly& {
        auto& tab = powers[v];
        if (tab.empty()) {
            tab.push_back(Poly(1));
            auto it = subs.find(static_cast<Var>(v));
            tab.push_back(it == subs.end() ? Poly::var(static_cast<Var>(v)) : it->second);
        }
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * tab[1]);
        return tab[e];
    };
    Poly total;
    for (const auto& [m, c] : terms_) {
        Poly term(c);
        for (int v = 0; v < kNumVars; ++v)
            if (m.e[v] > 0) term *= power(v, m.e[v]);
        total += term;
    }
    return total;
}

Poly Poly::replace_square(Var v, const Poly& repl) const {
    const int vi = static_cast<int>(v);
    Poly total;
    for (const auto& [m, c] : terms_) {
        int q = m.e[vi] / 2, r = m.e[vi] % 2;
        Mono m2 = m;
        m2.e[vi] = static_cast<std::uint16_t>(r);
        Poly term;
        term.insert(m2, c);
        if (q > 0) term *= repl.pow(q);
        total += term;
    }
    return total;
}

Poly Poly::derivative(Var v) const {
    const int vi = static_cast<int>(v);
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[vi] == 0) continue;
        Mono m2 = m;
        m2.e[vi] -= 1;
        r.insert(m2, K(Rat(m.e[vi])) * c);
    }
    return r;
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    const auto& [dm, dc] = *divisor.terms_.rbegin();
    Poly rem = *this, quot;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        Mono qm;
        for (int k = 0; k < kNumVars; ++k) {
            if (rm.e[k] < dm.e[k]) return std::nullopt;
            qm.e[k] = rm.e[k] - dm.e[k];
        }
        K qc = rc / dc;
        Poly qterm;
        qterm.insert(qm, qc);
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

int vanishing_order(const Poly& form, const K& s0, const K& t0) {
    if (form.is_zero()) throw ZeroForm();
    if (s0.is_zero() && t0.is_zero())
        throw std::invalid_argument("(0,0) is not a point of P^1");
    for (Var v : {Var::alpha, Var::beta, Var::X, Var::Y, Var::Z, Var::x, Var::t, Var::v1,
                  Var::v2, Var::v3})
        if (form.uses(v)) throw std::invalid_argument("not a binary form in (S,T)");
    Poly linear = t0 * Poly::var(Var::S) - s0 * Poly::var(Var::T);
    int order = 0;
    Poly f = form;
    for (;;) {
        auto q = f.try_divide(linear);
        if (!q) return order;
        f = *q;
        ++order;
    }
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string mono_str(const Mono& m) {
    std::string out;
    for (int k = 0; k < kNumVars; ++k) {
        if (m.e[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(static_cast<Var>(k));
        if (m.e[k] > 1) out += "^" + std::to_string(m.e[k]);
    }
    return out;
}

// A coefficient prints bare when it is a plain rational; otherwise in parens.
bool coeff_is_simple(const K& c, Rat* value) {
    if (!c.is_rational()) return false;
    *value = c.rat();
    return true;
}

} // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // descending graded-lex reads naturally (highest degree first)
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string ms = mono_str(m);
        Rat rv;
        bool simple = coeff_is_simple(c, &rv);
        bool negative = simple && rv < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (simple) {
            Rat a = negative ? -rv : rv;
            if (ms.empty())
                out += rat_str(a);
            else if (a == 1)
                out += ms;
            else
                out += rat_str(a) + "*" + ms;
        } else {
            out += "(" + c.str() + ")";
            if (!ms.empty()) out += "*" + ms;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := primary ('^' uint)?, primary := rational | i | r2 | var | (expr)

namespace {

struct PCursor {
    std::string_view s;
    size_t p = 0;

    void skip_ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool peek(char c) {
        skip_ws();
        return p < s.size() && s[p] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++p;
            return true;
        }
        return false;
    }
    bool eat_name(std::string_view w) {
        skip_ws();
        if (s.substr(p, w.size()) != w) return false;
        size_t end = p + w.size();
        if (end < s.size() &&
            (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
            return false;
        p = end;
        return true;
    }
    Int integer() {
        skip_ws();
        size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) throw ParseError("expected integer at offset " + std::to_string(p));
        return Int(std::string(s.substr(start, p - start)));
    }
    bool at_digit() {
        skip_ws();
        return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]));
    }
};

Poly parse_expr(PCursor& c);

Poly parse_primary(PCursor& c) {
    c.skip_ws();
    if (c.eat('(')) {
        Poly inner = parse_expr(c);
        if (!c.eat(')')) throw ParseError("missing ')'");
        return inner;
    }
    if (c.at_digit()) {
        Int num = c.integer();
        if (c.eat('/')) {
            Int den = c.integer();
            if (den == 0) throw ParseError("zero denominator");
            return Poly(K(Rat(num, den)));
        }
        return Poly(K(Rat(num)));
    }
    // keywords before single-letter variables ('r2' is not a variable)
    if (c.eat_name("alpha")) return Poly::var(Var::alpha);
    if (c.eat_name("beta")) return Poly::var(Var::beta);
    if (c.eat_name("r2")) return Poly(K::r2());
    if (c.eat_name("v1")) return Poly::var(Var::v1);
    if (c.eat_name("v2")) return Poly::var(Var::v2);
    if (c.eat_name("v3")) return Poly::var(Var::v3);
    if (c.eat_name("i")) return Poly(K::i());
    if (c.eat_name("S")) return Poly::var(Var::S);
    if (c.eat_name("T")) return Poly::var(Var::T);
    if (c.eat_name("X")) return Poly::var(Var::X);
    if (c.eat_name("Y")) return Poly::var(Var::Y);
    if (c.eat_name("Z")) return Poly::var(Var::Z);
    if (c.eat_name("x")) return Poly::var(Var::x);
    if (c.eat_name("t")) return Poly::var(Var::t);
    throw ParseError("unexpected token at offset " + std::to_string(c.p));
}

Poly parse_factor(PCursor& c) {
    Poly base = parse_primary(c);
    if (c.eat('^')) {
        Int e = c.integer();
        if (e < 0 || e > 4096) throw ParseError("exponent out of range");
        return base.pow(e.convert_to<unsigned>());
    }
    return base;
}

Poly parse_term(PCursor& c) {
    int sign = 1;
    for (;;) {
        if (c.eat('-'))
            sign = -sign;
        else if (!c.eat('+'))
            break;
    }
    Poly p = parse_factor(c);
    while (c.eat('*')) p *= parse_factor(c);
    return sign < 0 ? -p : p;
}

Poly parse_expr(PCursor& c) {
    Poly total = parse_term(c);
    for (;;) {
        c.skip_ws();
        if (c.p >= c.s.size()) break;
        if (c.peek('+') || c.peek('-'))
            total += parse_term(c);
        else
            break;
    }
    return total;
}

} // namespace

Poly Poly::parse(std::string_view text) {
    PCursor c{text};
    Poly p = parse_expr(c);
    c.skip_ws();
    if (c.p != c.s.size())
        throw ParseError("trailing input at offset " + std::to_string(c.p));
    return p;
}

} // namespace ellsurf
