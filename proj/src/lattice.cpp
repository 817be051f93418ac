#include "ellsurf/lattice.hpp"

#include <cctype>

namespace ellsurf {

long long gram(const DivisorClass& u, const DivisorClass& v) {
    long long s = u.c[0] * v.c[0];
    for (int k = 1; k < 10; ++k) s -= u.c[k] * v.c[k];
    return s;
}

std::string DivisorClass::str() const {
    std::string out;
    auto append = [&](long long coeff, const std::string& sym) {
        if (coeff == 0) return;
        long long a = coeff;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) out += std::to_string(a);
        out += sym;
    };
    append(c[0], "l");
    for (int k = 1; k < 10; ++k) append(c[k], "e" + std::to_string(k));
    return out.empty() ? "0" : out;
}

namespace {

DivisorClass f_class() {
    DivisorClass d = 3 * DivisorClass::l();
    for (int k = 1; k <= 9; ++k) d = d - DivisorClass::e(k);
    return d;
}

} // namespace

DivisorClass named_class(const std::string& name) {
    if (name == "l") return DivisorClass::l();
    if (name == "f") return f_class();
    if (name == "s0") return DivisorClass::e(9);
    if (name == "u0")
        return DivisorClass::l() - DivisorClass::e(7) - DivisorClass::e(8) - DivisorClass::e(9);
    if (name == "u1") {
        DivisorClass d = 2 * DivisorClass::l();
        for (int k = 1; k <= 6; ++k) d = d - DivisorClass::e(k);
        return d;
    }
    if (name == "v0") return DivisorClass::e(8) - DivisorClass::e(9);
    if (name == "v4") return DivisorClass::e(7) - DivisorClass::e(8);
    if (name == "v1")
        return DivisorClass::l() - DivisorClass::e(1) - DivisorClass::e(4) - DivisorClass::e(7);
    if (name == "v2")
        return DivisorClass::l() - DivisorClass::e(2) - DivisorClass::e(5) - DivisorClass::e(7);
    if (name == "v3")
        return DivisorClass::l() - DivisorClass::e(3) - DivisorClass::e(6) - DivisorClass::e(7);
    if (name.size() == 2 && name[0] == 'e' && std::isdigit(name[1]) && name[1] != '0')
        return DivisorClass::e(name[1] - '0');
    if (name.size() >= 3 && name[0] == 'r') {
        bool digits = true;
        for (size_t k = 1; k < name.size(); ++k)
            digits = digits && std::isdigit(name[k]) && name[k] != '0';
        if (digits && name.size() == 3) {
            int i = name[1] - '0', j = name[2] - '0';
            if (i < j && j <= 9) return DivisorClass::e(i) - DivisorClass::e(j);
        }
        if (digits && name.size() == 4) {
            int i = name[1] - '0', j = name[2] - '0', k = name[3] - '0';
            if (i < j && j < k && k <= 9)
                return DivisorClass::l() - DivisorClass::e(i) - DivisorClass::e(j) -
                       DivisorClass::e(k);
        }
    }
    throw UnknownName(name);
}

SectionIndex::SectionIndex(long long a, long long b, long long c) : n1(a), n2(b), n3(c) {
    auto mod2 = [](long long n) { return static_cast<int>(((n % 2) + 2) % 2); };
    eps1 = mod2(n1);
    eps2 = mod2(n2);
    eps3 = mod2(n3);
    eps = eps1 + eps2 + eps3;
    eps_half = eps / 2;
    long long q = n1 * n1 + n2 * n2 + n3 * n3 - eps;
    if (q % 4 != 0) throw std::logic_error("m is not integral");
    m = q / 4;
}

DivisorClass section_class(const SectionIndex& x) {
    DivisorClass s;
    const long long h = x.eps_half;
    s.c[0] = 3 * x.m + h * (x.eps - 1);
    s.c[1] = -(x.m - (x.n1 + x.eps1) / 2 + h * x.eps1);
    s.c[2] = -(x.m - (x.n2 + x.eps2) / 2 + h * x.eps2);
    s.c[3] = -(x.m - (x.n3 + x.eps3) / 2 + h * x.eps3);
    s.c[4] = -(x.m + (x.n1 - x.eps1) / 2 + h * x.eps1);
    s.c[5] = -(x.m + (x.n2 - x.eps2) / 2 + h * x.eps2);
    s.c[6] = -(x.m + (x.n3 - x.eps3) / 2 + h * x.eps3);
    s.c[7] = -(x.m + h * (x.eps - 2));
    s.c[8] = -(x.m + h * (x.eps - 2));
    s.c[9] = -(x.m + (1 - h) * (x.eps - 1));
    return s;
}

bool is_numerical_section(const DivisorClass& s) {
    return gram(s, f_class()) == 1 && gram(s, s) == -1;
}

DivisorClass mw_add(const DivisorClass& s1, const DivisorClass& s2) {
    if (!is_numerical_section(s1) || !is_numerical_section(s2)) throw NotNumericalSection();
    DivisorClass s0 = DivisorClass::e(9);
    DivisorClass d1 = s1 - s0, d2 = s2 - s0;
    return s0 + d1 + d2 - gram(d1, d2) * f_class();
}

DivisorClass mw_negate(const DivisorClass& s) {
    if (!is_numerical_section(s)) throw NotNumericalSection();
    DivisorClass s0 = DivisorClass::e(9);
    DivisorClass f = f_class();
    DivisorClass d = s - s0;
    // r = (s - s0) + ((s-s0)^2/2) f lies in U-perp; negate and map back.
    long long half = gram(d, d) / 2;
    DivisorClass r = d + half * f;
    return s0 - (gram(r, r) / 2) * f - r;
}

std::array<Rat, 3> mw_project(const DivisorClass& s) {
    if (!is_numerical_section(s)) throw NotNumericalSection();
    std::array<Rat, 3> out;
    const char* roots[3] = {"r14", "r25", "r36"};
    for (int k = 0; k < 3; ++k) {
        DivisorClass r = named_class(roots[k]);
        // projection coefficient (s.r)/(r.r) onto mutually orthogonal (-2)-roots
        out[k] = Rat(-gram(s, r), -gram(r, r));
    }
    return out;
}

Rat height_pairing(const SectionIndex& a, const SectionIndex& b) {
    return Rat(a.n1 * b.n1 + a.n2 * b.n2 + a.n3 * b.n3, 2);
}

FiberMeeting fiber_intersections(const SectionIndex& x) {
    FiberMeeting fm;
    const int h = x.eps_half;
    fm.u0 = 1 - x.eps + 2 * h;
    fm.u1 = x.eps - 2 * h;
    fm.v[0] = 1 - x.eps + h * (2 * x.eps - 3);
    const int eps_i[3] = {x.eps1, x.eps2, x.eps3};
    for (int k = 0; k < 3; ++k) fm.v[k + 1] = eps_i[k] + h * (1 - 2 * eps_i[k]);
    fm.v4 = 0;
    return fm;
}

ShiodaTateReport shioda_tate_report(ConfigCase which) {
    ShiodaTateReport r;
    r.which = which;
    switch (which) {
        case ConfigCase::generic:
            r = {which, "[I1, II, III, I0*]", "A1+D4", 5, 3, "A1*+A1*+A1*", 18};
            break;
        case ConfigCase::e_zero:
            r = {which, "[I1*, II, III]", "A1+D5", 6, 2, "A1*+<1/4>", 30};
            break;
        case ConfigCase::f_zero:
            r = {which, "[I1, IV*, III]", "A1+E6", 7, 1, "<1/6>", 49};
            break;
        case ConfigCase::v_zero:
            r = {which, "[I1, II, III*]", "E7", 7, 1, "A1*", 43};
            break;
    }
    if (2 + r.l_rank + r.mw_rank != 10)
        throw std::logic_error("Shioda-Tate rank accounting violated");
    return r;
}

std::optional<std::vector<Rat>> solve_in_span(std::span<const DivisorClass> generators,
                                              const DivisorClass& target) {
    const int rows = 10, cols = static_cast<int>(generators.size());
    // augmented matrix [A | target]
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int k = 0; k < cols; ++k) a[r][k] = Rat(generators[k].c[r]);
        a[r][cols] = Rat(target.c[r]);
    }
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        Rat lead = a[row][col];
        for (int k = col; k <= cols; ++k) a[row][k] /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat factor = a[r][col];
            for (int k = col; k <= cols; ++k) a[r][k] -= factor * a[row][k];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (a[r][cols] != 0) return std::nullopt; // inconsistent
    std::vector<Rat> x(cols, Rat(0));
    for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = a[r][cols];
    return x;
}

bool in_fiber_span(const DivisorClass& d) {
    static const std::vector<DivisorClass> gens = [] {
        std::vector<DivisorClass> g;
        for (const char* n : {"f", "u1", "v1", "v2", "v3", "v4"}) g.push_back(named_class(n));
        return g;
    }();
    auto sol = solve_in_span(gens, d);
    if (!sol) return false;
    for (const Rat& coeff : *sol)
        if (denominator(coeff) != 1) return false;
    return true;
}

} // namespace ellsurf
