#include "ellsurf/octahedral.hpp"

namespace ellsurf {

namespace {

// Row encoding: scale tag (1, half, or 1/sqrt2) and the four entries as
// Gaussian integers (re,im).
struct RepRow {
    char scale; // '1', 'h', 'w'
    int entries[8];
};

constexpr RepRow kRows[24] = {
    {'1', {1, 0, 0, 0, 0, 0, 1, 0}},    {'1', {0, 1, 0, 0, 0, 0, 0, -1}},
    {'1', {0, 0, 0, 1, 0, 1, 0, 0}},    {'1', {0, 0, -1, 0, 1, 0, 0, 0}},
    {'h', {1, 1, -1, 1, 1, 1, 1, -1}},  {'h', {1, -1, 1, -1, -1, -1, 1, 1}},
    {'h', {1, 1, 1, -1, -1, -1, 1, -1}}, {'h', {1, -1, -1, 1, 1, 1, 1, 1}},
    {'h', {1, -1, 1, 1, -1, 1, 1, 1}},  {'h', {1, 1, -1, -1, 1, -1, 1, -1}},
    {'h', {1, -1, -1, -1, 1, -1, 1, 1}}, {'h', {1, 1, 1, 1, -1, 1, 1, -1}},
    {'w', {1, 1, 0, 0, 0, 0, 1, -1}},   {'w', {1, -1, 0, 0, 0, 0, 1, 1}},
    {'w', {1, 0, 0, 1, 0, 1, 1, 0}},    {'w', {1, 0, 0, -1, 0, -1, 1, 0}},
    {'w', {1, 0, -1, 0, 1, 0, 1, 0}},   {'w', {1, 0, 1, 0, -1, 0, 1, 0}},
    {'w', {0, 0, -1, 1, 1, 1, 0, 0}},   {'w', {0, 0, 1, 1, -1, 1, 0, 0}},
    {'w', {0, 1, -1, 0, 1, 0, 0, -1}},  {'w', {0, 1, 1, 0, -1, 0, 0, -1}},
    {'w', {0, 1, 0, 1, 0, 1, 0, -1}},   {'w', {0, 1, 0, -1, 0, -1, 0, -1}},
};

Mat2 build_row(const RepRow& row) {
    K scale(1);
    if (row.scale == 'h') scale = K(Rat(1, 2));
    if (row.scale == 'w') scale = K(Rat(0), Rat(0), Rat(1, 2), Rat(0)); // 1/sqrt2
    auto entry = [&](int k) {
        return scale * K(Rat(row.entries[2 * k]), Rat(row.entries[2 * k + 1]), Rat(0), Rat(0));
    };
    Mat2 m{entry(0), entry(1), entry(2), entry(3)};
    if (m.det() != K(1)) throw std::logic_error("transcribed group element has det != 1");
    return m;
}

} // namespace

const std::vector<Mat2>& octahedral_coset_reps() {
    static const std::vector<Mat2> reps = [] {
        std::vector<Mat2> r;
        r.reserve(24);
        for (const auto& row : kRows) r.push_back(build_row(row));
        return r;
    }();
    return reps;
}

const std::vector<GroupElement>& enumerate_group(Subgroup which) {
    static const std::vector<GroupElement> all = [] {
        std::vector<GroupElement> g;
        const auto& reps = octahedral_coset_reps();
        for (int k = 0; k < 24; ++k) {
            bool quat = k < 4;
            bool tetra = k < 12;
            g.push_back({reps[k], quat, tetra});
            g.push_back({-reps[k], quat, tetra});
        }
        return g;
    }();
    static const std::vector<GroupElement> tetra = [] {
        std::vector<GroupElement> g;
        for (const auto& e : all)
            if (e.tetrahedral) g.push_back(e);
        return g;
    }();
    static const std::vector<GroupElement> quat = [] {
        std::vector<GroupElement> g;
        for (const auto& e : all)
            if (e.quaternion) g.push_back(e);
        return g;
    }();
    switch (which) {
        case Subgroup::quaternion: return quat;
        case Subgroup::tetrahedral: return tetra;
        default: return all;
    }
}

Poly act(const Mat2& sigma, const Poly& p) {
    Mat2 inv = sigma.inverse();
    std::map<Var, Poly> subs{
        {Var::alpha, inv.a * Poly::var(Var::alpha) + inv.b * Poly::var(Var::beta)},
        {Var::beta, inv.c * Poly::var(Var::alpha) + inv.d * Poly::var(Var::beta)}};
    return p.substitute(subs);
}

SignedPerm action_signature(const Mat2& sigma) {
    const Poly* vk[3] = {&invariants::V1(), &invariants::V2(), &invariants::V3()};
    SignedPerm sp;
    for (int k = 0; k < 3; ++k) {
        Poly image = act(sigma, *vk[k]);
        bool found = false;
        for (int j = 0; j < 3 && !found; ++j) {
            if (image == *vk[j]) {
                sp.image[k] = j;
                sp.sign[k] = 1;
                found = true;
            } else if (image == -*vk[j]) {
                sp.image[k] = j;
                sp.sign[k] = -1;
                found = true;
            }
        }
        if (!found) throw NotSignedPermutation();
    }
    return sp;
}

std::string SignedPerm::str() const {
    std::string out;
    for (int k = 0; k < 3; ++k) {
        if (k) out += ", ";
        out += "V" + std::to_string(k + 1) + " -> ";
        out += sign[k] < 0 ? "-" : "+";
        out += "V" + std::to_string(image[k] + 1);
    }
    return out;
}

std::vector<Rat> molien_series(Subgroup which, int N) {
    const auto& group = enumerate_group(which);
    std::vector<K> total(N + 1, K(0));
    for (const auto& g : group) {
        // det(I - tA) = 1 - tr(A) t + t^2, so 1/det satisfies
        // c_n = tr(A) c_{n-1} - c_{n-2}.
        K tr = g.mat.trace();
        K prev2(0), prev1(1);
        total[0] += prev1;
        for (int n = 1; n <= N; ++n) {
            K cur = tr * prev1 - prev2;
            total[n] += cur;
            prev2 = prev1;
            prev1 = cur;
        }
    }
    K order(static_cast<int>(group.size()));
    std::vector<Rat> out(N + 1);
    for (int n = 0; n <= N; ++n) {
        K c = total[n] / order;
        if (!c.is_rational()) throw NonRationalCoefficient();
        Rat r = c.rat();
        if (r < 0 || denominator(r) != 1) throw NonRationalCoefficient();
        out[n] = r;
    }
    return out;
}

namespace {

// (1 + t^a) / ((1 - t^b)(1 - t^c)) truncated at degree N.
std::vector<Rat> expand_closed_form(int a, int b, int c, int N) {
    std::vector<Rat> den(N + 1, Rat(0));
    for (int m = 0; m * b <= N; ++m)
        for (int n = 0; m * b + n * c <= N; ++n) den[m * b + n * c] += 1;
    std::vector<Rat> out = den;
    for (int n = a; n <= N; ++n) out[n] += den[n - a];
    return out;
}

} // namespace

std::vector<Rat> hilbert_closed_form(Subgroup which, int N) {
    switch (which) {
        case Subgroup::quaternion: return expand_closed_form(6, 4, 4, N);
        case Subgroup::tetrahedral: return expand_closed_form(12, 6, 8, N);
        default: return expand_closed_form(18, 8, 12, N);
    }
}

namespace invariants {

namespace {
Poly build(const char* text) { return Poly::parse(text); }
} // namespace

const Poly& V() {
    static const Poly p = build("4*alpha*beta*(alpha^4 - beta^4)");
    return p;
}
const Poly& E() {
    static const Poly p = build("8*(alpha^4 + beta^4)*(alpha^8 - 34*alpha^4*beta^4 + beta^8)");
    return p;
}
const Poly& F() {
    static const Poly p = build("4*(alpha^8 + 14*alpha^4*beta^4 + beta^8)");
    return p;
}
const Poly& V1() {
    static const Poly p = build("-2*i*alpha*beta");
    return p;
}
const Poly& V2() {
    static const Poly p = build("i*(alpha^2 - beta^2)");
    return p;
}
const Poly& V3() {
    static const Poly p = build("alpha^2 + beta^2");
    return p;
}
const Poly& E1() {
    static const Poly p = build("-2*(alpha^4 + beta^4)");
    return p;
}
const Poly& E2() {
    static const Poly p = build("alpha^4 + 6*alpha^2*beta^2 + beta^4");
    return p;
}
const Poly& E3() {
    static const Poly p = build("alpha^4 - 6*alpha^2*beta^2 + beta^4");
    return p;
}
const Poly& Ek(int k) {
    switch (k) {
        case 1: return E1();
        case 2: return E2();
        default: return E3();
    }
}

namespace {
// E_k^{+-} = sqrt2*i*E_k +- 3*V_i*V_j for {i,j,k} = {1,2,3}.
Poly ek_signed(int k, int sgn) {
    const Poly* pair[4] = {nullptr, &V2(), &V1(), &V1()};
    const Poly* pair2[4] = {nullptr, &V3(), &V3(), &V2()};
    return Poly(K::i_r2()) * Ek(k) + K(3 * sgn) * (*pair[k] * *pair2[k]);
}
} // namespace

const Poly& E_plus(int k) {
    static const Poly p1 = ek_signed(1, 1), p2 = ek_signed(2, 1), p3 = ek_signed(3, 1);
    return k == 1 ? p1 : k == 2 ? p2 : p3;
}
const Poly& E_minus(int k) {
    static const Poly p1 = ek_signed(1, -1), p2 = ek_signed(2, -1), p3 = ek_signed(3, -1);
    return k == 1 ? p1 : k == 2 ? p2 : p3;
}

} // namespace invariants

namespace vforms {

namespace {
Poly vsq(Var v) { return Poly::var(v) * Poly::var(v); }
} // namespace

Poly Vpair(int i, int j) {
    auto vv = [](int k) { return Poly::var(k == 1 ? Var::v1 : k == 2 ? Var::v2 : Var::v3); };
    return vv(i) * vv(j);
}

const Poly& V() {
    static const Poly p = 2 * Poly::var(Var::v1) * Poly::var(Var::v2) * Poly::var(Var::v3);
    return p;
}
const Poly& E() {
    static const Poly p = 4 * (vsq(Var::v1) - vsq(Var::v2)) * (vsq(Var::v1) - vsq(Var::v3)) *
                          (vsq(Var::v2) - vsq(Var::v3));
    return p;
}
const Poly& F() {
    static const Poly p =
        -4 * (vsq(Var::v1) * vsq(Var::v2) + vsq(Var::v1) * vsq(Var::v3) +
              vsq(Var::v2) * vsq(Var::v3));
    return p;
}
const Poly& Ek(int k) {
    static const Poly e1 = vsq(Var::v2) - vsq(Var::v3);
    static const Poly e2 = vsq(Var::v3) - vsq(Var::v1);
    static const Poly e3 = vsq(Var::v1) - vsq(Var::v2);
    return k == 1 ? e1 : k == 2 ? e2 : e3;
}

namespace {
Poly ek_signed(int k, int sgn) {
    int i = k == 1 ? 2 : 1;
    int j = k == 3 ? 2 : 3;
    return Poly(K::i_r2()) * Ek(k) + K(3 * sgn) * Vpair(i, j);
}
} // namespace

const Poly& E_plus(int k) {
    static const Poly p1 = ek_signed(1, 1), p2 = ek_signed(2, 1), p3 = ek_signed(3, 1);
    return k == 1 ? p1 : k == 2 ? p2 : p3;
}
const Poly& E_minus(int k) {
    static const Poly p1 = ek_signed(1, -1), p2 = ek_signed(2, -1), p3 = ek_signed(3, -1);
    return k == 1 ? p1 : k == 2 ? p2 : p3;
}

Poly reduce(const Poly& p) {
    static const Poly rel = -(vsq(Var::v1) + vsq(Var::v2));
    return p.replace_square(Var::v3, rel);
}

bool is_zero_mod_conic(const Poly& p) { return reduce(p).is_zero(); }

} // namespace vforms

} // namespace ellsurf
