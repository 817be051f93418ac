#include "ellsurf/weierstrass.hpp"

#include "ellsurf/octahedral.hpp"

namespace ellsurf {

std::string FiberType::name() const {
    switch (kind) {
        case FiberKind::I0: return "I0";
        case FiberKind::In: return "I" + std::to_string(n);
        case FiberKind::InStar: return "I" + std::to_string(n) + "*";
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IVStar: return "IV*";
        case FiberKind::IIIStar: return "III*";
        default: return "II*";
    }
}

std::string JClass::str() const {
    switch (tag) {
        case Tag::zero: return "0";
        case Tag::one: return "1";
        case Tag::infinity: return "inf";
        default: return value.str();
    }
}

WeierstrassData family_coefficients(const K& a, const K& b) {
    if (a.is_zero() && b.is_zero()) throw DegenerateParameter();
    Poly S = Poly::var(Var::S), T = Poly::var(Var::T);
    Poly lin = a * T - b * S;
    WeierstrassData d;
    d.a = a;
    d.b = b;
    d.g2 = 27 * T * (T - S) * lin * lin;
    d.g3 = 27 * T * (T - S).pow(2) * lin.pow(3);
    d.disc = d.g2.pow(3) - 27 * d.g3 * d.g3;
    // The discriminant factors completely; positions below rely on it.
    Poly expected = K(19683) * S * T.pow(2) * (T - S).pow(3) * lin.pow(6);
    if (d.disc != expected) throw std::logic_error("discriminant factorization failed");
    return d;
}

WeierstrassData cover_coefficients(const K& alpha, const K& beta) {
    if (alpha.is_zero() && beta.is_zero()) throw DegenerateParameter();
    std::map<Var, K> pt{{Var::alpha, alpha}, {Var::beta, beta}};
    K e = invariants::E().eval(pt);
    K f = invariants::F().eval(pt);
    return family_coefficients(e * e, f.pow(3));
}

FiberType classify_fiber(const std::array<int, 3>& orders, const JClass& j, EpInfo* ep) {
    const auto [v2, v3, vd] = orders;
    auto out = [&](FiberKind kind, int n, int ep_value, bool ep_exact) {
        if (ep) *ep = {ep_value, ep_exact};
        return FiberType{kind, n};
    };
    using Tag = JClass::Tag;
    switch (j.tag) {
        case Tag::other:
            if (v2 == 0 && v3 == 0 && vd == 0) return out(FiberKind::I0, 0, 1, false);
            if (v2 == 2 && v3 == 3 && vd == 6) return out(FiberKind::InStar, 0, 1, false);
            break;
        case Tag::infinity:
            if (v2 == 0 && v3 == 0 && vd >= 1) return out(FiberKind::In, vd, vd, true);
            if (v2 == 2 && v3 == 3 && vd >= 7) return out(FiberKind::InStar, vd - 6, vd - 6, true);
            break;
        case Tag::zero:
            if (v2 >= 1 && v3 == 0 && vd == 0) return out(FiberKind::I0, 0, 3 * v2, true);
            if (v2 >= 3 && v3 == 3 && vd == 6) return out(FiberKind::InStar, 0, 3 * v2 - 6, true);
            if (v2 >= 1 && v3 == 1 && vd == 2) return out(FiberKind::II, 0, 3 * v2 - 2, true);
            if (v2 >= 2 && v3 == 2 && vd == 4) return out(FiberKind::IV, 0, 3 * v2 - 4, true);
            if (v2 >= 3 && v3 == 4 && vd == 8) return out(FiberKind::IVStar, 0, 3 * v2 - 8, true);
            if (v2 >= 4 && v3 == 5 && vd == 10) return out(FiberKind::IIStar, 0, 3 * v2 - 10, true);
            break;
        case Tag::one:
            if (v2 == 0 && v3 >= 1 && vd == 0) return out(FiberKind::I0, 0, 2 * v3, true);
            if (v2 == 2 && v3 >= 4 && vd == 6) return out(FiberKind::InStar, 0, 2 * v3 - 6, true);
            if (v2 == 1 && v3 >= 2 && vd == 3) return out(FiberKind::III, 0, 2 * v3 - 3, true);
            if (v2 == 3 && v3 >= 5 && vd == 9) return out(FiberKind::IIIStar, 0, 2 * v3 - 9, true);
            break;
    }
    throw UnclassifiableTriple("no fiber type for orders (" + std::to_string(v2) + "," +
                               std::to_string(v3) + "," + std::to_string(vd) + ") with J = " +
                               j.str());
}

std::vector<FiberRecord> fiber_configuration(const K& a, const K& b) {
    WeierstrassData d = family_coefficients(a, b);
    // canonical base order: infinity, 0, 1, then the moving point (a:b)
    std::vector<std::pair<K, K>> candidates{{K(0), K(1)}, {K(1), K(0)}, {K(1), K(1)}, {a, b}};
    std::vector<FiberRecord> fibers;
    auto same_point = [](const std::pair<K, K>& p, const std::pair<K, K>& q) {
        return (p.first * q.second - p.second * q.first).is_zero();
    };
    int euler = 0;
    for (const auto& pos : candidates) {
        bool seen = false;
        for (const auto& f : fibers) seen = seen || same_point(pos, f.position);
        if (seen) continue;
        std::array<int, 3> orders{vanishing_order(d.g2, pos.first, pos.second),
                                  vanishing_order(d.g3, pos.first, pos.second),
                                  vanishing_order(d.disc, pos.first, pos.second)};
        if (orders[2] == 0) continue; // regular fiber
        JClass j = pos.first.is_zero() ? JClass::infinity() : JClass::of(pos.second / pos.first);
        FiberRecord rec;
        rec.position = pos;
        rec.orders = orders;
        rec.j = j;
        rec.type = classify_fiber(orders, j, &rec.ep);
        // the J-function of the family has degree one, so e_p(J) = 1 exactly
        if (!rec.ep.exact) rec.ep = {1, true};
        euler += orders[2];
        fibers.push_back(std::move(rec));
    }
    if (euler != 12) throw std::logic_error("Euler number of the configuration is not 12");
    return fibers;
}

std::vector<FiberRecord> fiber_configuration_cover(const K& alpha, const K& beta) {
    if (alpha.is_zero() && beta.is_zero()) throw DegenerateParameter();
    std::map<Var, K> pt{{Var::alpha, alpha}, {Var::beta, beta}};
    K e = invariants::E().eval(pt);
    K f = invariants::F().eval(pt);
    return fiber_configuration(e * e, f.pow(3));
}

Poly weierstrass_polynomial(const WeierstrassData& d) {
    Poly X = Poly::var(Var::X), Y = Poly::var(Var::Y), Z = Poly::var(Var::Z);
    return Y * Y * Z - 4 * X.pow(3) + d.g2 * X * Z * Z + d.g3 * Z.pow(3);
}

TwistReport verify_twist(const K& a, const K& b, const K& k) {
    if (k.is_zero()) throw std::invalid_argument("twist by zero");
    auto root = k.sqrt();
    if (!root) throw NoSquareRootInK();
    TwistReport rep;
    rep.sqrt_k = *root;
    WeierstrassData base = family_coefficients(a, b);
    WeierstrassData twisted = family_coefficients(k * a, k * b);
    rep.g2_scales = twisted.g2 == k * k * base.g2;
    rep.g3_scales = twisted.g3 == k * k * k * base.g3;
    std::map<Var, Poly> scale{{Var::X, k * Poly::var(Var::X)},
                              {Var::Y, (k * *root) * Poly::var(Var::Y)}};
    Poly lhs = weierstrass_polynomial(twisted).substitute(scale);
    rep.equation_matches = lhs == k.pow(3) * weierstrass_polynomial(base);
    return rep;
}

RationalFn j_function(const WeierstrassData& d, bool classical) {
    if (d.disc.is_zero()) throw ZeroDiscriminant();
    Poly num = d.g2.pow(3);
    if (classical) num = K(1728) * num;
    return RationalFn(num, d.disc);
}

} // namespace ellsurf
