#include "su3coh/cartan.hpp"

#include <algorithm>
#include <numeric>

namespace su3coh {

Mat3 CartanVector::matrix() const {
    Mat3 m = Mat3::Zero();
    const auto t = triple();
    for (int i = 0; i < 3; ++i)
        m(i, i) = Cplx(0, t[i].to_double());
    return m;
}

Rational pairing(const CartanVector& x, const CartanVector& z) {
    return x.a * (2 * z.a - z.b) + x.b * (2 * z.b - z.a);
}

const char* to_string(CircleClass c) {
    switch (c) {
        case CircleClass::RootType: return "RootType";
        case CircleClass::SingularType: return "SingularType";
        case CircleClass::Generic: return "Generic";
    }
    return "?";
}

namespace {

CircleClass classify_triple(const std::array<long long, 3>& t) {
    if (t[0] == 0 || t[1] == 0 || t[2] == 0) return CircleClass::RootType;
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) return CircleClass::SingularType;
    return CircleClass::Generic;
}

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

} // namespace

AlgebraElement CircleSubgroup::algebra() const {
    Mat3 m = Mat3::Zero();
    const auto t = triple();
    for (int i = 0; i < 3; ++i) m(i, i) = Cplx(0, double(t[i]));
    return AlgebraElement(m);
}

CircleSubgroup canonicalize(long long k, long long l) {
    if (k == 0 && l == 0) throw ZeroPair("circle subgroup requires (k,l) != (0,0)");
    const long long g = std::gcd(std::abs(k), std::abs(l));
    k /= g;
    l /= g;
    const std::array<long long, 3> t = {k, l, -k - l};
    std::pair<long long, long long> best{t[0], t[1]};
    for (const auto& p : kPerms)
        for (int s : {1, -1}) {
            std::pair<long long, long long> cand{s * t[p[0]], s * t[p[1]]};
            best = std::max(best, cand);
        }
    CircleSubgroup c;
    c.k = best.first;
    c.l = best.second;
    c.cls = classify_triple(c.triple());
    return c;
}

const std::vector<WeylElement>& weyl_sign_elements() {
    static const std::vector<WeylElement> elems = [] {
        std::vector<WeylElement> v;
        for (const auto& p : kPerms)
            for (int s : {1, -1}) v.push_back({p, s});
        return v;
    }();
    return elems;
}

GroupMatrix weyl_tau() {
    Mat3 m = Mat3::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    m(2, 2) = 1.0;
    return GroupMatrix(m);
}

NormalizerInfo normalizer_components(const CircleSubgroup& c) {
    const auto t = c.triple();
    int preserving = 0;
    for (const auto& w : weyl_sign_elements()) {
        bool match = true;
        for (int i = 0; i < 3; ++i)
            if (w.sign * t[w.perm[i]] != t[i]) { match = false; break; }
        if (match) ++preserving;
    }
    const bool u2 = c.cls == CircleClass::SingularType;
    // SingularType centralizes a U(2); its own Weyl group accounts for a
    // factor 2 among the preserving permutations.
    return {u2 ? NormalizerComponent::U2 : NormalizerComponent::Torus,
            u2 ? preserving / 2 : preserving};
}

int normalizer_components_nonconnected(const CircleSubgroup& c, long long h) {
    if (h < 1) throw InvalidArgument("finite part h must be >= 1");
    if (c.cls == CircleClass::SingularType)
        return h > 1 ? 2 : 1;
    return normalizer_components(c).component_count;
}

std::pair<long long, long long> perp_direction_coords(const CartanVector& z) {
    if (z.is_zero()) throw ZeroVector("perpendicular line of the zero weight");
    // <x,z> = x.a*(2a-b) + x.b*(2b-a) = 0 has exact solution direction
    // (2b-a, b-2a).
    const Rational da = Rational(2) * z.b - z.a;
    const Rational db = z.b - Rational(2) * z.a;
    const long long scale = std::lcm(da.denominator(), db.denominator());
    long long ia = (da * Rational(scale)).as_integer();
    long long ib = (db * Rational(scale)).as_integer();
    const long long g = std::gcd(std::abs(ia), std::abs(ib));
    if (g > 1) { ia /= g; ib /= g; }
    return {ia, ib};
}

CircleSubgroup perp_line_in_cartan(const CartanVector& z) {
    const auto [ia, ib] = perp_direction_coords(z);
    // {u,u'} coordinates (ia, ib) give the diagonal triple (ia, ib-ia, -ib).
    return canonicalize(ia, ib - ia);
}

CartanVector weight_vector(long long p, long long q) {
    return {Rational(p + 2 * q, 3), Rational(2 * p + q, 3)};
}

CartanVector u2_weight(long long m) {
    return {Rational(1, 2) + Rational(m, 6), Rational(m, 3)};
}

std::pair<long long, long long> weight_canonical(long long p, long long q) {
    std::array<long long, 3> t = {p + 2 * q, p - q, -2 * p - q};
    std::sort(t.begin(), t.end(), std::greater<>());
    const long long pd = -(t[0] + 2 * t[2]) / 3;
    const long long qd = (2 * t[0] + t[2]) / 3;
    return {std::min(pd, qd), std::max(pd, qd)};
}

} // namespace su3coh
