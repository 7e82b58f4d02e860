#include "nct/extension.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nct {

GPoint g_identity(int n) { return {LatticePoint(static_cast<std::size_t>(n), 0), UnitPhase()}; }

GPoint g_multiply(const ThetaData& theta, const GPoint& a, const GPoint& b) {
    UnitPhase phase = phase_mul(sigma(theta, a.x, b.x), phase_mul(a.phase, b.phase));
    return {lp_add(a.x, b.x), phase};
}

GPoint g_inverse(const ThetaData& theta, const GPoint& a) {
    LatticePoint mx = lp_neg(a.x);
    UnitPhase phase = phase_conj(phase_mul(sigma(theta, a.x, mx), a.phase));
    return {mx, phase};
}

bool g_equal(const GPoint& a, const GPoint& b) { return a.x == b.x && a.phase == b.phase; }

GFunction::GFunction(std::shared_ptr<const ThetaData> theta) : theta_(std::move(theta)) {
    if (!theta_) throw InvalidInput("G-function requires theta data");
}

Complex GFunction::at(const LatticePoint& x, std::int64_t k) const {
    auto it = comps_.find({x, k});
    return it == comps_.end() ? Complex{0.0, 0.0} : it->second;
}

void GFunction::set(const LatticePoint& x, std::int64_t k, Complex c) {
    if (static_cast<int>(x.size()) != dimension())
        throw DimensionMismatch("component key dimension does not match theta");
    if (c.real() == 0.0 && c.imag() == 0.0) {
        comps_.erase({x, k});
    } else {
        comps_[{x, k}] = c;
    }
}

void GFunction::add_at(const LatticePoint& x, std::int64_t k, Complex c) { set(x, k, at(x, k) + c); }

std::int64_t GFunction::max_abs_frequency() const {
    std::int64_t m = 0;
    for (const auto& [key, c] : comps_) {
        (void)c;
        m = std::max(m, std::abs(key.second));
    }
    return m;
}

bool GFunction::single_frequency() const {
    bool seen = false;
    std::int64_t k0 = 0;
    for (const auto& [key, c] : comps_) {
        (void)c;
        if (!seen) {
            k0 = key.second;
            seen = true;
        } else if (key.second != k0) {
            return false;
        }
    }
    return true;
}

GFunction circ(const Element& f) {
    GFunction F(f.theta_ptr());
    for (const auto& [x, c] : f.coeffs()) F.set(x, -1, c);
    return F;
}

Element circ_inverse(const GFunction& F) {
    Element f(F.theta_ptr());
    for (const auto& [key, c] : F.comps()) {
        if (key.second != -1)
            throw InvalidInput("circ_inverse requires a function supported on frequency -1");
        f.set(key.first, c);
    }
    return f;
}

namespace {

void require_same_theta(const GFunction& F, const GFunction& H) {
    if (F.theta_ptr() == H.theta_ptr()) return;
    if (F.theta() != H.theta()) throw DimensionMismatch("G-functions over different theta data");
}

}  // namespace

GFunction g_convolve(const GFunction& F, const GFunction& H) {
    require_same_theta(F, H);
    const ThetaData& th = F.theta();

    // bucket by frequency; the circle integral kills mixed terms
    std::map<std::int64_t, std::vector<std::pair<LatticePoint, Complex>>> fb, hb;
    for (const auto& [key, c] : F.comps()) fb[key.second].emplace_back(key.first, c);
    for (const auto& [key, c] : H.comps()) hb[key.second].emplace_back(key.first, c);

    GFunction::CompMap acc;
    for (const auto& [k, fs] : fb) {
        auto it = hb.find(k);
        if (it == hb.end()) continue;
        for (const auto& [y, fy] : fs) {
            for (const auto& [z, hz] : it->second) {
                Complex v = fy * hz;
                UnitPhase s = sigma(th, y, z);
                if (!s.is_one()) v *= to_complex(phase_pow(s, -k), th.basis());
                acc[{lp_add(y, z), k}] += v;
            }
        }
    }
    GFunction out(F.theta_ptr());
    for (auto& [key, c] : acc)
        if (c.real() != 0.0 || c.imag() != 0.0) out.set(key.first, key.second, c);
    return out;
}

GFunction g_involution(const GFunction& F) {
    const ThetaData& th = F.theta();
    GFunction out(F.theta_ptr());
    for (const auto& [key, c] : F.comps()) {
        const auto& [y, k] = key;
        LatticePoint x = lp_neg(y);
        Complex v = std::conj(c);
        UnitPhase s = sigma(th, x, y);  // sigma(x, -x) at x = -y
        if (!s.is_one()) v *= to_complex(phase_pow(s, k), th.basis());
        out.set(x, k, v);
    }
    return out;
}

namespace {

double circle_integrals(const GFunction& F, int quad_points, const GWeight* w) {
    if (quad_points < 1) throw InvalidInput("g_norm requires at least one quadrature point");
    std::int64_t maxk = F.max_abs_frequency();
    if (static_cast<std::int64_t>(quad_points) < 2 * maxk + 1)
        throw InvalidInput("g_norm requires quad_points >= 2*max|frequency| + 1");

    if (F.single_frequency()) {
        // |F_k(x) xi^k| = |F_k(x)|: the integral is exact
        double s = 0.0;
        for (const auto& [key, c] : F.comps())
            s += std::abs(c) * (w ? w->value(key.first) : 1.0);
        return s;
    }

    // group components by lattice point
    std::map<LatticePoint, std::vector<std::pair<std::int64_t, Complex>>> by_x;
    for (const auto& [key, c] : F.comps()) by_x[key.first].emplace_back(key.second, c);

    const double two_pi = 6.283185307179586476925286766559;
    double total = 0.0;
    for (const auto& [x, comps] : by_x) {
        double integral = 0.0;
        for (int i = 0; i < quad_points; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(quad_points);
            Complex val{0.0, 0.0};
            for (const auto& [k, c] : comps) {
                double ang = two_pi * t * static_cast<double>(k);
                val += c * Complex{std::cos(ang), std::sin(ang)};
            }
            integral += std::abs(val);
        }
        integral /= static_cast<double>(quad_points);
        total += integral * (w ? w->value(x) : 1.0);
    }
    return total;
}

}  // namespace

double g_norm(const GFunction& F, int quad_points) { return circle_integrals(F, quad_points, nullptr); }

GWeight extend_weight(const Weight& v) { return GWeight{v}; }

double g_norm_weighted(const GFunction& F, const GWeight& w, int quad_points) {
    return circle_integrals(F, quad_points, &w);
}

}  // namespace nct
