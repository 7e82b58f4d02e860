#include "nct/element.hpp"

#include <algorithm>
#include <cmath>

namespace nct {

Element::Element(std::shared_ptr<const ThetaData> theta) : theta_(std::move(theta)) {
    if (!theta_) throw InvalidInput("element requires theta data");
}

Complex Element::at(const LatticePoint& x) const {
    auto it = coeffs_.find(x);
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

void Element::set(const LatticePoint& x, Complex c) {
    if (static_cast<int>(x.size()) != dimension())
        throw DimensionMismatch("coefficient key dimension does not match theta");
    if (c.real() == 0.0 && c.imag() == 0.0) {
        coeffs_.erase(x);
    } else {
        coeffs_[x] = c;
    }
}

void Element::add_at(const LatticePoint& x, Complex c) { set(x, at(x) + c); }

std::int64_t Element::support_radius() const {
    std::int64_t r = 0;
    for (const auto& [x, c] : coeffs_) {
        (void)c;
        r = std::max(r, lp_linf(x));
    }
    return r;
}

void require_same_theta(const Element& f, const Element& g) {
    if (f.theta_ptr() == g.theta_ptr()) return;
    if (f.theta() != g.theta()) throw DimensionMismatch("elements over different theta data");
}

Element operator+(const Element& f, const Element& g) {
    require_same_theta(f, g);
    Element out = f;
    for (const auto& [x, c] : g.coeffs()) out.add_at(x, c);
    return out;
}

Element operator-(const Element& f, const Element& g) {
    require_same_theta(f, g);
    Element out = f;
    for (const auto& [x, c] : g.coeffs()) out.add_at(x, -c);
    return out;
}

Element operator*(Complex c, const Element& f) {
    Element out(f.theta_ptr());
    for (const auto& [x, v] : f.coeffs()) out.set(x, c * v);
    return out;
}

Element delta(std::shared_ptr<const ThetaData> theta, const LatticePoint& y) {
    Element e(std::move(theta));
    if (static_cast<int>(y.size()) != e.dimension())
        throw DimensionMismatch("delta: point dimension does not match theta");
    e.set(y, Complex{1.0, 0.0});
    return e;
}

Element twisted_convolve(const Element& f, const Element& g) {
    require_same_theta(f, g);
    const ThetaData& th = f.theta();
    Element::CoeffMap acc;
    for (const auto& [y, fy] : f.coeffs()) {
        for (const auto& [z, gz] : g.coeffs()) {
            Complex v = fy * gz;
            UnitPhase s = sigma(th, y, z);
            if (!s.is_one()) v *= to_complex(s, th.basis());
            acc[lp_add(y, z)] += v;
        }
    }
    Element out(f.theta_ptr());
    for (auto& [x, c] : acc)
        if (c.real() != 0.0 || c.imag() != 0.0) out.set(x, c);
    return out;
}

Element involution(const Element& f) {
    const ThetaData& th = f.theta();
    Element out(f.theta_ptr());
    for (const auto& [y, c] : f.coeffs()) {
        LatticePoint x = lp_neg(y);
        Complex v = std::conj(c);
        UnitPhase s = sigma(th, x, y);  // sigma(x, -x) at x = -y
        if (!s.is_one()) v *= std::conj(to_complex(s, th.basis()));
        out.set(x, v);
    }
    return out;
}

Element power(const Element& f, long k) {
    if (k < 0) throw InvalidInput("power requires a nonnegative exponent");
    Element acc = delta(f.theta_ptr(), LatticePoint(static_cast<std::size_t>(f.dimension()), 0));
    for (long i = 0; i < k; ++i) acc = twisted_convolve(acc, f);
    return acc;
}

double l1_norm(const Element& f) {
    double s = 0.0;
    for (const auto& [x, c] : f.coeffs()) {
        (void)x;
        s += std::abs(c);
    }
    return s;
}

double weighted_norm(const Element& f, const Weight& v) {
    double s = 0.0;
    for (const auto& [x, c] : f.coeffs()) s += std::abs(c) * v.value(x);
    return s;
}

Element prune(const Element& f, double eps) {
    if (!(eps >= 0)) throw InvalidInput("prune requires eps >= 0");
    Element out(f.theta_ptr());
    for (const auto& [x, c] : f.coeffs())
        if (std::abs(c) > eps) out.set(x, c);
    return out;
}

double max_coeff_diff(const Element& f, const Element& g) {
    double m = 0.0;
    for (const auto& [x, c] : f.coeffs()) m = std::max(m, std::abs(c - g.at(x)));
    for (const auto& [x, c] : g.coeffs()) m = std::max(m, std::abs(f.at(x) - c));
    return m;
}

}  // namespace nct
