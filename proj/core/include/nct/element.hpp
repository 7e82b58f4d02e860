#pragma once

#include <complex>
#include <map>
#include <memory>

#include "nct/phase.hpp"
#include "nct/weight.hpp"

namespace nct {

using Complex = std::complex<double>;

// Finitely supported function Z^n -> C, an element of l^1_v(Z^n, theta).
// Coefficients are double-precision complex; the cocycle phases stay exact
// until the final multiply. Entries that are exactly zero are absent.
class Element {
public:
    using CoeffMap = std::map<LatticePoint, Complex>;

    explicit Element(std::shared_ptr<const ThetaData> theta);

    const ThetaData& theta() const { return *theta_; }
    const std::shared_ptr<const ThetaData>& theta_ptr() const { return theta_; }
    int dimension() const { return theta_->dimension(); }

    const CoeffMap& coeffs() const { return coeffs_; }
    Complex at(const LatticePoint& x) const;
    void set(const LatticePoint& x, Complex c);
    void add_at(const LatticePoint& x, Complex c);

    std::size_t support_size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t support_radius() const;  // max |x|_inf over the support

    friend Element operator+(const Element& f, const Element& g);
    friend Element operator-(const Element& f, const Element& g);
    friend Element operator*(Complex c, const Element& f);

private:
    std::shared_ptr<const ThetaData> theta_;
    CoeffMap coeffs_;
};

void require_same_theta(const Element& f, const Element& g);

// Dirac element delta_y
Element delta(std::shared_ptr<const ThetaData> theta, const LatticePoint& y);

// (f natural g)(x) = sum_y f(y) g(x-y) sigma(y, x-y)
Element twisted_convolve(const Element& f, const Element& g);

// f*(x) = conj(sigma(x, -x)) conj(f(-x))
Element involution(const Element& f);

// k-fold twisted convolution, power(f, 0) = delta_0
Element power(const Element& f, long k);

double l1_norm(const Element& f);
double weighted_norm(const Element& f, const Weight& v);

// drops coefficients with |c| <= eps; exact zeros are never present anyway
Element prune(const Element& f, double eps);

// largest coefficientwise deviation, over the union of supports
double max_coeff_diff(const Element& f, const Element& g);

}  // namespace nct
