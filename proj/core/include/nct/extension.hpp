#pragma once

#include <map>
#include <memory>
#include <utility>

#include "nct/element.hpp"

namespace nct {

// Point of the central extension G = Z^n x T with multiplication
// (x, xi)(y, eta) = (x + y, sigma(x, y) xi eta). Kept at exact phase level so
// the group axioms can be tested without rounding.
struct GPoint {
    LatticePoint x;
    UnitPhase phase;
};

GPoint g_identity(int n);
GPoint g_multiply(const ThetaData& theta, const GPoint& a, const GPoint& b);
GPoint g_inverse(const ThetaData& theta, const GPoint& a);  // (-x, conj(sigma(x,-x) xi))
bool g_equal(const GPoint& a, const GPoint& b);

// Function on G stored by T-Fourier components: F(x, xi) = sum_k F_k(x) xi^k,
// finitely supported in both x and k. The embedding f -> f(x) conj(xi) of the
// lattice algebra lands in the single component k = -1; the eta-integral of
// the group convolution collapses to frequency matching, which keeps the
// convolution exact.
class GFunction {
public:
    using Key = std::pair<LatticePoint, std::int64_t>;  // (x, frequency k)
    using CompMap = std::map<Key, Complex>;

    explicit GFunction(std::shared_ptr<const ThetaData> theta);

    const ThetaData& theta() const { return *theta_; }
    const std::shared_ptr<const ThetaData>& theta_ptr() const { return theta_; }
    int dimension() const { return theta_->dimension(); }

    const CompMap& comps() const { return comps_; }
    Complex at(const LatticePoint& x, std::int64_t k) const;
    void set(const LatticePoint& x, std::int64_t k, Complex c);
    void add_at(const LatticePoint& x, std::int64_t k, Complex c);

    bool is_zero() const { return comps_.empty(); }
    std::int64_t max_abs_frequency() const;
    bool single_frequency() const;  // at most one distinct frequency present

private:
    std::shared_ptr<const ThetaData> theta_;
    CompMap comps_;
};

// The embedding into L^1(G): comps[(x, -1)] = f(x)
GFunction circ(const Element& f);

// Element with g(x) = F_{-1}(x); requires F to live on frequency -1 only
Element circ_inverse(const GFunction& F);

// Group convolution on G, frequency by frequency:
// (F * H)_k(x) = sum_y F_k(y) H_k(x-y) sigma(y, x-y)^{-k}
GFunction g_convolve(const GFunction& F, const GFunction& H);

// (F^*)_k(x) = conj(F_k(-x)) sigma(x, -x)^k
GFunction g_involution(const GFunction& F);

// L^1(G) norm for the Haar measure sum_x integral_T. Exact when F has a
// single frequency; otherwise trapezoid quadrature with quad_points nodes
// per circle integral. Requires quad_points >= 2*max|k| + 1.
double g_norm(const GFunction& F, int quad_points);

// Weight on G obtained by extending a lattice weight constantly along T.
struct GWeight {
    Weight base;
    double value(const LatticePoint& x) const { return base.value(x); }
};

GWeight extend_weight(const Weight& v);
double g_norm_weighted(const GFunction& F, const GWeight& w, int quad_points);

}  // namespace nct
