#include "nct/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace nct {

BoxIndexer::BoxIndexer(int n, std::int64_t radius, std::size_t cap) : n_(n), radius_(radius) {
    if (n < 1) throw InvalidInput("box dimension must be at least 1");
    if (radius < 1) throw InvalidInput("box radius must be at least 1");
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        if (size > cap / side) throw MemoryCapExceeded("truncation box exceeds the configured cap");
        size *= side;
    }
    size_ = static_cast<std::size_t>(size);
}

bool BoxIndexer::contains(const LatticePoint& p) const {
    if (static_cast<int>(p.size()) != n_) return false;
    for (std::int64_t c : p)
        if (c < -radius_ || c > radius_) return false;
    return true;
}

std::size_t BoxIndexer::flat(const LatticePoint& p) const {
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius_) + 1;
    std::uint64_t idx = 0;
    for (int i = 0; i < n_; ++i)
        idx = idx * side + static_cast<std::uint64_t>(p[static_cast<std::size_t>(i)] + radius_);
    return static_cast<std::size_t>(idx);
}

LatticePoint BoxIndexer::point(std::size_t index) const {
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius_) + 1;
    LatticePoint p(static_cast<std::size_t>(n_));
    std::uint64_t rest = index;
    for (int i = n_ - 1; i >= 0; --i) {
        p[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % side) - radius_;
        rest /= side;
    }
    return p;
}

TruncatedOperator build_truncation(const Element& f, std::int64_t N, std::size_t cap) {
    if (N < 1) throw InvalidInput("truncation radius must be positive");
    BoxIndexer indexer(f.dimension(), N, cap);
    const std::size_t S = indexer.size();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(S), static_cast<Eigen::Index>(S));
    const ThetaData& th = f.theta();
    for (std::size_t col = 0; col < S; ++col) {
        LatticePoint z = indexer.point(col);
        for (const auto& [s, coeff] : f.coeffs()) {
            LatticePoint x = lp_add(s, z);
            if (!indexer.contains(x)) continue;
            Complex v = coeff;
            UnitPhase ph = sigma(th, s, z);  // sigma(x - z, z)
            if (!ph.is_one()) v *= to_complex(ph, th.basis());
            M(static_cast<Eigen::Index>(indexer.flat(x)), static_cast<Eigen::Index>(col)) = v;
        }
    }
    return {N, f, indexer, std::move(M)};
}

OpNormEstimate opnorm_estimate(const TruncatedOperator& T, double tol, int max_iterations,
                               std::uint64_t seed) {
    if (!(tol > 0)) throw InvalidInput("opnorm tolerance must be positive");
    const double upper = l1_norm(T.source);
    const Eigen::MatrixXcd& M = T.matrix;
    if (M.norm() == 0.0) return {0.0, upper, 0};

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(M.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex{gauss(rng), gauss(rng)};
    v.normalize();

    double estimate = 0.0;
    int settled = 0;
    for (int it = 1; it <= max_iterations; ++it) {
        Eigen::VectorXcd w = M * v;
        double s = w.norm();
        if (s == 0.0) {
            // started in the kernel; restart from a fresh direction
            for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex{gauss(rng), gauss(rng)};
            v.normalize();
            continue;
        }
        Eigen::VectorXcd u = M.adjoint() * w;
        double change = std::abs(s - estimate);
        estimate = s;
        if (change <= tol * std::max(estimate, std::numeric_limits<double>::min())) {
            if (++settled >= 2) return {estimate, upper, it};
        } else {
            settled = 0;
        }
        double un = u.norm();
        if (un == 0.0) return {estimate, upper, it};  // singular vector reached exactly
        v = u / un;
    }
    throw ConvergenceError("operator norm power iteration did not settle within the iteration cap",
                           estimate);
}

SpectralRadiusProfile spectral_radius_l1v(const std::shared_ptr<const ThetaData>& theta,
                                          const Weight& v, const LatticePoint& x, int n_max) {
    if (lp_is_zero(x)) throw InvalidInput("spectral_radius_l1v requires x != 0");
    if (n_max < 1) throw InvalidInput("spectral_radius_l1v requires n_max >= 1");

    SpectralRadiusProfile profile;
    profile.values.reserve(static_cast<std::size_t>(n_max));

    // delta_x^k is a single coefficient of modulus 1 at kx; track it honestly
    // through repeated twisted convolution, but take norms in log space so
    // exponential weights cannot overflow.
    Element p = delta(theta, x);
    for (int k = 1; k <= n_max; ++k) {
        if (p.support_size() != 1)
            throw Error("internal: power of a Dirac element must stay a single coefficient");
        const auto& [pos, coeff] = *p.coeffs().begin();
        double log_norm = std::log(std::abs(coeff)) + v.log_value(pos);
        profile.values.push_back(std::exp(log_norm / static_cast<double>(k)));
        if (k < n_max) p = twisted_convolve(p, delta(theta, x));
    }
    profile.analytic_limit = v.grs_limit(x);
    profile.verdict = v.grs_verdict();
    return profile;
}

std::string decay_model_name(DecayFit::Model m) {
    switch (m) {
        case DecayFit::Model::polynomial: return "polynomial";
        case DecayFit::Model::subexponential: return "subexponential";
        case DecayFit::Model::exponential: return "exponential";
    }
    return "polynomial";
}

namespace {

// least squares for L ~ C - rate * u; returns {C, rate, rms}
struct LineFit {
    double intercept;
    double rate;
    double rms;
};

LineFit fit_line(const std::vector<double>& u, const std::vector<double>& L) {
    const std::size_t n = u.size();
    double su = 0, sL = 0;
    for (std::size_t i = 0; i < n; ++i) {
        su += u[i];
        sL += L[i];
    }
    double mu = su / static_cast<double>(n);
    double mL = sL / static_cast<double>(n);
    double cov = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (u[i] - mu) * (L[i] - mL);
        var += (u[i] - mu) * (u[i] - mu);
    }
    double slope = var > 0 ? cov / var : 0.0;
    double intercept = mL - slope * mu;
    double sse = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double e = L[i] - (intercept + slope * u[i]);
        sse += e * e;
    }
    return {intercept, -slope, std::sqrt(sse / static_cast<double>(n))};
}

}  // namespace

DecayFit decay_fit(const Element& f, LatticeNorm norm) {
    if (f.support_size() < 8) throw InvalidInput("decay_fit requires support size >= 8");

    std::vector<double> r, L;
    r.reserve(f.support_size());
    L.reserve(f.support_size());
    for (const auto& [x, c] : f.coeffs()) {
        r.push_back(lattice_norm(x, norm));
        L.push_back(std::log(std::abs(c)));
    }

    double spread = *std::max_element(L.begin(), L.end()) - *std::min_element(L.begin(), L.end());

    std::vector<double> u(r.size());

    // polynomial: L ~ C - s log(1 + r)
    for (std::size_t i = 0; i < r.size(); ++i) u[i] = std::log1p(r[i]);
    LineFit poly = fit_line(u, L);

    // exponential: L ~ C - a r
    LineFit expo = fit_line(r, L);

    // subexponential: L ~ C - a r^b, scanning b then refining around the best
    auto subexp_at = [&](double b) {
        for (std::size_t i = 0; i < r.size(); ++i) u[i] = std::pow(r[i], b);
        return fit_line(u, L);
    };
    double best_b = 0.5;
    LineFit sub = subexp_at(best_b);
    for (double b = 0.02; b < 0.995; b += 0.02) {
        LineFit cand = subexp_at(b);
        if (cand.rms < sub.rms) {
            sub = cand;
            best_b = b;
        }
    }
    {
        double lo = std::max(0.005, best_b - 0.02), hi = std::min(0.995, best_b + 0.02);
        const double gr = 0.6180339887498949;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        LineFit f1 = subexp_at(x1), f2 = subexp_at(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1.rms < f2.rms) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = subexp_at(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = subexp_at(x2);
            }
        }
        double bb = (f1.rms < f2.rms) ? x1 : x2;
        LineFit cand = subexp_at(bb);
        if (cand.rms < sub.rms) {
            sub = cand;
            best_b = bb;
        }
    }

    DecayFit fit;
    if (poly.rms <= expo.rms && poly.rms <= sub.rms) {
        fit.model = DecayFit::Model::polynomial;
        fit.s = poly.rate;
        fit.residual_rms = poly.rms;
    } else if (expo.rms <= sub.rms) {
        fit.model = DecayFit::Model::exponential;
        fit.a = expo.rate;
        fit.residual_rms = expo.rms;
    } else {
        fit.model = DecayFit::Model::subexponential;
        fit.a = sub.rate;
        fit.b = best_b;
        fit.residual_rms = sub.rms;
    }
    double best_rate = std::max({fit.s, fit.a});
    fit.degenerate = spread < 1e-9 || best_rate < 1e-9;
    return fit;
}

namespace {

// length of the strictly increasing run at the tail of a series
std::size_t increasing_tail(const std::vector<double>& s) {
    if (s.size() < 2) return 0;
    std::size_t run = 0;
    for (std::size_t i = s.size() - 1; i > 0; --i) {
        if (s[i] > s[i - 1])
            ++run;
        else
            break;
    }
    return run;
}

std::vector<double> block_sums(const std::vector<double>& terms, std::size_t block) {
    std::vector<double> out;
    for (std::size_t start = 0; start + block <= terms.size(); start += block) {
        double s = 0;
        for (std::size_t i = start; i < start + block; ++i) s += terms[i];
        out.push_back(s);
    }
    return out;
}

constexpr std::size_t kDivergenceBlockLen = 10;
constexpr std::size_t kDivergenceBlocks = 10;

}  // namespace

InversionReport neumann_invert(const Element& f, double tol, long max_terms, const Weight& v) {
    if (!(tol > 0)) throw InvalidInput("neumann_invert requires tol > 0");
    if (max_terms < 1) throw InvalidInput("neumann_invert requires max_terms >= 1");

    const LatticePoint origin(static_cast<std::size_t>(f.dimension()), 0);
    const Complex c0 = f.at(origin);
    if (c0.real() == 0.0 && c0.imag() == 0.0)
        throw NotDiagonallyDominant(
            "neumann_invert requires f(0) != 0; the series c^{-1} sum (h/c)^k is inapplicable "
            "(this is not a claim about non-invertibility)");

    const Element id = delta(f.theta_ptr(), origin);
    // f = c0 delta_0 - h, series c0^{-1} sum (h/c0)^k
    const Element ratio = (Complex{1.0, 0.0} / c0) * (c0 * id - f);

    InversionReport report{Element(f.theta_ptr()), 0.0,   0,  false, false,
                           false,                  {},    {}, {},    {},
                           std::nullopt};

    Element p = id;  // (h/c0)^k
    Element sum(f.theta_ptr());
    double partial_weighted = 0.0;
    bool growth_active = false;

    while (report.terms_used < max_terms) {
        Element term = (Complex{1.0, 0.0} / c0) * p;
        sum = sum + term;
        ++report.terms_used;

        report.term_l1_norms.push_back(l1_norm(term));
        double tw = weighted_norm(term, v);
        report.term_weighted_norms.push_back(tw);
        partial_weighted += tw;
        report.partial_weighted_norms.push_back(partial_weighted);

        report.residual_l1 = l1_norm(twisted_convolve(f, sum) - id);

        auto blocks = block_sums(report.term_weighted_norms, kDivergenceBlockLen);
        growth_active = blocks.size() >= 2 && blocks[blocks.size() - 1] > blocks[blocks.size() - 2];

        if (report.residual_l1 <= tol && !growth_active) {
            report.converged_l1 = true;
            break;
        }
        if (report.terms_used < max_terms) p = twisted_convolve(p, ratio);
    }

    report.converged_l1 = report.residual_l1 <= tol;
    report.weighted_divergence =
        increasing_tail(block_sums(report.term_weighted_norms, kDivergenceBlockLen)) + 1 >=
        kDivergenceBlocks;
    report.l1_divergence =
        !report.converged_l1 && report.terms_used >= max_terms &&
        increasing_tail(block_sums(report.term_l1_norms, kDivergenceBlockLen)) + 1 >= kDivergenceBlocks;

    report.inverse = sum;
    report.weighted_norms["l1"] = l1_norm(sum);
    report.weighted_norms[v.describe()] = weighted_norm(sum, v);
    if (sum.support_size() >= 8) report.decay = decay_fit(sum, LatticeNorm::l2);
    return report;
}

double cstar_inverse_norm(const Element& f, std::int64_t N) {
    TruncatedOperator T = build_truncation(f, N);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T.matrix);
    const auto& sv = svd.singularValues();
    double smin = sv(sv.size() - 1);
    double smax = sv(0);
    if (!(smin > 0) || smin <= smax * 1e-14)
        throw SingularTruncation("truncated operator is numerically singular");
    return 1.0 / smin;
}

}  // namespace nct
