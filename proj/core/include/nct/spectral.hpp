#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nct/element.hpp"

namespace nct {

// Lexicographic enumeration of the box [-N, N]^n (coordinate 0 most significant).
class BoxIndexer {
public:
    BoxIndexer(int n, std::int64_t radius, std::size_t cap);

    int dimension() const { return n_; }
    std::int64_t radius() const { return radius_; }
    std::size_t size() const { return size_; }

    bool contains(const LatticePoint& p) const;
    std::size_t flat(const LatticePoint& p) const;  // requires contains(p)
    LatticePoint point(std::size_t index) const;

private:
    int n_;
    std::int64_t radius_;
    std::size_t size_;
};

// default cap on the number of truncation rows, per the dense-matrix budget
inline constexpr std::size_t kDefaultTruncationCap = std::size_t{1} << 18;

// Compression of the regular representation lambda(f) to l^2 of the box
// [-N, N]^n. Entry (row x, col z) is f(x - z) sigma(x - z, z).
struct TruncatedOperator {
    std::int64_t box_radius;
    Element source;
    BoxIndexer indexer;
    Eigen::MatrixXcd matrix;
};

TruncatedOperator build_truncation(const Element& f, std::int64_t N,
                                   std::size_t cap = kDefaultTruncationCap);

struct OpNormEstimate {
    double lower;     // largest singular value of the truncation; a lower bound for ||lambda(f)||
    double upper_l1;  // a-priori upper bound ||f||_1
    int iterations;
};

// Power iteration on T^H T. Throws ConvergenceError (carrying the last
// iterate) if the relative change does not settle below tol.
OpNormEstimate opnorm_estimate(const TruncatedOperator& T, double tol, int max_iterations = 20000,
                               std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

struct SpectralRadiusProfile {
    std::vector<double> values;  // ||delta_x^k||_{l1_v}^{1/k}, k = 1..n_max (log-space)
    double analytic_limit;       // lim v(kx)^{1/k} from the weight family
    GrsVerdict verdict;
};

// Spectral radius experiment for delta_x in l^1_v: the k-th root of the
// weighted norm of the k-th twisted power, against the analytic GRS limit.
SpectralRadiusProfile spectral_radius_l1v(const std::shared_ptr<const ThetaData>& theta,
                                          const Weight& v, const LatticePoint& x, int n_max);

struct DecayFit {
    enum class Model { polynomial, subexponential, exponential };
    Model model;
    double s = 0.0;  // polynomial exponent
    double a = 0.0;  // rate (subexponential / exponential)
    double b = 0.0;  // subexponential exponent
    double residual_rms = 0.0;
    bool degenerate = false;  // no decay detectable
};

std::string decay_model_name(DecayFit::Model m);

// Least-squares fit of log|f(x)| against C - s log(1+|x|), C - a|x|^b and
// C - a|x|; best model by residual. Requires support size >= 8.
DecayFit decay_fit(const Element& f, LatticeNorm norm = LatticeNorm::l2);

struct InversionReport {
    Element inverse;     // truncated Neumann partial sum
    double residual_l1;  // ||f conv inverse - delta_0||_1 at exit
    long terms_used;
    bool converged_l1;          // residual_l1 <= tol at exit
    bool l1_divergence;         // l1 term norms kept growing through max_terms
    bool weighted_divergence;   // weighted partial sums grew for 10 blocks of 10 terms
    std::map<std::string, double> weighted_norms;  // weight name -> norm of the partial sum
    std::vector<double> term_l1_norms;
    std::vector<double> term_weighted_norms;
    std::vector<double> partial_weighted_norms;
    std::optional<DecayFit> decay;
};

// Neumann series for f = c delta_0 - h: accumulates c^{-1} sum (h/c)^k until
// the l^1 residual reaches tol, growth in the supplied weighted norm stops
// mattering, or max_terms is hit. Divergence in a norm is flagged when the
// per-term norms grow through 10 consecutive blocks of 10 terms.
InversionReport neumann_invert(const Element& f, double tol, long max_terms, const Weight& v);

// 1 / smallest singular value of the truncation: an estimate for the norm of
// the inverse in the operator-norm completion. Compressions can understate
// invertibility thresholds; meaningful for c delta_0 - delta_x with |c| > 1,
// where 1/(|c| - 1) is an a-priori bound by unitarity.
double cstar_inverse_norm(const Element& f, std::int64_t N);

}  // namespace nct
