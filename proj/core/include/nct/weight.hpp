#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nct/phase.hpp"

namespace nct {

enum class LatticeNorm { l1, l2, linf };

double lattice_norm(const LatticePoint& x, LatticeNorm norm);
std::string lattice_norm_name(LatticeNorm norm);

enum class GrsVerdict { holds, fails, no_analytic_verdict };
std::string grs_verdict_name(GrsVerdict v);

// Parametric submultiplicative symmetric weight on Z^n. The built-in families
//   constant-one          v(x) = 1
//   polynomial(s)         v(x) = (1 + |x|)^s,      s >= 0
//   subexponential(a, b)  v(x) = e^{a |x|^b},      a > 0, 0 < b < 1
//   exponential(a)        v(x) = e^{a |x|},        a > 0
// and pointwise products of them carry an analytic GRS verdict; custom table
// weights get only sampled axiom checks and no analytic verdict.
class Weight {
public:
    enum class Kind { constant_one, polynomial, subexponential, exponential, product, custom };

    static Weight constant_one();
    static Weight polynomial(double s, LatticeNorm norm = LatticeNorm::l2);
    static Weight subexponential(double a, double b, LatticeNorm norm = LatticeNorm::l2);
    static Weight exponential(double a, LatticeNorm norm = LatticeNorm::l2);
    static Weight product(std::vector<Weight> factors);
    static Weight custom_table(std::map<LatticePoint, double> table,
                               std::optional<Weight> fallback = std::nullopt);

    Kind kind() const { return kind_; }
    LatticeNorm norm() const { return norm_; }
    const std::vector<Weight>& factors() const { return factors_; }
    const std::map<LatticePoint, double>& table() const { return table_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }
    double param_s() const { return s_; }

    double value(const LatticePoint& x) const;
    double log_value(const LatticePoint& x) const;

    GrsVerdict grs_verdict() const;
    // Analytic limit of v(kx)^{1/k}: 1 when the GRS condition holds,
    // e^{a|x|} per exponential factor when it fails, NaN when unknown.
    double grs_limit(const LatticePoint& x) const;

    std::string describe() const;

    // all custom-table keys reachable through this weight (for axiom sweeps)
    void collect_table_keys(std::vector<LatticePoint>& out) const;

private:
    Weight() = default;

    Kind kind_ = Kind::constant_one;
    double a_ = 0.0;
    double b_ = 0.0;
    double s_ = 0.0;
    LatticeNorm norm_ = LatticeNorm::l2;
    std::vector<Weight> factors_;
    std::map<LatticePoint, double> table_;
    std::shared_ptr<const Weight> fallback_;
};

struct GrsProfile {
    std::vector<double> values;  // v(kx)^{1/k}, k = 1..n_max, computed in log space
    GrsVerdict verdict;
    double limit;  // NaN when no analytic verdict
};

GrsProfile grs_profile(const Weight& v, const LatticePoint& x, int n_max);

struct WeightAxiomViolation {
    std::string axiom;  // "submultiplicative" or "symmetric"
    LatticePoint x;
    LatticePoint y;  // empty for symmetry violations
    double lhs;
    double rhs;
};

struct WeightAxiomReport {
    long trials = 0;
    long violations_found = 0;
    std::vector<WeightAxiomViolation> witnesses;  // capped
    bool ok() const { return violations_found == 0; }
};

// Randomized sampling of v(x+y) <= v(x) v(y) and v(-x) = v(x) over the box
// [-box, box]^dimension, with 1e-12 relative slack for rounding. Custom table
// keys are additionally swept exhaustively in pairs.
WeightAxiomReport check_axioms(const Weight& v, int dimension, long trials, std::int64_t box,
                               std::uint64_t seed);

}  // namespace nct
