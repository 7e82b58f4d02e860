#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nct/rational.hpp"

namespace nct {

// A point of the integer lattice Z^n.
using LatticePoint = std::vector<std::int64_t>;

LatticePoint lp_add(const LatticePoint& a, const LatticePoint& b);
LatticePoint lp_sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint lp_neg(const LatticePoint& a);
LatticePoint lp_scaled(const LatticePoint& a, std::int64_t k);
bool lp_is_zero(const LatticePoint& a);
std::int64_t lp_linf(const LatticePoint& a);
std::string lp_str(const LatticePoint& a);
LatticePoint unit_vector(int n, int index);  // index 0-based

// Real numbers alpha_1..alpha_T used as the irrational part of phase angles.
// Assumption (not machine-checkable, recorded with the config): {1, alpha_1,
// ..., alpha_T} is linearly independent over Q. The double values are used
// only for numeric rendering; all decisions are made on exact coefficients.
struct IrrationalBasis {
    std::vector<double> values;

    int size() const { return static_cast<int>(values.size()); }
    friend bool operator==(const IrrationalBasis& a, const IrrationalBasis& b) {
        return a.values == b.values;
    }
};

// A point e^{2*pi*i*angle} of the unit circle with exact angle
// r0 + sum_t c_t * alpha_t, r0 and c_t rational. The rational part is kept in
// [0, 1); irrational coefficients are never reduced (integer shifts cannot
// cancel an irrational part).
class UnitPhase {
public:
    using IrrationalCoeffs = std::vector<std::pair<int, Rational>>;  // sorted by index, no zeros

    UnitPhase() = default;

    explicit UnitPhase(const Rational& r0) : r0_(r0.mod_one()) {}

    UnitPhase(const Rational& r0, IrrationalCoeffs irr) : r0_(r0.mod_one()), irr_(std::move(irr)) {
        tidy();
    }

    static UnitPhase one() { return UnitPhase(); }
    static UnitPhase of_rational(std::int64_t num, std::int64_t den) {
        return UnitPhase(Rational(num, den));
    }
    static UnitPhase of_irrational(int t, const Rational& coeff) {
        if (t < 0) throw InvalidInput("irrational basis index must be nonnegative");
        if (coeff.is_zero()) return UnitPhase();
        return UnitPhase(Rational(), {{t, coeff}});
    }

    const Rational& rational_part() const { return r0_; }
    const IrrationalCoeffs& irrational_part() const { return irr_; }

    bool is_one() const { return r0_.is_zero() && irr_.empty(); }
    bool is_rational() const { return irr_.empty(); }

    friend bool operator==(const UnitPhase& a, const UnitPhase& b) {
        return a.r0_ == b.r0_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const UnitPhase& a, const UnitPhase& b) { return !(a == b); }

    std::string str() const;

private:
    void tidy();

    Rational r0_;
    IrrationalCoeffs irr_;
};

UnitPhase phase_mul(const UnitPhase& a, const UnitPhase& b);
UnitPhase phase_pow(const UnitPhase& a, int128 k);
UnitPhase phase_conj(const UnitPhase& a);
std::complex<double> to_complex(const UnitPhase& a, const IrrationalBasis& basis);

// Accumulator for sums of integer multiples of phase angles; avoids
// intermediate UnitPhase construction inside cocycle loops.
class PhaseAccumulator {
public:
    void add_scaled(const UnitPhase& angle, int128 k);
    UnitPhase take();

private:
    Rational r0_;
    UnitPhase::IrrationalCoeffs irr_;
};

// The angle data defining the commutation phases theta_{jk} = e^{2*pi*i*vartheta_{jk}}.
// Only the strictly lower triangle (row k > col j, 0-based) is stored; the full
// matrix is skew: vartheta_{jk} = -vartheta_{kj} with the rational part taken
// mod 1, and the diagonal is 0.
class ThetaData {
public:
    ThetaData(int n, IrrationalBasis basis = {});

    int dimension() const { return n_; }
    const IrrationalBasis& basis() const { return basis_; }

    // k > j, both 0-based
    void set_lower_angle(int k, int j, const UnitPhase& angle);
    const UnitPhase& lower_angle(int k, int j) const;

    // full skew-symmetric entry vartheta_{jk} (row j, col k)
    UnitPhase angle(int j, int k) const;

    bool has_irrational_entries() const;

    friend bool operator==(const ThetaData& a, const ThetaData& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_ && a.lower_ == b.lower_;
    }
    friend bool operator!=(const ThetaData& a, const ThetaData& b) { return !(a == b); }

private:
    int index(int k, int j) const { return k * (k - 1) / 2 + j; }

    int n_;
    IrrationalBasis basis_;
    std::vector<UnitPhase> lower_;
};

// The cocycle sigma(l, m) = prod_{j<k} theta_{kj}^{l_k m_j} as an exact phase.
UnitPhase sigma(const ThetaData& theta, const LatticePoint& l, const LatticePoint& m);
std::complex<double> sigma_value(const ThetaData& theta, const LatticePoint& l, const LatticePoint& m);

}  // namespace nct
