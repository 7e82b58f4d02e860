#include "nct/phase.hpp"

#include <cmath>
#include <sstream>

namespace nct {

namespace {

std::int64_t checked_add64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("lattice coordinate overflow");
    return r;
}

std::int64_t checked_neg64(std::int64_t a) {
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw OverflowError("lattice coordinate overflow");
    return r;
}

void require_same_dim(const LatticePoint& a, const LatticePoint& b) {
    if (a.size() != b.size()) throw DimensionMismatch("lattice points of different dimension");
}

}  // namespace

LatticePoint lp_add(const LatticePoint& a, const LatticePoint& b) {
    require_same_dim(a, b);
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add64(a[i], b[i]);
    return r;
}

LatticePoint lp_sub(const LatticePoint& a, const LatticePoint& b) {
    require_same_dim(a, b);
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add64(a[i], checked_neg64(b[i]));
    return r;
}

LatticePoint lp_neg(const LatticePoint& a) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_neg64(a[i]);
    return r;
}

LatticePoint lp_scaled(const LatticePoint& a, std::int64_t k) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (__builtin_mul_overflow(a[i], k, &r[i])) throw OverflowError("lattice coordinate overflow");
    }
    return r;
}

bool lp_is_zero(const LatticePoint& a) {
    for (std::int64_t c : a)
        if (c != 0) return false;
    return true;
}

std::int64_t lp_linf(const LatticePoint& a) {
    std::int64_t m = 0;
    for (std::int64_t c : a) {
        std::int64_t v = c < 0 ? checked_neg64(c) : c;
        if (v > m) m = v;
    }
    return m;
}

std::string lp_str(const LatticePoint& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

LatticePoint unit_vector(int n, int index) {
    if (index < 0 || index >= n) throw InvalidInput("unit vector index out of range");
    LatticePoint e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return e;
}

void UnitPhase::tidy() {
    IrrationalCoeffs cleaned;
    cleaned.reserve(irr_.size());
    int last = -1;
    for (auto& [t, c] : irr_) {
        if (t < 0) throw InvalidInput("irrational basis index must be nonnegative");
        if (t <= last) throw InvalidInput("irrational coefficients must be sorted by index");
        last = t;
        if (!c.is_zero()) cleaned.emplace_back(t, c);
    }
    irr_ = std::move(cleaned);
}

std::string UnitPhase::str() const {
    std::ostringstream os;
    os << r0_.str();
    for (const auto& [t, c] : irr_) os << " + (" << c.str() << ")a" << t;
    return os.str();
}

UnitPhase phase_mul(const UnitPhase& a, const UnitPhase& b) {
    PhaseAccumulator acc;
    acc.add_scaled(a, 1);
    acc.add_scaled(b, 1);
    return acc.take();
}

UnitPhase phase_pow(const UnitPhase& a, int128 k) {
    PhaseAccumulator acc;
    acc.add_scaled(a, k);
    return acc.take();
}

UnitPhase phase_conj(const UnitPhase& a) { return phase_pow(a, -1); }

std::complex<double> to_complex(const UnitPhase& a, const IrrationalBasis& basis) {
    long double angle = a.rational_part().to_long_double();
    for (const auto& [t, c] : a.irrational_part()) {
        if (t >= basis.size())
            throw InvalidInput("phase references irrational basis element " + std::to_string(t) +
                               " but the basis has " + std::to_string(basis.size()) + " entries");
        angle += c.to_long_double() * static_cast<long double>(basis.values[static_cast<std::size_t>(t)]);
    }
    angle = std::fmod(angle, 1.0L);
    if (angle < 0.0L) angle += 1.0L;
    const long double two_pi = 6.283185307179586476925286766559L;
    return {static_cast<double>(std::cos(two_pi * angle)), static_cast<double>(std::sin(two_pi * angle))};
}

void PhaseAccumulator::add_scaled(const UnitPhase& angle, int128 k) {
    if (k == 0) return;
    if (!angle.rational_part().is_zero())
        r0_ = (r0_ + angle.rational_part().scaled(k)).mod_one();
    for (const auto& [t, c] : angle.irrational_part()) {
        Rational scaled = c.scaled(k);
        auto it = irr_.begin();
        while (it != irr_.end() && it->first < t) ++it;
        if (it != irr_.end() && it->first == t) {
            it->second = it->second + scaled;
            if (it->second.is_zero()) irr_.erase(it);
        } else {
            irr_.insert(it, {t, scaled});
        }
    }
}

UnitPhase PhaseAccumulator::take() {
    UnitPhase p(r0_, std::move(irr_));
    r0_ = Rational();
    irr_ = {};
    return p;
}

ThetaData::ThetaData(int n, IrrationalBasis basis) : n_(n), basis_(std::move(basis)) {
    if (n < 1) throw InvalidInput("lattice dimension must be at least 1");
    lower_.resize(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
}

void ThetaData::set_lower_angle(int k, int j, const UnitPhase& angle) {
    if (!(0 <= j && j < k && k < n_)) throw InvalidInput("lower-triangular index (k, j) requires 0 <= j < k < n");
    for (const auto& [t, c] : angle.irrational_part()) {
        (void)c;
        if (t >= basis_.size()) throw InvalidInput("angle references an irrational basis element outside the basis");
    }
    lower_[static_cast<std::size_t>(index(k, j))] = angle;
}

const UnitPhase& ThetaData::lower_angle(int k, int j) const {
    if (!(0 <= j && j < k && k < n_)) throw InvalidInput("lower-triangular index (k, j) requires 0 <= j < k < n");
    return lower_[static_cast<std::size_t>(index(k, j))];
}

UnitPhase ThetaData::angle(int j, int k) const {
    if (j < 0 || k < 0 || j >= n_ || k >= n_) throw InvalidInput("theta index out of range");
    if (j == k) return UnitPhase();
    if (j > k) return lower_angle(j, k);
    return phase_conj(lower_angle(k, j));
}

bool ThetaData::has_irrational_entries() const {
    for (const auto& p : lower_)
        if (!p.irrational_part().empty()) return true;
    return false;
}

UnitPhase sigma(const ThetaData& theta, const LatticePoint& l, const LatticePoint& m) {
    const int n = theta.dimension();
    if (static_cast<int>(l.size()) != n || static_cast<int>(m.size()) != n)
        throw DimensionMismatch("sigma: point dimension does not match theta");
    PhaseAccumulator acc;
    for (int k = 1; k < n; ++k) {
        if (l[static_cast<std::size_t>(k)] == 0) continue;
        for (int j = 0; j < k; ++j) {
            if (m[static_cast<std::size_t>(j)] == 0) continue;
            const UnitPhase& ang = theta.lower_angle(k, j);
            if (ang.is_one()) continue;
            int128 e = static_cast<int128>(l[static_cast<std::size_t>(k)]) *
                       static_cast<int128>(m[static_cast<std::size_t>(j)]);
            acc.add_scaled(ang, e);
        }
    }
    return acc.take();
}

std::complex<double> sigma_value(const ThetaData& theta, const LatticePoint& l, const LatticePoint& m) {
    return to_complex(sigma(theta, l, m), theta.basis());
}

}  // namespace nct
