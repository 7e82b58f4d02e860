#include "nct/weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace nct {

double lattice_norm(const LatticePoint& x, LatticeNorm norm) {
    switch (norm) {
        case LatticeNorm::l1: {
            double s = 0;
            for (std::int64_t c : x) s += std::abs(static_cast<double>(c));
            return s;
        }
        case LatticeNorm::l2: {
            double s = 0;
            for (std::int64_t c : x) {
                double d = static_cast<double>(c);
                s += d * d;
            }
            return std::sqrt(s);
        }
        case LatticeNorm::linf: {
            double m = 0;
            for (std::int64_t c : x) m = std::max(m, std::abs(static_cast<double>(c)));
            return m;
        }
    }
    return 0;
}

std::string lattice_norm_name(LatticeNorm norm) {
    switch (norm) {
        case LatticeNorm::l1: return "l1";
        case LatticeNorm::l2: return "l2";
        case LatticeNorm::linf: return "linf";
    }
    return "l2";
}

std::string grs_verdict_name(GrsVerdict v) {
    switch (v) {
        case GrsVerdict::holds: return "holds";
        case GrsVerdict::fails: return "fails";
        case GrsVerdict::no_analytic_verdict: return "no-analytic-verdict";
    }
    return "no-analytic-verdict";
}

Weight Weight::constant_one() {
    Weight w;
    w.kind_ = Kind::constant_one;
    return w;
}

Weight Weight::polynomial(double s, LatticeNorm norm) {
    if (!(s >= 0)) throw InvalidInput("polynomial weight requires s >= 0");
    Weight w;
    w.kind_ = Kind::polynomial;
    w.s_ = s;
    w.norm_ = norm;
    return w;
}

Weight Weight::subexponential(double a, double b, LatticeNorm norm) {
    if (!(a > 0)) throw InvalidInput("subexponential weight requires a > 0");
    if (!(b > 0 && b < 1)) throw InvalidInput("subexponential weight requires 0 < b < 1");
    Weight w;
    w.kind_ = Kind::subexponential;
    w.a_ = a;
    w.b_ = b;
    w.norm_ = norm;
    return w;
}

Weight Weight::exponential(double a, LatticeNorm norm) {
    if (!(a > 0)) throw InvalidInput("exponential weight requires a > 0");
    Weight w;
    w.kind_ = Kind::exponential;
    w.a_ = a;
    w.norm_ = norm;
    return w;
}

Weight Weight::product(std::vector<Weight> factors) {
    if (factors.empty()) throw InvalidInput("product weight requires at least one factor");
    Weight w;
    w.kind_ = Kind::product;
    for (auto& f : factors) {
        if (f.kind_ == Kind::product) {
            for (auto& g : f.factors_) w.factors_.push_back(std::move(g));
        } else {
            w.factors_.push_back(std::move(f));
        }
    }
    return w;
}

Weight Weight::custom_table(std::map<LatticePoint, double> table, std::optional<Weight> fallback) {
    for (const auto& [x, v] : table) {
        (void)x;
        if (!(v > 0)) throw InvalidInput("custom weight table values must be positive");
    }
    Weight w;
    w.kind_ = Kind::custom;
    w.table_ = std::move(table);
    w.fallback_ = std::make_shared<Weight>(fallback ? std::move(*fallback) : constant_one());
    return w;
}

double Weight::value(const LatticePoint& x) const {
    switch (kind_) {
        case Kind::constant_one: return 1.0;
        case Kind::polynomial: return std::pow(1.0 + lattice_norm(x, norm_), s_);
        case Kind::subexponential: return std::exp(a_ * std::pow(lattice_norm(x, norm_), b_));
        case Kind::exponential: return std::exp(a_ * lattice_norm(x, norm_));
        case Kind::product: {
            double p = 1.0;
            for (const auto& f : factors_) p *= f.value(x);
            return p;
        }
        case Kind::custom: {
            auto it = table_.find(x);
            if (it != table_.end()) return it->second;
            return fallback_->value(x);
        }
    }
    return 1.0;
}

double Weight::log_value(const LatticePoint& x) const {
    switch (kind_) {
        case Kind::constant_one: return 0.0;
        case Kind::polynomial: return s_ * std::log1p(lattice_norm(x, norm_));
        case Kind::subexponential: return a_ * std::pow(lattice_norm(x, norm_), b_);
        case Kind::exponential: return a_ * lattice_norm(x, norm_);
        case Kind::product: {
            double s = 0.0;
            for (const auto& f : factors_) s += f.log_value(x);
            return s;
        }
        case Kind::custom: return std::log(value(x));
    }
    return 0.0;
}

GrsVerdict Weight::grs_verdict() const {
    switch (kind_) {
        case Kind::constant_one:
        case Kind::polynomial:
        case Kind::subexponential: return GrsVerdict::holds;
        case Kind::exponential: return GrsVerdict::fails;
        case Kind::product: {
            bool unknown = false;
            for (const auto& f : factors_) {
                GrsVerdict v = f.grs_verdict();
                if (v == GrsVerdict::fails) return GrsVerdict::fails;
                if (v == GrsVerdict::no_analytic_verdict) unknown = true;
            }
            return unknown ? GrsVerdict::no_analytic_verdict : GrsVerdict::holds;
        }
        case Kind::custom: return GrsVerdict::no_analytic_verdict;
    }
    return GrsVerdict::no_analytic_verdict;
}

double Weight::grs_limit(const LatticePoint& x) const {
    switch (grs_verdict()) {
        case GrsVerdict::holds: return 1.0;
        case GrsVerdict::no_analytic_verdict: return std::numeric_limits<double>::quiet_NaN();
        case GrsVerdict::fails: break;
    }
    // limits of the factors multiply; only exponential factors exceed 1
    if (kind_ == Kind::exponential) return std::exp(a_ * lattice_norm(x, norm_));
    double lim = 1.0;
    for (const auto& f : factors_) {
        GrsVerdict v = f.grs_verdict();
        if (v == GrsVerdict::fails) lim *= f.grs_limit(x);
    }
    return lim;
}

std::string Weight::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::constant_one: os << "constant-one"; break;
        case Kind::polynomial: os << "polynomial(s=" << s_ << "," << lattice_norm_name(norm_) << ")"; break;
        case Kind::subexponential:
            os << "subexponential(a=" << a_ << ",b=" << b_ << "," << lattice_norm_name(norm_) << ")";
            break;
        case Kind::exponential: os << "exponential(a=" << a_ << "," << lattice_norm_name(norm_) << ")"; break;
        case Kind::product: {
            os << "product(";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) os << "*";
                os << factors_[i].describe();
            }
            os << ")";
            break;
        }
        case Kind::custom: os << "custom(table=" << table_.size() << ",fallback=" << fallback_->describe() << ")"; break;
    }
    return os.str();
}

void Weight::collect_table_keys(std::vector<LatticePoint>& out) const {
    if (kind_ == Kind::custom) {
        for (const auto& [x, v] : table_) {
            (void)v;
            out.push_back(x);
        }
        fallback_->collect_table_keys(out);
    } else if (kind_ == Kind::product) {
        for (const auto& f : factors_) f.collect_table_keys(out);
    }
}

GrsProfile grs_profile(const Weight& v, const LatticePoint& x, int n_max) {
    if (lp_is_zero(x)) throw InvalidInput("grs_profile requires x != 0");
    if (n_max < 1) throw InvalidInput("grs_profile requires n_max >= 1");
    GrsProfile p;
    p.values.reserve(static_cast<std::size_t>(n_max));
    for (int k = 1; k <= n_max; ++k)
        p.values.push_back(std::exp(v.log_value(lp_scaled(x, k)) / static_cast<double>(k)));
    p.verdict = v.grs_verdict();
    p.limit = v.grs_limit(x);
    return p;
}

namespace {

constexpr double kAxiomSlack = 1e-12;

void test_pair(const Weight& v, const LatticePoint& x, const LatticePoint& y, WeightAxiomReport& report) {
    double vx = v.value(x);
    double vy = v.value(y);
    double vxy = v.value(lp_add(x, y));
    if (vxy > vx * vy * (1.0 + kAxiomSlack)) {
        ++report.violations_found;
        if (report.witnesses.size() < 16)
            report.witnesses.push_back({"submultiplicative", x, y, vxy, vx * vy});
    }
}

void test_symmetry(const Weight& v, const LatticePoint& x, WeightAxiomReport& report) {
    double vx = v.value(x);
    double vmx = v.value(lp_neg(x));
    if (std::abs(vx - vmx) > kAxiomSlack * std::max(std::abs(vx), std::abs(vmx))) {
        ++report.violations_found;
        if (report.witnesses.size() < 16) report.witnesses.push_back({"symmetric", x, {}, vx, vmx});
    }
}

}  // namespace

WeightAxiomReport check_axioms(const Weight& v, int dimension, long trials, std::int64_t box,
                               std::uint64_t seed) {
    if (dimension < 1) throw InvalidInput("check_axioms requires dimension >= 1");
    if (trials < 1) throw InvalidInput("check_axioms requires trials >= 1");
    if (box < 1) throw InvalidInput("check_axioms requires box >= 1");

    WeightAxiomReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-box, box);
    auto random_point = [&] {
        LatticePoint p(static_cast<std::size_t>(dimension));
        for (auto& c : p) c = coord(rng);
        return p;
    };

    for (long t = 0; t < trials; ++t) {
        LatticePoint x = random_point();
        LatticePoint y = random_point();
        test_pair(v, x, y, report);
        test_symmetry(v, x, report);
        ++report.trials;
    }

    // custom tables are small and the interesting breakage lives exactly
    // there, so sweep all key pairs deterministically
    std::vector<LatticePoint> keys;
    v.collect_table_keys(keys);
    if (!keys.empty() && keys.size() * keys.size() <= 1000000) {
        for (const auto& x : keys) {
            if (static_cast<int>(x.size()) != dimension) continue;
            test_symmetry(v, x, report);
            ++report.trials;
            for (const auto& y : keys) {
                if (static_cast<int>(y.size()) != dimension) continue;
                test_pair(v, x, y, report);
                ++report.trials;
            }
        }
    }
    return report;
}

}  // namespace nct
