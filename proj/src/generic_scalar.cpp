#include "qborel/generic_scalar.hpp"

#include <algorithm>
#include <ostream>

namespace qb {

void Laurent::trim() {
    size_t b = 0;
    while (b < coeff_.size() && coeff_[b] == 0) ++b;
    size_t e = coeff_.size();
    while (e > b && coeff_[e - 1] == 0) --e;
    if (b == e) {
        coeff_.clear();
        low_ = 0;
        return;
    }
    if (b > 0) coeff_.erase(coeff_.begin(), coeff_.begin() + b);
    coeff_.resize(e - b);
    low_ += static_cast<int>(b);
}

Rational Laurent::coeff(int k) const {
    if (k < low_ || k > high()) return Rational(0);
    return coeff_[k - low_];
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    Laurent r;
    r.low_ = lo;
    r.coeff_.assign(hi - lo + 1, Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[low_ + i - lo] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) r.coeff_[o.low_ + i - lo] += o.coeff_[i];
    r.trim();
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (is_zero() || o.is_zero()) return Laurent();
    Laurent r;
    r.low_ = low_ + o.low_;
    r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t j = 0; j < o.coeff_.size(); ++j) {
            if (o.coeff_[j] == 0) continue;
            r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
        }
    }
    r.trim();
    return r;
}

Laurent Laurent::bar() const {
    if (is_zero()) return Laurent();
    Laurent r;
    r.coeff_.assign(coeff_.rbegin(), coeff_.rend());
    r.low_ = -high();
    return r;
}

CycScalar Laurent::at_root(const CycField& f) const {
    CycScalar s(f);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        s += CycScalar::zeta(f, low_ + static_cast<long>(i)) * coeff_[i];
    }
    return s;
}

namespace {

// Ordinary polynomial view (coeff vectors indexed from 0), monic remainder gcd.
using PVec = std::vector<Rational>;

int pdeg(const PVec& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

PVec pmod(PVec a, const PVec& b) {
    int db = pdeg(b);
    for (int da = pdeg(a); da >= db && da >= 0; da = pdeg(a)) {
        Rational c = a[da] / b[db];
        for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    }
    return a;
}

PVec to_pvec(const Laurent& p) {
    // strips the v-power: polynomial with nonzero constant term
    return PVec(p.raw().begin(), p.raw().end());
}

Laurent from_pvec(const PVec& p) {
    Laurent r;
    int d = pdeg(p);
    if (d < 0) return r;
    Laurent acc;
    for (int i = 0; i <= d; ++i)
        if (p[i] != 0) acc += Laurent::v_power(i) * Laurent(p[i]);
    return acc;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    PVec x = to_pvec(a), y = to_pvec(b);
    while (pdeg(y) >= 0) {
        PVec r = pmod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    int d = pdeg(x);
    Rational lead = x[d];
    for (auto& c : x) c /= lead;
    return from_pvec(x);
}

Laurent Laurent::divexact(const Laurent& dpoly) const {
    if (is_zero()) return Laurent();
    PVec a = to_pvec(*this), b = to_pvec(dpoly);
    int db = pdeg(b);
    PVec q(a.size(), Rational(0));
    for (int da = pdeg(a); da >= db && da >= 0; da = pdeg(a)) {
        Rational c = a[da] / b[db];
        q[da - db] = c;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    }
    if (pdeg(a) >= 0) throw EngineError("laurent division not exact");
    Laurent r = from_pvec(q);
    return r * Laurent::v_power(low_ - dpoly.low_);
}

GenericScalar::GenericScalar(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
    if (d.is_zero()) throw DomainError("zero denominator");
    reduce();
}

void GenericScalar::reduce() {
    if (num_.is_zero()) {
        den_ = Laurent(Rational(1));
        return;
    }
    Laurent g = Laurent::gcd(num_, den_);
    // gcd ignores v powers; divide them out and normalize the denominator to a
    // monic polynomial with nonzero constant term.
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
    // shift denominator v-power into numerator
    int dl = den_.low();
    if (dl != 0) {
        den_ = den_ * Laurent::v_power(-dl);
        num_ = num_ * Laurent::v_power(-dl);
    }
    Rational lead = den_.raw().back();
    if (lead != 1) {
        Laurent scale(Rational(1) / lead);
        den_ = den_ * scale;
        num_ = num_ * scale;
    }
}

GenericScalar GenericScalar::operator-() const {
    GenericScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

GenericScalar GenericScalar::operator+(const GenericScalar& o) const {
    GenericScalar r;
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

GenericScalar GenericScalar::operator-(const GenericScalar& o) const { return *this + (-o); }

GenericScalar GenericScalar::operator*(const GenericScalar& o) const {
    GenericScalar r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

GenericScalar GenericScalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(v)");
    GenericScalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

GenericScalar GenericScalar::operator/(const GenericScalar& o) const { return *this * o.inverse(); }

GenericScalar GenericScalar::bar() const {
    GenericScalar r;
    r.num_ = num_.bar();
    r.den_ = den_.bar();
    r.reduce();
    return r;
}

CycScalar GenericScalar::specialize(const CycField& f) const {
    CycScalar d = den_.at_root(f);
    if (d.is_zero()) throw SpecializationPole("denominator vanishes at the chosen root of unity");
    CycScalar n = num_.at_root(f);
    return n * d.inverse();
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (size_t i = 0; i < p.raw().size(); ++i) {
        if (p.raw()[i] == 0) continue;
        if (!first) os << " + ";
        os << p.raw()[i];
        int e = p.low() + static_cast<int>(i);
        if (e != 0) os << "*v^" << e;
        first = false;
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, const GenericScalar& s) {
    os << "(" << s.num_ << ")";
    if (!s.is_polynomial()) os << "/(" << s.den_ << ")";
    return os;
}

}  // namespace qb
