#include "qborel/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>

namespace qb {

namespace {

// Exact division of integer polynomials (a = q*b, b monic or with lead dividing).
std::vector<mpz_class> poly_divexact(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r = a;
    std::vector<mpz_class> q(a.size() - b.size() + 1);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        mpz_class c = r[i + b.size() - 1] / b.back();
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
    }
    for (const auto& c : r)
        if (c != 0) throw EngineError("cyclotomic polynomial division not exact");
    return q;
}

std::vector<mpz_class> cyclotomic_poly(int n, std::map<int, std::vector<mpz_class>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::vector<mpz_class> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_divexact(num, cyclotomic_poly(d, cache));
    cache[n] = num;
    return num;
}

}  // namespace

CycField::CycField(int l) : l_(l) {
    if (l < 3 || l % 2 == 0) throw ConfigError("root-of-unity order must be odd and >= 3");
    std::map<int, std::vector<mpz_class>> cache;
    phi_ = cyclotomic_poly(l, cache);
    deg_ = static_cast<int>(phi_.size()) - 1;

    // x^k mod Phi_l for k < 2*deg-1.
    red_.resize(2 * deg_ - 1);
    for (int k = 0; k < deg_; ++k) {
        red_[k].assign(deg_, Rational(0));
        red_[k][k] = 1;
    }
    for (int k = deg_; k < 2 * deg_ - 1; ++k) {
        // x^k = x * x^{k-1}; shift then reduce the overflow term.
        std::vector<Rational> v(deg_, Rational(0));
        const auto& prev = red_[k - 1];
        Rational top = prev[deg_ - 1];
        for (int i = deg_ - 1; i >= 1; --i) v[i] = prev[i - 1];
        v[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg_; ++i) v[i] -= top * Rational(phi_[i]);
        red_[k] = std::move(v);
    }

    zpow_.resize(l_);
    for (int k = 0; k < l_; ++k) {
        if (k < deg_) {
            zpow_[k] = red_[k];
        } else if (k < 2 * deg_ - 1) {
            zpow_[k] = red_[k];
        } else {
            // zeta^k = zeta * zeta^{k-1}
            const auto& prev = zpow_[k - 1];
            std::vector<Rational> conv(deg_ + 1, Rational(0));
            for (int i = 0; i < deg_; ++i) conv[i + 1] = prev[i];
            std::vector<Rational> v(deg_, Rational(0));
            for (int i = 0; i <= deg_; ++i)
                if (conv[i] != 0)
                    for (int j = 0; j < deg_; ++j) v[j] += conv[i] * red_[i][j];
            zpow_[k] = std::move(v);
        }
    }
}

const std::vector<Rational>& CycField::zeta_power(long k) const {
    long m = k % l_;
    if (m < 0) m += l_;
    return zpow_[m];
}

const CycField& CycField::get(int l) {
    static std::mutex mu;
    static std::map<int, CycField> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fields.find(l);
    if (it == fields.end()) it = fields.emplace(l, CycField(l)).first;
    return it->second;
}

CycScalar CycScalar::zeta(const CycField& f, long k) {
    CycScalar s(f);
    s.c_ = f.zeta_power(k);
    return s;
}

CycScalar CycScalar::from_coeffs(const CycField& f, std::vector<Rational> c) {
    if (static_cast<int>(c.size()) != f.degree()) throw DomainError("coefficient vector has wrong length");
    CycScalar s(f);
    s.c_ = std::move(c);
    return s;
}

bool CycScalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    const int d = f_->degree();
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    CycScalar r(*f_);
    for (int k = 0; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = f_->power_reduction(k);
        for (int j = 0; j < d; ++j)
            if (row[j] != 0) r.c_[j] += conv[k] * row[j];
    }
    return r;
}

CycScalar CycScalar::operator*(const Rational& r) const {
    CycScalar s = *this;
    for (auto& x : s.c_) x *= r;
    return s;
}

namespace {

using Poly = std::vector<Rational>;

int pdeg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// r = a mod b, q accumulated implicitly; also tracks Bezout coefficient u with
// u*orig_a = a (mod phi-chain usage below keeps it simple).
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
    int db = pdeg(b);
    q.assign(a.size(), Rational(0));
    for (int da = pdeg(a); da >= db && da >= 0; da = pdeg(a)) {
        Rational c = a[da] / b[db];
        q[da - db] += c;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    }
    r = std::move(a);
}

}  // namespace

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero in cyclotomic field");
    const int d = f_->degree();
    // Extended Euclid over Q[x]: find u with u*this == 1 (mod Phi_l).
    Poly r0(d + 1, Rational(0)), r1(c_.begin(), c_.end());
    r1.resize(d + 1, Rational(0));
    {
        // r0 = Phi_l as rational poly
        for (int k = 0; k <= d; ++k) r0[k] = 0;
        // reconstruct Phi_l from the reduction rows: x^d = -sum phi_i x^i with phi monic
        // power_reduction(d) = x^d mod Phi => Phi = x^d - red(d)
        r0[d] = 1;
        const auto& red = f_->power_reduction(d);
        for (int i = 0; i < d; ++i) r0[i] = -red[i];
    }
    Poly s0(d + 1, Rational(0)), s1(d + 1, Rational(0));
    s1[0] = 1;  // s tracks coefficient of `this`
    while (pdeg(r1) > 0) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        // s_new = s0 - q*s1
        Poly snew(2 * d + 2, Rational(0));
        for (int i = 0; i <= 2 * d + 1; ++i) snew[i] = i < static_cast<int>(s0.size()) ? s0[i] : Rational(0);
        for (int i = 0; i <= pdeg(q); ++i) {
            if (q[i] == 0) continue;
            for (int j = 0; j <= pdeg(s1); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        snew.resize(2 * d + 2, Rational(0));
        s1 = std::move(snew);
    }
    if (pdeg(r1) != 0) throw DomainError("element not invertible modulo the cyclotomic polynomial");
    Rational lead = r1[0];
    // inverse = s1 / lead, reduced mod Phi_l
    CycScalar inv(*f_);
    for (int i = 0; i <= pdeg(s1); ++i) {
        if (s1[i] == 0) continue;
        Rational c = s1[i] / lead;
        if (i < d) {
            inv.c_[i] += c;
        } else {
            const auto& row = f_->zeta_power(i);
            for (int j = 0; j < d; ++j) inv.c_[j] += c * row[j];
        }
    }
    return inv;
}

int CycScalar::zeta_log() const {
    for (int k = 0; k < f_->order(); ++k)
        if (c_ == f_->zeta_power(k)) return k;
    return -1;
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) {
    bool first = true;
    for (size_t i = 0; i < s.c_.size(); ++i) {
        if (s.c_[i] == 0) continue;
        if (!first) os << " + ";
        os << s.c_[i];
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os;
}

}  // namespace qb
