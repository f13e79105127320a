#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

#include "qborel/errors.hpp"

namespace qb {

using Rational = mpq_class;

// Arithmetic context for Q(zeta_l), zeta_l a primitive l-th root of unity,
// l odd >= 3 (composite l allowed).  Elements are reduced modulo the l-th
// cyclotomic polynomial, so equal scalars have identical coefficient vectors.
class CycField {
  public:
    explicit CycField(int l);

    int order() const { return l_; }
    int degree() const { return deg_; }

    // x^k mod Phi_l for 0 <= k < 2*deg-1 (enough for products of reduced reps).
    const std::vector<Rational>& power_reduction(int k) const { return red_[k]; }

    // zeta^k for any integer k, as a reduced coefficient vector.
    const std::vector<Rational>& zeta_power(long k) const;

    // Shared per-order instances.
    static const CycField& get(int l);

  private:
    int l_;
    int deg_;
    std::vector<mpz_class> phi_;                 // cyclotomic polynomial, monic, degree deg_
    std::vector<std::vector<Rational>> red_;     // x^k mod Phi_l
    std::vector<std::vector<Rational>> zpow_;    // zeta^0..zeta^{l-1}
};

class CycScalar {
  public:
    CycScalar() : f_(nullptr) {}
    explicit CycScalar(const CycField& f) : f_(&f), c_(f.degree()) {}
    CycScalar(const CycField& f, const Rational& r) : f_(&f), c_(f.degree()) { c_[0] = r; }
    CycScalar(const CycField& f, long n) : f_(&f), c_(f.degree()) { c_[0] = n; }

    static CycScalar zero(const CycField& f) { return CycScalar(f); }
    static CycScalar one(const CycField& f) { return CycScalar(f, 1); }
    // zeta^k
    static CycScalar zeta(const CycField& f, long k);
    static CycScalar from_coeffs(const CycField& f, std::vector<Rational> c);

    const CycField& field() const { return *f_; }
    int order() const { return f_->order(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar operator+(const CycScalar& o) const { CycScalar r = *this; r += o; return r; }
    CycScalar operator-(const CycScalar& o) const { CycScalar r = *this; r -= o; return r; }
    CycScalar operator*(const CycScalar& o) const;
    CycScalar& operator*=(const CycScalar& o) { *this = *this * o; return *this; }
    CycScalar operator*(const Rational& r) const;
    // Multiplicative inverse; throws DomainError on zero.
    CycScalar inverse() const;
    CycScalar operator/(const CycScalar& o) const { return *this * o.inverse(); }

    bool operator==(const CycScalar& o) const { return c_ == o.c_; }
    bool operator!=(const CycScalar& o) const { return !(*this == o); }
    bool operator<(const CycScalar& o) const { return c_ < o.c_; }

    // If *this == zeta^k for some k in [0,l), returns k, else -1.
    int zeta_log() const;

    friend std::ostream& operator<<(std::ostream& os, const CycScalar& s);

  private:
    const CycField* f_;
    std::vector<Rational> c_;
};

}  // namespace qb
