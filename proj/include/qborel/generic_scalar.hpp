#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

#include "qborel/cyclotomic.hpp"
#include "qborel/errors.hpp"

namespace qb {

// Laurent polynomial in a formal parameter v with rational coefficients.
class Laurent {
  public:
    Laurent() : low_(0) {}
    explicit Laurent(const Rational& c) : low_(0) {
        if (c != 0) coeff_.push_back(c);
    }
    explicit Laurent(long n) : Laurent(Rational(n)) {}

    static Laurent v_power(int k) {
        Laurent p;
        p.low_ = k;
        p.coeff_.push_back(1);
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeff_.size()) - 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& raw() const { return coeff_; }

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { *this = *this + o; return *this; }
    Laurent& operator-=(const Laurent& o) { *this = *this - o; return *this; }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    bool operator==(const Laurent& o) const { return low_ == o.low_ && coeff_ == o.coeff_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // v -> 1/v
    Laurent bar() const;
    // Exact value at v = zeta_l.
    CycScalar at_root(const CycField& f) const;

    // gcd of the polynomial parts (monic), ignoring powers of v.
    static Laurent gcd(const Laurent& a, const Laurent& b);
    // Exact division (throws EngineError if not exact).
    Laurent divexact(const Laurent& d) const;

    friend std::ostream& operator<<(std::ostream& os, const Laurent& p);

  private:
    void trim();
    int low_;                      // exponent of the first stored coefficient
    std::vector<Rational> coeff_;  // coeff_[i] multiplies v^{low_+i}; ends nonzero
};

// Element of Q(v): reduced fraction of Laurent polynomials.  The denominator
// is kept as a monic ordinary polynomial with nonzero constant term; v-powers
// are absorbed into the numerator.
class GenericScalar {
  public:
    GenericScalar() : num_(), den_(Rational(1)) {}
    GenericScalar(const Laurent& n) : num_(n), den_(Rational(1)) {}
    GenericScalar(const Rational& c) : num_(Laurent(c)), den_(Rational(1)) {}
    GenericScalar(long n) : num_(Laurent(n)), den_(Rational(1)) {}
    GenericScalar(const Laurent& n, const Laurent& d);

    static GenericScalar v_power(int k) { return GenericScalar(Laurent::v_power(k)); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Laurent(Rational(1)); }

    GenericScalar operator-() const;
    GenericScalar operator+(const GenericScalar& o) const;
    GenericScalar operator-(const GenericScalar& o) const;
    GenericScalar operator*(const GenericScalar& o) const;
    GenericScalar operator/(const GenericScalar& o) const;
    GenericScalar& operator+=(const GenericScalar& o) { *this = *this + o; return *this; }
    GenericScalar& operator-=(const GenericScalar& o) { *this = *this - o; return *this; }
    GenericScalar& operator*=(const GenericScalar& o) { *this = *this * o; return *this; }
    GenericScalar& operator/=(const GenericScalar& o) { *this = *this / o; return *this; }
    bool operator==(const GenericScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const GenericScalar& o) const { return !(*this == o); }

    GenericScalar inverse() const;
    // v -> 1/v
    GenericScalar bar() const;

    // Exact image under v -> zeta_l; throws SpecializationPole if the reduced
    // denominator vanishes there.
    CycScalar specialize(const CycField& f) const;

    friend std::ostream& operator<<(std::ostream& os, const GenericScalar& s);

  private:
    void reduce();
    Laurent num_, den_;
};

}  // namespace qb
