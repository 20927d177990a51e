#pragma once
// Exact arithmetic in Z_(2), the ring of rationals with odd denominator.
//
// Equivalence of integral representations over the 2-adic integers is decided
// by data of this kind: a matrix over Z_(2) is invertible iff its determinant
// is odd, and that is visible mod 2.  Working in the localization keeps every
// computation exact (no completions, no precision management) while proving
// exactly the same equivalences and decompositions.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace a4ring {

// 2-adic valuation of a nonzero mpq; may be negative for general rationals.
inline long val2_raw(const mpq_class& q) {
    if (q == 0) throw std::domain_error("val2_raw: zero has infinite valuation");
    return static_cast<long>(mpz_scan1(q.get_num().get_mpz_t(), 0)) -
           static_cast<long>(mpz_scan1(q.get_den().get_mpz_t(), 0));
}

class Local2Rational {
  public:
    Local2Rational() : v_(0) {}
    Local2Rational(long n) : v_(n) {}
    Local2Rational(const mpz_class& n) : v_(n) {}
    Local2Rational(long num, long den) : v_(num, den) { canon(); }
    explicit Local2Rational(const mpq_class& q) : v_(q) { canon(); }

    static Local2Rational from_mpq(const mpq_class& q) { return Local2Rational(q); }

    const mpq_class& mpq() const { return v_; }
    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }

    // nullopt encodes infinity (the valuation of zero)
    std::optional<long> val2() const {
        if (v_ == 0) return std::nullopt;
        return static_cast<long>(mpz_scan1(v_.get_num().get_mpz_t(), 0));
    }

    // residue in Z_(2)/2 = F2; odd denominators are units congruent to 1
    int parity() const { return v_ == 0 ? 0 : static_cast<int>(mpz_odd_p(v_.get_num().get_mpz_t())); }

    Local2Rational operator-() const { return raw(-v_); }
    Local2Rational& operator+=(const Local2Rational& o) { v_ += o.v_; return *this; }
    Local2Rational& operator-=(const Local2Rational& o) { v_ -= o.v_; return *this; }
    Local2Rational& operator*=(const Local2Rational& o) { v_ *= o.v_; return *this; }
    Local2Rational& operator/=(const Local2Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Local2Rational: division by zero");
        if (mpz_even_p(o.v_.get_num().get_mpz_t()))
            throw std::domain_error("Local2Rational: division by a non-unit (even numerator)");
        v_ /= o.v_;
        return *this;
    }

    friend Local2Rational operator+(Local2Rational a, const Local2Rational& b) { return a += b; }
    friend Local2Rational operator-(Local2Rational a, const Local2Rational& b) { return a -= b; }
    friend Local2Rational operator*(Local2Rational a, const Local2Rational& b) { return a *= b; }
    friend Local2Rational operator/(Local2Rational a, const Local2Rational& b) { return a /= b; }
    friend bool operator==(const Local2Rational& a, const Local2Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Local2Rational& a, const Local2Rational& b) { return a.v_ != b.v_; }

    // "p" for integers, "p/q" otherwise
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    static Local2Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Local2Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return Local2Rational(q);
    }

  private:
    // internal: trust that q is canonical and odd-denominator
    static Local2Rational raw(mpq_class q) {
        Local2Rational r;
        r.v_ = std::move(q);
        return r;
    }
    void canon() {
        v_.canonicalize();
        if (mpz_even_p(v_.get_den().get_mpz_t()))
            throw std::domain_error("Local2Rational: even denominator is not a unit in Z_(2)");
    }
    mpq_class v_;
};

inline std::optional<long> val2(const Local2Rational& x) { return x.val2(); }

}  // namespace a4ring
