#ifndef ISOZERO_INTERVAL_HPP
#define ISOZERO_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace isozero {

// Closed real interval with mpfr endpoints and outward rounding.
// All operations round the lower endpoint down and the upper endpoint up,
// so the result always contains the exact image of the inputs.
class RInt {
public:
    explicit RInt(long prec = 128);
    RInt(const RInt& o);
    RInt(RInt&& o) noexcept;
    RInt& operator=(const RInt& o);
    RInt& operator=(RInt&& o) noexcept;
    ~RInt();

    static RInt from_q(const mpq_class& q, long prec);
    static RInt from_q(const mpq_class& lo, const mpq_class& hi, long prec);
    static RInt from_si(long v, long prec);
    static RInt zero(long prec) { return from_si(0, prec); }
    static RInt one(long prec) { return from_si(1, prec); }

    long prec() const { return prec_; }

    RInt operator+(const RInt& o) const;
    RInt operator-(const RInt& o) const;
    RInt operator*(const RInt& o) const;
    RInt operator/(const RInt& o) const; // requires 0 not in o
    RInt operator-() const;

    RInt square() const;             // tight: lower bound 0 when 0 is inside
    RInt sqrt() const;               // requires hi >= 0; lower clamped at 0
    RInt rootn(unsigned long n) const;
    RInt pow_si(long e) const;
    RInt pow_q(const mpq_class& e) const; // requires positive interval when e non-integral
    RInt abs() const;
    RInt max_with(const RInt& o) const;
    RInt max_with_one() const;

    RInt intersect(const RInt& o) const; // empty intersection -> error (internal)

    bool contains_zero() const;
    bool contains_q(const mpq_class& q) const;
    bool is_positive() const;  // lo > 0
    bool is_negative() const;  // hi < 0
    // definitely_le: every point of *this <= every point of o
    bool definitely_le(const RInt& o) const;
    bool definitely_lt(const RInt& o) const;
    bool disjoint_from(const RInt& o) const;

    mpq_class lo_q() const; // exact (mpfr values are dyadic)
    mpq_class hi_q() const;
    mpq_class mid_q() const;
    double width_d() const;
    mpq_class width_q() const;

    std::string str(int digits = 20) const;
    std::string lo_str(int digits) const; // rounded down
    std::string hi_str(int digits) const; // rounded up

private:
    mpfr_t lo_, hi_;
    long prec_;
    friend class CInt;
    friend RInt fma_acc(const RInt&, const RInt&, const RInt&);
};

// Rectangular complex interval (a box).
class CInt {
public:
    explicit CInt(long prec = 128) : re_(prec), im_(prec) {}
    CInt(RInt re, RInt im) : re_(std::move(re)), im_(std::move(im)) {}

    static CInt from_q(const mpq_class& re, const mpq_class& im, long prec);

    const RInt& re() const { return re_; }
    const RInt& im() const { return im_; }
    long prec() const { return re_.prec(); }

    CInt operator+(const CInt& o) const;
    CInt operator-(const CInt& o) const;
    CInt operator*(const CInt& o) const;
    CInt operator/(const CInt& o) const; // requires 0 not in |o|
    CInt operator-() const;
    CInt conj() const;

    RInt abs() const;     // |z| enclosure
    RInt norm_sq() const; // re^2 + im^2

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool disjoint_from(const CInt& o) const;
    CInt intersect(const CInt& o) const;

    std::string str(int digits = 12) const;

private:
    RInt re_, im_;
};

} // namespace isozero

#endif
