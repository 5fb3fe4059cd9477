#include "isozero/interval.hpp"

#include "isozero/errors.hpp"

#include <algorithm>
#include <cstring>

namespace isozero {

RInt::RInt(long prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RInt::RInt(const RInt& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RInt::RInt(RInt&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RInt& RInt::operator=(const RInt& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

RInt& RInt::operator=(RInt&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RInt::~RInt() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RInt RInt::from_q(const mpq_class& q, long prec) {
    RInt r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RInt RInt::from_q(const mpq_class& lo, const mpq_class& hi, long prec) {
    RInt r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

RInt RInt::from_si(long v, long prec) {
    RInt r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RInt RInt::operator+(const RInt& o) const {
    RInt r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RInt RInt::operator-(const RInt& o) const {
    RInt r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RInt RInt::operator-() const {
    RInt r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RInt RInt::operator*(const RInt& o) const {
    RInt r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lower: min of the four endpoint products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    // upper: max of the four rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInt RInt::operator/(const RInt& o) const {
    if (o.contains_zero()) raise(errc::internal, "interval division by interval containing zero");
    RInt r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInt RInt::square() const {
    RInt r(prec_);
    if (contains_zero()) {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t a, b;
        mpfr_init2(a, prec_);
        mpfr_init2(b, prec_);
        mpfr_sqr(a, lo_, MPFR_RNDU);
        mpfr_sqr(b, hi_, MPFR_RNDU);
        mpfr_max(r.hi_, a, b, MPFR_RNDU);
        mpfr_clear(a);
        mpfr_clear(b);
    } else if (mpfr_sgn(lo_) > 0) {
        mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
    } else {
        mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
        mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
    }
    return r;
}

RInt RInt::sqrt() const {
    if (mpfr_sgn(hi_) < 0) raise(errc::internal, "sqrt of negative interval");
    RInt r(prec_);
    if (mpfr_sgn(lo_) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInt RInt::rootn(unsigned long n) const {
    if (mpfr_sgn(lo_) < 0) raise(errc::internal, "rootn of interval with negative part");
    RInt r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

RInt RInt::pow_si(long e) const {
    if (e == 0) return one(prec_);
    if (e < 0) return one(prec_) / pow_si(-e);
    // exponentiation by squaring over intervals
    RInt base = *this;
    RInt acc = one(prec_);
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) acc = acc * base;
        u >>= 1;
        if (u) base = base.square().intersect(base * base); // square() is tighter around 0
    }
    return acc;
}

RInt RInt::pow_q(const mpq_class& e) const {
    mpq_class ee(e);
    ee.canonicalize();
    if (ee.get_den() == 1) {
        if (!ee.get_num().fits_slong_p()) raise(errc::internal, "pow_q exponent too large");
        return pow_si(ee.get_num().get_si());
    }
    if (!is_positive()) raise(errc::internal, "fractional power of non-positive interval");
    if (!ee.get_num().fits_slong_p() || !ee.get_den().fits_ulong_p())
        raise(errc::internal, "pow_q exponent out of range");
    long num = ee.get_num().get_si();
    unsigned long den = ee.get_den().get_ui();
    return pow_si(num).rootn(den);
}

RInt RInt::abs() const {
    RInt r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_neg(t, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, t, hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInt RInt::max_with(const RInt& o) const {
    RInt r(std::max(prec_, o.prec_));
    mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RInt RInt::max_with_one() const { return max_with(one(prec_)); }

RInt RInt::intersect(const RInt& o) const {
    RInt r(std::max(prec_, o.prec_));
    mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(r.lo_, r.hi_) > 0) raise(errc::internal, "empty interval intersection");
    return r;
}

bool RInt::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool RInt::contains_q(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool RInt::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool RInt::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool RInt::definitely_le(const RInt& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
bool RInt::definitely_lt(const RInt& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

bool RInt::disjoint_from(const RInt& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0 || mpfr_cmp(o.hi_, lo_) < 0;
}

mpq_class RInt::lo_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

mpq_class RInt::hi_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

mpq_class RInt::mid_q() const { return (lo_q() + hi_q()) / 2; }

double RInt::width_d() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double w = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return w;
}

mpq_class RInt::width_q() const { return hi_q() - lo_q(); }

static std::string mpfr_to_decimal(const mpfr_t v, int digits, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(v)) return "0";
    char* s = nullptr;
    mpfr_exp_t e;
    s = mpfr_get_str(nullptr, &e, 10, digits, v, rnd);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string dig = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    out += "0." + dig + "e" + std::to_string(static_cast<long>(e));
    return out;
}

std::string RInt::lo_str(int digits) const { return mpfr_to_decimal(lo_, digits, MPFR_RNDD); }
std::string RInt::hi_str(int digits) const { return mpfr_to_decimal(hi_, digits, MPFR_RNDU); }

std::string RInt::str(int digits) const {
    return "[" + lo_str(digits) + ", " + hi_str(digits) + "]";
}

// ---------------------------------------------------------------------------

CInt CInt::from_q(const mpq_class& re, const mpq_class& im, long prec) {
    return CInt(RInt::from_q(re, prec), RInt::from_q(im, prec));
}

CInt CInt::operator+(const CInt& o) const { return CInt(re_ + o.re_, im_ + o.im_); }
CInt CInt::operator-(const CInt& o) const { return CInt(re_ - o.re_, im_ - o.im_); }
CInt CInt::operator-() const { return CInt(-re_, -im_); }
CInt CInt::conj() const { return CInt(re_, -im_); }

CInt CInt::operator*(const CInt& o) const {
    return CInt(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

CInt CInt::operator/(const CInt& o) const {
    RInt n = o.norm_sq();
    if (n.contains_zero()) raise(errc::internal, "complex interval division by box containing zero");
    CInt num = *this * o.conj();
    return CInt(num.re() / n, num.im() / n);
}

RInt CInt::norm_sq() const { return re_.square() + im_.square(); }
RInt CInt::abs() const { return norm_sq().sqrt(); }

bool CInt::disjoint_from(const CInt& o) const {
    return re_.disjoint_from(o.re()) || im_.disjoint_from(o.im());
}

CInt CInt::intersect(const CInt& o) const {
    return CInt(re_.intersect(o.re()), im_.intersect(o.im()));
}

std::string CInt::str(int digits) const {
    return re_.str(digits) + " + " + im_.str(digits) + " i";
}

} // namespace isozero
