#ifndef ISOZERO_QPOLY_HPP
#define ISOZERO_QPOLY_HPP

#include <gmpxx.h>

#include <vector>

#include "isozero/interval.hpp"

namespace isozero {

// Dense univariate polynomial over Q, coefficients in ascending order.
// The zero polynomial has an empty coefficient vector.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
    static QPoly constant(const mpq_class& v);
    static QPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const mpq_class& operator[](int i) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& lc() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const mpq_class& s) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // division with remainder; divisor must be nonzero
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
    QPoly derivative() const;
    QPoly monic() const;
    QPoly shift_up(int k) const; // multiply by x^k

    mpq_class eval(const mpq_class& x) const;
    RInt eval(const RInt& x) const;
    CInt eval(const CInt& x) const;

    // gcd (monic), extended gcd: g = a*u + b*v with g monic
    static QPoly gcd(QPoly a, QPoly b);
    static QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& u, QPoly& v);

    mpq_class resultant(const QPoly& o) const;
    QPoly squarefree_part() const;

    std::string str() const;

private:
    std::vector<mpq_class> c_;
    void trim();
};

// Primitive integer polynomial utilities.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
    static ZPoly from_q(const QPoly& p); // clears denominators, makes primitive, lc > 0

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& operator[](int i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& lc() const;

    QPoly to_q() const;
    QPoly to_q_monic() const;

    mpz_class content() const;
    ZPoly primitive() const;

    int sign_at(const mpq_class& x) const; // exact sign of value at rational point
    RInt eval(const RInt& x) const;
    CInt eval(const CInt& x) const;

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }
    std::string str() const;

private:
    std::vector<mpz_class> c_;
    void trim();
};

// Factorization of a nonzero rational polynomial over Q.
// Returns the irreducible factors (primitive integer polynomials, lc > 0)
// with multiplicities; the rational unit is dropped. Degrees above 64 raise
// UnsupportedDegree.
struct QFactor {
    ZPoly poly;
    int multiplicity;
};
std::vector<QFactor> factor_over_q(const QPoly& p);
bool is_irreducible_over_q(const QPoly& p);

bool is_cyclotomic(const ZPoly& f); // all roots are roots of unity

// Certified complex roots of a squarefree integer polynomial.
// Boxes are pairwise disjoint, each contains exactly one root, real roots are
// flagged with exact-zero imaginary part, and the list is sorted canonically
// (by real part; ties by imaginary part, conjugates adjacent).
struct RootBox {
    CInt box;
    bool real;
};
std::vector<RootBox> isolate_roots(const ZPoly& f, long prec);
// canonical ordering predicate used by isolate_roots (requires disjoint boxes)
bool rootbox_before(const RootBox& a, const RootBox& b);
// Refine previously isolated boxes to higher precision (result boxes nest).
std::vector<RootBox> refine_roots(const ZPoly& f, const std::vector<RootBox>& boxes, long prec);

// Sturm: number of real roots in (a, b]
int sturm_count(const ZPoly& f, const mpq_class& a, const mpq_class& b);

} // namespace isozero

#endif
