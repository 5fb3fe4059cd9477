#ifndef ISOZERO_ALGNUM_HPP
#define ISOZERO_ALGNUM_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "isozero/interval.hpp"
#include "isozero/qpoly.hpp"

namespace isozero {

class FieldElement;
class NumberField;

namespace detail {
struct NumberFieldData {
    ZPoly minpoly;        // primitive over Z, lc > 0, irreducible
    QPoly minpoly_monic;  // minpoly / lc
    int degree = 0;
    int root_index = 0;   // canonical index of the distinguished root

    mutable std::mutex mu;
    mutable std::map<long, std::vector<RootBox>> root_cache;

    std::vector<RootBox> roots_at(long prec) const;
};
} // namespace detail

// A number field Q(theta) presented by the minimal polynomial of theta
// together with a distinguished (enclosed) complex root. Value type;
// sharing is by identity: two NumberField objects are "the same field"
// for arithmetic purposes only when they share the underlying data.
class NumberField {
public:
    NumberField() = default;

    int degree() const { return d_->degree; }
    const ZPoly& minpoly() const { return d_->minpoly; }
    const QPoly& minpoly_monic() const { return d_->minpoly_monic; }
    int root_index() const { return d_->root_index; }
    bool is_rational() const { return d_->degree == 1; }

    // all d conjugate roots, canonically ordered; index root_index() is theta
    std::vector<RootBox> embeddings(long prec) const { return d_->roots_at(prec); }
    CInt distinguished_root(long prec) const { return d_->roots_at(prec)[d_->root_index].box; }

    bool same_as(const NumberField& o) const { return d_ == o.d_; }
    bool valid() const { return d_ != nullptr; }

    FieldElement element(std::vector<mpq_class> coords) const;
    FieldElement from_rational(const mpq_class& q) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement theta() const;

private:
    std::shared_ptr<const detail::NumberFieldData> d_;
    explicit NumberField(std::shared_ptr<const detail::NumberFieldData> d) : d_(std::move(d)) {}
    friend NumberField nf_create(const QPoly&, int);
    friend NumberField nf_rationals();
    friend NumberField nf_from_irreducible(const ZPoly&, int);
};

// Create the field from (a factor of) the given polynomial: the input is
// factored over Q and the irreducible factor containing the root with the
// given index (roots of the squarefree part, numerically ordered) is used.
NumberField nf_create(const QPoly& minpoly, int root_index);
NumberField nf_rationals();
// Trusted constructor: poly must already be irreducible (primitive, lc > 0);
// root_index refers to its own canonically ordered roots.
NumberField nf_from_irreducible(const ZPoly& poly, int root_index);

class FieldElement {
public:
    FieldElement() = default;

    const NumberField& field() const { return K_; }
    const std::vector<mpq_class>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const; // lies in Q (all non-constant coords zero)
    mpq_class rational_value() const; // requires is_rational()

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement scale(const mpq_class& s) const;
    QPoly to_qpoly() const;

    // rigorous enclosure of the image under the j-th conjugate embedding
    CInt embed_numeric(int embedding_index, long prec) const;
    // distinguished embedding
    CInt embed0(long prec) const { return embed_numeric(K_.root_index(), prec); }

    std::string str() const;

private:
    NumberField K_;
    std::vector<mpq_class> c_;
    FieldElement(NumberField K, std::vector<mpq_class> c) : K_(std::move(K)), c_(std::move(c)) {}
    friend class NumberField;
};

inline FieldElement NumberField::zero() const { return from_rational(0); }
inline FieldElement NumberField::one() const { return from_rational(1); }

enum class FieldOp { add, sub, mul, div };
FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op);

// monic-up-to-content minimal polynomial over Q (primitive integer poly, lc > 0)
ZPoly minimal_polynomial(const FieldElement& a);

// exact norm N_{K/Q}(a), via the resultant of the minimal polynomial of the
// field with the representing polynomial
mpq_class field_norm(const FieldElement& a);

// An embedding of a field into an extension of it.
struct Extension {
    NumberField from;
    NumberField to;
    FieldElement theta_image; // image of from's generator in `to`
    FieldElement root;        // sqrt of the adjoined value, as element of `to`
    bool identity = false;    // `to` == `from` (value was already a square)

    FieldElement embed(const FieldElement& x) const;
};

// K(sqrt(a)). If a is already a square in K (decided by numeric
// reconstruction + exact verification) the identity extension is returned
// with `root` an exact square root.
Extension adjoin_sqrt(const NumberField& K, const FieldElement& a);

// A chain of square-root adjunctions over a base field, with lifting of
// elements from any intermediate level to the top.
class Tower {
public:
    explicit Tower(NumberField base) : base_(std::move(base)) {}

    const NumberField& top() const { return steps_.empty() ? base_ : steps_.back().to; }
    const NumberField& base() const { return base_; }
    const std::vector<Extension>& steps() const { return steps_; }

    // lift an element living at any level of the tower to the top
    FieldElement lift(const FieldElement& x) const;
    std::vector<FieldElement> lift(const std::vector<FieldElement>& xs) const;

    // adjoin sqrt(a) (a at top level); returns the root at the (possibly new) top
    FieldElement adjoin_sqrt_of(const FieldElement& a);

    // image of the base generator in the top field
    FieldElement base_theta_image() const;

private:
    NumberField base_;
    std::vector<Extension> steps_;
};

} // namespace isozero

#endif
