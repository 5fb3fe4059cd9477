#include "isozero/algnum.hpp"

#include "isozero/errors.hpp"
#include "isozero/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace isozero {

// ----------------------------------------------------------- NumberFieldData

namespace detail {

std::vector<RootBox> NumberFieldData::roots_at(long prec) const {
    std::lock_guard<std::mutex> lk(mu);
    auto it = root_cache.lower_bound(prec);
    if (it != root_cache.end()) return it->second;
    std::vector<RootBox> cur;
    if (root_cache.empty()) {
        cur = isolate_roots(minpoly, 128);
        root_cache[128] = cur;
        if (prec <= 128) return cur;
    } else {
        cur = root_cache.rbegin()->second;
    }
    cur = refine_roots(minpoly, cur, prec);
    root_cache[prec] = cur;
    return cur;
}

} // namespace detail

// --------------------------------------------------------------- NumberField

NumberField nf_from_irreducible(const ZPoly& poly, int root_index) {
    if (poly.degree() < 1) raise(errc::zero_polynomial, "field polynomial must be nonconstant");
    if (root_index < 0 || root_index >= poly.degree())
        raise(errc::root_index_out_of_range, "root index " + std::to_string(root_index));
    auto d = std::make_shared<detail::NumberFieldData>();
    d->minpoly = poly;
    d->minpoly_monic = poly.to_q_monic();
    d->degree = poly.degree();
    d->root_index = root_index;
    return NumberField(std::move(d));
}

NumberField nf_rationals() {
    return nf_from_irreducible(ZPoly(std::vector<mpz_class>{0, 1}), 0);
}

NumberField nf_create(const QPoly& minpoly, int root_index) {
    if (minpoly.is_zero() || minpoly.degree() < 1)
        raise(errc::zero_polynomial, "nf_create requires a nonconstant polynomial");
    auto factors = factor_over_q(minpoly);
    // collect roots of the distinct irreducible factors and order them globally
    struct Entry {
        RootBox box;
        size_t factor;
        int within;
    };
    std::vector<ZPoly> polys;
    for (const auto& f : factors) {
        bool seen = false;
        for (const auto& p : polys)
            if (p == f.poly) seen = true;
        if (!seen) polys.push_back(f.poly);
    }
    long prec = 128;
    std::vector<Entry> entries;
    for (int attempt = 0;; ++attempt, prec *= 2) {
        entries.clear();
        std::vector<std::vector<RootBox>> all;
        for (const auto& p : polys) all.push_back(p.degree() >= 1 ? isolate_roots(p, prec)
                                                                  : std::vector<RootBox>{});
        for (size_t f = 0; f < polys.size(); ++f)
            for (size_t i = 0; i < all[f].size(); ++i)
                entries.push_back({all[f][i], f, static_cast<int>(i)});
        bool disjoint = true;
        for (size_t i = 0; i < entries.size() && disjoint; ++i)
            for (size_t j = i + 1; j < entries.size() && disjoint; ++j)
                if (entries[i].factor != entries[j].factor &&
                    !entries[i].box.box.disjoint_from(entries[j].box.box))
                    disjoint = false;
        if (disjoint) break;
        if (attempt > 10) raise(errc::internal, "could not separate roots of distinct factors");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return rootbox_before(a.box, b.box); });
    if (root_index < 0 || root_index >= static_cast<int>(entries.size()))
        raise(errc::root_index_out_of_range,
              "root index " + std::to_string(root_index) + " of " + std::to_string(entries.size()));
    const Entry& e = entries[root_index];
    return nf_from_irreducible(polys[e.factor], e.within);
}

FieldElement NumberField::element(std::vector<mpq_class> coords) const {
    if (static_cast<int>(coords.size()) != degree())
        raise(errc::dimension_mismatch, "coordinate vector length != field degree");
    return FieldElement(*this, std::move(coords));
}

FieldElement NumberField::from_rational(const mpq_class& q) const {
    std::vector<mpq_class> c(degree(), mpq_class(0));
    c[0] = q;
    return FieldElement(*this, std::move(c));
}

FieldElement NumberField::theta() const {
    std::vector<mpq_class> c(degree(), mpq_class(0));
    if (degree() == 1) {
        // minpoly a x - b presents theta = b/a
        c[0] = mpq_class(d_->minpoly[0]) / mpq_class(d_->minpoly[1]);
        c[0] = -c[0];
    } else {
        c[1] = 1;
    }
    return FieldElement(*this, std::move(c));
}

// -------------------------------------------------------------- FieldElement

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same_as(b.field()))
        raise(errc::field_mismatch, "operands live in different fields; embed explicitly");
}

std::vector<mpq_class> reduce_mod(const QPoly& p, const QPoly& m, int d) {
    QPoly r = p.divrem(m).second;
    std::vector<mpq_class> c(d, mpq_class(0));
    for (int i = 0; i <= r.degree(); ++i) c[i] = r[i];
    return c;
}

} // namespace

bool FieldElement::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class FieldElement::rational_value() const {
    if (!is_rational()) raise(errc::internal, "element is not rational");
    return c_.empty() ? mpq_class(0) : c_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<mpq_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
    return FieldElement(K_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<mpq_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
    return FieldElement(K_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<mpq_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return FieldElement(K_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    QPoly prod = to_qpoly() * o.to_qpoly();
    return FieldElement(K_, reduce_mod(prod, K_.minpoly_monic(), K_.degree()));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) raise(errc::division_by_zero, "inverse of zero");
    QPoly u, v;
    QPoly g = QPoly::ext_gcd(to_qpoly(), K_.minpoly_monic(), u, v);
    if (g.degree() != 0) raise(errc::internal, "gcd with minimal polynomial not trivial");
    // g == 1 after normalization in ext_gcd
    return FieldElement(K_, reduce_mod(u, K_.minpoly_monic(), K_.degree()));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(*this, o);
    if (o.is_zero()) raise(errc::division_by_zero, "division by zero element");
    return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = K_.one();
    FieldElement base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(*this, o);
    return c_ == o.c_;
}

FieldElement FieldElement::scale(const mpq_class& s) const {
    std::vector<mpq_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return FieldElement(K_, std::move(c));
}

QPoly FieldElement::to_qpoly() const { return QPoly(std::vector<mpq_class>(c_)); }

CInt FieldElement::embed_numeric(int embedding_index, long prec) const {
    if (embedding_index < 0 || embedding_index >= K_.degree())
        raise(errc::root_index_out_of_range, "embedding index");
    auto roots = K_.embeddings(prec);
    return to_qpoly().eval(roots[embedding_index].box);
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

FieldElement field_arithmetic(const FieldElement& a, const FieldElement& b, FieldOp op) {
    switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
    }
    raise(errc::internal, "bad op");
}

// ------------------------------------------------------- minimal polynomials

namespace {

// determinant of a rational matrix by Gaussian elimination
mpq_class det_q(std::vector<std::vector<mpq_class>> m) {
    const size_t n = m.size();
    mpq_class det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        mpq_class inv = mpq_class(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            mpq_class f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

QPoly lagrange_interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
    const size_t n = xs.size();
    QPoly acc;
    for (size_t i = 0; i < n; ++i) {
        QPoly li = QPoly::constant(1);
        mpq_class denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            li = li * QPoly(std::vector<mpq_class>{-xs[j], 1});
            denom *= xs[i] - xs[j];
        }
        acc = acc + li * (ys[i] / denom);
    }
    return acc;
}

} // namespace

ZPoly minimal_polynomial(const FieldElement& a) {
    const NumberField& K = a.field();
    const int d = K.degree();
    if (d == 1) {
        mpq_class v = a.coords()[0];
        return ZPoly(std::vector<mpz_class>{-v.get_num(), v.get_den()}).primitive();
    }
    // multiplication matrix: columns are coordinates of a * theta^j
    std::vector<FieldElement> cols;
    cols.reserve(d);
    FieldElement cur = a;
    FieldElement th = K.theta();
    for (int j = 0; j < d; ++j) {
        cols.push_back(cur);
        if (j + 1 < d) cur = cur * th;
    }
    // char poly via interpolation of det(tI - M)
    std::vector<mpq_class> xs, ys;
    for (int t = 0; t <= d; ++t) {
        std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m[i][j] = (i == j ? mpq_class(t) : mpq_class(0)) - cols[j].coords()[i];
        xs.emplace_back(t);
        ys.push_back(det_q(std::move(m)));
    }
    QPoly charpoly = lagrange_interpolate(xs, ys);
    auto factors = factor_over_q(charpoly);
    std::vector<ZPoly> distinct;
    for (const auto& f : factors) {
        bool seen = false;
        for (const auto& p : distinct)
            if (p == f.poly) seen = true;
        if (!seen) distinct.push_back(f.poly);
    }
    if (distinct.size() == 1) return distinct[0];
    // select the factor vanishing at the distinguished embedding of a
    for (long prec = 128; prec <= (1L << 16); prec *= 2) {
        CInt av = a.embed0(prec);
        std::vector<const ZPoly*> alive;
        for (const auto& p : distinct)
            if (p.eval(av).contains_zero()) alive.push_back(&p);
        if (alive.size() == 1) return *alive[0];
        if (alive.empty()) raise(errc::internal, "no char poly factor contains the embedding");
    }
    raise(errc::internal, "could not separate char poly factors");
}

mpq_class field_norm(const FieldElement& a) {
    if (a.is_zero()) return 0;
    const NumberField& K = a.field();
    if (K.degree() == 1) return a.coords()[0];
    return K.minpoly_monic().resultant(a.to_qpoly());
}

// ------------------------------------------------------------------ adjoining

FieldElement Extension::embed(const FieldElement& x) const {
    if (!x.field().same_as(from)) raise(errc::field_mismatch, "embed: element not in source field");
    if (identity) return x;
    // Horner at theta_image
    FieldElement acc = to.zero();
    const auto& c = x.coords();
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        acc = acc * theta_image + to.from_rational(c[i]);
    return acc;
}

namespace {

// principal square root of a complex midpoint, as dyadic rationals
std::pair<mpq_class, mpq_class> principal_sqrt_mid(const mpq_class& re, const mpq_class& im,
                                                   long prec) {
    mpfr_t r, i, h, sre, sim, t;
    mpfr_init2(r, prec);
    mpfr_init2(i, prec);
    mpfr_init2(h, prec);
    mpfr_init2(sre, prec);
    mpfr_init2(sim, prec);
    mpfr_init2(t, prec);
    mpfr_set_q(r, re.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(i, im.get_mpq_t(), MPFR_RNDN);
    mpfr_hypot(h, r, i, MPFR_RNDN);
    // sre = sqrt((|z| + re)/2), sim = sign(im) sqrt((|z| - re)/2)
    mpfr_add(t, h, r, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    if (mpfr_sgn(t) < 0) mpfr_set_zero(t, 1);
    mpfr_sqrt(sre, t, MPFR_RNDN);
    mpfr_sub(t, h, r, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    if (mpfr_sgn(t) < 0) mpfr_set_zero(t, 1);
    mpfr_sqrt(sim, t, MPFR_RNDN);
    if (mpfr_sgn(i) < 0) mpfr_neg(sim, sim, MPFR_RNDN);
    mpq_class qre, qim;
    mpfr_get_q(qre.get_mpq_t(), sre);
    mpfr_get_q(qim.get_mpq_t(), sim);
    mpfr_clear(r);
    mpfr_clear(i);
    mpfr_clear(h);
    mpfr_clear(sre);
    mpfr_clear(sim);
    mpfr_clear(t);
    return {qre, qim};
}

// attempt exact square-root reconstruction of a in K
std::optional<FieldElement> try_sqrt_in_field(const NumberField& K, const FieldElement& a) {
    const int d = K.degree();
    if (d == 1) {
        mpq_class q = a.coords()[0];
        if (q < 0) return std::nullopt;
        mpz_class num = q.get_num(), den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        return K.from_rational(mpq_class(sn) / mpq_class(sd));
    }
    for (long prec : {256L, 768L, 2048L}) {
        CInt abox = a.embed0(prec);
        auto [sre, sim] = principal_sqrt_mid(abox.re().mid_q(), abox.im().mid_q(), prec);
        CInt th = K.distinguished_root(prec);
        mpq_class tre = th.re().mid_q(), tim = th.im().mid_q();
        // fixed-point scaling
        long scale = prec - 16;
        auto fix = [&](const mpq_class& v) {
            mpq_class s = v;
            mpz_class two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(scale));
            s *= mpq_class(two_pow);
            mpz_class out;
            mpz_fdiv_q(out.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
            return out;
        };
        std::vector<std::pair<mpz_class, mpz_class>> xs;
        // theta powers as complex midpoints
        mpq_class pre(1), pim(0);
        for (int i = 0; i < d; ++i) {
            xs.emplace_back(fix(pre), fix(pim));
            mpq_class nre = pre * tre - pim * tim;
            mpq_class nim = pre * tim + pim * tre;
            pre = nre;
            pim = nim;
        }
        xs.emplace_back(fix(-sre), fix(-sim));
        ZVec rel = integer_relation(xs);
        if (rel.size() != static_cast<size_t>(d) + 1) continue;
        mpz_class m = rel[d];
        if (m == 0) continue;
        std::vector<mpq_class> coords(d);
        for (int i = 0; i < d; ++i) coords[i] = mpq_class(rel[i]) / mpq_class(m);
        FieldElement cand = K.element(std::move(coords));
        if (cand * cand == a) return cand;
        // the relation gives sum n_i theta^i - m*sqrt = 0, i.e. sqrt = sum/m
    }
    return std::nullopt;
}

// univariate polynomials over a FieldElement coefficient field
using EPoly = std::vector<FieldElement>;

void ep_trim(EPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

EPoly ep_divrem_get_rem(EPoly a, const EPoly& b) {
    ep_trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    FieldElement binv = b.back().inverse();
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        FieldElement f = a.back() * binv;
        for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - f * b[j];
        // the leading term cancels exactly
        ep_trim(a);
    }
    return a;
}

EPoly ep_gcd(EPoly a, EPoly b) {
    ep_trim(a);
    ep_trim(b);
    while (!b.empty()) {
        EPoly r = ep_divrem_get_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

Extension adjoin_sqrt(const NumberField& K, const FieldElement& a) {
    if (!a.field().same_as(K)) raise(errc::field_mismatch, "adjoin_sqrt: element not in field");
    if (a.is_zero()) raise(errc::zero_argument, "adjoin_sqrt of zero");

    if (auto r = try_sqrt_in_field(K, a)) {
        Extension e;
        e.from = K;
        e.to = K;
        e.theta_image = K.theta();
        e.root = *r;
        e.identity = true;
        return e;
    }

    const int d = K.degree();
    const QPoly m = K.minpoly_monic();
    const QPoly A = a.to_qpoly();

    if (d == 1) {
        mpq_class q = a.coords()[0];
        // x^2 - q, cleared to integer
        QPoly mp(std::vector<mpq_class>{-q, 0, 1});
        ZPoly mz = ZPoly::from_q(mp);
        NumberField E = nf_from_irreducible(mz, 1); // principal root: larger in canonical order
        Extension e;
        e.from = K;
        e.to = E;
        e.theta_image = E.from_rational(K.theta().coords()[0]);
        e.root = E.element(std::vector<mpq_class>{0, 1});
        if (!(e.root * e.root == e.embed(a))) raise(errc::internal, "adjoin_sqrt: root check failed");
        e.identity = false;
        return e;
    }

    // numeric value of sqrt(a) under the distinguished embedding
    CInt abox = a.embed0(256);
    auto [sre, sim] = principal_sqrt_mid(abox.re().mid_q(), abox.im().mid_q(), 256);
    CInt thbox = K.distinguished_root(256);
    mpq_class th_re = thbox.re().mid_q(), th_im = thbox.im().mid_q();

    for (long c = 0; c <= 24; ++c) {
        // R(x) = prod_j ((x - c theta_j)^2 - A(theta_j)), via interpolation
        std::vector<mpq_class> xs, ys;
        for (int t = 0; static_cast<int>(xs.size()) < 2 * d + 1; ++t) {
            long x0 = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
            // g(y) = (x0 - c y)^2 - A(y)
            QPoly g = QPoly(std::vector<mpq_class>{mpq_class(x0), mpq_class(-c)});
            g = g * g - A;
            mpq_class r = g.is_zero() ? mpq_class(0) : m.resultant(g);
            xs.emplace_back(x0);
            ys.push_back(r);
        }
        QPoly R = lagrange_interpolate(xs, ys);
        if (R.degree() != 2 * d) continue;
        auto factors = factor_over_q(R);
        std::vector<ZPoly> cands;
        for (const auto& f : factors)
            if (f.poly.degree() == 2 * d) cands.push_back(f.poly);
        if (cands.empty()) continue;
        // gamma = sqrt(a) + c*theta numerically
        mpq_class gre = sre + c * th_re, gim = sim + c * th_im;
        std::sort(cands.begin(), cands.end(), [&](const ZPoly& p1, const ZPoly& p2) {
            auto val = [&](const ZPoly& p) {
                CInt g0 = CInt::from_q(gre, gim, 256);
                return p.eval(g0).abs().hi_q();
            };
            return val(p1) < val(p2);
        });
        for (const auto& cand : cands) {
            // choose the root of cand nearest to the numeric gamma
            auto roots = isolate_roots(cand, 128);
            int best = 0;
            mpq_class bestd;
            for (size_t j = 0; j < roots.size(); ++j) {
                mpq_class dr = roots[j].box.re().mid_q() - gre;
                mpq_class di = roots[j].box.im().mid_q() - gim;
                mpq_class dist = dr * dr + di * di;
                if (j == 0 || dist < bestd) {
                    bestd = dist;
                    best = static_cast<int>(j);
                }
            }
            NumberField E = nf_from_irreducible(cand, best);
            FieldElement gamma = E.theta();
            // gcd over E of m(Y) and (gamma - c Y)^2 - A(Y): linear when primitive
            EPoly mY;
            for (int i = 0; i <= m.degree(); ++i) mY.push_back(E.from_rational(m[i]));
            EPoly gY; // (gamma - cY)^2 - A(Y) = gamma^2 - 2c gamma Y + c^2 Y^2 - A(Y)
            int dA = A.degree();
            int dg = std::max(2, dA);
            gY.assign(dg + 1, E.zero());
            gY[0] = gamma * gamma;
            if (c != 0) {
                gY[1] = gamma.scale(mpq_class(-2 * c));
                gY[2] = E.from_rational(mpq_class(c * c));
            }
            for (int i = 0; i <= dA; ++i) gY[i] = gY[i] - E.from_rational(A[i]);
            ep_trim(gY);
            EPoly g = ep_gcd(mY, gY);
            if (g.size() != 2) continue;
            FieldElement theta_img = -(g[0] / g[1]);
            // verify m(theta_img) == 0 exactly
            FieldElement acc = E.zero();
            for (int i = m.degree(); i >= 0; --i)
                acc = acc * theta_img + E.from_rational(m[i]);
            if (!acc.is_zero()) continue;
            FieldElement root = gamma - theta_img.scale(mpq_class(c));
            // verify root^2 == a embedded
            FieldElement aimg = E.zero();
            for (int i = A.degree(); i >= 0; --i)
                aimg = aimg * theta_img + E.from_rational(A[i]);
            if (!(root * root == aimg)) continue;
            Extension e;
            e.from = K;
            e.to = E;
            e.theta_image = theta_img;
            e.root = root;
            e.identity = false;
            return e;
        }
    }
    raise(errc::internal, "adjoin_sqrt: no primitive element found");
}

// ------------------------------------------------------------------- Tower

FieldElement Tower::lift(const FieldElement& x) const {
    // locate the level of x
    if (x.field().same_as(top())) return x;
    if (x.field().same_as(base_)) {
        FieldElement cur = x;
        for (const auto& e : steps_) cur = e.embed(cur);
        return cur;
    }
    for (size_t i = 0; i < steps_.size(); ++i) {
        if (x.field().same_as(steps_[i].to)) {
            FieldElement cur = x;
            for (size_t j = i + 1; j < steps_.size(); ++j) cur = steps_[j].embed(cur);
            return cur;
        }
    }
    raise(errc::field_mismatch, "element does not belong to any level of the tower");
}

std::vector<FieldElement> Tower::lift(const std::vector<FieldElement>& xs) const {
    std::vector<FieldElement> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(lift(x));
    return out;
}

FieldElement Tower::adjoin_sqrt_of(const FieldElement& a) {
    FieldElement at = lift(a);
    Extension e = adjoin_sqrt(top(), at);
    if (e.identity) return e.root;
    steps_.push_back(e);
    return e.root;
}

FieldElement Tower::base_theta_image() const { return lift(base_.theta()); }

} // namespace isozero
