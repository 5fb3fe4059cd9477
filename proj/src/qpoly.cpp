#include "isozero/qpoly.hpp"

#include "isozero/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>

namespace isozero {

// ---------------------------------------------------------------------- QPoly

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const mpq_class& v) {
    if (v == 0) return QPoly();
    return QPoly(std::vector<mpq_class>{v});
}

QPoly QPoly::x() { return QPoly(std::vector<mpq_class>{0, 1}); }

const mpq_class& QPoly::operator[](int i) const {
    static const mpq_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const mpq_class& QPoly::lc() const {
    if (c_.empty()) raise(errc::internal, "lc of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const mpq_class& s) const {
    if (s == 0) return QPoly();
    std::vector<mpq_class> r(c_);
    for (auto& v : r) v *= s;
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    std::vector<mpq_class> r(c_);
    for (auto& v : r) v = -v;
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    if (d.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    std::vector<mpq_class> rem(c_);
    int dd = d.degree();
    if (degree() < dd) return {QPoly(), *this};
    std::vector<mpq_class> quo(degree() - dd + 1, mpq_class(0));
    for (int i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpq_class f = rem[i] / d.lc();
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<mpq_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (mpq_class(1) / lc());
}

QPoly QPoly::shift_up(int k) const {
    if (is_zero()) return *this;
    std::vector<mpq_class> r(c_.size() + k, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return QPoly(std::move(r));
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

RInt QPoly::eval(const RInt& x) const {
    RInt acc = RInt::zero(x.prec());
    for (int i = degree(); i >= 0; --i) acc = acc * x + RInt::from_q(c_[i], x.prec());
    return acc;
}

CInt QPoly::eval(const CInt& x) const {
    CInt acc(x.prec());
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + CInt::from_q(c_[i], 0, x.prec());
    return acc;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly QPoly::ext_gcd(const QPoly& a, const QPoly& b, QPoly& u, QPoly& v) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        r0 = r1; r1 = r2;
        QPoly s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        QPoly t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) { u = QPoly(); v = QPoly(); return QPoly(); }
    mpq_class inv = mpq_class(1) / r0.lc();
    u = s0 * inv;
    v = t0 * inv;
    return r0.monic();
}

mpq_class QPoly::resultant(const QPoly& o) const {
    QPoly a = *this, b = o;
    if (a.is_zero() || b.is_zero()) return 0;
    mpq_class res(1);
    bool neg = false;
    while (b.degree() > 0) {
        QPoly r = a.divrem(b).second;
        int m = a.degree(), n = b.degree(), k = r.degree();
        if ((m & 1) && (n & 1)) neg = !neg;
        // Res(a,b) = (-1)^{mn} lc(b)^{m-k} Res(b,r)
        mpq_class l = b.lc();
        mpq_class powv(1);
        for (long i = 0; i < m - (k < 0 ? 0 : k); ++i) powv *= l;
        res *= powv;
        if (r.is_zero()) return 0;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: Res(a, c) = c^{deg a}
    mpq_class c = b[0];
    mpq_class powv(1);
    for (int i = 0; i < a.degree(); ++i) powv *= c;
    res *= powv;
    return neg ? -res : res;
}

QPoly QPoly::squarefree_part() const {
    if (degree() <= 1) return monic();
    QPoly g = gcd(*this, derivative());
    return divrem(g).first.monic();
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------- ZPoly

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::from_q(const QPoly& p) {
    if (p.is_zero()) return ZPoly();
    mpz_class den(1);
    for (const auto& q : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        mpq_class v = p.coeffs()[i] * mpq_class(den);
        c[i] = v.get_num();
    }
    ZPoly z(std::move(c));
    return z.primitive();
}

const mpz_class& ZPoly::operator[](int i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const mpz_class& ZPoly::lc() const {
    if (c_.empty()) raise(errc::internal, "lc of zero polynomial");
    return c_.back();
}

QPoly ZPoly::to_q() const {
    std::vector<mpq_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = mpq_class(c_[i]);
    return QPoly(std::move(c));
}

QPoly ZPoly::to_q_monic() const { return to_q().monic(); }

mpz_class ZPoly::content() const {
    mpz_class g(0);
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

ZPoly ZPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (lc() < 0) g = -g;
    std::vector<mpz_class> c(c_);
    for (auto& v : c) v /= g;
    return ZPoly(std::move(c));
}

int ZPoly::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    // value * q^deg = sum c_i p^i q^{deg-i}, exact integer
    const mpz_class& p = x.get_num();
    const mpz_class& q = x.get_den();
    mpz_class acc(0), ppow(1);
    std::vector<mpz_class> qpow(c_.size());
    qpow[c_.size() - 1] = 1;
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) qpow[i] = qpow[i + 1] * q;
    for (size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i] * ppow * qpow[i];
        ppow *= p;
    }
    return sgn(acc);
}

RInt ZPoly::eval(const RInt& x) const {
    RInt acc = RInt::zero(x.prec());
    for (int i = degree(); i >= 0; --i) acc = acc * x + RInt::from_q(mpq_class(c_[i]), x.prec());
    return acc;
}

CInt ZPoly::eval(const CInt& x) const {
    CInt acc(x.prec());
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + CInt::from_q(mpq_class(c_[i]), 0, x.prec());
    return acc;
}

std::string ZPoly::str() const { return to_q().str(); }

// ----------------------------------------------------------- mod-p arithmetic

namespace {

using u64 = std::uint64_t;

struct FpCtx {
    u64 p;
    u64 mul(u64 a, u64 b) const { return (unsigned __int128)a * b % p; }
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 pow(u64 a, mpz_class e) const {
        u64 r = 1;
        a %= p;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, mpz_class(static_cast<long>(p - 2))); }
};

using FpPoly = std::vector<u64>; // ascending, trimmed

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_from_z(const ZPoly& f, const FpCtx& F) {
    FpPoly r(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class m = f[i] % static_cast<long>(F.p);
        if (m < 0) m += static_cast<long>(F.p);
        r[i] = m.get_ui();
    }
    fp_trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const FpCtx& F) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const FpCtx& F) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    fp_trim(r);
    return r;
}

// divrem, divisor must be nonzero
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& d, const FpCtx& F) {
    FpPoly rem = a;
    int dd = fp_deg(d);
    if (fp_deg(a) < dd) return {{}, rem};
    FpPoly quo(fp_deg(a) - dd + 1, 0);
    u64 linv = F.inv(d.back());
    for (int i = fp_deg(a); i >= dd; --i) {
        if (rem[i] == 0) continue;
        u64 f = F.mul(rem[i], linv);
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(f, d[j]));
    }
    fp_trim(rem);
    fp_trim(quo);
    return {quo, rem};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const FpCtx& F) {
    while (!b.empty()) {
        FpPoly r = fp_divrem(a, b, F).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 linv = F.inv(a.back());
        for (auto& v : a) v = F.mul(v, linv);
    }
    return a;
}

void fp_ext_gcd(const FpPoly& a, const FpPoly& b, FpPoly& u, FpPoly& v, const FpCtx& F) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = fp_divrem(r0, r1, F);
        r0 = r1; r1 = r2;
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, F), F);
        s0 = s1; s1 = s2;
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, F), F);
        t0 = t1; t1 = t2;
    }
    u64 linv = F.inv(r0.back());
    u = s0; v = t0;
    for (auto& x : u) x = F.mul(x, linv);
    for (auto& x : v) x = F.mul(x, linv);
}

FpPoly fp_powmod(FpPoly base, mpz_class e, const FpPoly& mod, const FpCtx& F) {
    FpPoly r = {1};
    base = fp_divrem(base, mod, F).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_divrem(fp_mul(r, base, F), mod, F).second;
        base = fp_divrem(fp_mul(base, base, F), mod, F).second;
        e >>= 1;
    }
    return r;
}

FpPoly fp_deriv(const FpPoly& f, const FpCtx& F) {
    if (f.size() <= 1) return {};
    FpPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(f[i], i % F.p);
    fp_trim(r);
    return r;
}

struct Xorshift {
    u64 s;
    u64 next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

// Cantor-Zassenhaus equal-degree splitting: f = product of irreducibles of degree e.
void fp_equal_degree(const FpPoly& f, int e, const FpCtx& F, std::vector<FpPoly>& out,
                     Xorshift& rng) {
    int d = fp_deg(f);
    if (d == e) {
        out.push_back(f);
        return;
    }
    mpz_class pe(1);
    for (int i = 0; i < e; ++i) pe *= static_cast<long>(F.p);
    mpz_class half = (pe - 1) / 2;
    for (;;) {
        FpPoly a(d, 0);
        for (int i = 0; i < d; ++i) a[i] = rng.next() % F.p;
        fp_trim(a);
        if (a.empty()) continue;
        FpPoly g = fp_gcd(a, f, F);
        if (fp_deg(g) > 0 && fp_deg(g) < d) {
            fp_equal_degree(g, e, F, out, rng);
            fp_equal_degree(fp_divrem(f, g, F).first, e, F, out, rng);
            return;
        }
        FpPoly b = fp_powmod(a, half, f, F);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        fp_trim(b);
        g = fp_gcd(b, f, F);
        if (fp_deg(g) > 0 && fp_deg(g) < d) {
            fp_equal_degree(g, e, F, out, rng);
            fp_equal_degree(fp_divrem(f, g, F).first, e, F, out, rng);
            return;
        }
    }
}

// Full factorization of a squarefree monic polynomial mod p.
std::vector<FpPoly> fp_factor_squarefree(FpPoly f, const FpCtx& F) {
    std::vector<FpPoly> out;
    Xorshift rng{0x9e3779b97f4a7c15ULL ^ (F.p * 2654435761ULL) ^ (u64)fp_deg(f)};
    FpPoly h = {0, 1}; // x
    int e = 0;
    while (fp_deg(f) > 0) {
        ++e;
        if (2 * e > fp_deg(f)) {
            out.push_back(f);
            break;
        }
        h = fp_powmod(h, mpz_class(static_cast<long>(F.p)), f, F);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        fp_trim(hx);
        FpPoly g = fp_gcd(hx, f, F);
        if (fp_deg(g) > 0) {
            fp_equal_degree(g, e, F, out, rng);
            f = fp_divrem(f, g, F).first;
        }
    }
    return out;
}

// ------------------------------------------------------------- Hensel lifting

mpz_class z_mod_sym(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

using Zx = std::vector<mpz_class>;

void zx_trim(Zx& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Zx zx_mul_mod(const Zx& a, const Zx& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    Zx r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    zx_trim(r);
    return r;
}

Zx zx_sub_mod(const Zx& a, const Zx& b, const mpz_class& m) {
    Zx r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i]) % m;
    for (auto& v : r)
        if (v < 0) v += m;
    zx_trim(r);
    return r;
}

Zx zx_add_mod(const Zx& a, const Zx& b, const mpz_class& m) {
    Zx r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % m;
    zx_trim(r);
    return r;
}

// division of a by monic d, coefficients mod m
std::pair<Zx, Zx> zx_divrem_monic_mod(const Zx& a, const Zx& d, const mpz_class& m) {
    Zx rem = a;
    int dd = static_cast<int>(d.size()) - 1;
    int da = static_cast<int>(rem.size()) - 1;
    if (da < dd) return {{}, rem};
    Zx quo(da - dd + 1, mpz_class(0));
    for (int i = da; i >= dd; --i) {
        mpz_class f = rem[i] % m;
        if (f == 0) continue;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) {
            rem[i - dd + j] = (rem[i - dd + j] - f * d[j]) % m;
            if (rem[i - dd + j] < 0) rem[i - dd + j] += m;
        }
    }
    zx_trim(rem);
    zx_trim(quo);
    return {quo, rem};
}

Zx zx_from_fp(const FpPoly& f) {
    Zx r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = mpz_class(static_cast<unsigned long>(f[i]));
    return r;
}

// One linear Hensel step for a pair: f = g*h (mod pk), lifts to mod pk*p.
// g, h monic; s*g + t*h = 1 (mod p).
void hensel_step(const Zx& f, Zx& g, Zx& h, const Zx& s, const Zx& t, const mpz_class& pk,
                 const mpz_class& p) {
    mpz_class m = pk * p;
    // e = (f - g*h) / pk  (mod p)
    Zx gh = zx_mul_mod(g, h, m);
    Zx diff = zx_sub_mod(f, gh, m);
    Zx e(diff.size());
    for (size_t i = 0; i < diff.size(); ++i) {
        mpz_class v = z_mod_sym(diff[i], m);
        e[i] = (v / pk) % p;
        if (e[i] < 0) e[i] += p;
    }
    zx_trim(e);
    // u = (t*e) rem g ; v = (e - u*h) / g   (all mod p)
    Zx te = zx_mul_mod(t, e, p);
    auto [q1, u] = zx_divrem_monic_mod(te, g, p);
    Zx uh = zx_mul_mod(u, h, p);
    Zx w = zx_sub_mod(e, uh, p);
    auto [v, r0] = zx_divrem_monic_mod(w, g, p);
    if (!r0.empty()) raise(errc::internal, "hensel step: division not exact");
    // g += pk*u, h += pk*v
    if (g.size() < u.size() + 1) g.resize(std::max(g.size(), u.size()), mpz_class(0));
    for (size_t i = 0; i < u.size(); ++i) g[i] = (g[i] + pk * u[i]) % m;
    if (h.size() < v.size()) h.resize(v.size(), mpz_class(0));
    for (size_t i = 0; i < v.size(); ++i) h[i] = (h[i] + pk * v[i]) % m;
    zx_trim(g);
    zx_trim(h);
}

// Lift the factorization f = prod(factors) from mod p to mod p^K (monic f).
void hensel_lift_tree(const Zx& f, std::vector<Zx>& factors, size_t lo, size_t hi,
                      const FpCtx& F, const mpz_class& p, int K) {
    if (hi - lo <= 1) {
        factors[lo] = f;
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FpPoly gp = {1}, hp = {1};
    for (size_t i = lo; i < mid; ++i) {
        FpPoly fi(factors[i].size());
        for (size_t j = 0; j < factors[i].size(); ++j)
            fi[j] = mpz_class(factors[i][j] % p).get_ui();
        gp = fp_mul(gp, fi, F);
    }
    for (size_t i = mid; i < hi; ++i) {
        FpPoly fi(factors[i].size());
        for (size_t j = 0; j < factors[i].size(); ++j)
            fi[j] = mpz_class(factors[i][j] % p).get_ui();
        hp = fp_mul(hp, fi, F);
    }
    FpPoly sp, tp;
    fp_ext_gcd(gp, hp, sp, tp, F);
    Zx g = zx_from_fp(gp), h = zx_from_fp(hp);
    Zx s = zx_from_fp(sp), t = zx_from_fp(tp);
    mpz_class pk = p;
    for (int step = 1; step < K; ++step) {
        hensel_step(f, g, h, s, t, pk, p);
        pk *= p;
    }
    hensel_lift_tree(g, factors, lo, mid, F, p, K);
    hensel_lift_tree(h, factors, mid, hi, F, p, K);
}

// ----------------------------------------------- factorization over Q (monic)

mpz_class zx_norm2_sq(const Zx& f) {
    mpz_class s(0);
    for (const auto& c : f) s += c * c;
    return s;
}

// factor a squarefree monic integer polynomial
std::vector<Zx> factor_monic_squarefree(const Zx& f) {
    int d = static_cast<int>(f.size()) - 1;
    if (f.empty() || f.back() != 1) raise(errc::internal, "factor_monic_squarefree: input not monic");
    if (d <= 1) return {f};
    // prime selection: smallest odd primes with squarefree reduction; among the
    // first few candidates keep the one with fewest modular factors
    static const unsigned long primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                                           37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                                           79,  83,  89,  97,  101, 103, 107, 109, 113, 127};
    struct Cand {
        FpCtx F;
        std::vector<FpPoly> facs;
    };
    std::vector<Cand> cands;
    ZPoly fz{std::vector<mpz_class>(f)};
    for (unsigned long pr : primes) {
        FpCtx F{pr};
        FpPoly fp = fp_from_z(fz, F);
        if (fp_deg(fp) != d) continue; // p divides lc (monic: cannot happen)
        FpPoly g = fp_gcd(fp, fp_deriv(fp, F), F);
        if (fp_deg(g) != 0) continue; // not squarefree mod p
        Cand c{F, fp_factor_squarefree(fp, F)};
        std::sort(c.facs.begin(), c.facs.end(),
                  [](const FpPoly& a, const FpPoly& b) { return a < b; });
        cands.push_back(std::move(c));
        if (cands.size() >= 3) break;
    }
    if (cands.empty()) raise(errc::internal, "no good prime found for factorization");
    auto& best = *std::min_element(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.facs.size() < b.facs.size();
    });
    if (best.facs.size() == 1) return {f};

    const FpCtx F = best.F;
    mpz_class p(static_cast<long>(F.p));
    // Mignotte-style bound: any monic factor g of f has |g|_inf <= 2^d * |f|_2
    mpz_class B2 = zx_norm2_sq(f);
    mpz_class bound = 1;
    mpz_class two(2);
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), B2.get_mpz_t());
    bound = (sq + 1) << d;
    int K = 1;
    mpz_class pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++K;
    }
    std::vector<Zx> lifted(best.facs.size());
    for (size_t i = 0; i < best.facs.size(); ++i) lifted[i] = zx_from_fp(best.facs[i]);
    hensel_lift_tree(f, lifted, 0, lifted.size(), F, p, K);

    // recombination over subsets of increasing cardinality
    std::vector<Zx> remaining = lifted;
    Zx current = f;
    std::vector<Zx> out;
    size_t card = 1;
    while (2 * card <= remaining.size()) {
        bool found_any = false;
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        for (;;) {
            Zx cand = {mpz_class(1)};
            for (size_t i : idx) cand = zx_mul_mod(cand, remaining[i], pk);
            for (auto& c : cand) c = z_mod_sym(c, pk);
            // exact division test over Z
            ZPoly candz{std::vector<mpz_class>(cand)};
            QPoly q = ZPoly{std::vector<mpz_class>(current)}.to_q();
            auto [quo, rem] = q.divrem(candz.to_q());
            if (rem.is_zero()) {
                out.push_back(cand);
                Zx quoz(quo.degree() + 1);
                for (int i = 0; i <= quo.degree(); ++i) quoz[i] = quo[i].get_num();
                current = quoz;
                std::vector<Zx> rest;
                for (size_t i = 0, j = 0; i < remaining.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) { ++j; continue; }
                    rest.push_back(remaining[i]);
                }
                remaining = std::move(rest);
                found_any = true;
                break;
            }
            // next combination
            int k = static_cast<int>(card) - 1;
            while (k >= 0 && idx[k] == remaining.size() - card + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (size_t j = k + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found_any) ++card;
    }
    out.push_back(current);
    return out;
}

} // namespace

std::vector<QFactor> factor_over_q(const QPoly& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "cannot factor the zero polynomial");
    if (p.degree() > 64) raise(errc::unsupported_degree, "factorization capped at degree 64");
    std::vector<QFactor> out;
    if (p.degree() == 0) return out;
    // Yun squarefree decomposition, then factor each squarefree piece
    auto factor_squarefree_piece = [&out](const QPoly& piece, int mult) {
        ZPoly gz = ZPoly::from_q(piece);
        mpz_class l = gz.lc();
        int dg = gz.degree();
        if (dg == 1) {
            out.push_back({gz, mult});
            return;
        }
        // monicize: F(x) = l^{dg-1} g(x/l), so F[i] = g[i] * l^{dg-1-i}
        std::vector<mpz_class> F(dg + 1);
        F[dg] = 1;
        mpz_class lp(1);
        for (int i = dg - 1; i >= 0; --i) {
            F[i] = gz[i] * lp;
            lp *= l;
        }
        auto facs = factor_monic_squarefree(F);
        for (auto& fc : facs) {
            // map back y -> l*x and take primitive part
            std::vector<mpz_class> gg(fc.size());
            mpz_class lp2(1);
            for (size_t i = 0; i < fc.size(); ++i) {
                gg[i] = fc[i] * lp2;
                lp2 *= l;
            }
            out.push_back({ZPoly(std::move(gg)).primitive(), mult});
        }
    };
    QPoly f = p.monic();
    QPoly g0 = QPoly::gcd(f, f.derivative());
    QPoly c = f.divrem(g0).first;
    QPoly d = f.derivative().divrem(g0).first - c.derivative();
    int mult = 1;
    while (c.degree() > 0) {
        QPoly pi = QPoly::gcd(c, d);
        if (pi.degree() > 0) factor_squarefree_piece(pi, mult);
        c = c.divrem(pi).first;
        d = d.divrem(pi).first - c.derivative();
        ++mult;
        if (mult > p.degree() + 1) raise(errc::internal, "Yun decomposition did not terminate");
    }
    std::sort(out.begin(), out.end(), [](const QFactor& x, const QFactor& y) {
        if (x.poly.degree() != y.poly.degree()) return x.poly.degree() < y.poly.degree();
        return x.poly.coeffs() < y.poly.coeffs();
    });
    return out;
}

bool is_irreducible_over_q(const QPoly& p) {
    auto f = factor_over_q(p);
    return f.size() == 1 && f[0].multiplicity == 1;
}

bool is_cyclotomic(const ZPoly& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (f.lc() != 1) return false;
    auto phi = [](int n) {
        int r = n;
        int m = n;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                r -= r / p;
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) r -= r / m;
        return r;
    };
    // f cyclotomic of conductor n implies phi(n) = d and x^n = 1 mod f
    for (int n = 1; n <= std::max(4 * d * d, 16); ++n) {
        if (phi(n) != d) continue;
        // compute x^n mod f over Z (f monic)
        Zx mod(f.coeffs());
        Zx acc = {1};
        Zx base = {0, 1};
        int e = n;
        auto mulmod = [&](const Zx& a, const Zx& b) {
            Zx r(a.size() + b.size() - 1, mpz_class(0));
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
            // reduce by monic mod
            int dd = static_cast<int>(mod.size()) - 1;
            for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
                mpz_class fq = r[i];
                if (fq == 0) continue;
                for (int j = 0; j <= dd; ++j) r[i - dd + j] -= fq * mod[j];
            }
            r.resize(dd);
            return r;
        };
        while (e > 0) {
            if (e & 1) acc = mulmod(acc, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        zx_trim(acc);
        if (acc.size() == 1 && acc[0] == 1) return true;
    }
    return false;
}

// --------------------------------------------------------------------- Sturm

namespace {

std::vector<QPoly> sturm_chain(const ZPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(f.to_q());
    chain.push_back(f.to_q().derivative());
    while (chain.back().degree() > 0) {
        QPoly r = chain[chain.size() - 2].divrem(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_changes_at(const std::vector<QPoly>& chain, const mpq_class& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        mpq_class v = p.eval(x);
        int s = sgn(v);
        if (s != 0) {
            if (last != 0 && s != last) ++changes;
            last = s;
        }
    }
    return changes;
}

} // namespace

int sturm_count(const ZPoly& f, const mpq_class& a, const mpq_class& b) {
    auto chain = sturm_chain(f);
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

// --------------------------------------------------------- complex root boxes

namespace {

// midpoint complex arithmetic on mpfr (round-to-nearest, non-rigorous)
struct MC {
    mpfr_t re, im;
    explicit MC(long prec) {
        mpfr_init2(re, prec);
        mpfr_init2(im, prec);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    MC(const MC& o) {
        mpfr_init2(re, mpfr_get_prec(o.re));
        mpfr_init2(im, mpfr_get_prec(o.im));
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
    }
    MC& operator=(const MC& o) {
        if (this != &o) {
            mpfr_set_prec(re, mpfr_get_prec(o.re));
            mpfr_set_prec(im, mpfr_get_prec(o.im));
            mpfr_set(re, o.re, MPFR_RNDN);
            mpfr_set(im, o.im, MPFR_RNDN);
        }
        return *this;
    }
    ~MC() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

void mc_add(MC& r, const MC& a, const MC& b) {
    mpfr_add(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_add(r.im, a.im, b.im, MPFR_RNDN);
}

void mc_sub(MC& r, const MC& a, const MC& b) {
    mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
}

void mc_mul(MC& r, const MC& a, const MC& b, mpfr_t t1, mpfr_t t2) {
    // r may not alias a or b
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_mul(t2, a.re, b.im, MPFR_RNDN);
    mpfr_set(r.re, t1, MPFR_RNDN);
    mpfr_mul(t1, a.im, b.re, MPFR_RNDN);
    mpfr_add(r.im, t1, t2, MPFR_RNDN);
}

void mc_div(MC& r, const MC& a, const MC& b, mpfr_t t1, mpfr_t t2, mpfr_t t3) {
    mpfr_mul(t1, b.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, b.im, b.im, MPFR_RNDN);
    mpfr_add(t3, t1, t2, MPFR_RNDN); // |b|^2
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_div(t1, t1, t3, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
    mpfr_set(r.re, t1, MPFR_RNDN);
    mpfr_mul(t1, a.re, b.im, MPFR_RNDN);
    mpfr_sub(t2, t2, t1, MPFR_RNDN);
    mpfr_div(r.im, t2, t3, MPFR_RNDN);
}

double mc_abs_d(const MC& a) {
    mpfr_t t1, t2;
    mpfr_init2(t1, 64);
    mpfr_init2(t2, 64);
    mpfr_mul(t1, a.re, a.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, a.im, MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_sqrt(t1, t1, MPFR_RNDN);
    double v = mpfr_get_d(t1, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return v;
}

// evaluate f and f' at z (midpoint arithmetic)
void mc_eval_fp(const ZPoly& f, const MC& z, MC& fz, MC& fpz, long prec) {
    mpfr_t t1, t2;
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);
    MC acc(prec), dacc(prec), tmp(prec);
    for (int i = f.degree(); i >= 0; --i) {
        // dacc = dacc*z + acc
        mc_mul(tmp, dacc, z, t1, t2);
        mc_add(dacc, tmp, acc);
        // acc = acc*z + c_i
        mc_mul(tmp, acc, z, t1, t2);
        mpfr_add_z(tmp.re, tmp.re, f[i].get_mpz_t(), MPFR_RNDN);
        acc = tmp;
    }
    fz = acc;
    fpz = dacc;
    mpfr_clear(t1);
    mpfr_clear(t2);
}

// Aberth-Ehrlich iteration; returns approximations (midpoints)
std::vector<MC> aberth(const ZPoly& f, long prec, const std::vector<MC>* init) {
    int d = f.degree();
    std::vector<MC> z;
    mpfr_t t1, t2, t3;
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);
    mpfr_init2(t3, prec);
    if (init) {
        z.assign(init->begin(), init->end());
        for (auto& zz : z) {
            MC w(prec);
            mpfr_set(w.re, zz.re, MPFR_RNDN);
            mpfr_set(w.im, zz.im, MPFR_RNDN);
            zz = w;
        }
    } else {
        // Cauchy bound radius, perturbed ring start
        double maxc = 0;
        for (int i = 0; i < d; ++i) {
            double v = std::abs(f[i].get_d());
            maxc = std::max(maxc, v);
        }
        double lcv = std::abs(f.lc().get_d());
        double R = 1.0 + maxc / lcv;
        for (int j = 0; j < d; ++j) {
            MC w(prec);
            double ang = 2.0 * 3.14159265358979323846 * (j + 0.26) / d + 0.4;
            mpfr_set_d(w.re, 0.7 * R * std::cos(ang) + 0.07, MPFR_RNDN);
            mpfr_set_d(w.im, 0.7 * R * std::sin(ang) + 0.03, MPFR_RNDN);
            z.push_back(w);
        }
    }
    MC fz(prec), fpz(prec), ratio(prec), sum(prec), tmp(prec), corr(prec), one(prec);
    mpfr_set_si(one.re, 1, MPFR_RNDN);
    int iters = 120 + 12 * d;
    double tol = std::ldexp(1.0, static_cast<int>(-prec + 6));
    for (int it = 0; it < iters; ++it) {
        double maxcorr = 0;
        for (int j = 0; j < d; ++j) {
            mc_eval_fp(f, z[j], fz, fpz, prec);
            if (mc_abs_d(fpz) == 0) {
                mpfr_add_d(z[j].re, z[j].re, 1e-3, MPFR_RNDN);
                maxcorr = 1;
                continue;
            }
            mc_div(ratio, fz, fpz, t1, t2, t3);
            mpfr_set_zero(sum.re, 1);
            mpfr_set_zero(sum.im, 1);
            for (int k = 0; k < d; ++k) {
                if (k == j) continue;
                mc_sub(tmp, z[j], z[k]);
                if (mc_abs_d(tmp) == 0) {
                    mpfr_add_d(tmp.re, tmp.re, 1e-9, MPFR_RNDN);
                }
                mc_div(corr, one, tmp, t1, t2, t3);
                mc_add(sum, sum, corr);
            }
            // delta = ratio / (1 - ratio*sum)
            mc_mul(tmp, ratio, sum, t1, t2);
            mc_sub(tmp, one, tmp);
            if (mc_abs_d(tmp) == 0) {
                mc_sub(z[j], z[j], ratio);
                maxcorr = std::max(maxcorr, mc_abs_d(ratio));
                continue;
            }
            mc_div(corr, ratio, tmp, t1, t2, t3);
            mc_sub(z[j], z[j], corr);
            double c = mc_abs_d(corr);
            double scale = std::max(1.0, mc_abs_d(z[j]));
            maxcorr = std::max(maxcorr, c / scale);
        }
        if (maxcorr < tol) break;
    }
    mpfr_clear(t1);
    mpfr_clear(t2);
    mpfr_clear(t3);
    return z;
}

// rigorous inclusion radius at approximation z: rho = d*|f(z)|/|f'(z)| (upper)
bool inclusion_box(const ZPoly& f, const MC& z, long prec, CInt& out) {
    mpq_class zr, zi;
    mpfr_get_q(zr.get_mpq_t(), z.re);
    mpfr_get_q(zi.get_mpq_t(), z.im);
    CInt zp = CInt::from_q(zr, zi, prec);
    CInt fz = f.eval(zp);
    // derivative
    std::vector<mpz_class> dc(f.degree());
    for (int i = 1; i <= f.degree(); ++i) dc[i - 1] = f[i] * i;
    ZPoly fd(std::move(dc));
    CInt fdz = fd.eval(zp);
    RInt num = fz.abs();
    RInt den = fdz.abs();
    if (!den.is_positive()) return false;
    mpq_class rho = (num.hi_q() / den.lo_q()) * f.degree();
    RInt re = RInt::from_q(zr - rho, zr + rho, prec);
    RInt im = RInt::from_q(zi - rho, zi + rho, prec);
    out = CInt(re, im);
    return true;
}

struct RealRootIv {
    mpq_class a, b; // sign(f(a)) * sign(f(b)) < 0, or a == b exact root
};

std::vector<RealRootIv> isolate_real_roots(const ZPoly& f) {
    std::vector<RealRootIv> out;
    if (f.degree() < 1) return out;
    if (f.degree() == 1) {
        mpq_class r = mpq_class(-f[0]) / mpq_class(f[1]);
        r.canonicalize();
        out.push_back({r, r});
        return out;
    }
    // Cauchy bound
    mpq_class maxc(0);
    for (int i = 0; i < f.degree(); ++i) {
        mpq_class v = abs(mpq_class(f[i]));
        if (v > maxc) maxc = v;
    }
    mpq_class bound = 1 + maxc / abs(mpq_class(f.lc()));
    auto chain = sturm_chain(f);
    struct Seg {
        mpq_class a, b;
        int count;
    };
    // nudge endpoints off roots
    auto safe_point = [&](mpq_class x, const mpq_class& step) {
        mpq_class s = step;
        while (f.sign_at(x) == 0) x += s / 1000;
        return x;
    };
    mpq_class A = safe_point(-bound, mpq_class(1));
    mpq_class B = safe_point(bound, mpq_class(1));
    std::vector<Seg> work;
    int total = sign_changes_at(chain, A) - sign_changes_at(chain, B);
    if (total > 0) work.push_back({A, B, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        mpq_class m = (s.a + s.b) / 2;
        int probe = 0;
        while (f.sign_at(m) == 0) {
            // exact rational root hit: emit point and split around it
            out.push_back({m, m});
            mpq_class eps = (s.b - s.a) / 1000000;
            mpq_class ml = m - eps, mr = m + eps;
            while (f.sign_at(ml) == 0) ml -= eps;
            while (f.sign_at(mr) == 0) mr += eps;
            int cl = sign_changes_at(chain, s.a) - sign_changes_at(chain, ml);
            int cr = sign_changes_at(chain, mr) - sign_changes_at(chain, s.b);
            if (cl > 0) work.push_back({s.a, ml, cl});
            if (cr > 0) work.push_back({mr, s.b, cr});
            probe = -1;
            break;
        }
        if (probe == -1) continue;
        int cl = sign_changes_at(chain, s.a) - sign_changes_at(chain, m);
        int cr = s.count - cl;
        if (cl > 0) work.push_back({s.a, m, cl});
        if (cr > 0) work.push_back({m, s.b, cr});
    }
    std::sort(out.begin(), out.end(),
              [](const RealRootIv& x, const RealRootIv& y) { return x.a < y.a; });
    return out;
}

void bisect_to(const ZPoly& f, RealRootIv& iv, const mpq_class& target_width) {
    if (iv.a == iv.b) return;
    int sa = f.sign_at(iv.a);
    while (iv.b - iv.a > target_width) {
        mpq_class m = (iv.a + iv.b) / 2;
        int sm = f.sign_at(m);
        if (sm == 0) {
            iv.a = m;
            iv.b = m;
            return;
        }
        if (sm == sa)
            iv.a = m;
        else
            iv.b = m;
    }
}

} // namespace

std::vector<RootBox> isolate_roots(const ZPoly& f, long prec) {
    int d = f.degree();
    if (d < 1) raise(errc::internal, "isolate_roots on constant polynomial");
    auto reals = isolate_real_roots(f);
    int nreal = static_cast<int>(reals.size());
    mpq_class tw = mpq_class(1);
    for (long i = 0; i < prec; ++i) tw /= 2;

    std::vector<RootBox> out;
    for (auto& iv : reals) {
        bisect_to(f, iv, tw);
        out.push_back({CInt(RInt::from_q(iv.a, iv.b, prec), RInt::from_q(0, 0, prec)), true});
    }
    int ncpx = d - nreal;
    if (ncpx > 0) {
        long wp = std::max<long>(prec + 32, 96);
        for (int attempt = 0; attempt < 8; ++attempt, wp *= 2) {
            auto zs = aberth(f, wp, nullptr);
            // keep the ones certified complex (box off the real axis), upper half
            std::vector<CInt> upper;
            bool ok = true;
            for (auto& z : zs) {
                if (mpfr_sgn(z.im) <= 0) continue;
                CInt box(prec);
                if (!inclusion_box(f, z, std::max(prec, wp), box)) continue;
                if (box.im().contains_zero()) continue;
                if (!box.im().is_positive()) continue;
                upper.push_back(box);
            }
            // dedupe: drop boxes that overlap an earlier one
            std::vector<CInt> uniq;
            for (auto& b : upper) {
                bool dup = false;
                for (auto& u : uniq)
                    if (!b.disjoint_from(u)) { dup = true; break; }
                if (!dup) uniq.push_back(b);
            }
            if (static_cast<int>(uniq.size()) * 2 != ncpx) ok = false;
            if (ok) {
                // check disjointness vs real boxes too (holds since off-axis)
                for (auto& b : uniq) {
                    out.push_back({b, false});
                    out.push_back({CInt(b.re(), -b.im()), false});
                }
                break;
            }
            if (attempt == 7) raise(errc::internal, "complex root certification failed");
        }
    }
    // canonical order: by real part, ties by imaginary part; boxes are disjoint
    // in re or (for equal re such as conjugates) in im
    std::sort(out.begin(), out.end(), rootbox_before);
    return out;
}

bool rootbox_before(const RootBox& x, const RootBox& y) {
    if (x.box.re().disjoint_from(y.box.re())) return x.box.re().definitely_lt(y.box.re());
    return x.box.im().definitely_lt(y.box.im());
}

std::vector<RootBox> refine_roots(const ZPoly& f, const std::vector<RootBox>& boxes, long prec) {
    mpq_class tw = mpq_class(1);
    for (long i = 0; i < prec; ++i) tw /= 2;
    std::vector<RootBox> out;
    out.reserve(boxes.size());
    for (const auto& rb : boxes) {
        if (rb.real) {
            RealRootIv iv{rb.box.re().lo_q(), rb.box.re().hi_q()};
            // endpoints of a real box are non-roots by construction unless point
            if (iv.a != iv.b && f.sign_at(iv.a) == 0) {
                out.push_back(rb);
                continue;
            }
            bisect_to(f, iv, tw);
            out.push_back(
                {CInt(RInt::from_q(iv.a, iv.b, prec), RInt::from_q(0, 0, prec)), true});
        } else {
            // Newton polish from the midpoint at higher working precision
            long wp = prec + 64;
            bool done = false;
            for (int attempt = 0; attempt < 6 && !done; ++attempt, wp *= 2) {
                MC z(wp);
                mpq_class mr = rb.box.re().mid_q(), mi = rb.box.im().mid_q();
                mpfr_set_q(z.re, mr.get_mpq_t(), MPFR_RNDN);
                mpfr_set_q(z.im, mi.get_mpq_t(), MPFR_RNDN);
                mpfr_t t1, t2, t3;
                mpfr_init2(t1, wp);
                mpfr_init2(t2, wp);
                mpfr_init2(t3, wp);
                MC fz(wp), fpz(wp), corr(wp);
                for (int it = 0; it < 200; ++it) {
                    mc_eval_fp(f, z, fz, fpz, wp);
                    if (mc_abs_d(fpz) == 0) break;
                    mc_div(corr, fz, fpz, t1, t2, t3);
                    mc_sub(z, z, corr);
                    double scale = std::max(1.0, mc_abs_d(z));
                    if (mc_abs_d(corr) / scale < std::ldexp(1.0, static_cast<int>(-prec - 16)))
                        break;
                }
                mpfr_clear(t1);
                mpfr_clear(t2);
                mpfr_clear(t3);
                CInt nb(prec);
                if (inclusion_box(f, z, wp, nb) && !nb.disjoint_from(rb.box)) {
                    CInt merged = nb.intersect(rb.box);
                    out.push_back({merged, false});
                    done = true;
                }
            }
            if (!done) out.push_back(rb); // keep old rigorous box
        }
    }
    return out;
}

} // namespace isozero
