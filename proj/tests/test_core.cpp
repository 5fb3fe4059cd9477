#include "doctest.h"

#include "isozero/interval.hpp"
#include "isozero/qpoly.hpp"
#include "isozero/errors.hpp"

#include <random>

using namespace isozero;

static QPoly qp(std::initializer_list<long> cs) {
    std::vector<mpq_class> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

static ZPoly zp(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return ZPoly(std::move(v));
}

TEST_CASE("interval arithmetic encloses exact rational results") {
    std::mt19937_64 rng(7);
    auto rq = [&]() {
        long n = static_cast<long>(rng() % 41) - 20;
        long d = 1 + static_cast<long>(rng() % 9);
        return mpq_class(n, d);
    };
    for (int i = 0; i < 200; ++i) {
        mpq_class a = rq(), b = rq();
        RInt ia = RInt::from_q(a, 128), ib = RInt::from_q(b, 128);
        CHECK((ia + ib).contains_q(a + b));
        CHECK((ia - ib).contains_q(a - b));
        CHECK((ia * ib).contains_q(a * b));
        if (b != 0 && !ib.contains_zero()) CHECK((ia / ib).contains_q(a / b));
        CHECK(ia.square().contains_q(a * a));
    }
}

TEST_CASE("interval sqrt and rational powers") {
    RInt two = RInt::from_si(2, 128);
    RInt s = two.sqrt();
    CHECK(s.lo_q() < mpq_class("1414213563/1000000000"));
    CHECK(s.hi_q() > mpq_class("1414213562/1000000000"));
    CHECK(s.width_d() < 1e-30);
    RInt p = two.pow_q(mpq_class(3, 2)); // 2^(3/2)
    RInt chk = s * two;
    CHECK(!p.disjoint_from(chk));
    // monotone width under precision
    RInt s2 = RInt::from_si(2, 512).sqrt();
    CHECK(s2.width_d() <= s.width_d());
}

TEST_CASE("complex interval arithmetic") {
    CInt i = CInt::from_q(0, 1, 128);
    CInt z = i * i;
    CHECK(z.re().contains_q(-1));
    CHECK(z.im().contains_q(0));
    CInt a = CInt::from_q(mpq_class(2), mpq_class(1), 128);
    CInt b = CInt::from_q(mpq_class(1), mpq_class(-1), 128);
    CInt q = a / b; // (2+i)/(1-i) = (1+3i)/2
    CHECK(q.re().contains_q(mpq_class(1, 2)));
    CHECK(q.im().contains_q(mpq_class(3, 2)));
}

TEST_CASE("polynomial division, gcd, resultant") {
    // (x^2-1) = (x-1)(x+1)
    QPoly f = qp({-1, 0, 1});
    QPoly g = qp({-1, 1});
    auto [q, r] = f.divrem(g);
    CHECK(r.is_zero());
    CHECK(q == qp({1, 1}));

    QPoly a = qp({-2, 0, 1});  // x^2-2
    QPoly b = qp({-3, 0, 1});  // x^2-3
    CHECK(QPoly::gcd(a, b).degree() == 0);
    // res(x^2-2, x^2-3) = (2-3)^2 = 1
    CHECK(a.resultant(b) == 1);
    // res(x^2-2, x-1) = f(1) = -1 up to convention: lc(g)^... = -1
    CHECK(a.resultant(qp({-1, 1})) == -1);

    QPoly u, v;
    QPoly d = QPoly::ext_gcd(a, b, u, v);
    CHECK(d.degree() == 0);
    CHECK(u * a + v * b == d);
}

TEST_CASE("factorization over Q") {
    // x^4 - 10x^2 + 1 irreducible
    QPoly f = qp({1, 0, -10, 0, 1});
    CHECK(is_irreducible_over_q(f));

    // (x^2-2)(x^2-3)
    QPoly g = qp({-2, 0, 1}) * qp({-3, 0, 1});
    auto fac = factor_over_q(g);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].poly.degree() == 2);
    CHECK(fac[1].poly.degree() == 2);

    // multiplicities: (x-1)^2 (x+2)
    QPoly h = qp({-1, 1}) * qp({-1, 1}) * qp({2, 1});
    auto fh = factor_over_q(h);
    int total = 0;
    for (auto& qf : fh) total += qf.poly.degree() * qf.multiplicity;
    CHECK(total == 3);
    bool has_mult2 = false;
    for (auto& qf : fh)
        if (qf.multiplicity == 2) has_mult2 = true;
    CHECK(has_mult2);

    // non-monic: 2x^2 - 1 irreducible
    CHECK(is_irreducible_over_q(qp({-1, 0, 2})));
    // 6x^2 + 5x + 1 = (2x+1)(3x+1)
    auto f6 = factor_over_q(qp({1, 5, 6}));
    CHECK(f6.size() == 2);

    // degree cap
    std::vector<mpq_class> big(70, 0);
    big[0] = 1;
    big[69] = 1;
    CHECK_THROWS_AS(factor_over_q(QPoly(std::move(big))), isozero::error);
}

TEST_CASE("random product refactors") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        QPoly prod = QPoly::constant(1);
        int nf = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < nf; ++i) {
            int d = 1 + static_cast<int>(rng() % 3);
            std::vector<mpq_class> c(d + 1);
            for (int j = 0; j <= d; ++j) c[j] = static_cast<long>(rng() % 11) - 5;
            c[d] = 1 + static_cast<long>(rng() % 3);
            QPoly f{std::move(c)};
            if (f.degree() < 1) continue;
            prod = prod * f;
        }
        if (prod.degree() < 2) continue;
        auto fac = factor_over_q(prod);
        QPoly re = QPoly::constant(1);
        for (auto& qf : fac)
            for (int m = 0; m < qf.multiplicity; ++m) re = re * qf.poly.to_q();
        CHECK(re.monic() == prod.monic());
    }
}

TEST_CASE("cyclotomic detection") {
    CHECK(is_cyclotomic(zp({1, 1})));           // x+1
    CHECK(is_cyclotomic(zp({1, 1, 1})));        // x^2+x+1
    CHECK(is_cyclotomic(zp({1, 0, 1})));        // x^2+1
    CHECK(is_cyclotomic(zp({1, -1, 1})));       // x^2-x+1 (6th)
    CHECK(!is_cyclotomic(zp({-2, 0, 1})));      // x^2-2
    CHECK(!is_cyclotomic(zp({-1, -1, 1})));     // x^2-x-1
}

TEST_CASE("root isolation: real and complex") {
    // x^2-2: two real roots
    ZPoly f = zp({-2, 0, 1});
    auto roots = isolate_roots(f, 128);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].real);
    CHECK(roots[1].real);
    CHECK(roots[0].box.re().is_negative());
    CHECK(roots[1].box.re().is_positive());
    mpq_class approx("-14142135624/10000000000");
    CHECK(roots[0].box.re().lo_q() < approx + mpq_class(1, 1000000));
    CHECK(roots[0].box.re().hi_q() > approx - mpq_class(1, 1000000));

    // x^2+1: conjugate pair
    ZPoly g = zp({1, 0, 1});
    auto rg = isolate_roots(g, 128);
    REQUIRE(rg.size() == 2);
    CHECK(!rg[0].real);
    CHECK(rg[0].box.im().is_negative()); // -i first by canonical order
    CHECK(rg[1].box.im().is_positive());
    CHECK(rg[1].box.im().contains_q(1));

    // x^4-10x^2+1: four real roots, sorted
    ZPoly h = zp({1, 0, -10, 0, 1});
    auto rh = isolate_roots(h, 160);
    REQUIRE(rh.size() == 4);
    for (int i = 0; i + 1 < 4; ++i) CHECK(rh[i].box.re().definitely_lt(rh[i + 1].box.re()));

    // mixed: x^3-2 (one real, one conjugate pair)
    ZPoly k = zp({-2, 0, 0, 1});
    auto rk = isolate_roots(k, 128);
    REQUIRE(rk.size() == 3);
    int nreal = 0;
    for (auto& rb : rk) nreal += rb.real ? 1 : 0;
    CHECK(nreal == 1);

    // refinement nests and shrinks
    auto rh2 = refine_roots(h, rh, 320);
    for (size_t i = 0; i < rh.size(); ++i) {
        CHECK(rh2[i].box.re().width_d() <= rh[i].box.re().width_d());
        CHECK(!rh2[i].box.disjoint_from(rh[i].box));
    }
}

TEST_CASE("sturm count") {
    ZPoly f = zp({-2, 0, 1});
    CHECK(sturm_count(f, mpq_class(-2), mpq_class(2)) == 2);
    CHECK(sturm_count(f, mpq_class(0), mpq_class(2)) == 1);
    CHECK(sturm_count(f, mpq_class(2), mpq_class(3)) == 0);
}
