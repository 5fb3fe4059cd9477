#include "doctest.h"

#include "isozero/algnum.hpp"
#include "isozero/errors.hpp"

#include <random>

using namespace isozero;

namespace {

QPoly qp(std::initializer_list<long> cs) {
    std::vector<mpq_class> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

FieldElement rand_elt(const NumberField& K, std::mt19937_64& rng) {
    std::vector<mpq_class> c(K.degree());
    for (auto& v : c) {
        v = mpq_class(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
        v.canonicalize();
    }
    return K.element(std::move(c));
}

} // namespace

TEST_CASE("nf_create basic examples") {
    // x^2-2, root 0: theta ~ -1.414
    NumberField K = nf_create(qp({-2, 0, 1}), 0);
    CHECK(K.degree() == 2);
    CInt th = K.distinguished_root(128);
    CHECK(th.re().is_negative());
    CHECK(th.re().contains_q(mpq_class(0)) == false);
    RInt sq = th.re().square();
    CHECK(sq.contains_q(2));

    // x-5: degree 1, theta = 5
    NumberField Q5 = nf_create(qp({-5, 1}), 0);
    CHECK(Q5.degree() == 1);
    CHECK(Q5.theta().coords()[0] == 5);

    // x^4-10x^2+1, root 3 = sqrt2+sqrt3 (largest)
    NumberField L = nf_create(qp({1, 0, -10, 0, 1}), 3);
    CHECK(L.degree() == 4);
    CInt r3 = L.distinguished_root(128);
    CHECK(r3.re().is_positive());
    // sqrt2 = (theta^3 - 9 theta)/2 in this field
    FieldElement th3 = L.theta().pow(3);
    FieldElement s2 = (th3 - L.theta().scale(9)).scale(mpq_class(1, 2));
    CHECK(s2 * s2 == L.from_rational(2));

    // reducible input: factor containing the selected root is used
    NumberField M = nf_create(qp({-2, 0, 1}) * qp({-3, 0, 1}), 0); // roots -sqrt3,-sqrt2,sqrt2,sqrt3
    CHECK(M.degree() == 2);
    CHECK(M.theta() * M.theta() == M.from_rational(3));

    CHECK_THROWS_AS(nf_create(QPoly(), 0), error);
    CHECK_THROWS_AS(nf_create(qp({7}), 0), error);
    CHECK_THROWS_AS(nf_create(qp({-2, 0, 1}), 5), error);
}

TEST_CASE("field arithmetic examples") {
    NumberField K = nf_create(qp({-2, 0, 1}), 1); // Q(sqrt2)
    FieldElement th = K.theta();
    FieldElement one = K.one();
    // (1+theta)(1-theta) = -1
    CHECK(field_arithmetic(one + th, one - th, FieldOp::mul) == K.from_rational(-1));
    // 1/theta = theta/2
    CHECK(field_arithmetic(one, th, FieldOp::div) == th.scale(mpq_class(1, 2)));

    // Q(i): (2+i)/(1-i) = (1+3i)/2
    NumberField Qi = nf_create(qp({1, 0, 1}), 1);
    FieldElement i = Qi.theta();
    FieldElement lhs = (Qi.from_rational(2) + i) / (Qi.one() - i);
    CHECK(lhs == Qi.element({mpq_class(1, 2), mpq_class(3, 2)}));

    CHECK_THROWS_AS(one / K.zero(), error);
    NumberField K2 = nf_create(qp({-2, 0, 1}), 1);
    CHECK_THROWS_AS((void)(K.one() + K2.one()), error); // distinct instances: no coercion
}

TEST_CASE("ring axioms and inverses on random elements") {
    NumberField K = nf_create(qp({1, 0, -10, 0, 1}), 3);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        FieldElement a = rand_elt(K, rng), b = rand_elt(K, rng), c = rand_elt(K, rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(field_arithmetic(a, a, FieldOp::div) == K.one());
    }
}

TEST_CASE("minimal_polynomial examples") {
    NumberField K = nf_create(qp({-2, 0, 1}), 1);
    CHECK(minimal_polynomial(K.theta()) == ZPoly::from_q(qp({-2, 0, 1})));
    // 1+theta -> x^2-2x-1
    CHECK(minimal_polynomial(K.one() + K.theta()) == ZPoly::from_q(qp({-1, -2, 1})));
    // rational 3 -> x-3
    CHECK(minimal_polynomial(K.from_rational(3)) == ZPoly::from_q(qp({-3, 1})));
    CHECK(minimal_polynomial(K.from_rational(mpq_class(1, 3))) == ZPoly::from_q(qp({-1, 3})));

    // in degree 4 field: sqrt2 has min poly x^2-2 (degree divides)
    NumberField L = nf_create(qp({1, 0, -10, 0, 1}), 3);
    FieldElement s2 = (L.theta().pow(3) - L.theta().scale(9)).scale(mpq_class(1, 2));
    CHECK(minimal_polynomial(s2) == ZPoly::from_q(qp({-2, 0, 1})));

    // evaluated at the element it vanishes exactly
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        FieldElement a = rand_elt(L, rng);
        ZPoly mp = minimal_polynomial(a);
        FieldElement acc = L.zero();
        for (int i = mp.degree(); i >= 0; --i)
            acc = acc * a + L.from_rational(mpq_class(mp[i]));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("conjugate enclosures match minimal polynomial roots") {
    NumberField L = nf_create(qp({1, 0, -10, 0, 1}), 3);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 6; ++t) {
        FieldElement a = rand_elt(L, rng);
        ZPoly mp = minimal_polynomial(a);
        int mult = L.degree() / mp.degree();
        auto mroots = isolate_roots(mp, 160);
        // every embedding value must land in some root box, each box hit `mult` times
        std::vector<int> hits(mroots.size(), 0);
        for (int j = 0; j < L.degree(); ++j) {
            CInt v = a.embed_numeric(j, 320);
            int landed = -1;
            for (size_t r = 0; r < mroots.size(); ++r) {
                if (!v.disjoint_from(mroots[r].box)) {
                    landed = static_cast<int>(r);
                }
            }
            REQUIRE(landed >= 0);
            hits[landed]++;
        }
        for (int h : hits) CHECK(h == mult);
    }
}

TEST_CASE("embed_numeric examples") {
    NumberField K = nf_create(qp({-2, 0, 1}), 1);
    // both real embeddings of theta: -sqrt2 and sqrt2
    CInt e0 = K.theta().embed_numeric(0, 128);
    CInt e1 = K.theta().embed_numeric(1, 128);
    CHECK(e0.re().is_negative());
    CHECK(e1.re().is_positive());
    CHECK(e0.im().contains_q(0));
    // rational is a point interval
    CInt r = K.from_rational(mpq_class(7, 3)).embed_numeric(0, 128);
    CHECK(r.re().contains_q(mpq_class(7, 3)));
    CHECK(r.re().width_d() < 1e-30);
    // widths shrink with precision
    CInt lo = K.theta().embed_numeric(1, 96);
    CInt hi = K.theta().embed_numeric(1, 256);
    CHECK(hi.re().width_d() <= lo.re().width_d());
    // Q(i): embeddings are -i and +i
    NumberField Qi = nf_create(qp({1, 0, 1}), 1);
    CHECK(Qi.theta().embed_numeric(0, 128).im().is_negative());
    CHECK(Qi.theta().embed_numeric(1, 128).im().is_positive());
}

TEST_CASE("adjoin_sqrt basic") {
    // Q, a=2 -> degree 2, root^2 = 2
    NumberField Q = nf_rationals();
    Extension e = adjoin_sqrt(Q, Q.from_rational(2));
    CHECK(!e.identity);
    CHECK(e.to.degree() == 2);
    CHECK(e.root * e.root == e.embed(Q.from_rational(2)));
    // principal root is positive
    CHECK(e.root.embed0(128).re().is_positive());

    // Q, a=-1 -> Q(i)
    Extension ei = adjoin_sqrt(Q, Q.from_rational(-1));
    CHECK(ei.to.degree() == 2);
    CHECK(ei.root * ei.root == ei.to.from_rational(-1));
    CHECK(ei.root.embed0(128).im().is_positive());

    // Q, a = 9/4 already square
    Extension esq = adjoin_sqrt(Q, Q.from_rational(mpq_class(9, 4)));
    CHECK(esq.identity);
    CHECK(esq.root == Q.from_rational(mpq_class(3, 2)));

    // K = Q(sqrt2), a = 2: identity with root theta (the positive root)
    NumberField K = nf_create(qp({-2, 0, 1}), 1);
    Extension e2 = adjoin_sqrt(K, K.from_rational(2));
    CHECK(e2.identity);
    CHECK(e2.root == K.theta());

    CHECK_THROWS_AS(adjoin_sqrt(Q, Q.zero()), error);
}

TEST_CASE("adjoin_sqrt builds proper towers") {
    // Q(sqrt2), adjoin sqrt3: degree 4; embedding is a ring hom on random pairs
    NumberField K = nf_create(qp({-2, 0, 1}), 1);
    Extension e = adjoin_sqrt(K, K.from_rational(3));
    CHECK(!e.identity);
    CHECK(e.to.degree() == 4);
    CHECK(e.root * e.root == e.to.from_rational(3));
    FieldElement th_img = e.theta_image;
    CHECK(th_img * th_img == e.to.from_rational(2));

    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        FieldElement a = rand_elt(K, rng), b = rand_elt(K, rng);
        CHECK(e.embed(a * b) == e.embed(a) * e.embed(b));
        CHECK(e.embed(a + b) == e.embed(a) + e.embed(b));
    }

    // adjoin sqrt of a non-rational element: sqrt(theta) over Q(sqrt2), theta>0
    Extension e2 = adjoin_sqrt(K, K.theta());
    CHECK(!e2.identity);
    CHECK(e2.to.degree() == 4);
    CHECK(e2.root * e2.root == e2.embed(K.theta()));

    // negative value: sqrt(-theta) needs a complex field
    Extension e3 = adjoin_sqrt(K, -K.theta());
    CHECK(e3.root * e3.root == e3.embed(-K.theta()));
}

TEST_CASE("tower lifting") {
    NumberField Q = nf_rationals();
    Tower tw(Q);
    FieldElement s2 = tw.adjoin_sqrt_of(Q.from_rational(2));
    CHECK(tw.top().degree() == 2);
    FieldElement s3 = tw.adjoin_sqrt_of(tw.top().from_rational(3));
    CHECK(tw.top().degree() == 4);
    FieldElement s2top = tw.lift(s2);
    CHECK(s2top * s2top == tw.top().from_rational(2));
    CHECK(s2top * tw.lift(s3) * (s2top * tw.lift(s3)) == tw.top().from_rational(6));
    // adjoining an already-present square root does not grow the tower
    FieldElement s6 = tw.adjoin_sqrt_of(tw.top().from_rational(6));
    CHECK(tw.top().degree() == 4);
    CHECK(s6 == s2top * tw.lift(s3));
}

TEST_CASE("field_norm") {
    NumberField K = nf_create(qp({-2, 0, 1}), 1);
    CHECK(field_norm(K.theta()) == -2);
    CHECK(field_norm(K.one() + K.theta()) == -1);            // (1+s2)(1-s2)
    CHECK(field_norm(K.from_rational(3) + K.theta()) == 7);  // 9-2
    CHECK(field_norm(K.from_rational(mpq_class(5, 3))) == mpq_class(25, 9));
}
