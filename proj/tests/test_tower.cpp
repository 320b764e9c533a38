#include "doctest.h"

#include "bstower/tower/certificate.hpp"

using namespace bstower;

namespace {

FieldOrder const& k1()
{
    static FieldOrder const k(IntPoly::parse("x^6 + x^4 - 4*x^3 - 7*x^2 - x + 1"));
    return k;
}

FieldOrder const& k2()
{
    static FieldOrder const k(IntPoly::parse("x^6 - x^5 - 10*x^4 + 4*x^3 + 29*x^2 + 3*x - 13"));
    return k;
}

OrderElement el(FieldOrder const& k, char const* text) { return k.element(IntPoly::parse(text)); }

QuadraticExtension const& K1()
{
    static QuadraticExtension const K(k1(), k1().neg(el(k1(), "671x^5 - 467x^4 + 994x^3 - 3360x^2 - 2314x + 961")));
    return K;
}

QuadraticExtension const& K2()
{
    static QuadraticExtension const K(k2(),
                                      el(k2(), "-2993x^5 + 7230x^4 + 18937x^3 - 38788x^2 - 32096x + 44590"));
    return K;
}

bool near(Real const& a, char const* b, char const* tol) { return abs(a - Real(b)) <= Real(tol); }

}  // namespace

TEST_CASE("lower bound on the generator rank")
{
    CHECK(dgt_lower_bound({8, 4, 4, 1, 1, 2}) == 6);
    CHECK(dgt_lower_bound({0, 0, 1, 0, 0, 2}) == -1);

    RamificationData r1 = ramification_data(K1());
    CHECK(r1.t == 8);
    CHECK(r1.r1 == 4);
    CHECK(r1.r2 == 1);
    CHECK(r1.rho == 4);
    CHECK(r1.delta_ell == 1);
    CHECK(dgt_lower_bound(r1) == 6);

    RamificationData r2 = ramification_data(K2());
    CHECK(r2.t == 15);
    CHECK(dgt_lower_bound(r2) == r2.t - 7);
    CHECK(dgt_lower_bound(r2) == 8);

    CHECK(delta_ell(k1(), 5) == 0);
    CHECK_THROWS_AS(delta_ell(k1(), 3), Error);
    CHECK_THROWS_AS(delta_ell(k1(), 4), Error);
}

TEST_CASE("Golod-Shafarevich thresholds")
{
    CHECK(near(gs_threshold(0, 6, 0), "6.8989", "1e-4"));
    CHECK(gs_threshold(0, 0, 0) == 2);
    CHECK(near(gs_threshold(12, 0, 0), "8.9282", "1e-4"));
    CHECK(near(gs_threshold(0, 6, 1), "7.2915", "1e-4"));

    CHECK_FALSE(gs_certificate(6, 0, 6, 0).infinite);
    CHECK(gs_certificate(7, 0, 6, 0).infinite);
    CHECK_FALSE(gs_certificate(7, 0, 6, 1).infinite);
    CHECK(gs_certificate(2, 0, 0, 0).infinite);
}

TEST_CASE("example 1 augmentation")
{
    OrderElement pi3 = el(k1(), "-6x^5 + 4x^4 - 9x^3 + 30x^2 + 21x - 7");
    OrderElement pi19 = el(k1(), "5x^5 - 4x^4 + 8x^3 - 26x^2 - 15x + 6");
    SquareWitness w{el(k1(), "x^5 + x^3 + x^2 + 1"), el(k1(), "2x^5 - 8x^4 - 14x^3 - 28x^2 - 9x + 5")};

    auto v = verify_tame_augmentation(K1(), pi3, pi19, 2, w);
    CHECK(v.valid);
    CHECK(v.aug == el(k1(), "11x^5 - 8x^4 + 17x^3 - 56x^2 - 35x + 14"));
    REQUIRE(v.T.size() == 1);
    CHECK(v.T[0].norm == 9);
    CHECK(*v.new_prime_in_K == Splitting::inert);
    CHECK(v.real_places_ramified == 0);

    auto searched = verify_tame_augmentation(K1(), pi3, pi19);
    CHECK(searched.valid);

    int d_T = dgt_lower_bound(ramification_data(K1())) + 1;
    CHECK(d_T == 7);
    CHECK(gs_certificate(d_T, 0, 6, 0).infinite);

    OrderElement pi7 = el(k1(), "-9x^5 + 6x^4 - 13x^3 + 44x^2 + 31x - 12");
    OrderElement pi13 = el(k1(), "-7x^5 + 5x^4 - 11x^3 + 36x^2 + 23x - 9");
    auto bad = verify_tame_augmentation(K1(), pi7, pi13);
    CHECK_FALSE(bad.valid);
    bool unramified_failed = false;
    for (auto const& c : bad.checks)
        if (c.name == "new prime unramified in K")
            unramified_failed = !c.pass;
    CHECK(unramified_failed);

    auto unit = verify_tame_augmentation(K1(), k1().one(), pi19);
    CHECK_FALSE(unit.valid);
}

TEST_CASE("example 2 augmentation")
{
    OrderElement p_new = k2().from_ints({2, 2, -1, -1, 0, 0});
    OrderElement p_old = k2().from_ints({0, -1, 0, 0, 0, 0});
    auto v = verify_tame_augmentation(K2(), p_new, p_old);
    CHECK(v.valid);
    REQUIRE(v.witness);
    CHECK(v.witness->beta == k2().from_ints({0, 0, 1, 1, 1, 1}));
    CHECK(v.aug == k2().from_ints({0, -2, -2, 1, 1, 0}));
    REQUIRE(v.T.size() == 2);
    CHECK(v.T[0].norm == 71);
    CHECK(v.T[1].norm == 71);
    CHECK(v.real_places_ramified > 0);

    int d_T = dgt_lower_bound(ramification_data(K2())) + 1;
    CHECK(d_T == 9);
    CHECK(gs_certificate(d_T, 12, 0, 0).infinite);
    CHECK_FALSE(gs_certificate(d_T, 12, 0, 1).infinite);
}

TEST_CASE("genus limit and phi intervals")
{
    GenusLimit g = genus_ratio_limit(Real("25.3490"), 12, {Integer(9)});
    CHECK(near(g.ratio_bound, "2.2040", "1e-4"));
    GenusLimit empty = genus_ratio_limit(Real(30), 12, {});
    CHECK(empty.ratio_bound == Real(30) / 12);
    GenusLimit more = genus_ratio_limit(Real("25.3490"), 12, {Integer(9), Integer(2)});
    CHECK(more.ratio_bound > g.ratio_bound);

    GenusLimit l1 = genus_ratio_limit(K1().genus(), 12, {Integer(9)});
    auto phi1 = phi_intervals(l1, ExtensionKind::totally_complex);
    CHECK(phi1[0].hi == 0);
    CHECK(near(phi1[1].lo, "0.22687", "1e-5"));
    CHECK(near(phi1[1].hi, "0.23669", "1e-5"));
    CHECK(near(phi1[1].lo, "0.22686323539778627", "1e-15"));
    CHECK(near(phi1[1].hi, "0.23669535278052503", "1e-15"));

    auto point = phi_intervals(genus_ratio_limit(Real(12), 12, {}), ExtensionKind::totally_complex);
    CHECK(point[1].lo == point[1].hi);

    GenusLimit l2 = genus_ratio_limit(K2().genus(), 12, {Integer(71), Integer(71)});
    auto phi2 = phi_intervals(l2, ExtensionKind::totally_real);
    CHECK(phi2[1].hi == 0);
    CHECK(near(phi2[0].lo, "0.27182510697548506", "1e-15"));
    CHECK(near(phi2[0].hi, "0.3008774142192029", "1e-15"));

    CHECK_THROWS_AS(phi_intervals(l1, ExtensionKind::mixed), Error);
}
