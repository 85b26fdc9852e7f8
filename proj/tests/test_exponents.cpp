#include <doctest.h>

#include <strichartz/exponents.hpp>

#include "strichartz/random.hpp"

using namespace strichartz;

namespace {

ExponentTuple tuple(long rn, long rd, long rtn, long rtd, long qn, long qd,
                    long qtn, long qtd, int n) {
    return make_tuple(rat(rn, rd), rat(rtn, rtd), rat(qn, qd), rat(qtn, qtd),
                      n);
}

// Random exact rational in [0, 1] with denominator up to max_den.
Rational random_unit_rational(Rng& rng, long max_den) {
    const long den = 1 + static_cast<long>(rng.next_u64() %
                                           static_cast<std::uint64_t>(max_den));
    const long num = static_cast<long>(rng.next_u64() %
                                       static_cast<std::uint64_t>(den + 1));
    return rat(num, den);
}

}  // namespace

TEST_CASE("scaling gap at the corner tuple and degenerate tuples") {
    // q = qt' and 1/r + 1/rt = (n-2)/n forces a zero gap.
    CHECK(scaling_gap(tuple(1, 4, 1, 12, 1, 4, 3, 4, 3)) == rat(0));
    // all exponents infinite
    CHECK(scaling_gap(tuple(0, 1, 0, 1, 0, 1, 0, 1, 3)) == rat(-3, 2));
    CHECK(scaling_gap(tuple(1, 2, 1, 2, 0, 1, 0, 1, 4)) == rat(0));
}

TEST_CASE("scaling gap vanishes identically on the constrained family") {
    // 10^4 random rational tuples with q = qt' and 1/r + 1/rt = (n-2)/n.
    Rng rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 8);
        const Rational sum = rat(n - 2, n);
        Rational inv_r = random_unit_rational(rng, 60) * sum;
        const Rational inv_rt = sum - inv_r;
        const Rational inv_q = random_unit_rational(rng, 60);
        const Rational inv_qt = one_minus(inv_q);
        const auto t = make_tuple(inv_r, inv_rt, inv_q, inv_qt, n);
        REQUIRE(scaling_gap(t) == rat(0));
    }
}

TEST_CASE("homogeneous admissibility") {
    CHECK(homogeneous_admissible(rat(1, 2), rat(0), 3));
    CHECK_FALSE(homogeneous_admissible(rat(0), rat(1, 2), 2));  // (2, inf, 2)
    CHECK(homogeneous_admissible(rat(1, 6), rat(1, 2), 3));
    CHECK_FALSE(homogeneous_admissible(rat(1, 6), rat(1, 2), 4));
    CHECK(homogeneous_admissible(rat(1, 4), rat(1, 2), 4));
    CHECK_FALSE(homogeneous_admissible(rat(2, 3), rat(0), 3));  // r < 2
}

TEST_CASE("region vertices: caption formulas, mirror symmetry, collinearity") {
    SUBCASE("known corner values") {
        const auto v3 = region_vertices(3);
        const auto p3 = std::find_if(v3.begin(), v3.end(), [](const auto& v) {
            return v.label == VertexLabel::P;
        });
        REQUIRE(p3 != v3.end());
        CHECK(p3->x == rat(1, 4));
        CHECK(p3->y == rat(1, 12));

        const auto v4 = region_vertices(4);
        const auto p4 = std::find_if(v4.begin(), v4.end(), [](const auto& v) {
            return v.label == VertexLabel::P;
        });
        CHECK(p4->x == rat(1, 3));
        CHECK(p4->y == rat(1, 6));
    }

    SUBCASE("P' mirrors P and P sits on OB for many n") {
        for (int n : {3, 4, 5, 7, 10, 25}) {
            const Rational px = corner_p_x(n);
            const Rational py = corner_p_y(n);
            const auto vertices = region_vertices(n);
            for (const auto& v : vertices) {
                if (v.label == VertexLabel::Pp) {
                    CHECK(v.x == py);
                    CHECK(v.y == px);
                }
            }
            // exact collinearity with O and B = (1/2, (n-2)/2n)
            CHECK(py * rat(1, 2) == px * rat(n - 2, 2 * n));
            // slope of OP equals (n-2)/n
            CHECK(py * Rational(n) == px * Rational(n - 2));
        }
    }

    SUBCASE("n below 3 rejected") {
        CHECK_THROWS_AS(region_vertices(2), std::invalid_argument);
    }
}

TEST_CASE("dyadic decay regimes with the lowest-number tie-break") {
    CHECK(decay_regime(rat(0), rat(1, 2), 3) == DecayRegime::I);
    CHECK(decay_regime(rat(1, 4), rat(1, 12), 3) == DecayRegime::III);
    CHECK(decay_regime(rat(1, 2), rat(0), 3) == DecayRegime::IV);
    // interior samples
    CHECK(decay_regime(rat(1, 4), rat(1, 2), 3) == DecayRegime::II);
    // boundary 1/r = 1/rt goes to II by the tie-break
    CHECK(decay_regime(rat(1, 3), rat(1, 3), 3) == DecayRegime::II);
    // i/ii boundary goes to I
    CHECK(decay_regime(rat(1, 6), rat(1, 2), 3) == DecayRegime::I);
}

TEST_CASE("decay exponent values and side-condition flags") {
    SUBCASE("corner tuple: regime iii, beta = 0, window holds") {
        const auto d = decay_exponent(tuple(1, 4, 1, 12, 1, 4, 3, 4, 3));
        CHECK(d.regime == DecayRegime::III);
        CHECK(d.beta == rat(0));
        CHECK(d.window_ok);
    }
    SUBCASE("regime i tuple with beta = 1/2") {
        const auto d = decay_exponent(tuple(0, 1, 1, 2, 1, 2, 1, 2, 3));
        CHECK(d.regime == DecayRegime::I);
        CHECK(d.beta == rat(1, 2));
        CHECK(d.window_ok);
    }
    SUBCASE("point A with q = qt = inf: regime ii, beta = 0, window holds") {
        const auto d = decay_exponent(tuple(1, 2, 1, 2, 0, 1, 0, 1, 3));
        CHECK(d.regime == DecayRegime::II);
        CHECK(d.beta == rat(0));
        CHECK(d.window_ok);
    }
    SUBCASE("window violation is reported") {
        // At the corner (1/r,1/rt) = P with 1/q = 3/4 > 1/qt' = 1/2.
        const auto d = decay_exponent(tuple(1, 4, 1, 12, 3, 4, 1, 2, 3));
        CHECK_FALSE(d.window_ok);
        CHECK(d.violated == "1/q <= 1/qt'");
    }
}

TEST_CASE("beta is continuous across regime boundaries") {
    // On i/ii and iii/iv boundaries the adjacent formulas agree exactly;
    // check 100 random boundary points with exact arithmetic.
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 6);
        const Rational inv_rt = random_unit_rational(rng, 40) * rat(1, 2);
        const Rational inv_q = random_unit_rational(rng, 40);
        const Rational inv_qt = random_unit_rational(rng, 40);
        const Rational half_n = rat(n, 2);

        // i/ii boundary: 1/r = (n-2)/n * 1/rt
        const Rational r_i = rat(n - 2, n) * inv_rt;
        const Rational beta_i =
            inv_q + inv_qt + (n - 1) * inv_rt - half_n;
        const Rational beta_ii =
            inv_q + inv_qt - half_n * (Rational(1) - r_i - inv_rt);
        CHECK(beta_i == beta_ii);
        const auto d = decay_exponent(make_tuple(r_i, inv_rt, inv_q, inv_qt, n));
        CHECK(d.beta == beta_i);

        // iii/iv boundary: 1/r = n/(n-2) * 1/rt, kept inside [0, 1/2]
        const Rational r_iv = rat(n, n - 2) * inv_rt;
        if (r_iv <= rat(1, 2)) {
            const Rational beta_iii =
                inv_q + inv_qt - half_n * (Rational(1) - r_iv - inv_rt);
            const Rational beta_iv =
                inv_q + inv_qt + (n - 1) * r_iv - half_n;
            CHECK(beta_iii == beta_iv);
            const auto b =
                decay_exponent(make_tuple(r_iv, inv_rt, inv_q, inv_qt, n));
            CHECK(b.beta == beta_iii);
        }
    }
}

TEST_CASE("zero scaling gap forces beta = 0 in regimes ii/iii") {
    // Algebraic identity: the ii/iii formula equals the scaling gap.
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 6);
        const Rational inv_r = random_unit_rational(rng, 30) * rat(1, 2);
        const Rational inv_rt = random_unit_rational(rng, 30) * rat(1, 2);
        const Rational inv_q = random_unit_rational(rng, 30);
        const Rational inv_qt = random_unit_rational(rng, 30);
        const auto t = make_tuple(inv_r, inv_rt, inv_q, inv_qt, n);
        const Rational gap = scaling_gap(t);
        const Rational beta_ii_iii =
            inv_q + inv_qt - rat(n, 2) * (Rational(1) - inv_r - inv_rt);
        CHECK(beta_ii_iii == gap);
    }
}

TEST_CASE("necessary conditions: slacks, violations, duality permutation") {
    SUBCASE("violating tuple: fourth condition fails by 1/2") {
        const auto report = necessary_conditions(tuple(1, 2, 0, 1, 1, 2, 0, 1, 3));
        CHECK(report[0].satisfied);
        CHECK(report[1].satisfied);
        CHECK(report[2].satisfied);
        CHECK_FALSE(report[3].satisfied);
        CHECK(report[3].slack == rat(-1, 2));
    }
    SUBCASE("corner tuple satisfies all four") {
        const auto report = necessary_conditions(tuple(1, 4, 1, 12, 1, 4, 3, 4, 3));
        for (const auto& c : report) CHECK(c.satisfied);
    }
    SUBCASE("all-infinite tuple has zero slack everywhere") {
        for (int n : {1, 2, 3, 5}) {
            const auto report =
                necessary_conditions(tuple(0, 1, 0, 1, 0, 1, 0, 1, n));
            for (const auto& c : report) CHECK(c.slack == rat(0));
        }
    }
    SUBCASE("duality swap permutes slacks as (1<->2, 3<->4)") {
        Rng rng(13);
        for (int i = 0; i < 100; ++i) {
            const int n = 1 + static_cast<int>(rng.next_u64() % 8);
            const auto t = make_tuple(random_unit_rational(rng, 24),
                                      random_unit_rational(rng, 24),
                                      random_unit_rational(rng, 24),
                                      random_unit_rational(rng, 24), n);
            const auto a = necessary_conditions(t);
            const auto b = necessary_conditions(duality_swap(t));
            CHECK(a[0].slack == b[1].slack);
            CHECK(a[1].slack == b[0].slack);
            CHECK(a[2].slack == b[3].slack);
            CHECK(a[3].slack == b[2].slack);
        }
    }
}

TEST_CASE("corner windows: exact open/closed endpoints") {
    const Rational px = corner_p_x(3);  // 1/4
    const Rational py = corner_p_y(3);  // 1/12
    auto at_p = [&](Rational inv_q) {
        return make_tuple(px, py, inv_q, one_minus(inv_q), 3);
    };
    auto at_pp = [&](Rational inv_q) {
        return make_tuple(py, px, inv_q, one_minus(inv_q), 3);
    };
    // window bounds at n = 3: [1/4, 3/4)
    CHECK(corner_window_valid(at_p(rat(1, 4))));
    CHECK(corner_window_valid(at_p(rat(1, 2))));
    CHECK_FALSE(corner_window_valid(at_p(rat(3, 4))));
    CHECK_FALSE(corner_window_valid(at_p(rat(1, 5))));
    // mirrored openness at P': (1/4, 3/4]
    CHECK_FALSE(corner_window_valid(at_pp(rat(1, 4))));
    CHECK(corner_window_valid(at_pp(rat(3, 4))));
    CHECK(corner_window_valid(at_pp(rat(1, 2))));
    // q = qt' is required
    CHECK_FALSE(corner_window_valid(make_tuple(px, py, rat(1, 4), rat(1, 4), 3)));
    // higher dimension spot check, n = 5: window [3/8, 5/8]-style bounds
    CHECK(corner_window_valid(
        make_tuple(corner_p_x(5), corner_p_y(5), rat(3, 8), rat(5, 8), 5)));
    CHECK_FALSE(corner_window_valid(
        make_tuple(corner_p_x(5), corner_p_y(5), rat(5, 8), rat(3, 8), 5)));
}

TEST_CASE("classification") {
    SUBCASE("corner acceptance") {
        const auto c = classify(tuple(1, 4, 1, 12, 1, 4, 3, 4, 3));
        CHECK(c.verdict == Verdict::Valid);
        CHECK(c.source == "corner P");
    }
    SUBCASE("violating tuple blamed on the fourth necessary condition") {
        const auto c = classify(tuple(1, 2, 0, 1, 1, 2, 0, 1, 3));
        CHECK(c.verdict == Verdict::Invalid);
        CHECK(c.source.find("necessary condition 4") != std::string::npos);
        CHECK(c.slack == rat(-1, 2));
    }
    SUBCASE("scaling violation") {
        const auto c = classify(tuple(1, 4, 1, 12, 1, 4, 1, 2, 3));
        CHECK(c.verdict == Verdict::Invalid);
        CHECK(c.source == "scaling condition violated");
        CHECK(c.slack == rat(-1, 4));
    }
    SUBCASE("pentagon interior is advisory-valid") {
        // B-ish interior point with compatible scaling: 1/r = 1/rt = 1/4,
        // gap 0 needs 1/q + 1/qt = n/2 - (n/2)(1/2) = 3/4.
        const auto c = classify(tuple(1, 4, 1, 4, 1, 2, 1, 4, 3));
        CHECK(c.verdict == Verdict::Valid);
        CHECK(c.source.find("pentagon interior") != std::string::npos);
    }
    SUBCASE("outside the pentagon stays unknown") {
        // C = (1/2, 0) with zero slack in condition 4 and gap 0.
        const auto c = classify(tuple(1, 2, 0, 1, 1, 2, 1, 4, 3));
        CHECK(c.verdict == Verdict::Unknown);
    }
}

TEST_CASE("classification respects duality up to corner relabeling") {
    Rng rng(17);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        const int n = 3 + static_cast<int>(rng.next_u64() % 5);
        const auto t = make_tuple(random_unit_rational(rng, 16),
                                  random_unit_rational(rng, 16),
                                  random_unit_rational(rng, 16),
                                  random_unit_rational(rng, 16), n);
        const auto a = classify(t);
        const auto b = classify(duality_swap(t));
        CHECK(a.verdict == b.verdict);
        if (a.source == "corner P") CHECK(b.source == "corner P'");
        if (a.source == "corner P'") CHECK(b.source == "corner P");
        ++checked;
    }
    CHECK(checked == 400);

    // The duality swap sends 1/q to 1 - 1/q, so P's closed-left/open-right
    // window [1/4, 3/4) lands exactly on P''s open-left/closed-right window
    // (1/4, 3/4]: the closed endpoint stays valid, the open one stays
    // invalid.
    const Rational px = corner_p_x(3);
    const Rational py = corner_p_y(3);
    const auto p_left = make_tuple(px, py, rat(1, 4), rat(3, 4), 3);
    CHECK(classify(p_left).source == "corner P");
    CHECK(classify(duality_swap(p_left)).source == "corner P'");
    const auto p_right_open = make_tuple(px, py, rat(3, 4), rat(1, 4), 3);
    CHECK_FALSE(corner_window_valid(p_right_open));
    CHECK_FALSE(corner_window_valid(duality_swap(p_right_open)));
}

TEST_CASE("concentration slope predictions mirror under duality") {
    const auto t = tuple(1, 2, 0, 1, 1, 2, 0, 1, 3);
    CHECK(concentration_lhs_slope(t) == rat(9, 2));
    CHECK(concentration_rhs_slope(t) == rat(5));
    const auto swapped = duality_swap(t);
    // Mirrored experiment: the swapped tuple's predictions are the same
    // formulas with the roles of (r, q) and (rt, qt) exchanged.
    CHECK(concentration_lhs_slope(swapped) ==
          Rational(t.n + 2) + (2 - t.n) * t.inv_rt);
    CHECK(concentration_rhs_slope(swapped) ==
          2 * t.inv_q_prime() + t.n * t.inv_r_prime());
}

TEST_CASE("tuple parsing and round-trips") {
    SUBCASE("reciprocal form") {
        const auto t = parse_tuple("n=3 1/r=1/4 1/rt=1/12 1/q=1/4 1/qt=3/4");
        CHECK(t.inv_r == rat(1, 4));
        CHECK(t.inv_rt == rat(1, 12));
        CHECK(t.inv_q == rat(1, 4));
        CHECK(t.inv_qt == rat(3, 4));
        CHECK(t.n == 3);
    }
    SUBCASE("direct form with inf") {
        const auto t = parse_tuple("n=3 r=4 rt=12 q=4 qt=4/3");
        CHECK(t.inv_r == rat(1, 4));
        CHECK(t.inv_qt == rat(3, 4));
        const auto u = parse_tuple("n=3 r=2 rt=inf q=2 qt=inf");
        CHECK(u.inv_rt == rat(0));
        CHECK(u.inv_qt == rat(0));
    }
    SUBCASE("both renderings round-trip") {
        Rng rng(23);
        for (int i = 0; i < 50; ++i) {
            const auto t = make_tuple(random_unit_rational(rng, 12),
                                      random_unit_rational(rng, 12),
                                      random_unit_rational(rng, 12),
                                      random_unit_rational(rng, 12),
                                      1 + static_cast<int>(rng.next_u64() % 9));
            CHECK(parse_tuple(format_tuple_reciprocal(t)) == t);
            CHECK(parse_tuple(format_tuple_direct(t)) == t);
        }
    }
    SUBCASE("malformed input carries the offending position") {
        try {
            parse_tuple("n=3 1/r=banana 1/rt=0 1/q=0 1/qt=0");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.position() == 4);
        }
        CHECK_THROWS_AS(parse_tuple("n=3 r=4 rt=12 q=4"), ParseError);
        CHECK_THROWS_AS(parse_tuple("n=3 r=4 r=4 rt=12 q=4 qt=4"), ParseError);
        CHECK_THROWS_AS(parse_tuple("n=3 bogus=1 r=4 rt=12 q=4 qt=4"),
                        ParseError);
        CHECK_THROWS_AS(parse_tuple("n=0 r=4 rt=12 q=4 qt=4"), ParseError);
    }
    SUBCASE("classification CSV row") {
        const auto c = classify(tuple(1, 4, 1, 12, 1, 4, 3, 4, 3));
        CHECK(classification_csv_row(c) == "Valid,corner P,0");
    }
}
