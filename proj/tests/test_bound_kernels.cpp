#include <doctest.h>

#include "jacbound/bound_kernels.hpp"
#include "jacbound/rng.hpp"

using namespace jacbound;

namespace {

Rat ip(long base, long e) { return Rat::pow(Rat(base), e); }

// Valid parameter triples for the one-variable reduction: d in {2,4,8},
// 1 <= j <= min(d-1, dn-3), with the d = 8 family restricted to n = 2.
std::vector<SpaceParams> reduction_params(int n_max) {
    std::vector<SpaceParams> out;
    for (int d : {2, 4, 8}) {
        for (int n = 2; n <= (d == 8 ? 2 : n_max); ++n) {
            for (int j = 1; j <= std::min(d - 1, d * n - 3); ++j) out.emplace_back(d, n, j);
        }
    }
    return out;
}

} // namespace

TEST_CASE("P(lambda, sigma): worked values") {
    // (d=4,n=3,j=1) at (1/11, 2/11) equals sqrt(2) 11^(11/2) / (9 * 13^10)
    Surd got = eval_P2_exact(SpaceParams(4, 3, 1), Rat(1, 11), Rat(2, 11));
    Surd expected(Rat(1) / (Rat(9) * ip(13, 10)), Rat(2) * ip(11, 11));
    CHECK(got == expected);

    // sigma = 0 with j > 0 kills the value
    CHECK(eval_P2_exact(SpaceParams(4, 3, 1), Rat(1, 11), Rat(0)).is_zero());

    CHECK_THROWS_AS(eval_P2_exact(SpaceParams(4, 3, 1), Rat(1, 11), Rat(1)), Error);
    CHECK_THROWS_AS(eval_P2_exact(SpaceParams(4, 3, 1), Rat(-1, 11), Rat(1, 2)), Error);
}

TEST_CASE("P(lambda) reduction: worked values") {
    // (2,2,1): P(lambda) = (1/2) sqrt(1 - 2 lambda); at 9/50 exactly 2/5
    Surd p = eval_P_reduced_exact(SpaceParams(2, 2, 1), Rat(9, 50));
    CHECK(p.try_rational() == Rat(2, 5));
    // finite at lambda = 0 despite the sigma-substitution pole
    CHECK(eval_P_reduced_exact(SpaceParams(2, 2, 1), Rat(0)).try_rational() == Rat(1, 2));

    // vanishing right endpoint
    for (const SpaceParams& sp : reduction_params(4))
        CHECK(eval_P_reduced_exact(sp, Rat(1, sp.p - sp.j)).is_zero());

    // vanishing left endpoint for j > 1
    for (const SpaceParams& sp : reduction_params(4))
        if (sp.j > 1) CHECK(eval_P_reduced_exact(sp, Rat(0)).is_zero());

    // (8,2,2) at 3/50 stays below the tabulated constant 3^6 5^13 / (2^22 17^12)
    Surd v = eval_P_reduced_exact(SpaceParams(8, 2, 2), Rat(3, 50));
    Surd table(ip(3, 6) * ip(5, 13) / (ip(2, 22) * ip(17, 12)), Rat(1));
    CHECK(v <= table);
    CHECK(v.signed_square() < table.signed_square());

    CHECK_THROWS_AS(eval_P_reduced_exact(SpaceParams(4, 3, 1), Rat(1, 2)), Error); // (p-j)l > 1
    CHECK_THROWS_AS(eval_P_reduced_exact(SpaceParams(1, 4, 0), Rat(1, 8)), Error); // j = 0
}

TEST_CASE("reduction agrees with the two-variable form (rational identity)") {
    Rng rng(99);
    const auto params = reduction_params(6);
    int checked = 0;
    while (checked < 500) {
        const SpaceParams& sp = params[rng.next() % params.size()];
        const int pj = sp.p - sp.j;
        long k = 1 + static_cast<long>(rng.next() % 999);
        Rat lambda = Rat(k, 1000) / Rat(pj); // in (0, 1/(p-j))
        Rat sigma = (Rat(1) - Rat(pj) * lambda) / Rat(sp.j);
        if (sigma.sign() < 0 || sigma >= Rat(1)) continue;
        Rat lhs = eval_P_reduced_exact(sp, lambda).signed_square();
        Rat rhs = eval_P2_exact(sp, lambda, sigma).signed_square();
        REQUIRE(lhs == rhs);
        ++checked;
    }

    // the worked cross-check: sigma = 2/5 corresponds to lambda = 3/10 in (2,2,1)
    SpaceParams sp(2, 2, 1);
    CHECK(eval_P_reduced_exact(sp, Rat(3, 10)) == eval_P2_exact(sp, Rat(3, 10), Rat(2, 5)));
}

TEST_CASE("Q: coefficients and worked values") {
    // Q(0) = j - 1
    for (const SpaceParams& sp : reduction_params(6)) CHECK(eval_Q(sp, Rat(0)) == Rat(sp.j - 1));

    // (4,2,1): Q(1/7) = -6/49
    CHECK(eval_Q(SpaceParams(4, 2, 1), Rat(1, 7)) == Rat(-6, 49));

    // (2,2,1): Q = -2 lambda^2 identically
    CubicPoly q = build_Q(SpaceParams(2, 2, 1));
    CHECK(q.c3 == Rat(0));
    CHECK(q.c2 == Rat(-2));
    CHECK(q.c1 == Rat(0));
    CHECK(q.c0 == Rat(0));
    for (long k = 0; k <= 10; ++k)
        CHECK(eval_Q(SpaceParams(2, 2, 1), Rat(k, 10)) == Rat(-2) * Rat(k * k, 100));

    CHECK_THROWS_AS(build_Q(SpaceParams(1, 4, 0)), Error);
}

TEST_CASE("Q controls the sign of the derivative of P^2") {
    Rng rng(4242);
    const auto params = reduction_params(5);
    int checked = 0;
    while (checked < 300) {
        const SpaceParams& sp = params[rng.next() % params.size()];
        const Rat right(1, sp.p - sp.j);
        long k = 2 + static_cast<long>(rng.next() % 996);
        Rat lambda = right * Rat(k, 1000);
        Rat h = right / Rat(4000);
        int q_mid = eval_Q(sp, lambda).sign();
        // only sample where Q keeps one sign across the difference window
        if (q_mid == 0 || eval_Q(sp, lambda - h).sign() != q_mid ||
            eval_Q(sp, lambda + h).sign() != q_mid)
            continue;
        Rat fwd = eval_P_reduced_exact(sp, lambda + h).signed_square();
        Rat bwd = eval_P_reduced_exact(sp, lambda - h).signed_square();
        REQUIRE((fwd - bwd).sign() == q_mid);
        ++checked;
    }
}

TEST_CASE("jacobian bound: the explicit constants") {
    EvalMode cm = EvalMode::certified();

    // quaternionic n = 2 at the non-lattice delta
    BoundReport b421 = jacobian_bound(SpaceParams(4, 2, 1), Rat(8), cm);
    CHECK(b421.formula == Formula::ExceptionalTable);
    CHECK(b421.certified_lt_one == Cert::Yes);
    Rat mid421 = b421.value.interval().midpoint();
    CHECK((mid421 - Rat::parse("0.8689994123")).abs() <= Rat(5, ip(10, 11).num()));

    // Cayley plane rows at delta = 16
    struct Row {
        int j;
        const char* decimal;
    };
    for (const Row& row : {Row{1, "0.03197831847"}, Row{2, "0.24892821847"}, Row{3, "0.92495456626"}}) {
        BoundReport b = jacobian_bound(SpaceParams(8, 2, row.j), Rat(16), cm);
        CHECK(b.formula == Formula::ExceptionalTable);
        CHECK(b.certified_lt_one == Cert::Yes);
        CHECK((b.value.interval().midpoint() - Rat::parse(row.decimal)).abs() <=
              Rat(5, ip(10, 11).num()));
    }

    // (4,3,1) at delta = 12 is exactly C_3
    BoundReport b431 = jacobian_bound(SpaceParams(4, 3, 1), Rat(12), cm);
    CHECK(b431.formula == Formula::GeneralCFM);
    CHECK(b431.exact == seq_C_exact(3));
    CHECK(b431.certified_lt_one == Cert::Yes);

    // float mode carries no certification
    CHECK(jacobian_bound(SpaceParams(4, 3, 1), Rat(12), EvalMode::float64()).certified_lt_one ==
          Cert::Inconclusive);
}

TEST_CASE("jacobian bound: preconditions") {
    EvalMode fm = EvalMode::float64();
    CHECK_THROWS_AS(jacobian_bound(SpaceParams(4, 2, 2), Rat(8), fm), Error);  // outside the table
    CHECK_THROWS_AS(jacobian_bound(SpaceParams(8, 2, 4), Rat(16), fm), Error); // outside the table
    CHECK_THROWS_AS(jacobian_bound(SpaceParams(4, 3, 5), Rat(8), fm), Error);  // j > d
    CHECK_THROWS_AS(jacobian_bound(SpaceParams(1, 2, 0), Rat(1), fm), Error);  // j > dn - 3
    CHECK_THROWS_AS(jacobian_bound(SpaceParams(4, 3, 1), Rat(0), fm), Error);  // delta <= 0

    // error carries the violated precondition and the right code
    try {
        jacobian_bound(SpaceParams(4, 2, 2), Rat(8), fm);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedCase);
    }
}

TEST_CASE("jacobian bound is strictly increasing in delta") {
    Rng rng(31);
    std::vector<SpaceParams> params;
    for (const SpaceParams& sp : reduction_params(6))
        if (sp.n > 2 || sp.exceptional_pair()) params.push_back(sp);
    for (int trial = 0; trial < 100; ++trial) {
        const SpaceParams& sp = params[rng.next() % params.size()];
        Rat delta(1 + static_cast<long>(rng.next() % 400), 10);
        Surd at = jacobian_bound(sp, delta, EvalMode::float64()).exact;
        Surd bumped = jacobian_bound(sp, delta + Rat(1, 100), EvalMode::float64()).exact;
        REQUIRE(at < bumped);
    }
}

TEST_CASE("generic bound: worked values and comparison") {
    CHECK(bcg_bound_exact(SpaceParams(4, 2, 1), Rat(6)) == Rat(1));
    CHECK(bcg_bound_exact(SpaceParams(1, 3, 0), Rat(2)) == Rat(1));
    CHECK(bcg_bound_exact(SpaceParams(4, 2, 1), Rat(8)) == Rat::pow(Rat(4, 3), 7));

    // strictly worse than the sharp bound at the same delta
    Surd sharp = jacobian_bound(SpaceParams(4, 2, 1), Rat(8), EvalMode::float64()).exact;
    CHECK(sharp < Surd(bcg_bound_exact(SpaceParams(4, 2, 1), Rat(8))));
    CHECK(bcg_bound_exact(SpaceParams(4, 2, 1), Rat(8)) > Rat(1)); // insufficient for vanishing

    CHECK_THROWS_AS(bcg_bound_exact(SpaceParams(1, 2, 1), Rat(1)), Error); // dn - j - 1 = 0
}

TEST_CASE("the sequence C_n") {
    // C_3 ~ 0.84690105104, C_1 ~ 3.62 > 1, C_2 > 1
    Interval c3 = seq_C_exact(3).enclosure(128);
    CHECK((c3.midpoint() - Rat::parse("0.84690105104")).abs() <= Rat(5, ip(10, 11).num()));
    CHECK(certify_compare(c3, Rat(1)) == CompareCert::CertifiedLess);

    CHECK(seq_C_exact(1) == Surd(Rat(64, 25), Rat(2))); // (4/5)^2 * 4 sqrt2
    CHECK(seq_C_exact(1).signed_square() > Rat(9));     // so C_1 ~ 3.62 > 3
    CHECK(seq_C_exact(2).signed_square() > Rat(1));

    // strictly decreasing (exact: both are rational multiples of sqrt2)
    for (long n = 1; n <= 100; ++n)
        CHECK(seq_C_exact(n + 1).coeff() < seq_C_exact(n).coeff());

    // always above the limit enclosure
    for (long n = 1; n <= 100; ++n)
        CHECK(seq_C_exact(n).enclosure(96).lo > seq_C_limit().hi);

    CHECK_THROWS_AS(seq_C_exact(0), Error);
}

TEST_CASE("limit enclosure of C_n") {
    Interval lim = seq_C_limit();
    CHECK(lim.contains(Rat::parse("0.52026009502")));
    CHECK(lim.width() < Rat(1, ip(10, 11).num()));
}

TEST_CASE("simplex objective") {
    // (1,3,0) at the symmetric point: (1/27) / (2/3)^6 = 27/64
    std::vector<Rat> thirds{Rat(1, 3), Rat(1, 3), Rat(1, 3)};
    CHECK(objective_f_exact(SpaceParams(1, 3, 0), thirds) == Rat(27, 64));

    // zero coordinate kills the numerator
    std::vector<Rat> with_zero{Rat(1, 2), Rat(0), Rat(1, 4)};
    CHECK(objective_f_exact(SpaceParams(1, 3, 0), with_zero) == Rat(0));

    // (2,2,1) on the constrained shape equals P(lambda, sigma)^2
    std::vector<Rat> shaped{Rat(2, 5), Rat(3, 10), Rat(3, 10), Rat(0)};
    CHECK(objective_f_exact(SpaceParams(2, 2, 1), shaped) ==
          eval_P2_exact(SpaceParams(2, 2, 1), Rat(3, 10), Rat(2, 5)).signed_square());

    // pole and validation paths
    std::vector<Rat> pole{Rat(1), Rat(1, 4), Rat(1, 4), Rat(0)};
    CHECK_THROWS_AS(objective_f_exact(SpaceParams(2, 2, 1), pole), Error);
    std::vector<Rat> short_vec{Rat(1, 4)};
    CHECK_THROWS_AS(objective_f_exact(SpaceParams(2, 2, 1), short_vec), Error);
    std::vector<Rat> negative{Rat(-1, 4), Rat(1, 4), Rat(1, 4), Rat(0)};
    CHECK_THROWS_AS(objective_f_exact(SpaceParams(2, 2, 1), negative), Error);

    // float path agrees with the exact path away from poles
    std::vector<double> xd{0.4, 0.3, 0.3, 0.0};
    double f = objective_f_f64(SpaceParams(2, 2, 1), xd.data());
    CHECK(f == doctest::Approx(objective_f_exact(SpaceParams(2, 2, 1), shaped).to_double()));
}

TEST_CASE("insufficiency witnesses from the general formula") {
    // d=4, j=2: the bound at delta = 4n exceeds 2 for n = 3..10
    for (int n = 3; n <= 10; ++n) {
        Surd w = general_cfm_exact(SpaceParams(4, n, 2), Rat(4 * n));
        CHECK(w.radicand() == Rat(1)); // j even: exact rational
        CHECK(w.coeff() > Rat(2));
    }
    // d=8, n=2, j=4: the raw formula value at delta = 16 exceeds 1
    // (outside the tabulated cases, so jacobian_bound itself rejects it)
    Surd w = general_cfm_exact(SpaceParams(8, 2, 4), Rat(16));
    CHECK(w.coeff() > Rat(1));
    CHECK_THROWS_AS(jacobian_bound(SpaceParams(8, 2, 4), Rat(16), EvalMode::float64()), Error);
}
