#include <hyperdiag/builders.hpp>
#include <hyperdiag/error.hpp>
#include <hyperdiag/oracle.hpp>

#include <doctest.h>

using namespace hyperdiag;

namespace
{

rational q(long n, long d = 1)
{
    return make_rational(n, d);
}

const std::vector<rational> &grid()
{
    static const std::vector<rational> g{q(1, 2), q(-1, 2), q(1, 3), q(-1, 3), q(2, 3), 1, 2, -2};
    return g;
}

} // namespace

TEST_CASE("thm1 spec validation")
{
    CHECK_THROWS_AS(validate(Thm1Spec{1, 0, 1, 2}), error);
    CHECK_THROWS_AS(validate(Thm1Spec{1, 1, 3, 2}), error);
    CHECK_THROWS_AS(validate(Thm1Spec{1, 1, 0, 0}), error);
    CHECK_NOTHROW(validate(Thm1Spec{1, 1, 2, 2}));
    CHECK(Thm1Spec{q(1, 3), 1, 2, 3}.Q() == q(2, 3));
    CHECK(Thm1Spec{q(1, 3), 1, 0, 3}.Q() == 1);
}

TEST_CASE("thm1_params")
{
    const auto R = q(2, 7);
    const auto p = thm1_params({R, 1, 2, 3});
    CHECK(p == PFQParams({(1 - R) / 3, (2 - R) / 3, (3 - R) / 3, 1}, {1 - R, 1, 1}, 27));

    const auto eq10 = reduce_params(thm1_params({q(1, 3), 1, 2, 3}));
    CHECK(same_multiset(eq10, PFQParams({q(2, 9), q(5, 9), q(8, 9)}, {1, q(2, 3)}, 27)));

    const Thm1Spec half{q(1, 2), 1, 2, 3};
    CHECK(same_multiset(reduce_params(thm1_params(half)), PFQParams({q(1, 6), q(5, 6)}, {1}, 27)));
    CHECK(pfq_series(reduce_params(thm1_params(half)), 12) == diag_series(thm1_product(half), 12));

    // n = N: both s-blocks are empty.
    CHECK(thm1_params({q(1, 2), 2, 2, 2}) == PFQParams({q(3, 4), q(5, 4)}, {1}, 4));

    try {
        thm1_params({5, 1, 2, 3});
        FAIL("expected a throw");
    } catch (const error &e) {
        CHECK(e.code() == errc::invalid_bottom_parameter);
    }
}

TEST_CASE("thm1_closed_form")
{
    CHECK(thm1_closed_form({q(3, 5), q(-7, 2), 1, 3}, 0) == 1);
    CHECK(thm1_closed_form({q(1, 3), 1, 2, 3}, 1) == q(40, 9));
    CHECK(thm1_closed_form({0, 1, 0, 2}, 3) == 20);
    CHECK(thm1_product({q(1, 3), 1, 2, 3}) == LinearFormProduct{{0, q(1, 3), -1}, std::nullopt, Sign::minus});
    CHECK(thm1_product({q(1, 3), 2, 0, 2}) == LinearFormProduct{{0, -2}, std::nullopt, Sign::minus});
}

TEST_CASE("thm1 three-way equality and general1 specialization")
{
    unsigned checked = 0, refused = 0;
    for (unsigned N = 1; N <= 5; ++N) {
        for (unsigned n = 0; n <= N; ++n) {
            for (const auto &R : grid()) {
                if (n == 0 && R != grid().front()) {
                    continue;
                }
                for (const auto &S : grid()) {
                    const Thm1Spec spec{n == 0 ? rational(0) : R, S, n, N};
                    CAPTURE(N);
                    CAPTURE(n);
                    CAPTURE(to_string(spec.R));
                    CAPTURE(to_string(S));
                    if (is_constant(thm1_product(spec))) {
                        std::vector<rational> one(13, rational(0));
                        one[0] = 1;
                        CHECK(thm1_closed_form_series(spec, 12) == Series(one));
                        CHECK(pfq_series(thm1_params(spec), 12) == Series(one));
                        continue;
                    }
                    const auto lemma = diag_series(normalize(thm1_product(spec)), 12);
                    CHECK(thm1_closed_form_series(spec, 12) == lemma);
                    try {
                        const auto params = thm1_params(spec);
                        CHECK(pfq_series(params, 12) == lemma);
                        ++checked;
                    } catch (const error &e) {
                        REQUIRE(e.code() == errc::invalid_bottom_parameter);
                        ++refused;
                        continue;
                    }
                    const auto gen = normalize(thm1_product(spec));
                    try {
                        const auto g = general1_params(general_spec(gen));
                        CHECK(scale_arg(pfq_series(g, 12), N % 2 ? -1 : 1) == lemma);
                    } catch (const error &e) {
                        CHECK(e.code() == errc::invalid_bottom_parameter);
                    }
                }
            }
        }
    }
    CHECK(checked > 0);
    MESSAGE("thm1 instances checked: " << checked << ", refused: " << refused);
}

TEST_CASE("tail_sum")
{
    const GeneralSpec spec{{q(1, 2), q(1, 3), -1}, std::nullopt};
    CHECK(tail_sum(spec, 1) == q(1, 6));
    CHECK(tail_sum(spec, 2) == q(2, 3));
    CHECK(tail_sum(spec, 3) == 1);
}

TEST_CASE("general1_params gives the 6F5 family")
{
    const auto R = q(1, 3), S = q(1, 2), T = q(-2, 3);
    const rational sum = R + S + T;
    const auto p = general1_params({{R, S, T}, std::nullopt});
    CHECK(same_multiset(p, PFQParams({-sum / 3, (1 - sum) / 3, (2 - sum) / 3, -(S + T) / 2, (1 - S - T) / 2, -T},
                                     {-sum / 2, (1 - sum) / 2, -(S + T), 1, 1}, -27)));
    CHECK(p.top().size() == 6);
    CHECK(p.bottom().size() == 5);
    CHECK(pfq_series(p, 10) == diag_series({{R, S, T}, std::nullopt, Sign::plus}, 10));
}

TEST_CASE("general1_params reduces to the 5F4 family")
{
    const auto R = q(1, 2), S = q(1, 3);
    const rational sum = R + S;
    const auto p = reduce_params(general1_params({{R, S, -1}, std::nullopt}));
    CHECK(same_multiset(p, PFQParams({(1 - sum) / 3, (2 - sum) / 3, (3 - sum) / 3, (1 - S) / 2, (2 - S) / 2},
                                     {(1 - sum) / 2, (2 - sum) / 2, 1 - S, 1}, -27)));
}

TEST_CASE("general1_params for the central binomials")
{
    const auto p = general1_params({{0, -1}, std::nullopt});
    CHECK(p.scale() == 4);
    CHECK(pfq_series(to_convention(p, 2, Sign::minus), 4) == Series({1, 2, 6, 20, 70}));
    CHECK_THROWS_AS(general1_params({{1, 0}, std::nullopt}), error);
    CHECK_THROWS_AS(general1_params({{0, -1}, q(1, 2)}), error);
}

TEST_CASE("general2_params")
{
    const auto R = q(1, 2), T = q(1, 3);
    const auto p = general2_params({{R, 0, -1}, T});
    const rational sum = R + T;
    CHECK(same_multiset(reduce_params(p), PFQParams({(1 - sum) / 3, (2 - sum) / 3, (3 - sum) / 3, (1 - T) / 2},
                                                    {(1 - sum) / 2, (2 - sum) / 2, 1}, -27)));

    const auto eq30 = reduce_params(to_convention(general2_params({{0, 0, -1}, q(2, 3)}), 3, Sign::minus));
    CHECK(same_multiset(eq30, PFQParams({q(1, 9), q(4, 9), q(7, 9)}, {q(2, 3), 1}, 27)));

    const LinearFormProduct u2{{0, -1}, q(1, 3), Sign::plus};
    CHECK(pfq_series(general2_params(general_spec(u2)), 8) == oracle_diag(u2, 8));

    try {
        general2_params({{0, q(1, 2), -1}, q(1, 3)});
        FAIL("expected a throw");
    } catch (const error &e) {
        CHECK(e.code() == errc::doubled_constraint_violated);
    }
}

TEST_CASE("to_convention")
{
    const PFQParams p({q(1, 2)}, {}, 4);
    CHECK(to_convention(p, 2, Sign::minus) == p);
    CHECK(to_convention(p, 3, Sign::minus).scale() == -4);
    CHECK(to_convention(p, 3, Sign::plus) == p);
}
