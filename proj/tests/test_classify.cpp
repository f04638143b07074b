#include <hyperdiag/classify.hpp>
#include <hyperdiag/error.hpp>

#include <doctest.h>

using namespace hyperdiag;

namespace
{

rational q(long n, long d = 1)
{
    return make_rational(n, d);
}

LinearFormProduct product(std::vector<rational> b)
{
    return {std::move(b), std::nullopt, Sign::minus};
}

} // namespace

TEST_CASE("weight_screen")
{
    CHECK(weight_screen(PFQParams({q(1, 9), q(4, 9), q(5, 9)}, {1, q(1, 3)})) == 1);
    CHECK(weight_screen(PFQParams({q(1, 6), q(5, 6)}, {q(1, 2)})) == 0);
    CHECK(weight_screen(PFQParams({1}, {1})) == 0);
    CHECK(weight_screen(PFQParams({q(1, 2)}, {1, 1, 2})) == 3);
}

TEST_CASE("interlacing_check")
{
    const auto schwarz = interlacing_check(PFQParams({q(1, 6), q(5, 6)}, {q(1, 2)}));
    CHECK(schwarz.status == Status::algebraic);
    CHECK(schwarz.residues == std::vector<unsigned long>{1, 5});

    const auto fig1 = interlacing_check(PFQParams({q(2, 9), q(5, 9), q(8, 9)}, {q(1, 2), q(2, 3)}));
    CHECK(fig1.status == Status::algebraic);
    CHECK(fig1.residues.size() == 6);

    const auto christol = interlacing_check(PFQParams({q(1, 9), q(4, 9), q(5, 9)}, {1, q(1, 3)}));
    CHECK(christol.status == Status::transcendental);
    CHECK(christol.weight == 1);

    // Non-interlacing configuration: 2F1([1/2,1/2];[1/3]) fails for c = 1.
    const auto fails = interlacing_check(PFQParams({q(1, 2), q(1, 2)}, {q(1, 3)}));
    CHECK(fails.status == Status::transcendental);
    CHECK(fails.failing_residue.has_value());

    CHECK(interlacing_check(PFQParams({q(1, 2)}, {q(1, 3)})).status == Status::inapplicable);
    CHECK(interlacing_check(PFQParams({q(1, 3), q(1, 2)}, {q(4, 3)})).status == Status::inapplicable);
}

TEST_CASE("classify_product")
{
    CHECK(classify_product(product({q(1, 2), -1})).status == Status::algebraic);
    CHECK(classify_product(product({q(1, 2), -2})).status == Status::algebraic);
    CHECK(classify_product(product({q(1, 3)})).status == Status::algebraic);
    CHECK(classify_product(product({0, q(1, 2)})).status == Status::transcendental);
    CHECK(classify_product(product({0, q(1, 3), -1})).status == Status::transcendental);
    CHECK_THROWS_AS(classify_product(LinearFormProduct{{0, -1}, q(1, 3), Sign::minus}), error);
}

TEST_CASE("grade2_search")
{
    const auto eq10 = grade2_search(PFQParams({q(2, 9), q(5, 9), q(8, 9)}, {1, q(2, 3)}));
    REQUIRE(eq10.has_value());
    CHECK(eq10->c == q(1, 2));
    CHECK(same_multiset(eq10->algebraic_params, PFQParams({q(2, 9), q(5, 9), q(8, 9)}, {q(1, 2), q(2, 3)})));
    CHECK(eq10->verdict.status == Status::algebraic);

    const auto R = q(1, 5);
    const auto family = grade2_search(PFQParams({(1 - R) / 3, (2 - R) / 3, (3 - R) / 3}, {1, 1 - R}));
    REQUIRE(family.has_value());
    CHECK(family->c == q(1, 2));

    CHECK_FALSE(grade2_search(PFQParams({q(1, 9), q(4, 9), q(5, 9)}, {1, q(1, 3)}), 12).has_value());

    try {
        grade2_search(PFQParams({q(1, 6), q(5, 6)}, {q(1, 2)}));
        FAIL("expected a throw");
    } catch (const error &e) {
        CHECK(e.code() == errc::no_unit_bottom);
    }
}

TEST_CASE("grade-2 decompositions are series identities")
{
    for (const auto &D : {q(1, 2), q(1, 3), q(2, 3), q(1, 4), q(3, 4)}) {
        const PFQParams p({q(1, 9), q(4, 9), q(7, 9)}, {1, D});
        const auto found = grade2_search(p);
        REQUIRE(found.has_value());
        CHECK(hadamard(pfq_series(found->algebraic_params, 20), binomial_series(found->c, 20)) == pfq_series(p, 20));
    }
}
