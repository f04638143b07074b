#include <hyperdiag/arith.hpp>
#include <hyperdiag/error.hpp>

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace hyperdiag;

namespace
{

rational q(long n, long d = 1)
{
    return make_rational(n, d);
}

// Every vector of `parts` naturals summing to m.
std::vector<std::vector<unsigned long>> compositions(unsigned long m, std::size_t parts)
{
    std::vector<std::vector<unsigned long>> out;
    std::vector<unsigned long> cur(parts, 0);
    std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t i, unsigned long left) {
        if (i + 1 == parts) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned long v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (parts == 0) {
        if (m == 0) {
            out.emplace_back();
        }
        return out;
    }
    rec(0, m);
    return out;
}

} // namespace

TEST_CASE("rationals are canonical")
{
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK(to_string(make_rational(10, 5)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), error);
}

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("2/9") == q(2, 9));
    CHECK(parse_rational(" -1/3 ") == q(-1, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("4/6") == q(2, 3));
    for (const char *bad : {"", "1/", "/2", "1/0", "abc", "1/-2", "1 2", "1//2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), error);
    }
    try {
        parse_rational("x");
    } catch (const error &e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("parse_rational_list")
{
    CHECK(parse_rational_list("") == std::vector<rational>{});
    CHECK(parse_rational_list("2/9, 5/9 ,8/9") == std::vector<rational>{q(2, 9), q(5, 9), q(8, 9)});
    CHECK_THROWS_AS(parse_rational_list("1,,2"), error);
}

TEST_CASE("round trip through the string form")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 500);
    for (int i = 0; i < 200; ++i) {
        const auto x = q(num(rng), den(rng));
        CHECK(parse_rational(to_string(x)) == x);
    }
}

TEST_CASE("integer predicates and unit representative")
{
    CHECK(is_integer(q(4, 2)));
    CHECK_FALSE(is_integer(q(1, 2)));
    CHECK(is_nonpositive_integer(q(0)));
    CHECK(is_nonpositive_integer(q(-3)));
    CHECK_FALSE(is_nonpositive_integer(q(1)));
    CHECK_FALSE(is_nonpositive_integer(q(-1, 2)));
    CHECK(unit_interval_rep(q(7, 3)) == q(1, 3));
    CHECK(unit_interval_rep(q(-1, 3)) == q(2, 3));
    CHECK(unit_interval_rep(q(0)) == 1);
    CHECK(unit_interval_rep(q(-2)) == 1);
}

TEST_CASE("pow and factorial")
{
    CHECK(pow(q(-2, 3), 3) == q(-8, 27));
    CHECK(pow(q(5), 0) == 1);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == integer("2432902008176640000"));
}

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(q(17, 5), 0) == 1);
    CHECK(pochhammer(q(1, 2), 3) == q(15, 8));
    CHECK(pochhammer(q(1), 5) == 120);
    CHECK(pochhammer(q(-2), 5) == 0);
    CHECK(pochhammer(q(-2), 2) == 2);
}

TEST_CASE("gen_binomial")
{
    CHECK(gen_binomial(q(-1), 3) == -1);
    CHECK(gen_binomial(q(1, 3), 2) == q(-1, 9));
    CHECK(gen_binomial(q(2), 5) == 0);
    CHECK(gen_binomial(q(6), 3) == 20);
    CHECK(gen_binomial(q(7, 2), 0) == 1);
}

TEST_CASE("multinomial")
{
    const std::vector<unsigned long> a{2, 1, 1}, b{1, 1, 2}, none{};
    CHECK(multinomial(4, a) == 12);
    CHECK(multinomial(3, b) == 0);
    CHECK(multinomial(0, none) == 1);
}

TEST_CASE("Pochhammer multiplication formula")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = q(num(rng), den(rng));
        for (unsigned long b = 1; b <= 5; ++b) {
            for (unsigned long k = 0; k <= 12; ++k) {
                rational lhs = pow(rational(b), b * k);
                for (unsigned long i = 0; i < b; ++i) {
                    lhs *= pochhammer((a + i) / b, k);
                }
                CAPTURE(to_string(a));
                CAPTURE(b);
                CAPTURE(k);
                CHECK(lhs == pochhammer(a, b * k));
            }
        }
    }
}

TEST_CASE("multinomial Chu-Vandermonde")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (unsigned long m1 = 0; m1 <= 8; ++m1) {
            for (unsigned long m2 = 0; m2 <= 8; ++m2) {
                for (const auto &gamma : compositions(m1 + m2, n)) {
                    integer sum = 0;
                    for (const auto &alpha : compositions(m1, n)) {
                        std::vector<unsigned long> rest(n);
                        bool fits = true;
                        for (std::size_t i = 0; i < n; ++i) {
                            fits = fits && alpha[i] <= gamma[i];
                            rest[i] = fits ? gamma[i] - alpha[i] : 0;
                        }
                        if (fits) {
                            sum += multinomial(m1, alpha) * multinomial(m2, rest);
                        }
                    }
                    REQUIRE(sum == multinomial(m1 + m2, gamma));
                }
            }
        }
    }
}

TEST_CASE("MultiIndex")
{
    const MultiIndex k{2, 0, 1};
    CHECK(k.degree() == 3);
    CHECK(MultiIndex::diagonal(3, 4) == MultiIndex{4, 4, 4});
    CHECK(to_string(k) == "(2,0,1)");

    GradedLexLess less;
    CHECK(less(MultiIndex{0, 5}, MultiIndex{3, 3}));
    CHECK(less(MultiIndex{0, 2}, MultiIndex{1, 1}));
    CHECK_FALSE(less(MultiIndex{1, 1}, MultiIndex{1, 1}));

    std::vector<MultiIndex> all{{1, 1}, {0, 0}, {2, 0}, {0, 1}, {1, 0}, {0, 2}};
    std::sort(all.begin(), all.end(), less);
    CHECK(all == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}});
}
