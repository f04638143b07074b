#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hyperdiag
{

// Arbitrary-precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator after each arithmetic operation.
using integer = mpz_class;
using rational = mpq_class;

// Builds num/den in canonical form. Throws error(parse_error) when den == 0.
rational make_rational(const integer &num, const integer &den);

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1. The sign sits on the numerator.
std::string to_string(const rational &q);

// Comma-separated rationals, whitespace-insensitive. An empty string gives an empty list.
std::vector<rational> parse_rational_list(std::string_view text);

bool is_integer(const rational &q);
bool is_nonpositive_integer(const rational &q);

// Representative of q modulo 1 in the half-open interval (0, 1]; integers map to 1.
rational unit_interval_rep(const rational &q);

rational pow(const rational &base, unsigned long exponent);
integer factorial(unsigned long n);

// Rising factorial x (x+1) ... (x+j-1); equals 1 for j == 0.
rational pochhammer(const rational &x, unsigned long j);

// r (r-1) ... (r-k+1) / k!, defined for every rational r.
rational gen_binomial(const rational &r, unsigned long k);

// m! / (parts_1! ... parts_n!) if the parts sum to m, zero otherwise.
integer multinomial(unsigned long m, std::span<const unsigned long> parts);

// Exponent tuple (k_1, ..., k_N).
class MultiIndex
{
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : m_entries(n, 0u) {}
    MultiIndex(std::initializer_list<unsigned> entries) : m_entries(entries) {}
    explicit MultiIndex(std::vector<unsigned> entries) : m_entries(std::move(entries)) {}

    std::size_t size() const noexcept
    {
        return m_entries.size();
    }
    unsigned &operator[](std::size_t i)
    {
        return m_entries[i];
    }
    unsigned operator[](std::size_t i) const
    {
        return m_entries[i];
    }
    const std::vector<unsigned> &entries() const noexcept
    {
        return m_entries;
    }

    unsigned degree() const noexcept;

    // Diagonal index (k, ..., k).
    static MultiIndex diagonal(std::size_t n, unsigned k)
    {
        return MultiIndex(std::vector<unsigned>(n, k));
    }

    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;

private:
    std::vector<unsigned> m_entries;
};

// Graded lexicographic order: total degree first, then lexicographic with the
// first variable most significant.
struct GradedLexLess {
    bool operator()(const MultiIndex &a, const MultiIndex &b) const;
};

std::string to_string(const MultiIndex &k);

} // namespace hyperdiag
