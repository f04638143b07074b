#pragma once

// Brute-force multivariate series engine. It shares nothing with the closed
// forms in linform beyond the scalar primitives of arith: every coefficient
// here comes from the multinomial theorem and explicit truncated products.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <hyperdiag/arith.hpp>
#include <hyperdiag/hyperseries.hpp>
#include <hyperdiag/linform.hpp>

namespace hyperdiag
{

using TermMap = std::map<MultiIndex, rational, GradedLexLess>;

// Power series in n_vars variables known up to total degree D. An optional
// per-variable cap additionally discards any term with an exponent above it;
// such terms never reach a diagonal coefficient of index <= cap.
class TruncatedMultiSeries
{
public:
    TruncatedMultiSeries(std::size_t n_vars, unsigned degree_bound, std::optional<unsigned> cap = std::nullopt);

    static TruncatedMultiSeries constant(std::size_t n_vars, unsigned degree_bound, const rational &c,
                                         std::optional<unsigned> cap = std::nullopt);

    std::size_t n_vars() const noexcept
    {
        return m_n_vars;
    }
    unsigned degree_bound() const noexcept
    {
        return m_degree_bound;
    }
    std::optional<unsigned> cap() const noexcept
    {
        return m_cap;
    }
    const TermMap &terms() const noexcept
    {
        return m_terms;
    }

    // Whether k lies inside the truncation region.
    bool in_range(const MultiIndex &k) const;

    // Adds c to the coefficient of x^k; out-of-range indices are ignored and
    // zero results are erased.
    void add_term(const MultiIndex &k, const rational &c);

    rational coefficient(const MultiIndex &k) const;

private:
    std::size_t m_n_vars;
    unsigned m_degree_bound;
    std::optional<unsigned> m_cap;
    TermMap m_terms;
};

// Finite multivariate polynomial.
struct Polynomial {
    std::size_t n_vars = 0;
    TermMap terms;
};

// A factor (1 + c_1 x_1 + ... + c_m x_m)^b; m is the number of variables.
struct LinearFactor {
    std::vector<rational> coeffs;
    rational exponent;
};

// Multinomial expansion of (1 + c_1 x_1 + ... + c_m x_m)^b up to total degree D.
TruncatedMultiSeries expand_linear_power(std::span<const rational> coeffs, const rational &b, unsigned D,
                                         std::optional<unsigned> cap = std::nullopt);

// Truncated product, known up to min(D, bounds of the operands).
TruncatedMultiSeries multiply(const TruncatedMultiSeries &s1, const TruncatedMultiSeries &s2, unsigned D);

// 1 / (1 - p) = sum_j p^j up to total degree D. p must have zero constant term.
TruncatedMultiSeries expand_geometric(const Polynomial &p, unsigned D, std::optional<unsigned> cap = std::nullopt);

// Coefficients at (k, ..., k) for k = 0..K. Requires K * n_vars <= D.
Series extract_diag(const TruncatedMultiSeries &s, unsigned K);

// Diagonal of s1 * s2 for k = 0..K without forming the full product.
Series diagonal_of_product(const TruncatedMultiSeries &s1, const TruncatedMultiSeries &s2, unsigned K);

// x_i -> alpha x_i for every variable.
TruncatedMultiSeries scale_variables(const TruncatedMultiSeries &s, const rational &alpha);

// Diagonal of a product of linear-factor powers, all in the same variables.
// Cost grows like (K + 1)^N terms per factor.
Series oracle_diag(std::span<const LinearFactor> factors, unsigned K);

// The factors of a linear-form product in its own sign convention.
std::vector<LinearFactor> linear_factors(const LinearFormProduct &p);

Series oracle_diag(const LinearFormProduct &p, unsigned K);

} // namespace hyperdiag
