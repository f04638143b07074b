#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <hyperdiag/arith.hpp>
#include <hyperdiag/hyperseries.hpp>

namespace hyperdiag
{

// plus: forms (1 + x_1 + ... + x_j); minus: forms (1 - x_1 - ... - x_j).
enum class Sign { plus, minus };

const char *to_string(Sign s) noexcept;

// prod_{j=1}^{N} (1 +- x_1 +- ... +- x_j)^{b_j}, optionally times
// (1 +- x_1 +- ... +- x_{N-2} +- 2 x_{N-1})^{b}.
//
// exponents[j-1] is the exponent of the width-j form; interior zeros encode
// absent factors.
struct LinearFormProduct {
    std::vector<rational> exponents;
    std::optional<rational> doubled;
    Sign sign = Sign::minus;

    std::size_t n_vars() const noexcept
    {
        return exponents.size();
    }

    friend bool operator==(const LinearFormProduct &, const LinearFormProduct &) = default;
};

// True when every exponent (and the doubled one) is zero, i.e. the product is 1.
bool is_constant(const LinearFormProduct &p);

// Drops trailing zero exponents. A product carrying a doubled factor is only
// checked, never shortened, since its doubled variable is tied to N.
// Throws all_exponents_zero for the constant product and
// doubled_constraint_violated when b_{N-1} + b_N != -1.
LinearFormProduct normalize(LinearFormProduct p);

// Coefficient of x^k. The sign convention of p is applied here.
// Throws arity_mismatch and doubled_unsupported.
rational coeff(const LinearFormProduct &p, const MultiIndex &k);

// [x^k] (1 + 2x)^b / (1 + x)^{k+1} = 4^k binom((b-1)/2, k).
rational lemma2_coeff(const rational &b, unsigned k);

// Coefficient of (x_1 ... x_N)^k. p must be normalized.
rational diag_coeff(const LinearFormProduct &p, unsigned k);

Series diag_series(const LinearFormProduct &p, unsigned K);

// Parses factors "lin(m)^b" and "dbl(m)^b" joined by '*'. The exponent may
// be braced ("^{1/3}") or bare ("^-1", "^2"); a missing exponent means 1.
// Repeated lin(m) factors add their exponents. dbl(m) doubles variable m, so
// it pairs with N = m + 1.
LinearFormProduct parse_product(std::string_view text, Sign sign = Sign::minus);

std::string to_string(const LinearFormProduct &p);

} // namespace hyperdiag
