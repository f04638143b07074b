#pragma once

#include <optional>
#include <vector>

#include <hyperdiag/arith.hpp>
#include <hyperdiag/hyperseries.hpp>
#include <hyperdiag/linform.hpp>

namespace hyperdiag
{

// Diag((1 - x_1 - ... - x_n)^R / (1 - x_1 - ... - x_N)^S).
struct Thm1Spec {
    rational R;
    rational S;
    unsigned n = 0;
    unsigned N = 1;

    unsigned s() const noexcept
    {
        return N - n;
    }
    // Q = S - R, with R read as 0 when n == 0.
    rational Q() const;
};

// Throws degenerate_spec unless S != 0, N >= 1 and n <= N.
void validate(const Thm1Spec &spec);

// pFq with top (Q+i)/N, i < N, then (S+i)/s, i < s; bottom (Q+i)/s, i < s,
// then N-1 ones; scale N^N. Matches the minus-convention diagonal.
// Throws invalid_bottom_parameter when a constructed bottom entry is a
// nonpositive integer.
PFQParams thm1_params(const Thm1Spec &spec);

// Diagonal coefficient of the minus-convention product:
// (-1)^{Nk} multinomial(sk; k..k) multinomial(nk; k..k) binom(-S, sk) binom(R - S - sk, nk).
rational thm1_closed_form(const Thm1Spec &spec, unsigned k);
Series thm1_closed_form_series(const Thm1Spec &spec, unsigned K);

// The product itself (widths n and N, minus convention).
LinearFormProduct thm1_product(const Thm1Spec &spec);

// prod_j (1 + x_1 + ... + x_j)^{b_j} [ * (1 + x_1 + ... + x_{N-2} + 2 x_{N-1})^b ].
struct GeneralSpec {
    std::vector<rational> exponents;
    std::optional<rational> doubled;
};

// B(k) = -(b_k + ... + b_N), 1-based k.
rational tail_sum(const GeneralSpec &spec, std::size_t k);

// Parameters for the plain product in the plus convention; scale (-N)^N.
// Top blocks (B(k)+i)/(N-k+1), i = 0..N-k, for k = 1..N; bottom blocks
// (B(k)+i)/(N-k), i = 0..N-k-1, for k = 1..N-1, then N-1 ones.
PFQParams general1_params(const GeneralSpec &spec);

// Parameters for the product with a doubled factor (b_{N-1} + b_N = -1),
// plus convention, scale (-N)^N.
PFQParams general2_params(const GeneralSpec &spec);

// Params matching the diagonal in the requested convention, given params for
// the plus convention of an N-variable product: t -> (-1)^N t.
PFQParams to_convention(const PFQParams &plus_params, std::size_t N, Sign sign);

GeneralSpec general_spec(const LinearFormProduct &p);

} // namespace hyperdiag
