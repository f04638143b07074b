#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <hyperdiag/arith.hpp>

namespace hyperdiag
{

// Default truncation order wherever an order is optional.
inline constexpr unsigned default_order = 16;

// Parameters of pFq([top]; [bottom]; scale * t). The k! of the series is
// implicit and never stored in the bottom list.
class PFQParams
{
public:
    PFQParams() = default;

    // Throws error(invalid_bottom_parameter) if a bottom entry is a
    // nonpositive integer. Nonpositive integer top entries are allowed and
    // make the series terminate.
    PFQParams(std::vector<rational> top, std::vector<rational> bottom, rational scale = rational(1));

    const std::vector<rational> &top() const noexcept
    {
        return m_top;
    }
    const std::vector<rational> &bottom() const noexcept
    {
        return m_bottom;
    }
    const rational &scale() const noexcept
    {
        return m_scale;
    }

    PFQParams with_scale(const rational &scale) const;

    // Exact equality of the displayed lists (order-sensitive) and scale.
    friend bool operator==(const PFQParams &, const PFQParams &) = default;

private:
    std::vector<rational> m_top;
    std::vector<rational> m_bottom;
    rational m_scale{1};
};

// Same parameters up to reordering within the top and bottom lists.
bool same_multiset(const PFQParams &a, const PFQParams &b);

// Truncated power series c_0 + c_1 t + ... + c_K t^K.
class Series
{
public:
    Series() : m_coeffs{rational(1)} {}
    explicit Series(std::vector<rational> coeffs);

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }
    const rational &operator[](std::size_t k) const
    {
        return m_coeffs[k];
    }
    const std::vector<rational> &coeffs() const noexcept
    {
        return m_coeffs;
    }

    // Drops coefficients above order K (K <= order()).
    Series truncate(std::size_t K) const;

    friend bool operator==(const Series &, const Series &) = default;

private:
    std::vector<rational> m_coeffs;
};

// sum_{i=0}^{r} p_i(n) u_{n+i} = 0, each p_i stored as coefficients in
// ascending powers of n.
struct Recurrence {
    std::vector<std::vector<rational>> polys;

    std::size_t order() const
    {
        return polys.size() - 1;
    }
};

rational eval_poly(const std::vector<rational> &poly, const rational &n);

rational pfq_coeff(const PFQParams &params, unsigned k);
Series pfq_series(const PFQParams &params, unsigned K);

// Coefficients (c)_k / k! of (1 - t)^(-c).
Series binomial_series(const rational &c, unsigned K);

// Term-wise product, truncated to the smaller order.
Series hadamard(const Series &s1, const Series &s2);

// c_k -> lambda^k c_k, i.e. t -> lambda t.
Series scale_arg(const Series &s, const rational &lambda);

// Cancels equal entries between top and bottom (multiset semantics). The
// surviving entries keep their original relative order.
PFQParams reduce_params(const PFQParams &params);

struct SeriesMismatch {
    std::size_t index;
    rational lhs;
    rational rhs;
};

struct SeriesComparison {
    std::size_t checked_order;
    std::optional<SeriesMismatch> mismatch;

    bool equal() const noexcept
    {
        return !mismatch.has_value();
    }
};

// Exact comparison over the shared order range; never pads.
SeriesComparison series_equal(const Series &s1, const Series &s2);

struct RecurrenceCheck {
    // Largest n for which the relation was evaluated (all of 0..last_n hold
    // when first_failure is empty).
    std::size_t last_n;
    std::optional<std::size_t> first_failure;

    bool holds() const noexcept
    {
        return !first_failure.has_value();
    }
};

RecurrenceCheck check_recurrence(const Series &s, const Recurrence &rec);

} // namespace hyperdiag
