#include <hyperdiag/error.hpp>
#include <hyperdiag/hyperseries.hpp>

#include <algorithm>

namespace hyperdiag
{

PFQParams::PFQParams(std::vector<rational> top, std::vector<rational> bottom, rational scale)
    : m_top(std::move(top)), m_bottom(std::move(bottom)), m_scale(std::move(scale))
{
    for (const auto &b : m_bottom) {
        if (is_nonpositive_integer(b)) {
            throw error(errc::invalid_bottom_parameter,
                        "bottom parameter " + to_string(b) + " is a nonpositive integer");
        }
    }
}

PFQParams PFQParams::with_scale(const rational &scale) const
{
    auto out = *this;
    out.m_scale = scale;
    return out;
}

namespace
{

std::vector<rational> sorted(std::vector<rational> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

bool same_multiset(const PFQParams &a, const PFQParams &b)
{
    return a.scale() == b.scale() && sorted(a.top()) == sorted(b.top()) && sorted(a.bottom()) == sorted(b.bottom());
}

Series::Series(std::vector<rational> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw error(errc::arity_mismatch, "a series needs at least the constant coefficient");
    }
}

Series Series::truncate(std::size_t K) const
{
    K = std::min(K, order());
    return Series(std::vector<rational>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(K + 1)));
}

rational eval_poly(const std::vector<rational> &poly, const rational &n)
{
    rational acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = acc * n + *it;
    }
    return acc;
}

rational pfq_coeff(const PFQParams &params, unsigned k)
{
    rational num = pow(params.scale(), k);
    for (const auto &a : params.top()) {
        num *= pochhammer(a, k);
    }
    rational den(factorial(k));
    for (const auto &b : params.bottom()) {
        den *= pochhammer(b, k);
    }
    if (den == 0) {
        throw error(errc::invalid_bottom_parameter, "a bottom Pochhammer symbol vanishes");
    }
    return num / den;
}

Series pfq_series(const PFQParams &params, unsigned K)
{
    // Term ratio c_{k+1}/c_k = scale * prod(a_i + k) / (prod(b_j + k) (k + 1)).
    std::vector<rational> coeffs;
    coeffs.reserve(K + 1);
    coeffs.emplace_back(1);
    rational c(1);
    for (unsigned k = 0; k < K; ++k) {
        if (c != 0) {
            rational num = params.scale();
            for (const auto &a : params.top()) {
                num *= a + k;
            }
            rational den(k + 1);
            for (const auto &b : params.bottom()) {
                den *= b + k;
            }
            if (den == 0) {
                throw error(errc::invalid_bottom_parameter, "a bottom Pochhammer symbol vanishes");
            }
            c *= num / den;
        }
        coeffs.push_back(c);
    }
    return Series(std::move(coeffs));
}

Series binomial_series(const rational &c, unsigned K)
{
    std::vector<rational> coeffs;
    coeffs.reserve(K + 1);
    rational term(1);
    coeffs.push_back(term);
    for (unsigned k = 0; k < K; ++k) {
        term *= (c + k) / rational(k + 1);
        coeffs.push_back(term);
    }
    return Series(std::move(coeffs));
}

Series hadamard(const Series &s1, const Series &s2)
{
    const auto K = std::min(s1.order(), s2.order());
    std::vector<rational> coeffs;
    coeffs.reserve(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        coeffs.push_back(s1[k] * s2[k]);
    }
    return Series(std::move(coeffs));
}

Series scale_arg(const Series &s, const rational &lambda)
{
    std::vector<rational> coeffs;
    coeffs.reserve(s.order() + 1);
    rational power(1);
    for (std::size_t k = 0; k <= s.order(); ++k) {
        coeffs.push_back(s[k] * power);
        power *= lambda;
    }
    return Series(std::move(coeffs));
}

PFQParams reduce_params(const PFQParams &params)
{
    std::vector<rational> top;
    std::vector<bool> used(params.bottom().size(), false);
    for (const auto &a : params.top()) {
        bool cancelled = false;
        for (std::size_t j = 0; j < params.bottom().size(); ++j) {
            if (!used[j] && params.bottom()[j] == a) {
                used[j] = true;
                cancelled = true;
                break;
            }
        }
        if (!cancelled) {
            top.push_back(a);
        }
    }
    std::vector<rational> bottom;
    for (std::size_t j = 0; j < params.bottom().size(); ++j) {
        if (!used[j]) {
            bottom.push_back(params.bottom()[j]);
        }
    }
    return PFQParams(std::move(top), std::move(bottom), params.scale());
}

SeriesComparison series_equal(const Series &s1, const Series &s2)
{
    const auto K = std::min(s1.order(), s2.order());
    for (std::size_t k = 0; k <= K; ++k) {
        if (s1[k] != s2[k]) {
            return {K, SeriesMismatch{k, s1[k], s2[k]}};
        }
    }
    return {K, std::nullopt};
}

RecurrenceCheck check_recurrence(const Series &s, const Recurrence &rec)
{
    if (rec.polys.empty() || s.order() < rec.order()) {
        throw error(errc::insufficient_bound, "series order is smaller than the recurrence order");
    }
    const auto r = rec.order();
    const auto last = s.order() - r;
    for (std::size_t n = 0; n <= last; ++n) {
        const rational nn(static_cast<unsigned long>(n));
        rational acc(0);
        for (std::size_t i = 0; i <= r; ++i) {
            acc += eval_poly(rec.polys[i], nn) * s[n + i];
        }
        if (acc != 0) {
            return {n, n};
        }
    }
    return {last, std::nullopt};
}

} // namespace hyperdiag
