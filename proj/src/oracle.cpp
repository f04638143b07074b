#include <hyperdiag/error.hpp>
#include <hyperdiag/oracle.hpp>

#include <algorithm>
#include <functional>

namespace hyperdiag
{

TruncatedMultiSeries::TruncatedMultiSeries(std::size_t n_vars, unsigned degree_bound, std::optional<unsigned> cap)
    : m_n_vars(n_vars), m_degree_bound(degree_bound), m_cap(cap)
{
}

TruncatedMultiSeries TruncatedMultiSeries::constant(std::size_t n_vars, unsigned degree_bound, const rational &c,
                                                    std::optional<unsigned> cap)
{
    TruncatedMultiSeries out(n_vars, degree_bound, cap);
    out.add_term(MultiIndex(n_vars), c);
    return out;
}

bool TruncatedMultiSeries::in_range(const MultiIndex &k) const
{
    if (k.size() != m_n_vars || k.degree() > m_degree_bound) {
        return false;
    }
    if (m_cap) {
        for (auto e : k.entries()) {
            if (e > *m_cap) {
                return false;
            }
        }
    }
    return true;
}

void TruncatedMultiSeries::add_term(const MultiIndex &k, const rational &c)
{
    if (c == 0 || !in_range(k)) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

rational TruncatedMultiSeries::coefficient(const MultiIndex &k) const
{
    const auto it = m_terms.find(k);
    return it == m_terms.end() ? rational(0) : it->second;
}

namespace
{

std::optional<unsigned> min_cap(std::optional<unsigned> a, std::optional<unsigned> b)
{
    if (a && b) {
        return std::min(*a, *b);
    }
    return a ? a : b;
}

} // namespace

TruncatedMultiSeries expand_linear_power(std::span<const rational> coeffs, const rational &b, unsigned D,
                                         std::optional<unsigned> cap)
{
    const auto m = coeffs.size();
    TruncatedMultiSeries out(m, D, cap);
    const unsigned per_var = cap ? std::min(*cap, D) : D;

    std::vector<rational> binoms;
    std::vector<integer> facts;
    for (unsigned i = 0; i <= D; ++i) {
        binoms.push_back(gen_binomial(b, i));
        facts.push_back(factorial(i));
    }
    // powers[j][e] = c_j^e
    std::vector<std::vector<rational>> powers(m);
    for (std::size_t j = 0; j < m; ++j) {
        powers[j].push_back(rational(1));
        for (unsigned e = 1; e <= per_var; ++e) {
            powers[j].push_back(powers[j].back() * coeffs[j]);
        }
    }

    MultiIndex alpha(m);
    // Walk all alpha with |alpha| <= D; `weight` is prod c_j^alpha_j / alpha_j!.
    std::function<void(std::size_t, unsigned, const rational &)> walk = [&](std::size_t j, unsigned used,
                                                                            const rational &weight) {
        if (j == m) {
            out.add_term(alpha, binoms[used] * rational(facts[used]) * weight);
            return;
        }
        const unsigned limit = coeffs[j] == 0 ? 0u : std::min(per_var, D - used);
        for (unsigned e = 0; e <= limit; ++e) {
            alpha[j] = e;
            walk(j + 1, used + e, weight * powers[j][e] / rational(facts[e]));
        }
        alpha[j] = 0;
    };
    walk(0, 0, rational(1));
    return out;
}

TruncatedMultiSeries multiply(const TruncatedMultiSeries &s1, const TruncatedMultiSeries &s2, unsigned D)
{
    if (s1.n_vars() != s2.n_vars()) {
        throw error(errc::arity_mismatch, "cannot multiply series in different numbers of variables");
    }
    const unsigned bound = std::min({D, s1.degree_bound(), s2.degree_bound()});
    TruncatedMultiSeries out(s1.n_vars(), bound, min_cap(s1.cap(), s2.cap()));
    const auto n = s1.n_vars();

    TermMap acc;
    MultiIndex sum(n);
    for (const auto &[a, ca] : s1.terms()) {
        const auto da = a.degree();
        if (da > bound) {
            break;
        }
        // Graded order: the admissible partners form a prefix of s2.
        for (const auto &[b, cb] : s2.terms()) {
            if (da + b.degree() > bound) {
                break;
            }
            for (std::size_t i = 0; i < n; ++i) {
                sum[i] = a[i] + b[i];
            }
            if (!out.in_range(sum)) {
                continue;
            }
            auto [it, inserted] = acc.try_emplace(sum, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    for (const auto &[k, c] : acc) {
        out.add_term(k, c);
    }
    return out;
}

TruncatedMultiSeries expand_geometric(const Polynomial &p, unsigned D, std::optional<unsigned> cap)
{
    TruncatedMultiSeries base(p.n_vars, D, cap);
    for (const auto &[k, c] : p.terms) {
        if (k.size() != p.n_vars) {
            throw error(errc::arity_mismatch, "polynomial term has the wrong number of variables");
        }
        if (k.degree() == 0 && c != 0) {
            throw error(errc::nonzero_constant_term, "1/(1 - p) needs p(0) = 0");
        }
        base.add_term(k, c);
    }
    auto out = TruncatedMultiSeries::constant(p.n_vars, D, rational(1), cap);
    auto power = out;
    // p^j has no terms below degree j, so D rounds suffice.
    for (unsigned j = 1; j <= D; ++j) {
        power = multiply(power, base, D);
        if (power.terms().empty()) {
            break;
        }
        for (const auto &[k, c] : power.terms()) {
            out.add_term(k, c);
        }
    }
    return out;
}

namespace
{

void require_diagonal_range(const TruncatedMultiSeries &s, unsigned K)
{
    if (static_cast<unsigned long>(K) * s.n_vars() > s.degree_bound() || (s.cap() && *s.cap() < K)) {
        throw error(errc::insufficient_bound, "series is not known far enough to read diagonal coefficient "
                                                  + std::to_string(K));
    }
}

} // namespace

Series extract_diag(const TruncatedMultiSeries &s, unsigned K)
{
    require_diagonal_range(s, K);
    std::vector<rational> coeffs;
    coeffs.reserve(K + 1);
    for (unsigned k = 0; k <= K; ++k) {
        coeffs.push_back(s.coefficient(MultiIndex::diagonal(s.n_vars(), k)));
    }
    return Series(std::move(coeffs));
}

Series diagonal_of_product(const TruncatedMultiSeries &s1, const TruncatedMultiSeries &s2, unsigned K)
{
    if (s1.n_vars() != s2.n_vars()) {
        throw error(errc::arity_mismatch, "cannot multiply series in different numbers of variables");
    }
    require_diagonal_range(s1, K);
    require_diagonal_range(s2, K);
    const auto n = s1.n_vars();
    std::vector<rational> coeffs(K + 1, rational(0));
    MultiIndex rest(n);
    for (const auto &[a, ca] : s1.terms()) {
        const unsigned lowest = *std::max_element(a.entries().begin(), a.entries().end());
        for (unsigned k = lowest; k <= K; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                rest[i] = k - a[i];
            }
            const auto it = s2.terms().find(rest);
            if (it != s2.terms().end()) {
                coeffs[k] += ca * it->second;
            }
        }
    }
    return Series(std::move(coeffs));
}

TruncatedMultiSeries scale_variables(const TruncatedMultiSeries &s, const rational &alpha)
{
    TruncatedMultiSeries out(s.n_vars(), s.degree_bound(), s.cap());
    for (const auto &[k, c] : s.terms()) {
        out.add_term(k, c * pow(alpha, k.degree()));
    }
    return out;
}

Series oracle_diag(std::span<const LinearFactor> factors, unsigned K)
{
    if (factors.empty()) {
        std::vector<rational> coeffs(K + 1, rational(0));
        coeffs[0] = 1;
        return Series(std::move(coeffs));
    }
    const auto n = factors.front().coeffs.size();
    for (const auto &f : factors) {
        if (f.coeffs.size() != n) {
            throw error(errc::arity_mismatch, "all factors must live in the same variables");
        }
    }
    const unsigned D = K * static_cast<unsigned>(n);
    auto expand = [&](const LinearFactor &f) { return expand_linear_power(f.coeffs, f.exponent, D, K); };

    if (factors.size() == 1) {
        return extract_diag(expand(factors.front()), K);
    }
    auto partial = expand(factors.front());
    for (std::size_t i = 1; i + 1 < factors.size(); ++i) {
        partial = multiply(partial, expand(factors[i]), D);
    }
    return diagonal_of_product(partial, expand(factors.back()), K);
}

std::vector<LinearFactor> linear_factors(const LinearFormProduct &p)
{
    const auto N = p.n_vars();
    const rational unit = p.sign == Sign::minus ? rational(-1) : rational(1);
    std::vector<LinearFactor> out;
    for (std::size_t j = 0; j < N; ++j) {
        if (p.exponents[j] == 0) {
            continue;
        }
        std::vector<rational> c(N, rational(0));
        std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(j + 1), unit);
        out.push_back({std::move(c), p.exponents[j]});
    }
    if (p.doubled && *p.doubled != 0) {
        if (N < 2) {
            throw error(errc::doubled_constraint_violated, "a doubled factor needs N >= 2");
        }
        std::vector<rational> c(N, rational(0));
        std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(N - 2), unit);
        c[N - 2] = 2 * unit;
        out.push_back({std::move(c), *p.doubled});
    }
    return out;
}

Series oracle_diag(const LinearFormProduct &p, unsigned K)
{
    const auto factors = linear_factors(p);
    return oracle_diag(factors, K);
}

} // namespace hyperdiag
