#include <hyperdiag/builders.hpp>
#include <hyperdiag/error.hpp>

namespace hyperdiag
{

rational Thm1Spec::Q() const
{
    return n == 0 ? S : S - R;
}

void validate(const Thm1Spec &spec)
{
    if (spec.S == 0) {
        throw error(errc::degenerate_spec, "thm1 family needs S != 0");
    }
    if (spec.N == 0 || spec.n > spec.N) {
        throw error(errc::degenerate_spec, "thm1 family needs 0 <= n <= N and N >= 1");
    }
}

PFQParams thm1_params(const Thm1Spec &spec)
{
    validate(spec);
    const auto N = spec.N;
    const auto s = spec.s();
    const auto Q = spec.Q();
    std::vector<rational> top;
    std::vector<rational> bottom;
    for (unsigned i = 0; i < N; ++i) {
        top.push_back((Q + i) / rational(N));
    }
    for (unsigned i = 0; i < s; ++i) {
        top.push_back((spec.S + i) / rational(s));
    }
    for (unsigned i = 0; i < s; ++i) {
        bottom.push_back((Q + i) / rational(s));
    }
    for (unsigned i = 0; i + 1 < N; ++i) {
        bottom.emplace_back(1);
    }
    return PFQParams(std::move(top), std::move(bottom), pow(rational(N), N));
}

namespace
{

integer multinomial_equal_parts(unsigned parts, unsigned k)
{
    const std::vector<unsigned long> split(parts, k);
    return multinomial(static_cast<unsigned long>(parts) * k, split);
}

} // namespace

rational thm1_closed_form(const Thm1Spec &spec, unsigned k)
{
    validate(spec);
    const unsigned long sk = static_cast<unsigned long>(spec.s()) * k;
    const unsigned long nk = static_cast<unsigned long>(spec.n) * k;
    const rational R = spec.n == 0 ? rational(0) : spec.R;
    rational out(multinomial_equal_parts(spec.s(), k) * multinomial_equal_parts(spec.n, k));
    out *= gen_binomial(-spec.S, sk);
    out *= gen_binomial(R - spec.S - rational(sk), nk);
    if ((static_cast<unsigned long>(spec.N) * k) % 2 == 1) {
        out = -out;
    }
    return out;
}

Series thm1_closed_form_series(const Thm1Spec &spec, unsigned K)
{
    std::vector<rational> coeffs;
    for (unsigned k = 0; k <= K; ++k) {
        coeffs.push_back(thm1_closed_form(spec, k));
    }
    return Series(std::move(coeffs));
}

LinearFormProduct thm1_product(const Thm1Spec &spec)
{
    validate(spec);
    LinearFormProduct p;
    p.sign = Sign::minus;
    p.exponents.assign(spec.N, rational(0));
    if (spec.n > 0) {
        p.exponents[spec.n - 1] += spec.R;
    }
    p.exponents[spec.N - 1] -= spec.S;
    return p;
}

rational tail_sum(const GeneralSpec &spec, std::size_t k)
{
    rational sum(0);
    for (std::size_t j = k; j <= spec.exponents.size(); ++j) {
        sum += spec.exponents[j - 1];
    }
    return -sum;
}

namespace
{

// (base + i) / width for i = 0..width-1.
void append_block(std::vector<rational> &out, const rational &base, std::size_t width)
{
    for (std::size_t i = 0; i < width; ++i) {
        out.push_back((base + static_cast<unsigned long>(i)) / rational(static_cast<unsigned long>(width)));
    }
}

rational general_scale(std::size_t N)
{
    return pow(rational(-static_cast<long>(N)), N);
}

} // namespace

PFQParams general1_params(const GeneralSpec &spec)
{
    const auto N = spec.exponents.size();
    if (N == 0 || spec.exponents.back() == 0) {
        throw error(errc::degenerate_spec, "general family needs N >= 1 and b_N != 0");
    }
    if (spec.doubled) {
        throw error(errc::doubled_unsupported, "use general2_params for a doubled factor");
    }
    std::vector<rational> top;
    std::vector<rational> bottom;
    for (std::size_t k = 1; k <= N; ++k) {
        append_block(top, tail_sum(spec, k), N - k + 1);
    }
    for (std::size_t k = 1; k < N; ++k) {
        append_block(bottom, tail_sum(spec, k), N - k);
    }
    bottom.insert(bottom.end(), N - 1, rational(1));
    return PFQParams(std::move(top), std::move(bottom), general_scale(N));
}

PFQParams general2_params(const GeneralSpec &spec)
{
    const auto N = spec.exponents.size();
    if (!spec.doubled) {
        throw error(errc::degenerate_spec, "general2_params needs a doubled exponent");
    }
    if (N < 2 || spec.exponents[N - 2] + spec.exponents[N - 1] != -1) {
        throw error(errc::doubled_constraint_violated, "doubled factor requires N >= 2 and b_{N-1} + b_N = -1");
    }
    const auto &b = *spec.doubled;
    std::vector<rational> top;
    std::vector<rational> bottom;
    for (std::size_t k = 1; k + 2 <= N; ++k) {
        append_block(top, tail_sum(spec, k) - b, N - k + 1);
    }
    top.push_back((1 - b) / 2);
    top.push_back(-spec.exponents[N - 1]);
    for (std::size_t k = 1; k + 2 <= N; ++k) {
        append_block(bottom, tail_sum(spec, k) - b, N - k);
    }
    bottom.insert(bottom.end(), N - 1, rational(1));
    return PFQParams(std::move(top), std::move(bottom), general_scale(N));
}

PFQParams to_convention(const PFQParams &plus_params, std::size_t N, Sign sign)
{
    if (sign == Sign::plus || N % 2 == 0) {
        return plus_params;
    }
    return plus_params.with_scale(-plus_params.scale());
}

GeneralSpec general_spec(const LinearFormProduct &p)
{
    return GeneralSpec{p.exponents, p.doubled};
}

} // namespace hyperdiag
