#include <hyperdiag/arith.hpp>
#include <hyperdiag/error.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hyperdiag
{

const char *to_string(errc code) noexcept
{
    switch (code) {
        case errc::parse_error:
            return "parse-error";
        case errc::invalid_bottom_parameter:
            return "invalid-bottom-parameter";
        case errc::arity_mismatch:
            return "arity-mismatch";
        case errc::all_exponents_zero:
            return "all-exponents-zero";
        case errc::doubled_constraint_violated:
            return "doubled-constraint-violated";
        case errc::doubled_unsupported:
            return "doubled-unsupported";
        case errc::nonzero_constant_term:
            return "nonzero-constant-term";
        case errc::insufficient_bound:
            return "insufficient-bound";
        case errc::degenerate_spec:
            return "degenerate-spec";
        case errc::no_unit_bottom:
            return "no-unit-bottom";
        case errc::unknown_scenario:
            return "unknown-scenario";
    }
    return "unknown";
}

rational make_rational(const integer &num, const integer &den)
{
    if (den == 0) {
        throw error(errc::parse_error, "zero denominator");
    }
    rational q(num, den);
    q.canonicalize();
    return q;
}

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

integer parse_integer(std::string_view digits, std::string_view whole)
{
    auto body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        body.remove_prefix(1);
    }
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw error(errc::parse_error, "malformed rational '" + std::string(whole) + "'");
    }
    std::string text(digits);
    if (text.front() == '+') {
        text.erase(0, 1);
    }
    return integer(text, 10);
}

} // namespace

rational parse_rational(std::string_view text)
{
    const auto t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) {
        return rational(parse_integer(t, text));
    }
    const auto num = trim(t.substr(0, slash));
    const auto den = trim(t.substr(slash + 1));
    if (!den.empty() && den.front() == '-') {
        throw error(errc::parse_error, "sign must be on the numerator: '" + std::string(text) + "'");
    }
    return make_rational(parse_integer(num, text), parse_integer(den, text));
}

std::string to_string(const rational &q)
{
    return q.get_str(10);
}

std::vector<rational> parse_rational_list(std::string_view text)
{
    std::vector<rational> out;
    if (trim(text).empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

bool is_integer(const rational &q)
{
    return q.get_den() == 1;
}

bool is_nonpositive_integer(const rational &q)
{
    return is_integer(q) && sgn(q) <= 0;
}

rational unit_interval_rep(const rational &q)
{
    integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    rational r = q - rational(fl);
    if (r == 0) {
        r = 1;
    }
    return r;
}

rational pow(const rational &base, unsigned long exponent)
{
    rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of a reduced fraction with positive denominator stay canonical.
    return out;
}

integer factorial(unsigned long n)
{
    integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

rational pochhammer(const rational &x, unsigned long j)
{
    rational out(1);
    rational factor = x;
    for (unsigned long i = 0; i < j; ++i) {
        out *= factor;
        if (out == 0) {
            break;
        }
        factor += 1;
    }
    return out;
}

rational gen_binomial(const rational &r, unsigned long k)
{
    if (is_integer(r) && sgn(r) >= 0 && r < k) {
        return rational(0);
    }
    // prod (p - i q) / (q^k k!)
    const integer &p = r.get_num();
    const integer &q = r.get_den();
    integer num(1);
    integer term = p;
    for (unsigned long i = 0; i < k; ++i) {
        num *= term;
        term -= q;
    }
    integer den;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), k);
    den *= factorial(k);
    return make_rational(num, den);
}

integer multinomial(unsigned long m, std::span<const unsigned long> parts)
{
    unsigned long total = 0;
    for (auto a : parts) {
        total += a;
    }
    if (total != m) {
        return integer(0);
    }
    integer out = factorial(m);
    for (auto a : parts) {
        out /= factorial(a);
    }
    return out;
}

unsigned MultiIndex::degree() const noexcept
{
    return std::accumulate(m_entries.begin(), m_entries.end(), 0u);
}

bool GradedLexLess::operator()(const MultiIndex &a, const MultiIndex &b) const
{
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) {
        return da < db;
    }
    return a.entries() < b.entries();
}

std::string to_string(const MultiIndex &k)
{
    std::string out = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += std::to_string(k[i]);
    }
    return out + ")";
}

} // namespace hyperdiag
