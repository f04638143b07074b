#include <hyperdiag/error.hpp>
#include <hyperdiag/linform.hpp>

#include <cctype>

namespace hyperdiag
{

const char *to_string(Sign s) noexcept
{
    return s == Sign::plus ? "plus" : "minus";
}

bool is_constant(const LinearFormProduct &p)
{
    for (const auto &b : p.exponents) {
        if (b != 0) {
            return false;
        }
    }
    return !p.doubled || *p.doubled == 0;
}

LinearFormProduct normalize(LinearFormProduct p)
{
    if (is_constant(p)) {
        throw error(errc::all_exponents_zero, "the product is the constant 1");
    }
    if (p.doubled) {
        const auto N = p.n_vars();
        if (N < 2) {
            throw error(errc::doubled_constraint_violated, "a doubled factor needs N >= 2");
        }
        if (p.exponents[N - 2] + p.exponents[N - 1] != -1) {
            throw error(errc::doubled_constraint_violated,
                        "doubled factor requires b_{N-1} + b_N = -1, got "
                            + to_string(rational(p.exponents[N - 2] + p.exponents[N - 1])));
        }
        return p;
    }
    while (!p.exponents.empty() && p.exponents.back() == 0) {
        p.exponents.pop_back();
    }
    return p;
}

namespace
{

rational sign_factor(const LinearFormProduct &p, unsigned long total_degree)
{
    return (p.sign == Sign::minus && total_degree % 2 == 1) ? rational(-1) : rational(1);
}

} // namespace

rational coeff(const LinearFormProduct &p, const MultiIndex &k)
{
    if (p.doubled) {
        throw error(errc::doubled_unsupported, "general coefficients are only defined without a doubled factor");
    }
    const auto N = p.n_vars();
    if (k.size() != N) {
        throw error(errc::arity_mismatch,
                    "multi-index has " + std::to_string(k.size()) + " entries, product has " + std::to_string(N)
                        + " variables");
    }
    // Walk j = N..1 carrying b_j + ... + b_N - k_N - ... - k_{j+1}.
    rational upper(0);
    rational out(1);
    for (std::size_t j = N; j-- > 0;) {
        upper += p.exponents[j];
        out *= gen_binomial(upper, k[j]);
        if (out == 0) {
            return out;
        }
        upper -= k[j];
    }
    return out * sign_factor(p, k.degree());
}

rational lemma2_coeff(const rational &b, unsigned k)
{
    return pow(rational(4), k) * gen_binomial((b - 1) / 2, k);
}

rational diag_coeff(const LinearFormProduct &p, unsigned k)
{
    const auto N = p.n_vars();
    if (N == 0) {
        throw error(errc::all_exponents_zero, "the product has no variables");
    }
    if (!p.doubled) {
        return coeff(p, MultiIndex::diagonal(N, k));
    }
    if (N < 2 || p.exponents[N - 2] + p.exponents[N - 1] != -1) {
        throw error(errc::doubled_constraint_violated, "doubled factor requires b_{N-1} + b_N = -1");
    }
    const auto &b = *p.doubled;
    rational out = lemma2_coeff(b, k) * gen_binomial(p.exponents[N - 1], k);
    // Remaining widths j = N-2..1 see b_j + ... + b_N + b - (N - j) k.
    rational upper = p.exponents[N - 1] + p.exponents[N - 2] + b;
    for (std::size_t j = N - 2; j-- > 0;) {
        if (out == 0) {
            return out;
        }
        upper += p.exponents[j];
        const rational shift(static_cast<unsigned long>(N - 1 - j) * k);
        out *= gen_binomial(upper - shift, k);
    }
    return out * sign_factor(p, static_cast<unsigned long>(N) * k);
}

Series diag_series(const LinearFormProduct &p, unsigned K)
{
    std::vector<rational> coeffs;
    coeffs.reserve(K + 1);
    for (unsigned k = 0; k <= K; ++k) {
        coeffs.push_back(diag_coeff(p, k));
    }
    return Series(std::move(coeffs));
}

namespace
{

class ProductParser
{
public:
    explicit ProductParser(std::string_view text) : m_text(text) {}

    LinearFormProduct parse(Sign sign)
    {
        std::vector<std::pair<std::size_t, rational>> lin;
        std::optional<std::pair<std::size_t, rational>> dbl;
        std::size_t N = 0;
        skip_ws();
        if (at_end()) {
            fail("empty product");
        }
        while (true) {
            const auto name = identifier();
            if (name != "lin" && name != "dbl") {
                fail("expected lin(m) or dbl(m)");
            }
            expect('(');
            const auto width = natural();
            expect(')');
            if (width == 0) {
                fail("form width must be at least 1");
            }
            rational exponent(1);
            skip_ws();
            if (peek() == '^') {
                ++m_pos;
                exponent = exponent_value();
            }
            if (name == "lin") {
                lin.emplace_back(width, exponent);
                N = std::max(N, width);
            } else {
                if (dbl) {
                    fail("at most one dbl factor");
                }
                dbl.emplace(width, exponent);
            }
            skip_ws();
            if (at_end()) {
                break;
            }
            expect('*');
        }
        LinearFormProduct p;
        p.sign = sign;
        if (dbl) {
            if (N != dbl->first + 1) {
                fail("dbl(" + std::to_string(dbl->first) + ") requires the widest lin factor to be lin("
                     + std::to_string(dbl->first + 1) + ")");
            }
            p.doubled = dbl->second;
        }
        p.exponents.assign(N, rational(0));
        for (const auto &[w, e] : lin) {
            p.exponents[w - 1] += e;
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &why) const
    {
        throw error(errc::parse_error, "cannot parse product '" + std::string(m_text) + "': " + why);
    }

    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return at_end() ? '\0' : m_text[m_pos];
    }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }
    void expect(char c)
    {
        skip_ws();
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++m_pos;
        skip_ws();
    }
    std::string identifier()
    {
        skip_ws();
        std::string out;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
            out += m_text[m_pos++];
        }
        return out;
    }
    std::size_t natural()
    {
        skip_ws();
        std::size_t v = 0;
        bool any = false;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::size_t>(m_text[m_pos++] - '0');
            any = true;
        }
        if (!any) {
            fail("expected a width");
        }
        return v;
    }
    rational exponent_value()
    {
        skip_ws();
        std::size_t start = m_pos;
        std::size_t end = 0;
        if (peek() == '{') {
            start = ++m_pos;
            while (!at_end() && peek() != '}') {
                ++m_pos;
            }
            if (at_end()) {
                fail("unterminated '{'");
            }
            end = m_pos++;
        } else {
            if (peek() == '-' || peek() == '+') {
                ++m_pos;
            }
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
                ++m_pos;
            }
            end = m_pos;
        }
        try {
            return parse_rational(m_text.substr(start, end - start));
        } catch (const error &) {
            fail("bad exponent");
        }
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace

LinearFormProduct parse_product(std::string_view text, Sign sign)
{
    return ProductParser(text).parse(sign);
}

std::string to_string(const LinearFormProduct &p)
{
    std::string out;
    const auto N = p.n_vars();
    auto append = [&](const std::string &factor) {
        if (!out.empty()) {
            out += " * ";
        }
        out += factor;
    };
    for (std::size_t j = 0; j < N; ++j) {
        if (p.exponents[j] != 0) {
            append("lin(" + std::to_string(j + 1) + ")^{" + to_string(p.exponents[j]) + "}");
        }
    }
    if (p.doubled) {
        append("dbl(" + std::to_string(N - 1) + ")^{" + to_string(*p.doubled) + "}");
    }
    if (out.empty()) {
        out = "1";
    }
    return out;
}

} // namespace hyperdiag
