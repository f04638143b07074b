#include <hyperdiag/classify.hpp>
#include <hyperdiag/error.hpp>

#include <algorithm>
#include <numeric>

namespace hyperdiag
{

const char *to_string(Status s) noexcept
{
    switch (s) {
        case Status::algebraic:
            return "algebraic";
        case Status::transcendental:
            return "transcendental";
        case Status::inapplicable:
            return "inapplicable";
    }
    return "unknown";
}

unsigned weight_screen(const PFQParams &params)
{
    const auto reduced = reduce_params(params);
    const auto count = [](const std::vector<rational> &v) {
        return static_cast<unsigned>(std::count_if(v.begin(), v.end(), [](const rational &q) { return is_integer(q); }));
    };
    const auto bottom = count(reduced.bottom());
    const auto top = count(reduced.top());
    return bottom > top ? bottom - top : 0u;
}

namespace
{

struct Point {
    rational position;
    bool is_top;
};

// True if the top and bottom points alternate around the circle with no two
// points coinciding.
bool strictly_interlaces(std::vector<Point> points)
{
    std::sort(points.begin(), points.end(), [](const Point &a, const Point &b) { return a.position < b.position; });
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto &next = points[(i + 1) % points.size()];
        if (points.size() > 1 && (points[i].position == next.position || points[i].is_top == next.is_top)) {
            return false;
        }
    }
    return true;
}

} // namespace

Verdict interlacing_check(const PFQParams &params)
{
    Verdict v;
    v.weight = weight_screen(params);
    if (v.weight > 0) {
        v.status = Status::transcendental;
        v.reason = "weight screen: " + std::to_string(v.weight) + " more integer bottom than top parameters";
        return v;
    }

    std::vector<rational> top;
    std::vector<rational> bottom;
    for (const auto &a : params.top()) {
        top.push_back(unit_interval_rep(a));
    }
    for (const auto &b : params.bottom()) {
        bottom.push_back(unit_interval_rep(b));
    }
    bottom.emplace_back(1);

    if (top.size() != bottom.size()) {
        v.reason = "interlacing needs an nF(n-1); got " + std::to_string(params.top().size()) + "F"
                   + std::to_string(params.bottom().size());
        return v;
    }
    for (const auto &a : top) {
        if (std::find(bottom.begin(), bottom.end(), a) != bottom.end()) {
            v.reason = "reducible: top and bottom share " + to_string(a) + " modulo 1; cancel or screen first";
            return v;
        }
    }

    unsigned long d = 1;
    for (const auto *list : {&top, &bottom}) {
        for (const auto &q : *list) {
            d = std::lcm(d, q.get_den().get_ui());
        }
    }

    for (unsigned long c = 1; c < d || (d == 1 && c == 1); ++c) {
        if (std::gcd(c, d) != 1) {
            continue;
        }
        v.residues.push_back(c);
        std::vector<Point> points;
        for (const auto &a : top) {
            points.push_back({unit_interval_rep(a * c), true});
        }
        for (const auto &b : bottom) {
            points.push_back({unit_interval_rep(b * c), false});
        }
        if (!v.failing_residue && !strictly_interlaces(std::move(points))) {
            v.failing_residue = c;
        }
    }

    if (v.failing_residue) {
        v.status = Status::transcendental;
        v.reason = "parameters do not interlace for residue " + std::to_string(*v.failing_residue) + " mod "
                   + std::to_string(d);
    } else {
        v.status = Status::algebraic;
        v.reason = "parameters interlace for all " + std::to_string(v.residues.size()) + " residues mod "
                   + std::to_string(d);
    }
    return v;
}

Verdict classify_product(const LinearFormProduct &p)
{
    if (p.doubled) {
        throw error(errc::doubled_unsupported, "the algebraicity criterion covers plain products only");
    }
    const auto q = normalize(p);
    Verdict v;
    const auto N = q.n_vars();
    if (N == 1) {
        v.status = Status::algebraic;
        v.reason = "N = 1: the diagonal is the power (1 -+ t)^b itself";
    } else if (N == 2 && is_integer(q.exponents[1])) {
        v.status = Status::algebraic;
        v.reason = "N = 2 with integer b_2: algebraic by the linear-form algebraicity criterion";
    } else {
        v.status = Status::transcendental;
        v.reason = N == 2 ? "N = 2 with non-integer b_2: transcendental by the linear-form algebraicity criterion"
                          : "N >= 3: transcendental by the linear-form algebraicity criterion";
    }
    return v;
}

std::optional<Grade2Decomposition> grade2_search(const PFQParams &params, unsigned denominator_bound)
{
    const auto &bottom = params.bottom();
    const auto unit = std::find(bottom.begin(), bottom.end(), rational(1));
    if (unit == bottom.end()) {
        throw error(errc::no_unit_bottom, "grade-2 search needs an explicit bottom parameter equal to 1");
    }
    const auto slot = static_cast<std::size_t>(unit - bottom.begin());
    for (unsigned m = 2; m <= denominator_bound; ++m) {
        for (unsigned i = 1; i < m; ++i) {
            if (std::gcd(i, m) != 1) {
                continue;
            }
            const rational c = make_rational(i, m);
            auto swapped = bottom;
            swapped[slot] = c;
            PFQParams candidate(params.top(), std::move(swapped), params.scale());
            auto verdict = interlacing_check(candidate);
            if (verdict.status == Status::algebraic) {
                return Grade2Decomposition{c, std::move(candidate), std::move(verdict)};
            }
        }
    }
    return std::nullopt;
}

} // namespace hyperdiag
