#include <hyperdiag/error.hpp>
#include <hyperdiag/io.hpp>

namespace hyperdiag
{

namespace
{

json list(const std::vector<rational> &v)
{
    json out = json::array();
    for (const auto &q : v) {
        out.push_back(to_string(q));
    }
    return out;
}

std::vector<rational> list_from_json(const json &j)
{
    if (!j.is_array()) {
        throw error(errc::parse_error, "expected an array of rationals");
    }
    std::vector<rational> out;
    for (const auto &e : j) {
        if (!e.is_string()) {
            throw error(errc::parse_error, "rationals are serialized as strings");
        }
        out.push_back(parse_rational(e.get<std::string>()));
    }
    return out;
}

} // namespace

json to_json(const rational &q)
{
    return to_string(q);
}

json to_json(const Series &s)
{
    return list(s.coeffs());
}

json to_json(const PFQParams &p)
{
    return json{{"top", list(p.top())}, {"bottom", list(p.bottom())}, {"scale", to_string(p.scale())}};
}

json to_json(const Verdict &v)
{
    json out{{"status", to_string(v.status)}, {"reason", v.reason}, {"residues", v.residues}};
    if (v.failing_residue) {
        out["failing_residue"] = *v.failing_residue;
    }
    if (v.weight > 0) {
        out["weight"] = v.weight;
    }
    return out;
}

json to_json(const Grade2Decomposition &d)
{
    return json{{"c", to_string(d.c)}, {"algebraic_params", to_json(d.algebraic_params)}, {"verdict", to_json(d.verdict)}};
}

json to_json(const VerificationReport &r)
{
    json out{{"description", r.description}, {"status", to_string(r.status)}};
    if (!r.builder.empty()) {
        out["builder"] = r.builder;
    }
    if (r.raw_params) {
        out["raw_params"] = to_json(*r.raw_params);
    }
    if (r.reduced_params) {
        out["reduced_params"] = to_json(*r.reduced_params);
    }
    json orders = json::object();
    json sources = json::object();
    for (const auto &s : r.sources) {
        orders[s.method] = s.series.order();
        sources[s.method] = to_json(s.series);
    }
    out["orders"] = orders;
    out["sources"] = sources;
    json checks = json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out["checks"] = checks;
    if (!r.refusal_reason.empty()) {
        out["refusal_reason"] = r.refusal_reason;
    }
    if (r.mismatch) {
        json values = json::object();
        for (const auto &[method, value] : r.mismatch->values) {
            values[method] = to_string(value);
        }
        out["mismatch"] = {{"label", r.mismatch->label}, {"index", r.mismatch->index}, {"values", values}};
    }
    return out;
}

std::string to_display(const PFQParams &p)
{
    auto list = [](const std::vector<rational> &v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            out += (i ? "," : "") + to_string(v[i]);
        }
        return out + "]";
    };
    std::string arg = "t";
    if (p.scale() == -1) {
        arg = "-t";
    } else if (p.scale() != 1) {
        arg = is_integer(p.scale()) ? to_string(p.scale()) + "t" : "(" + to_string(p.scale()) + ")t";
    }
    return std::to_string(p.top().size()) + "F" + std::to_string(p.bottom().size()) + "(" + list(p.top()) + "; "
           + list(p.bottom()) + "; " + arg + ")";
}

Series series_from_json(const json &j)
{
    auto coeffs = list_from_json(j);
    if (coeffs.empty()) {
        throw error(errc::parse_error, "a series needs at least one coefficient");
    }
    return Series(std::move(coeffs));
}

PFQParams params_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("top") || !j.contains("bottom")) {
        throw error(errc::parse_error, "expected an object with \"top\" and \"bottom\"");
    }
    rational scale(1);
    if (j.contains("scale")) {
        scale = parse_rational(j.at("scale").get<std::string>());
    }
    return PFQParams(list_from_json(j.at("top")), list_from_json(j.at("bottom")), scale);
}

PFQParams parse_pfq(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        parts.push_back(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
        if (bar == std::string_view::npos) {
            break;
        }
        start = bar + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw error(errc::parse_error, "expected \"top|bottom\" or \"top|bottom|scale\"");
    }
    const rational scale = parts.size() == 3 ? parse_rational(parts[2]) : rational(1);
    return PFQParams(parse_rational_list(parts[0]), parse_rational_list(parts[1]), scale);
}

} // namespace hyperdiag
