#include <hyperdiag/builders.hpp>
#include <hyperdiag/classify.hpp>
#include <hyperdiag/cli.hpp>
#include <hyperdiag/error.hpp>
#include <hyperdiag/io.hpp>
#include <hyperdiag/linform.hpp>
#include <hyperdiag/oracle.hpp>
#include <hyperdiag/verifier.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>

namespace hyperdiag::cli
{

namespace
{

constexpr std::size_t table_limit = 12;
constexpr unsigned oracle_degree_limit = 40;

const std::map<std::string, std::string> &synopses()
{
    static const std::map<std::string, std::string> table{
        {"diag", "hyperdiag diag --product SPEC [--plus] [--order K] [--json]"},
        {"pfq", "hyperdiag pfq --top LIST --bottom LIST [--scale Q] [--order K] [--json]"},
        {"thm1", "hyperdiag thm1 --S Q --n n --N N [--R Q] [--order K] [--json]"},
        {"general1", "hyperdiag general1 --b LIST [--plus] [--order K] [--json]"},
        {"general2", "hyperdiag general2 --b LIST --dbl Q [--plus] [--order K] [--json]"},
        {"oracle", "hyperdiag oracle --product SPEC [--plus] [--order K] [--force] [--json]"},
        {"verify", "hyperdiag verify --product SPEC [--plus] [--order K] [--oracle-order K | --no-oracle] "
                   "[--builder auto|thm1|general1|general2] [--json]"},
        {"classify", "hyperdiag classify (--pfq \"TOP|BOTTOM\" | --product SPEC [--plus]) "
                     "[--expect algebraic|transcendental|inapplicable] [--json]"},
        {"hadamard", "hyperdiag hadamard --lhs \"TOP|BOTTOM[|SCALE]\" --rhs \"TOP|BOTTOM[|SCALE]\" "
                     "[--expect \"TOP|BOTTOM[|SCALE]\"] [--order K] [--json]"},
        {"grade2", "hyperdiag grade2 --pfq \"TOP|BOTTOM\" [--bound m] [--json]"},
        {"reproduce", "hyperdiag reproduce (NAME|all) [--arg KEY=Q]... [--order K] [--json]"},
    };
    return table;
}

std::string synopsis_for(const std::string &sub)
{
    const auto it = synopses().find(sub);
    if (it != synopses().end()) {
        return it->second;
    }
    std::string all = "hyperdiag <command> ...; commands:";
    for (const auto &[name, text] : synopses()) {
        all += " " + name;
    }
    return all;
}

struct UsageError {
    std::string message;
};

struct Options {
    bool json = false;
    bool plus = false;
    bool force = false;
    bool no_oracle = false;
    unsigned order = default_order;
    unsigned oracle_order = 0;
    unsigned bound = default_grade2_bound;
    unsigned n = 0;
    unsigned N = 0;
    std::string product;
    std::string top;
    std::string bottom;
    std::string scale = "1";
    std::string R = "0";
    std::string S;
    std::string b;
    std::string dbl;
    std::string pfq;
    std::string expect;
    std::string lhs;
    std::string rhs;
    std::string builder = "auto";
    std::string name;
    std::vector<std::string> scenario_args;
};

void print_series(std::ostream &out, const Series &s)
{
    const auto shown = std::min(s.order(), table_limit - 1);
    for (std::size_t k = 0; k <= shown; ++k) {
        out << "  c_" << k << " = " << to_string(s[k]) << '\n';
    }
    if (s.order() > shown) {
        out << "  …\n";
    }
}

void print_verdict(std::ostream &out, const Verdict &v)
{
    out << "status: " << to_string(v.status) << '\n' << "reason: " << v.reason << '\n';
    if (!v.residues.empty()) {
        out << "residues:";
        for (auto c : v.residues) {
            out << ' ' << c;
        }
        out << '\n';
    }
    if (v.failing_residue) {
        out << "failing residue: " << *v.failing_residue << '\n';
    }
}

void print_decomposition(std::ostream &out, const Grade2Decomposition &d)
{
    out << "grade-2 decomposition: " << to_display(d.algebraic_params) << " * (1-t)^(-" << to_string(d.c) << ")\n";
    out << "  partner " << to_string(d.verdict.status) << ": " << d.verdict.reason << '\n';
}

void print_report(std::ostream &out, const VerificationReport &r)
{
    out << r.description << '\n';
    if (!r.builder.empty()) {
        out << "builder: " << r.builder << '\n';
    }
    if (r.raw_params) {
        out << "params: " << to_display(*r.raw_params) << '\n';
    }
    if (r.reduced_params && r.raw_params && !(*r.reduced_params == *r.raw_params)) {
        out << "reduced: " << to_display(*r.reduced_params) << '\n';
    }
    for (const auto &c : r.checks) {
        out << (c.passed ? "  [ok]   " : "  [FAIL] ") << c.label;
        if (!c.detail.empty()) {
            out << ": " << c.detail;
        }
        out << '\n';
    }
    if (!r.refusal_reason.empty()) {
        out << "refused: " << r.refusal_reason << '\n';
    }
    out << to_string(r.status) << '\n';
}

unsigned env_order()
{
    const char *text = std::getenv("HYPERDIAG_ORDER");
    if (text == nullptr || *text == '\0') {
        return default_order;
    }
    try {
        std::size_t used = 0;
        const long value = std::stol(text, &used);
        if (used == std::string(text).size() && value >= 0) {
            return static_cast<unsigned>(value);
        }
    } catch (const std::exception &) {
    }
    throw UsageError{"HYPERDIAG_ORDER must be a nonnegative integer, got '" + std::string(text) + "'"};
}

Sign sign_of(const Options &o)
{
    return o.plus ? Sign::plus : Sign::minus;
}

int emit_series(std::ostream &out, const Options &o, const Series &s)
{
    if (o.json) {
        out << to_json(s).dump() << '\n';
    } else {
        print_series(out, s);
    }
    return exit_ok;
}

int emit_params(std::ostream &out, const Options &o, const PFQParams &p, unsigned order)
{
    const auto series = pfq_series(p, order);
    if (o.json) {
        out << json{{"params", to_json(p)}, {"series", to_json(series)}}.dump() << '\n';
    } else {
        out << to_display(p) << '\n';
        print_series(out, series);
    }
    return exit_ok;
}

int emit_report(std::ostream &out, const Options &o, const VerificationReport &r)
{
    if (o.json) {
        out << to_json(r).dump() << '\n';
    } else {
        print_report(out, r);
    }
    return r.ok() ? exit_ok : exit_mismatch;
}

Status parse_status(const std::string &text)
{
    if (text == "algebraic") {
        return Status::algebraic;
    }
    if (text == "transcendental") {
        return Status::transcendental;
    }
    if (text == "inapplicable") {
        return Status::inapplicable;
    }
    throw UsageError{"--expect must be algebraic, transcendental or inapplicable"};
}

BuilderChoice parse_builder(const std::string &text)
{
    if (text == "auto") {
        return BuilderChoice::automatic;
    }
    if (text == "thm1") {
        return BuilderChoice::thm1;
    }
    if (text == "general1") {
        return BuilderChoice::general1;
    }
    if (text == "general2") {
        return BuilderChoice::general2;
    }
    throw UsageError{"--builder must be auto, thm1, general1 or general2"};
}

int cmd_thm1(std::ostream &out, const Options &o, unsigned order)
{
    Thm1Spec spec{parse_rational(o.R), parse_rational(o.S), o.n, o.N};
    validate(spec);
    return emit_params(out, o, thm1_params(spec), order);
}

int cmd_general(std::ostream &out, const Options &o, unsigned order, bool doubled)
{
    GeneralSpec spec{parse_rational_list(o.b), std::nullopt};
    if (spec.exponents.empty()) {
        throw UsageError{"--b needs at least one exponent"};
    }
    if (doubled) {
        spec.doubled = parse_rational(o.dbl);
    }
    const auto N = spec.exponents.size();
    const auto plus = doubled ? general2_params(spec) : general1_params(spec);
    return emit_params(out, o, to_convention(plus, N, sign_of(o)), order);
}

int cmd_oracle(std::ostream &out, const Options &o, unsigned order)
{
    const auto p = parse_product(o.product, sign_of(o));
    if (p.n_vars() * order > oracle_degree_limit && !o.force) {
        throw UsageError{"oracle total degree " + std::to_string(p.n_vars() * order) + " exceeds "
                         + std::to_string(oracle_degree_limit) + "; pass --force to run anyway"};
    }
    return emit_series(out, o, oracle_diag(p, order));
}

int cmd_verify(std::ostream &out, const Options &o, unsigned order, bool oracle_order_given)
{
    const auto p = parse_product(o.product, sign_of(o));
    std::optional<unsigned> K_oracle;
    if (!o.no_oracle) {
        const auto N = static_cast<unsigned>(std::max<std::size_t>(p.n_vars(), 1));
        K_oracle = oracle_order_given ? o.oracle_order : std::min(order, oracle_degree_limit / N);
        if (*K_oracle > order) {
            throw UsageError{"--oracle-order must not exceed --order"};
        }
    }
    return emit_report(out, o, verify_identity(p, order, K_oracle, parse_builder(o.builder)));
}

int cmd_classify(std::ostream &out, const Options &o)
{
    if (o.pfq.empty() == o.product.empty()) {
        throw UsageError{"give exactly one of --pfq and --product"};
    }
    Verdict verdict;
    std::optional<Grade2Decomposition> decomposition;
    if (!o.pfq.empty()) {
        const auto params = parse_pfq(o.pfq);
        verdict = interlacing_check(params);
        const bool has_unit = std::count(params.bottom().begin(), params.bottom().end(), rational(1)) > 0;
        if (verdict.status != Status::algebraic && has_unit) {
            decomposition = grade2_search(params);
        }
    } else {
        verdict = classify_product(parse_product(o.product, sign_of(o)));
    }
    if (o.json) {
        auto j = to_json(verdict);
        if (decomposition) {
            j["grade2"] = to_json(*decomposition);
        }
        out << j.dump() << '\n';
    } else {
        print_verdict(out, verdict);
        if (decomposition) {
            print_decomposition(out, *decomposition);
        }
    }
    if (!o.expect.empty() && parse_status(o.expect) != verdict.status) {
        return exit_mismatch;
    }
    return exit_ok;
}

int cmd_hadamard(std::ostream &out, const Options &o, unsigned order)
{
    const auto lhs = parse_pfq(o.lhs);
    const auto rhs = parse_pfq(o.rhs);
    if (o.expect.empty()) {
        return emit_series(out, o, hadamard(pfq_series(lhs, order), pfq_series(rhs, order)));
    }
    return emit_report(out, o, hadamard_combination(lhs, rhs, parse_pfq(o.expect), order));
}

int cmd_grade2(std::ostream &out, const Options &o)
{
    const auto found = grade2_search(parse_pfq(o.pfq), o.bound);
    if (o.json) {
        out << (found ? to_json(*found) : json(nullptr)).dump() << '\n';
    } else if (found) {
        print_decomposition(out, *found);
    } else {
        out << "no decomposition with denominator <= " << o.bound << '\n';
    }
    return found ? exit_ok : exit_mismatch;
}

ScenarioArgs parse_scenario_args(const std::vector<std::string> &raw)
{
    ScenarioArgs args;
    for (const auto &item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError{"--arg expects KEY=VALUE, got '" + item + "'"};
        }
        args[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
    return args;
}

int cmd_reproduce(std::ostream &out, const Options &o, std::optional<unsigned> order)
{
    const auto args = parse_scenario_args(o.scenario_args);
    if (o.name != "all") {
        return emit_report(out, o, scenario(o.name, args, order));
    }
    if (!args.empty()) {
        throw UsageError{"--arg cannot be combined with 'all'"};
    }
    bool ok = true;
    json reports = json::array();
    for (const auto &name : scenario_names()) {
        const auto r = scenario(name, {}, order);
        ok = ok && r.ok();
        if (o.json) {
            reports.push_back(to_json(r));
        } else {
            out << name << ": " << to_string(r.status) << '\n';
        }
    }
    if (o.json) {
        out << reports.dump() << '\n';
    }
    return ok ? exit_ok : exit_mismatch;
}

std::string first_subcommand(const std::vector<std::string> &args)
{
    for (const auto &a : args) {
        if (synopses().count(a)) {
            return a;
        }
    }
    return {};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact diagonals of products of linear forms and their hypergeometric identities", "hyperdiag"};
    app.require_subcommand(1);

    auto common = [&](CLI::App *sub) {
        sub->add_flag("--json", o.json, "JSON output");
        return sub->add_option("--order", o.order, "truncation order K")->check(CLI::NonNegativeNumber);
    };
    auto sign_flags = [&](CLI::App *sub) {
        auto *plus = sub->add_flag("--plus", o.plus, "forms (1 + x_1 + ... + x_j)");
        sub->add_flag("--minus", "forms (1 - x_1 - ... - x_j), the default")->excludes(plus);
    };
    std::map<std::string, CLI::Option *> order_opts;

    auto *diag = app.add_subcommand("diag", "closed-form diagonal of a product");
    order_opts["diag"] = common(diag);
    diag->add_option("--product", o.product, "e.g. \"lin(2)^{1/3} * lin(3)^-1\"")->required();
    sign_flags(diag);

    auto *pfq = app.add_subcommand("pfq", "series of pFq(top; bottom; scale t)");
    order_opts["pfq"] = common(pfq);
    pfq->add_option("--top", o.top, "comma-separated rationals")->required();
    pfq->add_option("--bottom", o.bottom, "comma-separated rationals, k! implicit")->required();
    pfq->add_option("--scale", o.scale, "argument scale");

    auto *thm1 = app.add_subcommand("thm1", "parameters for (1-x_1-...-x_n)^R / (1-x_1-...-x_N)^S");
    order_opts["thm1"] = common(thm1);
    thm1->add_option("--R", o.R, "numerator exponent");
    thm1->add_option("--S", o.S, "denominator exponent")->required();
    thm1->add_option("--n", o.n, "numerator width")->required();
    thm1->add_option("--N", o.N, "denominator width")->required();

    auto *general1 = app.add_subcommand("general1", "parameters for prod_j (1-x_1-...-x_j)^{b_j}");
    order_opts["general1"] = common(general1);
    general1->add_option("--b", o.b, "exponents b_1,...,b_N")->required();
    sign_flags(general1);

    auto *general2 = app.add_subcommand("general2", "parameters for a product with a doubled factor");
    order_opts["general2"] = common(general2);
    general2->add_option("--b", o.b, "exponents b_1,...,b_N")->required();
    general2->add_option("--dbl", o.dbl, "exponent of the doubled factor")->required();
    sign_flags(general2);

    auto *oracle = app.add_subcommand("oracle", "brute-force diagonal");
    order_opts["oracle"] = common(oracle);
    oracle->add_option("--product", o.product, "product spec")->required();
    oracle->add_flag("--force", o.force, "allow total degree above 40");
    sign_flags(oracle);

    auto *verify = app.add_subcommand("verify", "compare pFq, closed form and oracle");
    order_opts["verify"] = common(verify);
    verify->add_option("--product", o.product, "product spec")->required();
    auto *oracle_order = verify->add_option("--oracle-order", o.oracle_order, "oracle order");
    verify->add_flag("--no-oracle", o.no_oracle, "skip the oracle")->excludes(oracle_order);
    verify->add_option("--builder", o.builder, "auto, thm1, general1 or general2");
    sign_flags(verify);

    auto *classify = app.add_subcommand("classify", "algebraicity verdict");
    classify->add_flag("--json", o.json, "JSON output");
    classify->add_option("--pfq", o.pfq, "\"top|bottom\"");
    classify->add_option("--product", o.product, "product spec");
    classify->add_option("--expect", o.expect, "exit 1 unless the verdict has this status");
    sign_flags(classify);

    auto *had = app.add_subcommand("hadamard", "termwise product of two pFq series");
    order_opts["hadamard"] = common(had);
    had->add_option("--lhs", o.lhs, "\"top|bottom[|scale]\"")->required();
    had->add_option("--rhs", o.rhs, "\"top|bottom[|scale]\"")->required();
    had->add_option("--expect", o.expect, "\"top|bottom[|scale]\" to compare against");

    auto *grade2 = app.add_subcommand("grade2", "search for an algebraic partner times (1-t)^(-c)");
    grade2->add_flag("--json", o.json, "JSON output");
    grade2->add_option("--pfq", o.pfq, "\"top|bottom\"")->required();
    grade2->add_option("--bound", o.bound, "largest denominator of c")->check(CLI::PositiveNumber);

    auto *reproduce = app.add_subcommand("reproduce", "run a scripted identity check");
    order_opts["reproduce"] = common(reproduce);
    reproduce->add_option("name", o.name, "scenario name or 'all'")->required();
    reproduce->add_option("--arg", o.scenario_args, "scenario argument KEY=VALUE");

    const auto sub_name = first_subcommand(args);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "hyperdiag: " << e.what() << '\n' << "usage: " << synopsis_for(sub_name) << '\n';
        return exit_usage;
    }

    try {
        const auto *active = app.get_subcommands().front();
        const auto &name = active->get_name();
        const auto it = order_opts.find(name);
        const bool order_given = it != order_opts.end() && it->second->count() > 0;
        const unsigned order = order_given ? o.order : env_order();

        if (name == "diag") {
            return emit_series(out, o, diag_series(normalize(parse_product(o.product, sign_of(o))), order));
        }
        if (name == "pfq") {
            return emit_series(out, o,
                               pfq_series(PFQParams(parse_rational_list(o.top), parse_rational_list(o.bottom),
                                                    parse_rational(o.scale)),
                                          order));
        }
        if (name == "thm1") {
            return cmd_thm1(out, o, order);
        }
        if (name == "general1" || name == "general2") {
            return cmd_general(out, o, order, name == "general2");
        }
        if (name == "oracle") {
            return cmd_oracle(out, o, order);
        }
        if (name == "verify") {
            return cmd_verify(out, o, order, oracle_order->count() > 0);
        }
        if (name == "classify") {
            return cmd_classify(out, o);
        }
        if (name == "hadamard") {
            return cmd_hadamard(out, o, order);
        }
        if (name == "grade2") {
            return cmd_grade2(out, o);
        }
        // Scenarios keep their reference orders unless one is given.
        return cmd_reproduce(out, o, order_given ? std::optional<unsigned>(order) : std::nullopt);
    } catch (const UsageError &e) {
        err << "hyperdiag: " << e.message << '\n' << "usage: " << synopsis_for(sub_name) << '\n';
        return exit_usage;
    } catch (const error &e) {
        err << "hyperdiag: " << to_string(e.code()) << ": " << e.what() << '\n'
            << "usage: " << synopsis_for(sub_name) << '\n';
        return exit_usage;
    }
}

} // namespace hyperdiag::cli
