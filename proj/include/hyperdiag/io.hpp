#pragma once

#include <string_view>

#include <json.hpp>

#include <hyperdiag/classify.hpp>
#include <hyperdiag/hyperseries.hpp>
#include <hyperdiag/verifier.hpp>

namespace hyperdiag
{

using json = nlohmann::ordered_json;

// Every rational is emitted as a "p/q" string.
json to_json(const rational &q);
json to_json(const Series &s);
json to_json(const PFQParams &p);
json to_json(const Verdict &v);
json to_json(const Grade2Decomposition &d);
json to_json(const VerificationReport &r);

Series series_from_json(const json &j);
PFQParams params_from_json(const json &j);

// "3F2([a,b,c]; [d,e]; 27t)"; the argument reads "t" at scale 1 and
// "(p/q)t" for a fractional scale.
std::string to_display(const PFQParams &p);

// "top|bottom" or "top|bottom|scale", each list comma-separated.
PFQParams parse_pfq(std::string_view text);

} // namespace hyperdiag
