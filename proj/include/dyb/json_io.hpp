#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dyb/hopf.hpp"

namespace dyb {

// Keys are emitted in a fixed order so that identical data always
// serializes to identical bytes.
using Json = nlohmann::ordered_json;

Json quasigroup_to_json(const Quasigroup& q);
Quasigroup quasigroup_from_json(const Json& j);

Json sset_to_json(const FiniteSSet& s);
/// Accepts either the explicit form {"n", "maps"} or the affine form
/// {"modulus", "dim", "r"}.
FiniteSSet sset_from_json(const Json& j);

Word word_from_json(const Json& j);
Json word_to_json(const Word& w);

Json ternary_to_json(const TernaryOp& t);
TernaryOp ternary_from_json(const Json& j);

/// {"n", "sigma", "quasigroup"?}; sigma[lambda][u][v] = [a, c].  The
/// embedded quasigroup, when present, supplies the parameter action; an
/// explicit override wins.
Json sigma_to_json(const DynamicalMap& m, bool include_quasigroup = true);
DynamicalMap sigma_from_json(const Json& j, std::optional<Quasigroup> quasigroup = std::nullopt);

Json bijection_to_json(const Bijection& b);
Bijection bijection_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json report_to_json(const Report& r);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace dyb
