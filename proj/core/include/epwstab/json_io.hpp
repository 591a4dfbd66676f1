#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "epwstab/multipoly.hpp"
#include "epwstab/strata.hpp"
#include "epwstab/wedge6.hpp"

namespace epws {

using Json = nlohmann::json;

// Lagrangian file format: {"basis": "lex-e012", "rows": [[20 "p/q"], x10]}.
Json lagrangian_to_json(const Lagrangian& a);
Lagrangian lagrangian_from_json(const Json& j);

Json matrix_to_json(const QMatrix& m);            // {"rows": [["p/q", ...], ...]}
QMatrix matrix_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);         // {"ambient": n, "rows": ...}
Subspace subspace_from_json(const Json& j);

Json poly_to_json(const MultiPoly& p);            // terms plus a printed form

Json certificate_to_json(const DestabCertificate& c);
DestabCertificate certificate_from_json(const Json& j);

// "5,-1,-1,-1,-1,-1" -> {5,-1,-1,-1,-1,-1}
std::vector<long> parse_weight_list(const std::string& s);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace epws
