#pragma once

#include <json.hpp>

#include "invtab/chute.hpp"
#include "invtab/diagram.hpp"
#include "invtab/permutation.hpp"
#include "invtab/pipe_dream.hpp"
#include "invtab/polynomial.hpp"
#include "invtab/tableau.hpp"
#include "invtab/young.hpp"

namespace invtab {

using Json = nlohmann::json;

Json to_json(const Permutation& w);
Json to_json(const InversionsDiagram& d);
Json to_json(const InversionsTableau& t);
Json to_json(const PipeDream& p);
// Integers that do not fit in 64 bits are written as decimal strings.
Json to_json(const mpz_class& c);
Json to_json(const Polynomial& f);
Json to_json(const Partition& p);
Json to_json(const YoungTableau& t);
Json to_json(const ChutePoset& poset);

// Parsers throw Error(parse_error) on malformed input.
Permutation permutation_from_json(const Json& j);
InversionsDiagram diagram_from_json(const Json& j);
InversionsTableau tableau_from_json(const Json& j);
PipeDream pipe_dream_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);

}  // namespace invtab
