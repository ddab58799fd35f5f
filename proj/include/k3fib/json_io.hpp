#pragma once

#include <json.hpp>

#include "k3fib/base_change.hpp"
#include "k3fib/configuration.hpp"
#include "k3fib/ns_lattice.hpp"
#include "k3fib/poly.hpp"

namespace k3fib {

using json = nlohmann::json;

// FiberConfiguration <-> [{"type": "I4*", "count": 2}, ...]
// (order-insensitive on input, canonical order on output)
json config_to_json(const FiberConfiguration& c);
FiberConfiguration config_from_json(const json& j);

// DivisorClass <-> [d, m1, ..., m9, ...]
json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const json& j);

// MultiPoly <-> {"terms": [{"e": [e0,e1,e2,et], "c": "p/q"}, ...]}
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json row_to_json(const ExtremalRow& row);
json dedup_to_json(const DedupReport& report);

}  // namespace k3fib
