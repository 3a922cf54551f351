#ifndef NORMTOP_JSON_IO_HPP
#define NORMTOP_JSON_IO_HPP

#include "normtop/domination.hpp"
#include "normtop/norms.hpp"
#include "normtop/ordinals.hpp"
#include "normtop/topology.hpp"
#include "normtop/vectorspace.hpp"

#include <json.hpp>

namespace normtop::io {

using nlohmann::json;

// Rationals travel as "p/q" strings, never as floating point. Integer
// table entries are JSON numbers when they fit in 64 bits, decimal
// strings otherwise.

json to_json(const Rat& x);
json to_json(const Nat& n);
json to_json(const IndexSet& s);
json to_json(const FinVector& v);
json to_json(const Flag& f);
json to_json(const NormExpr& n);
json to_json(const FuncTable& t);
json to_json(const SepDomCert& c);
json to_json(const DomCert& c);
json to_json(const BallSpec& b);
json to_json(const BallCover& c);
json to_json(const CnfOrdinal& o);
json to_json(const EpsilonCert& c);
json to_json(const DisjointnessCert& c);

Rat rat_from_json(const json& j);
Nat nat_from_json(const json& j);
IndexSet index_set_from_json(const json& j);
FinVector vector_from_json(const json& j);
Flag flag_from_json(const json& j);
NormExpr norm_from_json(const json& j);
FuncTable table_from_json(const json& j);
SepDomCert sepdom_cert_from_json(const json& j);
BallSpec ball_from_json(const json& j);
BallCover cover_from_json(const json& j);
CnfOrdinal ordinal_from_json(const json& j);

} // namespace normtop::io

#endif
