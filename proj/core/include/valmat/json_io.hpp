#pragma once

#include <stdexcept>
#include <string>

#include "valmat/graph.hpp"
#include "valmat/induction.hpp"
#include "valmat/intersection.hpp"
#include "valmat/matroid.hpp"
#include "valmat/tropical.hpp"
#include "valmat/valfn.hpp"
#include "valmat/vgm.hpp"

namespace valmat {

/// Malformed or schema-violating input files.
struct json_error : std::runtime_error {
  explicit json_error(const std::string& what) : std::runtime_error(what) {}
};

// Parsers throw json_error on malformed input. Serializers emit canonical
// JSON: sorted sets as integer arrays, rationals as canonical strings, so
// serialize(parse(x)) round-trips bit-exactly.

Matroid parse_matroid_json(const std::string& text);
std::string matroid_to_json(const Matroid& m);  // explicit-basis descriptor
std::string sparse_paving_to_json(int n, int d, const std::vector<ElemSet>& circuits);

ValMat parse_valmat_json(const std::string& text);
std::string valmat_to_json(const ValMat& f);

WeightedBipGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const WeightedBipGraph& g);

Network parse_network_json(const std::string& text);
std::string network_to_json(const Network& net);

DualCert parse_cert_json(const std::string& text);
std::string cert_to_json(const DualCert& cert);

RMinorRep parse_rminor_json(const std::string& text);
std::string rminor_to_json(const RMinorRep& rep);

VGM parse_vgm_json(const std::string& text);
std::string vgm_to_json(const VGM& f);

TropPoly parse_troppoly_json(const std::string& text);
std::string troppoly_to_json(const TropPoly& p);

/// Matrix of Puiseux scalars as a JSON array of rows of scalar strings.
std::vector<std::vector<Puiseux>> parse_puiseux_matrix_json(const std::string& text);
std::string puiseux_matrix_to_json(const std::vector<std::vector<Puiseux>>& a);

}  // namespace valmat
