#include "valmat/json_io.hpp"

#include <json.hpp>

namespace valmat {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw json_error("malformed JSON");
  return j;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw json_error(std::string("missing integer field: ") + key);
  return j[key].get<int>();
}

ElemSet get_set(const json& j) {
  if (!j.is_array()) throw json_error("expected a set as an integer array");
  ElemSet s;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw json_error("set members must be integers");
    int v = e.get<int>();
    if (v < 0 || v >= ElemSet::kMaxGround) throw json_error("set member out of range");
    if (s.contains(v)) throw json_error("duplicate set member");
    s.insert(v);
  }
  return s;
}

json set_to_json(ElemSet s) {
  json a = json::array();
  for (int e : s) a.push_back(e);
  return a;
}

Rat get_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw json_error("expected a rational string");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw json_error(e.what());
  }
}

ExtRat get_extrat(const json& j) {
  if (j.is_string() && j.get<std::string>() == "-inf") return ExtRat::neg_inf();
  return ExtRat(get_rat(j));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json graph_payload(const WeightedBipGraph& g) {
  json e = json::array();
  for (const Edge& ed : g.edges) e.push_back(json::array({ed.left, ed.right, rat_to_string(ed.weight)}));
  return json{{"left", g.left_count}, {"w_start", g.w_start}, {"right", g.right_count}, {"edges", e}};
}

WeightedBipGraph graph_from_payload(const json& j) {
  WeightedBipGraph g(get_int(j, "left"), j.contains("w_start") ? get_int(j, "w_start") : get_int(j, "left"),
                     get_int(j, "right"));
  if (!j.contains("edges") || !j["edges"].is_array()) throw json_error("missing edges array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) throw json_error("edge must be [left, right, weight]");
    g.add_edge(e[0].get<int>(), e[1].get<int>(), get_rat(e[2]));
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& ex) {
    throw json_error(ex.what());
  }
  return g;
}

}  // namespace

Matroid parse_matroid_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("kind") || !j["kind"].is_string()) throw json_error("matroid descriptor needs a kind");
  std::string kind = j["kind"].get<std::string>();
  int n = get_int(j, "n");
  try {
    if (kind == "free") return Matroid::free_matroid(n);
    if (kind == "uniform") return Matroid::uniform(n, get_int(j, "r"));
    if (kind == "explicit") {
      std::vector<ElemSet> bases;
      for (const auto& b : j.at("bases")) bases.push_back(get_set(b));
      return Matroid::from_bases(n, std::move(bases));
    }
    if (kind == "partition") {
      std::vector<ElemSet> blocks;
      std::vector<int> caps;
      for (const auto& b : j.at("blocks")) blocks.push_back(get_set(b));
      for (const auto& c : j.at("capacities")) caps.push_back(c.get<int>());
      return Matroid::partition(n, blocks, caps);
    }
    if (kind == "sparse_paving") {
      std::vector<ElemSet> circuits;
      for (const auto& c : j.at("circuits")) circuits.push_back(get_set(c));
      return sparse_paving_from_circuits(n, get_int(j, "d"), circuits);
    }
  } catch (const json::exception& e) {
    throw json_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw json_error(e.what());
  } catch (const std::out_of_range& e) {
    throw json_error(e.what());
  }
  throw json_error("unknown matroid kind: " + kind);
}

std::string matroid_to_json(const Matroid& m) {
  json b = json::array();
  for (ElemSet s : m.bases()) b.push_back(set_to_json(s));
  return dump(json{{"kind", "explicit"}, {"n", m.ground_size()}, {"bases", b}});
}

std::string sparse_paving_to_json(int n, int d, const std::vector<ElemSet>& circuits) {
  json c = json::array();
  for (ElemSet s : circuits) c.push_back(set_to_json(s));
  return dump(json{{"kind", "sparse_paving"}, {"n", n}, {"d", d}, {"circuits", c}});
}

ValMat parse_valmat_json(const std::string& text) {
  json j = parse_text(text);
  try {
    ValMat f(get_int(j, "n"), get_int(j, "d"));
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 2) throw json_error("entry must be [set, value]");
      f.set(get_set(e[0]), get_extrat(e[1]));
    }
    return f;
  } catch (const json::exception& e) {
    throw json_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw json_error(e.what());
  } catch (const std::out_of_range& e) {
    throw json_error(e.what());
  }
}

std::string valmat_to_json(const ValMat& f) {
  json e = json::array();
  for (const auto& [s, v] : f.entries()) e.push_back(json::array({set_to_json(s), rat_to_string(v)}));
  return dump(json{{"n", f.ground_size()}, {"d", f.layer()}, {"entries", e}});
}

WeightedBipGraph parse_graph_json(const std::string& text) {
  try {
    return graph_from_payload(parse_text(text));
  } catch (const json::exception& e) {
    throw json_error(e.what());
  }
}

std::string graph_to_json(const WeightedBipGraph& g) { return dump(graph_payload(g)); }

Network parse_network_json(const std::string& text) {
  json j = parse_text(text);
  try {
    Network net;
    net.node_count = get_int(j, "nodes");
    net.terminals_v = get_set(j.at("V"));
    net.terminals_u = get_set(j.at("U"));
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 3) throw json_error("arc must be [from, to, weight]");
      net.arcs.push_back(Arc{a[0].get<int>(), a[1].get<int>(), get_rat(a[2])});
    }
    net.validate();
    return net;
  } catch (const json::exception& e) {
    throw json_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw json_error(e.what());
  }
}

std::string network_to_json(const Network& net) {
  json a = json::array();
  for (const Arc& arc : net.arcs) a.push_back(json::array({arc.from, arc.to, rat_to_string(arc.weight)}));
  return dump(json{{"nodes", net.node_count},
                   {"V", set_to_json(net.terminals_v)},
                   {"U", set_to_json(net.terminals_u)},
                   {"arcs", a}});
}

DualCert parse_cert_json(const std::string& text) {
  json j = parse_text(text);
  try {
    DualCert c;
    for (const auto& p : j.at("pi")) c.pi.push_back(get_rat(p));
    for (const auto& t : j.at("tau")) c.tau.push_back(get_rat(t));
    return c;
  } catch (const json::exception& e) {
    throw json_error(e.what());
  }
}

std::string cert_to_json(const DualCert& cert) {
  json pi = json::array(), tau = json::array();
  for (const Rat& p : cert.pi) pi.push_back(rat_to_string(p));
  for (const Rat& t : cert.tau) tau.push_back(rat_to_string(t));
  return dump(json{{"pi", pi}, {"tau", tau}});
}

RMinorRep parse_rminor_json(const std::string& text) {
  json j = parse_text(text);
  try {
    WeightedBipGraph g = graph_from_payload(j.at("graph"));
    Matroid m = parse_matroid_json(j.at("matroid").dump());
    ElemSet w = get_set(j.at("W"));
    if (w != g.w_nodes()) throw json_error("W does not match the graph's contracted range");
    return RMinorRep(std::move(g), std::move(m));
  } catch (const json::exception& e) {
    throw json_error(e.what());
  } catch (const invalid_representation_error& e) {
    throw json_error(e.what());
  }
}

std::string rminor_to_json(const RMinorRep& rep) {
  json m = json::parse(matroid_to_json(rep.matroid));
  return dump(json{{"graph", graph_payload(rep.graph)}, {"matroid", m}, {"W", set_to_json(rep.w_nodes())}});
}

VGM parse_vgm_json(const std::string& text) {
  json j = parse_text(text);
  try {
    VGM f(get_int(j, "n"));
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 2) throw json_error("entry must be [set, value]");
      f.set(get_set(e[0]), get_extrat(e[1]));
    }
    return f;
  } catch (const json::exception& e) {
    throw json_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw json_error(e.what());
  }
}

std::string vgm_to_json(const VGM& f) {
  json e = json::array();
  const int n = f.ground_size();
  for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) {
    const ExtRat& v = f(ElemSet(x));
    if (x == 0 || v.finite()) e.push_back(json::array({set_to_json(ElemSet(x)), v.finite() ? json(v.to_string()) : json("-inf")}));
  }
  return dump(json{{"n", n}, {"entries", e}});
}

TropPoly parse_troppoly_json(const std::string& text) {
  json j = parse_text(text);
  try {
    TropPoly p(get_int(j, "k"), get_int(j, "d"));
    for (const auto& e : j.at("coeffs")) {
      if (!e.is_array() || e.size() != 2) throw json_error("coefficient must be [alpha, scalar]");
      ExpVec a;
      for (const auto& x : e[0]) a.push_back(x.get<int>());
      p.set(a, Puiseux::parse(e[1].get<std::string>()));
    }
    return p;
  } catch (const json::exception& e) {
    throw json_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw json_error(e.what());
  }
}

std::vector<std::vector<Puiseux>> parse_puiseux_matrix_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_array()) throw json_error("matrix must be an array of rows");
  std::vector<std::vector<Puiseux>> a;
  try {
    for (const auto& row : j) {
      std::vector<Puiseux> r;
      for (const auto& entry : row) r.push_back(Puiseux::parse(entry.get<std::string>()));
      a.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw json_error(e.what());
  } catch (const std::invalid_argument& e) {
    throw json_error(e.what());
  }
  return a;
}

std::string puiseux_matrix_to_json(const std::vector<std::vector<Puiseux>>& a) {
  json rows = json::array();
  for (const auto& row : a) {
    json r = json::array();
    for (const Puiseux& p : row) r.push_back(p.to_string());
    rows.push_back(r);
  }
  return dump(rows);
}

std::string troppoly_to_json(const TropPoly& p) {
  json c = json::array();
  for (const auto& [a, v] : p.coeffs()) {
    json alpha = json::array();
    for (int x : a) alpha.push_back(x);
    c.push_back(json::array({alpha, v.to_string()}));
  }
  return dump(json{{"k", p.vars()}, {"d", p.degree()}, {"coeffs", c}});
}

}  // namespace valmat
