#include "tiltlab/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tiltlab {

using nlohmann::json;

std::string tilt_tag_name(TiltTag t) {
  switch (t) {
    case TiltTag::TT: return "torsion";
    case TiltTag::TF: return "torsion-free";
    case TiltTag::TTF: return "mixed";
    case TiltTag::Other: return "other";
  }
  return "other";
}

std::string b_tag_name(BTag t) {
  return t == BTag::Y ? "torsion" : "mixed";
}

namespace {

json quiver_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows)
    arrows.push_back(json{{"name", a.name}, {"src", a.src}, {"dst", a.dst}});
  return json{{"vertices", q.n}, {"arrows", arrows}};
}

Quiver quiver_from(const json& j) {
  Quiver q;
  q.n = j.at("vertices").get<int>();
  for (const json& a : j.at("arrows"))
    q.arrows.push_back(Arrow{a.at("name").get<std::string>(), a.at("src").get<int>(),
                             a.at("dst").get<int>()});
  validate_quiver(q);
  return q;
}

json dims_json(const IndTable& tbl, const std::vector<int>& ids) {
  json out = json::array();
  for (int id : ids) out.push_back(tbl.ind[id].dims);
  return out;
}

std::vector<int> ids_from_dims(const IndTable& tbl, const json& j) {
  std::vector<int> ids;
  for (const json& d : j) ids.push_back(tbl.index_of(d.get<DimVector>()));
  return ids;
}

json arrows_json(const std::vector<std::pair<int, int>>& arrows) {
  json out = json::array();
  for (const auto& [u, v] : arrows) out.push_back(json{{"from", u}, {"to", v}});
  return out;
}

std::vector<std::pair<int, int>> arrows_from(const json& j) {
  std::vector<std::pair<int, int>> out;
  for (const json& a : j) out.emplace_back(a.at("from").get<int>(), a.at("to").get<int>());
  return out;
}

std::string dims_label(const IndTable& tbl, int id) {
  std::ostringstream os;
  os << "(";
  const DimVector& d = tbl.ind[id].dims;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ",";
    os << d[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string quiver_to_json(const Quiver& q) { return quiver_json(q).dump(2); }

Quiver quiver_from_json(const std::string& text) { return quiver_from(json::parse(text)); }

std::string tilting_quiver_to_json(const IndTable& tbl, const TiltingQuiver& tq,
                                   const std::vector<TiltTag>* tags) {
  json vertices = json::array();
  for (size_t i = 0; i < tq.vertices.size(); ++i) {
    json v{{"id", int(i)}, {"summands", dims_json(tbl, tq.vertices[i])}};
    if (tags) v["tags"] = tilt_tag_name((*tags)[i]);
    vertices.push_back(std::move(v));
  }
  json j{{"algebra", quiver_json(tbl.q)}, {"vertices", vertices}, {"arrows", arrows_json(tq.arrows)}};
  return j.dump(2);
}

TiltingQuiver tilting_quiver_from_json(const IndTable& tbl, const std::string& text) {
  json j = json::parse(text);
  TiltingQuiver tq;
  for (const json& v : j.at("vertices")) {
    if (v.at("id").get<int>() != int(tq.vertices.size()))
      throw ContractViolation("tilting quiver json: vertex ids must be consecutive from 0");
    ModuleSet ids = ids_from_dims(tbl, v.at("summands"));
    std::sort(ids.begin(), ids.end());
    tq.vertices.push_back(std::move(ids));
  }
  tq.arrows = arrows_from(j.at("arrows"));
  return tq;
}

std::string b_tilting_quiver_to_json(const IndTable& tbl, const BTiltingQuiver& bq) {
  json vertices = json::array();
  for (size_t i = 0; i < bq.vertices.size(); ++i) {
    vertices.push_back(json{{"id", int(i)},
                            {"summands", dims_json(tbl, bq.vertices[i].y_part)},
                            {"x_summands", dims_json(tbl, bq.vertices[i].x_part)},
                            {"tags", b_tag_name(bq.tags[i])}});
  }
  json j{{"algebra", quiver_json(tbl.q)}, {"vertices", vertices}, {"arrows", arrows_json(bq.arrows)}};
  return j.dump(2);
}

BTiltingQuiver b_tilting_quiver_from_json(const IndTable& tbl, const std::string& text) {
  json j = json::parse(text);
  BTiltingQuiver bq;
  for (const json& v : j.at("vertices")) {
    if (v.at("id").get<int>() != int(bq.vertices.size()))
      throw ContractViolation("tilting quiver json: vertex ids must be consecutive from 0");
    BModule b;
    b.y_part = ids_from_dims(tbl, v.at("summands"));
    b.x_part = ids_from_dims(tbl, v.at("x_summands"));
    std::sort(b.y_part.begin(), b.y_part.end());
    std::sort(b.x_part.begin(), b.x_part.end());
    bq.vertices.push_back(std::move(b));
    bq.tags.push_back(v.at("tags").get<std::string>() == b_tag_name(BTag::Y) ? BTag::Y : BTag::XY);
  }
  bq.arrows = arrows_from(j.at("arrows"));
  return bq;
}

namespace {

std::string node_name(const IndTable& tbl, const ModuleSet& y, const ModuleSet& x) {
  std::ostringstream os;
  bool first = true;
  for (int id : y) {
    if (!first) os << "+";
    os << dims_label(tbl, id);
    first = false;
  }
  for (int id : x) {
    if (!first) os << "+";
    os << "E" << dims_label(tbl, id);
    first = false;
  }
  return os.str();
}

std::string dot_digraph(const std::vector<std::string>& names,
                        const std::vector<std::pair<int, int>>& arrows) {
  std::ostringstream os;
  os << "digraph tilting {\n";
  for (const std::string& n : names) os << "  \"" << n << "\";\n";
  for (const auto& [u, v] : arrows)
    os << "  \"" << names[u] << "\" -> \"" << names[v] << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string tilting_quiver_to_dot(const IndTable& tbl, const TiltingQuiver& tq) {
  std::vector<std::string> names;
  names.reserve(tq.vertices.size());
  for (const ModuleSet& v : tq.vertices) names.push_back(node_name(tbl, v, {}));
  return dot_digraph(names, tq.arrows);
}

std::string b_tilting_quiver_to_dot(const IndTable& tbl, const BTiltingQuiver& bq) {
  std::vector<std::string> names;
  names.reserve(bq.vertices.size());
  for (const BModule& v : bq.vertices) names.push_back(node_name(tbl, v.y_part, v.x_part));
  return dot_digraph(names, bq.arrows);
}

}  // namespace tiltlab
