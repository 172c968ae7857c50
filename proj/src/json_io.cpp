#include "posetcyl/json_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace posetcyl {

using nlohmann::json;

namespace {

std::vector<int> sorted_by_label(const Poset& p) {
  std::vector<int> order(static_cast<size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.label(a) < p.label(b); });
  return order;
}

}  // namespace

json poset_to_json(const Poset& p, const RankFunction* rank) {
  auto order = sorted_by_label(p);
  json labels = json::array();
  for (int i : order) labels.push_back(p.label(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [lo, hi] : p.covers()) covers.emplace_back(p.label(lo), p.label(hi));
  std::sort(covers.begin(), covers.end());
  json jcovers = json::array();
  for (const auto& [lo, hi] : covers) jcovers.push_back(json::array({lo, hi}));
  json out;
  out["labels"] = std::move(labels);
  out["covers"] = std::move(jcovers);
  if (rank) {
    if (rank->values.size() != static_cast<size_t>(p.size()))
      throw Error("poset_to_json: rank size mismatch");
    json jrank = json::array();
    for (int i : order) jrank.push_back((*rank)(i));
    out["rank"] = std::move(jrank);
  }
  return out;
}

Poset poset_from_json(const json& j, std::optional<RankFunction>* rank_out) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("covers"))
    throw Error("poset json: expected an object with labels and covers");
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) {
    if (!l.is_string()) throw Error("poset json: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& pair : j.at("covers")) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error("poset json: covers must be pairs");
    covers.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
  }
  Poset p = Poset::from_covers(labels, covers);
  if (rank_out) {
    rank_out->reset();
    if (j.contains("rank")) {
      RankFunction r;
      for (const auto& v : j.at("rank")) {
        if (!v.is_number_integer()) throw Error("poset json: rank entries must be integers");
        r.values.push_back(v.get<int>());
      }
      if (!is_valid_rank(p, r)) throw Error("poset json: invalid rank function");
      *rank_out = std::move(r);
    }
  }
  return p;
}

json map_to_json(const PosetMap& m) {
  validate_map_shape(m);
  json out;
  out["source"] = poset_to_json(m.source, nullptr);
  out["target"] = poset_to_json(m.target, nullptr);
  auto src_order = sorted_by_label(m.source);
  auto tgt_order = sorted_by_label(m.target);
  json src_rank = json::array(), tgt_rank = json::array();
  for (int i : src_order) src_rank.push_back(m.source_rank(i));
  for (int i : tgt_order) tgt_rank.push_back(m.target_rank(i));
  out["source_rank"] = std::move(src_rank);
  out["target_rank"] = std::move(tgt_rank);
  json image = json::array();
  for (int i : src_order)
    image.push_back(json::array(
        {m.source.label(i), m.target.label(m.image[static_cast<size_t>(i)])}));
  out["image"] = std::move(image);
  return out;
}

PosetMap map_from_json(const json& j) {
  if (!j.is_object()) throw Error("map json: expected an object");
  for (const char* key : {"source", "source_rank", "target", "target_rank", "image"})
    if (!j.contains(key)) throw Error(std::string("map json: missing field ") + key);
  PosetMap m;
  m.source = poset_from_json(j.at("source"), nullptr);
  m.target = poset_from_json(j.at("target"), nullptr);
  for (const auto& v : j.at("source_rank")) m.source_rank.values.push_back(v.get<int>());
  for (const auto& v : j.at("target_rank")) m.target_rank.values.push_back(v.get<int>());
  if (!is_valid_rank(m.source, m.source_rank)) throw Error("map json: invalid source rank");
  if (!is_valid_rank(m.target, m.target_rank)) throw Error("map json: invalid target rank");
  m.image.assign(static_cast<size_t>(m.source.size()), -1);
  for (const auto& pair : j.at("image")) {
    if (!pair.is_array() || pair.size() != 2) throw Error("map json: image must hold pairs");
    auto src = m.source.index_of(pair.at(0).get<std::string>());
    auto tgt = m.target.index_of(pair.at(1).get<std::string>());
    if (!src) throw Error("map json: unknown source label " + pair.at(0).get<std::string>());
    if (!tgt) throw Error("map json: unknown target label " + pair.at(1).get<std::string>());
    if (m.image[static_cast<size_t>(*src)] != -1)
      throw Error("map json: duplicate image entry for " + pair.at(0).get<std::string>());
    m.image[static_cast<size_t>(*src)] = *tgt;
  }
  for (int t : m.image)
    if (t < 0) throw Error("map json: image is not total");
  return m;
}

json triple_to_json(const JoinTriple& t) {
  json out;
  out["poset"] = poset_to_json(t.gamma, nullptr);
  auto order = sorted_by_label(t.gamma);
  json rank = json::array();
  for (int i : order) rank.push_back(t.rank(i));
  out["rank"] = std::move(rank);
  out["q"] = t.gamma.label(t.q);
  return out;
}

JoinTriple triple_from_json(const json& j) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("rank") || !j.contains("q"))
    throw Error("triple json: expected an object with poset, rank and q");
  JoinTriple t;
  t.gamma = poset_from_json(j.at("poset"), nullptr);
  for (const auto& v : j.at("rank")) t.rank.values.push_back(v.get<int>());
  if (!is_valid_rank(t.gamma, t.rank)) throw Error("triple json: invalid rank function");
  auto q = t.gamma.index_of(j.at("q").get<std::string>());
  if (!q) throw Error("triple json: unknown label " + j.at("q").get<std::string>());
  t.q = *q;
  return t;
}

json square_to_json(const SfsSquare& sq) {
  json out;
  out["phi1"] = map_to_json(sq.phi1);
  out["sigma"] = map_to_json(sq.sigma);
  out["sigma_prime"] = map_to_json(sq.sigma_prime);
  out["phi2"] = map_to_json(sq.phi2);
  return out;
}

SfsSquare square_from_json(const json& j) {
  if (!j.is_object()) throw Error("square json: expected an object");
  for (const char* key : {"phi1", "sigma", "sigma_prime", "phi2"})
    if (!j.contains(key)) throw Error(std::string("square json: missing field ") + key);
  SfsSquare sq;
  sq.phi1 = map_from_json(j.at("phi1"));
  sq.sigma = map_from_json(j.at("sigma"));
  sq.sigma_prime = map_from_json(j.at("sigma_prime"));
  sq.phi2 = map_from_json(j.at("phi2"));
  return sq;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Poset& p, const RankFunction* rank) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  auto order = sorted_by_label(p);
  for (int i : order) out += "  \"" + dot_escape(p.label(i)) + "\";\n";
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [lo, hi] : p.covers()) edges.emplace_back(p.label(lo), p.label(hi));
  std::sort(edges.begin(), edges.end());
  for (const auto& [lo, hi] : edges)
    out += "  \"" + dot_escape(lo) + "\" -> \"" + dot_escape(hi) + "\";\n";
  if (rank) {
    std::map<int, std::vector<std::string>> layers;
    for (int i : order) layers[(*rank)(i)].push_back(p.label(i));
    for (const auto& [level, names] : layers) {
      out += "  { rank=same;";
      for (const auto& name : names) out += " \"" + dot_escape(name) + "\";";
      out += " }\n";
    }
  }
  out += "}\n";
  return out;
}

Poset canonical_poset(const Poset& p) {
  auto order = sorted_by_label(p);
  const int n = p.size();
  std::vector<std::string> labels;
  std::vector<char> lt(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) labels.push_back(p.label(order[static_cast<size_t>(i)]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]))
        lt[static_cast<size_t>(i) * n + j] = 1;
  return Poset::from_strict_order(std::move(labels), std::move(lt));
}

}  // namespace posetcyl
