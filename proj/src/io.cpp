#include "paperlab/io.hpp"

#include <fstream>
#include <map>
#include <set>

#include "paperlab/errors.hpp"

namespace paperlab {

using nlohmann::json;

nlohmann::json sset_to_json(const SSet& s) {
  std::set<std::string> positive_dim_names;
  for (int d = 1; d <= s.dim(); ++d)
    for (const std::string& n : s.names(d))
      if (!positive_dim_names.insert(n).second)
        throw Error("sset_to_json: duplicate simplex name '" + n + "'");

  json simplices = json::object();
  for (int d = 0; d <= s.dim(); ++d)
    simplices[std::to_string(d)] = s.names(d);

  json faces = json::object();
  for (int d = 1; d <= s.dim(); ++d)
    for (int i = 0; i < s.count(d); ++i) {
      json entry = json::array();
      for (int j = 0; j <= d; ++j) {
        const Simp& f = s.face(d, i, j);
        entry.push_back(json::array(
            {f.surj.values, s.name(f.surj.dst, f.base)}));
      }
      faces[s.name(d, i)] = std::move(entry);
    }
  return json{{"simplices", std::move(simplices)}, {"faces", std::move(faces)}};
}

SSet sset_from_json(const nlohmann::json& j) {
  const json& simplices = j.at("simplices");
  int dim = -1;
  for (auto it = simplices.begin(); it != simplices.end(); ++it)
    dim = std::max(dim, std::stoi(it.key()));
  if (dim < 0) throw Error("sset_from_json: no simplices");

  std::vector<std::vector<std::string>> names(static_cast<size_t>(dim) + 1);
  std::vector<std::map<std::string, int>> index(static_cast<size_t>(dim) + 1);
  for (int d = 0; d <= dim; ++d) {
    auto it = simplices.find(std::to_string(d));
    if (it == simplices.end())
      throw Error("sset_from_json: missing dimension " + std::to_string(d));
    for (const auto& n : *it) {
      std::string name = n.get<std::string>();
      if (!index[static_cast<size_t>(d)].emplace(name, static_cast<int>(names[static_cast<size_t>(d)].size())).second)
        throw Error("sset_from_json: duplicate name '" + name + "' in dimension " +
                    std::to_string(d));
      names[static_cast<size_t>(d)].push_back(std::move(name));
    }
  }

  const json& faces = j.at("faces");
  // dimension 0 carries no face lists
  std::vector<std::vector<std::vector<Simp>>> face_data(static_cast<size_t>(dim) + 1);
  for (int d = 1; d <= dim; ++d)
    for (const std::string& name : names[static_cast<size_t>(d)]) {
      auto it = faces.find(name);
      if (it == faces.end())
        throw Error("sset_from_json: missing faces of '" + name + "'");
      if (static_cast<int>(it->size()) != d + 1)
        throw Error("sset_from_json: '" + name + "' needs " + std::to_string(d + 1) +
                    " faces");
      std::vector<Simp> fs;
      for (const auto& entry : *it) {
        std::vector<int> values = entry.at(0).get<std::vector<int>>();
        if (static_cast<int>(values.size()) != d)
          throw Error("sset_from_json: face of '" + name + "' has wrong arity");
        int base_dim = values.back();  // surjections hit their codomain's top
        std::string base_name = entry.at(1).get<std::string>();
        auto bit = index[static_cast<size_t>(base_dim)].find(base_name);
        if (bit == index[static_cast<size_t>(base_dim)].end())
          throw Error("sset_from_json: unknown face base '" + base_name + "'");
        fs.push_back(Simp{MonotoneMap(d - 1, base_dim, std::move(values)), bit->second});
      }
      face_data[static_cast<size_t>(d)].push_back(std::move(fs));
    }

  SSet out(std::move(names), std::move(face_data));
  out.audit();
  return out;
}

nlohmann::json fincat_to_json(const FinCat& c) {
  std::vector<std::string> objects, morphisms;
  std::vector<int> src, dst, identity;
  for (int x = 0; x < c.num_objects(); ++x) objects.push_back(c.obj_name(x));
  for (int m = 0; m < c.num_morphisms(); ++m) {
    morphisms.push_back(c.mor_name(m));
    src.push_back(c.src(m));
    dst.push_back(c.dst(m));
  }
  for (int x = 0; x < c.num_objects(); ++x) identity.push_back(c.identity(x));
  std::vector<std::vector<int>> table;
  for (int g = 0; g < c.num_morphisms(); ++g) {
    std::vector<int> row;
    for (int f = 0; f < c.num_morphisms(); ++f)
      row.push_back(c.dst(f) == c.src(g) ? c.compose(g, f) : -1);
    table.push_back(std::move(row));
  }
  return json{{"objects", objects},   {"morphisms", morphisms}, {"src", src},
              {"dst", dst},           {"identity", identity},   {"table", table}};
}

FinCat fincat_from_json(const nlohmann::json& j) {
  FinCat out(j.at("objects").get<std::vector<std::string>>(),
             j.at("morphisms").get<std::vector<std::string>>(),
             j.at("src").get<std::vector<int>>(), j.at("dst").get<std::vector<int>>(),
             j.at("identity").get<std::vector<int>>(),
             j.at("table").get<std::vector<std::vector<int>>>());
  out.audit();
  return out;
}

namespace {

json path_to_json(const CatPresentation::Path& p) {
  return json{{"start", p.start}, {"edges", p.edges}};
}

CatPresentation::Path path_from_json(const json& j) {
  return {j.at("start").get<int>(), j.at("edges").get<std::vector<int>>()};
}

}  // namespace

nlohmann::json presentation_to_json(const CatPresentation& p) {
  json edges = json::array();
  for (const auto& e : p.edges)
    edges.push_back(json{{"name", e.name}, {"src", e.src}, {"dst", e.dst}});
  json relations = json::array();
  for (const auto& [lhs, rhs] : p.relations)
    relations.push_back(json{{"lhs", path_to_json(lhs)}, {"rhs", path_to_json(rhs)}});
  json glue = json::array();
  for (const auto& [a, b] : p.vertex_glue) glue.push_back(json::array({a, b}));
  return json{{"vertices", p.vertices},
              {"edges", std::move(edges)},
              {"relations", std::move(relations)},
              {"vertex_glue", std::move(glue)}};
}

CatPresentation presentation_from_json(const nlohmann::json& j) {
  CatPresentation p;
  p.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges"))
    p.edges.push_back({e.at("name").get<std::string>(), e.at("src").get<int>(),
                       e.at("dst").get<int>()});
  for (const auto& r : j.at("relations"))
    p.relations.emplace_back(path_from_json(r.at("lhs")), path_from_json(r.at("rhs")));
  for (const auto& g : j.at("vertex_glue"))
    p.vertex_glue.emplace_back(g.at(0).get<int>(), g.at(1).get<int>());
  return p;
}

void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_json: cannot open '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error("save_json: write failed for '" + path + "'");
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_json: cannot open '" + path + "'");
  return json::parse(in);
}

}  // namespace paperlab
