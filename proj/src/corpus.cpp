#include "paperlab/corpus.hpp"

#include <memory>

#include "paperlab/errors.hpp"
#include "paperlab/subdivide.hpp"

namespace paperlab {

namespace {

SSetPtr mk(const SSet& s) { return std::make_shared<const SSet>(s); }
FinCatPtr mkc(const FinCat& c) { return std::make_shared<const FinCat>(c); }

/// Functor out of a realized presentation, given images for its vertices and
/// generator edges; composites follow the canonical edge words.
Functor presentation_functor(const RealizedPresentation& rp, const FinCatPtr& target,
                             const std::vector<int>& vertex_image,
                             const std::vector<int>& edge_image) {
  Functor out{rp.cat, target, {}, {}};
  out.obj_map.assign(static_cast<size_t>(rp.cat->num_objects()), -1);
  for (size_t v = 0; v < rp.vertex_obj.size(); ++v)
    out.obj_map[static_cast<size_t>(rp.vertex_obj[v])] = vertex_image[v];
  for (int m = 0; m < rp.cat->num_morphisms(); ++m) {
    int cur = target->identity(out.obj_map[static_cast<size_t>(rp.cat->src(m))]);
    for (int e : rp.mor_word[static_cast<size_t>(m)])
      cur = target->compose(edge_image[static_cast<size_t>(e)], cur);
    out.mor_map.push_back(cur);
  }
  out.validate();
  return out;
}

/// Zigzag hexagon: sources x0, x2, x4 each map to the two adjacent sinks
/// x1, x3, x5 around a 6-cycle.
CatPresentation hexagon_presentation() {
  CatPresentation p;
  p.vertices = {"x0", "x1", "x2", "x3", "x4", "x5"};
  p.edges = {{"e0", 0, 1}, {"e1", 2, 1}, {"e2", 2, 3},
             {"e3", 4, 3}, {"e4", 4, 5}, {"e5", 0, 5}};
  return p;
}

}  // namespace

HexagonDiagram hexagon_diagram() {
  CatPresentation hex = hexagon_presentation();
  RealizedPresentation hex_rp = realize_presentation(hex);

  CatPresentation cone = hexagon_presentation();
  cone.vertices.push_back("z");
  for (int i = 0; i < 6; ++i)
    cone.edges.push_back({"c" + std::to_string(i), i, 6});
  // each triangle over an edge commutes, making z terminal
  for (int e = 0; e < 6; ++e) {
    int a = cone.edges[static_cast<size_t>(e)].src;
    int b = cone.edges[static_cast<size_t>(e)].dst;
    CatPresentation::Path lhs{a, {e, 6 + b}};
    CatPresentation::Path rhs{a, {6 + a}};
    cone.relations.emplace_back(lhs, rhs);
  }
  RealizedPresentation cone_rp = realize_presentation(cone);

  HexagonDiagram out;
  out.hexagon = hex_rp.cat;
  out.cone = cone_rp.cat;
  out.point = mkc(terminal_category());

  std::vector<int> vimg, eimg;
  for (int v = 0; v < 6; ++v)
    vimg.push_back(cone_rp.vertex_obj[static_cast<size_t>(v)]);
  for (int e = 0; e < 6; ++e)
    eimg.push_back(cone_rp.edge_mor[static_cast<size_t>(e)]);
  out.inclusion = presentation_functor(hex_rp, out.cone, vimg, eimg);
  out.collapse = constant_functor(out.hexagon, out.point, 0);
  return out;
}

SSetPtr sphere_sset(int n) {
  auto full = mk(standard_simplex(n));
  std::vector<std::vector<bool>> flags(static_cast<size_t>(n) + 1);
  for (int d = 0; d <= n; ++d)
    flags[static_cast<size_t>(d)].assign(static_cast<size_t>(full->count(d)), true);
  flags[static_cast<size_t>(n)][0] = false;  // keep only the top cell outside
  return mk(quotient(full, flags).ss);
}

FinCatPtr commutative_square() {
  auto one = mkc(chain_category(1));
  return cat_product(one, one).cat;
}

std::vector<std::string> corpus_sset_names() {
  return {"delta0",    "delta1",    "delta2",    "delta3",        "delta4",
          "boundary1", "boundary2", "boundary3", "boundary4",     "sphere1",
          "sphere2",   "sphere3",   "nerve_chain2", "ssd_nerve_chain2",
          "delta1_x_delta1"};
}

SSetPtr corpus_sset(const std::string& name) {
  if (name.rfind("delta", 0) == 0 && name.size() == 6)
    return mk(standard_simplex(name[5] - '0'));
  if (name.rfind("boundary", 0) == 0 && name.size() == 9)
    return mk(boundary(name[8] - '0').ss);
  if (name.rfind("sphere", 0) == 0 && name.size() == 7)
    return sphere_sset(name[6] - '0');
  if (name == "nerve_chain2") return nerve(mkc(chain_category(2))).ss;
  if (name == "ssd_nerve_chain2")
    return subdivide_iter(SubKind::segal, 1, nerve(mkc(chain_category(2))).ss);
  if (name == "delta1_x_delta1") {
    auto one = mk(standard_simplex(1));
    return mk(product(one, one).ss);
  }
  throw Error("corpus_sset: unknown name '" + name + "'");
}

std::vector<std::string> corpus_fincat_names() {
  return {"terminal",     "discrete2",      "chain0",      "chain1",
          "chain2",       "chain3",         "chain4",      "square",
          "face_poset1",  "face_poset2",    "face_poset3", "morphism_chain1",
          "morphism_chain2", "hexagon",     "hexagon_cone"};
}

FinCatPtr corpus_fincat(const std::string& name) {
  if (name == "terminal") return mkc(terminal_category());
  if (name == "discrete2") return mkc(discrete_category(2));
  if (name.rfind("chain", 0) == 0 && name.size() == 6)
    return mkc(chain_category(name[5] - '0'));
  if (name == "square") return commutative_square();
  if (name.rfind("face_poset", 0) == 0 && name.size() == 11)
    return face_poset(name[10] - '0').cat;
  if (name == "morphism_chain1")
    return mkc(morphism_category(chain_category(1)));
  if (name == "morphism_chain2")
    return mkc(morphism_category(chain_category(2)));
  if (name == "hexagon") return hexagon_diagram().hexagon;
  if (name == "hexagon_cone") return hexagon_diagram().cone;
  throw Error("corpus_fincat: unknown name '" + name + "'");
}

}  // namespace paperlab
