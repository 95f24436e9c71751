#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paperlab/corpus.hpp"
#include "paperlab/io.hpp"

using namespace paperlab;

TEST_CASE("every corpus object builds and audits") {
  for (const auto& name : corpus_sset_names()) corpus_sset(name)->audit();
  for (const auto& name : corpus_fincat_names()) corpus_fincat(name)->audit();
}

TEST_CASE("hexagon diagram shapes") {
  HexagonDiagram h = hexagon_diagram();
  CHECK(h.hexagon->num_objects() == 6);
  CHECK(h.hexagon->num_morphisms() == 12);
  CHECK(nerve(h.hexagon).ss->homology().str() == "H0=Z, H1=Z");
  CHECK(h.cone->num_objects() == 7);
  CHECK(h.cone->num_morphisms() == 19);
  CHECK(terminal_object(*h.cone).has_value());
  CHECK(nerve(h.cone).ss->is_homology_point());
  h.inclusion.validate();
  h.collapse.validate();
}

TEST_CASE("simplicial set JSON round trips losslessly") {
  for (const auto& name : {"delta2", "boundary2", "sphere2", "ssd_nerve_chain2",
                           "delta1_x_delta1"}) {
    SSetPtr s = corpus_sset(name);
    nlohmann::json j = sset_to_json(*s);
    SSet back = sset_from_json(j);
    CHECK(back == *s);
    CHECK(sset_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("finite category JSON round trips losslessly") {
  std::vector<FinCatPtr> cats;
  for (const auto& name : {"chain3", "square", "face_poset2", "morphism_chain2",
                           "hexagon_cone"})
    cats.push_back(corpus_fincat(name));
  cats.push_back(std::make_shared<const FinCat>(random_directed_category(7)));
  for (const auto& c : cats) {
    nlohmann::json j = fincat_to_json(*c);
    FinCat back = fincat_from_json(j);
    CHECK(back == *c);
    CHECK(fincat_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("presentation JSON round trips and realizes identically") {
  CatPresentation p;
  p.vertices = {"a", "b", "c"};
  p.edges = {{"f", 0, 1}, {"g", 1, 2}, {"h", 0, 1}};
  p.relations = {{CatPresentation::Path{0, {0}}, CatPresentation::Path{0, {2}}}};
  p.vertex_glue = {};
  nlohmann::json j = presentation_to_json(p);
  CatPresentation back = presentation_from_json(j);
  CHECK(presentation_to_json(back).dump() == j.dump());
  CHECK(fincat_isomorphic(*realize_presentation(p).cat,
                          *realize_presentation(back).cat));
}

TEST_CASE("file save and load") {
  SSetPtr s = corpus_sset("boundary2");
  save_json(sset_to_json(*s), "roundtrip.sset.json");
  CHECK(sset_from_json(load_json("roundtrip.sset.json")) == *s);
  std::remove("roundtrip.sset.json");
}
