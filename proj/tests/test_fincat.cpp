#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "paperlab/fincat.hpp"

using namespace paperlab;

namespace {
FinCatPtr mk(const FinCat& c) { return std::make_shared<const FinCat>(c); }

/// Two objects, two parallel arrows between them; its nerve is a circle.
FinCat parallel_pair() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4, -1));
  table[0][0] = 0;
  table[1][1] = 1;
  table[1][2] = 2;
  table[2][0] = 2;
  table[1][3] = 3;
  table[3][0] = 3;
  return FinCat({"a", "b"}, {"ida", "idb", "f", "g"}, {0, 1, 0, 0}, {0, 1, 1, 1},
                {0, 1}, table);
}

/// One object with an idempotent endomorphism; its nerve is infinite.
FinCat idempotent_monoid() {
  std::vector<std::vector<int>> table(2, std::vector<int>(2, -1));
  table[0][0] = 0;
  table[0][1] = 1;
  table[1][0] = 1;
  table[1][1] = 1;
  return FinCat({"x"}, {"id", "e"}, {0, 0}, {0, 0}, {0}, table);
}
}  // namespace

TEST_CASE("chain categories") {
  for (int n = 0; n <= 4; ++n) {
    FinCat c = chain_category(n);
    c.audit();
    CHECK(c.num_objects() == n + 1);
    CHECK(c.num_morphisms() == (n + 1) * (n + 2) / 2);
    CHECK(terminal_object(c) == n);
  }
  chain_functor(codegeneracy(0, 1)).validate();
  chain_functor(coface(1, 3)).validate();
}

TEST_CASE("product, coproduct, opposite") {
  auto one = mk(chain_category(1));
  auto sq = cat_product(one, one);
  sq.cat->audit();
  CHECK(sq.cat->num_objects() == 4);
  CHECK(sq.cat->num_morphisms() == 9);
  sq.proj1.validate();
  sq.proj2.validate();

  auto pt = mk(terminal_category());
  CHECK(fincat_isomorphic(*cat_product(one, pt).cat, *one));

  auto two = cat_coproduct(mk(terminal_category()), mk(terminal_category()));
  two.cat->audit();
  CHECK(fincat_isomorphic(*two.cat, discrete_category(2)));
  two.inj1.validate();

  FinCat op = opposite(*sq.cat);
  op.audit();
  CHECK(fincat_isomorphic(opposite(op), *sq.cat));
  CHECK(!fincat_isomorphic(chain_category(2), discrete_category(3)));
}

TEST_CASE("morphism category") {
  FinCat m1 = morphism_category(chain_category(1));
  m1.audit();
  CHECK(m1.num_objects() == 3);
  // cospan with the arrow as terminal object
  CHECK(terminal_object(m1).has_value());
  CHECK(fincat_isomorphic(morphism_category(terminal_category()), terminal_category()));
}

TEST_CASE("directedness and the nerve") {
  CHECK(directedness(chain_category(3)).directed);
  CHECK(!directedness(idempotent_monoid()).directed);
  CHECK(directedness(idempotent_monoid()).cycle == std::vector<int>{0});
  CHECK_THROWS_AS(nerve(mk(idempotent_monoid())), InfiniteNerve);

  for (int n = 0; n <= 3; ++n) {
    auto nv = nerve(mk(chain_category(n)));
    nv.ss->audit();
    CHECK(sset_isomorphic(*nv.ss, standard_simplex(n)));
  }

  auto circ = nerve(mk(parallel_pair()));
  CHECK(circ.ss->f_vector() == std::vector<int>{2, 2});
  auto h = circ.ss->homology();
  CHECK(h.at(0).betti == 1);
  CHECK(h.at(1).betti == 1);

  CHECK(nerve(mk(morphism_category(chain_category(1)))).ss->f_vector() ==
        std::vector<int>{3, 2});
}

TEST_CASE("nerve maps induced by functors") {
  auto d = chain_functor(coface(1, 2));
  auto s = chain_functor(codegeneracy(0, 2));
  auto nd = nerve_map(d, nerve(d.src), nerve(d.dst));
  nd.validate();
  CHECK(nd.is_injective());
  auto ns = nerve_map(s, nerve(s.src), nerve(s.dst));
  ns.validate();
  CHECK(!ns.is_injective());
}

TEST_CASE("degree-capped homology agrees with the nerve where both exist") {
  auto point = cat_homology_capped(chain_category(2), 2);
  CHECK(point.at(0).betti == 1);
  CHECK(point.at(1).betti == 0);
  CHECK(point.at(2).betti == 0);

  auto circle = cat_homology_capped(parallel_pair(), 1);
  CHECK(circle.at(0).betti == 1);
  CHECK(circle.at(1).betti == 1);

  // works on a category whose nerve is infinite
  auto mono = cat_homology_capped(idempotent_monoid(), 1);
  CHECK(mono.at(0).betti == 1);
  CHECK(mono.at(1).betti == 0);
}

TEST_CASE("realize_presentation basics") {
  {
    CatPresentation p;
    p.vertices = {"v"};
    auto r = realize_presentation(p);
    CHECK(fincat_isomorphic(*r.cat, terminal_category()));
  }
  {
    // linear graph 0 -> 1 -> 2, no relations: free category = the poset [2]
    CatPresentation p;
    p.vertices = {"0", "1", "2"};
    p.edges = {{"a", 0, 1}, {"b", 1, 2}};
    auto r = realize_presentation(p);
    r.cat->audit();
    CHECK(r.cat->num_morphisms() == 6);
    CHECK(fincat_isomorphic(*r.cat, chain_category(2)));
    // path evaluation: the composite a.b
    CatPresentation::Path ab{0, {0, 1}};
    CHECK(r.cat->src(r.eval(ab)) == r.vertex_obj[0]);
    CHECK(r.cat->dst(r.eval(ab)) == r.vertex_obj[2]);
  }
  {
    // commuting square presentation realizes [1] x [1]
    CatPresentation p;
    p.vertices = {"00", "01", "10", "11"};
    p.edges = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    p.relations = {{CatPresentation::Path{0, {0, 1}}, CatPresentation::Path{0, {2, 3}}}};
    auto r = realize_presentation(p);
    r.cat->audit();
    auto one = mk(chain_category(1));
    CHECK(fincat_isomorphic(*r.cat, *cat_product(one, one).cat));
  }
  {
    // a free loop never stabilizes
    CatPresentation p;
    p.vertices = {"v"};
    p.edges = {{"l", 0, 0}};
    CHECK_THROWS_AS(realize_presentation(p, 16), ClosureBoundExceeded);
  }
  {
    // gluing both endpoints of an edge and killing it yields the point
    CatPresentation p;
    p.vertices = {"0", "1"};
    p.edges = {{"a", 0, 1}};
    p.vertex_glue = {{0, 1}};
    p.relations = {{CatPresentation::Path{0, {0}}, CatPresentation::Path{0, {}}}};
    auto r = realize_presentation(p);
    CHECK(fincat_isomorphic(*r.cat, terminal_category()));
  }
}

TEST_CASE("categorify") {
  // cat(N[n]) = [n]
  for (int n = 1; n <= 3; ++n) {
    auto c = categorify(*nerve(mk(chain_category(n))).ss);
    c.cat->audit();
    CHECK(fincat_isomorphic(*c.cat, chain_category(n)));
  }
  // cat of a circle-like nerve returns the parallel pair
  auto pp = categorify(*nerve(mk(parallel_pair())).ss);
  CHECK(fincat_isomorphic(*pp.cat, parallel_pair()));
}

TEST_CASE("pushouts and colimits in Cat") {
  auto one = mk(chain_category(1));
  auto pt = mk(terminal_category());
  {
    // pushout along the identity returns the other object
    auto p = cat_pushout(identity_functor(one), constant_functor(one, pt, 0));
    p.cat->audit();
    CHECK(fincat_isomorphic(*p.cat, *pt));
    for (auto& leg : p.legs) leg.validate();
  }
  {
    // gluing the endpoints of [1] gives a free loop: refused
    auto two = mk(discrete_category(2));
    Functor ends{two, one, {0, 1}, {one->identity(0), one->identity(1)}};
    Functor collapse = constant_functor(two, pt, 0);
    CHECK_THROWS_AS(cat_pushout(ends, collapse, 16), ClosureBoundExceeded);
  }
}

TEST_CASE("seeded random directed categories") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    FinCat c = random_directed_category(seed);
    c.audit();
    CHECK(directedness(c).directed);
    // determinism
    CHECK(random_directed_category(seed) == random_directed_category(seed));
    // adjunction retraction on the free examples
    auto back = categorify(*nerve(mk(c)).ss);
    CHECK(fincat_isomorphic(*back.cat, c));
  }
}
