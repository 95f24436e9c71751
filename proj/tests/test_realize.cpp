#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "paperlab/subdivide.hpp"

using namespace paperlab;

namespace {

SSetPtr mk(const SSet& s) { return std::make_shared<const SSet>(s); }

FinCatPtr mkc(const FinCat& c) { return std::make_shared<const FinCat>(c); }

SSetPtr sphere_quotient(int n) {
  auto full = mk(standard_simplex(n));
  std::vector<std::vector<bool>> flags(static_cast<size_t>(n) + 1);
  for (int d = 0; d <= n; ++d)
    flags[static_cast<size_t>(d)].assign(static_cast<size_t>(full->count(d)), true);
  flags[static_cast<size_t>(n)][0] = false;
  return mk(quotient(full, flags).ss);
}

/// The commutative square poset [1] x [1].
FinCatPtr square_category() {
  auto one = mkc(chain_category(1));
  return cat_product(one, one).cat;
}

bool point_homology(const HomologyResult& h) {
  for (size_t k = 0; k < h.groups.size(); ++k) {
    if (!h.groups[k].torsion.empty()) return false;
    if (h.groups[k].betti != (k == 0 ? 1 : 0)) return false;
  }
  return !h.groups.empty();
}

}  // namespace

TEST_CASE("simplicial and cosimplicial audits") {
  discrete_simplicial_cat(mk(standard_simplex(2))).audit();
  discrete_simplicial_cat(sphere_quotient(2)).audit();
  constant_simplicial_cat(mkc(chain_category(1)), 2).audit();
  realization_functor("D0", 0, 3).audit();
  realization_functor("D1", 0, 3).audit();
  realization_functor("D3", 1, 2).audit();
  realization_functor("D4", 1, 2).audit();
}

TEST_CASE("realization functor levels match the defining subdivisions") {
  auto d1 = realization_functor("D1", 0, 2);
  CHECK(d1.level[2]->num_objects() == 3);
  CHECK(d1.level[2]->num_morphisms() == 6);

  // cat(ssd(Delta^1)): a cospan with terminal barycenter
  auto d3 = realization_functor("D3", 1, 1);
  CHECK(d3.level[1]->num_objects() == 3);
  CHECK(d3.level[1]->num_morphisms() == 5);
  auto term = terminal_object(*d3.level[1]);
  REQUIRE(term.has_value());

  // cat(sd^2(Delta^1)): the 5-object chain-of-chains poset
  auto d2 = realization_functor("D2", 0, 1);
  CHECK(d2.level[1]->num_objects() == 5);
  CHECK(d2.level[1]->num_morphisms() == 9);
  CHECK(directedness(*d2.level[1]).directed);
  d2.audit();
}

TEST_CASE("diagonal of the levelwise nerve") {
  for (const SSetPtr& s :
       {mk(standard_simplex(2)), mk(boundary(2).ss), sphere_quotient(2)}) {
    SSetPtr d = diag_nerve(discrete_simplicial_cat(s));
    CHECK(sset_isomorphic(*d, *s));
  }
  auto c1 = constant_simplicial_cat(mkc(chain_category(1)), 2);
  CHECK(sset_isomorphic(*diag_nerve(c1), *nerve(mkc(chain_category(1))).ss));
  auto c2 = constant_simplicial_cat(mkc(chain_category(2)), 3);
  CHECK(sset_isomorphic(*diag_nerve(c2), *nerve(mkc(chain_category(2))).ss));
}

TEST_CASE("F_D0 collapses to the colimit over Delta-op") {
  auto c = discrete_simplicial_cat(mk(standard_simplex(2)));
  auto d0 = realization_functor("D0", 0, c.trunc);
  CoendCat f = coend_cat(c, d0);
  CHECK(f.cat->num_objects() == 1);
  CHECK(f.cat->num_morphisms() == 1);
}

TEST_CASE("Prop 3.2: F_D1 agrees with cat of the diagonal nerve") {
  std::vector<SSetPtr> corpus = {mk(standard_simplex(1)), mk(standard_simplex(2)),
                                 mk(boundary(2).ss), sphere_quotient(2),
                                 nerve(mkc(chain_category(2))).ss};
  for (const SSetPtr& s : corpus) {
    auto c = discrete_simplicial_cat(s);
    auto d1 = realization_functor("D1", 0, std::max(2, s->dim()));
    CoendCat f = coend_cat(c, d1);
    Categorified direct = categorify(*diag_nerve(c));
    CHECK(fincat_isomorphic(*f.cat, *direct.cat));
  }
  // a non-discrete instance: the constant simplicial category
  auto c = constant_simplicial_cat(mkc(chain_category(1)), 2);
  auto d1 = realization_functor("D1", 0, 2);
  CoendCat f = coend_cat(c, d1);
  CHECK(fincat_isomorphic(*f.cat, chain_category(1)));
}

TEST_CASE("Prop 4.1: F_D2 agrees with cat of sd^2 of the diagonal nerve") {
  for (const SSetPtr& s : {mk(standard_simplex(1)), mk(boundary(2).ss)}) {
    auto c = discrete_simplicial_cat(s);
    int trunc = std::max(2, s->dim());
    auto d2 = realization_functor("D2", 0, trunc);
    CoendCat f = coend_cat(c, d2);
    SSetPtr diagd = diag_nerve(c);
    SSetPtr sd1 = mk(*subdivide(SubKind::barycentric, diagd).ss);
    SSetPtr sd2 = mk(*subdivide(SubKind::barycentric, sd1).ss);
    Categorified direct = categorify(*sd2);
    CHECK(fincat_isomorphic(*f.cat, *direct.cat));
  }
}

TEST_CASE("two-sided construction: C(*,K,*) is K and the Grothendieck construction") {
  for (const FinCatPtr& K :
       {mkc(chain_category(1)), mkc(chain_category(2)), square_category()}) {
    TwoSidedCat t = two_sided(terminal_diagram(K, true), terminal_diagram(K, false));
    t.cat->audit();
    CHECK(fincat_isomorphic(*t.cat, *K));
  }
  // K int G for K = [1], G(0) = [1], G(1) = terminal
  auto K = mkc(chain_category(1));
  CatDiagram g;
  g.index = K;
  g.contravariant = false;
  g.at = {mkc(chain_category(1)), mkc(terminal_category())};
  g.on = {identity_functor(g.at[0]), constant_functor(g.at[0], g.at[1], 0),
          identity_functor(g.at[1])};
  g.validate();
  TwoSidedCat t = two_sided(terminal_diagram(K, true), g);
  t.cat->audit();
  CHECK(t.cat->num_objects() == 3);
  // the fibered morphisms: 3 identities + over id_0: 1 + over the arrow: 2
  CHECK(t.cat->num_morphisms() == 6);
  CHECK(directedness(*t.cat).directed);
}

namespace {

/// C(F,K,G) with G a bifunctor over K x L-op, as a contravariant diagram
/// over L.
CatDiagram two_sided_left_nested(const CatDiagram& f, const CatBiDiagram& g) {
  const FinCatPtr& L = g.cols;
  const FinCatPtr& K = g.rows;
  std::vector<TwoSidedCat> at;
  for (int l = 0; l < L->num_objects(); ++l) at.push_back(two_sided(f, g.col_fixed(l)));
  CatDiagram d;
  d.index = L;
  d.contravariant = true;
  for (const auto& t : at) d.at.push_back(t.cat);
  for (int lm = 0; lm < L->num_morphisms(); ++lm) {
    std::vector<Functor> eta, gamma;
    for (int k = 0; k < K->num_objects(); ++k) {
      eta.push_back(identity_functor(f.at[static_cast<size_t>(k)]));
      gamma.push_back(g.on(K->identity(k), lm));
    }
    d.on.push_back(two_sided_map(at[static_cast<size_t>(L->dst(lm))],
                                 at[static_cast<size_t>(L->src(lm))], eta, gamma));
  }
  return d;
}

/// C(G,L,H) with G a bifunctor over K x L-op, as a covariant diagram over K.
CatDiagram two_sided_right_nested(const CatBiDiagram& g, const CatDiagram& h) {
  const FinCatPtr& L = g.cols;
  const FinCatPtr& K = g.rows;
  std::vector<TwoSidedCat> at;
  for (int k = 0; k < K->num_objects(); ++k) at.push_back(two_sided(g.row_fixed(k), h));
  CatDiagram d;
  d.index = K;
  d.contravariant = false;
  for (const auto& t : at) d.at.push_back(t.cat);
  for (int km = 0; km < K->num_morphisms(); ++km) {
    std::vector<Functor> eta, gamma;
    for (int l = 0; l < L->num_objects(); ++l) {
      eta.push_back(g.on(km, L->identity(l)));
      gamma.push_back(identity_functor(h.at[static_cast<size_t>(l)]));
    }
    d.on.push_back(two_sided_map(at[static_cast<size_t>(K->src(km))],
                                 at[static_cast<size_t>(K->dst(km))], eta, gamma));
  }
  return d;
}

}  // namespace

TEST_CASE("6.2(5): associativity of the two-sided construction") {
  auto K = mkc(chain_category(1));
  auto L = mkc(chain_category(1));
  CatDiagram f;  // contravariant over K
  f.index = K;
  f.contravariant = true;
  f.at = {mkc(chain_category(1)), mkc(terminal_category())};
  f.on = {identity_functor(f.at[0]), constant_functor(f.at[1], f.at[0], 0),
          identity_functor(f.at[1])};
  f.validate();
  CatBiDiagram g = constant_bidiagram(K, L, mkc(chain_category(1)));
  g.validate();
  CatDiagram h;  // covariant over L
  h.index = L;
  h.contravariant = false;
  h.at = {mkc(terminal_category()), mkc(chain_category(1))};
  h.on = {identity_functor(h.at[0]), constant_functor(h.at[0], h.at[1], 1),
          identity_functor(h.at[1])};
  h.validate();

  CatDiagram nestedL = two_sided_left_nested(f, g);
  nestedL.validate();
  TwoSidedCat left = two_sided(nestedL, h);
  CatDiagram nestedR = two_sided_right_nested(g, h);
  nestedR.validate();
  TwoSidedCat right = two_sided(f, nestedR);
  left.cat->audit();
  right.cat->audit();
  CHECK(fincat_isomorphic(*left.cat, *right.cat));
}

TEST_CASE("6.2(6): counit section law, naturality witness and homology") {
  // K terminal: eps is an isomorphism
  {
    auto K = mkc(terminal_category());
    CatDiagram g = constant_diagram(K, mkc(chain_category(1)), false);
    CounitResult r = counit(g, 0);
    CHECK(r.section_law);
    CHECK(r.tau_natural);
    CHECK(r.homology_match);
    CHECK(fincat_isomorphic(*r.source.cat, chain_category(1)));
  }
  // K = [1] and [2], constant and non-constant G
  for (int n : {1, 2}) {
    auto K = mkc(chain_category(n));
    CatDiagram g = constant_diagram(K, mkc(chain_category(1)), false);
    for (int k = 0; k <= n; ++k) {
      CounitResult r = counit(g, k);
      CHECK(r.section_law);
      CHECK(r.tau_natural);
      CHECK(r.homology_match);
    }
  }
  {
    auto K = mkc(chain_category(1));
    CatDiagram g;
    g.index = K;
    g.contravariant = false;
    g.at = {mkc(chain_category(1)), square_category()};
    Functor diag_incl{g.at[0], g.at[1], {}, {}};
    // [1] -> [1]x[1] along the diagonal
    for (int x = 0; x <= 1; ++x) diag_incl.obj_map.push_back(x == 0 ? 0 : 3);
    for (int m = 0; m < g.at[0]->num_morphisms(); ++m) {
      int a = diag_incl.obj_map[static_cast<size_t>(g.at[0]->src(m))];
      int b = diag_incl.obj_map[static_cast<size_t>(g.at[0]->dst(m))];
      int hit = -1;
      for (int mm = 0; mm < g.at[1]->num_morphisms(); ++mm)
        if (g.at[1]->src(mm) == a && g.at[1]->dst(mm) == b) hit = mm;
      diag_incl.mor_map.push_back(hit);
    }
    diag_incl.validate();
    g.on = {identity_functor(g.at[0]), diag_incl, identity_functor(g.at[1])};
    g.validate();
    for (int k = 0; k <= 1; ++k) {
      CounitResult r = counit(g, k);
      CHECK(r.section_law);
      CHECK(r.tau_natural);
      CHECK(r.homology_match);
    }
  }
}

TEST_CASE("6.2(1)/(4): coends over finite indices and the compatibility law") {
  auto K = mkc(chain_category(1));
  auto one = mkc(chain_category(1));
  auto pt = mkc(terminal_category());

  // terminal indices reduce to the identity of C(F,K,G)
  CatDiagram f;
  f.index = K;
  f.contravariant = true;
  f.at = {one, pt};
  f.on = {identity_functor(one), constant_functor(pt, one, 0), identity_functor(pt)};
  CatDiagram g;
  g.index = K;
  g.contravariant = false;
  g.at = {one, pt};
  g.on = {identity_functor(one), constant_functor(one, pt, 0), identity_functor(pt)};
  TwoSidedCat base = two_sided(f, g);

  CatBiDiagram fbi, gbi;
  fbi.rows = pt;
  fbi.cols = K;
  fbi.at = {{f.at[0], f.at[1]}};
  auto fon = f.on;
  fbi.on = [fon, K](int, int cm) { return fon[static_cast<size_t>(cm)]; };
  gbi.rows = K;
  gbi.cols = pt;
  gbi.at = {{g.at[0]}, {g.at[1]}};
  auto gon = g.on;
  gbi.on = [gon, K](int rm, int) { return gon[static_cast<size_t>(rm)]; };
  CompatReport r1 = coend_compat_check(terminal_diagram(pt, true), fbi, gbi,
                                       terminal_diagram(pt, false));
  CHECK(r1.match);
  CHECK(r1.left == std::to_string(base.cat->num_objects()) + " objects, " +
                       std::to_string(base.cat->num_morphisms()) + " morphisms");

  // all diagrams constant at the terminal category: both sides are K
  CatBiDiagram tf = constant_bidiagram(pt, K, pt);
  CatBiDiagram tg = constant_bidiagram(K, pt, pt);
  CompatReport r2 = coend_compat_check(terminal_diagram(pt, true), tf, tg,
                                       terminal_diagram(pt, false));
  CHECK(r2.match);

  // poset-valued diagrams over A = [1], B = terminal
  auto A = mkc(chain_category(1));
  CatDiagram u;
  u.index = A;
  u.contravariant = true;
  u.at = {pt, one};
  u.on = {identity_functor(pt), constant_functor(one, pt, 0), identity_functor(one)};
  u.validate();
  CatBiDiagram fa;
  fa.rows = A;
  fa.cols = K;
  fa.at = {{one, pt}, {one, pt}};
  fa.on = [fon, A, K](int rm, int cm) {
    // constant in the A-direction
    (void)rm;
    return fon[static_cast<size_t>(cm)];
  };
  CompatReport r3 =
      coend_compat_check(u, fa, gbi, terminal_diagram(pt, false));
  CHECK(r3.match);
}

TEST_CASE("Prop 6.1: Heggie invariance under levelwise homology equivalences") {
  auto K = mkc(chain_category(1));
  auto one = mkc(chain_category(1));
  auto pt = mkc(terminal_category());

  CatDiagram f = constant_diagram(K, one, true);
  CatDiagram g = constant_diagram(K, one, false);
  // identity transformations
  HeggieReport r0 = heggie_invariance_check(
      f, g, f, g, {identity_functor(one), identity_functor(one)},
      {identity_functor(one), identity_functor(one)});
  CHECK(r0.match);

  // collapse the contractible [1] to the terminal category, levelwise
  CatDiagram fp = constant_diagram(K, pt, true);
  CatDiagram gp = constant_diagram(K, pt, false);
  Functor collapse = constant_functor(one, pt, 0);
  HeggieReport r1 =
      heggie_invariance_check(f, g, fp, gp, {collapse, collapse}, {collapse, collapse});
  CHECK(r1.match);

  // a non-equivalence component must be refused
  auto two = mkc(discrete_category(2));
  CatDiagram gq = constant_diagram(K, two, false);
  Functor to_two = constant_functor(one, two, 0);
  CHECK_THROWS_AS(heggie_invariance_check(f, g, fp, gq, {collapse, collapse},
                                          {to_two, to_two}),
                  NotLevelwiseEquivalence);
}

TEST_CASE("goodness: D1 fails on the quotient sphere, D2 matches") {
  auto sphere = discrete_simplicial_cat(sphere_quotient(2));
  auto d1 = realization_functor("D1", 0, 2);
  CheckReport bad = goodness_check(d1, sphere);
  CHECK_FALSE(bad.match);
  CHECK(bad.left != bad.right);

  auto disc = discrete_simplicial_cat(mk(standard_simplex(2)));
  CheckReport fine = goodness_check(d1, disc);
  CHECK(fine.match);

  auto d2 = realization_functor("D2", 0, 2);
  CheckReport good = goodness_check(d2, sphere);
  CHECK(good.match);
}

TEST_CASE("simplex category truncations") {
  SimplexCategory s = simplex_category(2);
  s.cat->audit();
  CHECK(s.cat->num_objects() == 3);
  // Hom([a],[b]) has C(a+b+1, a+1) monotone maps
  CHECK(static_cast<int>(s.cat->hom(1, 2).size()) == 6);
  for (int m = 0; m < s.cat->num_morphisms(); ++m)
    CHECK(s.index_of(s.mor_of[static_cast<size_t>(m)]) == m);
}

TEST_CASE("truncated resolved realization recovers the circle") {
  // the constant point is a sanity check
  auto pt = discrete_simplicial_cat(mk(standard_simplex(0)), 3);
  CheckReport triv = resolved_realization_demo(pt, 3, 1);
  CHECK(triv.match);
  CHECK(point_homology(cat_homology_capped(terminal_category(), 1)));

  auto circle = discrete_simplicial_cat(sphere_quotient(1), 4);
  CheckReport r = resolved_realization_demo(circle, 4, 1);
  CHECK(r.match);
  CHECK(r.left.rfind("H0=Z, H1=Z", 0) == 0);
}
