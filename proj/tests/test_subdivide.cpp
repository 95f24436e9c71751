#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "paperlab/subdivide.hpp"

using namespace paperlab;

namespace {
SSetPtr mk(const SSet& s) { return std::make_shared<const SSet>(s); }

SSetPtr sphere_quotient(int n) {
  auto full = mk(standard_simplex(n));
  std::vector<std::vector<bool>> flags(static_cast<size_t>(n) + 1);
  for (int d = 0; d <= n; ++d)
    flags[static_cast<size_t>(d)].assign(static_cast<size_t>(full->count(d)), true);
  flags[static_cast<size_t>(n)][0] = false;
  return mk(quotient(full, flags).ss);
}
}  // namespace

TEST_CASE("face posets") {
  auto f2 = face_poset(2);
  f2.cat->audit();
  CHECK(f2.cat->num_objects() == 7);
  CHECK(nerve(face_poset(1).cat).ss->f_vector() == std::vector<int>{3, 2});
  face_poset_functor(face_poset(1), f2, coface(2, 2)).validate();
  face_poset_functor(f2, face_poset(1), codegeneracy(0, 1)).validate();
}

TEST_CASE("coend density: S tensor Delta^* recovers S") {
  for (const auto& s :
       {mk(standard_simplex(2)), mk(boundary(2).ss), mk(product(mk(standard_simplex(1)), mk(standard_simplex(1))).ss)}) {
    auto back = coend_sset(s, cosimplicial_standard(s->dim()));
    CHECK(sset_isomorphic(*back.ss, *s));
  }
}

TEST_CASE("coend refuses too-small truncations") {
  auto s = mk(standard_simplex(2));
  CHECK_THROWS_AS(coend_sset(s, cosimplicial_standard(1)), TruncationTooSmall);
}

TEST_CASE("barycentric subdivision basics") {
  auto d1 = mk(standard_simplex(1));
  CHECK(subdivide(SubKind::barycentric, d1).ss->f_vector() == std::vector<int>{3, 2});
  // sd of the nerve of a poset is the nerve of its chain poset
  auto sd2 = subdivide(SubKind::barycentric, mk(standard_simplex(2)));
  sd2.ss->audit();
  CHECK(sd2.ss->f_vector() == std::vector<int>{7, 12, 6});
  CHECK(subdivide_iter(SubKind::barycentric, 2, d1)->f_vector() ==
        std::vector<int>{5, 4});
}

TEST_CASE("sd is not product preserving: 11 vs 9 vertices") {
  auto d1 = mk(standard_simplex(1));
  auto sq = mk(product(d1, d1).ss);
  CHECK(subdivide(SubKind::barycentric, sq).ss->count(0) == 11);
  auto sd1 = subdivide(SubKind::barycentric, d1);
  CHECK(product(sd1.ss, sd1.ss).ss.count(0) == 9);
  auto check = subdivision_product_check(SubKind::barycentric, d1, d1);
  CHECK(!check.preserved);
  CHECK(check.witness == "vertices 11 vs 9");
}

TEST_CASE("edgewise and segal subdivision basics") {
  auto d0 = mk(standard_simplex(0));
  auto d2 = mk(standard_simplex(2));
  for (auto kind : {SubKind::edgewise, SubKind::segal}) {
    CHECK(sset_isomorphic(*subdivide(kind, d0).ss, *d0));
    auto sub = subdivide(kind, d2);
    sub.ss->audit();
    CHECK(sub.ss->f_vector() == std::vector<int>{6, 9, 4});
  }
  CHECK(subdivide_iter(SubKind::segal, 0, d2) == d2);
  // vertices of ssd^2(Delta^3) = |Delta^3_3| = monotone maps [3]->[3]
  CHECK(subdivide_iter(SubKind::segal, 2, mk(standard_simplex(3)))->count(0) == 35);
}

TEST_CASE("homology invariance of all three subdivisions") {
  std::vector<SSetPtr> corpus = {mk(standard_simplex(2)), mk(boundary(2).ss),
                                 sphere_quotient(2)};
  for (const auto& s : corpus) {
    auto h = s->homology();
    for (auto kind : {SubKind::barycentric, SubKind::edgewise, SubKind::segal})
      CHECK(subdivide(kind, s).ss->homology() == h);
  }
}

TEST_CASE("segal subdivision preserves nerves of categories") {
  for (int n = 1; n <= 3; ++n) {
    auto c = std::make_shared<const FinCat>(chain_category(n));
    auto lhs = subdivide(SubKind::segal, nerve(c).ss);
    auto rhs = nerve(std::make_shared<const FinCat>(morphism_category(*c)));
    CHECK(sset_isomorphic(*lhs.ss, *rhs.ss));
  }
}

TEST_CASE("edgewise subdivision of N[2] is not a nerve") {
  auto c = std::make_shared<const FinCat>(chain_category(2));
  auto esd2 = subdivide(SubKind::edgewise, nerve(c).ss);
  auto back = categorify(*esd2.ss);
  auto renerve = nerve(back.cat);
  // the unit map cannot be an isomorphism: composites of arrows appear that
  // the subdivision does not contain
  CHECK(renerve.ss->total_count() > esd2.ss->total_count());
}

TEST_CASE("subdivision naturality on maps") {
  auto incl = standard_simplex_map(coface(1, 2));
  auto coll = standard_simplex_map(codegeneracy(0, 1));
  for (auto kind : {SubKind::barycentric, SubKind::edgewise, SubKind::segal}) {
    auto si = subdivide_map(kind, incl);
    si.validate();
    CHECK(si.is_injective());
    auto sc = subdivide_map(kind, coll);
    sc.validate();
  }
  // functoriality: ssd(g o f) = ssd(g) o ssd(f)
  auto f = standard_simplex_map(coface(0, 1));
  auto g = standard_simplex_map(coface(2, 2));
  auto gf = compose(g, f);
  auto sf = subdivide_map(SubKind::segal, f);
  auto sg = subdivide_map(SubKind::segal, g);
  auto sgf = subdivide_map(SubKind::segal, gf);
  for (int d = 0; d <= sgf.src->dim(); ++d)
    for (int i = 0; i < sgf.src->count(d); ++i)
      CHECK(sgf.image[static_cast<size_t>(d)][static_cast<size_t>(i)] ==
            sg.apply_to(sf.image[static_cast<size_t>(d)][static_cast<size_t>(i)]));
}

TEST_CASE("exact barycentric coordinates and the support bound") {
  auto one = subdivision_vertex_coordinates(SubKind::segal, 1, 1);
  REQUIRE(one.size() == 3);
  std::vector<std::vector<Rational>> expect = {
      {Rational(1), Rational(0)}, {Rational(0), Rational(1)},
      {Rational(1, 2), Rational(1, 2)}};
  for (const auto& e : expect)
    CHECK(std::count(one.begin(), one.end(), e) == 1);

  // at most 2^k nonzero coordinates
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 3}}) {
    for (const auto& p : subdivision_vertex_coordinates(SubKind::segal, k, n)) {
      int nonzero = 0;
      Rational sum(0);
      for (const auto& c : p) {
        if (c != Rational(0)) ++nonzero;
        sum += c;
      }
      CHECK(sum == Rational(1));
      CHECK(nonzero <= (1 << k));
    }
  }

  // n = 2^k - 1: exactly one interior vertex, the barycenter
  auto pts = subdivision_vertex_coordinates(SubKind::segal, 2, 3);
  int interior = 0;
  for (const auto& p : pts) {
    bool all = true;
    for (const auto& c : p) all = all && c != Rational(0);
    if (all) {
      ++interior;
      for (const auto& c : p) CHECK(c == Rational(1, 4));
    }
  }
  CHECK(interior == 1);
}

TEST_CASE("edgewise kinds preserve products") {
  auto d1 = mk(standard_simplex(1));
  auto d2 = mk(standard_simplex(2));
  CHECK(subdivision_product_check(SubKind::edgewise, d1, d1).preserved);
  CHECK(subdivision_product_check(SubKind::segal, d1, d2).preserved);
}

TEST_CASE("terminal barycenter of cat(ssd(Delta^1))") {
  auto sub = subdivide(SubKind::segal, mk(standard_simplex(1)));
  auto c = categorify(*sub.ss);
  auto t = terminal_object(*c.cat);
  REQUIRE(t.has_value());
  // the terminal object is the vertex coming from the nondegenerate edge,
  // i.e. the midpoint
  int tv = -1;
  for (size_t v = 0; v < c.vertex_obj.size(); ++v)
    if (c.vertex_obj[v] == *t) tv = static_cast<int>(v);
  auto coords = subdivision_vertex_coordinates(SubKind::segal, 1, 1);
  CHECK(coords[static_cast<size_t>(tv)] ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}
