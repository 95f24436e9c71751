#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "paperlab/sset.hpp"

using namespace paperlab;

namespace {
SSetPtr mk(const SSet& s) { return std::make_shared<const SSet>(s); }

std::vector<std::vector<bool>> full_flags(const SSet& s, bool v) {
  std::vector<std::vector<bool>> f(static_cast<size_t>(s.dim()) + 1);
  for (int d = 0; d <= s.dim(); ++d)
    f[static_cast<size_t>(d)].assign(static_cast<size_t>(s.count(d)), v);
  return f;
}
}  // namespace

TEST_CASE("standard simplices: counts and audit") {
  CHECK(standard_simplex(0).f_vector() == std::vector<int>{1});
  CHECK(standard_simplex(2).f_vector() == std::vector<int>{3, 3, 1});
  // binomial enumeration oracle for n = 3: counts C(4, k+1)
  SSet d3 = standard_simplex(3);
  CHECK(d3.f_vector() == std::vector<int>{4, 6, 4, 1});
  d3.audit();
}

TEST_CASE("level enumeration counts all normalized elements") {
  SSet d1 = standard_simplex(1);
  // |Delta^1_n| = n + 2
  for (int n = 0; n <= 5; ++n)
    CHECK(d1.level(n).size() == static_cast<size_t>(n) + 2);
}

TEST_CASE("apply satisfies simplicial relations on random elements") {
  SSet d2 = standard_simplex(2);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& x : d2.level(n)) {
      for (const auto& f : all_monotone(n > 0 ? n - 1 : 0, n)) {
        for (const auto& g : all_monotone(1, n - 1 >= 0 ? n - 1 : 0)) {
          if (g.dst != f.src) continue;
          Simp a = d2.apply(d2.apply(x, f), g);
          Simp b = d2.apply(x, compose(f, g));
          CHECK(a == b);
        }
      }
    }
  }
}

TEST_CASE("boundary and homology of spheres") {
  auto b2 = boundary(2);
  CHECK(b2.ss.f_vector() == std::vector<int>{3, 3});
  auto h1 = b2.ss.homology();
  CHECK(h1.at(0).betti == 1);
  CHECK(h1.at(1).betti == 1);

  auto b3 = boundary(3);
  CHECK(b3.ss.f_vector() == std::vector<int>{4, 6, 4});
  auto h2 = b3.ss.homology();
  CHECK(h2.at(0).betti == 1);
  CHECK(h2.at(1).betti == 0);
  CHECK(h2.at(2).betti == 1);

  CHECK_THROWS_AS(boundary(0), EmptyBoundary);
}

TEST_CASE("quotient Delta^n / boundary is a homology sphere") {
  for (int n = 2; n <= 3; ++n) {
    auto full = mk(standard_simplex(n));
    auto flags = full_flags(*full, true);
    flags[static_cast<size_t>(n)][0] = false;  // drop the top simplex
    auto q = quotient(full, flags);
    q.ss.audit();
    q.projection.validate();
    if (n == 2) CHECK(q.ss.f_vector() == std::vector<int>{1, 0, 1});
    auto h = q.ss.homology();
    CHECK(h.at(0).betti == 1);
    for (int k = 1; k < n; ++k) CHECK(h.at(static_cast<size_t>(k)).betti == 0);
    CHECK(h.at(static_cast<size_t>(n)).betti == 1);
  }
}

TEST_CASE("quotient by a single vertex is isomorphic to the space") {
  auto d2 = mk(standard_simplex(2));
  auto flags = full_flags(*d2, false);
  flags[0][0] = true;
  auto q = quotient(d2, flags);
  CHECK(sset_isomorphic(q.ss, *d2));
  CHECK_THROWS_AS(quotient(d2, full_flags(*d2, false)), NotASubcomplex);
}

TEST_CASE("product: unit, interval square, symmetry") {
  auto pt = mk(standard_simplex(0));
  auto d1 = mk(standard_simplex(1));
  auto d2 = mk(standard_simplex(2));

  auto unit = product(pt, d2);
  CHECK(sset_isomorphic(unit.ss, *d2));

  auto sq = product(d1, d1);
  sq.ss.audit();
  CHECK(sq.ss.f_vector() == std::vector<int>{4, 5, 2});
  sq.proj1.validate();
  sq.proj2.validate();
  CHECK(sq.ss.is_homology_point());

  auto a = product(d1, d2);
  auto b = product(d2, d1);
  CHECK(a.ss.f_vector() == b.ss.f_vector());
  // shuffle count oracle: top cells of Delta^1 x Delta^2 = C(3,1)
  CHECK(a.ss.count(3) == 3);
  a.ss.audit();
}

TEST_CASE("pushout along identity returns the other target") {
  auto d2 = mk(standard_simplex(2));
  auto b = boundary(2);
  auto bp = mk(b.ss);
  SSetMap incl = b.inclusion;
  incl.src = bp;
  SSetMap idb = identity_sset_map(bp);
  auto p = pushout(idb, incl);
  CHECK(sset_isomorphic(p.ss, *d2));
  p.from_target_of_f.validate();
  p.from_target_of_g.validate();
}

TEST_CASE("euler characteristic matches betti alternating sum") {
  std::vector<SSet> corpus;
  corpus.push_back(standard_simplex(2));
  corpus.push_back(boundary(3).ss);
  {
    auto d1 = mk(standard_simplex(1));
    corpus.push_back(product(d1, d1).ss);
  }
  for (const auto& s : corpus) {
    auto h = s.homology();
    long long alt = 0;
    for (size_t k = 0; k < h.groups.size(); ++k)
      alt += (k % 2 == 0 ? 1 : -1) * h.groups[k].betti;
    CHECK(s.euler_characteristic() == alt);
  }
}

TEST_CASE("chi of quotient: chi(S/A) = chi(S) - chi(A) + 1") {
  auto d3 = mk(standard_simplex(3));
  auto flags = full_flags(*d3, true);
  flags[3][0] = false;
  auto q = quotient(d3, flags);
  auto a = subcomplex(d3, flags);
  CHECK(q.ss.euler_characteristic() ==
        d3->euler_characteristic() - a.ss.euler_characteristic() + 1);
}

TEST_CASE("skeleton") {
  auto d3 = mk(standard_simplex(3));
  auto sk1 = skeleton(d3, 1);
  CHECK(sk1.ss.f_vector() == std::vector<int>{4, 6});
  // complete graph on 4 vertices: b1 = 3
  CHECK(sk1.ss.homology().at(1).betti == 3);
}

TEST_CASE("diag of a vertically constant bisimplicial set") {
  auto d2 = mk(standard_simplex(2));
  RawBiSSet b;
  b.level = [d2](int p, int) {
    std::vector<std::string> out;
    for (const auto& x : d2->level(p)) out.push_back(d2->simp_key(x));
    return out;
  };
  b.hface = [d2](int p, int, int i, const std::string& k) {
    return d2->simp_key(d2->apply(d2->simp_from_key(p, k), coface(i, p)));
  };
  b.hdeg = [d2](int p, int, int i, const std::string& k) {
    return d2->simp_key(d2->apply(d2->simp_from_key(p, k), codegeneracy(i, p)));
  };
  b.vface = [](int, int, int, const std::string& k) { return k; };
  b.vdeg = [](int, int, int, const std::string& k) { return k; };
  auto dg = diag(b, d2->dim() + 1);
  CHECK(sset_isomorphic(*dg.ss, *d2));
}

TEST_CASE("sset iso distinguishes sphere from disk") {
  CHECK(!sset_isomorphic(boundary(2).ss, standard_simplex(2)));
  CHECK(sset_isomorphic(standard_simplex(3), standard_simplex(3)));
}
