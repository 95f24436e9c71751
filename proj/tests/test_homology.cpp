#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paperlab/homology.hpp"

using namespace paperlab;

TEST_CASE("smith_summary small dense cases") {
  {
    SparseMatrix m(2, 2);
    m.add(0, 0, 2);
    m.add(1, 1, 6);
    auto s = smith_summary(m);
    CHECK(s.rank == 2);
    CHECK(s.divisors == std::vector<long long>{2, 6});
  }
  {
    // divisibility chain is enforced: diag(2,3) ~ diag(1,6)
    SparseMatrix m(2, 2);
    m.add(0, 0, 2);
    m.add(1, 1, 3);
    auto s = smith_summary(m);
    CHECK(s.rank == 2);
    CHECK(s.divisors == std::vector<long long>{6});
  }
  {
    SparseMatrix m(3, 3);
    // rank-1 matrix of all ones
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.add(i, j, 1);
    auto s = smith_summary(m);
    CHECK(s.rank == 1);
    CHECK(s.divisors.empty());
  }
}

TEST_CASE("chain complex of the circle (one vertex, one loop)") {
  ChainComplex cc;
  cc.dims = {1, 1};
  cc.boundary.resize(2);
  cc.boundary[1] = SparseMatrix(1, 1);  // loop boundary = v - v = 0
  cc.validate();
  auto h = cc.homology();
  CHECK(h.at(0).betti == 1);
  CHECK(h.at(1).betti == 1);
  CHECK(!h.is_point());
}

TEST_CASE("RP2-style torsion") {
  // Z --2--> Z --0--> Z : H0 = Z, H1 = Z/2, H2 = 0
  ChainComplex cc;
  cc.dims = {1, 1, 1};
  cc.boundary.resize(3);
  cc.boundary[1] = SparseMatrix(1, 1);
  cc.boundary[2] = SparseMatrix(1, 1);
  cc.boundary[2].add(0, 0, 2);
  cc.validate();
  auto h = cc.homology();
  CHECK(h.at(0).betti == 1);
  CHECK(h.at(1).betti == 0);
  CHECK(h.at(1).torsion == std::vector<long long>{2});
  CHECK(h.at(2).betti == 0);
  CHECK(h.str() == "H0=Z, H1=Z/2");
}

TEST_CASE("validate rejects non-complexes") {
  ChainComplex cc;
  cc.dims = {1, 1, 1};
  cc.boundary.resize(3);
  cc.boundary[1] = SparseMatrix(1, 1);
  cc.boundary[1].add(0, 0, 1);
  cc.boundary[2] = SparseMatrix(1, 1);
  cc.boundary[2].add(0, 0, 1);
  CHECK_THROWS_AS(cc.validate(), Error);
}

TEST_CASE("sparse phase handles a bigger random-ish complex") {
  // boundary of a large cycle graph: 1000 vertices, 1000 edges in a loop
  const int n = 1000;
  ChainComplex cc;
  cc.dims = {n, n};
  cc.boundary.resize(2);
  cc.boundary[1] = SparseMatrix(n, n);
  for (int e = 0; e < n; ++e) {
    cc.boundary[1].add((e + 1) % n, e, 1);
    cc.boundary[1].add(e, e, -1);
  }
  auto h = cc.homology();
  CHECK(h.at(0).betti == 1);
  CHECK(h.at(1).betti == 1);
}
