// Acceptance gate: one line per criterion.  A criterion marked
// "FAIL (expected divergence)" reproduces a documented divergence between the
// computed mathematics and the claimed statement; it is reported red, never
// green, and does not fail the gate.  Any other FAIL exits nonzero.
#include <iostream>
#include <string>
#include <vector>

#include "paperlab/experiments.hpp"

using namespace paperlab;

namespace {

struct Criterion {
  int num = 0;
  std::string title;
  bool pass = false;
  bool expected_fail = false;
  std::string note;
};

ExperimentReport run1(const std::string& name, ExperimentParams p = {}) {
  return run_experiment(name, p);
}

}  // namespace

int main() {
  std::vector<Criterion> rows;
  auto simple = [&](int num, const std::string& title, const std::string& name) {
    ExperimentReport r = run1(name);
    rows.push_back({num, title, r.agrees_with_claim, false,
                    r.left + " | " + r.right});
  };

  simple(1, "cat(nerve(C)) = C on the corpus and 20 seeded categories",
         "prop3_1_retraction");
  simple(2, "cat preserves products on the simplicial corpus", "prop3_1_products");
  {
    ExperimentParams p2, p3;
    p2.n = 2;
    p3.n = 3;
    ExperimentReport a = run1("ex3_4_quotient", p2);
    ExperimentReport b = run1("ex3_4_quotient", p3);
    rows.push_back({3, "cat collapses Delta^n/boundary to a point (n = 2, 3)",
                    a.agrees_with_claim && b.agrees_with_claim, false,
                    a.left + " vs " + a.right});
  }
  simple(4, "hexagon pushout: contractible in Cat, a 2-sphere in SSet",
         "ex3_4_hexagon");
  simple(5, "F_D1(C) = cat(diag nerve C) exactly", "prop3_2_identity");
  simple(6, "F_D2 = cat(sd^2 diag nerve) and D2 goodness on the sphere",
         "prop4_1_goodness");
  simple(7, "sd(Delta1 x Delta1) has 11 vertices, sd(Delta1) x sd(Delta1) has 9",
         "sec4_sd_product");
  simple(8, "esd/ssd identities and product preservation", "sec5_operator_formulas");
  simple(9, "ssd(nerve(C)) = nerve(morphism category)", "sec5_ssd_nerve");
  {
    ExperimentReport r = run1("sec5_support_bound");
    Criterion c{10, "ssd^k support bound, interior barycenter, terminality",
                r.agrees_with_claim, false, r.left};
    if (!r.agrees_with_claim && r.witness.contains("divergence")) {
      c.expected_fail = true;
      c.note = r.witness["divergence"].get<std::string>();
    }
    rows.push_back(c);
  }
  {
    ExperimentReport ssd = run1("sec5_ssd_pushout");
    ExperimentReport esd = run1("sec5_esd_pushout");
    Criterion c{11, "Cat- vs SSet-pushouts of subdivided simplices (ssd and esd)",
                ssd.agrees_with_claim && esd.agrees_with_claim, false,
                "ssd: " + ssd.left + " / esd: " + esd.left + " | " + esd.right};
    if (!ssd.agrees_with_claim && esd.agrees_with_claim &&
        ssd.witness.contains("divergence")) {
      c.expected_fail = true;
      c.note = "ssd half: " + ssd.witness["divergence"].get<std::string>() +
               "; esd half passes";
    }
    rows.push_back(c);
  }
  simple(12, "exact section-6 identities (2), (4), (5), (6)", "sec6_identities");
  simple(13, "two-sided invariance under levelwise homology equivalences",
         "prop6_1_heggie");
  simple(14, "truncated resolved realization recovers the circle", "prop6_3_resolved");

  int unexpected = 0;
  for (const auto& c : rows) {
    std::string status = c.pass ? "PASS"
                       : c.expected_fail ? "FAIL (expected divergence)"
                                         : "FAIL";
    if (!c.pass && !c.expected_fail) ++unexpected;
    std::printf("[%2d] %-25s %s\n", c.num, status.c_str(), c.title.c_str());
    if (!c.note.empty()) std::printf("     note: %s\n", c.note.c_str());
  }
  std::printf("%d/%d criteria green, %d expected-red, %d unexpected-red\n",
              static_cast<int>(rows.size()) - unexpected -
                  static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                                 [](const Criterion& c) {
                                                   return !c.pass && c.expected_fail;
                                                 })),
              static_cast<int>(rows.size()),
              static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                             [](const Criterion& c) {
                                               return !c.pass && c.expected_fail;
                                             })),
              unexpected);
  return unexpected == 0 ? 0 : 1;
}
