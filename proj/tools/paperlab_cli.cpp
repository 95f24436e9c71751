#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "paperlab/corpus.hpp"
#include "paperlab/errors.hpp"
#include "paperlab/experiments.hpp"
#include "paperlab/io.hpp"

using namespace paperlab;
using nlohmann::json;

namespace {

std::string markdown_path(const std::string& out) {
  std::string md = out;
  if (md.size() > 5 && md.compare(md.size() - 5, 5, ".json") == 0)
    md.replace(md.size() - 5, 5, ".md");
  else
    md += ".md";
  return md;
}

std::string row(const ExperimentReport& r) {
  return "| " + r.check + " | " + r.verdict + " | " +
         (r.agrees_with_claim ? "yes" : "NO") + " | " + r.left + " | " + r.right +
         " |\n";
}

std::string markdown_single(const ExperimentReport& r) {
  std::string md = "# " + r.check + "\n\n";
  md += "- verdict: **" + r.verdict + "**\n";
  md += std::string("- agrees with the paper's claim: **") +
        (r.agrees_with_claim ? "yes" : "no") + "**\n";
  md += "- inputs: `" + r.inputs.dump() + "`\n\n";
  md += "| side | value |\n|---|---|\n";
  md += "| left | " + r.left + " |\n| right | " + r.right + " |\n\n";
  md += "Witness:\n\n```json\n" + r.witness.dump(2) + "\n```\n";
  return md;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "'");
  out << text;
}

json refused_report(const std::string& name, const ExperimentParams& p,
                    const std::string& envelope) {
  json inputs = {{"n", p.n}, {"k", p.k}, {"trunc", p.trunc}, {"bound", p.bound},
                 {"seed", p.seed}};
  return json{{"check", name},   {"inputs", inputs},      {"left", ""},
              {"right", ""},     {"verdict", "refused"},
              {"witness", json{{"envelope", envelope}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paperlab: machine-checked examples of categoric realization"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list experiments and corpus objects");

  std::string experiment, out;
  ExperimentParams params;
  auto* run = app.add_subcommand("run", "run one experiment");
  run->add_option("experiment", experiment, "experiment name (see `list`)")->required();
  run->add_option("--n", params.n, "dimension parameter");
  run->add_option("--k", params.k, "iteration parameter");
  run->add_option("--trunc", params.trunc, "simplex-category truncation");
  run->add_option("--bound", params.bound, "congruence-closure bound (default 64)");
  run->add_option("--seed", params.seed, "seed for randomized property checks");
  run->add_option("--out", out, "write the JSON report here (plus a .md summary)");

  std::string all_out;
  auto* all = app.add_subcommand("all", "run every experiment with its defaults");
  all->add_option("--out", all_out, "write the aggregate JSON report here");
  all->add_option("--seed", params.seed, "seed for randomized property checks");

  std::string dump_dir;
  auto* corpus = app.add_subcommand("corpus", "list built-in test objects");
  corpus->add_option("--dump", dump_dir, "write every object as JSON into this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      std::cout << "experiments (criterion 0 = informational):\n";
      for (const auto& e : experiment_catalog())
        std::cout << "  [" << (e.criterion ? std::to_string(e.criterion) : " -")
                  << "] " << e.name << " -- " << e.summary << "\n";
      std::cout << "\ncorpus: `paperlab corpus` lists built-in objects\n";
      return 0;
    }

    if (corpus->parsed()) {
      std::cout << "simplicial sets:\n";
      for (const auto& n : corpus_sset_names()) std::cout << "  " << n << "\n";
      std::cout << "finite categories:\n";
      for (const auto& n : corpus_fincat_names()) std::cout << "  " << n << "\n";
      std::cout << "seeded: random_directed_category(seed, max_objects)\n";
      if (!dump_dir.empty()) {
        for (const auto& n : corpus_sset_names())
          save_json(sset_to_json(*corpus_sset(n)), dump_dir + "/" + n + ".sset.json");
        for (const auto& n : corpus_fincat_names())
          save_json(fincat_to_json(*corpus_fincat(n)),
                    dump_dir + "/" + n + ".fincat.json");
        std::cout << "wrote JSON files to " << dump_dir << "\n";
      }
      return 0;
    }

    if (run->parsed()) {
      ExperimentReport r;
      try {
        r = run_experiment(experiment, params);
      } catch (const FeasibilityRefused& e) {
        json refusal = refused_report(experiment, params, e.what());
        if (out.empty())
          std::cout << refusal.dump(2) << "\n";
        else
          save_json(refusal, out);
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
      }
      json j = report_to_json(r);
      if (out.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        save_json(j, out);
        write_text(markdown_path(out), markdown_single(r));
        std::cout << "wrote " << out << " and " << markdown_path(out) << "\n";
      }
      std::cerr << r.check << ": " << r.verdict
                << (r.agrees_with_claim ? " (agrees with the claim)"
                                        : " (DIVERGES from the claim)")
                << "\n";
      return r.agrees_with_claim ? 0 : 1;
    }

    // all
    json aggregate = json::array();
    std::string md =
        "# paperlab report\n\n"
        "| check | verdict | agrees with claim | left | right |\n"
        "|---|---|---|---|---|\n";
    int diverging = 0;
    for (const auto& e : experiment_catalog()) {
      ExperimentReport r = run_experiment(e.name, ExperimentParams{.seed = params.seed});
      aggregate.push_back(report_to_json(r));
      md += row(r);
      if (!r.agrees_with_claim) ++diverging;
      std::cerr << r.check << ": " << r.verdict
                << (r.agrees_with_claim ? "" : " (DIVERGES from the claim)") << "\n";
    }
    if (!all_out.empty()) {
      save_json(aggregate, all_out);
      write_text(markdown_path(all_out), md);
      std::cout << "wrote " << all_out << " and " << markdown_path(all_out) << "\n";
    } else {
      std::cout << aggregate.dump(2) << "\n";
    }
    return diverging;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
