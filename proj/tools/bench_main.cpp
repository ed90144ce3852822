#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "af/bench/corpus.hpp"
#include "af/bench/generator.hpp"
#include "af/bench/harness.hpp"
#include "af/formats.hpp"

namespace {

af::bench::Shape parse_shape(const std::string& name) {
  if (name == "chain") return af::bench::Shape::chain;
  if (name == "kcycle") return af::bench::Shape::k_cycle;
  return af::bench::Shape::erdos_renyi;
}

// All 16 problems per corpus framework; decision queries cycle through
// the arguments so every index gets exercised across the corpus.
std::vector<af::bench::HarnessInstance> corpus_instances() {
  std::vector<af::bench::HarnessInstance> instances;
  auto configs = af::bench::corpus_configs();
  for (std::size_t k = 0; k < configs.size(); ++k) {
    af::Framework f = af::bench::generate(configs[k]);
    for (af::Task task : {af::Task::some_extension, af::Task::enumerate_extensions,
                          af::Task::credulous, af::Task::skeptical}) {
      for (af::Semantics sem : {af::Semantics::complete, af::Semantics::grounded,
                                af::Semantics::preferred, af::Semantics::stable}) {
        af::bench::HarnessInstance inst;
        inst.id = "af" + std::to_string(k);
        inst.framework = f;
        inst.task = task;
        inst.semantics = sem;
        if (task == af::Task::credulous || task == af::Task::skeptical)
          inst.query = af::ArgumentId{static_cast<int>(k) % f.argument_count()};
        instances.push_back(std::move(inst));
      }
    }
  }
  return instances;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark generator and correctness harness"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write generated frameworks to disk");
  std::string shape = "er";
  int n = 10;
  double p = 0.25;
  std::uint64_t seed = 1;
  int count = 1;
  std::string out_dir = ".";
  std::string format = "tgf";
  gen->add_option("--shape", shape, "er, chain or kcycle")
      ->check(CLI::IsMember({"er", "chain", "kcycle"}));
  gen->add_option("-n,--arguments", n, "number of arguments")->required();
  gen->add_option("-p,--probability", p, "attack probability (er only)");
  gen->add_option("--seed", seed, "seed of the first framework");
  gen->add_option("--count", count, "number of frameworks");
  gen->add_option("-o,--output", out_dir, "output directory")->required();
  gen->add_option("--format", format, "tgf or apx")
      ->check(CLI::IsMember({"tgf", "apx"}));

  auto* harness = app.add_subcommand("harness", "run the fixed corpus against the oracle");
  int timeout_ms = 10000;
  std::string report_path;
  harness->add_option("--timeout-ms", timeout_ms, "per-instance time limit");
  harness->add_option("-o,--report", report_path, "write records to a file");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    af::bench::GeneratorConfig config;
    config.argument_count = n;
    config.attack_probability = p;
    config.seed = seed;
    config.shape = parse_shape(shape);
    auto fmt = format == "apx" ? af::InputFormat::apx : af::InputFormat::tgf;
    auto paths = af::bench::write_generated_corpus(config, count, out_dir, fmt);
    std::cout << "wrote " << paths.size() << " frameworks to " << out_dir << "\n";
    return 0;
  }

  auto report = af::bench::run_harness(
      corpus_instances(), std::chrono::milliseconds(timeout_ms));
  if (!report_path.empty()) {
    std::ofstream file(report_path, std::ios::binary);
    af::bench::write_records(report, file);
  }
  af::bench::write_summary(report, std::cout);
  return report.incorrect == 0 ? 0 : 1;
}
