// Times the serial reference loops against the OpenMP kernels on synthetic
// networks and checks that both produce the same numbers.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fsna/centrality.hpp"
#include "fsna/execution.hpp"
#include "fsna/paths.hpp"
#include "fsna/synth.hpp"

namespace {

double best_of(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel timings"};
  std::vector<std::size_t> sizes{25, 50, 100};
  double density = 0.3;
  std::size_t steps = 4;
  int repeats = 3;
  std::uint64_t seed = 1;
  app.add_option("--nodes", sizes, "network sizes")->delimiter(',');
  app.add_option("--density", density)->check(CLI::Range(0.0, 1.0));
  app.add_option("--steps", steps)->check(CLI::PositiveNumber);
  app.add_option("--repeats", repeats)->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  std::printf("threads %d\n", fsna::max_threads());
  std::printf("%-14s %6s %12s %12s %8s %s\n", "kernel", "nodes", "serial_ms", "parallel_ms", "speedup", "same");
  int mismatches = 0;
  for (std::size_t n : sizes) {
    fsna::SynthOptions o;
    o.nodes = n;
    o.density = density;
    o.seed = seed;
    const auto g = fsna::synthesize(o);
    fsna::IndexParameters p;
    p.step_cap = steps;

    auto row = [&](const char* name, auto run) {
      decltype(run(fsna::Execution::serial)) serial, parallel;
      const double ts = best_of(repeats, [&] { serial = run(fsna::Execution::serial); });
      const double tp = best_of(repeats, [&] { parallel = run(fsna::Execution::parallel); });
      const bool same = serial == parallel;
      mismatches += same ? 0 : 1;
      std::printf("%-14s %6zu %12.2f %12.2f %8.2f %s\n", name, n, ts, tp, ts / tp, same ? "yes" : "NO");
    };
    row("intensity", [&](fsna::Execution e) { return fsna::intensity_matrix(g, steps, p.tie_eps, e); });
    row("betweenness", [&](fsna::Execution e) { return fsna::fuzzy_betweenness_all(g, p, e).values; });
    row("report", [&](fsna::Execution e) {
      std::vector<double> values;
      for (const auto& r : fsna::build_report(g, fsna::fuzzy_indices(), p, e))
        for (const auto& row : r.rows)
          values.push_back(row.value);
      return values;
    });
  }
  return mismatches == 0 ? 0 : 1;
}
