// Serial reference against OpenMP kernel for each parallel hot spot. Each
// pair is run on the same input, outputs are compared, and the best of
// `--repeat` wall-clock times is reported.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "clusterkit/morphism.hpp"
#include "clusterkit/mutation_class.hpp"
#include "clusterkit/pairs.hpp"
#include "clusterkit/parallel.hpp"
#include "support.hpp"

using namespace clusterkit;
using namespace testsupport;

namespace {

double best_of(int repeat, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const std::string& kernel, const std::string& input, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(22) << kernel << std::setw(30) << input << std::right << std::fixed
            << std::setprecision(4) << std::setw(10) << serial << std::setw(10) << parallel << std::setw(8)
            << std::setprecision(2) << serial / parallel << "  " << (same ? "same" : "DIFFERENT") << "\n";
}

// Dynkin type E6: 833 seeds.
Seed e6() {
  std::vector<std::vector<std::int64_t>> b(6, std::vector<std::int64_t>(6, 0));
  auto arrow = [&](int i, int j) {
    b[i][j] = 1;
    b[j][i] = -1;
  };
  arrow(0, 1);
  arrow(1, 2);
  arrow(2, 3);
  arrow(3, 4);
  arrow(2, 5);
  return make_seed({"x1", "x2", "x3", "x4", "x5", "x6"}, {}, b);
}

// Path of length n with one frozen variable on each end.
Seed framed_path(std::size_t n) {
  std::vector<std::string> ex;
  for (std::size_t i = 0; i < n; ++i) ex.push_back("x" + std::to_string(i + 1));
  std::vector<std::vector<std::int64_t>> b(n + 2, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b[i][i + 1] = 1;
    b[i + 1][i] = -1;
  }
  b[n][0] = 1;
  b[n + 1][n - 1] = -1;
  return make_seed(ex, {"f1", "f2"}, b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial against parallel timings of the enumeration kernels"};
  int repeat = 3;
  std::size_t property_seeds = 200;
  app.add_option("--repeat", repeat, "runs per measurement, best kept")->check(CLI::PositiveNumber);
  app.add_option("--property-seeds", property_seeds, "random seeds for the property suite");
  CLI11_PARSE(app, argc, argv);

  std::cout << "OpenMP " << (parallel::enabled() ? "on" : "off") << ", " << parallel::max_threads()
            << " threads\n";
  std::cout << std::left << std::setw(22) << "kernel" << std::setw(30) << "input" << std::right << std::setw(10)
            << "serial s" << std::setw(10) << "omp s" << std::setw(8) << "ratio" << "\n";

  {
    const Seed s = e6();
    MutationClass a;
    MutationClass b;
    const double ts = best_of(repeat, [&] { a = enumerate_class_serial(s); });
    const double tp = best_of(repeat, [&] { b = enumerate_class(s); });
    report("enumerate_class", "E6, " + std::to_string(a.seeds.size()) + " seeds", ts, tp,
           a.seeds == b.seeds && a.edges == b.edges);
  }
  {
    const Seed s = framed_path(4);
    const MorphismSpec spec = MorphismSpec::identity(s);
    CheckOptions serial;
    serial.depth = 7;
    serial.parallel = false;
    CheckOptions omp = serial;
    omp.parallel = true;
    MorphismVerdict a;
    MorphismVerdict b;
    const double ts = best_of(repeat, [&] { a = check_morphism(spec, serial); });
    const double tp = best_of(repeat, [&] { b = check_morphism(spec, omp); });
    report("CM3 levels", "framed A4, depth 7, " + std::to_string(a.states) + " states", ts, tp,
           a.states == b.states && a.cm3 == b.cm3);
  }
  {
    std::mt19937_64 rng(1);
    RandomShape shape;
    shape.max_exchangeable = 11;
    shape.max_total = 13;
    shape.sparsity = 0.8;
    Seed s;
    while (s.exchangeable_count() < 11) s = random_seed(rng, shape);
    std::vector<ClassEntry> a;
    std::vector<ClassEntry> b;
    const double ts = best_of(repeat, [&] { a = classify_cotorsion_pairs_serial(s); });
    const double tp = best_of(repeat, [&] { b = classify_cotorsion_pairs(s); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].pairs.size() == b[i].pairs.size();
    report("complete-pair subsets", "11 exchangeable, 2048 subsets", ts, tp, same);
  }
  {
    const auto seeds = random_seeds(20240611, property_seeds);
    PropertyReport a;
    PropertyReport b;
    const double ts = best_of(repeat, [&] { a = run_property_suite_serial(seeds); });
    const double tp = best_of(repeat, [&] { b = run_property_suite(seeds); });
    report("property suite", std::to_string(property_seeds) + " random seeds", ts, tp,
           a.mutations == b.mutations && a.failures == b.failures);
  }
  return 0;
}
