#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>

#include "toricch/cone.hpp"
#include "toricch/homology.hpp"
#include "toricch/parallel.hpp"
#include "toricch/reeb.hpp"

namespace tc = toricch;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double best_ms(F&& f, int reps) {
  double best = -1;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    auto t1 = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (best < 0 || ms < best) best = ms;
  }
  return best;
}

// Cone over the n-cube: facet normals (+-e_i, 1). Good, c = 0, 2^n edges;
// big enough to give the parallel kernels real work.
tc::ConeSpec make_hypercube_cone(int n) {
  std::vector<tc::IntVec> normals;
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      tc::IntVec nu(n + 1, 0);
      nu[i] = s;
      nu[n] = 1;
      normals.push_back(std::move(nu));
    }
  return tc::ConeSpec(n + 1, std::move(normals), "cube:" + std::to_string(n));
}

void report(const std::string& label, double serial_ms, double parallel_ms,
            bool agree) {
  std::cout << std::left << std::setw(16) << label << std::right << std::fixed
            << std::setprecision(2) << "serial " << std::setw(9) << serial_ms
            << " ms   parallel " << std::setw(9) << parallel_ms << " ms   speedup "
            << std::setprecision(2) << (parallel_ms > 0 ? serial_ms / parallel_ms : 0)
            << "x   " << (agree ? "results agree" : "RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  bool smoke = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--smoke") == 0) smoke = true;

  const int n = smoke ? 4 : 6;
  const int reps = smoke ? 1 : 3;
  const long screen_horizon = smoke ? 256 : 2048;
  const long cutoff = smoke ? 30 : 80;

  std::cout << "workload: cone over the " << n << "-cube ("
            << 2 * n << " facets, " << (1 << n) << " edges), threads: "
            << tc::effective_threads() << "\n";

  tc::ConeSpec spec = make_hypercube_cone(n);
  bool all_agree = true;

  std::vector<tc::Edge> edges_serial, edges_parallel;
  double t_es = best_ms([&] { edges_serial = tc::enumerate_edges_serial(spec); }, reps);
  double t_ep = best_ms([&] { edges_parallel = tc::enumerate_edges(spec); }, reps);
  bool edges_agree = edges_serial.size() == edges_parallel.size();
  for (size_t i = 0; edges_agree && i < edges_serial.size(); ++i)
    edges_agree = edges_serial[i].active == edges_parallel[i].active &&
                  edges_serial[i].generator == edges_parallel[i].generator;
  report("edge scan", t_es, t_ep, edges_agree);
  all_agree = all_agree && edges_agree;

  tc::GoodCone cone = tc::validate_good(spec);
  tc::GenOptions opt;
  opt.n_max = screen_horizon;
  tc::IntVec target(n + 1, 0);
  target[n] = 1;
  tc::ReebVector reeb = tc::generate_generic(cone, target, opt);

  tc::GenericityReport screen_serial, screen_parallel;
  double t_ss = best_ms(
      [&] { screen_serial = tc::nondegenerate_up_to_serial(cone, reeb, screen_horizon); },
      reps);
  double t_sp = best_ms(
      [&] { screen_parallel = tc::nondegenerate_up_to(cone, reeb, screen_horizon); },
      reps);
  bool screen_agree = screen_serial.degenerate_hits == screen_parallel.degenerate_hits &&
                      screen_serial.zero_coeffs == screen_parallel.zero_coeffs;
  report("screen", t_ss, t_sp, screen_agree);
  all_agree = all_agree && screen_agree;

  tc::RankTable ranks_serial, ranks_parallel;
  double t_rs =
      best_ms([&] { ranks_serial = tc::chain_ranks_serial(cone, reeb, cutoff); }, reps);
  double t_rp = best_ms([&] { ranks_parallel = tc::chain_ranks(cone, reeb, cutoff); }, reps);
  bool ranks_agree = ranks_serial == ranks_parallel;
  report("chain ranks", t_rs, t_rp, ranks_agree);
  all_agree = all_agree && ranks_agree;

  return all_agree ? 0 : 1;
}
