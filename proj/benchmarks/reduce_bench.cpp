#include <benchmark/benchmark.h>

#include <sstream>
#include <string>
#include <vector>

#include "crnreduce/crnparse.hpp"
#include "crnreduce/reduce.hpp"

namespace {

using namespace crnreduce;

// Multisite phosphorylation with n sites, kinase E and phosphatase F.
std::string nsite_text(int n) {
  std::ostringstream out;
  for (int i = 1; i <= n; ++i) {
    const std::string s = std::to_string(i);
    const std::string prev = std::to_string(i - 1);
    out << "S" << prev << " + E <-> Y" << s << " ; a" << 3 * i - 2 << ", a" << 3 * i - 1 << "\n";
    out << "Y" << s << " -> S" << s << " + E ; a" << 3 * i << "\n";
    out << "S" << s << " + F <-> Z" << s << " ; b" << 3 * i - 2 << ", b" << 3 * i - 1 << "\n";
    out << "Z" << s << " -> S" << prev << " + F ; b" << 3 * i << "\n";
  }
  return out.str();
}

std::vector<std::string> nsite_u(int n) {
  std::vector<std::string> u = {"E", "F"};
  for (int i = 1; i <= n; ++i) {
    u.push_back("Y" + std::to_string(i));
    u.push_back("Z" + std::to_string(i));
  }
  return u;
}

// Ring of m intermediates U1 -> ... -> Um -> U1, each step consuming S<i>.
std::string ring_text(int m) {
  std::ostringstream out;
  for (int i = 1; i <= m; ++i) {
    int next = i % m + 1;
    out << "S" << i << " + U" << i << " -> U" << next << " ; k" << i << "\n";
    out << "U" << next << " -> U" << i << " ; r" << i << "\n";
  }
  return out.str();
}

std::vector<std::string> ring_u(int m) {
  std::vector<std::string> u;
  for (int i = 1; i <= m; ++i) u.push_back("U" + std::to_string(i));
  return u;
}

// Complete digraph on m intermediates; each edge consumes one species.
std::string complete_text(int m) {
  std::ostringstream out;
  int id = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      out << "S" << id << " + U" << i << " -> U" << j << " ; k" << id << "\n";
      ++id;
    }
  }
  return out.str();
}

void BM_PingPong(benchmark::State& state) {
  ReactionNetwork net = parse_network(
      "E + S1 <-> Y1 ; k1, k2\nY1 <-> E* + P1 ; k3, k4\nE* + S2 <-> Y2 ; k5, k6\nY2 <-> E + P2 ; k7, k8\n");
  for (auto _ : state) benchmark::DoNotOptimize(reduce_network(net, {"E", "E*", "Y1", "Y2"}));
}
BENCHMARK(BM_PingPong)->Unit(benchmark::kMicrosecond);

void BM_NSite(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ReactionNetwork net = parse_network(nsite_text(n));
  auto u = nsite_u(n);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_network(net, u));
}
BENCHMARK(BM_NSite)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_RingTrees(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  ReactionNetwork net = parse_network(ring_text(m));
  ElimGraph g = build_elimination_graph(net, ring_u(m));
  for (auto _ : state) benchmark::DoNotOptimize(tree_label_sum(g, 0, 0));
  state.counters["trees"] = static_cast<double>(spanning_in_trees(g, 0, 0).size());
}
BENCHMARK(BM_RingTrees)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);

void BM_CompleteTrees(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  ReactionNetwork net = parse_network(complete_text(m));
  ElimGraph g = build_elimination_graph(net, ring_u(m));
  for (auto _ : state) benchmark::DoNotOptimize(tree_label_sum(g, 0, 0));
  state.counters["trees"] = static_cast<double>(spanning_in_trees(g, 0, 0).size());
}
BENCHMARK(BM_CompleteTrees)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_RingCycles(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  ReactionNetwork net = parse_network(ring_text(m));
  ElimGraph g = build_elimination_graph(net, ring_u(m));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(g));
}
BENCHMARK(BM_RingCycles)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);

void BM_RingReduce(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  ReactionNetwork net = parse_network(ring_text(m));
  auto u = ring_u(m);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_network(net, u));
}
BENCHMARK(BM_RingReduce)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
