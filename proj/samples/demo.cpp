// Builds a 3x4 grid, prints a few intervals and its stress numbers.
#include <stressconv/stressconv.hpp>

#include <iostream>

using namespace stressconv;

namespace {

void print_set(const Graph& g, const VertexSet& s) {
  std::cout << '{';
  bool first = true;
  for (VertexId v : s) {
    std::cout << (first ? "" : ", ") << g.label(v);
    first = false;
  }
  std::cout << '}';
}

}  // namespace

int main() {
  const Graph grid = cartesian_product(path_graph(3), path_graph(4));
  const ApspTables t = compute_apsp(grid);
  const VertexId corner = grid.id_of("(v1,v1)");
  const VertexId row_end = grid.id_of("(v1,v4)");
  const VertexId far = grid.id_of("(v3,v4)");

  std::cout << "S(corner, row end) = ";
  print_set(grid, stress_interval(t, corner, row_end));
  std::cout << "\nS(corner, far corner) = ";
  print_set(grid, stress_interval(t, corner, far));
  std::cout << "\nI(corner, far corner) has " << geodesic_interval(t, corner, far).size() << " vertices\n";

  const SolveReport sn = stress_number_exact(grid);
  const SolveReport sh = stress_hull_number_exact(grid);
  std::cout << "sn = " << sn.optimum << ", witness ";
  print_set(grid, sn.witness);
  std::cout << "\nsh = " << sh.optimum << ", witness ";
  print_set(grid, sh.witness);
  std::cout << '\n';
}
