#pragma once

#include <map>
#include <set>
#include <vector>

#include "valquiv/sequence.hpp"

namespace valquiv::oracle {

// Exponential-cost reference implementations, for tests and the hidden CLI
// subcommand only. Everything here recomputes from first principles.

struct CayleyTable {
  bool finite = false;
  long order = 0;       // group order when finite
  long max_length = 0;  // longest length assigned
  std::map<IntMatrix, long> lengths;

  long length_of(const WeylElement& e) const;  // -1 when absent
};

// Breadth-first closure of <sigma_1..sigma_n> from the identity; lengths are
// Cayley distances. Stops as truncated once more than cap elements appear.
CayleyTable bfs_lengths(const CartanMatrix& a, long cap);

// Every (+)-admissible sequence of length <= max_len, empty included, in DFS
// order branching over sinks in ascending vertex order.
std::vector<std::vector<int>> enumerate_admissible(const Orientation& base, int max_len);

// Closure of the sequence under swaps of adjacent letters with no edge
// between them; members come back sorted lexicographically.
std::set<std::vector<int>> equivalence_closure(const Orientation& base,
                                               const std::vector<int>& letters);

}  // namespace valquiv::oracle
