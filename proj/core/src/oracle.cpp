#include "valquiv/oracle.hpp"

#include <algorithm>
#include <deque>

#include "valquiv/errors.hpp"

namespace valquiv::oracle {

long CayleyTable::length_of(const WeylElement& e) const {
  auto it = lengths.find(e.matrix());
  return it == lengths.end() ? -1 : it->second;
}

CayleyTable bfs_lengths(const CartanMatrix& a, long cap) {
  const int n = a.rank();
  std::vector<WeylElement> gens;
  gens.reserve(n);
  for (int i = 1; i <= n; ++i) gens.push_back(WeylElement::simple_reflection(a, i));

  CayleyTable t;
  WeylElement id = WeylElement::identity(n);
  t.lengths.emplace(id.matrix(), 0);
  std::deque<WeylElement> frontier{id};
  long depth = 0;
  while (!frontier.empty()) {
    std::deque<WeylElement> next;
    for (const WeylElement& e : frontier) {
      for (const WeylElement& g : gens) {
        WeylElement f = e * g;  // append a letter on the right
        if (t.lengths.emplace(f.matrix(), depth + 1).second) next.push_back(f);
      }
    }
    if (!next.empty()) ++depth;
    if (static_cast<long>(t.lengths.size()) > cap) {
      t.finite = false;
      t.order = 0;
      t.max_length = depth;
      return t;
    }
    frontier = std::move(next);
  }
  t.finite = true;
  t.order = static_cast<long>(t.lengths.size());
  t.max_length = depth;
  return t;
}

namespace {

void enum_rec(const Orientation& o, int max_len, std::vector<int>& prefix,
              std::vector<std::vector<int>>& out) {
  out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == max_len) return;
  for (int x : o.sinks()) {
    prefix.push_back(x);
    Orientation next = o.reflected(x);
    enum_rec(next, max_len, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_admissible(const Orientation& base, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  enum_rec(base, max_len, prefix, out);
  return out;
}

std::set<std::vector<int>> equivalence_closure(const Orientation& base,
                                               const std::vector<int>& letters) {
  AdmissibleSequence::validate(base, letters);  // reject bad input up front
  std::set<std::vector<int>> seen{letters};
  std::deque<std::vector<int>> frontier{letters};
  while (!frontier.empty()) {
    std::vector<int> cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      int u = cur[k], v = cur[k + 1];
      const auto& nb = base.neighbors(u);
      if (u == v || std::find(nb.begin(), nb.end(), v) != nb.end()) continue;
      std::vector<int> sw = cur;
      std::swap(sw[k], sw[k + 1]);
      if (seen.insert(sw).second) {
        AdmissibleSequence::validate(base, sw);  // swaps must stay admissible
        frontier.push_back(sw);
      }
    }
  }
  return seen;
}

}  // namespace valquiv::oracle
