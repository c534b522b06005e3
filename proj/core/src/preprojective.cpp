#include "valquiv/preprojective.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace valquiv {

const RootVector& PositivityTrace::dim() const {
  if (!positive) throw std::logic_error("dim() queried on a non-positive trace");
  return steps.empty() ? start : steps.back().vec;
}

PositivityTrace dim_of_sequence(const CartanMatrix& a, const AdmissibleSequence& s) {
  if (s.empty()) fail(Errc::EmptySequence, "empty sequence has no dimension trace");
  const std::vector<int>& xs = s.letters();
  PositivityTrace tr;
  tr.start = RootVector::simple(a.rank(), xs.back());
  RootVector v = tr.start;
  for (std::size_t idx = xs.size() - 1; idx-- > 0;) {
    v = reflect(a, xs[idx], v);
    tr.steps.push_back({xs[idx], v});
    if (!v.is_positive()) {
      tr.positive = false;
      tr.zero_position = static_cast<int>(idx) + 1;
      return tr;
    }
  }
  tr.positive = true;
  tr.zero_position = 0;
  return tr;
}

namespace {

void require_matching(const ValuedGraph& g, const Orientation& o) {
  if (g.vertex_count() != o.vertex_count() || g.edges() != o.edges())
    fail(Errc::DifferentBase, "orientation does not belong to this graph");
}

}  // namespace

PreprojectiveClass class_of(const ValuedGraph& g, const Orientation& o, ClassId id) {
  require_matching(g, o);
  AdmissibleSequence seq = principal_sequence(o, id.r, id.x);
  CartanMatrix a(g);
  PositivityTrace tr = dim_of_sequence(a, seq);
  if (!tr.positive) {
    if (is_reduced(a, word_of(seq)))
      fail(Errc::InternalPositivityFailure,
           "reduced principal word with non-positive trace");  // must never fire
    fail(Errc::NoSuchClass, "(" + std::to_string(id.r) + "," + std::to_string(id.x) +
                                ") names no preprojective class on this quiver");
  }
  return PreprojectiveClass(id, std::move(seq), tr.dim());
}

AdmissibleSequence shortest_annihilating(const PreprojectiveClass& c) { return c.shortest(); }

bool annihilates(const AdmissibleSequence& s, const PreprojectiveClass& c) {
  return is_subsequence(c.shortest(), s);
}

bool annihilates_by_trace(const CartanMatrix& a, const AdmissibleSequence& s,
                          const PreprojectiveClass& c) {
  require_same_base(s, c.shortest());
  RootVector d = c.dim();
  for (int x : s.letters()) {
    if (d == RootVector::simple(a.rank(), x)) return true;  // the simple dies here
    d = reflect(a, x, d);
    if (!d.is_positive())
      fail(Errc::InternalPositivityFailure,
           "trace simulation left the positive cone off the simple root");
  }
  return d.is_zero();
}

bool realizable(const CartanMatrix& a, const AdmissibleSequence& s) {
  return is_reduced(a, word_of(s));
}

const std::vector<int>& PrincipalTable::mult_of(int r, int x) const {
  return mult[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(x - 1)];
}

bool PrincipalTable::positive_of(int r, int x) const {
  return positive[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(x - 1)] != 0;
}

PrincipalTable principal_table(const CartanMatrix& a, const Orientation& o, int max_r) {
  if (max_r < 1) fail(Errc::ParseError, "max_r must be positive");
  PrincipalTable pt;
  pt.max_r = max_r;
  pt.n = o.vertex_count();
  for (int r = 1; r <= max_r; ++r)
    for (int x = 1; x <= pt.n; ++x) {
      AdmissibleSequence seq = principal_sequence(o, r, x);
      pt.mult.push_back(multiplicity(seq));
      pt.positive.push_back(dim_of_sequence(a, seq).positive ? 1 : 0);
    }
  return pt;
}

bool has_principal_join_witness(const PrincipalTable& pt, const AdmissibleSequence& s) {
  if (s.empty()) return true;  // the zero module
  std::vector<int> m = multiplicity(s);
  int rmax = *std::max_element(m.begin(), m.end());
  if (rmax > pt.max_r) fail(Errc::ParseError, "principal table too small for this sequence");
  std::vector<int> acc(m.size(), 0);
  for (int r = 1; r <= rmax; ++r)
    for (int x = 1; x <= pt.n; ++x) {
      if (!pt.positive_of(r, x)) continue;
      const std::vector<int>& mu = pt.mult_of(r, x);
      bool below = true;
      for (std::size_t v = 0; v < m.size(); ++v)
        if (mu[v] > m[v]) {
          below = false;
          break;
        }
      if (!below) continue;
      for (std::size_t v = 0; v < m.size(); ++v) acc[v] = std::max(acc[v], mu[v]);
    }
  return acc == m;
}

bool has_principal_join_witness(const CartanMatrix& a, const AdmissibleSequence& s) {
  if (s.empty()) return true;
  std::vector<int> m = multiplicity(s);
  int rmax = *std::max_element(m.begin(), m.end());
  return has_principal_join_witness(principal_table(a, s.base(), rmax), s);
}

bool preproj_leq(const PreprojectiveClass& c1, const PreprojectiveClass& c2) {
  return is_subsequence(c1.shortest(), c2.shortest());
}

bool principal_name_leq(const Orientation& o, ClassId id1, ClassId id2) {
  return is_subsequence(principal_sequence(o, id1.r, id1.x), principal_sequence(o, id2.r, id2.x));
}

std::vector<ClassEntry> enumerate_classes(const ValuedGraph& g, const Orientation& o, int max_r) {
  require_matching(g, o);
  if (max_r < 1) fail(Errc::ParseError, "max_r must be positive");
  CartanMatrix a(g);
  int n = o.vertex_count();
  int levels = max_r;  // levels 0 .. max_r-1

  auto node = [n](int level, int v) {
    return static_cast<std::size_t>(level) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(v - 1);
  };
  std::vector<int> indeg(static_cast<std::size_t>(levels) * static_cast<std::size_t>(n), 0);
  for (auto [u, v] : o.arrows()) {
    for (int m = 0; m < levels; ++m) {
      ++indeg[node(m, u)];  // (m,v) -> (m,u)
      if (m + 1 < levels) ++indeg[node(m + 1, v)];
    }
  }

  // Kahn with a min-heap on (level, vertex) for a deterministic linearization.
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> heap;
  for (int m = 0; m < levels; ++m)
    for (int v = 1; v <= n; ++v)
      if (indeg[node(m, v)] == 0) heap.push({m, v});

  std::vector<ClassEntry> out;
  out.reserve(static_cast<std::size_t>(levels) * static_cast<std::size_t>(n));
  while (!heap.empty()) {
    auto [m, v] = heap.top();
    heap.pop();
    ClassId id{m + 1, v};
    AdmissibleSequence seq = principal_sequence(o, id.r, id.x);
    PositivityTrace tr = dim_of_sequence(a, seq);
    out.push_back({id, std::move(seq), std::move(tr)});
    for (int u : o.in(v))
      if (--indeg[node(m, u)] == 0) heap.push({m, u});
    if (m + 1 < levels)
      for (int w : o.out(v))
        if (--indeg[node(m + 1, w)] == 0) heap.push({m + 1, w});
  }
  if (out.size() != static_cast<std::size_t>(levels) * static_cast<std::size_t>(n))
    fail(Errc::Stuck, "translation quiver linearization incomplete");
  return out;
}

}  // namespace valquiv
