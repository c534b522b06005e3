#include "valquiv/sequence.hpp"

#include <algorithm>
#include <string>

namespace valquiv {

AdmissibleSequence AdmissibleSequence::validate(const Orientation& base, std::vector<int> letters) {
  Orientation cur = base;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    int x = letters[k];
    if (x < 1 || x > base.vertex_count())
      fail(Errc::ParseError, "letter " + std::to_string(x) + " out of range",
           static_cast<int>(k) + 1);
    if (!cur.is_sink(x))
      fail(Errc::NotASink, "letter " + std::to_string(x) + " is not a sink at position " +
                               std::to_string(k + 1),
           static_cast<int>(k) + 1);
    cur = cur.reflected(x);
  }
  return AdmissibleSequence(base, std::move(cur), std::move(letters));
}

std::vector<int> multiplicity(const AdmissibleSequence& s) {
  std::vector<int> m(static_cast<std::size_t>(s.base().vertex_count()), 0);
  for (int x : s.letters()) ++m[static_cast<std::size_t>(x - 1)];
  return m;
}

VertexSet support(const AdmissibleSequence& s) {
  VertexSet out;
  for (int x : s.letters()) out.insert(x);
  return out;
}

void require_same_base(const AdmissibleSequence& s, const AdmissibleSequence& t) {
  if (!(s.base() == t.base()))
    fail(Errc::DifferentBase, "sequences live over different base orientations");
}

bool is_equivalent(const AdmissibleSequence& s, const AdmissibleSequence& t) {
  require_same_base(s, t);
  return multiplicity(s) == multiplicity(t);
}

bool is_subsequence(const AdmissibleSequence& s, const AdmissibleSequence& t) {
  require_same_base(s, t);
  std::vector<int> ms = multiplicity(s), mt = multiplicity(t);
  for (std::size_t v = 0; v < ms.size(); ++v)
    if (ms[v] > mt[v]) return false;
  return true;
}

std::vector<VertexSet> CanonicalForm::supports() const {
  std::vector<VertexSet> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.emplace_back(b.begin(), b.end());
  return out;
}

std::vector<int> CanonicalForm::flatten() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const CanonicalForm& c) {
  std::string out;
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    if (b > 0) out += " | ";
    for (std::size_t k = 0; k < c.blocks[b].size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(c.blocks[b][k]);
    }
  }
  return out;
}

namespace {

// Emit each support as one block, always picking the least-index member that
// is a sink in the running orientation. Existence of a valid order for the
// whole chain implies the greedy pick is never wrong: all in-block neighbors
// of a current sink can only be played after it.
std::vector<std::vector<int>> greedy_blocks(const Orientation& base,
                                            const std::vector<VertexSet>& supports) {
  Orientation cur = base;
  std::vector<std::vector<int>> blocks;
  for (const VertexSet& t : supports) {
    if (t.empty()) fail(Errc::Stuck, "empty block support");
    VertexSet remaining = t;
    std::vector<int> block;
    while (!remaining.empty()) {
      int pick = 0;
      for (int v : remaining)
        if (cur.is_sink(v)) {
          pick = v;
          break;
        }
      if (pick == 0) fail(Errc::Stuck, "no sink available within block support");
      block.push_back(pick);
      cur = cur.reflected(pick);
      remaining.erase(pick);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<VertexSet> supports_of_multiplicity(const std::vector<int>& mult) {
  int r = 0;
  for (int m : mult) r = std::max(r, m);
  std::vector<VertexSet> out;
  for (int i = 1; i <= r; ++i) {
    VertexSet t;
    for (std::size_t v = 0; v < mult.size(); ++v)
      if (mult[v] >= i) t.insert(static_cast<int>(v) + 1);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const AdmissibleSequence& s) {
  if (s.empty()) fail(Errc::EmptySequence, "empty sequence has no canonical form");
  std::vector<int> m = multiplicity(s);
  CanonicalForm cf{greedy_blocks(s.base(), supports_of_multiplicity(m))};
  AdmissibleSequence check = AdmissibleSequence::validate(s.base(), cf.flatten());
  if (multiplicity(check) != m) fail(Errc::Stuck, "canonical form lost multiplicities");
  return cf;
}

AdmissibleSequence sequence_of_multiplicity(const Orientation& base, const std::vector<int>& mult) {
  if (mult.size() != static_cast<std::size_t>(base.vertex_count()))
    fail(Errc::ParseError, "multiplicity vector has wrong dimension");
  for (int m : mult)
    if (m < 0) fail(Errc::ParseError, "negative multiplicity");
  CanonicalForm cf{greedy_blocks(base, supports_of_multiplicity(mult))};
  AdmissibleSequence out = AdmissibleSequence::validate(base, cf.flatten());
  if (multiplicity(out) != mult) fail(Errc::Stuck, "materialized sequence lost multiplicities");
  return out;
}

AdmissibleSequence meet(const AdmissibleSequence& s, const AdmissibleSequence& t) {
  require_same_base(s, t);
  std::vector<int> ms = multiplicity(s), mt = multiplicity(t);
  std::vector<int> mv(ms.size());
  for (std::size_t v = 0; v < ms.size(); ++v) mv[v] = std::min(ms[v], mt[v]);
  return sequence_of_multiplicity(s.base(), mv);
}

AdmissibleSequence join(const AdmissibleSequence& s, const AdmissibleSequence& t) {
  require_same_base(s, t);
  std::vector<int> ms = multiplicity(s), mt = multiplicity(t);
  std::vector<int> mv(ms.size());
  for (std::size_t v = 0; v < ms.size(); ++v) mv[v] = std::max(ms[v], mt[v]);
  return sequence_of_multiplicity(s.base(), mv);
}

AdmissibleSequence principal_sequence(const Orientation& base, int r, int x) {
  if (r < 1) fail(Errc::ParseError, "block count r must be positive");
  if (x < 1 || x > base.vertex_count()) fail(Errc::ParseError, "vertex out of range");
  VertexPoset p(base);
  std::vector<VertexSet> supports(static_cast<std::size_t>(r));
  supports[static_cast<std::size_t>(r - 1)] = filter_generated(p, VertexSet{x});
  for (int i = r - 2; i >= 0; --i)
    supports[static_cast<std::size_t>(i)] = hull(base, supports[static_cast<std::size_t>(i + 1)]);
  CanonicalForm cf{greedy_blocks(base, supports)};
  return AdmissibleSequence::validate(base, cf.flatten());
}

bool is_principal(const AdmissibleSequence& s) {
  if (s.empty()) fail(Errc::EmptySequence, "empty sequence is not principal");
  CanonicalForm cf = canonical_form(s);
  std::vector<VertexSet> sup = cf.supports();
  std::size_t r = sup.size();
  VertexPoset p(s.base());

  const VertexSet& last = sup[r - 1];
  bool principal_last = false;
  for (int x : last)
    if (filter_generated(p, VertexSet{x}) == last) {
      principal_last = true;
      break;
    }
  if (!principal_last) return false;

  for (std::size_t i = 0; i + 1 < r; ++i)
    if (hull(s.base(), sup[i + 1]) != sup[i]) return false;
  return true;
}

Word word_of(const AdmissibleSequence& s) { return Word{s.letters()}; }

AdmissibleSequence complete_sequence(const Orientation& base) {
  int n = base.vertex_count();
  Orientation cur = base;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> letters;
  for (int step = 0; step < n; ++step) {
    int pick = 0;
    for (int v = 1; v <= n; ++v)
      if (!used[static_cast<std::size_t>(v - 1)] && cur.is_sink(v)) {
        pick = v;
        break;
      }
    if (pick == 0) fail(Errc::Stuck, "no unused sink available");
    letters.push_back(pick);
    used[static_cast<std::size_t>(pick - 1)] = true;
    cur = cur.reflected(pick);
  }
  return AdmissibleSequence::validate(base, std::move(letters));
}

}  // namespace valquiv
