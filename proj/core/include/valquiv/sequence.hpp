#pragma once

#include <string>
#include <vector>

#include "valquiv/orientation.hpp"
#include "valquiv/weyl.hpp"

namespace valquiv {

// (+)-admissible sequence over a fixed base orientation: letter x_k must be a
// sink after reflecting at x_1 .. x_{k-1}. Validated at construction.
class AdmissibleSequence {
public:
  static AdmissibleSequence validate(const Orientation& base, std::vector<int> letters);

  const Orientation& base() const { return base_; }
  const Orientation& final_orientation() const { return final_; }  // Lambda^S
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const AdmissibleSequence&) const = default;

private:
  AdmissibleSequence(Orientation base, Orientation fin, std::vector<int> letters)
      : base_(std::move(base)), final_(std::move(fin)), letters_(std::move(letters)) {}

  Orientation base_;
  Orientation final_;
  std::vector<int> letters_;
};

// m_S(v) for v = 1..n, stored at index v-1; entries sum to the length.
std::vector<int> multiplicity(const AdmissibleSequence& s);
VertexSet support(const AdmissibleSequence& s);

void require_same_base(const AdmissibleSequence& s, const AdmissibleSequence& t);

// The multiplicity vector is a complete invariant of the equivalence class.
bool is_equivalent(const AdmissibleSequence& s, const AdmissibleSequence& t);

// S precedes T (T ~ S.U for some U) iff m_S <= m_T pointwise.
bool is_subsequence(const AdmissibleSequence& s, const AdmissibleSequence& t);

struct CanonicalForm {
  std::vector<std::vector<int>> blocks;  // letters within a block are distinct

  std::vector<VertexSet> supports() const;
  std::vector<int> flatten() const;
};

std::string to_string(const CanonicalForm& c);  // "2 1 | 2"

// S ~ S_1 ... S_r with Supp S_i = { v : m_S(v) >= i }; within each block the
// least available sink is taken first.
CanonicalForm canonical_form(const AdmissibleSequence& s);

AdmissibleSequence meet(const AdmissibleSequence& s, const AdmissibleSequence& t);
AdmissibleSequence join(const AdmissibleSequence& s, const AdmissibleSequence& t);

// Materialize the sequence with the given multiplicity vector through the
// canonical block construction. Stuck signals a non-realizable input, which
// no path through the public operations produces.
AdmissibleSequence sequence_of_multiplicity(const Orientation& base, const std::vector<int>& mult);

// S_{r,x}: supports built backward from <x> by r-1 hull steps.
AdmissibleSequence principal_sequence(const Orientation& base, int r, int x);

bool is_principal(const AdmissibleSequence& s);

Word word_of(const AdmissibleSequence& s);

// Every vertex exactly once, least-index sink first; Lambda^K = Lambda.
AdmissibleSequence complete_sequence(const Orientation& base);

}  // namespace valquiv
