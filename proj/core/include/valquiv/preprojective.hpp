#pragma once

#include <compare>
#include <vector>

#include "valquiv/sequence.hpp"

namespace valquiv {

// Name of an indecomposable preprojective class: r blocks, tip vertex x.
struct ClassId {
  int r = 0;
  int x = 0;
  auto operator<=>(const ClassId&) const = default;
};

struct TraceStep {
  int letter;      // reflection applied
  RootVector vec;  // image after applying it
};

// Dimension-vector trace: start at e_{x_s}, then apply sigma_{x_{s-1}}, ...,
// sigma_{x_1}. Records through the first non-positive image, if any.
struct PositivityTrace {
  RootVector start;
  std::vector<TraceStep> steps;
  bool positive = false;
  int zero_position = 0;  // 1-based letter index where positivity failed, 0 if it never did

  const RootVector& dim() const;  // defined only when positive
};

PositivityTrace dim_of_sequence(const CartanMatrix& a, const AdmissibleSequence& s);

class PreprojectiveClass {
public:
  PreprojectiveClass(ClassId id, AdmissibleSequence shortest, RootVector dim)
      : id_(id), shortest_(std::move(shortest)), dim_(std::move(dim)) {}

  const ClassId& id() const { return id_; }
  const RootVector& dim() const { return dim_; }
  const AdmissibleSequence& shortest() const { return shortest_; }  // S_{r,x}
  const Orientation& base() const { return shortest_.base(); }

private:
  ClassId id_;
  AdmissibleSequence shortest_;
  RootVector dim_;
};

// Throws NoSuchClass when (r,x) names no module on this quiver (finite type
// exhausted); InternalPositivityFailure marks the impossible combination of a
// reduced word with a non-positive trace.
PreprojectiveClass class_of(const ValuedGraph& g, const Orientation& o, ClassId id);

AdmissibleSequence shortest_annihilating(const PreprojectiveClass& c);

// F(S) kills the class iff S_{r,x} precedes S.
bool annihilates(const AdmissibleSequence& s, const PreprojectiveClass& c);

// Independent route: forward simulation of the reflection functors on dim c,
// zeroing when the running vector equals the simple root at the next letter.
bool annihilates_by_trace(const CartanMatrix& a, const AdmissibleSequence& s,
                          const PreprojectiveClass& c);

// S is the annihilating sequence of some preprojective module iff its word is
// reduced.
bool realizable(const CartanMatrix& a, const AdmissibleSequence& s);

// Multiplicities and trace verdicts of S_{r,x} for 1 <= r <= max_r.
struct PrincipalTable {
  int max_r = 0;
  int n = 0;
  std::vector<std::vector<int>> mult;  // index (r-1)*n + (x-1)
  std::vector<char> positive;

  const std::vector<int>& mult_of(int r, int x) const;
  bool positive_of(int r, int x) const;
};

PrincipalTable principal_table(const CartanMatrix& a, const Orientation& o, int max_r);

// Cross-check for realizable: S is equivalent to a join of trace-positive
// principal sequences.
bool has_principal_join_witness(const CartanMatrix& a, const AdmissibleSequence& s);
bool has_principal_join_witness(const PrincipalTable& pt, const AdmissibleSequence& s);

bool preproj_leq(const PreprojectiveClass& c1, const PreprojectiveClass& c2);

// Same comparison on raw names, defined whether or not they denote modules.
bool principal_name_leq(const Orientation& o, ClassId id1, ClassId id2);

struct ClassEntry {
  ClassId id;
  AdmissibleSequence seq;
  PositivityTrace trace;
};

// All names with 1 <= r <= max_r in a deterministic topological order of the
// translation quiver ((r,x) |-> level r-1); dead names carry non-positive
// traces.
std::vector<ClassEntry> enumerate_classes(const ValuedGraph& g, const Orientation& o, int max_r);

}  // namespace valquiv
