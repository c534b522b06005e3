#include <vector>

#include "catalog.hpp"
#include "doctest.h"
#include "test_util.hpp"
#include "valquiv/sequence.hpp"

using namespace valquiv;

TEST_CASE("admissibility: each letter must be a sink when played") {
  cat::Entry k = cat::kronecker();
  AdmissibleSequence s = AdmissibleSequence::validate(k.orient, {2, 1, 2});
  CHECK(s.length() == 3);
  CHECK(s.final_orientation() == k.orient.reflected(2).reflected(1).reflected(2));
  CHECK(multiplicity(s) == std::vector<int>{1, 2});
  CHECK(support(s) == VertexSet{1, 2});

  CHECK(tst::thrown_position([&] {
          AdmissibleSequence::validate(k.orient, {1});
        }) == 1);
  CHECK(tst::thrown_code([&] {
          AdmissibleSequence::validate(k.orient, {1});
        }) == Errc::NotASink);
  CHECK(tst::thrown_position([&] {
          AdmissibleSequence::validate(k.orient, {2, 2});
        }) == 2);
  CHECK(tst::thrown_code([&] {
          AdmissibleSequence::validate(k.orient, {2, 0});
        }) == Errc::ParseError);

  CHECK(AdmissibleSequence::validate(k.orient, {}).empty());
}

TEST_CASE("equivalence is multiplicity equality") {
  cat::Entry e = cat::a3_source2();
  AdmissibleSequence s = AdmissibleSequence::validate(e.orient, {1, 3, 2});
  AdmissibleSequence t = AdmissibleSequence::validate(e.orient, {3, 1, 2});
  CHECK(is_equivalent(s, t));
  CHECK(is_subsequence(s, t));
  CHECK(is_subsequence(t, s));

  AdmissibleSequence u = AdmissibleSequence::validate(e.orient, {1});
  CHECK(!is_equivalent(s, u));
  CHECK(is_subsequence(u, s));
  CHECK(!is_subsequence(s, u));
}

TEST_CASE("sequences over different bases do not mix") {
  AdmissibleSequence s = AdmissibleSequence::validate(cat::a3_path().orient, {3});
  AdmissibleSequence t = AdmissibleSequence::validate(cat::a3_source2().orient, {3});
  CHECK(tst::thrown_code([&] { is_equivalent(s, t); }) == Errc::DifferentBase);
  CHECK(tst::thrown_code([&] { meet(s, t); }) == Errc::DifferentBase);
}

TEST_CASE("canonical form blocks by multiplicity thresholds") {
  cat::Entry k = cat::kronecker();
  CanonicalForm cf = canonical_form(AdmissibleSequence::validate(k.orient, {2, 1, 2}));
  CHECK(cf.blocks == std::vector<std::vector<int>>{{2, 1}, {2}});
  CHECK(to_string(cf) == "2 1 | 2");
  CHECK(cf.flatten() == std::vector<int>{2, 1, 2});
  CHECK(cf.supports() == std::vector<VertexSet>{{1, 2}, {2}});

  cat::Entry e = cat::a3_source2();
  CanonicalForm c1 = canonical_form(AdmissibleSequence::validate(e.orient, {3, 1, 2}));
  CanonicalForm c2 = canonical_form(AdmissibleSequence::validate(e.orient, {1, 3, 2}));
  CHECK(c1.blocks == c2.blocks);
  CHECK(to_string(c1) == "1 3 2");

  CHECK(tst::thrown_code([&] {
          canonical_form(AdmissibleSequence::validate(e.orient, {}));
        }) == Errc::EmptySequence);
}

TEST_CASE("meet and join act pointwise on multiplicities") {
  cat::Entry k = cat::kronecker();
  AdmissibleSequence s = AdmissibleSequence::validate(k.orient, {2, 1, 2});
  AdmissibleSequence t = AdmissibleSequence::validate(k.orient, {2, 1});
  CHECK(multiplicity(meet(s, t)) == std::vector<int>{1, 1});
  CHECK(multiplicity(join(s, t)) == std::vector<int>{1, 2});

  AdmissibleSequence empty = AdmissibleSequence::validate(k.orient, {});
  CHECK(meet(s, empty).empty());
  CHECK(is_equivalent(join(s, empty), s));
}

TEST_CASE("sequence_of_multiplicity materializes and rejects") {
  cat::Entry k = cat::kronecker();
  AdmissibleSequence s = sequence_of_multiplicity(k.orient, {1, 2});
  CHECK(s.letters() == std::vector<int>{2, 1, 2});
  CHECK(tst::thrown_code([&] { sequence_of_multiplicity(k.orient, {1}); }) == Errc::ParseError);
  CHECK(tst::thrown_code([&] { sequence_of_multiplicity(k.orient, {-1, 0}); }) ==
        Errc::ParseError);
  // No admissible sequence has this multiplicity: vertex 1 is not a sink.
  CHECK(tst::thrown_code([&] { sequence_of_multiplicity(k.orient, {1, 0}); }) == Errc::Stuck);
}

TEST_CASE("principal sequences by backward hulls") {
  cat::Entry k = cat::kronecker();
  CHECK(principal_sequence(k.orient, 2, 2).letters() == std::vector<int>{2, 1, 2});
  CHECK(principal_sequence(k.orient, 1, 1).letters() == std::vector<int>{2, 1});
  CHECK(principal_sequence(k.orient, 2, 1).letters() == std::vector<int>{2, 1, 2, 1});

  cat::Entry a3 = cat::a3_path();
  CHECK(principal_sequence(a3.orient, 1, 1).letters() == std::vector<int>{3, 2, 1});
  CHECK(principal_sequence(a3.orient, 2, 3).letters() == std::vector<int>{3, 2, 3});
  CHECK(principal_sequence(a3.orient, 3, 3).letters() == std::vector<int>{3, 2, 1, 3, 2, 3});

  CHECK(tst::thrown_code([&] { principal_sequence(k.orient, 0, 1); }) == Errc::ParseError);
  CHECK(tst::thrown_code([&] { principal_sequence(k.orient, 1, 3); }) == Errc::ParseError);
}

TEST_CASE("multiplicity of the tip vertex equals the block count") {
  for (const cat::Entry& e : cat::full()) {
    CAPTURE(e.name);
    int n = e.graph.vertex_count();
    for (int r = 1; r <= 4; ++r)
      for (int x = 1; x <= n; ++x) {
        AdmissibleSequence s = principal_sequence(e.orient, r, x);
        CHECK(multiplicity(s)[static_cast<std::size_t>(x - 1)] == r);
        CHECK(is_principal(s));
      }
  }
}

TEST_CASE("is_principal rejects non-principal shapes") {
  cat::Entry e = cat::a3_source2();
  CHECK(!is_principal(AdmissibleSequence::validate(e.orient, {1, 3})));

  cat::Entry a3 = cat::a3_path();
  CHECK(!is_principal(AdmissibleSequence::validate(a3.orient, {3, 2, 1, 3})));
  CHECK(is_principal(AdmissibleSequence::validate(a3.orient, {3, 2, 3})));

  CHECK(tst::thrown_code([&] {
          is_principal(AdmissibleSequence::validate(a3.orient, {}));
        }) == Errc::EmptySequence);
}

TEST_CASE("complete sequences visit every vertex once and fix the base") {
  CHECK(complete_sequence(cat::a3_path().orient).letters() == std::vector<int>{3, 2, 1});
  CHECK(complete_sequence(cat::a3_source2().orient).letters() == std::vector<int>{1, 3, 2});
  CHECK(complete_sequence(cat::kronecker().orient).letters() == std::vector<int>{2, 1});
  CHECK(complete_sequence(cat::d4().orient).letters() == std::vector<int>{1, 3, 4, 2});

  for (const cat::Entry& e : cat::full()) {
    CAPTURE(e.name);
    AdmissibleSequence s = complete_sequence(e.orient);
    CHECK(s.length() == static_cast<std::size_t>(e.graph.vertex_count()));
    CHECK(s.final_orientation() == e.orient);
  }
}

TEST_CASE("word_of preserves letters") {
  cat::Entry k = cat::kronecker();
  CHECK(word_of(AdmissibleSequence::validate(k.orient, {2, 1, 2})).letters ==
        std::vector<int>{2, 1, 2});
}
