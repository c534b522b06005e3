#include <vector>

#include "catalog.hpp"
#include "doctest.h"
#include "test_util.hpp"
#include "valquiv/oracle.hpp"
#include "valquiv/preprojective.hpp"

using namespace valquiv;

namespace {

std::vector<Int> coords(const RootVector& v) { return v.coords(); }

}  // namespace

TEST_CASE("dimension traces on the double-valued rank-2 quiver") {
  cat::Entry k = cat::kronecker();
  CartanMatrix a(k.graph);

  PositivityTrace t = dim_of_sequence(a, AdmissibleSequence::validate(k.orient, {2, 1, 2}));
  CHECK(t.positive);
  CHECK(t.zero_position == 0);
  CHECK(coords(t.start) == std::vector<Int>{0, 1});
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[0].letter == 1);
  CHECK(coords(t.steps[0].vec) == std::vector<Int>{2, 1});
  CHECK(t.steps[1].letter == 2);
  CHECK(coords(t.steps[1].vec) == std::vector<Int>{2, 3});
  CHECK(coords(t.dim()) == std::vector<Int>{2, 3});

  PositivityTrace u = dim_of_sequence(a, AdmissibleSequence::validate(k.orient, {2, 1, 2, 1}));
  CHECK(u.positive);
  CHECK(coords(u.dim()) == std::vector<Int>{3, 4});
}

TEST_CASE("trace detects the annihilated simple") {
  cat::Entry e = cat::a2();
  CartanMatrix a(e.graph);
  PositivityTrace t = dim_of_sequence(a, AdmissibleSequence::validate(e.orient, {2, 1, 2, 1}));
  CHECK(!t.positive);
  CHECK(t.zero_position == 1);
  CHECK(tst::thrown_code([&] {
          dim_of_sequence(a, AdmissibleSequence::validate(e.orient, {}));
        }) == Errc::EmptySequence);
}

TEST_CASE("class_of distinguishes live and dead names") {
  cat::Entry a3 = cat::a3_path();
  PreprojectiveClass c = class_of(a3.graph, a3.orient, {2, 3});
  CHECK(coords(c.dim()) == std::vector<Int>{0, 1, 0});
  CHECK(c.shortest().letters() == std::vector<int>{3, 2, 3});

  CHECK(coords(class_of(a3.graph, a3.orient, {3, 3}).dim()) == std::vector<Int>{1, 0, 0});
  CHECK(tst::thrown_code([&] { class_of(a3.graph, a3.orient, {2, 1}); }) == Errc::NoSuchClass);

  cat::Entry a2 = cat::a2();
  CHECK(coords(class_of(a2.graph, a2.orient, {1, 1}).dim()) == std::vector<Int>{1, 1});
  CHECK(coords(class_of(a2.graph, a2.orient, {2, 2}).dim()) == std::vector<Int>{1, 0});
  CHECK(tst::thrown_code([&] { class_of(a2.graph, a2.orient, {2, 1}); }) == Errc::NoSuchClass);

  // Orientation belonging to a graph of a different shape is rejected. Same
  // shape with a different valuation is indistinguishable by design: the
  // orientation carries only the underlying graph.
  CHECK(tst::thrown_code([&] { class_of(a3.graph, a2.orient, {1, 1}); }) == Errc::DifferentBase);
  cat::Entry b2 = cat::b2();
  CHECK(coords(class_of(b2.graph, a2.orient, {1, 1}).dim()) == std::vector<Int>{1, 1});
}

TEST_CASE("finite type: live names carry exactly the positive roots") {
  cat::Entry a3 = cat::a3_path();
  std::vector<std::vector<Int>> dims;
  for (const ClassEntry& e : enumerate_classes(a3.graph, a3.orient, 3))
    if (e.trace.positive) dims.push_back(coords(e.trace.dim()));
  std::vector<std::vector<Int>> expected{{0, 0, 1}, {0, 1, 1}, {1, 1, 1},
                                         {0, 1, 0}, {1, 1, 0}, {1, 0, 0}};
  CHECK(dims == expected);
}

TEST_CASE("annihilation: subsequence route equals trace simulation") {
  cat::Entry a2 = cat::a2();
  CartanMatrix a(a2.graph);
  PreprojectiveClass simple2 = class_of(a2.graph, a2.orient, {1, 2});
  AdmissibleSequence s21 = AdmissibleSequence::validate(a2.orient, {2, 1});
  AdmissibleSequence s2 = AdmissibleSequence::validate(a2.orient, {2});
  CHECK(annihilates(s21, simple2));
  CHECK(annihilates_by_trace(a, s21, simple2));
  CHECK(annihilates(s2, simple2));

  PreprojectiveClass proj1 = class_of(a2.graph, a2.orient, {1, 1});  // dim (1,1)
  CHECK(!annihilates(s2, proj1));
  CHECK(!annihilates_by_trace(a, s2, proj1));
  CHECK(annihilates(s21, proj1));
  CHECK(annihilates_by_trace(a, s21, proj1));

  // Exhaustive agreement on small quivers.
  for (const cat::Entry& e : {cat::a2(), cat::a3_path(), cat::kronecker()}) {
    CAPTURE(e.name);
    CartanMatrix ca(e.graph);
    std::vector<PreprojectiveClass> classes;
    for (const ClassEntry& ce : enumerate_classes(e.graph, e.orient, 3))
      if (ce.trace.positive) classes.push_back(class_of(e.graph, e.orient, ce.id));
    for (const auto& letters : oracle::enumerate_admissible(e.orient, 6)) {
      AdmissibleSequence s = AdmissibleSequence::validate(e.orient, letters);
      for (const PreprojectiveClass& c : classes)
        CHECK(annihilates(s, c) == annihilates_by_trace(ca, s, c));
    }
  }
}

TEST_CASE("realizability and the principal join witness") {
  cat::Entry a2 = cat::a2();
  CartanMatrix a(a2.graph);
  AdmissibleSequence good = AdmissibleSequence::validate(a2.orient, {2, 1, 2});
  AdmissibleSequence bad = AdmissibleSequence::validate(a2.orient, {2, 1, 2, 1});
  CHECK(realizable(a, good));
  CHECK(!realizable(a, bad));
  CHECK(has_principal_join_witness(a, good));
  // The dead name (2,1) must not fake a witness here.
  CHECK(!has_principal_join_witness(a, bad));

  cat::Entry k = cat::kronecker();
  CartanMatrix ka(k.graph);
  AdmissibleSequence alt = AdmissibleSequence::validate(k.orient, {2, 1, 2, 1});
  CHECK(realizable(ka, alt));
  CHECK(has_principal_join_witness(ka, alt));
  CHECK(has_principal_join_witness(ka, AdmissibleSequence::validate(k.orient, {})));
}

TEST_CASE("principal table flags dead names") {
  cat::Entry a2 = cat::a2();
  CartanMatrix a(a2.graph);
  PrincipalTable pt = principal_table(a, a2.orient, 3);
  CHECK(pt.positive_of(1, 1));
  CHECK(pt.positive_of(1, 2));
  CHECK(pt.positive_of(2, 2));
  CHECK(!pt.positive_of(2, 1));
  CHECK(!pt.positive_of(3, 1));
  CHECK(!pt.positive_of(3, 2));
  CHECK(pt.mult_of(2, 2) == std::vector<int>{1, 2});

  cat::Entry k = cat::kronecker();
  CartanMatrix ka(k.graph);
  PrincipalTable kt = principal_table(ka, k.orient, 4);
  for (int r = 1; r <= 4; ++r)
    for (int x = 1; x <= 2; ++x) CHECK(kt.positive_of(r, x));
}

TEST_CASE("preprojective order matches translation quiver reachability") {
  cat::Entry k = cat::kronecker();
  PreprojectiveClass c12 = class_of(k.graph, k.orient, {1, 2});
  PreprojectiveClass c11 = class_of(k.graph, k.orient, {1, 1});
  PreprojectiveClass c22 = class_of(k.graph, k.orient, {2, 2});
  CHECK(preproj_leq(c12, c11));
  CHECK(preproj_leq(c11, c22));
  CHECK(!preproj_leq(c22, c12));
  CHECK(preproj_leq(c12, c12));

  for (ClassId p : {ClassId{1, 1}, ClassId{1, 2}, ClassId{2, 1}, ClassId{2, 2}})
    for (ClassId q : {ClassId{1, 1}, ClassId{1, 2}, ClassId{2, 1}, ClassId{2, 2}})
      CHECK(principal_name_leq(k.orient, p, q) ==
            tq_reachable(k.orient, {p.r - 1, p.x}, {q.r - 1, q.x}));
}

TEST_CASE("enumerate_classes: the dimension ladder") {
  cat::Entry k = cat::kronecker();
  std::vector<ClassEntry> all = enumerate_classes(k.graph, k.orient, 5);
  REQUIRE(all.size() == 10);
  Int want = 0;
  for (const ClassEntry& e : all) {
    CHECK(e.trace.positive);
    CHECK(coords(e.trace.dim()) == std::vector<Int>{want, want + 1});
    ++want;
  }
  CHECK(all[0].id == ClassId{1, 2});
  CHECK(all[1].id == ClassId{1, 1});
  CHECK(all[9].id == ClassId{5, 1});

  CHECK(tst::thrown_code([&] { enumerate_classes(k.graph, k.orient, 0); }) == Errc::ParseError);
}

TEST_CASE("enumerate_classes order on the path quiver") {
  cat::Entry a3 = cat::a3_path();
  std::vector<ClassEntry> all = enumerate_classes(a3.graph, a3.orient, 2);
  std::vector<ClassId> ids;
  for (const ClassEntry& e : all) ids.push_back(e.id);
  CHECK(ids == std::vector<ClassId>{{1, 3}, {1, 2}, {1, 1}, {2, 3}, {2, 2}, {2, 1}});
  CHECK(!all[5].trace.positive);
  CHECK(all[5].trace.zero_position == 1);
}
