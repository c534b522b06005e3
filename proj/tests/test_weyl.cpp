#include "catalog.hpp"
#include "doctest.h"
#include "test_util.hpp"
#include "valquiv/weyl.hpp"

using namespace valquiv;

namespace {

RootVector rv(std::vector<Int> v) { return RootVector(std::move(v)); }

}  // namespace

TEST_CASE("simple reflections on root vectors") {
  CartanMatrix a2(cat::a2().graph);
  CHECK(reflect(a2, 1, RootVector::simple(2, 1)) == rv({-1, 0}));
  CHECK(reflect(a2, 1, RootVector::simple(2, 2)) == rv({1, 1}));

  CartanMatrix b2(cat::b2().graph);  // a12 = -2, a21 = -1
  CHECK(reflect(b2, 1, RootVector::simple(2, 2)) == rv({2, 1}));
  CHECK(reflect(b2, 2, RootVector::simple(2, 1)) == rv({1, 1}));

  CHECK(tst::thrown_code([&] { reflect(b2, 3, RootVector::simple(2, 1)); }) == Errc::ParseError);
}

TEST_CASE("root vector sign predicates") {
  CHECK(rv({0, 0}).is_zero());
  CHECK(!rv({0, 0}).is_positive());
  CHECK(rv({1, 0}).is_positive());
  CHECK(rv({-1, -2}).is_negative());
  CHECK(rv({1, -1}).has_mixed_signs());
  CHECK(!rv({1, 0}).has_mixed_signs());
}

TEST_CASE("words compose with the first letter acting first") {
  CartanMatrix a(cat::a2().graph);
  WeylElement w = element_of(a, Word{{1, 2}});  // sigma_2 sigma_1
  CHECK(w.apply(RootVector::simple(2, 1)) == rv({-1, -1}));
  CHECK(element_of(a, Word{{}}) == WeylElement::identity(2));
  CHECK(element_of(a, Word{{1, 1}}) == WeylElement::identity(2));

  WeylElement s1 = WeylElement::simple_reflection(a, 1);
  CHECK(s1.image_of_simple(1) == rv({-1, 0}));
  CHECK(s1.image_of_simple(2) == rv({1, 1}));
  CHECK(s1.inverse() == s1);
  CHECK((s1 * s1).is_identity());
}

TEST_CASE("is_reduced on rank-2 dihedral families") {
  CartanMatrix a2(cat::a2().graph);
  CHECK(is_reduced(a2, Word{{}}));
  CHECK(is_reduced(a2, Word{{1}}));
  CHECK(is_reduced(a2, Word{{1, 2, 1}}));
  CHECK(!is_reduced(a2, Word{{1, 1}}));
  CHECK(!is_reduced(a2, Word{{1, 2, 1, 2}}));

  CartanMatrix b2(cat::b2().graph);
  CHECK(is_reduced(b2, Word{{1, 2, 1, 2}}));
  CHECK(!is_reduced(b2, Word{{1, 2, 1, 2, 1}}));

  CartanMatrix g2(cat::g2().graph);
  CHECK(is_reduced(g2, Word{{1, 2, 1, 2, 1, 2}}));
  CHECK(!is_reduced(g2, Word{{1, 2, 1, 2, 1, 2, 1}}));

  CartanMatrix k(cat::kronecker().graph);
  CHECK(is_reduced(k, Word{{1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}));
  CHECK(!is_reduced(k, Word{{2, 2}}));

  CHECK(tst::thrown_code([&] { is_reduced(a2, Word{{1, 5}}); }) == Errc::ParseError);
}

TEST_CASE("length via descents") {
  CartanMatrix a2(cat::a2().graph);
  long cap = default_length_cap(2, 6);
  CHECK(length(a2, WeylElement::identity(2), cap) == 0);
  CHECK(length(a2, WeylElement::simple_reflection(a2, 1), cap) == 1);
  CHECK(length(a2, element_of(a2, Word{{1, 2, 1}}), cap) == 3);
  CHECK(length(a2, element_of(a2, Word{{1, 2, 1, 2}}), cap) == 2);

  CartanMatrix b2(cat::b2().graph);
  CHECK(length(b2, element_of(b2, Word{{1, 2, 1, 2}}), cap) == 4);

  CartanMatrix g2(cat::g2().graph);
  CHECK(length(g2, element_of(g2, Word{{1, 2, 1, 2, 1, 2}}), cap) == 6);

  CHECK(tst::thrown_code([&] {
          length(a2, element_of(a2, Word{{1, 2, 1}}), 1);
        }) == Errc::CapExceeded);
}

TEST_CASE("length rejects matrices outside the group") {
  CartanMatrix a2(cat::a2().graph);
  IntMatrix bad(2);
  bad.at(0, 0) = 1;
  bad.at(0, 1) = 1;
  bad.at(1, 0) = -1;
  bad.at(1, 1) = 1;
  CHECK(tst::thrown_code([&] {
          length(a2, WeylElement::from_matrix(bad), 100);
        }) == Errc::MixedSignRoot);

  IntMatrix drift(2);  // no descent, not the identity
  drift.at(0, 0) = 1;
  drift.at(0, 1) = 1;
  drift.at(1, 0) = 0;
  drift.at(1, 1) = 1;
  CHECK(tst::thrown_code([&] {
          length(a2, WeylElement::from_matrix(drift), 100);
        }) == Errc::CapExceeded);
}

TEST_CASE("coxeter powers: finite families cycle, infinite ones grow") {
  CartanMatrix a2(cat::a2().graph);
  CHECK(coxeter_power_lengths(a2, {2, 1}, 3) == std::vector<long>{2, 2, 0});

  CartanMatrix b2(cat::b2().graph);
  CHECK(coxeter_power_lengths(b2, {2, 1}, 3) == std::vector<long>{2, 4, 2});

  CartanMatrix g2(cat::g2().graph);
  CHECK(coxeter_power_lengths(g2, {2, 1}, 6) == std::vector<long>{2, 4, 6, 4, 2, 0});

  CartanMatrix k(cat::kronecker().graph);
  CHECK(coxeter_power_lengths(k, {2, 1}, 4) == std::vector<long>{2, 4, 6, 8});

  CHECK(tst::thrown_code([&] { coxeter_element(a2, {1, 1}); }) == Errc::NotPermutation);
}

TEST_CASE("coxeter element matches its defining word") {
  CartanMatrix a(cat::a2().graph);
  WeylElement c = coxeter_element(a, {2, 1});  // sigma_1 sigma_2
  CHECK(c == element_of(a, Word{{2, 1}}));
  CHECK(c.apply(RootVector::simple(2, 2)) == rv({-1, -1}));
}
