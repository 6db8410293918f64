#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gyro/corpus.hpp"
#include "gyro/finite.hpp"

using namespace gyro;

namespace {

// frozen by an exhaustive subset scan over the addition table, run
// independently before this module was written
struct FrozenSub {
  std::vector<int> members;
  bool is_L;
  bool normal;
};
const std::vector<FrozenSub> kG8Subgyrogroups = {
    {{0}, true, true},           {{0, 3}, true, true},
    {{0, 1, 2, 3}, true, true},  {{0, 5}, false, false},
    {{0, 3, 4, 6}, true, true},  {{0, 7}, false, false},
    {{0, 3, 5, 7}, true, true},  {{0, 1, 2, 3, 4, 5, 6, 7}, true, true},
};

// expected gyration pattern: rows of I/A labels with A = (4,6)(5,7)
const std::vector<std::string> kG8GyrationPattern = {
    "IIIIIIII", "IIIIAAAA", "IIIIAAAA", "IIIIIIII",
    "IAAIIAIA", "IAAIAIAI", "IAAIIAIA", "IAAIAIAI"};

std::vector<std::vector<int>> z4_table() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = (a + b) % 4;
  return t;
}

}  // namespace

TEST_CASE("validation reproduces the known gyration table bit-exactly") {
  const ValidationOutcome out = validate(corpus::g8().rows());
  REQUIRE(out.ok());
  const FiniteGyrogroup& g = *out.group;

  const std::vector<int> identity_perm = {0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<int> swap_perm = {0, 1, 2, 3, 6, 7, 4, 5};  // (4,6)(5,7)
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto perm = g.gyr_permutation(a, b);
      if (kG8GyrationPattern[a][b] == 'I')
        CHECK(perm == identity_perm);
      else
        CHECK(perm == swap_perm);
    }
  }
  CHECK(cycle_notation(swap_perm) == "(4,6)(5,7)");
}

TEST_CASE("validation accepts the trivial table and plain groups") {
  CHECK(validate({{0}}).ok());

  const ValidationOutcome z4 = validate(z4_table());
  REQUIRE(z4.ok());
  // groups carry trivial gyrations
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) CHECK(z4.group->gyr(a, b, c) == c);
}

TEST_CASE("validation relabels an identity away from index 0") {
  // Z2 written with the identity at index 1
  const ValidationOutcome out = validate({{1, 0}, {0, 1}});
  REQUIRE(out.ok());
  REQUIRE(out.relabeling.has_value());
  CHECK((*out.relabeling)[1] == 0);
  CHECK(out.group->add(0, 0) == 0);
  CHECK(out.group->add(1, 1) == 0);
}

TEST_CASE("validation rejects malformed and non-gyrogroup tables") {
  CHECK_FALSE(validate({}).ok());
  CHECK(validate({{0, 1}, {1}}).report.check == "input shape");
  CHECK(validate({{0, 1}, {1, 2}}).report.check == "input range");
  // no identity at all
  CHECK(validate({{1, 0}, {1, 0}}).report.check ==
        "axiom G1 (identity)");

  // one corrupted entry in the known-good table
  auto corrupt = corpus::g8().rows();
  corrupt[1][1] = 0;  // was 3
  const ValidationOutcome out = validate(corrupt);
  REQUIRE_FALSE(out.ok());
  CHECK(out.report.check.substr(0, 8) == "axiom G2");
  CHECK_FALSE(out.report.witness.empty());

  // a quasigroup with identity but no two-sided inverse for 1
  const ValidationOutcome quasi =
      validate({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}});
  CHECK_FALSE(quasi.ok());
}

TEST_CASE("gyrocommutativity verdicts") {
  CHECK(is_gyrocommutative(corpus::g8()));
  CHECK(is_gyrocommutative(corpus::z4()));
  CHECK(is_gyrocommutative(corpus::k4()));
  CHECK_FALSE(is_gyrocommutative(corpus::s3()));
}

TEST_CASE("subgyrogroup enumeration matches the frozen scan") {
  const FiniteGyrogroup g = corpus::g8();
  const auto subs = enumerate_subgyrogroups(g);
  REQUIRE(subs.size() == kG8Subgyrogroups.size());
  for (const auto& frozen : kG8Subgyrogroups) {
    const Mask mask = mask_of(frozen.members);
    const auto it =
        std::find_if(subs.begin(), subs.end(),
                     [&](const SubgyrogroupInfo& s) { return s.members == mask; });
    REQUIRE_MESSAGE(it != subs.end(), format_set(mask));
    CHECK(it->is_L == frozen.is_L);
    CHECK(it->is_normal == frozen.normal);
    CHECK(it->criterion_used == NormalityCriterion::both);
  }
  // closure and inverse-closure hold for every reported subgyrogroup
  for (const auto& s : subs) CHECK(is_subgyrogroup(g, s.members));
}

TEST_CASE("enumeration bound requires an explicit override") {
  const FiniteGyrogroup big = corpus::g8_z2();
  CHECK_THROWS_AS(enumerate_subgyrogroups(big, 8), std::invalid_argument);
  CHECK_NOTHROW(enumerate_subgyrogroups(big, 8, true));
}

TEST_CASE("trivial gyrogroup has exactly one subgyrogroup") {
  const auto subs = enumerate_subgyrogroups(require_valid({{0}}));
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].members == 1);
}

TEST_CASE("dual normality criteria agree everywhere") {
  for (const FiniteGyrogroup& g :
       {corpus::g8(), corpus::z4(), corpus::k4(), corpus::s3()}) {
    for (const auto& sub : enumerate_subgyrogroups(g)) {
      const NormalityVerdict v = normality(g, sub.members);
      CHECK(v.agree());
    }
  }
}

TEST_CASE("normality of concrete subgyrogroups") {
  const FiniteGyrogroup g = corpus::g8();
  CHECK(is_normal(g, mask_of({0, 1, 2, 3})));
  CHECK(is_normal(g, singleton(0)));
  CHECK(is_normal(g, g.carrier_mask()));

  // a two-element subgroup of S3 is the classical non-normal example
  const FiniteGyrogroup s3 = corpus::s3();
  CHECK(is_subgyrogroup(s3, mask_of({0, 1})));
  CHECK_FALSE(is_normal(s3, mask_of({0, 1})));
}

TEST_CASE("gyration stability forces equality on subgyrogroups") {
  const FiniteGyrogroup g = corpus::g8();
  for (const auto& sub : enumerate_subgyrogroups(g))
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const Mask img = g.gyr_image(a, b, sub.members);
        if (subset(img, sub.members)) CHECK(img == sub.members);
      }
}

TEST_CASE("quotient by the index-two subgyrogroup is the two-element group") {
  const FiniteGyrogroup g = corpus::g8();
  const QuotientResult q = quotient(g, mask_of({0, 1, 2, 3}));
  CHECK(q.quotient.size() == 2);
  CHECK(q.quotient.add(1, 1) == 0);
  CHECK(q.cosets[0] == mask_of({0, 1, 2, 3}));
  CHECK(q.cosets[1] == mask_of({4, 5, 6, 7}));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      CHECK(q.projection[g.add(a, b)] ==
            q.quotient.add(q.projection[a], q.projection[b]));
  // gyrocommutativity descends
  CHECK(is_gyrocommutative(q.quotient));
}

TEST_CASE("quotient edge cases") {
  const FiniteGyrogroup g = corpus::g8();
  CHECK(quotient(g, g.carrier_mask()).quotient.size() == 1);

  const FiniteGyrogroup z4 = corpus::z4();
  const QuotientResult q = quotient(z4, mask_of({0, 2}));
  CHECK(q.quotient.size() == 2);

  CHECK_THROWS_AS(quotient(g, mask_of({0, 5})), std::invalid_argument);
  CHECK_THROWS_AS(quotient(g, mask_of({0, 1})), std::invalid_argument);
}

TEST_CASE("cyclic subgyrogroups and the worked scalar example") {
  const FiniteGyrogroup g = corpus::g8();

  const CyclicSubgyrogroup one = cyclic_subgyrogroup(g, 1);
  CHECK(one.info.members == mask_of({0, 1, 2, 3}));
  CHECK(one.order == 4);
  CHECK(one.orbit == std::vector<int>{1, 3, 2, 0});

  const CyclicSubgyrogroup zero = cyclic_subgyrogroup(g, 0);
  CHECK(zero.info.members == singleton(0));
  CHECK(zero.order == 1);

  const CyclicSubgyrogroup four = cyclic_subgyrogroup(g, 4);
  CHECK(four.info.members == mask_of({0, 3, 4, 6}));
  CHECK(four.order == 4);

  // every orbit is closed under the criterion
  for (int a = 0; a < 8; ++a)
    CHECK(is_subgyrogroup(g, cyclic_subgyrogroup(g, a).info.members));
}

TEST_CASE("direct products validate componentwise") {
  const FiniteGyrogroup p = direct_product(corpus::g8(), corpus::z2());
  CHECK(p.size() == 16);
  // gyrations act on the first component only
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      for (int c = 0; c < 16; ++c) {
        const int expected =
            corpus::g8().gyr(a / 2, b / 2, c / 2) * 2 + (c % 2);
        CHECK(p.gyr(a, b, c) == expected);
      }
  CHECK_THROWS_AS(direct_product(p, corpus::g8_z2()), std::invalid_argument);
}
