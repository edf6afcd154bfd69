#include <doctest.h>

#include "argwb/error.hpp"
#include "argwb/json_io.hpp"
#include "argwb/toulmin.hpp"
#include "../support/reference.hpp"

using namespace argwb;

namespace {

ToulminArgument red_light() {
  ToulminArgument t;
  t.id = "D1";
  t.claim = "the accident is the pedestrian's fault";
  t.premises = {"the pedestrian crossed with a red light"};
  t.warrant = "pedestrians must not cross on a red light";
  t.backing = "the traffic rule forbidding crossing on red";
  t.rebuttals = {"P2"};
  return t;
}

ToulminArgument child() {
  ToulminArgument t;
  t.id = "P2";
  t.claim = "the pedestrian is a child who does not understand traffic rules";
  t.premises = {"the pedestrian is eight years old"};
  t.warrant = "children are not held to adult standards";
  return t;
}

}  // namespace

TEST_CASE("a rebutted claim flattens to one attack") {
  const CaseFile c{{red_light(), child()}, {{"D1", "driver"}, {"P2", "pedestrian"}}};
  const auto r = flatten_toulmin(c, false);
  CHECK(r.excluded.empty());
  CHECK(r.framework.size() == 2);
  CHECK(r.framework.attacks() == std::vector<IdPair>{{"P2", "D1"}});
  CHECK(r.framework.argument("D1").label == std::optional<std::string>("the accident is the pedestrian's fault"));
  CHECK(r.framework.argument("D1").metadata.at("party") == "driver");
}

TEST_CASE("backing requirement excludes the unbacked argument and its attacks") {
  const CaseFile c{{red_light(), child()}, {}};
  const auto r = flatten_toulmin(c, true);
  REQUIRE(r.excluded.size() == 1);
  CHECK(r.excluded[0].kind == ViolationKind::MissingBacking);
  CHECK(r.excluded[0].id == "P2");
  CHECK(r.framework.ids() == IdSet{"D1"});
  CHECK(r.framework.attacks().empty());
}

TEST_CASE("missing warrant and empty premises exclude") {
  auto a = red_light();
  a.warrant.clear();
  auto b = child();
  b.premises.clear();
  const auto v = validate_toulmin(CaseFile{{a, b}, {}}, false);
  REQUIRE(v.size() == 2);
  CHECK(v[0].kind == ViolationKind::MissingWarrant);
  CHECK(v[1].kind == ViolationKind::EmptyPremises);
  CHECK(flatten_toulmin(CaseFile{{a, b}, {}}, false).framework.empty());
}

TEST_CASE("structural problems make the case invalid") {
  auto a = red_light();
  a.rebuttals = {"X9"};
  try {
    flatten_toulmin(CaseFile{{a}, {}}, false);
    FAIL("expected InvalidCase");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCase);
  }
  CHECK_THROWS_AS(flatten_toulmin(CaseFile{{child(), child()}, {}}, false), Error);
}

TEST_CASE("traffic case file reproduces the traffic attack relation") {
  const auto c = to_case(parse_document(ref::fixture("traffic_case.json")));
  const auto flat = flatten_toulmin(c, true);
  CHECK(flat.excluded.empty());
  const auto traffic = to_aaf(parse_document(ref::fixture("traffic.json")));
  CHECK(flat.framework.attacks() == traffic.attacks());
  CHECK(flat.framework.ids() == traffic.ids());
}

TEST_CASE("frameworks survive a round trip through case files") {
  ref::Gen gen(79);
  for (int i = 0; i < 100; ++i) {
    const auto f = gen.af(9);
    const auto back = flatten_toulmin(case_from_framework(f), false).framework;
    CHECK(back.ids() == f.ids());
    CHECK(back.attacks() == f.attacks());
  }
}
