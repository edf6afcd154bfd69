#include <doctest.h>

#include "argwb/error.hpp"
#include "argwb/json_io.hpp"
#include "argwb/variants.hpp"
#include "../support/reference.hpp"

using namespace argwb;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an argwb::Error");
  return ErrorCode::IoError;
}

const DerivedAttack* find(const std::vector<DerivedAttack>& v, const ArgId& a, const ArgId& t, AttackKind k) {
  for (const auto& d : v)
    if (d.attacker == a && d.target == t && d.kind == k) return &d;
  return nullptr;
}

ValuedFramework bank() { return to_vaf(parse_document(ref::fixture("bank.json"))); }
AudienceOrder bank_order() { return audience_of(parse_document(ref::fixture("bank.json")), std::nullopt); }

}  // namespace

TEST_CASE("contract derived attacks") {
  const auto b = to_baf(parse_document(ref::fixture("contract.json")));
  const auto d = derived_attacks(b);
  const auto* sup = find(d, "C5", "F1", AttackKind::Supported);
  REQUIRE(sup);
  CHECK(sup->witness == std::vector<ArgId>{"C5", "C4", "F1"});
  const auto* sec = find(d, "F3", "C1", AttackKind::Secondary);
  REQUIRE(sec);
  CHECK(sec->witness == std::vector<ArgId>{"F3", "C2", "C1"});
  CHECK(find(d, "F1", "C1", AttackKind::Direct));
  CHECK(std::is_sorted(d.begin(), d.end()));
}

TEST_CASE("contract reduction matches the closure reference") {
  const auto doc = parse_document(ref::fixture("contract.json"));
  const auto b = to_baf(doc);
  const auto f = baf_to_aaf(b);
  const ref::Rel expected = ref::baf_attacks(b.base().ids(), ref::Rel(b.base().attacks().begin(), b.base().attacks().end()),
                                             ref::Rel(b.supports().begin(), b.supports().end()));
  CHECK(ref::Rel(f.attacks().begin(), f.attacks().end()) == expected);
  CHECK(f.size() == 9);
}

TEST_CASE("bipolar validation") {
  const auto base = new_framework(IdSet{"a", "b", "c"}, {{"a", "b"}});
  CHECK(code_of([&] { BipolarFramework(base, {{"a", "b"}}); }) == ErrorCode::SupportAttackOverlap);
  CHECK(code_of([&] { BipolarFramework(base, {{"b", "c"}, {"c", "b"}}); }) == ErrorCode::CyclicSupport);
  CHECK(code_of([&] { BipolarFramework(base, {{"a", "zz"}}); }) == ErrorCode::UnknownArgument);
  CHECK(code_of([&] { BipolarFramework(base, {{"c", "c"}}); }) == ErrorCode::CyclicSupport);
}

TEST_CASE("bank defeats under the stated audience") {
  const auto defeats = vaf_defeats(bank(), bank_order());
  CHECK(defeats == std::vector<IdPair>{{"C1", "B1"}, {"C2", "B1"}, {"C5", "B4"}});
}

TEST_CASE("bank defeats under the reversed audience") {
  const auto defeats = vaf_defeats(bank(), bank_order().reversed());
  const std::set<IdPair> s(defeats.begin(), defeats.end());
  CHECK(s.count({"B4", "C5"}) == 1);
  CHECK(s.count({"C5", "B4"}) == 0);
  const auto pr = enumerate_extensions(vaf_to_aaf(bank(), bank_order().reversed()), Semantics::Preferred);
  for (const auto& e : pr) {
    CHECK(e.members.count("B4") == 1);
    CHECK(e.members.count("C5") == 0);
  }
}

TEST_CASE("bank preferred extension") {
  const auto pr = enumerate_extensions(vaf_to_aaf(bank(), bank_order()), Semantics::Preferred);
  REQUIRE(pr.size() == 1);
  CHECK(pr[0].members == IdSet{"B2", "B3", "C1", "C2", "C3", "C4", "C5"});
}

TEST_CASE("audience validation") {
  CHECK(code_of([] { AudienceOrder({"x", "x"}); }) == ErrorCode::InvalidAudience);
  CHECK(code_of([] { AudienceOrder({""}); }) == ErrorCode::InvalidAudience);
  CHECK(code_of([] { vaf_defeats(bank(), AudienceOrder({"fairness"})); }) == ErrorCode::UnrankedValue);
  const AudienceOrder o({"x", "y"});
  CHECK(o.prefers("x", "y"));
  CHECK(o.reversed().prefers("y", "x"));
}

TEST_CASE("equal values keep the attack") {
  const auto base = new_framework(IdSet{"a", "b"}, {{"a", "b"}});
  const ValuedFramework v(base, {{"a", "x"}, {"b", "x"}});
  CHECK(vaf_defeats(v, AudienceOrder({"x"})) == std::vector<IdPair>{{"a", "b"}});
}

TEST_CASE("empty supports reduce to the same framework") {
  ref::Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    const auto f = gen.af(9);
    CHECK(baf_to_aaf(BipolarFramework(f, {})) == f);
  }
}

TEST_CASE("single-value audiences keep every attack") {
  ref::Gen gen(37);
  for (int i = 0; i < 100; ++i) {
    const auto f = gen.af(9);
    std::map<ArgId, std::string> values;
    for (const auto& id : f.ids()) values[id] = "only";
    CHECK(vaf_to_aaf(ValuedFramework(f, values), AudienceOrder({"only"})) == f);
  }
}

TEST_CASE("random bipolar frameworks agree with the closure reference") {
  ref::Gen gen(41);
  for (int i = 0; i < 150; ++i) {
    const auto doc = gen.document(DocumentKind::Baf, 8);
    const auto b = to_baf(doc);
    const ref::Rel expected = ref::baf_attacks(b.base().ids(), ref::Rel(b.base().attacks().begin(), b.base().attacks().end()),
                                               ref::Rel(b.supports().begin(), b.supports().end()));
    const auto f = baf_to_aaf(b);
    CHECK(ref::Rel(f.attacks().begin(), f.attacks().end()) == expected);
  }
}

TEST_CASE("witnesses replay along declared relations") {
  ref::Gen gen(43);
  for (int i = 0; i < 150; ++i) {
    const auto b = to_baf(gen.document(DocumentKind::Baf, 8));
    const std::set<IdPair> sup(b.supports().begin(), b.supports().end());
    for (const auto& d : derived_attacks(b)) {
      REQUIRE(d.witness.size() >= 2);
      CHECK(d.witness.front() == d.attacker);
      CHECK(d.witness.back() == d.target);
      const std::size_t last = d.witness.size() - 1;
      for (std::size_t k = 0; k < last; ++k) {
        const IdPair step{d.witness[k], d.witness[k + 1]};
        const bool attack_step = d.kind == AttackKind::Direct || (d.kind == AttackKind::Supported && k == last - 1) ||
                                 (d.kind == AttackKind::Secondary && k == 0);
        if (attack_step) CHECK(b.base().attacks(step.first, step.second));
        else CHECK(sup.count(step) == 1);
      }
      if (d.kind == AttackKind::Direct) CHECK(d.witness.size() == 2);
      else CHECK(d.witness.size() >= 3);
    }
  }
}

TEST_CASE("audience changes are monotone in the defeat set") {
  // Moving the target's value to the top can only remove defeats on it.
  ref::Gen gen(47);
  for (int i = 0; i < 100; ++i) {
    const auto doc = gen.document(DocumentKind::Vaf, 8);
    const auto v = to_vaf(doc);
    const auto order = audience_of(doc, std::nullopt);
    const auto before = vaf_defeats(v, order);
    const ref::Rel expected = ref::vaf_defeats(ref::Rel(v.base().attacks().begin(), v.base().attacks().end()),
                                               v.value_of(), order.values());
    CHECK(ref::Rel(before.begin(), before.end()) == expected);
    if (order.values().empty()) continue;
    std::vector<std::string> promoted = order.values();
    std::rotate(promoted.begin(), promoted.end() - 1, promoted.end());
    const std::string& top = promoted.front();
    const auto after = vaf_defeats(v, AudienceOrder(promoted));
    const std::set<IdPair> b(before.begin(), before.end());
    for (const auto& p : after)
      if (v.value(p.second) == top) CHECK(b.count(p) == 1);
  }
}
