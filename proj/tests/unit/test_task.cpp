#include <doctest.h>

#include "argwb/error.hpp"
#include "argwb/task.hpp"
#include "../support/reference.hpp"

using namespace argwb;

namespace {

Document load(const char* name) { return parse_document(ref::fixture(name)); }

std::string run(const char* name, const char* problem, std::optional<ArgId> query = std::nullopt) {
  return run_task(load(name), *parse_problem(problem, query)).text;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an argwb::Error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("reasoning tasks on the traffic case") {
  CHECK(run("traffic.json", "DS-PR", "P2") == "YES\n");
  CHECK(run("traffic.json", "DS-PR", "P1") == "NO\n");
  CHECK(run("traffic.json", "DC-PR", "P1") == "YES\n");
  CHECK(run("traffic.json", "SE-ST") == "[P1,P2,P3,P4,P5]\n");
  CHECK(run("traffic.json", "EE-PR") == "[P1,P2,P3,P4,P5]\n[D3,D4,P2,P5]\n");
  CHECK(run("traffic.json", "SE-GR") == "[P2,P5]\n");
}

TEST_CASE("tasks on reduced kinds") {
  CHECK(run("bank.json", "EE-PR") == "[B2,B3,C1,C2,C3,C4,C5]\n");
  CHECK(run("traffic_case.json", "EE-PR") == run("traffic.json", "EE-PR"));
  RunOptions reversed;
  reversed.audience = audience_of(load("bank.json"), std::nullopt).reversed();
  CHECK(run_task(load("bank.json"), *parse_problem("DS-PR", "B4"), reversed).text == "YES\n");
}

TEST_CASE("self-defence grounded listing") {
  const std::string out = run("selfdef.json", "EE-GR");
  CHECK(out == "A1=F\nA2=T\nA3=F\nB1=T\nB2=T\nB3=T\nB4=T\n");
  CHECK(run("selfdef.json", "DS-GR", "B1") == "YES\n");
  CHECK(run("selfdef.json", "MODELS") == "A1=F,A2=T,A3=F,B1=T,B2=T,B3=T,B4=T\n");
}

TEST_CASE("stable tasks without extensions") {
  const auto doc = parse_document(R"({"kind":"aaf","arguments":[{"id":"a"}],"attacks":[["a","a"]]})");
  CHECK(run_task(doc, *parse_problem("SE-ST")).text == "NO\n");
  CHECK(run_task(doc, *parse_problem("EE-ST")).text.empty());
  CHECK(run_task(doc, *parse_problem("DS-ST", "a")).text == "YES\n");
}

TEST_CASE("task validation") {
  CHECK(code_of([] { make_task(TaskKind::DC, Semantics::Preferred); }) == ErrorCode::IncompatibleTask);
  CHECK(code_of([] { make_task(TaskKind::EE, Semantics::Preferred, "a"); }) == ErrorCode::IncompatibleTask);
  CHECK(code_of([] { run_task(load("selfdef.json"), make_task(TaskKind::EE, Semantics::Preferred)); }) ==
        ErrorCode::IncompatibleTask);
  CHECK(code_of([] { run_task(load("traffic.json"), make_task(TaskKind::Models, Semantics::Grounded)); }) ==
        ErrorCode::IncompatibleTask);
  CHECK(code_of([] { run_task(load("traffic.json"), make_task(TaskKind::DS, Semantics::Preferred, "Q9")); }) ==
        ErrorCode::UnknownArgument);
  CHECK_FALSE(parse_problem("XX-PR").has_value());
  CHECK_FALSE(parse_problem("EE").has_value());
}

TEST_CASE("oracle cross-check passes on every fixture") {
  RunOptions opts;
  opts.oracle = true;
  for (const char* name : {"traffic.json", "traffic_printed.json", "copyright.json", "contract.json", "bank.json",
                           "traffic_case.json"})
    for (auto sem : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred, Semantics::Stable})
      CHECK_NOTHROW(run_task(load(name), make_task(TaskKind::EE, sem), opts));
  CHECK_NOTHROW(run_task(load("selfdef.json"), make_task(TaskKind::EE, Semantics::Grounded), opts));
}

TEST_CASE("structured results carry the same answer") {
  const auto out = run_task(load("traffic.json"), *parse_problem("EE-PR"));
  REQUIRE(out.result["extensions"].size() == 2);
  CHECK(out.result["extensions"][1] == Json::array({"D3", "D4", "P2", "P5"}));
  const auto ds = run_task(load("traffic.json"), *parse_problem("DS-PR", "P2"));
  CHECK(ds.result["answer"] == "YES");
}

TEST_CASE("explain payloads") {
  const Json j = explain_payload(load("copyright.json"), Semantics::Grounded, ArgId("H1"));
  CHECK(j["dispute_tree"]["proponent_wins"] == false);
  CHECK(j["dispute_tree"]["unanswered"] == Json::array({"B2"}));
  const Json adf = explain_payload(load("selfdef.json"), Semantics::Grounded, std::nullopt);
  bool found = false;
  for (const auto& a : adf["report"]["arguments"])
    if (a["id"] == "B1") {
      found = true;
      CHECK(a["truth"] == "T");
      CHECK(a["defeaters"].empty());
    }
  CHECK(found);
}
