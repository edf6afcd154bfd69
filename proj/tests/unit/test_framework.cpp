#include <doctest.h>

#include "argwb/error.hpp"
#include "argwb/formats.hpp"
#include "argwb/framework.hpp"
#include "argwb/json_io.hpp"
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

}  // namespace

TEST_CASE("traffic framework has nine arguments and ten attacks") {
  const auto f = to_aaf(parse_document(ref::fixture("traffic.json")));
  CHECK(f.size() == 9);
  CHECK(f.attacks().size() == 10);
  CHECK(f.attacks("P1", "D1"));
  CHECK(f.attacks("D1", "P1"));
  CHECK(f.argument("P5").label == std::optional<std::string>("the driver was speeding"));
}

TEST_CASE("framework construction errors") {
  CHECK(code_of([] { new_framework(IdSet{"a"}, {{"a", "z"}}); }) == ErrorCode::UnknownArgumentInAttack);
  CHECK(code_of([] {
          new_framework(std::vector<Argument>{{"a", {}, {}}, {"a", {}, {}}}, {});
        }) == ErrorCode::DuplicateArgumentId);
  CHECK(code_of([] { new_framework(IdSet{"has space"}, {}); }) == ErrorCode::InvalidArgumentId);
  CHECK(code_of([] { new_framework(IdSet{"#x"}, {}); }) == ErrorCode::InvalidArgumentId);
  CHECK(code_of([] { new_framework(IdSet{""}, {}); }) == ErrorCode::InvalidArgumentId);
  CHECK(code_of([] { new_framework(IdSet{"a"}, {}).index_of("b"); }) == ErrorCode::UnknownArgument);
}

TEST_CASE("attacks are sorted and duplicates collapse") {
  const auto f = new_framework(IdSet{"b", "a"}, {{"b", "a"}, {"a", "b"}, {"b", "a"}});
  REQUIRE(f.attacks().size() == 2);
  CHECK(f.attacks()[0] == IdPair{"a", "b"});
  CHECK(f.id_at(0) == "a");
  CHECK(f.attackers_of(f.index_of("a")) == std::vector<std::size_t>{1});
}

TEST_CASE("empty framework") {
  const auto f = new_framework(IdSet{}, {});
  CHECK(f.empty());
  CHECK(f.attacks().empty());
}

TEST_CASE("id validity") {
  CHECK(is_valid_id("P1"));
  CHECK(is_valid_id("H\xC3\xA9ro"));
  CHECK_FALSE(is_valid_id("a,b"));
  CHECK_FALSE(is_valid_id("f(x)"));
  CHECK_FALSE(is_valid_id("%c"));
  CHECK_FALSE(is_valid_id("tab\tid"));
}
