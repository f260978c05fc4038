#include <doctest.h>

#include <set>

#include "forbconf/claims.hpp"
#include "forbconf/error.hpp"

using namespace forbconf;

namespace {

const Claim& find_claim(const std::vector<Claim>& all, const std::string& id) {
  for (const auto& c : all)
    if (c.id == id) return c;
  FAIL("no claim " << id);
  throw 0;
}

VerifyOptions quick() {
  VerifyOptions o;
  o.sizes = {3, 4};
  o.max_contain_size = 4;
  o.search_budget = std::chrono::milliseconds(10000);
  return o;
}

}  // namespace

TEST_CASE("builtin claims have unique ids and known groups") {
  const auto all = builtin_claims();
  std::set<std::string> ids;
  for (const auto& c : all) {
    CHECK(ids.insert(c.id).second);
    CHECK((c.group == "products" || c.group == "formulas"));
  }
  CHECK(all.size() > 150);
}

TEST_CASE("product claims") {
  const auto all = builtin_claims();
  const auto o = quick();
  for (const char* id : {"avoid:131:IxI", "avoid:I3:IcxIc", "avoid:F9:IcxIcxIc", "contain:141:IxIxIc", "avoid:F12:IxIxI"}) {
    const auto r = find_claim(all, id).check(o);
    CHECK_MESSAGE(r.status == ClaimStatus::pass, id);
    if (std::string(id).rfind("avoid:", 0) == 0) CHECK(r.line() == std::string(id) + "  checked at sizes 3,4  PASS");
    else CHECK(r.checked.rfind("witnessed at size ", 0) == 0);
  }
}

TEST_CASE("F12 lies in every three-fold product with a complemented identity") {
  const auto all = builtin_claims();
  const auto o = quick();
  const auto r = find_claim(all, "avoid:F12:IxIxIc").check(o);
  CHECK(r.status == ClaimStatus::fail);
  CHECK(r.detail.find("row_map") != std::string::npos);
  CHECK(find_claim(all, "avoid:F12c:(IxIxIc)^c").check(o).status == ClaimStatus::fail);
  CHECK(find_claim(all, "allprod:F12:3fold").check(o).status == ClaimStatus::fail);
  CHECK(find_claim(all, "avoid:F12:IxIxT").check(o).status == ClaimStatus::pass);
}

TEST_CASE("fixed containments and equalities") {
  const auto all = builtin_claims();
  std::size_t seen = 0;
  for (const auto& c : all) {
    const bool fixed = c.id.rfind("equal:", 0) == 0 || (c.id.rfind("contain:", 0) == 0 && c.id.find('(') != std::string::npos);
    if (!fixed) continue;
    ++seen;
    CHECK_MESSAGE(c.check(quick()).status == ClaimStatus::pass, c.id);
  }
  CHECK(seen >= 4);
}

TEST_CASE("claims files") {
  const auto claims = parse_claims(
      "# sample\n"
      "avoid i3 I3 : IcxIc\n"
      "\n"
      "avoid fixed 1(4,1) : I(3) x I(3) x I(3)\n"
      "contain f9 F9 : IxI\n"
      "contain f9c F9 : IxIc^c\n"
      "equal f11 F11 : I(2) x I(2)\n"
      "forb q9 Q9 : m=4 value=13\n");
  REQUIRE(claims.size() == 6);
  const auto results = verify_claims(claims, quick());
  for (const auto& r : results) CHECK_MESSAGE(r.status == ClaimStatus::pass, r.line());
  CHECK(results[0].id == "i3");
  CHECK(results[4].id == "f11");

  const auto wrong = verify_claims(parse_claims("forb q9 Q9 : m=4 value=14\navoid x I3 : IxI\n"), quick());
  CHECK(wrong[0].status == ClaimStatus::fail);
  CHECK(wrong[1].status == ClaimStatus::fail);
}

TEST_CASE("claims file errors carry the line number") {
  auto code = [](const std::string& text) {
    try {
      parse_claims(text);
    } catch (const Error& e) {
      return std::make_pair(e.code(), std::string(e.what()));
    }
    return std::make_pair(ErrorCode::internal, std::string());
  };
  auto e = code("avoid a I3 : IxI\nbogus b I3 : IxI\n");
  CHECK(e.first == ErrorCode::parse_error);
  CHECK(e.second.find("line 2") != std::string::npos);
  CHECK(code("avoid a I3 IxI\n").first == ErrorCode::parse_error);
  CHECK(code("forb a Q9 : m=four\n").first == ErrorCode::parse_error);
  CHECK(code("avoid a Q(9 : IxI\n").first == ErrorCode::parse_error);
}
