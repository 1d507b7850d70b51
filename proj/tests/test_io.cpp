#include <doctest.h>

#include "coxlat/error.hpp"
#include "coxlat/io.hpp"
#include "coxlat/verifier.hpp"

using namespace coxlat;
using io::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("integers beyond int64 round-trip as strings") {
  CHECK(io::integer_to_json(Integer(42)) == json(42));
  Integer big = 1;
  for (int i = 0; i < 80; ++i) big *= 3;
  const json j = io::integer_to_json(big);
  CHECK(j.is_string());
  CHECK(io::integer_from_json(j) == big);
  CHECK(io::integer_from_json(json(-7)) == -7);
  CHECK(code_of([] { io::integer_from_json(json("12x")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { io::integer_from_json(json(1.5)); }) == ErrorCode::InvalidInput);
}

TEST_CASE("polynomials and series serialize low degree first") {
  CHECK(io::poly_to_json(IntPoly{1, -2, 1}) == json::parse("[1,-2,1]"));
  CHECK(io::series_to_json(PowerSeries(IntVector{1, 3, 5})) == json::parse(R"({"order":2,"coeffs":[1,3,5]})"));
}

TEST_CASE("lattice JSON round trip") {
  const StarLattices s = build_star({2, 3, 5});
  const Lattice& l = s.tower.plus.lattice;
  const Lattice back = io::lattice_from_json(io::lattice_to_json(l));
  CHECK(back.labels() == l.labels());
  CHECK(back.gram() == l.gram());

  const Lattice unlabeled = io::lattice_from_json(json::parse(R"({"gram":[[-2,1],[1,-2]]})"));
  CHECK(unlabeled.labels() == std::vector<std::string>{"e1", "e2"});

  CHECK(code_of([] { io::lattice_from_json(json::parse(R"({"gram":[[-2,1]]})")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { io::lattice_from_json(json::parse(R"({"grm":[]})")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { io::lattice_from_json(json::parse(R"({"gram":[[-2,1],[2,-2]]})")); }) ==
        ErrorCode::NotSymmetric);
  CHECK(code_of([] { io::lattice_from_json(json::parse(R"({"labels":["a"],"gram":[[-2,1],[1,-2]]})")); }) ==
        ErrorCode::InvalidInput);
}

TEST_CASE("invariants JSON") {
  const auto f = io::invariants_from_json(json::parse(R"({"kind":"fuchsian","alpha":[7,2,3]})"));
  CHECK(f == OrbitInvariants::fuchsian({2, 3, 7}));
  const json full = io::invariants_to_json(f);
  CHECK(full["kind"] == "fuchsian");
  CHECK(full["alpha"] == json::parse("[2,3,7]"));
  CHECK(io::invariants_from_json(full) == f);
  CHECK(io::invariants_from_json(json::parse(R"({"g":0,"b":2,"pairs":[[5,4],[2,1],[3,2]]})")) ==
        OrbitInvariants::kleinian({2, 3, 5}));
  CHECK(code_of([] { io::invariants_from_json(json::parse(R"({"kind":"weird","alpha":[2]})")); }) ==
        ErrorCode::InvalidInput);
  CHECK(code_of([] { io::invariants_from_json(json::parse("[1,2]")); }) == ErrorCode::InvalidInput);
}

TEST_CASE("build output is accepted as a Gram document") {
  const auto inv = OrbitInvariants::fuchsian({2, 3, 7});
  const StarLattices s = build(inv);
  const json doc = io::tower_to_json(s.tower, inv);
  const auto parsed = io::gram_document_from_json(json::parse(doc.dump()));
  REQUIRE(parsed.invariants);
  CHECK(*parsed.invariants == inv);
  CHECK(parsed.minus.gram() == s.tower.minus.lattice.gram());

  const auto direct = VerificationInput::from_invariants(inv);
  const auto again = VerificationInput::from_lattice("x", parsed.minus, parsed.invariants);
  CHECK(direct.delta_minus == again.delta_minus);
  CHECK(direct.delta_zero == again.delta_zero);
  CHECK(direct.delta_plus == again.delta_plus);
}

TEST_CASE("parse_alpha_list") {
  CHECK(io::parse_alpha_list("2,3,5") == std::vector<std::int64_t>{2, 3, 5});
  CHECK(io::parse_alpha_list(" 2, 3 ,7 ") == std::vector<std::int64_t>{2, 3, 7});
  CHECK(io::parse_alpha_list("").empty());
  for (const char* bad : {"2,,3", "a", "2;3", "2,3,"}) {
    CHECK(code_of([&] { io::parse_alpha_list(bad); }) == ErrorCode::InvalidInput);
  }
}

TEST_CASE("read_json_file") {
  CHECK(code_of([] { io::read_json_file("/nonexistent/file.json"); }) == ErrorCode::InvalidInput);
  const json j = io::read_json_file(COXLAT_TEST_DATA "/f237_invariants.json");
  CHECK(io::invariants_from_json(j) == OrbitInvariants::fuchsian({2, 3, 7}));
}
