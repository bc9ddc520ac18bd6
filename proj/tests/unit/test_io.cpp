#include <doctest.h>

#include "wha/groupoid.hpp"
#include "wha/io.hpp"
#include "wha/tensor.hpp"

#include <filesystem>

using namespace wha;

namespace {

void same_spec(const WeakHopfSpec& a, const WeakHopfSpec& b) {
  CHECK(a.name == b.name);
  CHECK(a.algebra == b.algebra);
  CHECK(a.algebra.basis_names() == b.algebra.basis_names());
  CHECK(a.coproduct == b.coproduct);
  CHECK(a.counit == b.counit);
  CHECK(a.antipode == b.antipode);
  CHECK(a.declared_idempotent == b.declared_idempotent);
  CHECK(a.declared_antipodal_b.has_value() == b.declared_antipodal_b.has_value());
}

}  // namespace

TEST_CASE("weak Hopf specs round-trip byte-identically") {
  std::vector<WeakHopfSpec> specs{
      groupoid_algebra(FiniteGroupoid::pair(2), "P2"),
      groupoid_function_algebra(FiniteGroupoid::cyclic(3), "fun-Z3"),
      random_instance(4).data.spec,
  };
  WeakHopfSpec with_extras = specs[0];
  with_extras.declared_idempotent = with_extras.delta(with_extras.algebra.one());
  with_extras.declared_antipodal_b = with_extras.antipode;
  specs.push_back(with_extras);
  for (const auto& s : specs) {
    CAPTURE(s.name);
    std::string text = io::write_weak_hopf(s);
    WeakHopfSpec back = io::read_weak_hopf(text);
    same_spec(s, back);
    CHECK(io::write_weak_hopf(back) == text);
  }
}

TEST_CASE("groupoid files load as convolution algebras") {
  FiniteGroupoid g = FiniteGroupoid::disjoint_union(FiniteGroupoid::cyclic(2), FiniteGroupoid::pair(2));
  std::string text = io::write_groupoid(g);
  FiniteGroupoid back = io::read_groupoid(text);
  CHECK(back.size() == g.size());
  CHECK(io::write_groupoid(back) == text);
  WeakHopfSpec s = io::read_weak_hopf(text, "Z2+P2");
  CHECK(s.coproduct == groupoid_algebra(g).coproduct);
}

TEST_CASE("twist files resolve their spec relative to the file") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "wha_io_test";
  fs::create_directories(dir);
  WeakHopfSpec p2 = groupoid_algebra(FiniteGroupoid::pair(2), "P2");
  Vec u = io::parse_vector("2,0,0,1", 4), v = io::parse_vector("1/2,0,0,1", 4);
  io::write_file(dir / "p2.json", io::write_weak_hopf(p2));
  io::write_file(dir / "tw.json", io::write_twist(p2, u, v, "p2.json"));
  io::write_file(dir / "inline.json", io::write_twist(p2, u, v));
  for (const char* f : {"tw.json", "inline.json"}) {
    io::Loaded in = io::load(dir / f);
    REQUIRE(in.u.has_value());
    CHECK(*in.u == u);
    CHECK(*in.v == v);
    same_spec(in.spec, p2);
  }
  fs::remove_all(dir);
}

TEST_CASE("vectors parse Gaussian rationals in basis order") {
  Vec x = io::parse_vector("1/2+1*i, 0,-3", 3);
  CHECK(x[0] == Scalar(mpq_class(1, 2), mpq_class(1)));
  CHECK(x[2] == Scalar(-3));
  CHECK(io::parse_vector(io::format_vector(x), 3) == x);
  CHECK_THROWS_AS(io::parse_vector("1,2", 3), io::ParseError);
  CHECK_THROWS_AS(io::parse_vector("1,x,2", 3), io::ParseError);
}

TEST_CASE("malformed input raises ParseError") {
  std::string good = io::write_weak_hopf(groupoid_algebra(FiniteGroupoid::pair(2), "P2"));
  auto edit = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
  };
  CHECK_THROWS_AS(io::read_weak_hopf("{"), io::ParseError);
  CHECK_THROWS_AS(io::read_weak_hopf("[]"), io::ParseError);
  CHECK_THROWS_AS(io::read_weak_hopf(edit("\"format_version\": 1", "\"format_version\": 2")), io::ParseError);
  CHECK_THROWS_AS(io::read_weak_hopf(edit("\"kind\": \"weak-hopf\"", "\"kind\": \"hopf\"")), io::ParseError);
  CHECK_THROWS_AS(io::read_weak_hopf(edit("\"dim\": 4", "\"dim\": 5")), io::ParseError);
  CHECK_THROWS_AS(io::read_weak_hopf(edit("\"coproduct\"", "\"coproducts\"")), io::ParseError);
  CHECK_THROWS_AS(io::load("/nonexistent/spec.json"), io::ParseError);
}
