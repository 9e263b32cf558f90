#include <doctest.h>

#include "cathei/dsl.hpp"
#include "cathei/functor_bridge.hpp"

using namespace cathei;

namespace {
int error_line(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const SyntaxError& e) {
    return e.line();
  }
  return 0;
}

int error_column(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const SyntaxError& e) {
    return e.column();
  }
  return 0;
}
}  // namespace

TEST_CASE("parse examples") {
  Diagram a = parse_diagram("kind A\nsource F0 @ 0\n");
  REQUIRE(std::holds_alternative<LayeredDiagram>(a));
  CHECK(std::get<LayeredDiagram>(a) == LayeredDiagram{GenWord::parse("F0 @ 0"), {}});
  Diagram h = parse_diagram("kind H\nsigns ++\nbase 1\nslice cross 1\n");
  REQUIRE(std::holds_alternative<HDiagram>(h));
  CHECK(std::get<HDiagram>(h) == HDiagram{{+1, +1}, 1, {HSlice::cross(1)}});
  CHECK(std::get<HDiagram>(parse_diagram("kind H\nbase 0\nsigns\n")) == HDiagram{{}, 0, {}});
  auto c = std::get<LayeredDiagram>(parse_diagram("# cap\nkind A\nsource F0 E0 @ 1   # bottom\n\nslice cap 1\n"));
  CHECK(c.slices == std::vector<ASlice>{ASlice::cap(1)});
  auto u = std::get<LayeredDiagram>(parse_diagram("kind A\nsource @ 1\nslice cup 1 0 -\n"));
  CHECK(u.slices == std::vector<ASlice>{ASlice::cup(1, 0, -1)});
}

TEST_CASE("syntax errors carry positions") {
  std::string cap5 = "kind H\nsigns ++\nbase 1\nslice cap 5\n";
  CHECK_THROWS_AS(parse_diagram(cap5), SyntaxError);
  CHECK(error_line(cap5) == 4);
  CHECK(error_column(cap5) == 11);
  try {
    parse_diagram(cap5);
  } catch (const SyntaxError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("position out of range") != std::string::npos);
  }
  CHECK(error_line("") == 1);
  CHECK(error_column("kind B\n") == 6);
  CHECK(error_line("kind A\nsource F0\n") == 2);
  CHECK(error_line("kind A\nsource F0 @ 0\nslice twist 1\n") == 3);
  CHECK(error_column("kind A\nsource F0 @ 0\nslice cup 1 0\n") == 14);
  CHECK(error_column("kind H\nsigns +x\nbase 0\n") == 8);
  CHECK(error_line("kind H\nsigns ++\n") == 3);
  CHECK(error_line("kind H\nsigns ++\nbase 0\nslice cap 1\n") == 4);
  CHECK(error_column("kind H\nsigns +\nbase 0\nslice cross 1 2\n") == 15);
}

TEST_CASE("property: print then parse is the identity") {
  std::vector<Diagram> ds;
  for (int base = 0; base <= 2; ++base)
    for (const auto& x : std::vector<HDiagram>{{{}, base, {}},
                                               {{+1, -1}, base, {HSlice::cap(1), HSlice::cup(1, -1)}},
                                               {{+1, +1, -1}, base, {HSlice::cross(1), HSlice::cross(2), HSlice::cup(4, +1)}}})
      ds.push_back(x);
  for (const auto& w : valid_words(2, 2)) {
    ds.push_back(LayeredDiagram{w, {}});
    LayeredDiagram d{w, {ASlice::cup(1, 3, +1)}};
    if (w.size() >= 2) d.slices.push_back(ASlice::cross(2));
    ds.push_back(d);
  }
  for (const auto& d : ds) CHECK(parse_diagram(print_diagram(d)) == d);
  CHECK(print_diagram(HDiagram{{+1, -1}, 1, {HSlice::cup(2, -1)}}) == "kind H\nsigns +-\nbase 1\nslice cup 2 -\n");
}
