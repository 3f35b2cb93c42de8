#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "support/oracles.hpp"
#include "support/pd_builders.hpp"
#include "turaev/diagram.hpp"

using namespace turaev;
using test::braid_closure_pd;
using test::circle_count_dsu;
using test::pretzel_pd;

namespace {

const char* kTrefoilLeft = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]";

StateMask all_b_mask(const Diagram& d) {
  return static_cast<StateMask>((1u << d.crossings()) - 1);
}

}  // namespace

TEST_CASE("parse accepts the standard forms") {
  Diagram d = Diagram::parse(kTrefoilLeft);
  CHECK(d.crossings() == 3);
  CHECK(d.pd() == kTrefoilLeft);

  Diagram spaced = Diagram::parse(" X[1,4,2,5] ; X[3,6,4,1]\n; X[5,2,6,3] # trefoil\n");
  CHECK(spaced.pd() == kTrefoilLeft);

  Diagram withcomment = Diagram::parse("# nothing but a comment\n");
  CHECK(withcomment.crossings() == 0);
  CHECK(withcomment.components() == 1);
  CHECK(withcomment.free_loops() == 1);
}

TEST_CASE("parse rejects malformed codes") {
  CHECK_THROWS_AS(Diagram::parse("X[1,2,3]"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::parse("Y[1,2,3,4]"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::parse("X[1,2,3,4]"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::parse("X[0,1,0,1]"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::parse("X[1,1,1,2];X[2,3,3,4]"), std::invalid_argument);
  CHECK_THROWS_AS(Diagram::parse("X[1,4,2,5];X[3,6,4,1];X[5,2,6,3"), std::invalid_argument);
}

TEST_CASE("parse rejects unrealizable codes") {
  // each pair of the three strands would have to cross exactly once
  CHECK_THROWS_AS(Diagram::parse("X[1,4,2,3];X[3,6,4,5];X[5,2,6,1]"),
                  std::invalid_argument);
  // a single strand crossing itself once cannot close up in the plane
  CHECK_THROWS_AS(Diagram::parse("X[1,2,1,2]"), std::invalid_argument);
}

TEST_CASE("trefoil basics") {
  Diagram d = Diagram::parse(kTrefoilLeft);
  CHECK(d.components() == 1);
  CHECK(d.diagram_components() == 1);
  CHECK_FALSE(d.is_split());
  CHECK(d.writhe() == -3);
  CHECK(d.alternating());
  CHECK(d.faces() == 5);
  CHECK(d.circle_count(0) == 3);
  CHECK(d.circle_count(all_b_mask(d)) == 2);
  CHECK(d.turaev_genus() == 0);

  Diagram m = d.mirror();
  CHECK(m.writhe() == 3);
  CHECK(m.circle_count(0) == 2);
  CHECK(m.circle_count(all_b_mask(m)) == 3);
  CHECK(m.turaev_genus() == 0);

  Diagram r = d.reversed();
  CHECK(r.writhe() == -3);
  CHECK(r.circle_count(0) == 3);
}

TEST_CASE("kinks") {
  Diagram pos = Diagram::parse("X[1,1,2,2]");
  CHECK(pos.crossings() == 1);
  CHECK(pos.components() == 1);
  CHECK(pos.writhe() == 1);
  CHECK(pos.sign(0) == 1);
  CHECK(pos.circle_count(0) == 2);  // A-state
  CHECK(pos.circle_count(1) == 1);  // B-state
  CHECK(pos.r1_reducible_to_unknot());

  Diagram neg = Diagram::parse("X[1,2,2,1]");
  CHECK(neg.writhe() == -1);
  CHECK(neg.circle_count(0) == 1);
  CHECK(neg.circle_count(1) == 2);
  CHECK(neg.r1_reducible_to_unknot());

  CHECK(pos.mirror().writhe() == -1);
}

TEST_CASE("figure eight from the braid builder") {
  std::string pd = braid_closure_pd(3, {1, -2, 1, -2});
  Diagram d = Diagram::parse(pd);
  CHECK(d.crossings() == 4);
  CHECK(d.components() == 1);
  CHECK(d.writhe() == 0);
  CHECK(d.alternating());
  CHECK(d.circle_count(0) == 3);
  CHECK(d.circle_count(all_b_mask(d)) == 3);
  CHECK(d.turaev_genus() == 0);
  CHECK(d.gauss_crossing_sequence().size() == 8);
  CHECK_FALSE(d.r1_reducible_to_unknot());
}

TEST_CASE("hand-built figure eight agrees with the builder") {
  Diagram hand = Diagram::parse("X[4,1,5,2];X[2,8,3,7];X[8,5,1,6];X[6,4,7,3]");
  Diagram built = Diagram::parse(braid_closure_pd(3, {1, -2, 1, -2}));
  CHECK(hand.writhe() == built.writhe());
  CHECK(hand.alternating() == built.alternating());
  CHECK(hand.circle_count(0) == built.circle_count(0));
  CHECK(hand.circle_count(15) == built.circle_count(15));
  CHECK(hand.turaev_genus() == built.turaev_genus());
}

TEST_CASE("split diagrams") {
  Diagram d = Diagram::parse("X[1,1,2,2];X[3,3,4,4]");
  CHECK(d.crossings() == 2);
  CHECK(d.components() == 2);
  CHECK(d.diagram_components() == 2);
  CHECK(d.is_split());
  CHECK_THROWS_AS(d.turaev_genus(), std::domain_error);
  CHECK_THROWS_AS(d.oriented_circles(0), std::domain_error);

  auto pieces = d.split_pieces();
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].crossings() == 1);
  CHECK(pieces[1].crossings() == 1);
  CHECK_FALSE(pieces[0].is_split());
}

TEST_CASE("state circle counts match the union-find oracle") {
  std::vector<std::string> codes = {
      kTrefoilLeft,
      "X[1,1,2,2]",
      "X[1,2,2,1]",
      "X[1,1,2,2];X[3,3,4,4]",
      braid_closure_pd(3, {1, -2, 1, -2}),
      braid_closure_pd(2, {1, 1}),
      braid_closure_pd(2, {1, 1, 1, 1, 1}),
      braid_closure_pd(3, {-1, -1, 2, -1, 2, 2}),
      pretzel_pd({3, 1, 1}),
      pretzel_pd({3, -2, 3}),
  };
  for (const auto& code : codes) {
    CAPTURE(code);
    Diagram d = Diagram::parse(code);
    for (StateMask s = 0; s < (1u << d.crossings()); ++s)
      CHECK(d.circle_count(s) == circle_count_dsu(d, s));
  }
}

TEST_CASE("toggling one smoothing changes the circle count by one") {
  for (const auto& code : {std::string(kTrefoilLeft),
                           braid_closure_pd(3, {1, -2, 1, -2}),
                           pretzel_pd({3, -2, 3})}) {
    Diagram d = Diagram::parse(code);
    for (StateMask s = 0; s < (1u << d.crossings()); ++s)
      for (int x = 0; x < d.crossings(); ++x) {
        int before = d.circle_count(s);
        int after = d.circle_count(s ^ (1u << x));
        CHECK(std::abs(before - after) == 1);
      }
  }
}

TEST_CASE("state surface genus is a nonnegative integer on all states") {
  for (const auto& code : {std::string(kTrefoilLeft),
                           braid_closure_pd(3, {1, -2, 1, -2}),
                           pretzel_pd({3, -2, 3}),
                           braid_closure_pd(3, {1, 2, 1, 2, 1, 2, 1, 2})}) {
    Diagram d = Diagram::parse(code);
    for (StateMask s = 0; s < (1u << d.crossings()); ++s) {
      int g = d.state_surface_genus(s);  // throws if fractional
      CHECK(g >= 0);
      CHECK(g == d.state_surface_genus(all_b_mask(d) & ~s));
    }
  }
}

TEST_CASE("smoothing crossings one by one reproduces the circle count") {
  for (const auto& code : {std::string(kTrefoilLeft),
                           std::string("X[1,1,2,2]"),
                           braid_closure_pd(3, {1, -2, 1, -2}),
                           pretzel_pd({3, 1, 1})}) {
    Diagram d = Diagram::parse(code);
    for (StateMask s = 0; s < (1u << d.crossings()); ++s) {
      Diagram cur = d;
      for (int x = 0; x < d.crossings(); ++x) {
        Smoothing sm = (s >> x) & 1 ? Smoothing::B : Smoothing::A;
        cur = cur.smoothed(0, sm);
      }
      CHECK(cur.crossings() == 0);
      CHECK(cur.free_loops() == d.circle_count(s));
    }
  }
}

TEST_CASE("oriented circles cover each state and keep one color left") {
  for (const auto& code : {std::string(kTrefoilLeft),
                           braid_closure_pd(3, {1, -2, 1, -2}),
                           pretzel_pd({3, -2, 3})}) {
    Diagram d = Diagram::parse(code);
    for (StateMask s = 0; s < (1u << d.crossings()); ++s) {
      auto circles = d.oriented_circles(s);
      CHECK(static_cast<int>(circles.size()) == d.circle_count(s));
      std::set<int> ports_seen;
      for (const auto& c : circles)
        for (int p : c) {
          CHECK(ports_seen.insert(p).second);
          CHECK(d.face_black(d.port_face(p)));
        }
      CHECK(ports_seen.size() == static_cast<std::size_t>(2 * d.crossings()));
    }
  }
}

TEST_CASE("faces and checkerboard structure of the trefoil") {
  Diagram d = Diagram::parse(kTrefoilLeft);
  int black = 0, white = 0;
  for (int f = 0; f < d.faces(); ++f) (d.face_black(f) ? black : white)++;
  CHECK(black + white == 5);
  CHECK(std::min(black, white) == 2);
  CHECK(std::max(black, white) == 3);
  CHECK_FALSE(d.face_black(d.outer_face()));

  CHECK_THROWS_AS(d.set_outer_face(99), std::invalid_argument);
  int old_outer = d.outer_face();
  // moving the outer face into the other class flips every face's blackness
  for (int f = 0; f < d.faces(); ++f) {
    if (d.face_color(f) != d.face_color(old_outer)) {
      d.set_outer_face(f);
      break;
    }
  }
  CHECK(d.face_black(old_outer));
}

TEST_CASE("gauss sequence and reducibility") {
  Diagram tref = Diagram::parse(kTrefoilLeft);
  auto seq = tref.gauss_crossing_sequence();
  REQUIRE(seq.size() == 6);
  for (int x = 0; x < 3; ++x)
    CHECK(std::count(seq.begin(), seq.end(), x) == 2);
  CHECK_FALSE(tref.r1_reducible_to_unknot());

  CHECK(Diagram::parse("").r1_reducible_to_unknot());
  CHECK(Diagram::parse("X[1,1,2,2]").r1_reducible_to_unknot());

  Diagram hopf = Diagram::parse(braid_closure_pd(2, {1, 1}));
  CHECK(hopf.components() == 2);
  CHECK_FALSE(hopf.r1_reducible_to_unknot());
  CHECK_THROWS_AS(hopf.gauss_crossing_sequence(), std::domain_error);
}

TEST_CASE("builders produce sensible standard diagrams") {
  CHECK(braid_closure_pd(2, {1}) == "X[1,1,2,2]");

  Diagram right_tref = Diagram::parse(braid_closure_pd(2, {1, 1, 1}));
  CHECK(right_tref.writhe() == 3);
  CHECK(right_tref.alternating());
  CHECK(right_tref.circle_count(0) == 2);

  Diagram hopf = Diagram::parse(braid_closure_pd(2, {1, 1}));
  CHECK(hopf.crossings() == 2);
  CHECK(hopf.writhe() == 2);
  CHECK(hopf.components() == 2);

  Diagram p511 = Diagram::parse(pretzel_pd({5, 1, 1}));
  CHECK(p511.crossings() == 7);
  CHECK(p511.components() == 1);
  CHECK(p511.alternating());

  Diagram p311 = Diagram::parse(pretzel_pd({3, 1, 1}));
  CHECK(p311.crossings() == 5);
  CHECK(p311.components() == 1);
  CHECK(p311.alternating());

  Diagram p3m23 = Diagram::parse(pretzel_pd({3, -2, 3}));
  CHECK(p3m23.crossings() == 8);
  CHECK(p3m23.components() == 1);
  CHECK_FALSE(p3m23.alternating());
  CHECK(p3m23.turaev_genus() == 1);

  Diagram p5m23 = Diagram::parse(pretzel_pd({5, -2, 3}));
  CHECK(p5m23.crossings() == 10);
  CHECK(p5m23.components() == 1);
  CHECK_FALSE(p5m23.alternating());
  CHECK(p5m23.turaev_genus() == 1);

  Diagram t34 = Diagram::parse(braid_closure_pd(3, {1, 2, 1, 2, 1, 2, 1, 2}));
  CHECK(t34.crossings() == 8);
  CHECK(t34.components() == 1);
  CHECK(t34.writhe() == 8);
  CHECK_FALSE(t34.alternating());
}

TEST_CASE("alternating diagrams have turaev genus zero") {
  for (const auto& code : {std::string(kTrefoilLeft),
                           braid_closure_pd(3, {1, -2, 1, -2}),
                           pretzel_pd({3, 1, 1}),
                           pretzel_pd({3, 2, 1}),
                           pretzel_pd({4, 1, 1}),
                           braid_closure_pd(2, {1, 1, 1, 1, 1})}) {
    Diagram d = Diagram::parse(code);
    CHECK(d.alternating());
    CHECK(d.turaev_genus() == 0);
  }
}

TEST_CASE("reordering crossings preserves invariants") {
  Diagram d = Diagram::parse(kTrefoilLeft);
  Diagram r = d.reordered({2, 0, 1});
  CHECK(r.writhe() == d.writhe());
  CHECK(r.turaev_genus() == d.turaev_genus());
  CHECK(r.arc_at(0, 0) == d.arc_at(2, 0));
  CHECK_THROWS_AS(d.reordered({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(d.reordered({0, 1}), std::invalid_argument);
}
