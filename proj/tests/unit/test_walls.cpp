#include "ellmirror/gw_counts.hpp"
#include "ellmirror/json_io.hpp"
#include "ellmirror/walls.hpp"

#include <catch_amalgamated.hpp>

using namespace ellmirror;

TEST_CASE("ray and wall validation", "[walls]") {
    CHECK_THROWS_AS((RayDirection{1, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((RayDirection{2, 2}.validate()), std::invalid_argument);
    CHECK_NOTHROW((RayDirection{3, 2}.validate()));
    CHECK(RayDirection{3, 2}.str() == "(3:2)");
    CHECK(RayDirection{-1, 1}.str() == "(-1,1)");

    WallDatum w{{1, 1}, 3, "S", 0, Rational(1)};
    CHECK_THROWS_AS(w.validate(), std::invalid_argument);
    WallDatum odd{{3, 2}, 1, "S", 0, Rational(1)};
    CHECK_THROWS_AS(odd.k_beta(), std::invalid_argument);
    WallDatum two{{1, 1}, 2, "B", 0, Rational(1)};
    CHECK(two.k_beta() == 2);
    WallDatum neg{{1, 1}, 1, "S", -1, Rational(1)};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
}

TEST_CASE("wall table needs declared tags", "[walls]") {
    WallTable t;
    t.entries.push_back({{1, 1}, 1, "S", 0, Rational(1)});
    CHECK_THROWS_AS(t.validate(), std::invalid_argument);
    t.tag_grades["S"] = 1;
    CHECK_NOTHROW(t.validate());
    CHECK(t.tags() == std::vector<std::string>{"S"});
}

TEST_CASE("tangency-one walls carry the Bryan-Leung counts", "[walls]") {
    auto t = tangency1_walls(2);
    CHECK(t.entries.size() == 12);
    CHECK(t.tag_grades.size() == 4);
    for (const auto& e : t.entries) {
        CHECK(e.ray.k == std::stoi(e.class_tag.substr(1)));
        Rational expect = e.fibre_steps == 0 ? 1 : e.fibre_steps == 1 ? 12 : 90;
        CHECK(e.count == expect);
    }
}

TEST_CASE("merged tables keep both tag sets", "[walls]") {
    std::map<ThreefoldClass, Rational> counts{{{0, 2, 0, 1}, Rational(-9)}};
    auto m = merge_walls(tangency1_walls(0), to_wall_counts(counts).tangency2);
    CHECK(m.tag_grades.at("B0") == 2);
    CHECK(m.tag_grades.at("S1") == 1);
    CHECK(m.entries.size() == 8);
    CHECK_NOTHROW(m.validate());
}

TEST_CASE("wall table serialization", "[walls][io]") {
    auto t = tangency1_walls(0);
    auto j = to_json(t);
    CHECK(j["entries"].size() == 4);
    CHECK(j["entries"][0]["ray"] == "(1,1)");
    CHECK(j["entries"][0]["count"] == "1");
    auto csv = to_csv(t);
    CHECK(csv.rfind("ray,tangency,class,fibre_steps,numerator,denominator\n\"(1,1)\",1,S1,0,1,1\n", 0) == 0);
}
