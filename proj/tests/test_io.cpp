#include <doctest.h>

#include <sstream>

#include "ekrshift/generators.hpp"
#include "ekrshift/io.hpp"
#include "helpers.hpp"

using namespace ekrshift;
using namespace ekrshift::testing;

TEST_CASE("parsing a bare facet list") {
    std::istringstream in("1 2\n3\n");
    auto c = parse_complex(in);
    CHECK(c.labels() == std::vector<std::string>{"1", "2", "3"});
    CHECK(face_set(c) == std::set<Mask>{0, m({1}), m({2}), m({3}), m({1, 2})});
}

TEST_CASE("the example fixture file") {
    auto c = parse_complex_file(std::string(FIXTURE_DIR) + "/three_near_cone.txt");
    CHECK(c == three_near_cone());
    CHECK(c.f_vector().counts == std::vector<long>{1, 6, 13, 4, 1});
}

TEST_CASE("declared header fixes the order even for unused vertices") {
    std::istringstream in("vertices: a b c\na c\n");
    auto c = parse_complex(in);
    CHECK(c.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(c.contains(0b101));
    CHECK(c.used_vertices() == 0b101);  // b occurs in no face
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream in("# a comment\n\nvertices: x y\nx y # trailing\n");
    auto c = parse_complex(in);
    CHECK(c.f_vector().counts == std::vector<long>{1, 2, 1});
}

TEST_CASE("parse errors carry line numbers") {
    {
        std::istringstream in("vertices: a b\na q\n");
        CHECK_THROWS_WITH_AS(parse_complex(in),
                             "line 2: vertex 'q' is absent from the declared header",
                             std::runtime_error);
    }
    {
        std::istringstream in("vertices: a a\n");
        CHECK_THROWS_WITH_AS(parse_complex(in), "line 1: duplicate vertex label 'a'",
                             std::runtime_error);
    }
    {
        std::istringstream in("# nothing\n");
        CHECK_THROWS_AS(parse_complex(in), std::runtime_error);
    }
}

TEST_CASE("serialize/parse round trip") {
    Rng rng(23);
    for (int round = 0; round < 20; ++round) {
        auto c = random_complex(5, rng);
        std::istringstream in(to_facet_list(c));
        CHECK(parse_complex(in) == c);
    }
}

TEST_CASE("digest is stable and discriminating") {
    CHECK(digest(hollow_triangle()) == digest(hollow_triangle()));
    CHECK(digest(hollow_triangle()) != digest(full_simplex(3)));
    CHECK(digest(hollow_triangle()).size() == 16);
}
