#include <doctest.h>

#include <sstream>

#include "matdom/generate.hpp"
#include "matdom/io.hpp"

using namespace matdom;

TEST_CASE("instance text round-trips") {
    gen::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Instance inst = gen::random_instance(
            {rng.uniform_int(1, 8), rng.uniform_int(1, 8), rng.uniform_int(0, 100) / 100.0,
             rng.next_u64()});
        std::istringstream in(io::instance_to_text(inst));
        CHECK(io::read_instance(in) == inst);
    }
}

TEST_CASE("instance reader skips comments and validates shape") {
    std::istringstream ok("# generated grid\n2 3\n# rows follow\n101\n010\n");
    const Instance inst = io::read_instance(ok);
    CHECK(inst.rows() == 2);
    CHECK(inst.cols() == 3);
    CHECK(inst.at(0, 0) == 1);
    CHECK(inst.at(1, 1) == 1);

    std::istringstream bad_header("2\n11\n11\n");
    CHECK_THROWS_AS(io::read_instance(bad_header), ValidationError);

    std::istringstream short_row("2 2\n11\n1\n");
    CHECK_THROWS_AS(io::read_instance(short_row), ValidationError);

    std::istringstream bad_char("1 2\n1x\n");
    CHECK_THROWS_AS(io::read_instance(bad_char), ValidationError);

    std::istringstream missing_rows("3 2\n11\n");
    CHECK_THROWS_AS(io::read_instance(missing_rows), ValidationError);

    std::istringstream trailing("1 1\n1\nextra\n");
    CHECK_THROWS_AS(io::read_instance(trailing), ValidationError);
}

TEST_CASE("placement text round-trips in canonical order") {
    const Placement p({{2, 1}, {0, 3}, {1, 0}});
    CHECK(io::placement_to_text(p) == "0 3\n1 0\n2 1\n");
    std::istringstream in(io::placement_to_text(p));
    CHECK(io::read_placement(in) == p);

    std::istringstream with_noise("# cert\n\n1 2\n0 0\n");
    CHECK(io::read_placement(with_noise) == Placement({{0, 0}, {1, 2}}));

    std::istringstream dup("0 0\n0 0\n");
    CHECK_THROWS_AS(io::read_placement(dup), ValidationError);

    std::istringstream malformed("0\n");
    CHECK_THROWS_AS(io::read_placement(malformed), ValidationError);
}
