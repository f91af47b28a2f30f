#include "kaug/errors.hpp"
#include "kaug/simplex.hpp"

#include <doctest.h>

using namespace kaug;

TEST_CASE("no rows: all-zero optimum") {
    BoundedSimplex s({Rational(3), Rational(1)}, {Rational(1), Rational(1)});
    s.reoptimize();
    CHECK(s.solution()[0] == 0);
    CHECK(s.solution()[1] == 0);
    CHECK(s.objective() == 0);
}

TEST_CASE("single covering row prefers the cheap variable") {
    BoundedSimplex s({Rational(3), Rational(1)}, {Rational(1), Rational(1)});
    s.add_row({{0, Rational(1)}, {1, Rational(1)}}, Rational(1));
    s.reoptimize();
    CHECK(s.objective() == 1);
    CHECK(s.solution()[0] == 0);
    CHECK(s.solution()[1] == 1);
}

TEST_CASE("row demanding more than one unit uses upper bounds") {
    BoundedSimplex s({Rational(3), Rational(1)}, {Rational(1), Rational(1)});
    s.add_row({{0, Rational(1)}, {1, Rational(1)}}, make_rational(3, 2));
    s.reoptimize();
    CHECK(s.objective() == make_rational(1, 2) * 3 + 1);  // x0 = 1/2, x1 = 1
    CHECK(s.solution()[0] == make_rational(1, 2));
    CHECK(s.solution()[1] == 1);
}

TEST_CASE("incremental rows keep earlier ones satisfied") {
    BoundedSimplex s({Rational(2), Rational(5), Rational(1)},
                     {Rational(1), Rational(1), Rational(1)});
    s.add_row({{0, Rational(1)}, {1, Rational(1)}}, Rational(1));
    s.reoptimize();
    CHECK(s.objective() == 2);
    s.add_row({{1, Rational(1)}, {2, Rational(1)}}, Rational(1));
    s.reoptimize();
    CHECK(s.objective() == 3);  // x0 = 1, x2 = 1
    s.add_row({{1, Rational(1)}}, Rational(1));
    s.reoptimize();
    CHECK(s.objective() == 5);  // x1 forced to 1, x0 and x2 free again
    CHECK(s.solution()[1] == 1);
}

TEST_CASE("infeasible rows are detected") {
    BoundedSimplex s({Rational(1)}, {Rational(1)});
    s.add_row({{0, Rational(1)}}, Rational(2));  // x0 <= 1 cannot reach 2
    CHECK_THROWS_AS(s.reoptimize(), InfeasibleError);
}

TEST_CASE("fractional vertex counting") {
    BoundedSimplex s({Rational(1), Rational(1)}, {Rational(1), Rational(1)});
    s.add_row({{0, Rational(2)}, {1, Rational(2)}}, Rational(1));
    s.reoptimize();
    CHECK(s.objective() == make_rational(1, 2));
    CHECK(s.fractional_count() <= s.row_count());
}

TEST_CASE("degenerate ties terminate") {
    BoundedSimplex s({Rational(1), Rational(1), Rational(1), Rational(1)},
                     {Rational(1), Rational(1), Rational(1), Rational(1)});
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            s.add_row({{i, Rational(1)}, {j, Rational(1)}}, Rational(1));
    s.reoptimize();
    CHECK(s.objective() == 2);  // pairwise coverage needs total weight 2
}
