#include <doctest.h>

#include "sandpile/poly.hpp"

using namespace sandpile;

TEST_CASE("UniPoly canonical form and arithmetic") {
    UniPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(UniPoly({Int(1), Int(0), Int(0)}).degree() == 0);  // trailing zeros trimmed

    UniPoly p = UniPoly::y() + UniPoly::constant(2);  // y + 2
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(5) == 0);
    CHECK(p.eval(3) == 5);

    UniPoly q = p * p;  // y^2 + 4y + 4
    CHECK(q == UniPoly({Int(4), Int(4), Int(1)}));
    CHECK(q.shifted(2) == UniPoly({Int(0), Int(0), Int(4), Int(4), Int(1)}));

    CHECK((p + UniPoly::constant(-2)) == UniPoly::y());
    CHECK((zero * p).is_zero());
}

TEST_CASE("UniPoly coefficientwise comparison") {
    UniPoly a({Int(1), Int(2)});
    UniPoly b({Int(1), Int(2), Int(3)});
    CHECK(leq_coeffwise(a, b));
    CHECK_FALSE(leq_coeffwise(b, a));
    CHECK(leq_coeffwise(a, a));
}

TEST_CASE("UniPoly rendering") {
    CHECK(UniPoly{}.to_string() == "0");
    CHECK(UniPoly({Int(4), Int(3), Int(1)}).to_string() == "y^2+3y+4");
    CHECK(UniPoly({Int(4), Int(3), Int(1)}).coeff_list() == "4 3 1");
    CHECK(UniPoly({Int(0), Int(1)}).to_string() == "y");
}

TEST_CASE("BiPoly basics") {
    BiPoly t = BiPoly::x() + BiPoly::y();
    t += BiPoly::x() * BiPoly::x();  // x^2 + x + y
    CHECK(t.coeff(2, 0) == 1);
    CHECK(t.coeff(1, 0) == 1);
    CHECK(t.coeff(0, 1) == 1);
    CHECK(t.eval(1, 1) == 3);
    CHECK(t.at_x1() == UniPoly({Int(2), Int(1)}));
    CHECK(t.to_string() == "(0,1):1 (1,0):1 (2,0):1");

    BiPoly cancel = t;
    cancel.add(2, 0, Int(-1));
    CHECK(cancel.coeff(2, 0) == 0);
    CHECK(cancel.terms().size() == 2);  // zero entries are dropped

    CHECK((t * BiPoly::one()) == t);
    CHECK(t.times_y().coeff(0, 2) == 1);
    CHECK(t.times_x().coeff(3, 0) == 1);
}
