#include <doctest.h>

#include "tfstar/rep.hpp"

using namespace tfstar;

TEST_CASE("parse_rep reads dimension sequences")
{
    VirtualRep a = parse_rep("(1,1,-1,2,-1,1;0)");
    CHECK(a.dims == std::vector<Int>{1, 1, -1, 2, -1, 1});
    CHECK(a.d_inf == 0);
    CHECK(a.shift == 0);

    VirtualRep z = parse_rep("(0;0)");
    CHECK(z.dims == std::vector<Int>{0});
    CHECK(z.d_inf == 0);

    VirtualRep b = parse_rep("(3,0,2,1,-1;-1)");
    CHECK(b.dims == std::vector<Int>{3, 0, 2, 1, -1});
    CHECK(b.d_inf == -1);

    CHECK(parse_rep(" ( 2 , -1 ; 0 ) ") == VirtualRep({2, -1}, 0));
}

TEST_CASE("parse_rep rejects malformed text with a position")
{
    CHECK_THROWS_AS(parse_rep("(;0)"), ParseError);
    CHECK_THROWS_AS(parse_rep("(1,2)"), ParseError);
    CHECK_THROWS_AS(parse_rep("(1;0"), ParseError);
    CHECK_THROWS_AS(parse_rep("(1;0)x"), ParseError);
    CHECK_THROWS_AS(parse_rep("(99999999999999999999;0)"), ParseError);
    try {
        parse_rep("(1,x;0)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("to_string is canonical")
{
    CHECK(to_string(parse_rep("( 1 , -1 ; 0 )")) == "(1,-1;0)");
    CHECK(to_string(VirtualRep({2, 1, -2, 3}, 1)) == "(2,1,-2,3;1)");
}

TEST_CASE("irreducible coefficients")
{
    // (3;1) = 2 lambda_0 + lambda_inf
    IrredDecomp d = irreducible_coeffs(VirtualRep({3}, 1));
    CHECK(d.coeffs == std::vector<Int>{2});
    CHECK(d.k_inf == 1);

    // By hand: k_inf = 0, k_1 = d_1 - k_inf = -1, k_0 = d_0 - d_1 = 2.
    IrredDecomp e = irreducible_coeffs(VirtualRep({1, -1}, 0));
    CHECK(e.coeffs == std::vector<Int>{2, -1});
    CHECK(e.k_inf == 0);
    CHECK(from_irreducible(e) == VirtualRep({1, -1}, 0));

    IrredDecomp z = irreducible_coeffs(VirtualRep({0, 0, 0}, 0));
    CHECK(z.coeffs == std::vector<Int>{0, 0, 0});
    CHECK(z.k_inf == 0);
}

TEST_CASE("fixed_part drops leading entries")
{
    VirtualRep a({2, 1, -2, 3}, 1);
    CHECK(fixed_part(a, 0) == a);
    VirtualRep f = fixed_part(a, 2);
    CHECK(f == VirtualRep({-2, 3}, 1));
    for (std::size_t k = 0; k < f.length(); ++k)
        CHECK(f.dim(k) == a.dim(k + 2));
    CHECK(fixed_part(VirtualRep({5}, 2), 0).dims[0] == 5);
    CHECK_THROWS(fixed_part(a, 4));
}

TEST_CASE("add_rep, add_lambda and pad_rep")
{
    CHECK(add_lambda(VirtualRep({0}, 0), 0) == VirtualRep({1}, 0));
    CHECK(add_lambda(VirtualRep({2, 1}, -1), 1) == VirtualRep({3, 2}, -1));
    CHECK(pad_rep(VirtualRep({1, -1}, 0), 3) == VirtualRep({1, -1, 0}, 0));
    CHECK(add_rep(VirtualRep({1, 2}, 0), VirtualRep({1, 1}, 1)) == VirtualRep({2, 3}, 1));
    // lambda_2 on a length-1 encoding pads first.
    CHECK(add_lambda(VirtualRep({4}, 1), 2) == VirtualRep({5, 2, 2}, 1));
    CHECK(lambda_rep(1) == VirtualRep({1, 1}, 0));
    CHECK(lambda_rep(0, 3) == VirtualRep({1, 0, 0}, 0));
    CHECK_THROWS_AS(pad_rep(VirtualRep({1, 2}, 0), 1), ContractViolation);
}

TEST_CASE("encoding length is part of the value")
{
    VirtualRep a({1}, 1);
    VirtualRep b({1, 1}, 1);
    CHECK_FALSE(a == b);
    CHECK(same_grading(a, b));
    CHECK_FALSE(same_grading(a, VirtualRep({1, 2}, 1)));
    VirtualRep c = a;
    c.shift = -1;
    CHECK_FALSE(same_grading(a, c));
}

TEST_CASE("constructor contracts")
{
    CHECK_THROWS_AS(VirtualRep({}, 0), ContractViolation);
    CHECK_THROWS_AS(VirtualRep({1}, 0, 2), ContractViolation);
}
