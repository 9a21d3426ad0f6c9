#include <doctest.h>

#include "support.hpp"
#include "tfstar/les.hpp"

using namespace tfstar;
using testing_support::name;
using testing_support::sorted;
using testing_support::summand_texts;

namespace {

const PrismKind T = PrismKind::transversal;
const PrismKind C = PrismKind::crystalline;

} // namespace

TEST_CASE("a_lambda_0 on the zero representation")
{
    CHECK(a_lambda_mul_even(VirtualRep({0}, 0), 0, T) == PrismScalar::phi_power(T, 0, 1));
    CHECK(a_lambda_mul_even(VirtualRep({0}, 0), 0, C) == PrismScalar::p_power(1));
    CHECK_FALSE(a_lambda_mul_even(VirtualRep({2, 1}, -1), 1, T).has_value());
    CHECK_THROWS_AS(a_lambda_mul_even(VirtualRep({0}, 0, -1), 0, T), ContractViolation);
}

TEST_CASE("a_lambda_n telescopes into single a_i steps")
{
    // a_lambda_1 = a_0 a_1: the map TF_{alpha+lambda_1} -> TF_{alpha+delta_1} -> TF_alpha.
    VirtualRep alpha({2, 1, -1, 1}, 0);
    VirtualRep mid = alpha;
    mid.dims[1] += 1;
    auto step0 = a_mul_even(mid, 0, T);
    auto step1 = a_mul_even(alpha, 1, T);
    auto total = a_lambda_mul_even(alpha, 1, T);
    REQUIRE(step0);
    REQUIRE(step1);
    REQUIRE(total);
    CHECK(*total == scalar_mul(*step0, *step1));
}

TEST_CASE("TR^1 of the zero representation")
{
    TrReport r = tr_report(VirtualRep({0}, 0), 0, T);
    CHECK(summand_texts(r.tf_plus) == sorted({"A⟨u_0⟩"}));
    CHECK(summand_texts(r.tf_alpha) == sorted({"A⟨1⟩"}));
    CHECK(summand_texts(r.cokernel) == sorted({"A/xi⟨1⟩"}));
    CHECK(r.tf_plus_odd.is_zero());
    CHECK(r.tf_alpha_odd.is_zero());
    CHECK(r.kernel.exact);
    CHECK(r.kernel.kernel.is_zero());

    TrReport c = tr_report(VirtualRep({0}, 0), 0, C);
    CHECK(c.tr_length() == 1);
}

TEST_CASE("all-zero report")
{
    TrReport r = tr_report(VirtualRep({-1, -2}, -1), 0, T);
    CHECK(r.tf_plus.is_zero());
    CHECK(r.tf_alpha.is_zero());
    CHECK(r.tf_plus_odd.is_zero());
    CHECK(r.tf_alpha_odd.is_zero());
    CHECK_FALSE(r.even_map.has_value());
    CHECK(r.cokernel.is_zero());
    CHECK(r.kernel.exact);
    CHECK(r.kernel.kernel.is_zero());
}

TEST_CASE("odd kernels")
{
    // A/p^3 -> A/p^2 with matching names has kernel p^2 A/p^3 = A/p.
    TrReport c = tr_report(VirtualRep({-1, 2, -3}, 1), 1, C);
    REQUIRE(c.kernel.exact);
    CHECK(summand_texts(c.kernel.kernel) == sorted({"A/p⟨S^-1 a_1^-3 u_2^-3 u_l2⟩"}));
    CHECK(c.kernel.coefficients == std::vector<PrismScalar>{PrismScalar::p_power(2)});
    CHECK(c.cokernel.is_zero());
    CHECK(c.tr_length() == 1);

    // A/xi^2 phi(xi)^4 -> A/xi phi(xi)^3: kernel xi phi(xi)^3 A/(...) = A/xi phi(xi).
    TrReport t = tr_report(VirtualRep({1, 3}, -1), 1, T);
    REQUIRE(t.kernel.exact);
    REQUIRE(t.kernel.kernel.summands.size() == 1);
    CHECK(t.kernel.kernel.summands[0].ideal ==
          CyclicIdeal{{scalar_mul(PrismScalar::phi_power(T, 0, 1), PrismScalar::phi_power(T, 1, 1))}});
    CHECK(t.kernel.coefficients[0] ==
          scalar_mul(PrismScalar::phi_power(T, 0, 1), PrismScalar::phi_power(T, 1, 3)));
}

TEST_CASE("non-cyclic kernels are reported as undetermined")
{
    TrReport r = tr_report(VirtualRep({0, 3, -2}, 2), 2, T);
    CHECK_FALSE(r.kernel.exact);
    CHECK(r.kernel.reason.find("not cyclic") != std::string::npos);
    CHECK(to_string(r).find("undetermined") != std::string::npos);
}

TEST_CASE("short encodings are padded to the level")
{
    TrReport r = tr_report(VirtualRep({1}, 0), 2, C);
    CHECK(r.alpha == VirtualRep({1, 0, 0}, 0));
    CHECK(r.level == 2);
}
