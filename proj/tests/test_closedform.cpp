#include <doctest.h>

#include "support.hpp"
#include "tfstar/closedform.hpp"

using namespace tfstar;
using testing_support::sorted;
using testing_support::summand_texts;

namespace {

const PrismKind T = PrismKind::transversal;
const PrismKind C = PrismKind::crystalline;

} // namespace

TEST_CASE("e_sequence")
{
    CHECK(e_sequence(VirtualRep({1, 1, -1, 2, -1, 1}, 0)).e == std::vector<Int>{0, 1, -1, 1, -1, 0});
    ESequence es = e_sequence(VirtualRep({2, -1}, 0));
    CHECK(es.s == std::vector<Int>{1, 0});
    CHECK(es.e == std::vector<Int>{1, -1});
    ESequence z = e_sequence(VirtualRep({0, 0, 0}, 0));
    CHECK(z.e == std::vector<Int>{0, 0, 0});
    CHECK(z.s == std::vector<Int>{0, 0, 0});
}

TEST_CASE("transversal subsequences")
{
    using Pairs = std::vector<std::pair<Int, Int>>;
    CHECK(subsequences_transversal(VirtualRep({1, 1, -1, 2, -1, 1}, 0)) == Pairs{{0, 1}, {3, 3}});
    CHECK(subsequences_transversal(VirtualRep({2, 1, -1, 1, 0, 2}, -1)) == Pairs{{0, 1}, {3, 5}});
    CHECK(subsequences_transversal(VirtualRep({-1, -2, -3}, 0)).empty());
    CHECK(subsequences_transversal(VirtualRep({-1, -2, -3}, -1)).empty());
}

TEST_CASE("crystalline chains")
{
    using Chains = std::vector<std::vector<Int>>;
    CHECK(chains_crystalline(VirtualRep({2, 1, -1, 1}, -1)) == Chains{{0, 1}, {3}});
    Chains beta = chains_crystalline(VirtualRep({2, -1, 2, -1, 1}, -1));
    CHECK(beta == Chains{{0, 4}, {2}});
    CHECK(chains_crystalline(VirtualRep({0, -1, -4}, -2)).empty());
    // Nearest-neighbour pairing: 0 pairs with nothing, 2 with 3.
    CHECK(chains_crystalline(VirtualRep({1, -2, 2, 1}, -1)) == Chains{{0}, {2, 3}});
}

TEST_CASE("closed_tf on the worked examples")
{
    VirtualRep alpha({1, 1, -1, 2, -1, 1}, 0, -1);
    GradedGroup g = closed_tf(alpha, T);
    CHECK(summand_texts(g) ==
          sorted({"A/(xi*phi(xi), phi^2(xi)*phi^4(xi))⟨S^-1 a_0^-1 a_1^-1 u_2^-1 u_3^2 u_4^-1 u_5⟩",
                  "A/(phi^3(xi)^2, phi^4(xi))⟨S^-1 a_0^-1 a_1^-1 a_2 a_3^-2 u_4^-1 u_5⟩"}));
    CHECK(closed_tf(VirtualRep({2, 1, -1, 1, 0, 2}, -1, 0), T).is_zero());
    CHECK(summand_texts(closed_tf(VirtualRep({1, 1, -1, 2, -1, 1}, 0), C)) ==
          sorted({"A⟨a_1^-1 a_2 a_3^-1 a_4 u_0 u_3 u_5⟩"}));
}

TEST_CASE("closed_tf for (2,-1;0) crystalline")
{
    CHECK(summand_texts(closed_tf(VirtualRep({2, -1}, 0, 0), C)) == sorted({"A⟨a_0^-1 a_1 u_0⟩"}));
    CHECK(summand_texts(closed_tf(VirtualRep({2, -1}, 0, -1), C)) == sorted({"A/p⟨S^-1 a_0^-2 u_1^-1⟩"}));
}

TEST_CASE("runs of zeros contribute nothing")
{
    CHECK(closed_tf(VirtualRep({0, 0, -1}, -1, -1), T).is_zero());
    CHECK(closed_tf(VirtualRep({0, -1, 0}, 0, -1), T).is_zero());
}

TEST_CASE("free generator shape in the transversal case")
{
    GradedGroup g = closed_tf(VirtualRep({3, -2, 0, 1}, 2), T);
    REQUIRE(g.summands.size() == 1);
    const GoldMonomial& m = g.summands[0].generator;
    for (auto& [i, k] : m.a) {
        CHECK(k > 0);
        CHECK(m.u_exp(i) == 0);
    }
    for (auto& [i, k] : m.u)
        CHECK(k > 0);
    CHECK(m.ulam_exp(3) == 2);
}
