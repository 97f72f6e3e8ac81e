#include <doctest.h>

#include "varkit/ktheory.hpp"
#include "varkit/numeric.hpp"

using namespace varkit;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
    IntMatrix m;
    for (auto& r : rows) {
        m.emplace_back(r.begin(), r.end());
    }
    return m;
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3)") {
    // oracle: d1 = gcd of all entries = 1, d1*d2 = |det| = 6
    SmithNormalForm snf = smith_normal_form(mat({{2, 0}, {0, 3}}));
    CHECK(snf.diag[0][0] == 1);
    CHECK(snf.diag[1][1] == 6);
    CHECK(snf.invariant_factors() == std::vector<Integer>{6});
    CHECK(verify_certificate(mat({{2, 0}, {0, 3}}), snf));
}

TEST_CASE("smith normal form of the identity and of a single entry") {
    SmithNormalForm id3 = smith_normal_form(identity_matrix(3));
    for (int i = 0; i < 3; ++i)
        CHECK(id3.diag[i][i] == 1);
    CHECK(id3.invariant_factors().empty());
    SmithNormalForm one = smith_normal_form(mat({{2}}));
    CHECK(one.diag[0][0] == 2);
    CHECK(one.invariant_factors() == std::vector<Integer>{2});
}

TEST_CASE("smith normal form handles zero and rectangular matrices") {
    SmithNormalForm z = smith_normal_form(mat({{0, 0}, {0, 0}}));
    CHECK(z.diag[0][0] == 0);
    CHECK(verify_certificate(mat({{0, 0}, {0, 0}}), z));
    IntMatrix rect = mat({{2, 4, 4}, {-6, 6, 12}});
    SmithNormalForm r = smith_normal_form(rect);
    CHECK(verify_certificate(rect, r));
    CHECK(r.diag[0][0] == 2);
    // d1*d2 = gcd of 2x2 minors = 12... second factor divides the third row of nothing
    CHECK(r.diag[1][1] == 6);
    IntMatrix tall = mat({{3}, {6}});
    SmithNormalForm t = smith_normal_form(tall);
    CHECK(verify_certificate(tall, t));
    CHECK(t.diag[0][0] == 3);
}

TEST_CASE("smith normal form certificate is checked on every call in tests") {
    IntMatrix m = mat({{4, -2, 7}, {2, 2, 2}, {0, 10, -5}});
    SmithNormalForm snf = smith_normal_form(m);
    CHECK(verify_certificate(m, snf));
    auto f = snf.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        CHECK(f[i + 1] % f[i] == 0);
}

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(determinant(identity_matrix(4)) == 1);
    CHECK(determinant(mat({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(mat({{3, 1, 0}, {0, 0, 2}, {1, 1, 1}})) == -4);
}

TEST_CASE("FgAbGroup normalizes its torsion factors into a chain") {
    FgAbGroup g(0, {Integer(2), Integer(3)});
    CHECK(g.torsion() == std::vector<Integer>{6});
    FgAbGroup h(0, {Integer(2), Integer(2)});
    CHECK(h.torsion() == std::vector<Integer>{2, 2});
    FgAbGroup k(5, {Integer(1), Integer(1)});
    CHECK(k.torsion().empty());
    CHECK(k == FgAbGroup::free(5));
    FgAbGroup m(0, {Integer(4), Integer(6)});
    CHECK(m.torsion() == std::vector<Integer>{2, 12});
}

TEST_CASE("direct_sum adds ranks and renormalizes torsion") {
    FgAbGroup enriques_k0(12, {Integer(2)});
    FgAbGroup sum = direct_sum(enriques_k0, FgAbGroup::free(6));
    CHECK(sum.rank() == 18);
    CHECK(sum.torsion() == std::vector<Integer>{2});
    CHECK(sum.render() == "Z^18 (+) Z/2");

    CHECK(direct_sum(enriques_k0, FgAbGroup::trivial()) == enriques_k0);

    FgAbGroup z2(0, {Integer(2)});
    CHECK(direct_sum(z2, z2).torsion() == std::vector<Integer>{2, 2});

    // commutative and associative up to canonical form
    FgAbGroup a(1, {Integer(4)});
    FgAbGroup b(2, {Integer(6)});
    FgAbGroup c(0, {Integer(10)});
    CHECK(direct_sum(a, b) == direct_sum(b, a));
    CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
}

TEST_CASE("group rendering") {
    CHECK(FgAbGroup::trivial().render() == "0");
    CHECK(FgAbGroup::free(1).render() == "Z");
    CHECK(FgAbGroup::free(4).render() == "Z^4");
    CHECK(FgAbGroup(0, {Integer(2)}).render() == "Z/2");
    CHECK(FgAbGroup(48, {Integer(2)}).render() == "Z^48 (+) Z/2");
    CHECK(FgAbGroup(1, {Integer(2), Integer(4)}).render() == "Z (+) Z/2 (+) Z/4");
}

TEST_CASE("fec_obstruction reports the smallest invariant factor") {
    ObstructionVerdict v = fec_obstruction(FgAbGroup(18, {Integer(2)}));
    CHECK(v.obstructed);
    CHECK(v.factor == 2);
    CHECK(v.label() == "Obstructed(2)");
    ObstructionVerdict w = fec_obstruction(FgAbGroup::free(5));
    CHECK_FALSE(w.obstructed);
    CHECK(w.label() == "NoObstruction");
    CHECK(w.render().find("no obstruction from K0 torsion") != std::string::npos);
    ObstructionVerdict u = fec_obstruction(FgAbGroup(0, {Integer(4), Integer(12)}));
    CHECK(u.factor == 4);
}
