#include <doctest.h>
#include <floercone/heegaard.hpp>
#include <floercone/io.hpp>

#include "helpers.hpp"

using namespace floercone;

namespace {

heegaard_diagram trefoil_diag() {
    return diagram_from_json(parse_json(builtin::trefoil_diagram));
}
heegaard_diagram p5_diag() {
    return diagram_from_json(parse_json(builtin::trefoil_p5_diagram));
}

periodic_domain sigma_domain(const heegaard_diagram& dg, long long mult = 1) {
    periodic_domain s;
    s.id = "Sigma";
    s.lambda_coefficient = 0;
    for (const auto& r : dg.regions) s.multiplicities[r.id] = mult;
    return s;
}

periodic_domain plus_sigma(const heegaard_diagram& dg, const periodic_domain& P, long long c) {
    periodic_domain out = P;
    for (const auto& r : dg.regions) out.multiplicities[r.id] += c;
    return out;
}

}  // namespace

TEST_CASE("diagram files validate and the region Euler measures sum to 2-2g") {
    for (const auto& dg : {trefoil_diag(), p5_diag()}) {
        CHECK(dg.validate().ok());
        rational total = rat(0);
        for (const auto& r : dg.regions) total = total + r.euler;
        CHECK(total == rat(-2));  // genus 2
    }
}

TEST_CASE("euler measure: trefoil domain is -4, zero domain is 0, Sigma adds 2-2g") {
    heegaard_diagram dg = trefoil_diag();
    CHECK(euler_measure(dg, dg.domain) == rat(-4));
    periodic_domain zero;
    zero.lambda_coefficient = 1;
    CHECK(euler_measure(dg, zero) == rat(0));
    CHECK(euler_measure(dg, plus_sigma(dg, dg.domain, 1)) == rat(-4) + rat(-2));
}

TEST_CASE("point and basepoint measures of the trefoil figure") {
    heegaard_diagram dg = trefoil_diag();
    CHECK(point_measure(dg, dg.domain, "a") == rat(1));
    CHECK(point_measure(dg, dg.domain, "b") == rat(2));
    CHECK(point_measure(dg, dg.domain, "c") == rat(3));
    CHECK(point_measure(dg, dg.domain, "x") == rat(2));
    CHECK(basepoint_measure(dg.domain, dg.z) == rat(-1, 2));
    CHECK(basepoint_measure(dg.domain, dg.w) == rat(9, 2));
    CHECK(generator_measure(dg, dg.domain, "bx") == rat(4));

    periodic_domain zero;
    CHECK(point_measure(dg, zero, "a") == rat(0));
    CHECK(point_measure(dg, sigma_domain(dg), "a") == rat(1));
}

TEST_CASE("Alexander gradings of the trefoil figure: -1, 0, 1") {
    heegaard_diagram dg = trefoil_diag();
    CHECK(alexander_grading(dg, dg.domain, "ax") == rat(-1));
    CHECK(alexander_grading(dg, dg.domain, "bx") == rat(0));
    CHECK(alexander_grading(dg, dg.domain, "cx") == rat(1));
}

TEST_CASE("Alexander gradings of the (alpha,gamma) +5 diagram") {
    heegaard_diagram dg = p5_diag();
    CHECK(alexander_grading(dg, dg.domain, "ar") == rat(-1, 5));
    CHECK(alexander_grading(dg, dg.domain, "ps") == rat(-3, 5));
    CHECK(alexander_grading(dg, dg.domain, "pt") == rat(0));
    CHECK(alexander_grading(dg, dg.domain, "qs") == rat(0));
    CHECK(alexander_grading(dg, dg.domain, "br") == rat(0));
    CHECK(alexander_grading(dg, dg.domain, "qt") == rat(3, 5));
    CHECK(alexander_grading(dg, dg.domain, "cr") == rat(1, 5));
}

TEST_CASE("grading is unchanged under scaling the domain") {
    heegaard_diagram dg = p5_diag();
    periodic_domain doubled = dg.domain;
    for (auto& [r, m] : doubled.multiplicities) m *= 2;
    doubled.lambda_coefficient *= 2;
    for (const auto& g : dg.generators)
        CHECK(alexander_grading(dg, doubled, g.id) == alexander_grading(dg, dg.domain, g.id));
}

TEST_CASE("grading is invariant under P -> P + c Sigma") {
    for (const auto& dg : {trefoil_diag(), p5_diag()}) {
        for (long long c : {1, -1, 3}) {
            periodic_domain shifted = plus_sigma(dg, dg.domain, c);
            for (const auto& g : dg.generators)
                CHECK(alexander_grading(dg, shifted, g.id) ==
                      alexander_grading(dg, dg.domain, g.id));
        }
    }
}

TEST_CASE("grading requires a nonzero lambda coefficient") {
    heegaard_diagram dg = trefoil_diag();
    CHECK_THROWS_AS((void)alexander_grading(dg, sigma_domain(dg), "ax"), std::invalid_argument);
}

TEST_CASE("A-multisets of both worked diagrams are symmetric under negation") {
    for (const auto& dg : {trefoil_diag(), p5_diag()}) {
        std::multiset<std::string> values, negated;
        for (const auto& g : dg.generators) {
            rational a = alexander_grading(dg, dg.domain, g.id);
            values.insert(a.to_string());
            negated.insert((-a).to_string());
        }
        CHECK(values == negated);
    }
}

TEST_CASE("chern evaluation: zero domain, Sigma-invariance, +5 absolute domain") {
    heegaard_diagram dg = p5_diag();
    periodic_domain zero;
    for (const auto& g : dg.generators) CHECK(chern_evaluation(dg, zero, g.id) == 0);
    // the only absolute periodic domains of a QHS are multiples of Sigma;
    // evaluation on [Sigma] = 0 vanishes
    REQUIRE(dg.extra_domains.size() == 1);
    for (const auto& g : dg.generators) {
        CHECK(chern_evaluation(dg, dg.extra_domains[0], g.id) == 0);
        CHECK(chern_evaluation(dg, plus_sigma(dg, dg.extra_domains[0], 2), g.id) == 0);
    }
}

TEST_CASE("relative check: bigon from bx to ax, zero domain, corrupted domain") {
    heegaard_diagram dg = trefoil_diag();
    REQUIRE(dg.extra_domains.size() == 1);
    const periodic_domain& D = dg.extra_domains[0];
    relative_check_result r = relative_check(dg, D, *D.from, *D.to);
    CHECK(r.consistent);
    CHECK(r.lhs == rat(1));

    periodic_domain zero;
    relative_check_result rz = relative_check(dg, zero, "bx", "bx");
    CHECK(rz.consistent);
    CHECK(rz.lhs == rat(0));

    periodic_domain bad = D;
    bad.multiplicities["R0"] += 1;
    CHECK(!relative_check(dg, bad, *D.from, *D.to).consistent);
}

TEST_CASE("wz-maslov cross-check on the trefoil figure") {
    heegaard_diagram dg = trefoil_diag();
    auto results = wz_maslov_check(dg);
    REQUIRE(results.size() == 3);
    for (const auto& r : results) CHECK(r.consistent);
    // none of the +5 generators carry both gradings, so nothing is checked
    CHECK(wz_maslov_check(p5_diag()).empty());
}

TEST_CASE("grade_diagram emits one row per generator") {
    graded_table t = grade_diagram(trefoil_diag());
    CHECK(t.rows.size() == 3);
    CHECK(t.rank_at_A(rat(0)) == 1);
}

TEST_CASE("diagram validation catches malformed points and tuples") {
    heegaard_diagram dg = trefoil_diag();
    dg.points[0].corners.pop_back();
    CHECK(!dg.validate().ok());

    heegaard_diagram dg2 = trefoil_diag();
    dg2.generators[0].points = {"a", "b"};  // both on alpha-1
    CHECK(!dg2.validate().ok());
}
