#pragma once

// Combinatorial evaluation on doubly-pointed Heegaard diagrams: Euler
// measures, point measures, the absolute Alexander grading formula
//   A(x) = (chi(P) + 2 n_x(P) - n_z(P) - n_w(P)) / (2 d),
// Chern class evaluations, and relative-grading consistency checks. Disk
// counting is out of scope: differentials on diagram complexes are user
// input elsewhere.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "numeric.hpp"

namespace floercone {

struct diagram_region {
    std::string id;
    rational euler;  // explicit for non-disk regions; 1 - corners/4 for flagged disks
};

struct diagram_point {
    std::string id;
    std::string alpha, beta;              // declared curve memberships
    std::vector<std::string> corners;     // exactly 4 region ids, cyclic order
};

struct diagram_generator {
    std::string id;
    std::vector<std::string> points;
    std::optional<rational> gr_w, gr_z;
};

struct diagram_basepoint {
    std::vector<std::string> sides;  // exactly 2 region ids flanking the longitude arc
};

// Linear combination of regions. boundary consistency is the caller's
// responsibility; the declared lambda coefficient is the denominator of the
// grading formula (with its sign, which may be negative).
struct periodic_domain {
    std::string id;
    long long lambda_coefficient = 0;
    std::map<std::string, long long> multiplicities;
    // optional annotations for relative checks
    std::optional<std::string> from, to;
    long long order_n = 1;
};

struct heegaard_diagram {
    long long d = 1;
    std::vector<diagram_region> regions;
    std::vector<diagram_point> points;
    std::vector<diagram_generator> generators;
    diagram_basepoint w, z;
    std::optional<diagram_basepoint> w2, z2;  // secondary pair, carried but unused here
    periodic_domain domain;                   // the relative periodic domain for gradings
    std::vector<periodic_domain> extra_domains;

    const diagram_region& region(const std::string& id) const {
        for (const auto& r : regions)
            if (r.id == id) return r;
        throw std::invalid_argument("diagram: unknown region id: " + id);
    }
    const diagram_point& point(const std::string& id) const {
        for (const auto& p : points)
            if (p.id == id) return p;
        throw std::invalid_argument("diagram: unknown point id: " + id);
    }
    const diagram_generator& generator(const std::string& id) const {
        for (const auto& g : generators)
            if (g.id == id) return g;
        throw std::invalid_argument("diagram: unknown generator id: " + id);
    }

    validation_report validate() const {
        validation_report rep;
        auto fail = [&rep](const std::string& who, const std::string& msg) {
            rep.violations.push_back({violation_kind::structural, who, "", msg});
        };
        for (const auto& p : points)
            if (p.corners.size() != 4)
                fail(p.id, "intersection point must list exactly 4 corner regions");
        if (w.sides.size() != 2) fail("w", "basepoint must list exactly 2 side regions");
        if (z.sides.size() != 2) fail("z", "basepoint must list exactly 2 side regions");
        for (const auto& g : generators) {
            std::set<std::string> alphas, betas;
            for (const auto& pid : g.points) {
                const auto& p = point(pid);
                if (!alphas.insert(p.alpha).second)
                    fail(g.id, "repeated alpha curve " + p.alpha + " in generator tuple");
                if (!betas.insert(p.beta).second)
                    fail(g.id, "repeated beta curve " + p.beta + " in generator tuple");
            }
        }
        // referenced regions must exist
        auto touch = [&](const std::string& rid) { (void)region(rid); };
        try {
            for (const auto& p : points)
                for (const auto& r : p.corners) touch(r);
            for (const auto& r : w.sides) touch(r);
            for (const auto& r : z.sides) touch(r);
            for (const auto& [rid, m] : domain.multiplicities) {
                (void)m;
                touch(rid);
            }
        } catch (const std::invalid_argument& e) {
            fail("regions", e.what());
        }
        return rep;
    }
};

inline long long domain_mult(const periodic_domain& P, const std::string& rid) {
    auto it = P.multiplicities.find(rid);
    return it == P.multiplicities.end() ? 0 : it->second;
}

inline rational euler_measure(const heegaard_diagram& dg, const periodic_domain& P) {
    rational chi = rat(0);
    for (const auto& r : dg.regions) chi = chi + rat(domain_mult(P, r.id)) * r.euler;
    return chi;
}

inline rational point_measure(const heegaard_diagram& dg, const periodic_domain& P,
                              const std::string& point_id) {
    const auto& p = dg.point(point_id);
    long long sum = 0;
    for (const auto& rid : p.corners) sum += domain_mult(P, rid);
    return rational(sum, 4);
}

inline rational generator_measure(const heegaard_diagram& dg, const periodic_domain& P,
                                  const std::string& gen_id) {
    rational n = rat(0);
    for (const auto& pid : dg.generator(gen_id).points) n = n + point_measure(dg, P, pid);
    return n;
}

inline rational basepoint_measure(const periodic_domain& P, const diagram_basepoint& bp) {
    long long sum = 0;
    for (const auto& rid : bp.sides) sum += domain_mult(P, rid);
    return rational(sum, 2);
}

// A(x) with respect to P; the denominator is the declared lambda coefficient,
// positive or negative.
inline rational alexander_grading(const heegaard_diagram& dg, const periodic_domain& P,
                                  const std::string& gen_id) {
    if (P.lambda_coefficient == 0)
        throw std::invalid_argument("alexander_grading: domain has zero lambda coefficient");
    rational num = euler_measure(dg, P) + rat(2) * generator_measure(dg, P, gen_id) -
                   basepoint_measure(P, dg.z) - basepoint_measure(P, dg.w);
    return num / rat(2 * P.lambda_coefficient);
}

// <c_1(s_w(x)), [P]> for an absolute periodic domain (no longitude boundary).
inline long long chern_evaluation(const heegaard_diagram& dg, const periodic_domain& P,
                                  const std::string& gen_id) {
    rational v = euler_measure(dg, P) + rat(2) * generator_measure(dg, P, gen_id) -
                 rat(2) * basepoint_measure(P, dg.w);
    if (!v.is_integer())
        throw std::invalid_argument("chern_evaluation: value " + v.to_string() +
                                    " is not an integer; domain data is inconsistent");
    return v.to_ll();
}

struct relative_check_result {
    rational lhs;  // A(x) - A(y)
    rational rhs;  // (n_z(D) - n_w(D)) / n
    bool consistent = false;
};

// Checks A(x) - A(y) = (n_z(D) - n_w(D)) / n for a domain D from x to y whose
// boundary has order n in H_1(Y).
inline relative_check_result relative_check(const heegaard_diagram& dg, const periodic_domain& D,
                                            const std::string& from, const std::string& to) {
    relative_check_result r;
    r.lhs = alexander_grading(dg, dg.domain, from) - alexander_grading(dg, dg.domain, to);
    if (D.order_n == 0) throw std::invalid_argument("relative_check: order n must be nonzero");
    r.rhs = (basepoint_measure(D, dg.z) - basepoint_measure(D, dg.w)) / rat(D.order_n);
    r.consistent = (r.lhs == r.rhs);
    return r;
}

struct wz_maslov_result {
    std::string generator;
    rational lhs;  // gr_w - gr_z
    rational rhs;  // 2 A(x)
    bool consistent = false;
};

// gr_w(x) - gr_z(x) = 2 A(x), for generators carrying both gradings.
inline std::vector<wz_maslov_result> wz_maslov_check(const heegaard_diagram& dg) {
    std::vector<wz_maslov_result> out;
    for (const auto& g : dg.generators) {
        if (!g.gr_w || !g.gr_z) continue;
        wz_maslov_result r;
        r.generator = g.id;
        r.lhs = *g.gr_w - *g.gr_z;
        r.rhs = rat(2) * alexander_grading(dg, dg.domain, g.id);
        r.consistent = (r.lhs == r.rhs);
        out.push_back(r);
    }
    return out;
}

// grade-diagram output: one row per generator, A from the stored domain.
inline graded_table grade_diagram(const heegaard_diagram& dg) {
    graded_table t;
    for (const auto& g : dg.generators)
        t.add(g.id, alexander_grading(dg, dg.domain, g.id),
              g.gr_w ? std::optional<rational>(*g.gr_w) : std::nullopt);
    return t;
}

}  // namespace floercone
