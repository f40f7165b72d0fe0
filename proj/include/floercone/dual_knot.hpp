#pragma once

// Invariants of the dual knot extracted from the surgery cone: hat-HFK per
// relative spin-c structure (through the finite three-term model), the
// reduced knot complex of the dual knot, and hat-HF of the surgered manifold.

#include <string>
#include <vector>

#include "surgery.hpp"

namespace floercone {

// hat-HFK(Y_lambda, K_lambda, xi_l) as the homology of the mapping cone of
//   (h_{xi_l}, v_{xi_{l+1}}) :
//       A_{xi_l}{i<=0, j=s_l} (+) A_{xi_{l+1}}{i=0, j<=s_{l+1}-1} --> B_{xi_{l+1}}{i=0},
// graded by gr_t and labeled with the dual Alexander value A_dual(xi_l).
// This path is independent of the assembled cone; the two are cross-checked
// in the tests.
inline graded_table hfk_hat(const knot_bundle& b, long long k, const dual_spinc& dual,
                            long long l) {
    check_dual_selector(b, k, dual);
    rational step = rational(k, b.d);
    rational s_l = dual.s0 + rat(l) * step;
    rational s_n = s_l + step;
    auto sector_at = [&](long long ll) {
        long long sec = (static_cast<long long>(dual.base_sector) + ll) % b.d;
        if (sec < 0) sec += b.d;
        return static_cast<size_t>(sec);
    };
    size_t q0 = sector_at(l), q1 = sector_at(l + 1);
    const filtered_complex& c0 = b.sectors[q0];
    const filtered_complex& c1 = b.sectors[q1];
    rational a_dual = detail::a_dual_of(b.d, k, s_l);

    finite_f2_complex model;
    std::map<size_t, size_t> piece_a;   // c0 generator -> model element (translate j(x)-s_l)
    std::map<size_t, size_t> piece_a1;  // c1 generator at i=0
    std::map<size_t, size_t> piece_b;   // c1 generator at i=0 in the B copy
    for (size_t x = 0; x < c0.size(); ++x) {
        const auto& g = c0.generator(x);
        rational nr = g.j - s_l;
        if (nr.sign() < 0) continue;  // j = s_l slice meets i <= 0 only when A(x) >= s_l
        long long n = nr.to_ll();
        finite_f2_complex::element e;
        e.id = "A:" + g.id + "@" + std::to_string(n);
        e.source = x;
        e.translate = n;
        e.i = -n;
        e.j = a_dual;
        e.gr = assign_ijgr(b.d, k, true, s_l, rat(-n), g.j - rat(n), g.gr - rat(2 * n)).gr;
        piece_a[x] = model.add_element(e);
    }
    for (size_t x = 0; x < c1.size(); ++x) {
        const auto& g = c1.generator(x);
        if (!(g.j <= s_n - rat(1))) continue;
        finite_f2_complex::element e;
        e.id = "A+:" + g.id;
        e.source = c0.size() + x;
        e.translate = 0;
        e.i = 0;
        e.j = a_dual;
        e.gr = assign_ijgr(b.d, k, true, s_n, rat(0), g.j, g.gr).gr;
        piece_a1[x] = model.add_element(e);
    }
    for (size_t x = 0; x < c1.size(); ++x) {
        const auto& g = c1.generator(x);
        finite_f2_complex::element e;
        e.id = "B:" + g.id;
        e.source = c0.size() + c1.size() + x;
        e.translate = 0;
        e.i = 0;
        e.j = a_dual;
        e.gr = assign_ijgr(b.d, k, false, s_n, rat(0), g.j, g.gr).gr;
        piece_b[x] = model.add_element(e);
    }

    // induced internal differentials: terms leaving each window are dropped
    for (auto [x, ex] : piece_a)
        for (const auto& [y, p] : c0.column(x))
            for (long long e : p.exponents()) {
                auto it = piece_a.find(y);
                if (it == piece_a.end()) continue;
                long long n_from = model.at(ex).translate;
                long long n_to = model.at(it->second).translate;
                if (n_from + e == n_to) model.add_boundary(ex, it->second);
            }
    for (auto [x, ex] : piece_a1)
        for (const auto& [y, p] : c1.column(x)) {
            if (!p.has(0)) continue;
            auto it = piece_a1.find(y);
            if (it != piece_a1.end()) model.add_boundary(ex, it->second);
        }
    for (auto [x, ex] : piece_b)
        for (const auto& [y, p] : c1.column(x)) {
            if (!p.has(0)) continue;
            model.add_boundary(ex, piece_b.at(y));
        }
    // h from the A_{xi_l} slice, v from the A_{xi_{l+1}} slice
    auto cols = flip_at_anchor(b.flips[q0], s_l);
    if (!cols)
        throw std::runtime_error("hfk_hat: no flip available for sector " + std::to_string(q0) +
                                 " at anchor s_l = " + s_l.to_string());
    for (auto [x, ex] : piece_a)
        for (const auto& [y, p] : (*cols)[x])
            for (long long e : p.exponents())
                if (model.at(ex).translate + e == 0) model.add_boundary(ex, piece_b.at(y));
    for (auto [x, ex] : piece_a1) model.add_boundary(ex, piece_b.at(x));

    bool graded = !((q0 < b.ungraded.size() && b.ungraded[q0]) ||
                    (q1 < b.ungraded.size() && b.ungraded[q1]));
    graded_table t = model.homology(dual.label, false, graded);
    for (auto& r : t.rows) r.A = a_dual;
    return t;
}

// hat-HFK ranks of the dual knot assembled over every relative spin-c level
// that can carry homology, per dual spin-c structure.
inline graded_table hfk_hat_assembled(const knot_bundle& b, long long k, const dual_spinc& dual) {
    truncation t = truncation_bounds(b, k, dual);
    graded_table out;
    for (long long l = t.a - 2; l <= t.b + 1; ++l) out.absorb(hfk_hat(b, k, dual, l));
    return out;
}

inline graded_table hfk_hat_all(const knot_bundle& b, long long k) {
    graded_table out;
    for (const auto& dual : enumerate_dual_spinc(b, k)) out.absorb(hfk_hat_assembled(b, k, dual));
    return out;
}

// The reduced cone relabeled as the knot complex of the dual knot: j is
// curly-J and gr is gr_t already, so this is reduce_cone plus validation.
inline surgery_cone dual_cfk(const surgery_cone& cone) {
    surgery_cone red = reduce_cone(cone);
    validation_report rep = red.complex.validate();
    if (!rep.ok())
        throw std::logic_error("dual_cfk: reduced cone fails validation (internal error):\n" +
                               rep.to_string());
    return red;
}

// hat-HFK read from the reduced cone: in a reduced complex the doubly
// associated graded differential vanishes, so ranks are the basis multiset
// by (curly-J, gr). Used as the second route in the dual-route cross-check.
inline graded_table hfk_from_cone(const surgery_cone& cone) {
    surgery_cone red = reduce_cone(cone);
    graded_table t;
    for (const auto& g : red.complex.basis())
        t.add(cone.dual.label, g.j, cone.graded ? std::optional<rational>(g.gr) : std::nullopt);
    return t;
}

// hat-HF of the surgered manifold in this spin-c structure: homology of the
// curly-I = 0 subquotient of the cone, graded by gr_t.
inline graded_table hf_hat(const surgery_cone& cone) {
    surgery_cone red = reduce_cone(cone);
    finite_f2_complex slice = subquotient(red.complex, int_window::exactly(0), rat_window::all());
    return slice.homology(cone.dual.label, false, cone.graded);
}

// Alexander symmetry of the dual knot: hat-HFK ranks grouped by Alexander
// value, assembled across all dual spin-c structures, tested under r -> -r.
inline symmetry_report dual_symmetry(const knot_bundle& b, long long k) {
    symmetry_report rep;
    std::map<std::string, long long> tally;
    std::vector<rational> values;
    for (const auto& dual : enumerate_dual_spinc(b, k)) {
        surgery_cone red = reduce_cone(build_cone(b, k, dual));
        for (const auto& g : red.complex.basis()) {
            if (tally.emplace(g.j.to_string(), 0).second) values.push_back(g.j);
            tally[g.j.to_string()] += 1;
        }
    }
    std::sort(values.begin(), values.end());
    rep.pass = true;
    for (const auto& v : values) {
        long long here = tally[v.to_string()];
        auto neg = tally.find((-v).to_string());
        long long there = neg == tally.end() ? 0 : neg->second;
        rep.ranks.emplace_back(v, here);
        if (here != there) rep.pass = false;
    }
    return rep;
}

}  // namespace floercone
