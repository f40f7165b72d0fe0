#pragma once

// The filtered mapping cone of the surgery formula. Indexes the relative
// spin-c structures of the dual knot over a chosen spin-c structure on the
// surgered manifold, assigns the two filtrations and the absolute grading to
// the A- and B-towers, truncates, and assembles X^- as a finitely generated
// free complex over F_2[U].
//
// Tower bookkeeping in the i<=0 model: the A-tower copy of a sector at level
// s carries, for a generator x with Alexander value A(x), the head element
// U^(max(0, A(x)-s)) x normalized to curly-I = 0; the library's U-power
// filtration on the assembled cone is then exactly curly-I, and the stored j
// field is curly-J.

#include <optional>
#include <string>
#include <vector>

#include "knot_complex.hpp"

namespace floercone {

struct xi_index {
    long long l = 0;
    rational s;        // Alexander anchor s_l
    size_t sector = 0; // spin-c sector of Y feeding this tower
    rational A_dual;   // (2 d s_l + k - d) / (2k)
};

struct dual_spinc {
    size_t base_sector = 0;  // sector at l = 0
    rational s0;             // s_0, inside the l = 0 indexing window
    std::string label;       // canonical: nearest-zero s with its sector
};

namespace detail {

inline rational a_dual_of(long long d, long long k, const rational& s) {
    return (rat(2 * d) * s + rat(k - d)) / rat(2 * k);
}

// The unique integer m with t - 1/2 <= m < t + 1/2. Shifting s by m window
// widths lands it in the indexing window for l = 0; the same form works for
// both signs of k because dividing the window bounds by a negative step
// flips them back.
inline long long window_shift(const rational& t) {
    return (t - rational(1, 2)).ceil().to_ll();
}

}  // namespace detail

// All dual spin-c structures (|k| of them): orbits of (sector, s-value) pairs
// under (q, s) -> (q+1 mod d, s + k/d). Each orbit is pinned by its l = 0
// representative, the unique pair whose s-value lies in the indexing window
//   k > 0:  (2l-1)k/2d <  s_l <= (2l+1)k/2d      at l = 0
//   k < 0:  (2l+1)k/2d <= s_l <  (2l-1)k/2d      at l = 0,
// and labeled by the orbit's s-value closest to zero (ties to the positive
// side).
inline std::vector<dual_spinc> enumerate_dual_spinc(const knot_bundle& b, long long k) {
    if (k == 0) throw std::invalid_argument("surgery: framing k must be nonzero");
    long long d = b.d;
    rational step = rational(k, d);
    std::vector<dual_spinc> out;
    std::set<std::string> seen;
    long long absk = k > 0 ? k : -k;
    for (size_t q = 0; q < static_cast<size_t>(d); ++q) {
        // s-values of sector q in [0, |k|): offsets[q].mod1() + 0..absk-1
        for (long long i = 0; i < absk; ++i) {
            rational s = b.offsets[q].mod1() + rat(i);
            // shift to the l = 0 window
            long long m = detail::window_shift(s / step);
            rational s0 = s - rat(m) * step;
            long long base = (static_cast<long long>(q) - m) % d;
            if (base < 0) base += d;
            std::string key = std::to_string(base) + "|" + s0.to_string();
            if (!seen.insert(key).second) continue;
            // label by the orbit point nearest zero, ties positive
            long long mm = detail::window_shift(s0 / rational(absk, d));
            rational snear = s0 - rat(mm) * rational(absk, d);
            long long qnear = (base + (k > 0 ? mm : -mm)) % d;
            if (qnear < 0) qnear += d;
            dual_spinc ds;
            ds.base_sector = static_cast<size_t>(base);
            ds.s0 = s0;
            ds.label = std::to_string(qnear) + ":" + snear.to_string();
            out.push_back(ds);
        }
    }
    std::sort(out.begin(), out.end(), [](const dual_spinc& a, const dual_spinc& b2) {
        if (a.s0 != b2.s0) return a.s0 < b2.s0;
        return a.base_sector < b2.base_sector;
    });
    return out;
}

inline void check_dual_selector(const knot_bundle& b, long long k, const dual_spinc& dual) {
    if (dual.base_sector >= b.sectors.size())
        throw std::invalid_argument("surgery: dual spin-c selector names an unknown sector");
    if ((dual.s0 - b.offsets[dual.base_sector]).mod1() != rat(0))
        throw std::invalid_argument("surgery: dual spin-c s-value " + dual.s0.to_string() +
                                    " is inconsistent with the offsets of sector " +
                                    std::to_string(dual.base_sector));
    rational bound = rational(k, 2 * b.d);
    if (k > 0) {
        if (!(dual.s0 > -bound && dual.s0 <= bound))
            throw std::invalid_argument("surgery: s_0 outside the l = 0 indexing window");
    } else {
        if (!(dual.s0 >= bound && dual.s0 < -bound))
            throw std::invalid_argument("surgery: s_0 outside the l = 0 indexing window");
    }
}

inline std::vector<xi_index> xi_indexing(const knot_bundle& b, long long k, const dual_spinc& dual,
                                         long long l_lo, long long l_hi) {
    check_dual_selector(b, k, dual);
    std::vector<xi_index> out;
    for (long long l = l_lo; l <= l_hi; ++l) {
        xi_index xi;
        xi.l = l;
        xi.s = dual.s0 + rat(l) * rational(k, b.d);
        long long sec = (static_cast<long long>(dual.base_sector) + l) % b.d;
        if (sec < 0) sec += b.d;
        xi.sector = static_cast<size_t>(sec);
        xi.A_dual = detail::a_dual_of(b.d, k, xi.s);
        out.push_back(xi);
    }
    return out;
}

// curly-I, curly-J, gr_t of the translate [x, i, j] in the stated tower.
struct ij_gr {
    rational I, J, gr;
};

inline ij_gr assign_ijgr(long long d, long long k, bool a_tower, const rational& s_l,
                         const rational& i, const rational& j, const rational& gr_tilde) {
    long long sgn = k > 0 ? 1 : -1;
    rational quad = (rat(2 * d) * s_l - rat(k)) * (rat(2 * d) * s_l - rat(k)) / rat(4 * d * k);
    ij_gr r;
    if (a_tower) {
        r.I = std::max(i, j - s_l);
        r.J = std::max(i - rat(1), j - s_l) + detail::a_dual_of(d, k, s_l);
        r.gr = gr_tilde + quad + rational(2 - 3 * sgn, 4);
    } else {
        r.I = i;
        r.J = i - rat(1) + detail::a_dual_of(d, k, s_l);
        r.gr = gr_tilde + quad + rational(-2 - 3 * sgn, 4);
    }
    return r;
}

struct truncation {
    long long a = 0, b = 0;
    bool degenerate = false;  // empty keep-interval; a = b = the l nearest zero
};

// The minimal valid truncation window. A dropped upper tower must cancel
// against its B-partner (through v when s_l >= maxA + 1, through h when
// s_l <= minA, with the roles of the two ends swapping with the sign of k),
// where minA/maxA run over the reduced sector bases. This forces
//   k > 0:  a = max{a : s_(a-1) <= minA},   b = min{b : s_(b+1) >= maxA + 1}
//   k < 0:  a = max{a : s_(a-1) >= maxA+1}, b = min{b : s_(b+1) <= minA}.
// When the two bounds cross, every tower between them is individually
// cancellable; the degenerate window keeps the single tower whose s_l is
// nearest zero (ties to the positive side).
inline truncation truncation_bounds(const knot_bundle& b, long long k, const dual_spinc& dual) {
    check_dual_selector(b, k, dual);
    std::optional<rational> min_a, max_a;
    for (const auto& sec : b.sectors) {
        reduction r = reduce(sec);
        for (const auto& g : r.reduced.basis()) {
            if (!min_a || g.j < *min_a) min_a = g.j;
            if (!max_a || g.j > *max_a) max_a = g.j;
        }
    }
    truncation t;
    rational step = rational(k, b.d);
    long long a = 0, bb = 0;
    if (!min_a) {
        t.degenerate = true;
        t.a = t.b = 0;
        return t;
    }
    if (k > 0) {
        a = ((*min_a - dual.s0) / step).floor().to_ll() + 1;
        bb = ((*max_a + rat(1) - dual.s0) / step).ceil().to_ll() - 1;
    } else {
        a = ((*max_a + rat(1) - dual.s0) / step).floor().to_ll() + 1;
        bb = ((*min_a - dual.s0) / step).ceil().to_ll() - 1;
    }
    if (a <= bb) {
        t.a = a;
        t.b = bb;
        return t;
    }
    // degenerate: any single l in [b, a] gives a valid one-tower cone
    t.degenerate = true;
    long long best = bb;
    auto absval = [](const rational& r) { return r.sign() < 0 ? -r : r; };
    for (long long l = bb; l <= a; ++l) {
        rational sl = dual.s0 + rat(l) * step;
        rational sb = dual.s0 + rat(best) * step;
        if (absval(sl) < absval(sb) || (absval(sl) == absval(sb) && sl > sb)) best = l;
    }
    t.a = t.b = best;
    return t;
}

struct summand_info {
    char tower = 'A';  // 'A' or 'B'
    long long l = 0;
    rational s_l;
    size_t sector = 0;
    std::string source_id;
    long long u_shift = 0;  // head translate of the source generator
};

struct surgery_cone {
    filtered_complex complex;  // X^-: curly-I is the U-power filtration, j = curly-J
    std::vector<summand_info> summands;  // parallel to complex basis order
    long long d = 1, k = 0;
    dual_spinc dual;
    long long a = 0, b = 0;
    bool degenerate = false;
    bool graded = true;  // false when any touched sector is flagged ungraded
};

// X^- over F_2[U] for the towers l in [a, b]; the B-range follows the sign of
// k. With u_cap set, X^t is the further quotient by U^(u_cap+1), materialized
// as a finite F_2 complex via subquotient(complex, -u_cap <= i <= 0).
inline surgery_cone build_cone(const knot_bundle& b, long long k, const dual_spinc& dual,
                               long long a, long long bb, bool degenerate_flag = false) {
    if (k == 0) throw std::invalid_argument("surgery: framing k must be nonzero");
    if (((k - b.k) % b.d) != 0)
        throw std::invalid_argument("surgery: framing " + std::to_string(k) +
                                    " is not congruent to the bundle framing mod d");
    if (a > bb) throw std::invalid_argument("surgery: empty tower range");
    check_dual_selector(b, k, dual);

    surgery_cone cone;
    cone.d = b.d;
    cone.k = k;
    cone.dual = dual;
    cone.a = a;
    cone.b = bb;
    cone.degenerate = degenerate_flag;

    long long b_lo = k > 0 ? a + 1 : a;
    long long b_hi = k > 0 ? bb : bb + 1;
    long long h_lo = a;
    long long h_hi = k > 0 ? bb - 1 : bb;

    auto xi_of = [&](long long l) {
        xi_index xi;
        xi.l = l;
        xi.s = dual.s0 + rat(l) * rational(k, b.d);
        long long sec = (static_cast<long long>(dual.base_sector) + l) % b.d;
        if (sec < 0) sec += b.d;
        xi.sector = static_cast<size_t>(sec);
        xi.A_dual = detail::a_dual_of(b.d, k, xi.s);
        return xi;
    };

    filtered_complex asum, bsum;
    std::vector<summand_info> a_info, b_info;
    // (tower ordinal, generator) -> index in asum/bsum
    std::map<std::pair<long long, size_t>, size_t> a_index, b_index;
    std::map<std::pair<long long, size_t>, long long> head;

    for (long long l = a; l <= bb; ++l) {
        xi_index xi = xi_of(l);
        const filtered_complex& sec = b.sectors[xi.sector];
        if (xi.sector < b.ungraded.size() && b.ungraded[xi.sector]) cone.graded = false;
        for (size_t x = 0; x < sec.size(); ++x) {
            const basis_element& g = sec.generator(x);
            rational mr = g.j - xi.s;
            if (!mr.is_integer())
                throw std::invalid_argument("surgery: Alexander value " + g.j.to_string() +
                                            " of sector " + std::to_string(xi.sector) +
                                            " is not in the coset of s_l = " + xi.s.to_string() +
                                            "; validate the bundle first");
            long long m = mr.sign() > 0 ? mr.to_ll() : 0;
            head[{l, x}] = m;
            ij_gr v = assign_ijgr(b.d, k, true, xi.s, rat(-m), g.j - rat(m), g.gr - rat(2 * m));
            basis_element e;
            e.id = "A" + std::to_string(l) + ":" + g.id;
            e.gr = v.gr;
            e.j = v.J;
            e.sector = dual.label;
            a_index[{l, x}] = asum.add_generator(e);
            a_info.push_back({'A', l, xi.s, xi.sector, g.id, m});
        }
    }
    for (long long l = b_lo; l <= b_hi; ++l) {
        xi_index xi = xi_of(l);
        const filtered_complex& sec = b.sectors[xi.sector];
        if (xi.sector < b.ungraded.size() && b.ungraded[xi.sector]) cone.graded = false;
        for (size_t x = 0; x < sec.size(); ++x) {
            const basis_element& g = sec.generator(x);
            ij_gr v = assign_ijgr(b.d, k, false, xi.s, rat(0), g.j, g.gr);
            basis_element e;
            e.id = "B" + std::to_string(l) + ":" + g.id;
            e.gr = v.gr;
            e.j = v.J;
            e.sector = dual.label;
            b_index[{l, x}] = bsum.add_generator(e);
            b_info.push_back({'B', l, xi.s, xi.sector, g.id, 0});
        }
    }

    // internal differentials, transported to the head-normalized bases
    for (long long l = a; l <= bb; ++l) {
        xi_index xi = xi_of(l);
        const filtered_complex& sec = b.sectors[xi.sector];
        for (size_t x = 0; x < sec.size(); ++x)
            for (const auto& [y, p] : sec.column(x))
                for (long long e : p.exponents()) {
                    long long exp = head[{l, x}] + e - head[{l, y}];
                    asum.add_diff_term(a_index[{l, x}], a_index[{l, y}], upoly(exp));
                }
    }
    for (long long l = b_lo; l <= b_hi; ++l) {
        xi_index xi = xi_of(l);
        const filtered_complex& sec = b.sectors[xi.sector];
        for (size_t x = 0; x < sec.size(); ++x)
            for (const auto& [y, p] : sec.column(x))
                bsum.add_diff_term(b_index[{l, x}], b_index[{l, y}], p);
    }

    // D = sum of v (identity) and h (flip) components
    filtered_map D = filtered_map::zero(asum.size(), rat(-1), rat(0));
    for (long long l = a; l <= bb; ++l) {
        xi_index xi = xi_of(l);
        const filtered_complex& sec = b.sectors[xi.sector];
        bool has_v = (k > 0) ? (l >= a + 1) : true;
        bool has_h = (l >= h_lo && l <= h_hi);
        if (has_v) {
            for (size_t x = 0; x < sec.size(); ++x)
                D.add_term(a_index[{l, x}], b_index[{l, x}], upoly(head[{l, x}]));
        }
        if (has_h) {
            auto cols = flip_at_anchor(b.flips[xi.sector], xi.s);
            if (!cols)
                throw std::runtime_error("surgery: no flip available for sector " +
                                         std::to_string(xi.sector) + " at anchor s_l = " +
                                         xi.s.to_string());
            for (size_t x = 0; x < sec.size(); ++x)
                for (const auto& [y, p] : (*cols)[x])
                    for (long long e : p.exponents())
                        D.add_term(a_index[{l, x}], b_index[{l + 1, y}],
                                   upoly(head[{l, x}] + e));
        }
    }

    cone.complex = mapping_cone(D, asum, bsum);
    cone.summands = std::move(a_info);
    cone.summands.insert(cone.summands.end(), b_info.begin(), b_info.end());

    validation_report rep = cone.complex.validate();
    if (!rep.ok())
        throw std::logic_error("surgery: assembled cone fails validation (internal error):\n" +
                               rep.to_string());
    return cone;
}

inline surgery_cone build_cone(const knot_bundle& b, long long k, const dual_spinc& dual) {
    truncation t = truncation_bounds(b, k, dual);
    return build_cone(b, k, dual, t.a, t.b, t.degenerate);
}

// Reduce the cone, carrying the summand bookkeeping of the surviving basis.
inline surgery_cone reduce_cone(const surgery_cone& cone) {
    reduction r = reduce(cone.complex);
    surgery_cone out = cone;
    out.complex = r.reduced;
    out.summands.clear();
    for (const auto& g : r.reduced.basis())
        out.summands.push_back(cone.summands[cone.complex.index_of(g.id)]);
    return out;
}

inline long long default_u_cap(const surgery_cone& cone) {
    if (cone.complex.size() == 0) return 2;
    rational lo = cone.complex.generator(0).gr, hi = lo;
    for (const auto& g : cone.complex.basis()) {
        if (g.gr < lo) lo = g.gr;
        if (g.gr > hi) hi = g.gr;
    }
    return ((hi - lo) / rat(2)).floor().to_ll() + 2;
}

// X^t = X^- / U^(t+1) as a finite F_2 complex.
inline finite_f2_complex truncate_cone(const surgery_cone& cone, long long u_cap) {
    return subquotient(cone.complex, {-u_cap, 0}, rat_window::all());
}

}  // namespace floercone
