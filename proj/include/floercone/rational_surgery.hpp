#pragma once

// 1/n surgery on a null-homologous knot: realize Y_{1/n}(K) as a surgery on
// K # O_n inside Y # -L(n,1), where O_n is the Floer simple knot, and feed
// the generic mapping cone with d = n, k = 1. The closed-form filtration
// expressions for this case are recomputed independently as a cross-check.

#include <string>
#include <vector>

#include "dual_knot.hpp"
#include "surgery.hpp"

namespace floercone {

// The Floer simple knot O_n in -L(n,1): n rank-1 sectors with Alexander
// offsets -(n-2q-1)/2n and the orientation-reversed lens gradings, identity
// flips.
inline knot_bundle simple_knot_bundle(long long n) {
    if (n <= 0) throw std::invalid_argument("simple_knot_bundle: n must be positive");
    knot_bundle b;
    b.d = n;
    b.k = 1;
    b.lspace = true;
    for (long long q = 0; q < n; ++q) {
        rational A = rational(2 * q + 1 - n, 2 * n);
        rational gr = -rational((2 * q - n) * (2 * q - n) - n, 4 * n);
        filtered_complex sec;
        sec.add_generator({"u", gr, A, std::to_string(q)});
        b.sectors.push_back(std::move(sec));
        b.offsets.push_back(A);
        b.ungraded.push_back(false);
    }
    for (long long q = 0; q < n; ++q) {
        flip_map f;
        f.from_sector = static_cast<size_t>(q);
        f.anchor = b.offsets[static_cast<size_t>(q)];
        f.cols.resize(1);
        f.cols[0][0] = upoly::one();
        b.flips.push_back(std::move(f));
    }
    return b;
}

inline std::vector<sector_shift> one_over_n_shifts(long long n) {
    std::vector<sector_shift> shifts;
    for (long long q = 0; q < n; ++q)
        shifts.push_back({rational(2 * q + 1 - n, 2 * n),
                          -rational((2 * q - n) * (2 * q - n) - n, 4 * n)});
    return shifts;
}

struct rational_surgery_result {
    knot_bundle tensored;  // K # O_n in Y # -L(n,1), d = n, k = 1
    surgery_cone cone;
};

// Y_{1/n}(K) via the connected-sum bundle; n > 0, input d = 1. For n = 1 this
// is literally integral +1 surgery.
inline rational_surgery_result one_over_n_surgery(const knot_bundle& b, long long n) {
    if (n <= 0) throw std::invalid_argument("one_over_n_surgery: n must be positive");
    if (b.d != 1) throw std::invalid_argument("one_over_n_surgery: input bundle must have d = 1");
    rational_surgery_result out;
    out.tensored = tensor_bundle(b, one_over_n_shifts(n));
    auto duals = enumerate_dual_spinc(out.tensored, 1);
    if (duals.size() != 1)
        throw std::logic_error("one_over_n_surgery: expected a single dual spin-c structure");
    out.cone = build_cone(out.tensored, 1, duals[0]);
    return out;
}

struct ratl_check_report {
    std::vector<std::string> mismatches;
    long long checked = 0;
    bool ok() const { return mismatches.empty(); }
};

// Recomputes the filtrations of every cone summand through the closed-form
// 1/n expressions
//   A-tower:  I = max{i, j - r},  J = max{i-1, j - r} + l - floor((n-1)/2)
//   B-tower:  I = i,              J = i - 1 + l - floor((n-1)/2)
// (j in the coordinates of the original d = 1 complex, r the integer with
// s_l = offset(q) + r) together with the parity form of s_l, and diffs them
// against the generic tower assignments baked into the cone.
inline ratl_check_report ratl_filtration_check(const rational_surgery_result& rs, long long n) {
    ratl_check_report rep;
    const knot_bundle& tb = rs.tensored;
    const surgery_cone& cone = rs.cone;
    for (size_t idx = 0; idx < cone.complex.size(); ++idx) {
        const summand_info& s = cone.summands[idx];
        const basis_element& e = cone.complex.generator(idx);
        // s_l parity form
        rational expect_s = (n % 2 == 1) ? rational(s.l, n) : rational(2 * s.l + 1, 2 * n);
        if (s.s_l != expect_s) {
            rep.mismatches.push_back(e.id + ": s_l = " + s.s_l.to_string() + " expected " +
                                     expect_s.to_string());
            continue;
        }
        rational r_rat = s.s_l - tb.offsets[s.sector];
        if (!r_rat.is_integer()) {
            rep.mismatches.push_back(e.id + ": s_l - offset not an integer");
            continue;
        }
        rational jshift = rat(s.l - (n - 1) / 2);
        const filtered_complex& sec = tb.sectors[s.sector];
        const basis_element& src = sec.generator(sec.index_of(s.source_id));
        // head coordinates in the tensored sector, then in the d = 1 complex
        rational i = rat(-s.u_shift);
        rational j_orig = src.j - rat(s.u_shift) - tb.offsets[s.sector];
        rational I, J;
        if (s.tower == 'A') {
            I = std::max(i, j_orig - r_rat);
            J = std::max(i - rat(1), j_orig - r_rat) + jshift;
        } else {
            I = i;
            J = i - rat(1) + jshift;
        }
        ++rep.checked;
        if (I != rat(0))
            rep.mismatches.push_back(e.id + ": closed-form I = " + I.to_string() +
                                     " but heads are normalized to 0");
        if (J != e.j)
            rep.mismatches.push_back(e.id + ": closed-form J = " + J.to_string() + " but cone has " +
                                     e.j.to_string());
    }
    return rep;
}

}  // namespace floercone
