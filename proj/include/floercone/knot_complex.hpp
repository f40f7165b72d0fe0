#pragma once

// Bundled CFK data for a rationally null-homologous knot: one filtered
// complex per spin-c sector (the i<=0 model, free over F_2[U], with the j
// field holding the Alexander grading), flip maps between consecutive
// sectors, Alexander symmetry checks, and the rank-1 tensor product used by
// the rational-surgery pipeline.

#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "reduce.hpp"

namespace floercone {

// Flip map from sector q to sector q+1 (mod d), recorded at a single anchor
// value s. At anchor s the map is filtered from the j filtration of the
// source to the shifted U-power filtration of the target: every term U^n y
// of psi(x) satisfies n >= s - j(x), and the map is homogeneous of Maslov
// degree -2s. Negative exponents are legitimate here (the i<=0 model of the
// target only bounds exponents after the anchor bookkeeping, not termwise).
// Other anchors are derived through psi_{s+1} = U psi_s.
struct flip_map {
    size_t from_sector = 0;
    rational anchor;
    std::vector<std::map<size_t, upoly>> cols;
};

struct knot_bundle {
    long long d = 1;
    long long k = 0;
    bool lspace = false;
    std::vector<filtered_complex> sectors;  // index q = 0..d-1
    std::vector<rational> offsets;          // Alexander offset of sector q, mod 1
    std::vector<flip_map> flips;            // flips[q] : sector q -> q+1 mod d
    std::vector<bool> ungraded;             // per-sector flag; gr output suppressed when set

    const filtered_complex& sector(size_t q) const { return sectors[q % sectors.size()]; }
};

inline validation_report validate_bundle(const knot_bundle& b) {
    validation_report rep;
    auto fail = [&rep](violation_kind kind, const std::string& a, const std::string& t,
                       const std::string& msg) { rep.violations.push_back({kind, a, t, msg}); };

    if (b.k == 0) {
        fail(violation_kind::structural, "k", "", "framing k must be nonzero");
        return rep;
    }
    if (b.d <= 0) {
        fail(violation_kind::structural, "d", "", "order d must be positive");
        return rep;
    }
    if (b.sectors.size() != static_cast<size_t>(b.d)) {
        fail(violation_kind::structural, "sectors", "",
             "sector count " + std::to_string(b.sectors.size()) + " != d = " + std::to_string(b.d));
        return rep;
    }
    if (b.flips.size() != static_cast<size_t>(b.d)) {
        fail(violation_kind::structural, "flips", "",
             "flip count " + std::to_string(b.flips.size()) + " != d = " + std::to_string(b.d));
        return rep;
    }
    for (size_t q = 0; q < b.sectors.size(); ++q) {
        validation_report sec = b.sectors[q].validate();
        for (auto& v : sec.violations) {
            v.detail = "sector " + std::to_string(q) + ": " + v.detail;
            rep.violations.push_back(v);
        }
        for (const auto& g : b.sectors[q].basis())
            if (g.j.mod1() != b.offsets[q].mod1())
                fail(violation_kind::sector_offset, g.id, "",
                     "sector " + std::to_string(q) + ": Alexander value " + g.j.to_string() +
                         " not in coset " + b.offsets[q].mod1().to_string());
    }
    // consecutive sector offsets differ by k/d mod 1
    rational step = rational(b.k, b.d);
    for (size_t q = 0; q < b.sectors.size(); ++q) {
        size_t qn = (q + 1) % b.sectors.size();
        if ((b.offsets[qn] - b.offsets[q] - step).mod1() != rat(0))
            fail(violation_kind::sector_offset, "sector " + std::to_string(q), "",
                 "offset step to sector " + std::to_string(qn) + " is not k/d mod 1");
    }
    if (!rep.ok()) return rep;
    for (size_t q = 0; q < b.flips.size(); ++q) {
        const flip_map& f = b.flips[q];
        const filtered_complex& src = b.sectors[q];
        const filtered_complex& tgt = b.sectors[(q + 1) % b.sectors.size()];
        if (f.from_sector != q)
            fail(violation_kind::structural, "flip " + std::to_string(q), "", "from_sector mismatch");
        if (f.cols.size() != src.size()) {
            fail(violation_kind::structural, "flip " + std::to_string(q), "", "column count mismatch");
            continue;
        }
        if ((f.anchor - b.offsets[q]).mod1() != rat(0))
            fail(violation_kind::sector_offset, "flip " + std::to_string(q), "",
                 "anchor " + f.anchor.to_string() + " not in source coset");
        for (size_t x = 0; x < src.size(); ++x) {
            for (const auto& [y, p] : f.cols[x]) {
                for (long long n : p.exponents()) {
                    if (tgt.generator(y).gr - rat(2 * n) != src.generator(x).gr - rat(2) * f.anchor)
                        fail(violation_kind::grading, src.generator(x).id, tgt.generator(y).id,
                             "flip " + std::to_string(q) + ": term off degree -2s");
                    if (rat(n) < f.anchor - src.generator(x).j)
                        fail(violation_kind::filtration, src.generator(x).id, tgt.generator(y).id,
                             "flip " + std::to_string(q) + ": U^" + std::to_string(n) +
                                 " term below the anchor bound s - j(x)");
                }
            }
        }
        filtered_map fm;
        fm.cols = f.cols;
        if (!is_chain_map(fm, src, tgt))
            fail(violation_kind::d_squared, "flip " + std::to_string(q), "", "flip is not a chain map");
    }
    return rep;
}

// Flip entries rescaled to anchor s via psi_{s+1} = U psi_s. The rescaling
// exponent s - anchor must be an integer; callers surface this as a missing
// flip anchor for the requested tower.
inline std::optional<std::vector<std::map<size_t, upoly>>> flip_at_anchor(const flip_map& f,
                                                                          const rational& s) {
    rational delta = s - f.anchor;
    if (!delta.is_integer()) return std::nullopt;
    long long e = delta.to_ll();
    std::vector<std::map<size_t, upoly>> cols(f.cols.size());
    for (size_t x = 0; x < f.cols.size(); ++x)
        for (const auto& [y, p] : f.cols[x]) cols[x][y] = p.shifted(e);
    return cols;
}

// Finite certificate for the flip invariant: restricted to the windows
// {j <= anchor, exponent <= cap} -> {-cap <= i <= 0}, the flip must induce an
// isomorphism on F_2 homology.
inline quasi_iso_report::entry flip_probe(const knot_bundle& b, size_t q, long long cap = 4) {
    const flip_map& f = b.flips[q];
    const filtered_complex& src = b.sectors[q];
    const filtered_complex& tgt = b.sectors[(q + 1) % b.sectors.size()];
    finite_f2_complex fs = subquotient(src, int_window::at_least(-cap), rat_window::at_most(f.anchor));
    finite_f2_complex ft = subquotient(tgt, {-cap, 0}, rat_window::all());
    auto image_of = [&](size_t e) {
        std::vector<size_t> out;
        const auto& el = fs.at(e);
        for (const auto& [y, p] : f.cols[el.source])
            for (long long n : p.exponents()) {
                auto t = ft.find(y, el.translate + n);
                if (t) out.push_back(*t);
            }
        return out;
    };
    quasi_iso_report::entry e;
    e.window = "flip " + std::to_string(q) + " {j<=" + f.anchor.to_string() + ",U<=" +
               std::to_string(cap) + "} -> {i<=0,U<=" + std::to_string(cap) + "}";
    e.src_rank = fs.homology().total_rank();
    e.tgt_rank = ft.homology().total_rank();
    e.induced_rank = induced_homology_rank(fs, ft, image_of);
    e.iso = (e.src_rank == e.tgt_rank) && (e.induced_rank == e.src_rank);
    return e;
}

struct symmetry_report {
    std::vector<std::pair<rational, long long>> ranks;  // hat-HFK rank per Alexander value
    bool pass = false;

    long long rank_at(const rational& r) const {
        for (const auto& [a, n] : ranks)
            if (a == r) return n;
        return 0;
    }
};

// hat-HFK of (Y,K) from the bundle: homology of the associated graded of the
// i=0 slices, summed over all sectors and grouped by Alexander value. In a
// reduced sector the associated-graded differential vanishes, so the ranks
// are read off the reduced basis. Passes iff rank(r) = rank(-r) for all r.
inline symmetry_report check_alexander_symmetry(const knot_bundle& b) {
    symmetry_report rep;
    std::map<std::string, long long> tally;
    std::vector<rational> values;
    for (const auto& sec : b.sectors) {
        reduction r = reduce(sec);
        for (const auto& g : r.reduced.basis()) {
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

// Builds the candidate flip from the i <-> j symmetry of the reduced complex:
// a basis matching sigma with A(sigma x) = -A(x), gr(sigma x) = gr(x) - 2A(x),
// entries psi(x) = U^(s - A(x)) sigma(x), transported back through the
// reduction. Only attempted when d = 1 and the ambient manifold is declared
// an L-space, where any such filtered quasi-isomorphism is the flip map up to
// filtered homotopy. Errors ask for an explicit flip; the naive guess can be
// wrong for knots in non-L-spaces.
inline flip_map build_symmetry_flip(const knot_bundle& b, const rational& s) {
    if (b.d != 1)
        throw std::invalid_argument("build_symmetry_flip: requires d = 1");
    if (!b.lspace)
        throw std::invalid_argument(
            "build_symmetry_flip: ambient manifold not declared an L-space; supply an explicit flip");
    const filtered_complex& c = b.sectors[0];
    reduction red = reduce(c);
    const filtered_complex& rc = red.reduced;

    std::vector<std::optional<size_t>> match(rc.size());
    std::vector<bool> used(rc.size(), false);
    for (size_t x = 0; x < rc.size(); ++x) {
        rational want_A = -rc.generator(x).j;
        rational want_gr = rc.generator(x).gr - rat(2) * rc.generator(x).j;
        for (size_t y = 0; y < rc.size(); ++y) {
            if (used[y]) continue;
            if (rc.generator(y).j == want_A && rc.generator(y).gr == want_gr) {
                match[x] = y;
                used[y] = true;
                break;
            }
        }
        if (!match[x])
            throw std::runtime_error(
                "build_symmetry_flip: no symmetric basis matching for generator " +
                rc.generator(x).id + "; supply an explicit flip");
    }
    filtered_map psi_red = filtered_map::zero(rc.size(), rat(-2) * s, rat(0));
    for (size_t x = 0; x < rc.size(); ++x) {
        rational e = s - rc.generator(x).j;
        if (!e.is_integer())
            throw std::runtime_error("build_symmetry_flip: anchor " + s.to_string() +
                                     " not in the Alexander coset");
        psi_red.add_term(x, *match[x], upoly(e.to_ll()));
    }
    if (!is_chain_map(psi_red, rc, rc))
        throw std::runtime_error(
            "build_symmetry_flip: symmetric matching is not a chain map; supply an explicit flip");

    filtered_map psi = filtered_map::compose(red.from_reduced,
                                             filtered_map::compose(psi_red, red.to_reduced));
    flip_map out;
    out.from_sector = 0;
    out.anchor = s;
    out.cols = psi.cols;

    knot_bundle probe = b;
    probe.flips[0] = out;
    validation_report vr = validate_bundle(probe);
    if (!vr.ok())
        throw std::runtime_error("build_symmetry_flip: candidate violates flip invariants:\n" +
                                 vr.to_string());
    auto cert = flip_probe(probe, 0);
    if (!cert.iso)
        throw std::runtime_error(
            "build_symmetry_flip: candidate fails the quasi-isomorphism certificate; supply an "
            "explicit flip");
    return out;
}

// Kunneth tensor with a rank-1 bundle described by its shift table: per new
// sector q, an Alexander shift and a Maslov shift. The result has one sector
// per table entry, each a shifted copy of the d=1 input, with flips carried
// through the identification.
struct sector_shift {
    rational A_shift;
    rational gr_shift;
};

inline knot_bundle tensor_bundle(const knot_bundle& b, const std::vector<sector_shift>& shifts) {
    if (b.d != 1)
        throw std::invalid_argument("tensor_bundle: first factor must have d = 1");
    if (shifts.empty()) throw std::invalid_argument("tensor_bundle: empty shift table");
    size_t n = shifts.size();

    knot_bundle out;
    out.lspace = b.lspace;
    out.d = static_cast<long long>(n);
    if (n == 1) {
        out.k = b.k;
    } else {
        // k' is pinned by the offset steps: offset(q+1) - offset(q) = k'/n mod 1
        rational step = (shifts[1].A_shift - shifts[0].A_shift).mod1();
        rational kr = step * rat(static_cast<long long>(n));
        if (!kr.is_integer())
            throw std::invalid_argument("tensor_bundle: shift table steps are not multiples of 1/n");
        long long kp = kr.to_ll();
        if (kp == 0) kp = static_cast<long long>(n);
        out.k = kp;
        for (size_t q = 0; q < n; ++q) {
            size_t qn = (q + 1) % n;
            if ((shifts[qn].A_shift - shifts[q].A_shift - rational(kp, static_cast<long long>(n)))
                    .mod1() != rat(0))
                throw std::invalid_argument("tensor_bundle: shift table has inconsistent offset steps");
        }
    }
    for (size_t q = 0; q < n; ++q) {
        filtered_complex sec;
        for (const auto& g : b.sectors[0].basis()) {
            basis_element e = g;
            e.gr = e.gr + shifts[q].gr_shift;
            e.j = e.j + shifts[q].A_shift;
            e.sector = std::to_string(q);
            sec.add_generator(e);
        }
        for (size_t x = 0; x < b.sectors[0].size(); ++x)
            for (const auto& [y, p] : b.sectors[0].column(x)) sec.add_diff_term(x, y, p);
        out.sectors.push_back(std::move(sec));
        out.offsets.push_back(b.offsets[0] + shifts[q].A_shift);
        out.ungraded.push_back(false);

        size_t qn = (q + 1) % n;
        rational anchor = b.flips[0].anchor + shifts[q].A_shift;
        rational e = shifts[q].A_shift + (shifts[qn].gr_shift - shifts[q].gr_shift) / rat(2);
        if (!e.is_integer())
            throw std::invalid_argument(
                "tensor_bundle: shift table does not yield an integral flip rescaling at sector " +
                std::to_string(q));
        flip_map fl;
        fl.from_sector = q;
        fl.anchor = anchor;
        fl.cols.resize(b.sectors[0].size());
        for (size_t x = 0; x < b.sectors[0].size(); ++x)
            for (const auto& [y, p] : b.flips[0].cols[x]) fl.cols[x][y] = p.shifted(e.to_ll());
        out.flips.push_back(std::move(fl));
    }
    validation_report vr = validate_bundle(out);
    if (!vr.ok())
        throw std::runtime_error("tensor_bundle: result fails validation:\n" + vr.to_string());
    return out;
}

}  // namespace floercone
