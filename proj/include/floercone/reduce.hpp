#pragma once

// Filtered maps between complexes, reduction (cancellation of differential
// terms preserving both filtrations), mapping cones, and the finite
// quasi-isomorphism certificates used to probe filtered maps.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "complex.hpp"

namespace floercone {

// An F_2[U]-linear map recorded against the source/target bases. The map does
// not own its complexes; every operation takes them explicitly.
struct filtered_map {
    std::vector<std::map<size_t, upoly>> cols;  // cols[x][y] = coefficient of y in f(x)
    rational degree;                            // each term satisfies gr(y) - 2n = gr(x) + degree
    rational shift;                             // ... and j(y) - n <= j(x) + shift

    static filtered_map zero(size_t src_size, rational degree = rat(0), rational shift = rat(0)) {
        filtered_map f;
        f.cols.resize(src_size);
        f.degree = std::move(degree);
        f.shift = std::move(shift);
        return f;
    }

    static filtered_map identity(size_t n) {
        filtered_map f = zero(n);
        for (size_t i = 0; i < n; ++i) f.cols[i][i] = upoly::one();
        return f;
    }

    void add_term(size_t from, size_t to, const upoly& p) {
        upoly& cur = cols[from][to];
        cur += p;
        if (cur.is_zero()) cols[from].erase(to);
    }

    // g after f: (g o f)(x) = g(f(x))
    static filtered_map compose(const filtered_map& g, const filtered_map& f) {
        filtered_map r = zero(f.cols.size(), f.degree + g.degree, f.shift + g.shift);
        for (size_t x = 0; x < f.cols.size(); ++x)
            for (const auto& [m, p] : f.cols[x])
                for (const auto& [y, q] : g.cols[m]) r.add_term(x, y, p * q);
        return r;
    }
};

inline bool is_chain_map(const filtered_map& f, const filtered_complex& src,
                         const filtered_complex& tgt) {
    for (size_t x = 0; x < src.size(); ++x) {
        std::map<size_t, upoly> lhs, rhs;
        for (const auto& [y, p] : f.cols[x])
            for (const auto& [z, q] : tgt.column(y)) {
                upoly& cur = lhs[z];
                cur += p * q;
                if (cur.is_zero()) lhs.erase(z);
            }
        for (const auto& [y, p] : src.column(x))
            for (const auto& [z, q] : f.cols[y]) {
                upoly& cur = rhs[z];
                cur += p * q;
                if (cur.is_zero()) rhs.erase(z);
            }
        if (lhs != rhs) return false;
    }
    return true;
}

inline validation_report check_filtered_map(const filtered_map& f, const filtered_complex& src,
                                            const filtered_complex& tgt) {
    validation_report rep;
    for (size_t x = 0; x < src.size(); ++x) {
        for (const auto& [y, p] : f.cols[x]) {
            for (long long n : p.exponents()) {
                if (tgt.generator(y).gr - rat(2 * n) != src.generator(x).gr + f.degree)
                    rep.violations.push_back({violation_kind::grading, src.generator(x).id,
                                              tgt.generator(y).id, "map term off declared degree"});
                if (tgt.generator(y).j - rat(n) > src.generator(x).j + f.shift)
                    rep.violations.push_back({violation_kind::filtration, src.generator(x).id,
                                              tgt.generator(y).id, "map term exceeds declared shift"});
            }
        }
    }
    if (!is_chain_map(f, src, tgt))
        rep.violations.push_back({violation_kind::d_squared, "", "", "not a chain map"});
    return rep;
}

// Result of reducing a complex: the reduced model together with the pair of
// mutually homotopy-inverse filtered chain maps relating it to the input.
struct reduction {
    filtered_complex reduced;
    filtered_map to_reduced;    // input -> reduced
    filtered_map from_reduced;  // reduced -> input
    size_t cancellations = 0;
};

// Cancels differential entries with U-exponent 0 and equal j (the part of the
// differential preserving both filtrations), highest gr first, ties broken by
// basis order. The result has no such entries, i.e. the induced differential
// on the doubly associated graded complex vanishes.
inline reduction reduce(const filtered_complex& c) {
    size_t n = c.size();
    std::vector<std::map<size_t, upoly>> cols(n);
    for (size_t x = 0; x < n; ++x) cols[x] = c.column(x);
    std::vector<bool> alive(n, true);

    // running change-of-basis maps over the original index set
    filtered_map r_total = filtered_map::identity(n);  // input -> current model
    filtered_map i_total = filtered_map::identity(n);  // current model -> input

    auto pick = [&]() -> std::pair<size_t, size_t> {
        bool found = false;
        size_t bx = 0, by = 0;
        for (size_t x = 0; x < n; ++x) {
            if (!alive[x]) continue;
            for (const auto& [y, p] : cols[x]) {
                if (!alive[y] || !p.has(0)) continue;
                if (c.generator(y).j != c.generator(x).j) continue;
                if (!found || c.generator(x).gr > c.generator(bx).gr ||
                    (c.generator(x).gr == c.generator(bx).gr && (x < bx || (x == bx && y < by)))) {
                    found = true;
                    bx = x;
                    by = y;
                }
            }
        }
        if (!found) return {n, n};
        return {bx, by};
    };

    size_t count = 0;
    for (;;) {
        auto [x, y] = pick();
        if (x == n) break;
        ++count;
        // dx = y + eps with unit coefficient on y
        std::map<size_t, upoly> eps = cols[x];
        {
            upoly& cy = eps[y];
            cy += upoly::one();
            if (cy.is_zero()) eps.erase(y);
        }
        alive[x] = alive[y] = false;

        std::vector<std::pair<size_t, upoly>> alphas;  // z with y-coefficient
        for (size_t z = 0; z < n; ++z) {
            if (!alive[z]) continue;
            auto it = cols[z].find(y);
            if (it != cols[z].end()) alphas.emplace_back(z, it->second);
        }
        for (auto& [z, alpha] : alphas) {
            cols[z].erase(y);
            for (const auto& [w, q] : eps) {
                if (!alive[w]) continue;
                upoly& cur = cols[z][w];
                cur += alpha * q;
                if (cur.is_zero()) cols[z].erase(w);
            }
        }
        for (size_t z = 0; z < n; ++z) {
            if (!alive[z]) {
                cols[z].clear();
                continue;
            }
            cols[z].erase(x);
            cols[z].erase(y);
        }
        // r(z) = z, r(x) = 0, r(y) = eps  (applied after r_total)
        filtered_map r = filtered_map::identity(n);
        r.cols[x].clear();
        r.cols[y].clear();
        for (const auto& [w, q] : eps)
            if (alive[w]) r.cols[y][w] = q;
        r_total = filtered_map::compose(r, r_total);
        // iota(z) = z + alpha_z x
        filtered_map iota = filtered_map::identity(n);
        for (auto& [z, alpha] : alphas) iota.cols[z][x] = alpha;
        i_total = filtered_map::compose(i_total, iota);
    }

    reduction out;
    out.cancellations = count;
    std::vector<size_t> new_index(n, SIZE_MAX);
    for (size_t x = 0; x < n; ++x) {
        if (!alive[x]) continue;
        new_index[x] = out.reduced.add_generator(c.generator(x));
    }
    for (size_t x = 0; x < n; ++x) {
        if (!alive[x]) continue;
        for (const auto& [y, p] : cols[x]) out.reduced.add_diff_term(new_index[x], new_index[y], p);
    }
    out.to_reduced = filtered_map::zero(n);
    for (size_t x = 0; x < n; ++x)
        for (const auto& [y, p] : r_total.cols[x])
            if (alive[y]) out.to_reduced.cols[x][new_index[y]] = p;
    out.from_reduced = filtered_map::zero(out.reduced.size());
    for (size_t x = 0; x < n; ++x) {
        if (!alive[x]) continue;
        for (const auto& [y, p] : i_total.cols[x]) out.from_reduced.cols[new_index[x]][y] = p;
    }
    return out;
}

// Mapping cone of f: src -> tgt. Gradings and filtration values are taken
// verbatim from the two complexes; the caller is responsible for supplying
// copies whose gradings make f a degree -1 map, as in the surgery formula.
inline filtered_complex mapping_cone(const filtered_map& f, const filtered_complex& src,
                                     const filtered_complex& tgt) {
    if (!is_chain_map(f, src, tgt))
        throw std::invalid_argument("mapping_cone: f is not a chain map");
    filtered_complex cone;
    std::vector<size_t> si(src.size()), ti(tgt.size());
    for (size_t x = 0; x < src.size(); ++x) {
        if (tgt.has_id(src.generator(x).id))
            throw std::invalid_argument("mapping_cone: id collision: " + src.generator(x).id);
        si[x] = cone.add_generator(src.generator(x));
    }
    for (size_t y = 0; y < tgt.size(); ++y) ti[y] = cone.add_generator(tgt.generator(y));
    for (size_t x = 0; x < src.size(); ++x) {
        for (const auto& [y, p] : src.column(x)) cone.add_diff_term(si[x], si[y], p);
        for (const auto& [y, p] : f.cols[x]) cone.add_diff_term(si[x], ti[y], p);
    }
    for (size_t y = 0; y < tgt.size(); ++y)
        for (const auto& [z, p] : tgt.column(y)) cone.add_diff_term(ti[y], ti[z], p);
    return cone;
}

struct probe_window {
    int_window i;
    rat_window j;
    std::string label;
};

struct quasi_iso_report {
    struct entry {
        std::string window;
        long long src_rank = 0, tgt_rank = 0, induced_rank = 0;
        bool iso = false;
    };
    std::vector<entry> entries;
    bool all_iso() const {
        for (const auto& e : entries)
            if (!e.iso) return false;
        return true;
    }
};

// rank of the map induced on homology by a chain map between finite complexes
inline long long induced_homology_rank(const finite_f2_complex& src, const finite_f2_complex& tgt,
                                       const std::function<std::vector<size_t>(size_t)>& image_of) {
    auto reps = src.homology_basis();
    // span of target boundaries
    std::map<long long, f2::vec> span;
    auto sweep = [&span](f2::vec v) {
        long long l = f2::low(v);
        while (l >= 0 && span.count(l)) {
            f2::add(v, span[l]);
            l = f2::low(v);
        }
        return v;
    };
    for (size_t x = 0; x < tgt.dim(); ++x) {
        f2::vec v = f2::make(tgt.dim());
        for (size_t y : tgt.boundary(x)) f2::flip(v, y);
        v = sweep(v);
        if (!f2::is_zero(v)) span[f2::low(v)] = v;
    }
    long long rank = 0;
    for (const auto& z : reps) {
        f2::vec img = f2::make(tgt.dim());
        for (size_t e = 0; e < src.dim(); ++e) {
            if (!f2::get(z, e)) continue;
            for (size_t t : image_of(e)) f2::flip(img, t);
        }
        img = sweep(img);
        if (!f2::is_zero(img)) {
            span[f2::low(img)] = img;
            ++rank;
        }
    }
    return rank;
}

// Finite certificate that f induces isomorphisms on the homology of probe
// subquotients. The report records which windows were checked; it is evidence
// for Prop-style quasi-isomorphism claims, not a proof over all windows.
inline quasi_iso_report check_filtered_quasi_iso(const filtered_map& f, const filtered_complex& src,
                                                 const filtered_complex& tgt,
                                                 const std::vector<probe_window>& windows) {
    quasi_iso_report rep;
    for (const auto& w : windows) {
        rat_window tgt_j = w.j;
        if (tgt_j.lo) tgt_j.lo = *tgt_j.lo + f.shift;
        if (tgt_j.hi) tgt_j.hi = *tgt_j.hi + f.shift;
        finite_f2_complex fs = subquotient(src, w.i, w.j);
        finite_f2_complex ft = subquotient(tgt, w.i, tgt_j);
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
        e.window = w.label;
        e.src_rank = fs.homology().total_rank();
        e.tgt_rank = ft.homology().total_rank();
        e.induced_rank = induced_homology_rank(fs, ft, image_of);
        e.iso = (e.src_rank == e.tgt_rank) && (e.induced_rank == e.src_rank);
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace floercone
