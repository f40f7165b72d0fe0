#pragma once

// Finitely generated free chain complexes over F_2[U] carrying a rational
// Maslov grading and a second rational filtration of Alexander type, plus
// the finite F_2 subquotient complexes cut out by windows on the two
// filtration coordinates.
//
// Conventions, fixed throughout the library:
//   * a basis element x sits at U-power coordinate i = 0; the translate
//     U^n x sits at i = -n and second filtration j(x) - n,
//   * the differential has Maslov degree -1 and multiplication by U has
//     degree -2, so a term U^n y in dx forces n = (gr(y) - gr(x) + 1)/2,
//   * the differential never raises the second filtration: j(y) - n <= j(x).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "numeric.hpp"
#include "upoly.hpp"

namespace floercone {

struct basis_element {
    std::string id;
    rational gr;
    rational j;
    std::string sector;
};

enum class violation_kind {
    structural,      // malformed input: duplicate ids, unknown targets, negative exponents
    d_squared,       // d^2 != 0
    grading,         // term violating gr(y) - 2n = gr(x) - 1
    filtration,      // term violating j(y) - n <= j(x)
    sector_offset,   // gr or j not congruent mod 1 within a sector
};

struct violation {
    violation_kind kind;
    std::string from, to;
    std::string detail;
};

struct validation_report {
    std::vector<violation> violations;
    bool ok() const { return violations.empty(); }
    bool has_structural() const {
        for (const auto& v : violations)
            if (v.kind == violation_kind::structural) return true;
        return false;
    }
    std::string to_string() const {
        std::string out;
        for (const auto& v : violations) {
            const char* k = "";
            switch (v.kind) {
                case violation_kind::structural: k = "structural"; break;
                case violation_kind::d_squared: k = "d-squared"; break;
                case violation_kind::grading: k = "grading"; break;
                case violation_kind::filtration: k = "filtration"; break;
                case violation_kind::sector_offset: k = "sector-offset"; break;
            }
            out += std::string(k) + " (" + v.from + (v.to.empty() ? "" : " -> " + v.to) + "): " + v.detail + "\n";
        }
        return out;
    }
};

class filtered_complex {
public:
    filtered_complex() = default;

    size_t add_generator(basis_element e) {
        size_t idx = basis_.size();
        index_[e.id] = idx;
        basis_.push_back(std::move(e));
        cols_.emplace_back();
        return idx;
    }

    // records U^(exps) * to inside d(from); accumulates mod 2
    void add_diff_term(size_t from, size_t to, const upoly& p) {
        if (p.is_zero()) return;
        upoly& cur = cols_[from][to];
        cur += p;
        if (cur.is_zero()) cols_[from].erase(to);
    }
    void add_diff_term(const std::string& from, const std::string& to, const upoly& p) {
        add_diff_term(index_of(from), index_of(to), p);
    }

    size_t size() const { return basis_.size(); }
    const basis_element& generator(size_t i) const { return basis_[i]; }
    const std::vector<basis_element>& basis() const { return basis_; }
    const std::map<size_t, upoly>& column(size_t i) const { return cols_[i]; }

    bool has_id(const std::string& id) const { return index_.count(id) != 0; }
    size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("unknown generator id: " + id);
        return it->second;
    }

    validation_report validate() const {
        validation_report rep;
        std::set<std::string> seen;
        for (const auto& b : basis_) {
            if (!seen.insert(b.id).second)
                rep.violations.push_back({violation_kind::structural, b.id, "", "duplicate id"});
        }
        // per-sector congruence of gr and j offsets
        std::map<std::string, std::pair<rational, rational>> offsets;
        for (const auto& b : basis_) {
            auto it = offsets.find(b.sector);
            if (it == offsets.end()) {
                offsets.emplace(b.sector, std::make_pair(b.gr.mod1(), b.j.mod1()));
            } else {
                if (b.gr.mod1() != it->second.first)
                    rep.violations.push_back({violation_kind::sector_offset, b.id, "",
                                              "gr " + b.gr.to_string() + " not congruent mod 1 within sector " + b.sector});
                if (b.j.mod1() != it->second.second)
                    rep.violations.push_back({violation_kind::sector_offset, b.id, "",
                                              "j " + b.j.to_string() + " not congruent mod 1 within sector " + b.sector});
            }
        }
        for (size_t x = 0; x < size(); ++x) {
            for (const auto& [y, p] : cols_[x]) {
                for (long long n : p.exponents()) {
                    if (n < 0) {
                        rep.violations.push_back({violation_kind::structural, basis_[x].id, basis_[y].id,
                                                  "negative exponent " + std::to_string(n)});
                        continue;
                    }
                    if (basis_[y].gr - rat(2 * n) != basis_[x].gr - rat(1))
                        rep.violations.push_back({violation_kind::grading, basis_[x].id, basis_[y].id,
                                                  "U^" + std::to_string(n) + " term has degree " +
                                                      (basis_[y].gr - rat(2 * n) - basis_[x].gr).to_string()});
                    if (basis_[y].j - rat(n) > basis_[x].j)
                        rep.violations.push_back({violation_kind::filtration, basis_[x].id, basis_[y].id,
                                                  "U^" + std::to_string(n) + " term raises j by " +
                                                      (basis_[y].j - rat(n) - basis_[x].j).to_string()});
                }
            }
        }
        if (!rep.has_structural()) {
            for (size_t x = 0; x < size(); ++x) {
                std::map<size_t, upoly> sq;
                for (const auto& [y, p] : cols_[x]) {
                    for (const auto& [z, q] : cols_[y]) {
                        upoly& cur = sq[z];
                        cur += p * q;
                        if (cur.is_zero()) sq.erase(z);
                    }
                }
                for (const auto& [z, q] : sq)
                    rep.violations.push_back({violation_kind::d_squared, basis_[x].id, basis_[z].id,
                                              "d^2 term " + q.to_string()});
            }
        }
        return rep;
    }

private:
    std::vector<basis_element> basis_;
    std::vector<std::map<size_t, upoly>> cols_;  // cols_[x][y] = coefficient of y in dx
    std::unordered_map<std::string, size_t> index_;
};

// half-open-free closed intervals; absent bound means unbounded
struct int_window {
    std::optional<long long> lo, hi;
    bool contains(long long v) const {
        return (!lo || v >= *lo) && (!hi || v <= *hi);
    }
    static int_window all() { return {}; }
    static int_window exactly(long long v) { return {v, v}; }
    static int_window at_most(long long v) { return {std::nullopt, v}; }
    static int_window at_least(long long v) { return {v, std::nullopt}; }
};

struct rat_window {
    std::optional<rational> lo, hi;
    bool contains(const rational& v) const {
        return (!lo || v >= *lo) && (!hi || v <= *hi);
    }
    static rat_window all() { return {}; }
    static rat_window exactly(rational v) { return {v, v}; }
    static rat_window at_most(rational v) { return {std::nullopt, std::move(v)}; }
};

// Homology ranks indexed by (spin-c label, Alexander value, Maslov grading).
// Absent coordinates are allowed: e.g. hat-HF tables have no Alexander column.
struct graded_table {
    struct row {
        std::string spinc;
        std::optional<rational> A;
        std::optional<rational> gr;
        long long rank = 0;
    };
    std::vector<row> rows;

    void add(const std::string& spinc, std::optional<rational> A, std::optional<rational> gr,
             long long rank = 1) {
        for (auto& r : rows) {
            if (r.spinc == spinc && r.A == A && r.gr == gr) {
                r.rank += rank;
                return;
            }
        }
        rows.push_back({spinc, std::move(A), std::move(gr), rank});
    }

    void absorb(const graded_table& o) {
        for (const auto& r : o.rows) add(r.spinc, r.A, r.gr, r.rank);
    }

    long long total_rank() const {
        long long t = 0;
        for (const auto& r : rows) t += r.rank;
        return t;
    }

    long long rank_at_A(const rational& a) const {
        long long t = 0;
        for (const auto& r : rows)
            if (r.A && *r.A == a) t += r.rank;
        return t;
    }

    void sort() {
        std::sort(rows.begin(), rows.end(), [](const row& a, const row& b) {
            if (a.spinc != b.spinc) return a.spinc < b.spinc;
            if (a.A != b.A) {
                if (!a.A || !b.A) return static_cast<bool>(b.A);
                return *a.A < *b.A;
            }
            if (a.gr != b.gr) {
                if (!a.gr || !b.gr) return static_cast<bool>(b.gr);
                return *a.gr < *b.gr;
            }
            return false;
        });
    }

    friend bool operator==(graded_table a, graded_table b) {
        a.sort();
        b.sort();
        if (a.rows.size() != b.rows.size()) return false;
        for (size_t i = 0; i < a.rows.size(); ++i) {
            const auto& x = a.rows[i];
            const auto& y = b.rows[i];
            if (x.spinc != y.spinc || x.A != y.A || x.gr != y.gr || x.rank != y.rank) return false;
        }
        return true;
    }
};

// F_2 bit-vector helpers used by the finite complexes below.
namespace f2 {

using vec = std::vector<uint64_t>;

inline vec make(size_t dim) { return vec((dim + 63) / 64, 0); }
inline void flip(vec& v, size_t i) { v[i / 64] ^= (uint64_t(1) << (i % 64)); }
inline bool get(const vec& v, size_t i) { return (v[i / 64] >> (i % 64)) & 1; }
inline void add(vec& a, const vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}
inline bool is_zero(const vec& v) {
    for (uint64_t w : v)
        if (w) return false;
    return true;
}
inline long long low(const vec& v) {  // highest set bit index, -1 if zero
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i]) return static_cast<long long>(i) * 64 + (63 - __builtin_clzll(v[i]));
    }
    return -1;
}

// Gaussian elimination; returns rank. Optionally records a basis of the span.
inline size_t rank(std::vector<vec> cols) {
    size_t r = 0;
    std::map<long long, size_t> pivot;  // low -> column index
    for (size_t c = 0; c < cols.size(); ++c) {
        long long l = low(cols[c]);
        while (l >= 0 && pivot.count(l)) {
            add(cols[c], cols[pivot[l]]);
            l = low(cols[c]);
        }
        if (l >= 0) {
            pivot[l] = c;
            ++r;
        }
    }
    return r;
}

}  // namespace f2

// A finite-dimensional F_2 chain complex whose elements are U-translates of
// filtered-complex generators; carries (i, j, gr) per element.
class finite_f2_complex {
public:
    struct element {
        std::string id;        // display id, e.g. "b@2" for U^2 b
        size_t source = 0;     // index into the originating complex, when any
        long long translate = 0;  // the n of U^n x
        long long i = 0;       // = -translate
        rational j;
        rational gr;
    };

    size_t add_element(element e) {
        key_[{e.source, e.translate}] = elements_.size();
        elements_.push_back(std::move(e));
        cols_.emplace_back();
        return elements_.size() - 1;
    }

    std::optional<size_t> find(size_t source, long long translate) const {
        auto it = key_.find({source, translate});
        if (it == key_.end()) return std::nullopt;
        return it->second;
    }

    void add_boundary(size_t from, size_t to) {
        auto& c = cols_[from];
        auto it = std::find(c.begin(), c.end(), to);
        if (it == c.end())
            c.push_back(to);
        else
            c.erase(it);
    }

    size_t dim() const { return elements_.size(); }
    const element& at(size_t i) const { return elements_[i]; }
    const std::vector<size_t>& boundary(size_t i) const { return cols_[i]; }

    bool d_squared_zero() const {
        for (size_t x = 0; x < dim(); ++x) {
            std::set<size_t> acc;
            for (size_t y : cols_[x])
                for (size_t z : cols_[y]) {
                    if (!acc.insert(z).second) acc.erase(z);
                }
            if (!acc.empty()) return false;
        }
        return true;
    }

    size_t boundary_rank() const {
        std::vector<f2::vec> cols;
        for (size_t x = 0; x < dim(); ++x) {
            f2::vec v = f2::make(dim());
            for (size_t y : cols_[x]) f2::flip(v, y);
            cols.push_back(std::move(v));
        }
        return f2::rank(std::move(cols));
    }

    // Homology ranks per (gr, j); the j label of a class is its birth level
    // in the second filtration (persistence pairing over j, then gr order).
    // Total reported rank always equals dim - 2 * rank(boundary).
    graded_table homology(const std::string& spinc_label = "", bool with_A = true,
                          bool with_gr = true) const {
        std::vector<size_t> order(dim());
        for (size_t i = 0; i < dim(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (elements_[a].j != elements_[b].j) return elements_[a].j < elements_[b].j;
            if (elements_[a].gr != elements_[b].gr) return elements_[a].gr < elements_[b].gr;
            return a < b;
        });
        std::vector<size_t> pos(dim());
        for (size_t p = 0; p < dim(); ++p) pos[order[p]] = p;

        std::vector<f2::vec> cols(dim());
        for (size_t x = 0; x < dim(); ++x) {
            f2::vec v = f2::make(dim());
            for (size_t y : cols_[x]) f2::flip(v, pos[y]);
            cols[pos[x]] = std::move(v);
        }
        std::map<long long, size_t> pivot;
        std::vector<bool> paired(dim(), false);
        for (size_t c = 0; c < dim(); ++c) {
            long long l = f2::low(cols[c]);
            while (l >= 0 && pivot.count(l)) {
                f2::add(cols[c], cols[pivot[l]]);
                l = f2::low(cols[c]);
            }
            if (l >= 0) {
                pivot[l] = c;
                paired[c] = true;
                paired[static_cast<size_t>(l)] = true;
            }
        }
        graded_table t;
        for (size_t c = 0; c < dim(); ++c) {
            if (paired[c]) continue;
            const element& e = elements_[order[c]];
            t.add(spinc_label, with_A ? std::optional<rational>(e.j) : std::nullopt,
                  with_gr ? std::optional<rational>(e.gr) : std::nullopt);
        }
        return t;
    }

    // cycle representatives spanning H, as bit-vectors over the element basis
    std::vector<f2::vec> homology_basis() const {
        std::vector<f2::vec> bcols;
        for (size_t x = 0; x < dim(); ++x) {
            f2::vec v = f2::make(dim());
            for (size_t y : cols_[x]) f2::flip(v, y);
            if (!f2::is_zero(v)) bcols.push_back(std::move(v));
        }
        // kernel of the boundary via column reduction with recorded combinations
        std::vector<f2::vec> cols(dim()), combo(dim());
        for (size_t x = 0; x < dim(); ++x) {
            cols[x] = f2::make(dim());
            combo[x] = f2::make(dim());
            for (size_t y : cols_[x]) f2::flip(cols[x], y);
            f2::flip(combo[x], x);
        }
        std::map<long long, size_t> pivot;
        std::vector<f2::vec> kernel;
        for (size_t c = 0; c < dim(); ++c) {
            long long l = f2::low(cols[c]);
            while (l >= 0 && pivot.count(l)) {
                size_t p = pivot[l];
                f2::add(cols[c], cols[p]);
                f2::add(combo[c], combo[p]);
                l = f2::low(cols[c]);
            }
            if (l >= 0)
                pivot[l] = c;
            else
                kernel.push_back(combo[c]);
        }
        // reduce kernel vectors against boundaries; keep the independent ones
        std::map<long long, f2::vec> span;
        auto sweep = [&span](f2::vec v) -> f2::vec {
            long long l = f2::low(v);
            while (l >= 0 && span.count(l)) {
                f2::add(v, span[l]);
                l = f2::low(v);
            }
            return v;
        };
        for (auto& b : bcols) {
            f2::vec v = sweep(b);
            if (!f2::is_zero(v)) span[f2::low(v)] = v;
        }
        std::vector<f2::vec> reps;
        for (auto& z : kernel) {
            f2::vec v = sweep(z);
            if (!f2::is_zero(v)) {
                span[f2::low(v)] = v;
                reps.push_back(z);
            }
        }
        return reps;
    }

private:
    std::vector<element> elements_;
    std::vector<std::vector<size_t>> cols_;
    std::map<std::pair<size_t, long long>, size_t> key_;
};

// The finite F_2 complex spanned by the translates U^n x whose coordinates
// (i, j) = (-n, j(x) - n) lie in both windows; differential terms leaving the
// windows are dropped. Rejects window pairs that cut out an infinite set.
inline finite_f2_complex subquotient(const filtered_complex& c, const int_window& iwin,
                                     const rat_window& jwin) {
    if (!iwin.hi && !jwin.hi)
        throw std::invalid_argument("subquotient: window unbounded above on both coordinates");
    if (!iwin.lo && !jwin.lo)
        throw std::invalid_argument("subquotient: window unbounded below on both coordinates");

    finite_f2_complex out;
    for (size_t x = 0; x < c.size(); ++x) {
        const auto& b = c.generator(x);
        // translate bounds: i = -n in iwin, j(x) - n in jwin
        std::optional<long long> nlo, nhi;
        if (iwin.hi) nlo = -*iwin.hi;
        if (jwin.hi) {
            long long m = (b.j - *jwin.hi).ceil().to_ll();
            nlo = nlo ? std::max(*nlo, m) : m;
        }
        if (iwin.lo) nhi = -*iwin.lo;
        if (jwin.lo) {
            long long m = (b.j - *jwin.lo).floor().to_ll();
            nhi = nhi ? std::min(*nhi, m) : m;
        }
        for (long long n = *nlo; n <= *nhi; ++n) {
            if (!iwin.contains(-n) || !jwin.contains(b.j - rat(n))) continue;
            finite_f2_complex::element e;
            e.id = n == 0 ? b.id : b.id + "@" + std::to_string(n);
            e.source = x;
            e.translate = n;
            e.i = -n;
            e.j = b.j - rat(n);
            e.gr = b.gr - rat(2 * n);
            out.add_element(e);
        }
    }
    for (size_t x = 0; x < c.size(); ++x) {
        for (const auto& [y, p] : c.column(x)) {
            for (long long e : p.exponents()) {
                // U^n x -> U^(n+e) y for every surviving pair of translates
                for (size_t from = 0; from < out.dim(); ++from) {
                    if (out.at(from).source != x) continue;
                    auto to = out.find(y, out.at(from).translate + e);
                    if (to) out.add_boundary(from, *to);
                }
            }
        }
    }
    return out;
}

}  // namespace floercone
