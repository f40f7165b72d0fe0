#pragma once

#include <floercone/builtin_data.hpp>
#include <floercone/io.hpp>

namespace floercone::testing {

inline filtered_complex trefoil_cfk() {
    filtered_complex c;
    c.add_generator({"a", rat(-2), rat(-1), "0"});
    c.add_generator({"b", rat(-1), rat(0), "0"});
    c.add_generator({"c", rat(0), rat(1), "0"});
    c.add_diff_term("b", "a", upoly::one());
    c.add_diff_term("b", "c", upoly(1));
    return c;
}

inline knot_bundle trefoil_bundle() {
    validation_report rep;
    knot_bundle b = load_bundle(parse_json(builtin::trefoil_bundle), rep);
    if (!rep.ok()) throw std::runtime_error("builtin trefoil bundle invalid: " + rep.to_string());
    return b;
}

inline knot_bundle unknot_bundle() {
    validation_report rep;
    knot_bundle b = load_bundle(parse_json(builtin::unknot_bundle), rep);
    if (!rep.ok()) throw std::runtime_error("builtin unknot bundle invalid: " + rep.to_string());
    return b;
}

// CFK of the dual knot in -1 surgery on the trefoil, with its honest flip
// (the one carrying the extra s -> t component; the bare basis involution is
// not a chain map here).
inline knot_bundle dual_trefoil_bundle(bool declare_lspace) {
    knot_bundle b;
    b.d = 1;
    b.k = 1;
    b.lspace = declare_lspace;
    filtered_complex c;
    c.add_generator({"p", rat(-2), rat(-1), "0"});
    c.add_generator({"q", rat(-1), rat(0), "0"});
    c.add_generator({"r", rat(-1), rat(0), "0"});
    c.add_generator({"s", rat(0), rat(0), "0"});
    c.add_generator({"t", rat(0), rat(1), "0"});
    c.add_diff_term("q", "p", upoly::one());
    c.add_diff_term("r", "t", upoly(1));
    b.sectors.push_back(c);
    b.offsets.push_back(rat(0));
    b.ungraded.push_back(false);
    flip_map f;
    f.from_sector = 0;
    f.anchor = rat(0);
    f.cols.resize(5);
    f.cols[c.index_of("p")][c.index_of("t")] = upoly(1);
    f.cols[c.index_of("q")][c.index_of("r")] = upoly::one();
    f.cols[c.index_of("r")][c.index_of("q")] = upoly::one();
    f.cols[c.index_of("s")][c.index_of("s")] = upoly::one();
    f.cols[c.index_of("s")][c.index_of("t")] = upoly::one();
    f.cols[c.index_of("t")][c.index_of("p")] = upoly(-1);
    b.flips.push_back(f);
    return b;
}

inline std::multiset<std::string> ja_multiset(const filtered_complex& c) {
    std::multiset<std::string> out;
    for (const auto& g : c.basis()) out.insert(g.j.to_string() + "|" + g.gr.to_string());
    return out;
}

// Searches for a doubly-filtered isomorphism between two reduced complexes:
// a degree-0, shift-0 filtered chain map whose bidegree-preserving part is a
// bijection. Between reduced complexes such a map is automatically a
// filtered isomorphism, so finding one certifies that src and tgt agree up
// to a filtered change of basis. Exhaustive over the legal entry set; meant
// for the small golden complexes.
inline bool find_filtered_iso(const filtered_complex& src, const filtered_complex& tgt) {
    if (src.size() != tgt.size()) return false;
    size_t n = src.size();
    struct slot {
        size_t x, y;
        long long e;
        bool preserving;
    };
    std::vector<slot> slots;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            rational de = (tgt.generator(y).gr - src.generator(x).gr) / rat(2);
            if (!de.is_integer()) continue;
            long long e = de.to_ll();
            if (e < 0) continue;                                      // U-power filtration
            if (tgt.generator(y).j - rat(e) > src.generator(x).j) continue;  // j filtration
            bool preserving =
                (e == 0) && (tgt.generator(y).j == src.generator(x).j);
            slots.push_back({x, y, e, preserving});
        }
    if (slots.size() > 24) return false;  // guard: golden complexes are tiny
    // group the basis by bidegree (j, gr); the multisets must agree
    std::map<std::string, std::vector<size_t>> src_deg, tgt_deg;
    for (size_t x = 0; x < n; ++x) {
        src_deg[src.generator(x).j.to_string() + "|" + src.generator(x).gr.to_string()].push_back(x);
        tgt_deg[tgt.generator(x).j.to_string() + "|" + tgt.generator(x).gr.to_string()].push_back(x);
    }
    for (const auto& [key, xs] : src_deg) {
        auto it = tgt_deg.find(key);
        if (it == tgt_deg.end() || it->second.size() != xs.size()) return false;
    }
    for (uint64_t mask = 0; mask < (uint64_t(1) << slots.size()); ++mask) {
        filtered_map f = filtered_map::zero(n);
        for (size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) f.add_term(slots[i].x, slots[i].y, upoly(slots[i].e));
        // the bidegree-preserving part must be invertible blockwise over F_2;
        // a filtered chain map between reduced complexes inducing a bijection
        // on the associated bigraded pieces is a filtered isomorphism
        bool invertible = true;
        for (const auto& [key, xs] : src_deg) {
            const auto& ys = tgt_deg[key];
            std::vector<f2::vec> cols;
            for (size_t x : xs) {
                f2::vec v = f2::make(ys.size());
                for (size_t yi = 0; yi < ys.size(); ++yi) {
                    auto it = f.cols[x].find(ys[yi]);
                    if (it != f.cols[x].end() && it->second.has(0)) f2::flip(v, yi);
                }
                cols.push_back(std::move(v));
            }
            if (f2::rank(std::move(cols)) != xs.size()) {
                invertible = false;
                break;
            }
        }
        if (!invertible) continue;
        if (!is_chain_map(f, src, tgt)) continue;
        return true;
    }
    return false;
}

}  // namespace floercone::testing
