#include <doctest.h>
#include <floercone/reduce.hpp>

#include <random>

#include "helpers.hpp"

using namespace floercone;

namespace {

// Random valid filtered complexes with a known reduced model: start from a
// direct sum of two-generator pieces (some cancelling, some not) and single
// generators, then scramble by random filtered changes of basis. The
// scrambling conjugates the differential, so validity and the reduced
// (gr, j) multiset are preserved by construction.
struct random_complex {
    filtered_complex c;
    std::multiset<std::string> expected_reduced;
};

random_complex make_random_complex(std::mt19937& rng, size_t max_pairs = 4, size_t max_singles = 4) {
    auto ri = [&rng](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    filtered_complex c;
    std::multiset<std::string> survivors;
    size_t pairs = 1 + static_cast<size_t>(ri(0, static_cast<long long>(max_pairs) - 1));
    size_t singles = static_cast<size_t>(ri(0, static_cast<long long>(max_singles)));
    int id = 0;
    for (size_t p = 0; p < pairs; ++p) {
        long long gr = ri(-3, 3);
        long long jx = ri(-2, 2);
        bool cancelling = ri(0, 1) == 0;
        long long e = cancelling ? 0 : ri(0, 1) + (ri(0, 1) ? 1 : 0);  // exponent of the arrow
        long long jy = cancelling ? jx : jx - ri(e == 0 ? 1 : 0, 2) + e;
        if (jy - e > jx) jy = jx + e;  // keep the term filtered
        std::string xid = "x" + std::to_string(id), yid = "y" + std::to_string(id);
        ++id;
        c.add_generator({xid, rat(gr), rat(jx), "0"});
        c.add_generator({yid, rat(gr - 1 + 2 * e), rat(jy), "0"});
        c.add_diff_term(xid, yid, upoly(e));
        if (!(e == 0 && jy == jx)) {
            survivors.insert(rat(jx).to_string() + "|" + rat(gr).to_string());
            survivors.insert(rat(jy).to_string() + "|" + rat(gr - 1 + 2 * e).to_string());
        }
    }
    for (size_t s = 0; s < singles; ++s) {
        long long gr = ri(-3, 3), j = ri(-2, 2);
        std::string sid = "z" + std::to_string(id++);
        c.add_generator({sid, rat(gr), rat(j), "0"});
        survivors.insert(rat(j).to_string() + "|" + rat(gr).to_string());
    }
    REQUIRE(c.validate().ok());

    // scramble: u += U^e v for random legal (u, v); conjugating the
    // differential keeps it a valid complex with the same filtered type
    for (int step = 0; step < 24; ++step) {
        size_t u = static_cast<size_t>(ri(0, static_cast<long long>(c.size()) - 1));
        size_t v = static_cast<size_t>(ri(0, static_cast<long long>(c.size()) - 1));
        if (u == v) continue;
        rational de = (c.generator(v).gr - c.generator(u).gr) / rat(2);
        if (!de.is_integer() || de.sign() < 0) continue;
        long long e = de.to_ll();
        if (c.generator(v).j - rat(e) > c.generator(u).j) continue;
        filtered_complex next;
        for (const auto& g : c.basis()) next.add_generator(g);
        for (size_t x = 0; x < c.size(); ++x) {
            std::map<size_t, upoly> col(c.column(x).begin(), c.column(x).end());
            if (x == u)  // d(u + U^e v) = du + U^e dv
                for (const auto& [y, p] : c.column(v)) {
                    upoly& cur = col[y];
                    cur += p.shifted(e);
                    if (cur.is_zero()) col.erase(y);
                }
            // rewrite any u-component through u = u' + U^e v
            auto it = col.find(u);
            if (it != col.end()) {
                upoly coeff = it->second;
                upoly& cv = col[v];
                cv += coeff.shifted(e);
                if (cv.is_zero()) col.erase(v);
            }
            for (const auto& [y, p] : col) next.add_diff_term(x, y, p);
        }
        if (!next.validate().ok()) continue;  // paranoia; should not happen
        c = next;
    }
    return {c, survivors};
}

}  // namespace

TEST_CASE("property: reduce recovers the model multiset of scrambled complexes") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        random_complex rc = make_random_complex(rng);
        REQUIRE(rc.c.validate().ok());
        reduction r = reduce(rc.c);
        CHECK(floercone::testing::ja_multiset(r.reduced) == rc.expected_reduced);
        // idempotence
        CHECK(reduce(r.reduced).cancellations == 0);
        // change-of-basis maps stay filtered chain maps with r o i = id
        CHECK(check_filtered_map(r.to_reduced, rc.c, r.reduced).ok());
        CHECK(check_filtered_map(r.from_reduced, r.reduced, rc.c).ok());
        filtered_map ri = filtered_map::compose(r.to_reduced, r.from_reduced);
        for (size_t i = 0; i < r.reduced.size(); ++i) {
            REQUIRE(ri.cols[i].size() == 1);
            CHECK(ri.cols[i].begin()->second == upoly::one());
        }
    }
}

TEST_CASE("property: subquotient homology is invariant under the change of basis") {
    std::mt19937 rng(987654);
    std::vector<probe_window> windows = {
        {int_window::exactly(0), rat_window::all(), "i=0"},
        {int_window{-2, 0}, rat_window::all(), "-2<=i<=0"},
        {int_window{-3, 1}, rat_window::at_most(rat(0)), "j<=0 trunc"},
        {int_window::at_most(0), rat_window::exactly(rat(1)), "i<=0,j=1"},
        {int_window::at_most(0), rat_window::exactly(rat(0)), "i<=0,j=0"},
    };
    for (int trial = 0; trial < 40; ++trial) {
        random_complex rc = make_random_complex(rng);
        reduction r = reduce(rc.c);
        quasi_iso_report rep = check_filtered_quasi_iso(r.to_reduced, rc.c, r.reduced, windows);
        CHECK(rep.all_iso());
    }
}

TEST_CASE("property: Euler characteristic per (j mod 1, gr parity) survives reduction") {
    std::mt19937 rng(5551212);
    for (int trial = 0; trial < 40; ++trial) {
        random_complex rc = make_random_complex(rng);
        auto chi = [](const filtered_complex& cc) {
            std::map<std::string, long long> m;
            for (const auto& g : cc.basis())
                m[g.j.mod1().to_string()] += (g.gr.floor().to_ll() % 2 == 0) ? 1 : -1;
            for (auto it = m.begin(); it != m.end();)
                it = it->second == 0 ? m.erase(it) : std::next(it);
            return m;
        };
        CHECK(chi(rc.c) == chi(reduce(rc.c).reduced));
    }
}
