#pragma once

// Command-line front end. run() is the whole program: parsing, dispatch,
// emission; the binary in tools/ is a thin wrapper so the test suite can
// drive the exact command surface in-process.
//
// Exit codes: 0 success, 1 I/O or schema error, 2 validation failure,
// 64 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "builtin_data.hpp"
#include "dual_knot.hpp"
#include "io.hpp"
#include "rational_surgery.hpp"

namespace floercone::cli {

inline std::string term_str(long long e, const std::string& id) {
    if (e == 0) return id;
    if (e == 1) return "U " + id;
    return "U^" + std::to_string(e) + " " + id;
}

inline std::string column_str(const filtered_complex& c, size_t x) {
    std::string out;
    for (const auto& [y, p] : c.column(x))
        for (long long e : p.exponents()) {
            if (!out.empty()) out += " + ";
            out += term_str(e, c.generator(y).id);
        }
    return out.empty() ? "0" : out;
}

inline void print_violations(const validation_report& rep, const std::string& format,
                             std::ostream& out) {
    if (format == "json") {
        json j;
        j["violations"] = json::array();
        for (const auto& v : rep.violations) {
            const char* k = "";
            switch (v.kind) {
                case violation_kind::structural: k = "structural"; break;
                case violation_kind::d_squared: k = "d-squared"; break;
                case violation_kind::grading: k = "grading"; break;
                case violation_kind::filtration: k = "filtration"; break;
                case violation_kind::sector_offset: k = "sector-offset"; break;
            }
            j["violations"].push_back(
                {{"kind", k}, {"from", v.from}, {"to", v.to}, {"detail", v.detail}});
        }
        out << j.dump(2) << "\n";
    } else {
        out << rep.to_string();
    }
}

inline void print_table_text(const graded_table& t, std::ostream& out) {
    graded_table s = t;
    s.sort();
    out << "spinc\tA\tgr\trank\n";
    for (const auto& r : s.rows)
        out << r.spinc << "\t" << (r.A ? r.A->to_string() : "-") << "\t"
            << (r.gr ? r.gr->to_string() : "-") << "\t" << r.rank << "\n";
}

inline void print_cone_text(const surgery_cone& cone, std::ostream& out) {
    out << "# spinc " << cone.dual.label << "  (d=" << cone.d << ", k=" << cone.k
        << ", towers l=" << cone.a << ".." << cone.b << (cone.degenerate ? ", degenerate" : "")
        << ")\n";
    out << "generator\tI\tJ\tgr\td\n";
    for (size_t i = 0; i < cone.complex.size(); ++i) {
        const auto& g = cone.complex.generator(i);
        out << g.id << "\t0\t" << g.j.to_string() << "\t"
            << (cone.graded ? g.gr.to_string() : "-") << "\t" << column_str(cone.complex, i)
            << "\n";
    }
}

inline std::vector<dual_spinc> select_duals(const knot_bundle& b, long long k,
                                            const std::string& spinc) {
    auto all = enumerate_dual_spinc(b, k);
    if (spinc.empty()) return all;
    for (const auto& d : all)
        if (d.label == spinc) return {d};
    // also accept an index into the enumeration
    if (!spinc.empty() && spinc.find_first_not_of("0123456789") == std::string::npos) {
        size_t idx = std::stoul(spinc);
        if (idx < all.size()) return {all[idx]};
    }
    throw schema_error("unknown --spinc selector \"" + spinc + "\"; available: " + [&all] {
        std::string s;
        for (const auto& d : all) s += (s.empty() ? "" : ", ") + d.label;
        return s;
    }());
}

int selftest(std::ostream& out);

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"floercone: knot Floer surgery mapping cones and dual knot invariants"};
    app.require_subcommand(1);

    std::string bundle_path, diagram_path, spinc, format = "text";
    long long k = 0, n = 1;

    auto add_common = [&](CLI::App* sub, bool with_bundle, bool with_diagram) {
        if (with_bundle) sub->add_option("--bundle", bundle_path, "bundle.v1 or complex.v1 file");
        if (with_diagram) sub->add_option("--diagram", diagram_path, "diagram.v1 file");
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* c_validate = app.add_subcommand("validate", "validate a bundle, complex, or diagram");
    add_common(c_validate, true, true);

    CLI::App* c_reduce = app.add_subcommand("reduce", "reduce a complex or every bundle sector");
    add_common(c_reduce, true, false);

    CLI::App* c_grade = app.add_subcommand("grade-diagram",
                                           "Alexander gradings from a doubly-pointed diagram");
    add_common(c_grade, false, true);

    CLI::App* c_surgery = app.add_subcommand("surgery", "build and reduce the surgery cone X^-");
    add_common(c_surgery, true, false);
    c_surgery->add_option("--k", k, "framing")->required();
    c_surgery->add_option("--spinc", spinc, "dual spin-c label or index (default: all)");
    auto* oa = c_surgery->add_option("--a", "lower tower bound (default: truncation_bounds)");
    auto* ob = c_surgery->add_option("--b", "upper tower bound (default: truncation_bounds)");
    auto* ou = c_surgery->add_option(
        "--uCap", "emit X^t = X^-/U^(uCap+1) instead of X^-; negative picks the default cap");

    CLI::App* c_ratl = app.add_subcommand("rational-surgery", "1/n surgery via K # O_n");
    add_common(c_ratl, true, false);
    c_ratl->add_option("--n", n, "surgery denominator (positive)")->required();

    CLI::App* c_hfk = app.add_subcommand("hfk", "hat-HFK of the dual knot");
    add_common(c_hfk, true, false);
    c_hfk->add_option("--k", k, "framing")->required();
    c_hfk->add_option("--spinc", spinc, "dual spin-c label or index (default: all)");

    CLI::App* c_dual = app.add_subcommand("dualcfk", "reduced CFK of the dual knot");
    add_common(c_dual, true, false);
    c_dual->add_option("--k", k, "framing")->required();
    c_dual->add_option("--spinc", spinc, "dual spin-c label or index (default: all)");

    CLI::App* c_self = app.add_subcommand("selftest", "run the embedded golden examples");
    (void)c_self;

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 64;
    }

    try {
        if (app.got_subcommand(c_self)) return selftest(out);

        if (app.got_subcommand(c_validate)) {
            if (!diagram_path.empty()) {
                heegaard_diagram dg = diagram_from_json(load_json_file(diagram_path));
                validation_report rep = dg.validate();
                if (!rep.ok()) {
                    print_violations(rep, format, out);
                    return 2;
                }
                out << (format == "json" ? "{\"violations\": []}\n" : "ok\n");
                return 0;
            }
            if (bundle_path.empty()) throw schema_error("validate: need --bundle or --diagram");
            json j = load_json_file(bundle_path);
            validation_report rep;
            if (j.value("schema", "") == "bundle.v1") {
                knot_bundle b = load_bundle(j, rep);
                (void)b;
            } else {
                filtered_complex c = complex_from_json(j);
                rep = c.validate();
            }
            if (!rep.ok()) {
                print_violations(rep, format, out);
                return 2;
            }
            out << (format == "json" ? "{\"violations\": []}\n" : "ok\n");
            return 0;
        }

        if (app.got_subcommand(c_reduce)) {
            if (bundle_path.empty()) throw schema_error("reduce: need --bundle");
            json j = load_json_file(bundle_path);
            if (j.value("schema", "") == "bundle.v1") {
                validation_report rep;
                knot_bundle b = load_bundle(j, rep);
                if (!rep.ok()) {
                    print_violations(rep, format, out);
                    return 2;
                }
                knot_bundle red = b;
                std::vector<reduction> rs;
                for (size_t q = 0; q < b.sectors.size(); ++q) {
                    rs.push_back(reduce(b.sectors[q]));
                    red.sectors[q] = rs.back().reduced;
                }
                for (size_t q = 0; q < b.flips.size(); ++q) {
                    size_t qn = (q + 1) % b.sectors.size();
                    filtered_map f;
                    f.cols = b.flips[q].cols;
                    filtered_map conj = filtered_map::compose(
                        rs[qn].to_reduced, filtered_map::compose(f, rs[q].from_reduced));
                    red.flips[q].cols = conj.cols;
                }
                out << bundle_to_json(red).dump(2) << "\n";
            } else {
                filtered_complex c = complex_from_json(j);
                validation_report rep = c.validate();
                if (!rep.ok()) {
                    print_violations(rep, format, out);
                    return 2;
                }
                out << complex_to_json(reduce(c).reduced).dump(2) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(c_grade)) {
            if (diagram_path.empty()) throw schema_error("grade-diagram: need --diagram");
            heegaard_diagram dg = diagram_from_json(load_json_file(diagram_path));
            validation_report rep = dg.validate();
            if (!rep.ok()) {
                print_violations(rep, format, out);
                return 2;
            }
            graded_table t = grade_diagram(dg);
            if (format == "json")
                out << table_to_json(t).dump(2) << "\n";
            else
                print_table_text(t, out);
            return 0;
        }

        // remaining commands all need a valid bundle
        if (bundle_path.empty()) throw schema_error("need --bundle");
        validation_report rep;
        knot_bundle b = load_bundle(load_json_file(bundle_path), rep);
        if (!rep.ok()) {
            print_violations(rep, format, out);
            return 2;
        }

        if (app.got_subcommand(c_surgery)) {
            auto duals = select_duals(b, k, spinc);
            json jcones = json::array();
            for (const auto& dual : duals) {
                truncation t = truncation_bounds(b, k, dual);
                long long a = oa->count() ? oa->as<long long>() : t.a;
                long long bb = ob->count() ? ob->as<long long>() : t.b;
                surgery_cone cone = build_cone(b, k, dual, a, bb, t.degenerate);
                surgery_cone red = reduce_cone(cone);
                if (ou->count()) {
                    long long cap = ou->as<long long>();
                    if (cap < 0) cap = default_u_cap(red);
                    finite_f2_complex xt = truncate_cone(red, cap);
                    if (format == "json") {
                        filtered_complex flat;
                        for (size_t i = 0; i < xt.dim(); ++i)
                            flat.add_generator({xt.at(i).id, xt.at(i).gr, xt.at(i).j, red.dual.label});
                        for (size_t i = 0; i < xt.dim(); ++i)
                            for (size_t y : xt.boundary(i))
                                flat.add_diff_term(i, y, upoly::one());
                        jcones.push_back(complex_to_json(flat));
                    } else {
                        out << "# X^t, uCap=" << cap << ", spinc " << red.dual.label << "\n";
                        for (size_t i = 0; i < xt.dim(); ++i)
                            out << xt.at(i).id << "\tI=" << xt.at(i).i << "\tJ="
                                << xt.at(i).j.to_string() << "\tgr=" << xt.at(i).gr.to_string()
                                << "\n";
                    }
                    continue;
                }
                if (format == "json")
                    jcones.push_back(cone_to_json(red));
                else
                    print_cone_text(red, out);
            }
            if (format == "json") out << (jcones.size() == 1 ? jcones[0] : jcones).dump(2) << "\n";
            return 0;
        }

        if (app.got_subcommand(c_ratl)) {
            if (n <= 0) throw schema_error("rational-surgery: --n must be positive");
            rational_surgery_result rs = one_over_n_surgery(b, n);
            ratl_check_report chk = ratl_filtration_check(rs, n);
            if (!chk.ok()) {
                for (const auto& m : chk.mismatches) err << "filtration mismatch: " << m << "\n";
                return 2;
            }
            surgery_cone red = reduce_cone(rs.cone);
            if (format == "json")
                out << cone_to_json(red).dump(2) << "\n";
            else {
                out << "# 1/" << n << " surgery; closed-form filtration check: ok ("
                    << chk.checked << " summands)\n";
                print_cone_text(red, out);
            }
            return 0;
        }

        if (app.got_subcommand(c_hfk)) {
            auto duals = select_duals(b, k, spinc);
            graded_table t;
            for (const auto& dual : duals) t.absorb(hfk_hat_assembled(b, k, dual));
            t.sort();
            if (format == "json")
                out << table_to_json(t).dump(2) << "\n";
            else
                print_table_text(t, out);
            return 0;
        }

        if (app.got_subcommand(c_dual)) {
            auto duals = select_duals(b, k, spinc);
            filtered_complex merged;
            for (const auto& dual : duals) {
                surgery_cone red = dual_cfk(build_cone(b, k, dual));
                for (const auto& g : red.complex.basis()) {
                    basis_element e = g;
                    e.id = red.dual.label + "/" + g.id;
                    merged.add_generator(e);
                }
                for (size_t x = 0; x < red.complex.size(); ++x)
                    for (const auto& [y, p] : red.complex.column(x))
                        merged.add_diff_term(red.dual.label + "/" + red.complex.generator(x).id,
                                             red.dual.label + "/" + red.complex.generator(y).id, p);
            }
            if (format == "json")
                out << complex_to_json(merged).dump(2) << "\n";
            else {
                out << "generator\tJ\tgr\td\n";
                for (size_t i = 0; i < merged.size(); ++i)
                    out << merged.generator(i).id << "\t" << merged.generator(i).j.to_string()
                        << "\t" << merged.generator(i).gr.to_string() << "\t"
                        << column_str(merged, i) << "\n";
            }
            return 0;
        }
    } catch (const schema_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}

// Embedded golden checks, one line per check.
inline int selftest(std::ostream& out) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "PASS" : "FAIL") << " " << name << "\n";
        if (!ok) ++failures;
    };
    try {
        validation_report rep;
        knot_bundle trefoil = load_bundle(parse_json(builtin::trefoil_bundle), rep);
        check("trefoil bundle validates", rep.ok());
        knot_bundle unknot = load_bundle(parse_json(builtin::unknot_bundle), rep);
        check("unknot bundle validates", rep.ok());

        // -1 surgery on the trefoil: five generators with the golden values
        {
            auto duals = enumerate_dual_spinc(trefoil, -1);
            surgery_cone red = reduce_cone(build_cone(trefoil, -1, duals[0]));
            std::multiset<std::string> got, want = {"0|-1|-2", "0|0|-1", "0|0|-1", "0|0|0",
                                                    "0|1|0"};
            for (const auto& g : red.complex.basis())
                got.insert("0|" + g.j.to_string() + "|" + g.gr.to_string());
            check("trefoil k=-1 reduced cone table", got == want);
        }
        // lens spaces: unknot with k = m
        {
            bool ok = true;
            for (long long m : {1, 2, 3, 5, 7}) {
                std::multiset<std::string> got, want;
                for (long long l = 0; l < m; ++l)
                    want.insert(rational(m - 2 * l - 1, 2 * m).to_string() + "|" +
                                rational((2 * l - m) * (2 * l - m) - m, 4 * m).to_string());
                for (const auto& dual : enumerate_dual_spinc(unknot, m)) {
                    surgery_cone red = reduce_cone(build_cone(unknot, m, dual));
                    ok = ok && red.complex.size() == 1;
                    for (const auto& g : red.complex.basis())
                        got.insert(g.j.to_string() + "|" + g.gr.to_string());
                }
                ok = ok && got == want;
            }
            check("lens space oracle k=1,2,3,5,7", ok);
        }
        // Heegaard gradings
        {
            heegaard_diagram dg = diagram_from_json(parse_json(builtin::trefoil_diagram));
            bool ok = euler_measure(dg, dg.domain) == rat(-4) &&
                      alexander_grading(dg, dg.domain, "ax") == rat(-1) &&
                      alexander_grading(dg, dg.domain, "bx") == rat(0) &&
                      alexander_grading(dg, dg.domain, "cx") == rat(1);
            check("trefoil diagram Alexander gradings", ok);
            heegaard_diagram dg5 = diagram_from_json(parse_json(builtin::trefoil_p5_diagram));
            std::multiset<std::string> got, want = {"-3/5", "-1/5", "0", "0", "0", "1/5", "3/5"};
            for (const auto& g : dg5.generators)
                got.insert(alexander_grading(dg5, dg5.domain, g.id).to_string());
            check("trefoil +5 diagram Alexander gradings", got == want);
        }
        // Floer simplicity of the +5 dual
        {
            graded_table t = hfk_hat_all(trefoil, 5);
            std::multiset<std::string> got, want = {"-3/5", "-1/5", "0", "1/5", "3/5"};
            for (const auto& r : t.rows)
                for (long long i = 0; i < r.rank; ++i) got.insert(r.A->to_string());
            check("trefoil k=+5 Floer simple", got == want && t.total_rank() == 5);
        }
        // rational surgery consistency
        {
            bool ok = true;
            for (long long nn : {1, 2, 3}) {
                rational_surgery_result rs = one_over_n_surgery(trefoil, nn);
                ok = ok && ratl_filtration_check(rs, nn).ok();
            }
            check("rational 1/n filtration forms", ok);
        }
        check("dual Alexander symmetry (trefoil k=-1)", dual_symmetry(trefoil, -1).pass);
    } catch (const std::exception& e) {
        out << "FAIL selftest crashed: " << e.what() << "\n";
        ++failures;
    }
    out << (failures ? "selftest: FAILED\n" : "selftest: all checks passed\n");
    return failures ? 1 : 0;
}

}  // namespace floercone::cli
