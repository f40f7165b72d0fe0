#pragma once

// JSON serialization for the on-disk schemas: complex.v1, bundle.v1,
// diagram.v1, cone.v1, table.v1. Rationals travel as normalized "p/q"
// strings ("p" when the denominator is 1); no floating point anywhere.

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "heegaard.hpp"
#include "knot_complex.hpp"
#include "surgery.hpp"

namespace floercone {

using nlohmann::json;

struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

inline rational rat_field(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw schema_error("expected rational string field \"" + key + "\"");
    try {
        return rational::parse(j.at(key).get<std::string>());
    } catch (const std::exception& e) {
        throw schema_error("bad rational in \"" + key + "\": " + e.what());
    }
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw schema_error(msg);
}

// ---- complex.v1 ----

inline json complex_to_json(const filtered_complex& c) {
    json out;
    out["schema"] = "complex.v1";
    out["basis"] = json::array();
    for (const auto& g : c.basis())
        out["basis"].push_back({{"id", g.id},
                                {"gr", g.gr.to_string()},
                                {"j", g.j.to_string()},
                                {"sector", g.sector}});
    out["diff"] = json::array();
    for (size_t x = 0; x < c.size(); ++x)
        for (const auto& [y, p] : c.column(x)) {
            json t;
            t["from"] = c.generator(x).id;
            t["to"] = c.generator(y).id;
            t["upowers"] = p.exponents();
            out["diff"].push_back(t);
        }
    return out;
}

inline filtered_complex complex_from_json(const json& j) {
    std::string schema = j.is_object() ? j.value("schema", "complex.v1") : "";
    require(schema == "complex.v1" || schema == "cone.v1", "complex.v1: wrong schema tag");
    require(j.contains("basis") && j.at("basis").is_array(), "complex.v1: missing basis array");
    filtered_complex c;
    for (const auto& b : j.at("basis")) {
        basis_element e;
        require(b.contains("id") && b.at("id").is_string(), "complex.v1: basis entry missing id");
        e.id = b.at("id").get<std::string>();
        e.gr = rat_field(b, "gr");
        e.j = rat_field(b, "j");
        e.sector = b.value("sector", "0");
        if (c.has_id(e.id)) throw schema_error("complex.v1: duplicate basis id " + e.id);
        c.add_generator(e);
    }
    for (const auto& t : j.value("diff", json::array())) {
        require(t.contains("from") && t.contains("to") && t.contains("upowers"),
                "complex.v1: diff entry needs from/to/upowers");
        std::vector<long long> exps;
        for (const auto& u : t.at("upowers")) {
            require(u.is_number_integer(), "complex.v1: upowers must be integers");
            exps.push_back(u.get<long long>());
        }
        try {
            c.add_diff_term(t.at("from").get<std::string>(), t.at("to").get<std::string>(),
                            upoly(exps));
        } catch (const std::invalid_argument& e) {
            throw schema_error(std::string("complex.v1: ") + e.what());
        }
    }
    return c;
}

// ---- bundle.v1 ----

inline json bundle_to_json(const knot_bundle& b) {
    json out;
    out["schema"] = "bundle.v1";
    out["d"] = b.d;
    out["k"] = b.k;
    out["lspace"] = b.lspace;
    out["sectors"] = json::array();
    for (size_t q = 0; q < b.sectors.size(); ++q) {
        json s = complex_to_json(b.sectors[q]);
        s.erase("schema");
        s["A_offset"] = b.offsets[q].to_string();
        if (q < b.ungraded.size() && b.ungraded[q]) s["ungraded"] = true;
        out["sectors"].push_back(s);
    }
    out["flips"] = json::array();
    for (const auto& f : b.flips) {
        json fj;
        fj["from_sector"] = f.from_sector;
        fj["anchor_s"] = f.anchor.to_string();
        fj["entries"] = json::array();
        const filtered_complex& src = b.sectors[f.from_sector];
        const filtered_complex& tgt = b.sectors[(f.from_sector + 1) % b.sectors.size()];
        for (size_t x = 0; x < f.cols.size(); ++x)
            for (const auto& [y, p] : f.cols[x])
                fj["entries"].push_back({{"from", src.generator(x).id},
                                         {"to", tgt.generator(y).id},
                                         {"upowers", p.exponents()}});
        out["flips"].push_back(fj);
    }
    return out;
}

inline knot_bundle bundle_from_json(const json& j) {
    require(j.is_object() && j.value("schema", "") == "bundle.v1", "bundle.v1: wrong schema tag");
    knot_bundle b;
    require(j.contains("d") && j.at("d").is_number_integer(), "bundle.v1: missing integer d");
    require(j.contains("k") && j.at("k").is_number_integer(), "bundle.v1: missing integer k");
    b.d = j.at("d").get<long long>();
    b.k = j.at("k").get<long long>();
    b.lspace = j.value("lspace", false);
    require(j.contains("sectors") && j.at("sectors").is_array(), "bundle.v1: missing sectors");
    size_t q = 0;
    for (const auto& s : j.at("sectors")) {
        filtered_complex c = complex_from_json(s);
        b.sectors.push_back(std::move(c));
        b.offsets.push_back(rat_field(s, "A_offset"));
        b.ungraded.push_back(s.value("ungraded", false));
        ++q;
    }
    for (const auto& fj : j.value("flips", json::array())) {
        flip_map f;
        require(fj.contains("from_sector"), "bundle.v1: flip missing from_sector");
        f.from_sector = fj.at("from_sector").get<size_t>();
        require(f.from_sector < b.sectors.size(), "bundle.v1: flip from_sector out of range");
        f.anchor = rat_field(fj, "anchor_s");
        const filtered_complex& src = b.sectors[f.from_sector];
        const filtered_complex& tgt = b.sectors[(f.from_sector + 1) % b.sectors.size()];
        f.cols.resize(src.size());
        for (const auto& t : fj.value("entries", json::array())) {
            std::vector<long long> exps;
            for (const auto& u : t.at("upowers")) exps.push_back(u.get<long long>());
            try {
                size_t x = src.index_of(t.at("from").get<std::string>());
                size_t y = tgt.index_of(t.at("to").get<std::string>());
                upoly& cur = f.cols[x][y];
                cur += upoly(exps);
                if (cur.is_zero()) f.cols[x].erase(y);
            } catch (const std::invalid_argument& e) {
                throw schema_error(std::string("bundle.v1: flip entry: ") + e.what());
            }
        }
        b.flips.push_back(std::move(f));
    }
    return b;
}

// Load + full validation; throws schema_error on shape problems and returns
// the validation report for invariant problems.
inline knot_bundle load_bundle(const json& j, validation_report& rep) {
    knot_bundle b = bundle_from_json(j);
    rep = validate_bundle(b);
    return b;
}

// ---- cone.v1 ----

inline json cone_to_json(const surgery_cone& cone) {
    json out = complex_to_json(cone.complex);
    out["schema"] = "cone.v1";
    out["summands"] = json::array();
    for (size_t i = 0; i < cone.complex.size(); ++i) {
        const summand_info& s = cone.summands[i];
        out["summands"].push_back({{"id", cone.complex.generator(i).id},
                                   {"tower", std::string(1, s.tower)},
                                   {"l", s.l},
                                   {"s_l", s.s_l.to_string()},
                                   {"source_id", s.source_id}});
    }
    if (!cone.graded)
        for (auto& b : out["basis"]) b.erase("gr");
    return out;
}

// ---- table.v1 ----

inline json table_to_json(const graded_table& t) {
    json out;
    out["schema"] = "table.v1";
    out["rows"] = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["spinc"] = r.spinc;
        row["A"] = r.A ? json(r.A->to_string()) : json(nullptr);
        row["gr"] = r.gr ? json(r.gr->to_string()) : json(nullptr);
        row["rank"] = r.rank;
        out["rows"].push_back(row);
    }
    return out;
}

// ---- diagram.v1 ----

inline periodic_domain domain_from_json(const json& dj) {
    periodic_domain P;
    P.id = dj.value("id", "P");
    P.lambda_coefficient = dj.value("lambda_coefficient", 0ll);
    require(dj.contains("multiplicities") && dj.at("multiplicities").is_object(),
            "diagram.v1: domain missing multiplicities object");
    for (const auto& [rid, m] : dj.at("multiplicities").items()) {
        require(m.is_number_integer(), "diagram.v1: multiplicities must be integers");
        P.multiplicities[rid] = m.get<long long>();
    }
    if (dj.contains("from")) P.from = dj.at("from").get<std::string>();
    if (dj.contains("to")) P.to = dj.at("to").get<std::string>();
    P.order_n = dj.value("order_n", 1ll);
    return P;
}

inline heegaard_diagram diagram_from_json(const json& j) {
    require(j.is_object() && j.value("schema", "") == "diagram.v1", "diagram.v1: wrong schema tag");
    heegaard_diagram dg;
    require(j.contains("d") && j.at("d").is_number_integer(), "diagram.v1: missing integer d");
    dg.d = j.at("d").get<long long>();
    for (const auto& rj : j.value("regions", json::array())) {
        diagram_region r;
        r.id = rj.at("id").get<std::string>();
        if (rj.value("disk", false)) {
            require(rj.contains("corners"), "diagram.v1: disk region needs a corner count");
            r.euler = rat(1) - rational(rj.at("corners").get<long long>(), 4);
        } else {
            require(rj.contains("euler"),
                    "diagram.v1: non-disk region " + r.id + " needs an explicit euler measure");
            r.euler = rat_field(rj, "euler");
        }
        dg.regions.push_back(r);
    }
    for (const auto& pj : j.value("points", json::array())) {
        diagram_point p;
        p.id = pj.at("id").get<std::string>();
        p.alpha = pj.value("alpha", "");
        p.beta = pj.value("beta", "");
        for (const auto& c : pj.value("corners", json::array()))
            p.corners.push_back(c.get<std::string>());
        dg.points.push_back(p);
    }
    for (const auto& gj : j.value("generators", json::array())) {
        diagram_generator g;
        g.id = gj.at("id").get<std::string>();
        for (const auto& p : gj.value("points", json::array())) g.points.push_back(p.get<std::string>());
        if (gj.contains("gr_w")) g.gr_w = rat_field(gj, "gr_w");
        if (gj.contains("gr_z")) g.gr_z = rat_field(gj, "gr_z");
        dg.generators.push_back(g);
    }
    require(j.contains("basepoints"), "diagram.v1: missing basepoints");
    const json& bp = j.at("basepoints");
    auto read_bp = [](const json& b) {
        diagram_basepoint out;
        for (const auto& s : b.at("sides")) out.sides.push_back(s.get<std::string>());
        return out;
    };
    require(bp.contains("w") && bp.contains("z"), "diagram.v1: basepoints need w and z");
    dg.w = read_bp(bp.at("w"));
    dg.z = read_bp(bp.at("z"));
    if (bp.contains("w2")) dg.w2 = read_bp(bp.at("w2"));
    if (bp.contains("z2")) dg.z2 = read_bp(bp.at("z2"));
    require(j.contains("domain"), "diagram.v1: missing relative periodic domain");
    dg.domain = domain_from_json(j.at("domain"));
    for (const auto& dj : j.value("domains", json::array()))
        dg.extra_domains.push_back(domain_from_json(dj));
    return dg;
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error(std::string("not valid JSON: ") + e.what());
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

}  // namespace floercone
