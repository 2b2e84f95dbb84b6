#include "realog/json_io.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <sstream>
#include <utility>

namespace realog {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw error(errc::parse_error, msg); }

void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

json parse_root(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    require(!doc.is_discarded(), "input is not valid JSON");
    require(doc.is_object(), "top-level JSON value must be an object");
    return doc;
}

const json& field(const json& obj, const char* key) {
    auto it = obj.find(key);
    require(it != obj.end(), std::string("missing field \"") + key + "\"");
    return *it;
}

long long_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    require(v.is_number_integer(), std::string("field \"") + key + "\" must be an integer");
    return v.get<long>();
}

// Big entries travel as decimal strings; anything within int64 as a number.
json int_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

mpz_class int_from_json(const json& v, const char* where) {
    if (v.is_number_integer()) return mpz_class(v.get<std::int64_t>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        mpz_class z;
        require(!s.empty() && z.set_str(s, 10) == 0,
                std::string(where) + ": \"" + s + "\" is not a decimal integer");
        return z;
    }
    fail(std::string(where) + ": entries must be integers or decimal strings");
}

json matrix_json(const IntegerMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntegerMatrix matrix_from(const json& v, const std::string& where) {
    require(v.is_object(), where + ": matrix must be an object");
    const long r = long_field(v, "rows");
    const long c = long_field(v, "cols");
    require(r >= 0 && c >= 0, where + ": negative matrix shape");
    const json& entries = field(v, "entries");
    require(entries.is_array() && entries.size() == static_cast<std::size_t>(r),
            where + ": \"entries\" must hold one array per row");
    IntegerMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const json& row = entries[i];
        require(row.is_array() && row.size() == m.cols(),
                where + ": row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = int_from_json(row[j], where.c_str());
    }
    return m;
}

long parse_int_key(const std::string& key, const std::string& where) {
    long value = 0;
    const char* begin = key.data();
    const char* end = begin + key.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    require(ec == std::errc() && ptr == end,
            where + ": key \"" + key + "\" is not an integer");
    return value;
}

std::pair<long, long> parse_pair_key(const std::string& key, const std::string& where) {
    const auto comma = key.find(',');
    require(comma != std::string::npos, where + ": key \"" + key + "\" is not \"a,b\"");
    return {parse_int_key(key.substr(0, comma), where),
            parse_int_key(key.substr(comma + 1), where)};
}

std::string pair_key(long a, long b) { return std::to_string(a) + "," + std::to_string(b); }

std::string emit(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

InputKind classify_json(const std::string& text) {
    json doc = parse_root(text);
    if (doc.contains("fiber_dim")) return InputKind::Degeneration;
    if (doc.contains("polygon")) return InputKind::Patchwork;
    if (doc.contains("coefficient")) return InputKind::Complex;
    if (doc.contains("entries")) return InputKind::Matrix;
    fail("cannot classify object: expected one of \"fiber_dim\", \"polygon\", "
         "\"coefficient\", \"entries\"");
}

std::string matrix_to_json(const IntegerMatrix& m) { return emit(matrix_json(m)); }

IntegerMatrix matrix_from_json(const std::string& text) {
    return matrix_from(parse_root(text), "matrix");
}

std::string complex_to_json(const CochainComplex& c) {
    json doc;
    doc["coefficient"] = c.coefficient() == Coefficient::Integers ? "Z" : "F2";
    doc["degrees"] = json::array({c.p_min(), c.p_max()});
    json ranks = json::object();
    for (int p = c.p_min(); p <= c.p_max(); ++p)
        ranks[std::to_string(p)] = c.rank_at(p);
    doc["ranks"] = std::move(ranks);
    json diffs = json::object();
    for (const auto& [p, m] : c.stored_differentials())
        if (!m.is_zero()) diffs[std::to_string(p)] = matrix_json(m);
    doc["differentials"] = std::move(diffs);
    if (!c.labels().empty()) {
        json labels = json::object();
        for (const auto& [p, names] : c.labels()) labels[std::to_string(p)] = names;
        doc["labels"] = std::move(labels);
    }
    return emit(doc);
}

CochainComplex complex_from_json(const std::string& text) {
    json doc = parse_root(text);
    const json& coeff = field(doc, "coefficient");
    require(coeff.is_string() && (coeff == "Z" || coeff == "F2"),
            "\"coefficient\" must be \"Z\" or \"F2\"");
    const json& degrees = field(doc, "degrees");
    require(degrees.is_array() && degrees.size() == 2 && degrees[0].is_number_integer() &&
                degrees[1].is_number_integer(),
            "\"degrees\" must be [p_min, p_max]");
    const int p_min = degrees[0].get<int>();
    const int p_max = degrees[1].get<int>();
    require(p_min <= p_max, "\"degrees\" must satisfy p_min <= p_max");

    const json& ranks_obj = field(doc, "ranks");
    require(ranks_obj.is_object(), "\"ranks\" must be an object");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(p_max - p_min + 1), 0);
    for (const auto& [key, value] : ranks_obj.items()) {
        const long p = parse_int_key(key, "ranks");
        require(p >= p_min && p <= p_max, "rank degree " + key + " outside \"degrees\"");
        require(value.is_number_integer() && value.get<long>() >= 0,
                "rank at degree " + key + " must be a nonnegative integer");
        ranks[static_cast<std::size_t>(p - p_min)] = value.get<std::size_t>();
    }

    std::map<int, IntegerMatrix> diffs;
    if (doc.contains("differentials")) {
        const json& dobj = doc["differentials"];
        require(dobj.is_object(), "\"differentials\" must be an object");
        for (const auto& [key, value] : dobj.items()) {
            const long p = parse_int_key(key, "differentials");
            diffs[static_cast<int>(p)] = matrix_from(value, "differential " + key);
        }
    }

    std::map<int, std::vector<std::string>> labels;
    if (doc.contains("labels")) {
        const json& lobj = doc["labels"];
        require(lobj.is_object(), "\"labels\" must be an object");
        for (const auto& [key, value] : lobj.items()) {
            const long p = parse_int_key(key, "labels");
            require(value.is_array(), "labels at degree " + key + " must be an array");
            std::vector<std::string> names;
            for (const auto& item : value) {
                require(item.is_string(), "labels at degree " + key + " must hold strings");
                names.push_back(item.get<std::string>());
            }
            labels[static_cast<int>(p)] = std::move(names);
        }
    }

    const Coefficient cf = coeff == "Z" ? Coefficient::Integers : Coefficient::ModTwo;
    return CochainComplex(cf, p_min, std::move(ranks), std::move(diffs), std::move(labels));
}

std::string sdd_to_json(const StratifiedDegeneration& sdd) {
    json doc;
    doc["fiber_dim"] = sdd.fiber_dim;
    json strata = json::array();
    for (const Stratum& s : sdd.strata) {
        json j;
        j["id"] = s.id;
        j["dim"] = s.dim;
        j["multiplicity"] = s.multiplicity;
        j["hc_ranks"] = s.hc_ranks;
        std::size_t used = s.hc_torsion.size();
        while (used > 0 && s.hc_torsion[used - 1].empty()) --used;
        if (used > 0) {
            json torsion = json::array();
            for (std::size_t d = 0; d < used; ++d) {
                json factors = json::array();
                for (const auto& f : s.hc_torsion[d]) factors.push_back(int_to_json(f));
                torsion.push_back(std::move(factors));
            }
            j["hc_torsion"] = std::move(torsion);
        }
        j["real_components"] = s.real_components;
        j["pure_ii"] = s.pure_ii;
        if (s.real_higher_cohomology) j["real_higher_cohomology"] = true;
        strata.push_back(std::move(j));
    }
    doc["strata"] = std::move(strata);
    json closure = json::array();
    for (const auto& [lo, hi] : sdd.closure) closure.push_back(json::array({lo, hi}));
    doc["closure"] = std::move(closure);
    json cq = json::object();
    for (const auto& [key, m] : sdd.cq_differentials)
        cq[pair_key(key.first, key.second)] = matrix_json(m);
    doc["cq_differentials"] = std::move(cq);
    json real = json::object();
    for (const auto& [p, m] : sdd.real_differentials) real[std::to_string(p)] = matrix_json(m);
    doc["real_differentials"] = std::move(real);
    if (!sdd.real_vertex_counts.empty()) {
        json counts = json::object();
        for (const auto& [id, n] : sdd.real_vertex_counts) counts[id] = n;
        doc["real_vertex_counts"] = std::move(counts);
    }
    if (sdd.allow_zero_differentials) doc["allow_zero_differentials"] = true;
    return emit(doc);
}

StratifiedDegeneration sdd_from_json(const std::string& text) {
    json doc = parse_root(text);
    StratifiedDegeneration sdd;
    sdd.fiber_dim = static_cast<int>(long_field(doc, "fiber_dim"));

    const json& strata = field(doc, "strata");
    require(strata.is_array(), "\"strata\" must be an array");
    for (const json& j : strata) {
        require(j.is_object(), "each stratum must be an object");
        Stratum s;
        const json& id = field(j, "id");
        require(id.is_string(), "stratum \"id\" must be a string");
        s.id = id.get<std::string>();
        s.dim = static_cast<int>(long_field(j, "dim"));
        s.multiplicity = static_cast<int>(long_field(j, "multiplicity"));
        const json& ranks = field(j, "hc_ranks");
        require(ranks.is_array(), "stratum \"" + s.id + "\": \"hc_ranks\" must be an array");
        for (const json& r : ranks) {
            require(r.is_number_integer(),
                    "stratum \"" + s.id + "\": \"hc_ranks\" must hold integers");
            s.hc_ranks.push_back(r.get<long>());
        }
        if (j.contains("hc_torsion")) {
            const json& torsion = j["hc_torsion"];
            require(torsion.is_array(),
                    "stratum \"" + s.id + "\": \"hc_torsion\" must be an array");
            for (const json& degree : torsion) {
                require(degree.is_array(),
                        "stratum \"" + s.id + "\": \"hc_torsion\" must hold arrays");
                std::vector<mpz_class> factors;
                for (const json& f : degree) factors.push_back(int_from_json(f, "hc_torsion"));
                s.hc_torsion.push_back(std::move(factors));
            }
        }
        s.real_components = long_field(j, "real_components");
        if (j.contains("pure_ii")) {
            require(j["pure_ii"].is_boolean(),
                    "stratum \"" + s.id + "\": \"pure_ii\" must be a boolean");
            s.pure_ii = j["pure_ii"].get<bool>();
        }
        if (j.contains("real_higher_cohomology")) {
            require(j["real_higher_cohomology"].is_boolean(),
                    "stratum \"" + s.id + "\": \"real_higher_cohomology\" must be a boolean");
            s.real_higher_cohomology = j["real_higher_cohomology"].get<bool>();
        }
        sdd.strata.push_back(std::move(s));
    }

    if (doc.contains("closure")) {
        const json& closure = doc["closure"];
        require(closure.is_array(), "\"closure\" must be an array");
        for (const json& pair : closure) {
            require(pair.is_array() && pair.size() == 2 && pair[0].is_string() &&
                        pair[1].is_string(),
                    "each closure relation must be [id, id]");
            sdd.closure.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
    }

    if (doc.contains("cq_differentials")) {
        const json& cq = doc["cq_differentials"];
        require(cq.is_object(), "\"cq_differentials\" must be an object");
        for (const auto& [key, value] : cq.items()) {
            const auto [q, p] = parse_pair_key(key, "cq_differentials");
            sdd.cq_differentials[{static_cast<int>(q), static_cast<int>(p)}] =
                matrix_from(value, "cq differential " + key);
        }
    }

    if (doc.contains("real_differentials")) {
        const json& real = doc["real_differentials"];
        require(real.is_object(), "\"real_differentials\" must be an object");
        for (const auto& [key, value] : real.items()) {
            const long p = parse_int_key(key, "real_differentials");
            sdd.real_differentials[static_cast<int>(p)] =
                matrix_from(value, "real differential " + key);
        }
    }

    if (doc.contains("real_vertex_counts")) {
        const json& counts = doc["real_vertex_counts"];
        require(counts.is_object(), "\"real_vertex_counts\" must be an object");
        for (const auto& [id, value] : counts.items()) {
            require(value.is_number_integer(),
                    "\"real_vertex_counts\" values must be integers");
            sdd.real_vertex_counts[id] = value.get<long>();
        }
    }

    if (doc.contains("allow_zero_differentials")) {
        const json& flag = doc["allow_zero_differentials"];
        require(flag.is_boolean(), "\"allow_zero_differentials\" must be a boolean");
        sdd.allow_zero_differentials = flag.get<bool>();
    }

    return sdd;
}

std::string patchwork_to_json(const PatchworkInput& pi) {
    json doc;
    json polygon = json::array();
    for (const Point& v : pi.polygon) polygon.push_back(json::array({v.x, v.y}));
    doc["polygon"] = std::move(polygon);
    json triangles = json::array();
    for (const auto& t : pi.triangles) triangles.push_back(json::array({t[0], t[1], t[2]}));
    doc["triangles"] = std::move(triangles);
    if (!pi.heights.empty()) {
        json heights = json::object();
        for (const auto& [v, h] : pi.heights) heights[pair_key(v.x, v.y)] = h;
        doc["heights"] = std::move(heights);
    }
    json signs = json::object();
    for (const auto& [v, s] : pi.signs) signs[pair_key(v.x, v.y)] = s;
    doc["signs"] = std::move(signs);
    return emit(doc);
}

PatchworkInput patchwork_from_json(const std::string& text) {
    json doc = parse_root(text);
    PatchworkInput pi;

    const json& polygon = field(doc, "polygon");
    require(polygon.is_array(), "\"polygon\" must be an array");
    for (const json& v : polygon) {
        require(v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
                    v[1].is_number_integer(),
                "each polygon vertex must be [x, y]");
        pi.polygon.push_back({v[0].get<long>(), v[1].get<long>()});
    }

    const json& triangles = field(doc, "triangles");
    require(triangles.is_array(), "\"triangles\" must be an array");
    for (const json& t : triangles) {
        require(t.is_array() && t.size() == 3, "each triangle must be [i, j, k]");
        std::array<std::size_t, 3> tri{};
        for (int k = 0; k < 3; ++k) {
            require(t[k].is_number_integer() && t[k].get<long>() >= 0,
                    "triangle corners must be nonnegative lattice point indices");
            tri[static_cast<std::size_t>(k)] = t[k].get<std::size_t>();
        }
        pi.triangles.push_back(tri);
    }

    if (doc.contains("heights")) {
        const json& heights = doc["heights"];
        require(heights.is_object(), "\"heights\" must be an object");
        for (const auto& [key, value] : heights.items()) {
            const auto [x, y] = parse_pair_key(key, "heights");
            require(value.is_number_integer(), "heights must be integers");
            pi.heights[{x, y}] = value.get<long>();
        }
    }

    const json& signs = field(doc, "signs");
    require(signs.is_object(), "\"signs\" must be an object");
    for (const auto& [key, value] : signs.items()) {
        const auto [x, y] = parse_pair_key(key, "signs");
        require(value.is_number_integer(), "signs must be +1 or -1");
        pi.signs[{x, y}] = value.get<int>();
    }

    return pi;
}

namespace {

json report_json(const VerdictReport& report, const ReportOptions& opt,
                 const ViroSummary* viro) {
    json doc;
    doc["betti_real"] = report.betti_real;
    if (opt.with_integral) doc["h"] = report.hodge;

    json cq = json::object();
    for (const auto& [key, entry] : report.cq) {
        json e;
        if (opt.with_integral) {
            e["rank"] = entry.rank;
            json torsion = json::array();
            for (const auto& f : entry.torsion) torsion.push_back(int_to_json(f));
            e["torsion"] = std::move(torsion);
        }
        if (opt.with_mod2) e["mod2"] = entry.mod2_dim;
        cq[pair_key(key.first, key.second)] = std::move(e);
    }
    doc["cq"] = std::move(cq);

    if (opt.with_mod2) {
        json rows = json::array();
        for (const auto& row : report.inequalities)
            rows.push_back(json{{"p", row.p}, {"lhs", row.lhs}, {"rhs", row.rhs},
                                {"slack", row.slack}});
        doc["inequality"] = std::move(rows);
    }

    json strata = json::array();
    for (const auto& s : report.hypotheses.strata) {
        json j{{"id", s.id}, {"a", s.a}, {"b", s.b}, {"c", s.c}};
        if (!s.note.empty()) j["note"] = s.note;
        strata.push_back(std::move(j));
    }
    doc["hypotheses"] = std::move(strata);

    doc["flags"] = json{{"hypothesis_a", report.hypotheses.a},
                        {"hypothesis_b", report.hypotheses.b},
                        {"hypothesis_c", report.hypotheses.c},
                        {"theorem_applicable", report.hypotheses.theorem_applicable()},
                        {"hodge_applicable", report.hypotheses.hodge_applicable()},
                        {"verified", report.verified},
                        {"inequality_holds", report.inequality_holds},
                        {"torsion_free", report.torsion_free},
                        {"mod2_compatible", report.mod2_compatible},
                        {"maximal", report.maximal}};
    doc["totals"] = json{{"betti", report.betti_total}, {"mod2", report.mod2_total}};
    if (viro)
        doc["viro"] = json{{"vertices", viro->vertices},
                           {"segments", viro->segments},
                           {"components", viro->components}};
    return doc;
}

}  // namespace

std::string report_to_json(const VerdictReport& report, const ReportOptions& opt,
                           const ViroSummary* viro) {
    return emit(report_json(report, opt, viro));
}

std::string report_to_markdown(const VerdictReport& report, const ReportOptions& opt,
                               const ViroSummary* viro) {
    std::ostringstream out;
    out << "# analysis\n\n";
    out << "- betti_real:";
    for (long b : report.betti_real) out << " " << b;
    out << "\n";
    out << "- betti_total: " << report.betti_total << "\n";
    out << "- mod2_total: " << report.mod2_total << "\n";
    out << "- verified: " << (report.verified ? "yes" : "no") << "\n";
    out << "- inequality_holds: " << (report.inequality_holds ? "yes" : "no") << "\n";
    out << "- torsion_free: " << (report.torsion_free ? "yes" : "no") << "\n";
    out << "- mod2_compatible: " << (report.mod2_compatible ? "yes" : "no") << "\n";
    out << "- maximal: " << (report.maximal ? "yes" : "no") << "\n";
    out << "- hypotheses: a=" << (report.hypotheses.a ? "yes" : "no")
        << " b=" << (report.hypotheses.b ? "yes" : "no")
        << " c=" << (report.hypotheses.c ? "yes" : "no") << "\n";
    if (viro) {
        out << "- viro: " << viro->vertices << " vertices, " << viro->segments
            << " segments, " << viro->components << " components\n";
    }

    if (opt.with_integral && !report.hodge.empty()) {
        out << "\n## h[p][q]\n\n";
        for (const auto& row : report.hodge) {
            out << "|";
            for (long h : row) out << " " << h << " |";
            out << "\n";
        }
    }

    out << "\n## weight complexes\n\n";
    out << "| p | q |";
    if (opt.with_integral) out << " rank | torsion |";
    if (opt.with_mod2) out << " mod2 |";
    out << "\n|---|---|";
    if (opt.with_integral) out << "---|---|";
    if (opt.with_mod2) out << "---|";
    out << "\n";
    for (const auto& [key, entry] : report.cq) {
        out << "| " << key.first << " | " << key.second << " |";
        if (opt.with_integral) {
            out << " " << entry.rank << " |";
            if (entry.torsion.empty()) {
                out << " - |";
            } else {
                out << " ";
                for (std::size_t i = 0; i < entry.torsion.size(); ++i)
                    out << (i ? "," : "") << entry.torsion[i].get_str();
                out << " |";
            }
        }
        if (opt.with_mod2) out << " " << entry.mod2_dim << " |";
        out << "\n";
    }

    if (opt.with_mod2) {
        out << "\n## betti bound\n\n";
        out << "| p | b_p | bound | slack |\n|---|---|---|---|\n";
        for (const auto& row : report.inequalities)
            out << "| " << row.p << " | " << row.lhs << " | " << row.rhs << " | " << row.slack
                << " |\n";
    }
    return std::move(out).str();
}

}  // namespace realog
