#pragma once

#include <json.hpp>

#include <limits>
#include <string>

#include "mclag/abelian_group.hpp"
#include "mclag/coinvariants.hpp"
#include "mclag/int_matrix.hpp"
#include "mclag/presentations.hpp"
#include "mclag/reports.hpp"

namespace mclag {

using nlohmann::json;

// Entries are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so round-trips are always bit-exact.
inline json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return json(x.convert_to<long long>());
    return json(x.str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected integer or decimal string");
}

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline IntMatrix matrix_from_json(const json& j) {
    const std::size_t r = j.at("rows").get<std::size_t>();
    const std::size_t c = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != r) throw ParseError("matrix json: wrong row count");
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (entries[i].size() != c) throw ParseError("matrix json: wrong column count");
        for (std::size_t jj = 0; jj < c; ++jj) m(i, jj) = int_from_json(entries[i][jj]);
    }
    return m;
}

inline json group_to_json(const FgAbelianGroup& g) {
    json factors = json::array();
    for (const Int& f : g.invariant_factors()) factors.push_back(int_to_json(f));
    return json{{"free_rank", g.free_rank()}, {"invariant_factors", std::move(factors)}};
}

inline FgAbelianGroup group_from_json(const json& j) {
    std::vector<Int> factors;
    for (const json& f : j.at("invariant_factors")) factors.push_back(int_from_json(f));
    return FgAbelianGroup(j.at("free_rank").get<std::size_t>(), std::move(factors));
}

inline json presentation_to_json(const GroupPresentation& p) {
    json relators = json::array();
    for (const Word& w : p.relators) {
        json word = json::array();
        for (const Letter& l : w)
            word.push_back(json::array({p.generators[static_cast<std::size_t>(l.generator)],
                                        l.exponent}));
        relators.push_back(std::move(word));
    }
    return json{{"generators", p.generators}, {"relators", std::move(relators)}};
}

inline GroupPresentation presentation_from_json(const json& j) {
    GroupPresentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const json& word : j.at("relators")) {
        Word w;
        for (const json& letter : word) {
            const std::string label = letter.at(0).get<std::string>();
            int gen = -1;
            for (std::size_t t = 0; t < p.generators.size(); ++t)
                if (p.generators[t] == label) gen = static_cast<int>(t);
            if (gen < 0) throw ParseError("relator references unknown generator " + label);
            w.push_back({gen, letter.at(1).get<int>()});
        }
        p.relators.push_back(std::move(w));
    }
    p.check_valid();
    return p;
}

inline json action_module_to_json(const ActionModule& m) {
    json elements = json::array();
    for (const ActionEndo& e : m.elements)
        elements.push_back(json{{"A", matrix_to_json(e.free_map)},
                                {"Bm", matrix_to_json(e.torsion_from_free)},
                                {"C", matrix_to_json(e.torsion_map)}});
    return json{{"free_rank", m.free_rank},
                {"torsion2_rank", m.torsion2_rank},
                {"elements", std::move(elements)}};
}

inline ActionModule action_module_from_json(const json& j) {
    ActionModule m;
    m.free_rank = j.at("free_rank").get<std::size_t>();
    m.torsion2_rank = j.at("torsion2_rank").get<std::size_t>();
    for (const json& e : j.at("elements")) {
        ActionEndo endo;
        endo.free_map = matrix_from_json(e.at("A"));
        endo.torsion_from_free = matrix_from_json(e.at("Bm"));
        endo.torsion_map = matrix_from_json(e.at("C"));
        m.elements.push_back(std::move(endo));
    }
    validate_action(m);
    return m;
}

inline json report_to_json(const VerificationReport& r) {
    json comparisons = json::array();
    for (const Comparison& c : r.comparisons)
        comparisons.push_back(json{{"name", c.name},
                                   {"computed", c.computed},
                                   {"expected", c.expected},
                                   {"provenance", c.provenance},
                                   {"pass", c.pass}});
    json externals = json::array();
    for (const ExternalConstant& e : r.externals)
        externals.push_back(json{{"name", e.name},
                                 {"value", group_to_json(e.value)},
                                 {"citation", e.citation},
                                 {"external", true}});
    return json{{"job", r.job},          {"genus", r.genus},   {"pass", r.pass},
                {"comparisons", comparisons}, {"externals", externals}, {"notes", r.notes},
                {"wall_ms", r.wall_ms}};
}

// Expected-table override: {"job": {"genus": {"groups": {name: group},
// "scalars": {name: int}}}}; provenance defaults to "file".
inline ExpectedTable expected_table_from_json(const json& j) {
    ExpectedTable t;
    for (auto it = j.begin(); it != j.end(); ++it) {
        for (auto gt = it.value().begin(); gt != it.value().end(); ++gt) {
            ExpectedEntry entry;
            const json& body = gt.value();
            if (body.contains("groups"))
                for (auto vt = body["groups"].begin(); vt != body["groups"].end(); ++vt)
                    entry.groups[vt.key()] = {group_from_json(vt.value()), "file"};
            if (body.contains("scalars"))
                for (auto vt = body["scalars"].begin(); vt != body["scalars"].end(); ++vt)
                    entry.scalars[vt.key()] = {vt.value().get<long long>(), "file"};
            t.set(it.key(), std::stoi(gt.key()), std::move(entry));
        }
    }
    return t;
}

} // namespace mclag
