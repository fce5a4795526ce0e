#pragma once

// JSON and text rendering of characters, dominant l-weight listings,
// partition tables and verification reports. JSON schema version "1".

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qchar/lweight.hpp"
#include "qchar/partitions.hpp"
#include "qchar/qcharacter.hpp"
#include "qchar/root_system.hpp"
#include "qchar/verify.hpp"

namespace qchar::io {

using json = nlohmann::ordered_json;

inline const char* schema_version = "1";

inline json to_json(const LWeight& x) {
    json a = json::array();
    for (const auto& t : x.terms()) a.push_back({t.node, t.exp, t.mult});
    return a;
}

inline LWeight lweight_from_json(const json& a) {
    std::vector<Term> t;
    for (const auto& e : a) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("monomial entries must be [i,k,m]");
        t.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return LWeight::from_terms(std::move(t));
}

inline json to_json(const Weight& w) { return json(w.coords); }
inline json to_json(const Partition& p) { return json(p.parts); }

inline std::string weight_text(const Weight& w) {
    std::string s = "(";
    for (int a = 1; a <= w.rank(); ++a) s += (a > 1 ? "," : "") + std::to_string(w[a]);
    return s + ")";
}

struct CharacterRow {
    Weight weight;
    LWeight monomial;
    long long mult;
};

/// Entries ordered by weight, then by monomial.
inline std::vector<CharacterRow> sorted_rows(const RootSystem& rs, const LCharacter& ch) {
    std::vector<CharacterRow> rows;
    for (const auto& [x, m] : ch.entries) rows.push_back({weight_of(rs, x), x, m});
    std::stable_sort(rows.begin(), rows.end(), [](const CharacterRow& a, const CharacterRow& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.monomial < b.monomial;
    });
    return rows;
}

inline json meta_json(const RootSystem& rs, int node, int base) {
    return json{{"type", std::string(1, kind_char(rs.kind()))}, {"rank", rs.rank()}, {"node", node}, {"base_exp", base}};
}

inline json character_document(const RootSystem& rs, const LCharacter& ch) {
    json entries = json::array();
    for (const auto& row : sorted_rows(rs, ch))
        entries.push_back({{"monomial", to_json(row.monomial)}, {"weight", to_json(row.weight)}, {"mult", row.mult}});
    json doc;
    doc["schema"] = schema_version;
    doc["meta"] = meta_json(rs, ch.node, ch.base);
    doc["entries"] = std::move(entries);
    doc["totals"] = {{"entries", ch.entries.size()}, {"mass", ch.mass()}};
    return doc;
}

inline LCharacter character_from_document(const json& doc) {
    if (doc.at("schema") != schema_version) throw std::invalid_argument("unsupported schema");
    const auto& meta = doc.at("meta");
    LCharacter ch;
    ch.kind = kind_from_char(meta.at("type").get<std::string>().at(0));
    ch.rank = meta.at("rank").get<int>();
    ch.node = meta.at("node").get<int>();
    ch.base = meta.at("base_exp").get<int>();
    for (const auto& e : doc.at("entries")) ch.entries[lweight_from_json(e.at("monomial"))] += e.at("mult").get<long long>();
    return ch;
}

inline std::string character_text(const RootSystem& rs, const LCharacter& ch, Notation notation) {
    std::ostringstream os;
    os << "# " << rs.name() << " node " << ch.node << " base q^" << ch.base << ": " << ch.entries.size()
       << " l-weights, total multiplicity " << ch.mass() << '\n';
    for (const auto& row : sorted_rows(rs, ch))
        os << row.mult << '\t' << weight_text(row.weight) << '\t' << to_string(row.monomial, notation) << '\n';
    return os.str();
}

// ---- dominant l-weights ----

/// One row per (partition, sign) source, so equal monomials from a type D
/// class appear once per member.
struct DominantRow {
    int r;
    Source source;
    LWeight monomial;
    long long mult;
    std::vector<Partition> cls; // type D only
    int mult_exponent = -1;     // type D only
};

inline std::vector<DominantRow> dominant_rows(const RootSystem& rs, int i, std::optional<int> only_r, int base) {
    std::vector<DominantRow> rows;
    for (int r : index_set(rs, i)) {
        if (only_r && *only_r != r) continue;
        const PartitionCtx ctx(rs, i, r);
        for (const auto& e : dominant_lweights_at(ctx))
            for (const auto& src : e.sources) {
                DominantRow row{r, src, e.value.shifted(base), e.mult, {}, -1};
                if (rs.kind() == Kind::D) {
                    const auto c = equivalence_class(ctx, src.partition);
                    row.cls.assign(c.begin(), c.end());
                    row.mult_exponent = mult_exponent(ctx, src.partition);
                }
                rows.push_back(std::move(row));
            }
    }
    return rows;
}

inline std::string sign_text(const std::optional<Sign>& s) {
    if (!s) return "";
    return *s == Sign::Plus ? "+" : "-";
}

inline json dominant_document(const RootSystem& rs, int i, std::optional<int> only_r, int base) {
    json doc;
    doc["schema"] = schema_version;
    doc["meta"] = meta_json(rs, i, base);
    doc["meta"]["r"] = only_r ? json(*only_r) : json(nullptr);
    json entries = json::array();
    long long mass = 0;
    std::set<LWeight> distinct;
    const auto rows = dominant_rows(rs, i, only_r, base);
    for (const auto& row : rows) {
        json e{{"r", row.r},
               {"partition", to_json(row.source.partition)},
               {"sign", row.source.sign ? json(sign_text(row.source.sign)) : json(nullptr)},
               {"monomial", to_json(row.monomial)},
               {"mult", row.mult}};
        if (rs.kind() == Kind::D) {
            json c = json::array();
            for (const auto& p : row.cls) c.push_back(to_json(p));
            e["class"] = std::move(c);
            e["M_j"] = row.mult_exponent;
        }
        entries.push_back(std::move(e));
        if (distinct.insert(row.monomial).second) mass += row.mult;
    }
    doc["entries"] = std::move(entries);
    doc["totals"] = {{"rows", rows.size()}, {"distinct", distinct.size()}, {"mass", mass}};
    return doc;
}

inline std::string dominant_text(const RootSystem& rs, int i, std::optional<int> only_r, int base, Notation notation) {
    std::ostringstream os;
    int current = -1;
    for (const auto& row : dominant_rows(rs, i, only_r, base)) {
        if (row.r != current) {
            current = row.r;
            os << "# r=" << row.r << "  weight " << weight_text(rs.fundamental(row.r)) << '\n';
        }
        os << to_string(row.source.partition) << sign_text(row.source.sign) << '\t' << "mult " << row.mult << '\t'
           << to_string(row.monomial, notation);
        if (rs.kind() == Kind::D) {
            os << "\tM_j=" << row.mult_exponent << " class {";
            for (std::size_t a = 0; a < row.cls.size(); ++a) os << (a ? " " : "") << to_string(row.cls[a]);
            os << '}';
        }
        os << '\n';
    }
    return os.str();
}

// ---- partitions ----

inline json partitions_document(const RootSystem& rs, int i, std::optional<int> only_r) {
    json doc;
    doc["schema"] = schema_version;
    doc["meta"] = {{"type", std::string(1, kind_char(rs.kind()))}, {"rank", rs.rank()}, {"node", i}};
    json groups = json::array();
    for (int r : index_set(rs, i)) {
        if (only_r && *only_r != r) continue;
        const PartitionCtx ctx(rs, i, r);
        json g{{"r", r}, {"M", ctx.M()}, {"count", count_J(ctx)}};
        json parts = json::array();
        for (const auto& p : all_partitions(ctx)) {
            json e{{"partition", to_json(p)}};
            if (rs.kind() == Kind::D) {
                e["supp_plus"] = supp_pm(ctx, p, Sign::Plus);
                e["supp_minus"] = supp_pm(ctx, p, Sign::Minus);
                e["M_j"] = mult_exponent(ctx, p);
                e["canonical"] = to_json(canonical_rep(ctx, p));
            }
            parts.push_back(std::move(e));
        }
        g["partitions"] = std::move(parts);
        groups.push_back(std::move(g));
    }
    doc["groups"] = std::move(groups);
    return doc;
}

inline std::string partitions_text(const RootSystem& rs, int i, std::optional<int> only_r) {
    std::ostringstream os;
    for (int r : index_set(rs, i)) {
        if (only_r && *only_r != r) continue;
        const PartitionCtx ctx(rs, i, r);
        os << "# r=" << r << " M=" << ctx.M() << " |J_r|=" << count_J(ctx) << '\n';
        for (const auto& p : all_partitions(ctx)) {
            os << to_string(p);
            if (rs.kind() == Kind::D) {
                os << "\tM_j=" << mult_exponent(ctx, p) << " canonical " << to_string(canonical_rep(ctx, p));
            }
            os << '\n';
        }
    }
    return os.str();
}

// ---- reports ----

inline json report_json(const VerifyReport& rep, bool timing = false) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e{{"name", c.name}, {"range", c.range}, {"passed", c.passed}, {"cases", c.cases}};
        e["counterexample"] = c.passed ? json(nullptr) : json(c.counterexample);
        if (timing) e["seconds"] = c.seconds;
        checks.push_back(std::move(e));
    }
    return json{{"schema", schema_version}, {"passed", rep.passed()}, {"checks", std::move(checks)}};
}

} // namespace qchar::io
