#include "hurwitz/serialize.hpp"

#include <json.hpp>

#include "hurwitz/error.hpp"

namespace hurwitz {

using ojson = nlohmann::ordered_json;

namespace {

ojson series_object(const TruncSeries& s) {
    ojson o = ojson::object();
    for (const auto& [k, v] : s.to_strings()) o[k] = v;
    return o;
}

ojson steps_object(const std::vector<std::pair<std::string, int>>& steps) {
    ojson o = ojson::object();
    for (const auto& [k, v] : steps) o[k] = v;
    return o;
}

ojson row_object(const TableRow& r) {
    ojson o;
    o["n"] = r.n;
    o["from"] = r.from.str();
    o["to"] = r.to.str();
    o["steps"] = steps_object(r.steps);
    o["count"] = r.count.str();
    o["connected"] = r.connected;
    return o;
}

} // namespace

std::string chartable_json(const CharacterTable& t) {
    ojson o;
    o["n"] = t.n();
    ojson order = ojson::array();
    for (const auto& p : t.order()) order.push_back(p.str());
    o["order"] = order;
    ojson chi = ojson::array();
    for (std::size_t l = 0; l < t.dim(); ++l) {
        ojson row = ojson::array();
        for (std::size_t m = 0; m < t.dim(); ++m) row.push_back(t(l, m));
        chi.push_back(row);
    }
    o["chi"] = chi;
    return o.dump();
}

std::string series_json(const TruncSeries& s) { return series_object(s).dump(); }

std::string gmatrix_json(const ConnectionMatrix& g, const std::string& twist_label) {
    ojson o;
    o["n"] = g.n;
    o["twist"] = twist_label;
    ojson entries = ojson::array();
    for (std::size_t l = 0; l < g.dim(); ++l)
        for (std::size_t m = 0; m < g.dim(); ++m) {
            ojson e;
            e["from"] = g.order[l].str();
            e["to"] = g.order[m].str();
            e["series"] = series_object(g(l, m));
            entries.push_back(e);
        }
    o["entries"] = entries;
    return o.dump();
}

std::string symfunc_json(const SymFunc& f) {
    ojson o;
    o["basis"] = f.basis == SymBasis::PowerSum ? "p" : "s";
    ojson terms = ojson::array();
    for (const auto& [p, c] : f.terms) {
        ojson t;
        t["part"] = p.str();
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    o["terms"] = terms;
    return o.dump();
}

SymFunc symfunc_from_json(const std::string& text) {
    try {
        auto o = nlohmann::json::parse(text);
        SymFunc f;
        std::string basis = o.at("basis").get<std::string>();
        if (basis == "p") f.basis = SymBasis::PowerSum;
        else if (basis == "s") f.basis = SymBasis::Schur;
        else throw ParseError("symfunc json: unknown basis '" + basis + "'");
        for (const auto& t : o.at("terms"))
            f.add(Partition::parse(t.at("part").get<std::string>()), Rational::parse(t.at("coeff").get<std::string>()));
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("symfunc json: ") + e.what());
    }
}

std::string walk_json(const WalkQuery& q, const std::string& kind, const Rational& count) {
    ojson o;
    o["n"] = q.n;
    o["from"] = q.from_type.str();
    o["to"] = q.to_type.str();
    o["kind"] = kind;
    ojson segs = ojson::array();
    for (const auto& s : q.constraint.segments()) {
        ojson e;
        e["kind"] = s.kind == SegmentKind::Plain ? "plain" : s.kind == SegmentKind::WeaklyMonotone ? "weak" : "strict";
        e["length"] = s.length;
        segs.push_back(e);
    }
    o["segments"] = segs;
    o["steps"] = q.constraint.steps();
    o["transitive"] = q.transitive;
    o["count"] = count.str();
    return o.dump();
}

std::string table_json(const std::vector<TableRow>& rows) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += row_object(rows[i]).dump();
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string out = "n,from,to";
    if (!rows.empty())
        for (const auto& [k, v] : rows.front().steps) out += "," + k;
    out += ",count\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ",\"" + r.from.str() + "\",\"" + r.to.str() + "\"";
        for (const auto& [k, v] : r.steps) out += "," + std::to_string(v);
        out += "," + r.count.str() + "\n";
    }
    return out;
}

} // namespace hurwitz
