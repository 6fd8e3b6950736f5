#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "cospec/survey.hpp"

#include <json.hpp>

namespace cospec {

enum class ReportFormat { text, csv, json };

inline ReportFormat parse_report_format(const std::string& s) {
    if (s == "text") return ReportFormat::text;
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown format: " + s + " (expected csv, json or text)");
}

// One decimal place, round half up; an exact 100% renders as "100".
inline std::string percent_string(size_t num, size_t den) {
    if (den == 0) return "n/a";
    const unsigned long long tenths =
        (static_cast<unsigned long long>(num) * 2000 + den) / (2 * static_cast<unsigned long long>(den));
    if (tenths == 1000) return "100";
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

// Column orders, fixed:
//   table 1: order,total,rep_edge,rep_edge_pct,rep_vertex,rep_vertex_pct
//   table 2: order,nus3,rep_edge_mate,rep_edge_mate_pct,rep_vertex_mate,rep_vertex_mate_pct
//   table 3: order,nus3,nus3c,constructed,constructed_pct_nus3,constructed_pct_nus3c
inline std::string render_table_row(const SurveyReport& r, int which, ReportFormat fmt) {
    std::vector<std::pair<std::string, std::string>> cols;
    cols.emplace_back("order", std::to_string(r.order));
    switch (which) {
        case 1:
            cols.emplace_back("total", std::to_string(r.total));
            cols.emplace_back("rep_edge", std::to_string(r.rep_edge_self));
            cols.emplace_back("rep_edge_pct", percent_string(r.rep_edge_self, r.total));
            cols.emplace_back("rep_vertex", std::to_string(r.rep_vertex_self));
            cols.emplace_back("rep_vertex_pct", percent_string(r.rep_vertex_self, r.total));
            break;
        case 2:
            cols.emplace_back("nus3", std::to_string(r.nus3_count));
            cols.emplace_back("rep_edge_mate", std::to_string(r.rep_edge_mate));
            cols.emplace_back("rep_edge_mate_pct", percent_string(r.rep_edge_mate, r.nus3_count));
            cols.emplace_back("rep_vertex_mate", std::to_string(r.rep_vertex_mate));
            cols.emplace_back("rep_vertex_mate_pct",
                              percent_string(r.rep_vertex_mate, r.nus3_count));
            break;
        case 3:
            cols.emplace_back("nus3", std::to_string(r.nus3_count));
            cols.emplace_back("nus3c", std::to_string(r.nus3c_count));
            cols.emplace_back("constructed", r.constructed_computed
                                                 ? std::to_string(r.constructed_count)
                                                 : std::string("n/a"));
            cols.emplace_back("constructed_pct_nus3",
                              r.constructed_computed
                                  ? percent_string(r.constructed_count, r.nus3_count)
                                  : std::string("n/a"));
            cols.emplace_back("constructed_pct_nus3c",
                              r.constructed_computed
                                  ? percent_string(r.constructed_count, r.nus3c_count)
                                  : std::string("n/a"));
            break;
        default:
            throw std::invalid_argument("table must be 1, 2 or 3");
    }

    std::ostringstream out;
    switch (fmt) {
        case ReportFormat::csv: {
            for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].first;
            out << '\n';
            for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].second;
            out << '\n';
            break;
        }
        case ReportFormat::json: {
            nlohmann::ordered_json j;
            j["table"] = which;
            for (const auto& [k, v] : cols) j[k] = v;
            out << j.dump(2) << '\n';
            break;
        }
        case ReportFormat::text: {
            size_t wk = 0, wv = 0;
            for (const auto& [k, v] : cols) {
                wk = std::max(wk, k.size());
                wv = std::max(wv, v.size());
            }
            for (const auto& [k, v] : cols) {
                out << k << std::string(wk - k.size() + 2, ' ') << v << '\n';
            }
            break;
        }
    }
    return out.str();
}

// Certificate report rows: kind, graph ids, anchors, bijection pairs.
inline std::string certificate_csv_header() {
    return "kind,g1,g2,anchor1,anchor2,bijection,anchors_overlap";
}

inline std::string certificate_csv_row(const ReplaceableCertificate& cert, const std::string& id1,
                                       const std::string& id2) {
    std::ostringstream out;
    const bool vertex = cert.kind == ReplaceableCertificate::Kind::vertex;
    out << (vertex ? "vertex" : "edge") << ',' << id1 << ',' << id2 << ',';
    if (vertex)
        out << cert.u << ',' << cert.v;
    else
        out << cert.e1->a << '-' << cert.e1->b << ',' << cert.e2->a << '-' << cert.e2->b;
    out << ',';
    for (size_t i = 0; i < cert.map.pairs.size(); ++i) {
        if (i) out << ' ';
        out << cert.map.pairs[i].first << ':' << cert.map.pairs[i].second;
    }
    out << ',' << (cert.anchors_overlap() ? "yes" : "no");
    return out.str();
}

}  // namespace cospec
