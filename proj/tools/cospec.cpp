// Command line front end: catalog generation/ingestion, cospectral
// partitioning, the census tables, compositions, the constructed census and
// the limit-conjecture ratio. Exit codes: 0 success, 1 validation failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cospec/compose.hpp"
#include "cospec/report.hpp"
#include "cospec/survey.hpp"

using namespace cospec;

namespace {

struct CommonOpts {
    int jobs = 1;
    std::string format = "text";
    std::string out;
    bool loose = false;
    bool no_symmetry_reduction = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_semantics = true) {
    cmd->add_option("--jobs", o.jobs, "worker threads (results are identical for any value)")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--format", o.format, "report format: csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd->add_option("--out", o.out, "write output to this file instead of stdout");
    if (with_semantics) {
        auto* strict = cmd->add_flag("--strict-semantics", "strict table 2/3 readings (default)");
        cmd->add_flag("--loose-semantics", o.loose, "loose table 2/3 readings")
            ->excludes(strict);
        cmd->add_flag("--no-symmetry-reduction", o.no_symmetry_reduction,
                      "disable orbit-based anchor reduction (oracle mode, slower)");
    }
}

SurveyOptions survey_options(const CommonOpts& o) {
    SurveyOptions s;
    s.jobs = o.jobs;
    s.strict_mate_semantics = !o.loose;
    s.strict_constructed_semantics = !o.loose;
    s.symmetry_reduction = !o.no_symmetry_reduction;
    return s;
}

void emit(const CommonOpts& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open output file: " + o.out);
    f << payload;
}

Catalog load_order_catalog(int order, const std::string& in_file) {
    if (!in_file.empty()) return ingest_catalog(in_file, order);
    return generate_cubic(order);
}

// --catalog ORDER=PATH entries, layered over generated defaults
std::map<int, Catalog> load_lower_catalogs(int N, const std::vector<std::string>& specs) {
    std::map<int, Catalog> lower;
    const int amax = std::min(N - 2, 14);
    for (int a = 4; a <= amax; a += 2) lower.emplace(a, generate_cubic(a));
    for (const std::string& spec : specs) {
        const size_t eq = spec.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--catalog", "expected ORDER=PATH, got: " + spec);
        const int order = std::stoi(spec.substr(0, eq));
        lower.insert_or_assign(order, ingest_catalog(spec.substr(eq + 1), order));
    }
    return lower;
}

Bijection parse_stitch(const std::string& s) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("stitch map entry needs the form SRC:DST, got: " + item);
        pairs.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    return Bijection(std::move(pairs));
}

Edge parse_edge(const std::string& s) {
    const size_t dash = s.find('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("edge anchor needs the form A-B, got: " + s);
    return Edge(std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1)));
}

std::vector<Bijection> stitch_seeds(const VertexSet& S, const VertexSet& T,
                                    const std::string& stitch_arg) {
    if (!stitch_arg.empty()) return {parse_stitch(stitch_arg)};
    return detail::all_bijections(S, T);
}

int run_generate(int N, const CommonOpts& o) {
    Catalog c = generate_cubic(N);
    std::string payload;
    for (const auto& m : c.members) payload += m + "\n";
    emit(o, payload);
    return 0;
}

int run_ingest(const std::string& file, int N) {
    Catalog c = ingest_catalog(file, N);
    std::cout << "ok: " << c.size() << " connected cubic graphs of order " << N << " from " << file
              << "\n";
    return 0;
}

int run_partition(int N, const std::string& in_file, const CommonOpts& o) {
    Catalog c = load_order_catalog(N, in_file);
    auto classes = partition_cospectral(c);
    const ReportFormat fmt = parse_report_format(o.format);

    std::ostringstream out;
    if (fmt == ReportFormat::csv) {
        out << "class,size,members,fingerprint\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            out << i << ',' << classes[i].members.size() << ',';
            for (size_t k = 0; k < classes[i].members.size(); ++k)
                out << (k ? " " : "") << classes[i].members[k];
            out << ",\"" << classes[i].fingerprint.to_display_string() << "\"\n";
        }
    } else if (fmt == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["order"] = N;
        j["classes"] = nlohmann::ordered_json::array();
        for (const auto& cls : classes) {
            nlohmann::ordered_json jc;
            jc["size"] = cls.members.size();
            jc["members"] = cls.members;
            jc["fingerprint"] = cls.fingerprint.to_display_string();
            j["classes"].push_back(std::move(jc));
        }
        out << j.dump(2) << '\n';
    } else {
        size_t nontrivial = 0;
        for (const auto& cls : classes) nontrivial += cls.members.size() >= 2;
        out << "order " << N << ": " << c.size() << " graphs, " << classes.size()
            << " cospectral classes, " << nontrivial << " of size >= 2\n";
        for (size_t i = 0; i < classes.size(); ++i) {
            if (classes[i].members.size() < 2) continue;
            out << "class " << i << " (size " << classes[i].members.size() << "):";
            for (size_t m : classes[i].members) out << ' ' << c.members[m];
            out << '\n';
        }
    }
    emit(o, out.str());
    return 0;
}

int run_census(int table, int N, const std::string& in_file,
               const std::vector<std::string>& catalog_specs, const CommonOpts& o) {
    SurveySources src;
    src.catalog = load_order_catalog(N, in_file);
    if (table == 3) src.lower = load_lower_catalogs(N, catalog_specs);
    SurveyData d = run_survey(src, survey_options(o));
    emit(o, render_table_row(d.report, table, parse_report_format(o.format)));
    return 0;
}

int run_constructed(int N, const std::string& in_file,
                    const std::vector<std::string>& catalog_specs, const CommonOpts& o) {
    SurveySources src;
    src.catalog = load_order_catalog(N, in_file);
    src.lower = load_lower_catalogs(N, catalog_specs);
    SurveyData d = run_survey(src, survey_options(o));
    const ReportFormat fmt = parse_report_format(o.format);

    std::ostringstream out;
    if (fmt == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["order"] = N;
        j["nus3"] = d.report.nus3_count;
        j["constructed"] = d.report.constructed_count;
        j["forms"] = d.constructed_forms;
        out << j.dump(2) << '\n';
    } else if (fmt == ReportFormat::csv) {
        out << "canonical_graph6\n";
        for (const auto& f : d.constructed_forms) out << f << '\n';
    } else {
        for (const auto& f : d.constructed_forms) out << f << '\n';
    }
    emit(o, out.str());
    return 0;
}

int run_ratio(int N, const std::string& in_file, const std::vector<std::string>& catalog_specs,
              const CommonOpts& o) {
    SurveySources src;
    src.catalog = load_order_catalog(N, in_file);
    src.lower = load_lower_catalogs(N, catalog_specs);
    SurveyData d = run_survey(src, survey_options(o));
    ConjectureRatio r = conjecture_ratio(d);

    const ReportFormat fmt = parse_report_format(o.format);
    std::ostringstream out;
    if (fmt == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["order"] = N;
        j["ratio"] = r.to_string();
        j["decimal"] = r.to_decimal_string();
        out << j.dump(2) << '\n';
    } else if (fmt == ReportFormat::csv) {
        out << "order,ratio,decimal\n"
            << N << ',' << r.to_string() << ',' << r.to_decimal_string() << '\n';
    } else {
        out << "order " << N << ": constructed/NUS3 = " << r.to_string() << " = "
            << r.to_decimal_string() << '\n';
    }
    emit(o, out.str());
    return 0;
}

int run_compose(const std::string& kind, const std::string& left_g6, const std::string& right_g6,
                const std::string& left_anchor, const std::string& right_anchor,
                const std::string& stitch_arg, const std::string& provenance,
                const CommonOpts& o) {
    const Graph left = from_graph6(left_g6);
    const Graph right = from_graph6(right_g6);

    std::vector<std::pair<Graph, Bijection>> outputs;  // graph + stitch used
    if (kind == "vertex") {
        const Vertex u = std::stoi(left_anchor);
        const Vertex v = std::stoi(right_anchor);
        for (const Bijection& f :
             stitch_seeds(neighborhood(left, u), neighborhood(right, v), stitch_arg)) {
            CompositionSpec s;
            s.kind = CompositionSpec::Kind::vertex;
            s.left = left;
            s.right = right;
            s.u = u;
            s.v = v;
            s.stitch = f;
            outputs.emplace_back(vertex_composition(s), f);
        }
    } else {
        const Edge e1 = parse_edge(left_anchor);
        const Edge e2 = parse_edge(right_anchor);
        for (const Bijection& f :
             stitch_seeds(VertexSet{e1.a, e1.b}, VertexSet{e2.a, e2.b}, stitch_arg)) {
            CompositionSpec s;
            s.kind = CompositionSpec::Kind::edge;
            s.left = left;
            s.right = right;
            s.e1 = e1;
            s.e2 = e2;
            s.stitch = f;
            outputs.emplace_back(edge_composition(s), f);
        }
    }

    std::string payload;
    for (const auto& [g, f] : outputs) payload += to_graph6(g) + "\n";
    emit(o, payload);

    // provenance sidecar
    std::string prov_path = provenance;
    if (prov_path.empty() && !o.out.empty()) prov_path = o.out + ".csv";
    if (!prov_path.empty()) {
        std::ofstream f(prov_path);
        if (!f) throw std::runtime_error("cannot open provenance file: " + prov_path);
        f << "output_graph6,kind,left,right,left_anchor,right_anchor,stitch\n";
        for (const auto& [g, stitch] : outputs) {
            f << to_graph6(g) << ',' << kind << ',' << left_g6 << ',' << right_g6 << ','
              << left_anchor << ',' << right_anchor << ',';
            for (size_t i = 0; i < stitch.pairs.size(); ++i)
                f << (i ? " " : "") << stitch.pairs[i].first << ':' << stitch.pairs[i].second;
            f << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cospectral cubic graph toolkit"};
    app.require_subcommand(1);

    // generate
    int gen_n = 0;
    CommonOpts gen_opts;
    auto* gen = app.add_subcommand("generate", "exhaustive connected cubic catalog (order 4..14)");
    gen->add_option("N", gen_n, "graph order")->required();
    add_common(gen, gen_opts, false);

    // ingest
    std::string ing_file;
    int ing_order = 0;
    auto* ing = app.add_subcommand("ingest", "validate a graph6 catalog file");
    ing->add_option("FILE", ing_file, "graph6 line file")->required();
    ing->add_option("--order", ing_order, "expected order")->required();

    // partition
    int part_order = 0;
    std::string part_in;
    CommonOpts part_opts;
    auto* part = app.add_subcommand("partition", "cospectral classes of a catalog");
    part->add_option("--order", part_order, "graph order")->required();
    part->add_option("--in", part_in, "catalog file (default: generate)");
    add_common(part, part_opts, false);

    // census
    int census_table = 0, census_order = 0;
    std::string census_in;
    std::vector<std::string> census_catalogs;
    CommonOpts census_opts;
    auto* cen = app.add_subcommand("census", "reproduce a census table row");
    cen->add_option("--table", census_table, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    cen->add_option("--order", census_order, "graph order")->required();
    cen->add_option("--in", census_in, "catalog file for this order (default: generate)");
    cen->add_option("--catalog", census_catalogs,
                    "extra lower catalog as ORDER=PATH (repeatable; table 3 only)");
    add_common(cen, census_opts);

    // compose
    std::string comp_kind, comp_left, comp_right, comp_la, comp_ra, comp_stitch, comp_prov;
    CommonOpts comp_opts;
    auto* comp = app.add_subcommand("compose", "vertex or edge composition of two graphs");
    comp->add_option("--kind", comp_kind, "vertex or edge")
        ->required()
        ->check(CLI::IsMember({"vertex", "edge"}));
    comp->add_option("--left", comp_left, "left graph (graph6)")->required();
    comp->add_option("--right", comp_right, "right graph (graph6)")->required();
    comp->add_option("--left-anchor", comp_la, "vertex index, or A-B for an edge")->required();
    comp->add_option("--right-anchor", comp_ra, "vertex index, or A-B for an edge")->required();
    comp->add_option("--stitch", comp_stitch,
                     "stitch map SRC:DST,... (default: enumerate all seeds)");
    comp->add_option("--provenance", comp_prov, "provenance CSV path (default: OUT.csv)");
    add_common(comp, comp_opts, false);

    // constructed
    int cons_order = 0;
    std::string cons_in;
    std::vector<std::string> cons_catalogs;
    CommonOpts cons_opts;
    auto* cons = app.add_subcommand("constructed", "composition-reachable NUS3 graphs");
    cons->add_option("--order", cons_order, "graph order")->required();
    cons->add_option("--in", cons_in, "catalog file for this order (default: generate)");
    cons->add_option("--catalog", cons_catalogs, "extra lower catalog as ORDER=PATH (repeatable)");
    add_common(cons, cons_opts);

    // ratio
    int ratio_order = 0;
    std::string ratio_in;
    std::vector<std::string> ratio_catalogs;
    CommonOpts ratio_opts;
    auto* rat = app.add_subcommand("ratio", "constructed / NUS3 ratio");
    rat->add_option("--order", ratio_order, "graph order")->required();
    rat->add_option("--in", ratio_in, "catalog file for this order (default: generate)");
    rat->add_option("--catalog", ratio_catalogs, "extra lower catalog as ORDER=PATH (repeatable)");
    add_common(rat, ratio_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return run_generate(gen_n, gen_opts);
        if (ing->parsed()) return run_ingest(ing_file, ing_order);
        if (part->parsed()) return run_partition(part_order, part_in, part_opts);
        if (cen->parsed())
            return run_census(census_table, census_order, census_in, census_catalogs, census_opts);
        if (comp->parsed())
            return run_compose(comp_kind, comp_left, comp_right, comp_la, comp_ra, comp_stitch,
                               comp_prov, comp_opts);
        if (cons->parsed()) return run_constructed(cons_order, cons_in, cons_catalogs, cons_opts);
        if (rat->parsed()) return run_ratio(ratio_order, ratio_in, ratio_catalogs, ratio_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
