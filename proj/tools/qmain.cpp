#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmain/classify.hpp"
#include "qmain/enumerate.hpp"
#include "qmain/exact.hpp"
#include "qmain/families.hpp"
#include "qmain/report.hpp"
#include "qmain/spectra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;       // usage, parse or parameter errors
constexpr int kExitPrecondition = 2; // disconnected input
constexpr int kExitViolation = 3;   // a verified classification failed

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qmain::ParseError("cannot open " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string first_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) return line;
    throw qmain::ParseError("no graph6 line in input", 0);
}

// Inputs are either inline graph6, a family spec (with use_family), or a
// file whose format follows its extension unless --format overrides.
qmain::Graph load_graph(const std::string& input, const std::string& format, bool use_family) {
    if (use_family) {
        const auto spec = qmain::families::parse_spec(input);
        if (!spec) throw qmain::InvalidParameter("bad family spec: " + input);
        return qmain::families::build(*spec);
    }
    if (std::filesystem::exists(input)) {
        const std::string text = read_file(input);
        std::string fmt = format;
        if (fmt.empty()) {
            const std::string ext = std::filesystem::path(input).extension().string();
            if (ext == ".g6") fmt = "g6";
            else if (ext == ".el") fmt = "el";
            else throw qmain::InvalidParameter("cannot infer format of " + input + "; pass --format");
        }
        if (fmt == "g6") return qmain::parse_graph6(first_line(text));
        if (fmt == "el") return qmain::parse_edge_list(text);
        throw qmain::InvalidParameter("unknown format: " + fmt);
    }
    if (format == "el") throw qmain::InvalidParameter("edge-list input must be a file");
    return qmain::parse_graph6(input);
}

nlohmann::json parabolic_json(const qmain::ParabolicResult& r) {
    if (const auto* cert = std::get_if<qmain::ParabolicCertificate>(&r))
        return {{"a", cert->a}, {"b", cert->b}};
    const auto& f = std::get<qmain::ClassifyFailure>(r);
    nlohmann::json out{{"failure", qmain::to_string(f.reason)}};
    if (f.reason == qmain::FailureReason::ResidualFail) {
        out["vertex"] = f.vertex;
        out["residual"] = f.residual;
    }
    return out;
}

nlohmann::json linear_json(const qmain::LinearResult& r) {
    if (const auto* cert = std::get_if<qmain::LinearCertificate>(&r))
        return {{"a", cert->a}, {"b", cert->b}};
    const auto& f = std::get<qmain::ClassifyFailure>(r);
    nlohmann::json out{{"failure", qmain::to_string(f.reason)}};
    if (f.reason == qmain::FailureReason::ResidualFail) {
        out["vertex"] = f.vertex;
        out["residual"] = f.residual;
    }
    return out;
}

int run_analyze(const std::string& input, const std::string& format, bool use_family) {
    const qmain::Graph g = load_graph(input, format, use_family);
    if (!qmain::is_connected(g)) {
        std::cerr << "input graph is disconnected; analysis requires a connected graph\n";
        return kExitPrecondition;
    }

    nlohmann::json out;
    out["graph6"] = qmain::write_graph6(g);
    out["n"] = g.order();
    out["m"] = g.size();
    out["regular"] = qmain::is_regular(g);
    out["mainCountExact"] = qmain::main_count_exact(g);

    nlohmann::json mains = nlohmann::json::array();
    const auto detected = qmain::main_eigenvalues(g);
    for (const auto& me : detected)
        mains.push_back({{"value", qmain::round_for_output(me.value)},
                         {"multiplicity", me.multiplicity},
                         {"mainAngle", qmain::round_for_output(me.main_angle)}});
    out["mainEigenvalues"] = mains;

    if (g.order() >= 2) out["parabolic"] = parabolic_json(qmain::parabolic_certificate(g));
    out["linear"] = linear_json(qmain::linear_certificate(g));
    if (detected.size() == 2)
        out["annihilatorResidual"] =
            qmain::round_for_output(qmain::annihilator_residual(g, detected[0].value, detected[1].value));

    const auto family = qmain::families::identify(g);
    out["family"] = family ? qmain::families::to_string(*family) : "unknown";

    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_family(const std::string& spec_text, const std::string& out_path) {
    const auto spec = qmain::families::parse_spec(spec_text);
    if (!spec) throw qmain::InvalidParameter("bad family spec: " + spec_text);
    const qmain::Graph g = qmain::families::build(*spec);
    const std::string g6 = qmain::write_graph6(g);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw qmain::Error("cannot write " + out_path);
        out << g6 << "\n";
    } else {
        std::cout << g6 << "\n";
    }
    std::cout << "n=" << g.order() << " m=" << g.size() << "\n";
    return kExitOk;
}

void print_report_summary(const std::vector<qmain::ClassReport>& reports) {
    for (const auto& rep : reports) {
        std::cout << "n=" << rep.n << " total=" << rep.total;
        long long one = 0, two = 0, more = 0;
        for (const auto& [bucket, count] : rep.histogram) {
            if (bucket == 1) one = count;
            else if (bucket == 2) two = count;
            else more = count;
        }
        std::cout << " 1:" << one << " 2:" << two << " 3+:" << more;
        if (!rep.two_main.empty()) {
            std::cout << " twoMain=[";
            for (std::size_t i = 0; i < rep.two_main.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << rep.two_main[i].family << "(" << rep.two_main[i].a << ","
                          << rep.two_main[i].b << ")";
            }
            std::cout << "]";
        }
        std::cout << "\n";
    }
}

qmain::GraphClass class_of(const std::string& name) {
    if (name == "trees") return qmain::GraphClass::Trees;
    if (name == "unicyclic") return qmain::GraphClass::Unicyclic;
    throw qmain::InvalidParameter("unknown class: " + name);
}

int run_verify(const std::string& cls_name, int max_n, const std::string& json_path) {
    const qmain::GraphClass cls = class_of(cls_name);
    std::vector<qmain::ClassReport> reports;
    try {
        reports = cls == qmain::GraphClass::Trees ? qmain::verify_trees(max_n)
                                                  : qmain::verify_unicyclic(max_n);
    } catch (const qmain::ClassificationViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kExitViolation;
    }
    print_report_summary(reports);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw qmain::Error("cannot write " + json_path);
        out << qmain::reports_to_json(reports);
    }
    std::cout << "verified: two-main " << cls_name << " up to n=" << max_n
              << " match the expected families\n";
    return kExitOk;
}

qmain::CountMethod method_of(const std::string& name) {
    if (name == "exact") return qmain::CountMethod::Exact;
    if (name == "spectral") return qmain::CountMethod::Spectral;
    if (name == "combinatorial") return qmain::CountMethod::Combinatorial;
    throw qmain::InvalidParameter("unknown method: " + name);
}

int run_census(const std::string& cls_name, int max_n, const std::string& method_name,
               const std::string& csv_path, const std::string& json_path) {
    const auto [reports, rows] = qmain::census_with_rows(class_of(cls_name), max_n, method_of(method_name));
    print_report_summary(reports);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw qmain::Error("cannot write " + csv_path);
        out << qmain::rows_to_csv(rows);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw qmain::Error("cannot write " + json_path);
        out << qmain::reports_to_json(reports);
    }
    return kExitOk;
}

int run_convert(const std::string& input, const std::string& to, const std::string& out_path,
                const std::string& format) {
    const qmain::Graph g = load_graph(input, format, false);
    std::string text;
    if (to == "g6") text = qmain::write_graph6(g) + "\n";
    else if (to == "el") text = qmain::write_edge_list(g);
    else throw qmain::InvalidParameter("unknown target format: " + to);
    if (!out_path.empty() && out_path != "-") {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw qmain::Error("cannot write " + out_path);
        out << text;
    } else {
        std::cout << text;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signless Laplacian main eigenvalue toolkit"};
    app.require_subcommand(1);

    std::string input, format, out_path, json_path, csv_path, cls_name, method_name = "exact", to;
    bool use_family = false;
    int max_n = 0;

    auto* analyze = app.add_subcommand("analyze", "classify a single graph and print a JSON report");
    analyze->add_option("input", input, "graph6 string, file path, or family spec with --family")->required();
    analyze->add_option("--format", format, "input file format: g6 or el");
    analyze->add_flag("--family", use_family, "treat input as a family spec (e.g. star:6)");

    auto* family = app.add_subcommand("family", "build a named family graph and write graph6");
    family->add_option("spec", input, "family spec, e.g. g1:3,1")->required();
    family->add_option("--out", out_path, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "verify the two-main classification over all graphs of a class");
    verify->add_option("--class", cls_name, "trees or unicyclic")->required();
    verify->add_option("--max-n", max_n, "largest order to enumerate")->required();
    verify->add_option("--json", json_path, "write the JSON reports here");

    auto* census = app.add_subcommand("census", "histogram main-eigenvalue counts over a graph class");
    census->add_option("--class", cls_name, "trees or unicyclic")->required();
    census->add_option("--max-n", max_n, "largest order to enumerate")->required();
    census->add_option("--method", method_name, "exact, spectral or combinatorial");
    census->add_option("--csv", csv_path, "write per-graph rows here");
    census->add_option("--json", json_path, "write the JSON reports here");

    auto* convert = app.add_subcommand("convert", "convert between graph6 and edge-list formats");
    convert->add_option("input", input, "graph6 string or file path")->required();
    convert->add_option("--to", to, "target format: g6 or el")->required();
    convert->add_option("output", out_path, "output file (default: stdout)");
    convert->add_option("--format", format, "input file format: g6 or el");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(input, format, use_family);
        if (app.got_subcommand(family)) return run_family(input, out_path);
        if (app.got_subcommand(verify)) return run_verify(cls_name, max_n, json_path);
        if (app.got_subcommand(census)) return run_census(cls_name, max_n, method_name, csv_path, json_path);
        if (app.got_subcommand(convert)) return run_convert(input, to, out_path, format);
    } catch (const qmain::NotConnected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const qmain::ClassificationViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const qmain::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
