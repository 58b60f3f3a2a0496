#include "qmain/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace qmain {

double round_for_output(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string reports_to_json(const std::vector<ClassReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const ClassReport& rep : reports) {
        nlohmann::json histogram = nlohmann::json::object();
        for (const auto& [bucket, count] : rep.histogram) histogram[std::to_string(bucket)] = count;
        nlohmann::json two_main = nlohmann::json::array();
        for (const TwoMainEntry& e : rep.two_main)
            two_main.push_back({{"graph6", e.graph6}, {"a", e.a}, {"b", e.b}, {"family", e.family}});
        out.push_back({{"n", rep.n},
                       {"class", to_string(rep.cls)},
                       {"total", rep.total},
                       {"histogram", histogram},
                       {"twoMain", two_main}});
    }
    return out.dump(2) + "\n";
}

std::string rows_to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "graph6,n,mainCountExact,a,b,family\n";
    for (const CensusRow& row : rows) {
        out << row.graph6 << ',' << row.n << ',' << row.count << ',';
        if (row.certificate) out << row.certificate->a;
        out << ',';
        if (row.certificate) out << row.certificate->b;
        out << ',' << row.family << '\n';
    }
    return out.str();
}

} // namespace qmain
