#include "batrel/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace batrel {

std::string format_round_trip(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    auto [end, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    return std::string(buf, end);
}

void write_report_csv(std::ostream& out, const ReliabilityReport& report) {
    out << "zeta,total,connected,mass,elapsed_s\n";
    for (const LevelStats& s : report.levels) {
        out << s.level << ',' << s.total_vectors << ',' << s.connected_vectors << ','
            << format_round_trip(s.mass) << ',' << format_fixed(s.elapsed_seconds, 6) << '\n';
    }
    out << "R," << format_round_trip(report.reliability) << ',' << to_string(report.termination)
        << '\n';
}

void write_report_table(std::ostream& out, const ReliabilityReport& report) {
    out << std::setw(6) << "zeta" << std::setw(22) << "total" << std::setw(22) << "connected"
        << std::setw(12) << "mass" << std::setw(12) << "time_s" << '\n';
    for (const LevelStats& s : report.levels) {
        out << std::setw(6) << s.level << std::setw(22) << s.total_vectors << std::setw(22)
            << s.connected_vectors << std::setw(12) << format_fixed(s.mass) << std::setw(12)
            << format_fixed(s.elapsed_seconds, 3) << '\n';
    }
    double seconds = 0.0;
    for (const LevelStats& s : report.levels) seconds += s.elapsed_seconds;
    std::ostringstream label;
    label << "R_" << report.min_ones;
    out << std::setw(6) << label.str() << std::setw(56) << format_fixed(report.reliability)
        << std::setw(12) << format_fixed(seconds, 3) << '\n';
    out << "termination: " << to_string(report.termination) << " ("
        << to_string(report.direction) << ", " << report.levels.size() << " levels)\n";
}

}  // namespace batrel
