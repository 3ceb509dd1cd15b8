#include "csv_io.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "qpulse/version.hpp"

namespace qpulse::cli {

namespace {

double parse_double_field(const std::string& field, const std::string& context) {
    double value = 0.0;
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::runtime_error("malformed number '" + field + "' in " + context);
    }
    return value;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), ptr};
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
    const SweepPlane& plane = grid.plane;
    const std::string x_name = to_string(plane.x.param);
    const std::string y_name = to_string(plane.y.param);

    out << kCsvHeader << '\n';
    for (int iy = 0; iy < plane.y.count; ++iy) {
        const std::string y = format_double(axis_node(plane.y, iy));
        for (int ix = 0; ix < plane.x.count; ++ix) {
            const std::string x = format_double(axis_node(plane.x, ix));
            const CellResult& cell = grid.at(ix, iy);
            for (const Observable o : grid.observables) {
                out << x_name << ',' << y_name << ',' << x << ',' << y << ','
                    << to_string(o) << ',';
                if (const auto value = cell.get(o)) out << format_double(*value);
                out << ',' << format_double(cell.s_norm) << ','
                    << to_string(cell.status) << '\n';
            }
        }
    }
}

std::vector<CsvRow> parse_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("missing or wrong CSV header, expected '" +
                                 std::string(kCsvHeader) + "'");
    }

    std::vector<CsvRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 8) {
            throw std::runtime_error("expected 8 fields in CSV line " +
                                     std::to_string(line_no) + ", got " +
                                     std::to_string(fields.size()));
        }
        const std::string context = "CSV line " + std::to_string(line_no);
        CsvRow row;
        row.x_name = fields[0];
        row.y_name = fields[1];
        row.x = parse_double_field(fields[2], context);
        row.y = parse_double_field(fields[3], context);
        row.observable = fields[4];
        if (!fields[5].empty()) row.value = parse_double_field(fields[5], context);
        row.s_norm = parse_double_field(fields[6], context);
        row.status = fields[7];
        if (row.status != "ok" && row.status != "nonphysical") {
            throw std::runtime_error("unknown status '" + row.status + "' in " + context);
        }
        if (row.value.has_value() == (row.status == "nonphysical")) {
            throw std::runtime_error("value/status mismatch in " + context);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json sweep_metadata(const SweepGrid& grid, const std::string& figure,
                              const std::vector<std::string>& assumptions) {
    const SweepPlane& plane = grid.plane;
    const auto axis_json = [](const AxisSpec& axis) {
        return nlohmann::json{{"name", to_string(axis.param)},
                              {"lo", axis.lo},
                              {"hi", axis.hi},
                              {"n", axis.count}};
    };

    // fixed = the parameters not living on an axis
    nlohmann::json fixed;
    const auto on_axis = [&plane](SweepParameter p) {
        return plane.x.param == p || plane.y.param == p;
    };
    if (!on_axis(SweepParameter::Theta)) fixed["theta"] = plane.fixed.theta;
    if (!on_axis(SweepParameter::Phi)) fixed["phi"] = plane.fixed.phi;
    if (!on_axis(SweepParameter::Omega0)) fixed["omega0"] = plane.fixed.omega0;
    if (!on_axis(SweepParameter::Delta)) fixed["delta"] = plane.fixed.delta;

    nlohmann::json observables = nlohmann::json::array();
    for (const Observable o : grid.observables) observables.push_back(to_string(o));

    return nlohmann::json{{"figure", figure},
                          {"mode", to_string(grid.mode)},
                          {"time", plane.fixed.time},
                          {"log_base", grid.log_base},
                          {"x_axis", axis_json(plane.x)},
                          {"y_axis", axis_json(plane.y)},
                          {"fixed", fixed},
                          {"resolution", {plane.x.count, plane.y.count}},
                          {"observables", observables},
                          {"nonphysical_cells", grid.nonphysical_count},
                          {"epsilon_pure", kEpsPure},
                          {"epsilon_phys", kEpsPhys},
                          {"tool_version", kVersion},
                          {"assumptions", assumptions}};
}

void write_gnuplot_script(std::ostream& out, const std::string& csv_path,
                          const SweepGrid& grid) {
    const std::string x_name = to_string(grid.plane.x.param);
    const std::string y_name = to_string(grid.plane.y.param);
    const std::string stem = [&csv_path] {
        const auto dot = csv_path.rfind(".csv");
        return dot == std::string::npos ? csv_path : csv_path.substr(0, dot);
    }();

    out << "# contour renders of " << csv_path << " (one png per observable)\n"
        << "set datafile separator comma\n"
        << "set key off\n"
        << "set view map\n"
        << "set dgrid3d " << grid.plane.y.count << ',' << grid.plane.x.count << '\n'
        << "set xlabel '" << x_name << "'\n"
        << "set ylabel '" << y_name << "'\n"
        << "set term pngcairo size 900,700\n";
    for (const Observable o : grid.observables) {
        const std::string name = to_string(o);
        out << "set output '" << stem << '_' << name << ".png'\n"
            << "set title '" << name << "'\n"
            << "splot '" << csv_path << "' every ::1 using 3:4:"
            << "(strcol(5) eq '" << name << "' && strcol(8) eq 'ok' ? $6 : 1/0) "
            << "with pm3d\n";
    }
}

}  // namespace qpulse::cli
