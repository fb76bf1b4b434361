#include "weylkit/csv.hpp"

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace weylkit {

void write_csv(const std::string& path, const GridFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << "t,value";
    for (std::size_t c = 1; c < f.dim(); ++c) out << ",value" << (c + 1);
    out << "\n";
    char buf[32];
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", f.t_at(i));
        out << buf;
        for (std::size_t c = 0; c < f.dim(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", f.value(i, c));
            out << ',' << buf;
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

GridFunction read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("read_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("read_csv: empty file " + path);
    if (line.rfind("t,", 0) != 0)
        throw std::invalid_argument("read_csv: missing 't,value...' header in " + path);
    std::vector<double> ts;
    std::vector<double> vals;
    std::size_t dim = 0;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("read_csv: bad number at line " +
                                            std::to_string(lineno) + " of " + path);
            }
        }
        if (row.size() < 2)
            throw std::invalid_argument("read_csv: need t plus at least one value column");
        if (dim == 0)
            dim = row.size() - 1;
        else if (row.size() - 1 != dim)
            throw std::invalid_argument("read_csv: inconsistent column count at line " +
                                        std::to_string(lineno));
        ts.push_back(row[0]);
        vals.insert(vals.end(), row.begin() + 1, row.end());
    }
    if (ts.size() < 2) throw std::invalid_argument("read_csv: need at least two samples");
    const double dt = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
    if (!(dt > 0.0)) throw std::invalid_argument("read_csv: time column must increase");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (std::abs(ts[i] - ts[i - 1] - dt) > 1e-6 * dt)
            throw std::invalid_argument("read_csv: non-uniform grid near line " +
                                        std::to_string(i + 1));
    Domain dom = ts.front() < -1e-9 * dt ? Domain::FullLine : Domain::HalfLine;
    return GridFunction(ts.front(), dt, dim, std::move(vals), dom);
}

} // namespace weylkit
