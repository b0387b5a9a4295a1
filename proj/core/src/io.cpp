#include "codedinv/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "codedinv/errors.hpp"

namespace codedinv {

void save_matrix_csv(const RealMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    char buf[40];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            out << (j == 0 ? "" : ",") << buf;
        }
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path.string());
}

RealMatrix load_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::vector<double> data;
    std::size_t rows = 0, cols = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ls, cell, ',')) {
            try {
                data.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw IoError("bad numeric cell '" + cell + "' in " + path.string());
            }
            ++c;
        }
        if (rows == 0) {
            cols = c;
        } else if (c != cols) {
            throw IoError("ragged rows in " + path.string());
        }
        ++rows;
    }
    if (rows == 0) throw IoError("empty matrix file: " + path.string());
    return RealMatrix(rows, cols, std::move(data));
}

void save_matrix_csv(const ComplexMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    char buf[80];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const cplx v = m(i, j);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
            out << (j == 0 ? "" : ",") << buf;
        }
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace codedinv
