#include "lowwafom/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace lowwafom {

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

MatrixFile read_matrix_file(std::istream& in, const std::string& source) {
    MatrixFile file;
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    int digits = 0;
    int columns = 0;
    int dimension = 0;
    std::vector<BitColumn> data;
    int in_block = 0;  // columns read in the current block

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (!line.empty() && line[0] == '#') {
            file.comments.push_back(trim(line.substr(1)));
            continue;
        }
        if (!have_header) {
            if (line.empty()) continue;
            std::istringstream hs(line);
            std::string extra;
            if (!(hs >> digits >> columns >> dimension) || (hs >> extra)) {
                throw ParseError(source, line_no, "header must be 'n m S'");
            }
            if (digits < 1 || digits > kMaxDigits || columns < 0 || columns > 63 || dimension < 1) {
                throw ParseError(source, line_no, "header values out of range");
            }
            have_header = true;
            data.reserve(static_cast<std::size_t>(columns) * dimension);
            continue;
        }
        if (line.empty()) {
            if (in_block != 0 && in_block != columns) {
                throw ParseError(source, line_no,
                                 "block " + std::to_string(data.size() / std::max(columns, 1) + 1) +
                                     " has " + std::to_string(in_block) + " columns, expected " +
                                     std::to_string(columns));
            }
            in_block = 0;
            continue;
        }
        if (in_block == columns) {
            throw ParseError(source, line_no,
                             "too many columns in block (expected " + std::to_string(columns) +
                                 "); separate blocks with a blank line");
        }
        if (data.size() == static_cast<std::size_t>(columns) * dimension) {
            throw ParseError(source, line_no, "more than S blocks");
        }
        BitColumn v = 0;
        for (char c : line) {
            const int h = hex_digit(c);
            if (h < 0) throw ParseError(source, line_no, "non-hex character '" + std::string(1, c) + "'");
            if ((v >> 60) != 0) throw ParseError(source, line_no, "column value too large");
            v = (v << 4) | static_cast<BitColumn>(h);
        }
        if ((v & ~low_mask(digits)) != 0) {
            throw ParseError(source, line_no, "column value exceeds n=" + std::to_string(digits) + " bits");
        }
        data.push_back(v);
        ++in_block;
    }
    if (!have_header) throw ParseError(source, line_no, "missing header");
    if (data.size() != static_cast<std::size_t>(columns) * dimension) {
        throw ParseError(source, line_no,
                         "expected " + std::to_string(dimension) + " blocks of " +
                             std::to_string(columns) + " columns, got " +
                             std::to_string(data.size()) + " columns in total");
    }
    file.matrices = GeneratingMatrixSet(digits, columns, dimension, std::move(data));
    return file;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path.string() + "'");
    return read_matrix_file(in, path.string());
}

GeneratingMatrixSet read_matrices(std::istream& in, const std::string& source) {
    return read_matrix_file(in, source).matrices;
}

GeneratingMatrixSet read_matrices(const std::filesystem::path& path) {
    return read_matrix_file(path).matrices;
}

std::string format_column(BitColumn col, int digits) {
    static constexpr char kHex[] = "0123456789abcdef";
    const int width = (digits + 3) / 4;
    std::string s(width, '0');
    for (int i = width - 1; i >= 0; --i) {
        s[i] = kHex[col & 0xF];
        col >>= 4;
    }
    return s;
}

void write_matrices(std::ostream& out, const GeneratingMatrixSet& g, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string line;
        while (std::getline(cs, line)) out << "# " << line << '\n';
    }
    out << g.digits() << ' ' << g.columns() << ' ' << g.dimension() << '\n';
    for (int i = 0; i < g.dimension(); ++i) {
        if (i != 0) out << '\n';
        for (BitColumn c : g.matrix(i)) out << format_column(c, g.digits()) << '\n';
    }
}

void write_matrices(const std::filesystem::path& path, const GeneratingMatrixSet& g,
                    const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file '" + path.string() + "'");
    write_matrices(out, g, comment);
    if (!out) throw std::runtime_error("error while writing '" + path.string() + "'");
}

}  // namespace lowwafom
