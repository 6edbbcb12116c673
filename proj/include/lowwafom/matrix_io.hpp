#pragma once

// Text format for generating matrices:
//
//   # optional comment lines anywhere
//   n m S
//   <m lines of lowercase hex, one n-bit column each>      (block for C_1)
//   <blank line>
//   <m lines ...>                                           (block for C_2)
//   ...
//
// Row 1 of a column is the most significant of its n bits, matching the
// in-memory BitColumn convention. The writer pads each column to ceil(n/4)
// hex digits; the reader accepts any width whose value fits in n bits.

#include "lowwafom/f2.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lowwafom {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& source, int line, const std::string& what);
    int line() const { return line_; }

  private:
    int line_;
};

struct MatrixFile {
    GeneratingMatrixSet matrices;
    std::vector<std::string> comments;  // text after '#', leading space stripped
};

MatrixFile read_matrix_file(std::istream& in, const std::string& source = "<stream>");
MatrixFile read_matrix_file(const std::filesystem::path& path);

GeneratingMatrixSet read_matrices(std::istream& in, const std::string& source = "<stream>");
GeneratingMatrixSet read_matrices(const std::filesystem::path& path);

/// Comment lines (without the leading '#') are written before the header.
void write_matrices(std::ostream& out, const GeneratingMatrixSet& g,
                    const std::string& comment = {});
void write_matrices(const std::filesystem::path& path, const GeneratingMatrixSet& g,
                    const std::string& comment = {});

std::string format_column(BitColumn col, int digits);

}  // namespace lowwafom
