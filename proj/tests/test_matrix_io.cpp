#include "lowwafom/matrix_io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace lowwafom;
using testing_support::test_rng;

namespace {

int error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_matrices(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("format: row 1 is the most significant hex digit") {
    GeneratingMatrixSet g(6, 2, 2, {unit_column(6, 1), 0x3, 0x15, 0x2a});
    std::ostringstream out;
    write_matrices(out, g, "hello\nworld");
    CHECK(out.str() == "# hello\n# world\n6 2 2\n20\n03\n\n15\n2a\n");
    CHECK(format_column(0xabc, 12) == "abc");
    CHECK(format_column(0x1, 30) == "00000001");
}

TEST_CASE("write/read/write is byte identical, comments kept") {
    auto rng = test_rng(60);
    for (int n : {1, 7, 30, 62}) {
        const auto g = testing_support::random_net(n, 5, 3, rng);
        std::ostringstream first;
        write_matrices(first, g, "c");
        std::istringstream in(first.str());
        const auto file = read_matrix_file(in);
        CHECK(file.matrices == g);
        CHECK(file.comments == std::vector<std::string>{"c"});
        std::ostringstream second;
        write_matrices(second, file.matrices, "c");
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("reader tolerates upper-case and short hex, comments anywhere") {
    std::istringstream in("4 2 1\n# inside\nF\n1\n");
    const auto g = read_matrices(in);
    CHECK(g.column(0, 0) == 0xf);
    CHECK(g.column(0, 1) == 0x1);
}

TEST_CASE("malformed files report the line") {
    CHECK(error_line("4 2\n") == 1);
    CHECK(error_line("# c\n4 2 1\nf\nz\n") == 4);
    CHECK(error_line("4 2 1\nf\n10\n") == 3);
    CHECK(error_line("4 2 2\nf\n1\n1\n\n2\n3\n") == 4);
    CHECK(error_line("4 2 2\nf\n\n2\n3\n") == 3);
    CHECK(error_line("4 2 2\nf\n1\n\n2\n") == 5);
    CHECK(error_line("") == 0);
    CHECK(error_line("4 1 1\nf\n\n1\n") == 4);
}

TEST_CASE("missing file names the path") {
    try {
        read_matrices(std::filesystem::path("/nonexistent/dir/m.txt"));
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/dir/m.txt") != std::string::npos);
    }
}
