#include "finitype/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace finitype {

namespace {

bool is_integer_token(const std::string& tok) {
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) return false;
    for (std::size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

Integer to_integer(const std::string& tok, std::size_t line) {
    if (!is_integer_token(tok)) throw ParseError(line, "not an integer: '" + tok + "'");
    return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

}  // namespace

SquareIntMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    SquareIntMatrix m;
    std::size_t rows = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;

        if (!n) {
            if (tokens.size() != 1) throw ParseError(line_no, "expected the dimension alone on the first line");
            const std::string& tok = tokens[0];
            if (!is_integer_token(tok) || tok[0] == '-' || tok.size() > 9)
                throw ParseError(line_no, "invalid dimension: '" + tok + "'");
            n = std::stoul(tok);
            m = SquareIntMatrix(*n);
            continue;
        }
        if (rows == *n) throw ParseError(line_no, "unexpected content after " + std::to_string(*n) + " rows");
        if (tokens.size() != *n)
            throw ParseError(line_no, "expected " + std::to_string(*n) + " entries, found " +
                                          std::to_string(tokens.size()));
        for (std::size_t j = 0; j < *n; ++j) m(rows, j) = to_integer(tokens[j], line_no);
        ++rows;
    }
    // Reported at the line just past the end of the input.
    if (!n) throw ParseError(line_no + 1, "missing dimension");
    if (rows != *n)
        throw ParseError(line_no + 1, "expected " + std::to_string(*n) + " rows, found " + std::to_string(rows));
    return m;
}

SquareIntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string format_matrix(const SquareIntMatrix& m) {
    std::ostringstream out;
    out << m.size() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m(i, j);
        out << '\n';
    }
    return out.str();
}

}  // namespace finitype
