#include <cctype>
#include <fstream>
#include <sstream>

#include "canonform/matrix.hpp"

namespace canonform {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_ws(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

// Blank lines and '#' comment lines are skipped.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++number;
        auto tokens = split_ws(line);
        if (!tokens.empty() && tokens.front().text.front() != '#') out.push_back({number, std::move(tokens)});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

std::size_t parse_dimension(const Line& line, std::string_view keyword) {
    if (line.tokens.size() != 2 || line.tokens[0].text != keyword)
        throw ParseError(ErrorKind::Parse, "expected '" + std::string(keyword) + " <count>'", line.number,
                         line.tokens[0].column);
    const Token& t = line.tokens[1];
    std::size_t value = 0;
    for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(ErrorKind::Parse, "dimension must be a positive integer", line.number, t.column);
        value = value * 10 + static_cast<std::size_t>(c - '0');
        if (value > 1'000'000) throw ParseError(ErrorKind::Parse, "dimension too large", line.number, t.column);
    }
    if (value == 0) throw ParseError(ErrorKind::Parse, "dimension must be at least 1", line.number, t.column);
    return value;
}

}  // namespace

Ring parse_ring(std::string_view name) {
    if (name == "Z") return Ring::Z;
    if (name == "Q") return Ring::Q;
    if (name == "Q[x]") return Ring::QX;
    throw ParseError(ErrorKind::Parse, "unknown ring '" + std::string(name) + "' (expected Z, Q or Q[x])");
}

Matrix parse_matrix(std::string_view text) {
    auto lines = significant_lines(text);
    const std::size_t last = lines.empty() ? 1 : lines.back().number;
    if (lines.size() < 3) throw ParseError(ErrorKind::Parse, "missing ring/rows/cols header", last, 1);

    const Line& ring_line = lines[0];
    if (ring_line.tokens.size() != 2 || ring_line.tokens[0].text != "ring")
        throw ParseError(ErrorKind::Parse, "expected 'ring Z|Q|Q[x]'", ring_line.number, 1);
    Ring ring;
    try {
        ring = parse_ring(ring_line.tokens[1].text);
    } catch (const ParseError&) {
        throw ParseError(ErrorKind::Parse, "unknown ring '" + std::string(ring_line.tokens[1].text) + "'",
                         ring_line.number, ring_line.tokens[1].column);
    }
    const std::size_t m = parse_dimension(lines[1], "rows");
    const std::size_t n = parse_dimension(lines[2], "cols");

    if (lines.size() - 3 != m)
        throw ParseError(ErrorKind::Parse,
                         "expected " + std::to_string(m) + " rows of entries, found " + std::to_string(lines.size() - 3),
                         last, 1);
    std::vector<Elem> data;
    data.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        const Line& line = lines[3 + i];
        if (line.tokens.size() != n)
            throw ParseError(ErrorKind::Parse,
                             "expected " + std::to_string(n) + " entries, found " + std::to_string(line.tokens.size()),
                             line.number, 1);
        for (const Token& t : line.tokens) {
            try {
                data.push_back(parse_scalar(t.text, ring));
            } catch (const ParseError& e) {
                throw ParseError(e.kind(), e.detail(), line.number, t.column + (e.column() ? e.column() - 1 : 0));
            }
        }
    }
    return Matrix(ring, m, n, std::move(data));
}

std::string format_matrix(const Matrix& m) {
    std::ostringstream out;
    out << "ring " << to_string(m.ring()) << "\nrows " << m.rows() << "\ncols " << m.cols() << "\n";
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            if (j > 1) out << ' ';
            out << to_string(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(ErrorKind::Parse, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

}  // namespace canonform
