#include "pureres/complex_file.hpp"
#include "pureres/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pureres {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
    }
    return out;
}

std::size_t parse_count(const Token& t, const char* what)
{
    std::size_t value = 0;
    const auto* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", t.line, t.column);
    return value;
}

struct PendingMap {
    std::string name;
    std::size_t rows;
    std::size_t cols;
    std::size_t line;
    std::vector<Polynomial> entries;
};

class FileParser {
public:
    ComplexFile run(std::string_view text)
    {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            std::string_view line = text.substr(pos, eol - pos);
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            ++line_no;
            handle_line(tokenize_line(line, line_no));
            pos = eol + 1;
        }
        finish_map();
        if (!have_ring_)
            throw ParseError("missing ring declaration", line_no, 1);
        return std::move(file_);
    }

private:
    void handle_line(const std::vector<Token>& tokens)
    {
        if (tokens.empty())
            return;
        const std::string& head = tokens.front().text;
        if (head == "ring" || head == "map" || head == "complex") {
            finish_map();
            if (head == "ring")
                ring_directive(tokens);
            else if (head == "map")
                map_directive(tokens);
            else
                complex_directive(tokens);
            return;
        }
        if (!pending_)
            throw ParseError("unexpected token '" + head + "'", tokens.front().line, tokens.front().column);
        add_entries(tokens, 0);
    }

    void ring_directive(const std::vector<Token>& t)
    {
        if (have_ring_)
            throw ParseError("duplicate ring declaration", t[0].line, t[0].column);
        if (t.size() < 2)
            throw ParseError("ring needs a field", t[0].line, t[0].column);
        std::size_t k = 1;
        Field field;
        if (t[k].text == "q") {
            ++k;
        } else if (t[k].text == "zp") {
            ++k;
            if (k >= t.size())
                throw ParseError("zp needs a prime", t[k - 1].line, t[k - 1].column);
            try {
                field = Field::prime(parse_count(t[k], "a prime"));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), t[k].line, t[k].column);
            }
            ++k;
        } else {
            throw ParseError("unknown field '" + t[k].text + "' (expected q or zp)", t[k].line, t[k].column);
        }
        if (k >= t.size())
            throw ParseError("ring needs a variable count", t[0].line, t[0].column);
        const std::size_t n = parse_count(t[k], "a variable count");
        const Token& count_token = t[k];
        ++k;
        if (t.size() - k != n)
            throw ParseError("ring declares " + std::to_string(n) + " variables but names " +
                                 std::to_string(t.size() - k),
                             count_token.line, count_token.column);
        std::vector<std::string> names;
        for (; k < t.size(); ++k) {
            const std::string& s = t[k].text;
            const bool ok = !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_') &&
                            std::all_of(s.begin(), s.end(), [](char c) {
                                return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                            });
            if (!ok)
                throw ParseError("invalid variable name '" + s + "'", t[k].line, t[k].column);
            names.push_back(s);
        }
        try {
            file_.ring = Ring(std::move(names), field);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), t[0].line, t[0].column);
        }
        have_ring_ = true;
    }

    void map_directive(const std::vector<Token>& t)
    {
        if (!have_ring_)
            throw ParseError("map before ring declaration", t[0].line, t[0].column);
        if (t.size() < 4)
            throw ParseError("map needs a name, row count and column count", t[0].line, t[0].column);
        if (file_.find(t[1].text) != nullptr)
            throw ParseError("duplicate map name '" + t[1].text + "'", t[1].line, t[1].column);
        pending_ = PendingMap{t[1].text, parse_count(t[2], "a row count"), parse_count(t[3], "a column count"),
                              t[0].line, {}};
        add_entries(t, 4);
    }

    void complex_directive(const std::vector<Token>& t)
    {
        if (file_.complex_name)
            throw ParseError("duplicate complex declaration", t[0].line, t[0].column);
        if (t.size() < 2)
            throw ParseError("complex needs a name", t[0].line, t[0].column);
        for (std::size_t k = 2; k < t.size(); ++k)
            if (file_.find(t[k].text) == nullptr)
                throw ParseError("unknown matrix '" + t[k].text + "'", t[k].line, t[k].column);
        for (std::size_t k = 3; k < t.size(); ++k) {
            const PolyMatrix& prev = file_.find(t[k - 1].text)->matrix;
            const PolyMatrix& next = file_.find(t[k].text)->matrix;
            if (prev.cols() != next.rows())
                throw ShapeError("complex " + t[1].text + ": " + t[k - 1].text + " has " +
                                 std::to_string(prev.cols()) + " columns but " + t[k].text + " has " +
                                 std::to_string(next.rows()) + " rows");
        }
        file_.complex_name = t[1].text;
        for (std::size_t k = 2; k < t.size(); ++k)
            file_.complex_maps.push_back(t[k].text);
    }

    void add_entries(const std::vector<Token>& t, std::size_t from)
    {
        for (std::size_t k = from; k < t.size(); ++k) {
            PendingMap& m = *pending_;
            if (m.entries.size() == m.rows * m.cols)
                throw ShapeError("map " + m.name + " (line " + std::to_string(m.line) + ") declares " +
                                 std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                                 " but has an extra entry at line " + std::to_string(t[k].line) + ", column " +
                                 std::to_string(t[k].column));
            try {
                m.entries.push_back(parse_polynomial(t[k].text, file_.ring));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), t[k].line, t[k].column + (e.column() > 0 ? e.column() - 1 : 0));
            }
        }
    }

    void finish_map()
    {
        if (!pending_)
            return;
        PendingMap m = std::move(*pending_);
        pending_.reset();
        if (m.entries.size() != m.rows * m.cols)
            throw ShapeError("map " + m.name + " (line " + std::to_string(m.line) + ") declares " +
                             std::to_string(m.rows) + "x" + std::to_string(m.cols) + " = " +
                             std::to_string(m.rows * m.cols) + " entries but has " + std::to_string(m.entries.size()));
        PolyMatrix matrix(file_.ring.field(), file_.ring.nvars(), m.rows, m.cols);
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t c = 0; c < m.cols; ++c)
                matrix(r, c) = std::move(m.entries[r * m.cols + c]);
        file_.matrices.push_back({std::move(m.name), std::move(matrix)});
    }

    ComplexFile file_;
    bool have_ring_ = false;
    std::optional<PendingMap> pending_;
};

} // namespace

const NamedMatrix* ComplexFile::find(std::string_view name) const
{
    auto it = std::find_if(matrices.begin(), matrices.end(), [&](const NamedMatrix& m) { return m.name == name; });
    return it == matrices.end() ? nullptr : &*it;
}

ComplexFile parse_complex_text(std::string_view text)
{
    return FileParser().run(text);
}

ComplexFile read_complex_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_complex_text(buffer.str());
}

FreeComplex to_free_complex(const ComplexFile& file)
{
    if (!file.complex_name)
        throw ShapeError("no complex declaration");
    if (file.complex_maps.empty())
        throw ShapeError("at least one map required");
    std::vector<PolyMatrix> maps;
    for (const auto& name : file.complex_maps)
        maps.push_back(file.find(name)->matrix);
    return FreeComplex(file.ring, std::move(maps), Flavor::Local);
}

std::string format_complex(const Ring& ring, const std::vector<NamedMatrix>& matrices,
                           const std::optional<std::string>& complex_name)
{
    std::ostringstream out;
    out << "ring " << ring.field().name() << ' ' << ring.nvars();
    for (const auto& n : ring.names())
        out << ' ' << n;
    out << '\n';
    for (const auto& [name, m] : matrices) {
        out << "map " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
        std::vector<std::string> cells(m.rows() * m.cols());
        std::vector<std::size_t> width(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                cells[r * m.cols() + c] = to_string(m(r, c), ring);
                width[c] = std::max(width[c], cells[r * m.cols() + c].size());
            }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::string line;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                const std::string& cell = cells[r * m.cols() + c];
                line += cell;
                if (c + 1 < m.cols())
                    line += std::string(width[c] - cell.size() + 1, ' ');
            }
            out << line << '\n';
        }
    }
    if (complex_name) {
        out << "complex " << *complex_name;
        for (const auto& m : matrices)
            out << ' ' << m.name;
        out << '\n';
    }
    return out.str();
}

} // namespace pureres
