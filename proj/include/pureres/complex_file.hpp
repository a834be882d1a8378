#pragma once

#include "pureres/filtration.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pureres {

struct NamedMatrix {
    std::string name;
    PolyMatrix matrix;
};

/// Parsed contents of a complex file: one ring, matrices in declaration
/// order, and an optional complex listing phi_1 .. phi_p by name.
struct ComplexFile {
    Ring ring{{"x"}};
    std::vector<NamedMatrix> matrices;
    std::optional<std::string> complex_name;
    std::vector<std::string> complex_maps;

    const NamedMatrix* find(std::string_view name) const;
};

/// Grammar, one directive per line, `#` starts a comment:
///   ring q <n> <names...>            | ring zp <prime> <n> <names...>
///   map <name> <rows> <cols>         followed by rows*cols entries
///   complex <name> <map1> ... <mapP>
/// Entries are whitespace separated polynomials. Throws ParseError (with line
/// and column) on syntax errors and ShapeError on count or chaining mismatch.
ComplexFile parse_complex_text(std::string_view text);
ComplexFile read_complex_file(const std::filesystem::path& path);

/// The declared complex as a LOCAL FreeComplex. Throws ShapeError when the
/// file declares no complex or an empty one.
FreeComplex to_free_complex(const ComplexFile& file);

/// Renders matrices and an optional complex declaration in the file grammar.
std::string format_complex(const Ring& ring, const std::vector<NamedMatrix>& matrices,
                           const std::optional<std::string>& complex_name = std::nullopt);

} // namespace pureres
