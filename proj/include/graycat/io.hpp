#pragma once

#include "graycat/mapping_space.hpp"

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace graycat {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg, const std::string& file = {});
    int line, column;
    std::string message;
};

// values[d][i] names the section holding the value of the d-cell i of the space.
struct Dictionary {
    CatPtr space, dom, cod;
    std::array<std::vector<std::string>, 4> values;

    bool operator==(const Dictionary&) const = default;
};

enum class SectionKind { category, functor, pstransf, psmod, perturbation, dictionary };

const char* section_keyword(SectionKind k);

struct Section {
    using Value = std::variant<CatPtr, GrayFunctor, PseudoTransformation, PseudoModification, Perturbation, Dictionary>;

    std::string name;
    Value value;

    SectionKind kind() const { return static_cast<SectionKind>(value.index()); }
};

struct Document {
    int version = 1;
    std::vector<Section> sections;

    // Last section of that kind and name, or null.
    const Section* find(SectionKind k, std::string_view name) const;
    // Name of a section holding an equal value, or empty.
    std::string name_of(const Section::Value& v) const;
    void append(const Document& other);
};

// References to sections not in `text` are resolved in `context`.
Document parse(std::string_view text, const Document* context = nullptr);
std::string serialize(const Document& doc, const Document* context = nullptr);

Document load_document(const std::string& path, const Document* context = nullptr);

// Space, its two categories, one section per cell value, and the dictionary.
Document mapping_space_document(const MappingSpace& M);

} // namespace graycat
