#ifndef DCS_LINE_TOKENS_HPP
#define DCS_LINE_TOKENS_HPP

// Internal line/token discipline shared by the text-format parsers.
// Not installed.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dcs/io.hpp"

namespace dcs::detail {

struct Token {
    std::string_view text;
    std::uint32_t column = 1;  // 1-based
};

struct Line {
    std::uint32_t number = 1;  // 1-based
    std::vector<Token> tokens;
};

// Comment-stripped ('#' to end of line), whitespace-tokenized lines; blank
// lines are dropped. Views point into the input text.
inline std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::uint32_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++line_number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line;
        line.number = line_number;
        std::size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            std::size_t token_start = pos;
            while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            if (pos > token_start)
                line.tokens.push_back(Token{raw.substr(token_start, pos - token_start),
                                            static_cast<std::uint32_t>(token_start + 1)});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

class Diagnostics {
public:
    void error(std::uint32_t line, std::uint32_t column, std::string message) {
        items_.push_back({line, column, std::move(message), ParseDiagnostic::Severity::kError});
    }

    bool clean() const {
        for (const auto& d : items_)
            if (d.severity == ParseDiagnostic::Severity::kError) return false;
        return true;
    }

    std::vector<ParseDiagnostic> take() { return std::move(items_); }

private:
    std::vector<ParseDiagnostic> items_;
};

inline std::optional<std::uint64_t> parse_unsigned(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

}  // namespace dcs::detail

#endif
