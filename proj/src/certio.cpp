#include "grhc/certio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "grhc/error.hpp"

namespace grhc {

namespace {

constexpr std::size_t kColorsPerLine = 40;
constexpr std::string_view kMagic = "GRHC";

// Splits on LF only; any other control character is left in place so that
// the field parsers reject it.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::optional<std::string_view> next() {
        if (pos_ >= text_.size()) return std::nullopt;
        auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        auto line = text_.substr(pos_, end - pos_);
        pos_ = end + 1;
        return line;
    }

    std::optional<std::string_view> peek() {
        auto saved = pos_;
        auto line = next();
        pos_ = saved;
        return line;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class T>
T parse_number(std::string_view token, std::string_view what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw FormatError("malformed " + std::string(what) + ": '" + std::string(token) + "'");
    return value;
}

unsigned header_field(LineReader& lines, std::string_view key) {
    auto line = lines.next();
    if (!line) throw TruncationError("certificate ends before the '" + std::string(key) + "' line");
    if (line->size() <= key.size() + 1 || line->substr(0, key.size()) != key || (*line)[key.size()] != ' ')
        throw FormatError("expected '" + std::string(key) + " <value>', found '" + std::string(*line) + "'");
    return parse_number<unsigned>(line->substr(key.size() + 1), key);
}

}  // namespace

std::string write_certificate(const ColoredCompleteHypergraph& coloring, std::string_view provenance) {
    if (provenance.find_first_of("\r\n") != std::string_view::npos) throw FormatError("provenance must be a single line");
    std::string out;
    out.reserve(96 + coloring.edge_count() * 3);
    out += "GRHC 1\n";
    out += "uniformity " + std::to_string(coloring.uniformity()) + "\n";
    out += "order " + std::to_string(coloring.order()) + "\n";
    out += "colors " + std::to_string(coloring.color_count()) + "\n";
    if (!provenance.empty()) {
        out += "provenance ";
        out += provenance;
        out += '\n';
    }
    out += "data\n";
    const auto colors = coloring.colors();
    for (std::size_t i = 0; i < colors.size(); ++i) {
        out += std::to_string(colors[i]);
        out += (i + 1 == colors.size() || (i + 1) % kColorsPerLine == 0) ? '\n' : ' ';
    }
    out += "end\n";
    return out;
}

Certificate read_certificate(std::string_view bytes) {
    LineReader lines(bytes);
    auto magic = lines.next();
    if (!magic || magic->substr(0, std::min(magic->size(), kMagic.size() + 1)) != "GRHC ")
        throw FormatError("missing 'GRHC' magic line");
    const int version = parse_number<int>(magic->substr(kMagic.size() + 1), "format version");
    if (version != kCertificateVersion) throw FormatError("unsupported certificate version " + std::to_string(version));

    const unsigned r = header_field(lines, "uniformity");
    const unsigned n = header_field(lines, "order");
    const unsigned t = header_field(lines, "colors");
    if (r < 2) throw FormatError("uniformity must be at least 2");
    if (n < 1) throw FormatError("order must be at least 1");
    if (t < 1 || t > UINT16_MAX) throw FormatError("color count out of range");

    std::optional<std::string> provenance;
    auto line = lines.next();
    if (line && line->starts_with("provenance ")) {
        provenance = std::string(line->substr(11));
        if (provenance->find('\r') != std::string::npos) throw FormatError("carriage return in provenance");
        line = lines.next();
    }
    if (!line || *line != "data") throw FormatError("expected 'data' line");

    const auto expected = binomial(n, r);
    std::vector<Color> colors;
    colors.reserve(expected);
    bool saw_end = false;
    while (auto data = lines.next()) {
        if (*data == "end") {
            saw_end = true;
            break;
        }
        std::size_t pos = 0;
        while (pos <= data->size()) {
            auto sp = data->find(' ', pos);
            if (sp == std::string_view::npos) sp = data->size();
            const auto token = data->substr(pos, sp - pos);
            const auto value = parse_number<unsigned>(token, "color");
            if (value < 1 || value > t)
                throw RangeError("color " + std::to_string(value) + " at entry " + std::to_string(colors.size()) + " outside 1.." + std::to_string(t));
            colors.push_back(static_cast<Color>(value));
            pos = sp + 1;
        }
    }
    if (!saw_end) throw TruncationError("certificate ends without 'end' line");
    if (colors.size() != expected)
        throw TruncationError("certificate holds " + std::to_string(colors.size()) + " colors, expected C(" + std::to_string(n) + "," +
                              std::to_string(r) + ") = " + std::to_string(expected));
    if (auto rest = lines.next(); rest && !(rest->empty() && !lines.peek())) throw FormatError("trailing content after 'end'");

    return Certificate{version, ColoredCompleteHypergraph(n, r, static_cast<Color>(t), std::move(colors)), std::move(provenance)};
}

Certificate load_certificate(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open certificate '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_certificate(buf.str());
}

void save_certificate(const std::filesystem::path& path, const ColoredCompleteHypergraph& coloring, std::string_view provenance) {
    const auto bytes = write_certificate(coloring, provenance);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write certificate '" + path.string() + "'");
    out << bytes;
}

TargetPattern parse_pattern(std::string_view text, unsigned r) {
    if (text.size() < 2 || text[0] != 'K') throw ParseError("malformed pattern '" + std::string(text) + "'");
    auto body = text.substr(1);
    TargetPattern pattern;
    if (body.ends_with("-e")) {
        pattern.kind = PatternKind::MinusOne;
        body.remove_suffix(2);
    }
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), pattern.order);
    if (body.empty() || ec != std::errc() || ptr != body.data() + body.size())
        throw ParseError("malformed pattern '" + std::string(text) + "'");
    pattern.validate(r);
    return pattern;
}

AvoidList parse_avoid_list(std::string_view text, unsigned r) {
    AvoidList avoid;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        avoid.push_back(parse_pattern(text.substr(pos, comma - pos), r));
        pos = comma + 1;
    }
    return avoid;
}

std::string format_avoid_list(const AvoidList& avoid) {
    std::string out;
    for (std::size_t i = 0; i < avoid.size(); ++i) {
        if (i) out += ',';
        out += avoid[i].to_string();
    }
    return out;
}

}  // namespace grhc
