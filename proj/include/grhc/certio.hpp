#pragma once

// Text certificate format for colored complete hypergraphs, and the K<q> /
// K<q>-e pattern mini-language used for avoid lists.
//
//   GRHC 1
//   uniformity <r>
//   order <n>
//   colors <t>
//   provenance <single line>      (optional)
//   data
//   <C(n,r) decimal colors in colex order, single-space or LF separated>
//   end
//
// The writer emits 40 colors per line and LF line endings, so equal inputs
// produce identical bytes.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grhc/core.hpp"

namespace grhc {

inline constexpr int kCertificateVersion = 1;

struct Certificate {
    int format_version = kCertificateVersion;
    ColoredCompleteHypergraph payload;
    std::optional<std::string> provenance;
};

/// Position i is the pattern forbidden monochromatically in color i+1.
using AvoidList = std::vector<TargetPattern>;

/// An empty provenance omits the line. Throws FormatError if the provenance
/// contains a line break.
std::string write_certificate(const ColoredCompleteHypergraph& coloring, std::string_view provenance = {});

Certificate read_certificate(std::string_view bytes);

Certificate load_certificate(const std::filesystem::path& path);
void save_certificate(const std::filesystem::path& path, const ColoredCompleteHypergraph& coloring, std::string_view provenance = {});

/// "K<q>" or "K<q>-e", validated against uniformity r.
TargetPattern parse_pattern(std::string_view text, unsigned r);

/// Comma-separated patterns, positionally mapped to colors 1..t.
AvoidList parse_avoid_list(std::string_view text, unsigned r);

std::string format_avoid_list(const AvoidList& avoid);

}  // namespace grhc
