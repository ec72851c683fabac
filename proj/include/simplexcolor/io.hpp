#pragma once

#include "simplexcolor/coloring.hpp"
#include "simplexcolor/complex.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace simplexcolor {

enum class FileFormat { json, off };

/// ".off" selects OFF, everything else JSON.
FileFormat format_for_path(const std::filesystem::path& path);

// Canonical complex JSON:
//   {"dimension": d, "vertices": [["p/q", ...], ...], "simplices": [[i, ...], ...]}
// Coordinates may also be given as integers, decimal strings, or JSON numbers
// on input; they are always written as canonical "p/q" (or "p") strings.
nlohmann::json complex_to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);

std::string write_complex(const Complex& c, FileFormat format);
Complex read_complex(std::string_view text, FileFormat format);

Complex load_complex(const std::filesystem::path& path, FileFormat format);
Complex load_complex(const std::filesystem::path& path);
void save_complex(const Complex& c, const std::filesystem::path& path, FileFormat format);
void save_complex(const Complex& c, const std::filesystem::path& path);

// {"colors": [int, ...]}
nlohmann::json coloring_to_json(const Coloring& col);
Coloring coloring_from_json(const nlohmann::json& j);

// {"method": "combinatorial"|"geometric", "steps": [[simplex, [facet ids]], ...]}
nlohmann::json certificate_to_json(const PeelCertificate& cert);
PeelCertificate certificate_from_json(const nlohmann::json& j);

/// Parses JSON text, turning syntax errors into ParseError with line/column.
nlohmann::json parse_json(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace simplexcolor
