#ifndef FUZZYCAT_REPORT_HPP
#define FUZZYCAT_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

namespace fuzzycat {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { Text, Machine };

/// Structured command output. The machine rendering is a JSON tree with one
/// canonical (sorted) key order, byte-identical for identical input and
/// flags.
struct ReportDocument {
    std::string command;
    std::string input_digest;
    std::string verdict; // pass | fail | value
    nlohmann::json body = nlohmann::json::object();

    std::string render(ReportFormat format) const;
};

/// FNV-1a 64-bit digest of the raw input bytes, in hex.
std::string input_digest(std::string_view bytes);

} // namespace fuzzycat

#endif
