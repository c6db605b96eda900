#include "fuzzycat/report.hpp"

#include <cstdint>
#include <sstream>

namespace fuzzycat {

std::string input_digest(std::string_view bytes) {
    uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

namespace {

void render_text_node(std::ostream& out, const nlohmann::json& node, int indent) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                render_text_node(out, value, indent + 1);
            } else {
                out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& item : node) {
            if (item.is_object() || item.is_array()) {
                out << pad << "-\n";
                render_text_node(out, item, indent + 1);
            } else {
                out << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
        if (node.empty()) out << pad << "(none)\n";
    } else {
        out << pad << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
    }
}

} // namespace

std::string ReportDocument::render(ReportFormat format) const {
    if (format == ReportFormat::Machine) {
        nlohmann::json doc;
        doc["body"] = body;
        doc["command"] = command;
        doc["input_digest"] = input_digest;
        doc["verdict"] = verdict;
        doc["version"] = kToolVersion;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "fuzzycat " << kToolVersion << "\n";
    out << "command: " << command << "\n";
    out << "input:   " << input_digest << "\n";
    out << "verdict: " << verdict << "\n";
    render_text_node(out, body, 0);
    return out.str();
}

} // namespace fuzzycat
