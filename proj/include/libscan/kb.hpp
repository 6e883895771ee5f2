#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "libscan/label.hpp"

namespace libscan {

/// Parse or schema failure in a knowledge-base file. The message names the
/// offending key or record.
class MalformedKb : public std::runtime_error {
public:
    explicit MalformedKb(const std::string& what) : std::runtime_error(what) {}
};

/// A knowledge base with a missing or duplicated pattern id.
class IncompleteKb : public std::runtime_error {
public:
    explicit IncompleteKb(const std::string& what) : std::runtime_error(what) {}
};

/// One misuse pattern: identity, human-readable attributes, and the code
/// fragments the matcher and the LLM prompt work from. Snippets are kept
/// verbatim; tokenization policy lives entirely in the matcher.
struct PatternRecord {
    PatternLabel pattern = PatternLabel::None;  // never None in a loaded KB
    std::string name;
    std::string description;
    std::vector<std::string> snippets;

    bool operator==(const PatternRecord&) const = default;
};

/// Loads a KB file: a JSON array of records with keys
/// pattern / name / description / snippets. Returns the eight records in
/// P1..P8 order regardless of file order.
std::vector<PatternRecord> load_kb(const std::filesystem::path& path);

/// Same contract as load_kb, over an in-memory JSON document.
std::vector<PatternRecord> load_kb_from_string(const std::string& json_text);

/// Serializes records back to the KB file format.
std::string serialize_kb(const std::vector<PatternRecord>& records);

/// Record lookup by label; throws std::out_of_range when absent.
const PatternRecord& kb_record(const std::vector<PatternRecord>& kb, PatternLabel label);

}  // namespace libscan
