#include "libscan/kb.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

#include "libscan/util/fs.hpp"

namespace libscan {

namespace {

PatternRecord record_from_json(const nlohmann::json& obj, std::size_t index) {
    auto where = [&](const char* key) {
        return "record " + std::to_string(index) + ", key \"" + key + "\"";
    };
    if (!obj.is_object())
        throw MalformedKb("record " + std::to_string(index) + " is not an object");

    for (const char* key : {"pattern", "name", "description", "snippets"}) {
        if (!obj.contains(key))
            throw MalformedKb("missing " + where(key));
    }

    PatternRecord rec;
    const auto& pattern = obj.at("pattern");
    if (!pattern.is_string())
        throw MalformedKb(where("pattern") + " must be a string");
    auto label = parse_label(pattern.get<std::string>());
    if (!label || *label == PatternLabel::None)
        throw MalformedKb(where("pattern") + " must be one of \"P1\"..\"P8\", got \"" +
                          pattern.get<std::string>() + "\"");
    rec.pattern = *label;

    if (!obj.at("name").is_string())
        throw MalformedKb(where("name") + " must be a string");
    rec.name = obj.at("name").get<std::string>();

    if (!obj.at("description").is_string())
        throw MalformedKb(where("description") + " must be a string");
    rec.description = obj.at("description").get<std::string>();

    const auto& snippets = obj.at("snippets");
    if (!snippets.is_array() || snippets.empty())
        throw MalformedKb(where("snippets") + " must be a non-empty array");
    for (std::size_t i = 0; i < snippets.size(); ++i) {
        if (!snippets[i].is_string() || snippets[i].get<std::string>().empty())
            throw MalformedKb(where("snippets") + " entry " + std::to_string(i) +
                              " must be a non-empty string");
        rec.snippets.push_back(snippets[i].get<std::string>());
    }
    return rec;
}

}  // namespace

std::vector<PatternRecord> load_kb_from_string(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedKb(std::string("KB is not valid JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw MalformedKb("KB root must be a JSON array of pattern records");

    std::array<std::optional<PatternRecord>, kPositiveLabelCount> by_label;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        PatternRecord rec = record_from_json(doc[i], i);
        auto slot = static_cast<std::size_t>(encode_label(rec.pattern));
        if (by_label[slot])
            throw IncompleteKb("duplicate pattern " + to_string(rec.pattern));
        by_label[slot] = std::move(rec);
    }

    std::vector<PatternRecord> out;
    out.reserve(kPositiveLabelCount);
    for (std::size_t i = 0; i < kPositiveLabelCount; ++i) {
        if (!by_label[i])
            throw IncompleteKb(to_string(decode_label(int(i))));
        out.push_back(std::move(*by_label[i]));
    }
    return out;
}

std::vector<PatternRecord> load_kb(const std::filesystem::path& path) {
    std::string text;
    try {
        text = util::read_file(path);
    } catch (const std::runtime_error& e) {
        throw MalformedKb(e.what());
    }
    // Strip a UTF-8 BOM if present; the on-disk format is plain UTF-8.
    if (text.size() >= 3 && text[0] == '\xEF' && text[1] == '\xBB' && text[2] == '\xBF')
        text.erase(0, 3);
    return load_kb_from_string(text);
}

std::string serialize_kb(const std::vector<PatternRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) {
        arr.push_back({{"pattern", to_string(rec.pattern)},
                       {"name", rec.name},
                       {"description", rec.description},
                       {"snippets", rec.snippets}});
    }
    return arr.dump(2) + "\n";
}

const PatternRecord& kb_record(const std::vector<PatternRecord>& kb, PatternLabel label) {
    auto it = std::find_if(kb.begin(), kb.end(),
                           [&](const PatternRecord& r) { return r.pattern == label; });
    if (it == kb.end())
        throw std::out_of_range("no KB record for " + to_string(label));
    return *it;
}

}  // namespace libscan
