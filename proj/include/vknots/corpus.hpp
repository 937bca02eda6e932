#pragma once

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vknots/braid.hpp"
#include "vknots/pd_code.hpp"
#include "vknots/two_var.hpp"

#include "vknots/corpus_data.hpp"

namespace vknots {

/// One bundled or user-supplied link: a name, at least one presentation,
/// the component count, and (for knots with tabulated data) the Dubrovnik
/// Kauffman polynomial. The notes field records data provenance.
struct CorpusEntry {
    std::string name;
    std::optional<PDCode> pd;
    std::optional<BraidWord> braid;
    int components = 1;
    std::optional<TwoVarLaurent> kauffman_F;
    std::string notes;
};

inline std::vector<CorpusEntry> parse_corpus_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw std::invalid_argument("corpus: expected a JSON array");
    std::vector<CorpusEntry> out;
    std::set<std::string> names;
    for (const auto& item : doc) {
        if (!item.is_object()) throw std::invalid_argument("corpus: entries must be objects");
        CorpusEntry e;
        if (!item.contains("name") || !item["name"].is_string())
            throw std::invalid_argument("corpus: entry missing name");
        e.name = item["name"].get<std::string>();
        if (!names.insert(e.name).second)
            throw std::invalid_argument("corpus: duplicate name: " + e.name);
        if (item.contains("pd")) e.pd = parse_pd(item["pd"].get<std::string>());
        if (item.contains("braid")) e.braid = parse_braid(item["braid"].get<std::string>());
        if (!e.pd && !e.braid)
            throw std::invalid_argument("corpus: entry '" + e.name +
                                        "' has neither pd nor braid");
        if (!item.contains("components") || !item["components"].is_number_integer())
            throw std::invalid_argument("corpus: entry '" + e.name + "' missing components");
        e.components = item["components"].get<int>();
        if (e.components < 1)
            throw std::invalid_argument("corpus: entry '" + e.name + "' components must be >= 1");
        if (item.contains("kauffman_F"))
            e.kauffman_F = TwoVarLaurent::from_json(item["kauffman_F"]);
        if (item.contains("notes")) e.notes = item["notes"].get<std::string>();
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<CorpusEntry> parse_corpus_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("corpus: invalid JSON: ") + e.what());
    }
    return parse_corpus_json(doc);
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("corpus: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus_text(buf.str());
}

/// The corpus embedded in the library.
inline const std::vector<CorpusEntry>& bundled_corpus() {
    static const std::vector<CorpusEntry> corpus =
        parse_corpus_text(std::string(kBundledCorpusJson));
    return corpus;
}

inline const CorpusEntry& find_entry(const std::vector<CorpusEntry>& corpus,
                                     const std::string& name) {
    for (const auto& e : corpus)
        if (e.name == name) return e;
    throw std::invalid_argument("corpus: no entry named '" + name + "'");
}

}  // namespace vknots
