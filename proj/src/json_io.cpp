#include "bollobas/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bollobas {

namespace {

using ordered_json = nlohmann::ordered_json;

int require_int(const ordered_json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("missing or non-integer field \"") + field + "\"");
    return j[field].get<int>();
}

ordered_json parse_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
    return j;
}

Bitset parse_element_list(const ordered_json& arr, int n, const std::string& where) {
    if (!arr.is_array()) throw ParseError(where + ": expected an array of elements");
    Bitset out(n);
    int prev = -1;
    for (const auto& e : arr) {
        if (!e.is_number_integer()) throw ParseError(where + ": non-integer element");
        int v = e.get<int>();
        if (v < 0 || v >= n)
            throw ParseError(where + ": element " + std::to_string(v) + " outside [0," +
                             std::to_string(n) + ")");
        if (v <= prev)
            throw ParseError(where + ": element " + std::to_string(v) +
                             " breaks the strictly-increasing order (duplicates are rejected)");
        prev = v;
        out.set(v);
    }
    return out;
}

ordered_json element_list(const Bitset& s) {
    ordered_json arr = ordered_json::array();
    for (int e : s.elements()) arr.push_back(e);
    return arr;
}

}  // namespace

FamilyFile parse_family_json(const std::string& text) {
    ordered_json j = parse_text(text);
    int n = require_int(j, "n");
    int k = require_int(j, "k");
    int m = require_int(j, "m");
    int t = require_int(j, "t");
    if (n < 1) throw ParseError("schema: need n >= 1");
    if (k < 2) throw ParseError("schema: need k >= 2");
    if (m < 1) throw ParseError("schema: need m >= 1");
    if (t < 2 || t > k) throw ParseError("schema: need 2 <= t <= k");
    if (!j.contains("families") || !j["families"].is_array())
        throw ParseError("missing or non-array field \"families\"");
    const auto& fams = j["families"];
    if (static_cast<int>(fams.size()) != k)
        throw ParseError("schema: expected " + std::to_string(k) + " families, found " +
                         std::to_string(fams.size()));

    FamilyFile file;
    file.t = t;
    file.sys = FamilySystem::create(n, k, m);
    for (int fj = 0; fj < k; ++fj) {
        const auto& fam = fams[static_cast<size_t>(fj)];
        if (!fam.is_array() || static_cast<int>(fam.size()) != m)
            throw ParseError("family " + std::to_string(fj) + ": expected " + std::to_string(m) +
                             " sets");
        for (int i = 0; i < m; ++i)
            file.sys.set(fj, i) = parse_element_list(
                fam[static_cast<size_t>(i)], n,
                "family " + std::to_string(fj) + ", column " + std::to_string(i));
    }
    return file;
}

std::string emit_family_json(const FamilySystem& sys, int t) {
    sys.check_shape();
    ordered_json j;
    j["n"] = sys.n;
    j["k"] = sys.k;
    j["m"] = sys.m;
    j["t"] = t;
    ordered_json fams = ordered_json::array();
    for (int fj = 0; fj < sys.k; ++fj) {
        ordered_json fam = ordered_json::array();
        for (int i = 0; i < sys.m; ++i) fam.push_back(element_list(sys.set(fj, i)));
        fams.push_back(std::move(fam));
    }
    j["families"] = std::move(fams);
    return j.dump();
}

PartiteCover parse_cover_json(const std::string& text) {
    ordered_json j = parse_text(text);
    PartiteCover cover;
    cover.k = require_int(j, "k");
    cover.t = require_int(j, "t");
    cover.n = require_int(j, "n");
    if (cover.k < 2 || cover.t < 2 || cover.t > cover.k || cover.n < 1)
        throw ParseError("schema: need k >= 2, 2 <= t <= k, n >= 1");
    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw ParseError("missing or non-array field \"blocks\"");
    for (size_t r = 0; r < j["blocks"].size(); ++r) {
        const auto& jb = j["blocks"][r];
        if (!jb.is_object() || !jb.contains("parts") || !jb["parts"].is_array())
            throw ParseError("block " + std::to_string(r) + ": expected {\"parts\": [...]}");
        const auto& parts = jb["parts"];
        if (static_cast<int>(parts.size()) != cover.k)
            throw ParseError("block " + std::to_string(r) + ": expected k parts");
        PartiteBlock block;
        for (int i = 0; i < cover.k; ++i) {
            Bitset part = parse_element_list(parts[static_cast<size_t>(i)], cover.n,
                                             "block " + std::to_string(r) + ", part " +
                                                 std::to_string(i));
            if (part.empty())
                throw ParseError("block " + std::to_string(r) + ", part " + std::to_string(i) +
                                 ": empty parts are rejected (the block would have no edges)");
            block.parts.push_back(std::move(part));
        }
        cover.blocks.push_back(std::move(block));
    }
    return cover;
}

std::string emit_cover_json(const PartiteCover& cover) {
    cover.check_shape();
    ordered_json j;
    j["k"] = cover.k;
    j["t"] = cover.t;
    j["n"] = cover.n;
    ordered_json blocks = ordered_json::array();
    for (const PartiteBlock& b : cover.blocks) {
        ordered_json parts = ordered_json::array();
        for (const Bitset& p : b.parts) parts.push_back(element_list(p));
        ordered_json jb;
        jb["parts"] = std::move(parts);
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    return j.dump();
}

namespace {

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_stream(in);
}

}  // namespace

FamilyFile load_family_file(const std::string& path) {
    try {
        return parse_family_json(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

PartiteCover load_cover_file(const std::string& path) {
    try {
        return parse_cover_json(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace bollobas
