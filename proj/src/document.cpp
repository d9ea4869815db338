#include "gsys/document.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace gsys {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& message) {
    throw Error(ErrorKind::ValidationError, message);
}

std::vector<std::string> string_array(const json& j, const std::string& what) {
    if (!j.is_array()) invalid(what + " must be an array of strings");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) invalid(what + " must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

QuantityRecord parse_quantity(const json& j, std::size_t universe_size) {
    if (!j.is_object()) invalid("quantity record must be an object");
    QuantityRecord rec;
    if (!j.contains("name") || !j.at("name").is_string()) invalid("quantity needs a string name");
    rec.name = j.at("name").get<std::string>();
    if (!j.contains("arity") || !j.at("arity").is_number_unsigned()) {
        invalid("quantity '" + rec.name + "' needs a nonnegative integer arity");
    }
    rec.arity = j.at("arity").get<std::size_t>();
    if (!j.contains("signs")) invalid("quantity '" + rec.name + "' needs a sign list");
    rec.signs = string_array(j.at("signs"), "signs of '" + rec.name + "'");

    const std::size_t count = checked_tuple_count(universe_size, rec.arity);
    const bool has_table = j.contains("table");
    const bool has_entries = j.contains("entries");
    if (has_table == has_entries) {
        invalid("quantity '" + rec.name + "' needs exactly one of 'table' or 'entries'");
    }
    if (has_table) {
        const json& table = j.at("table");
        if (!table.is_array()) invalid("table of '" + rec.name + "' must be an array");
        rec.table.reserve(table.size());
        for (const auto& entry : table) {
            if (!entry.is_number_unsigned()) {
                invalid("table of '" + rec.name + "' must contain sign indices");
            }
            const auto v = entry.get<std::uint64_t>();
            if (v >= rec.signs.size()) {
                invalid("table entry " + std::to_string(v) + " of '" + rec.name +
                        "' is not a sign index");
            }
            rec.table.push_back(static_cast<std::uint32_t>(v));
        }
        if (rec.table.size() != count) {
            invalid("IncompleteMap: table of '" + rec.name + "' has " +
                    std::to_string(rec.table.size()) + " entries, expected " +
                    std::to_string(count));
        }
    } else {
        if (!j.contains("default") || !j.at("default").is_string()) {
            invalid("sparse quantity '" + rec.name + "' needs a string 'default' sign");
        }
        const std::string default_sign = j.at("default").get<std::string>();
        auto sign_index = [&](const std::string& s) -> std::uint32_t {
            auto it = std::find(rec.signs.begin(), rec.signs.end(), s);
            if (it == rec.signs.end()) {
                invalid("sign '" + s + "' of '" + rec.name + "' is not declared");
            }
            return static_cast<std::uint32_t>(it - rec.signs.begin());
        };
        rec.table.assign(count, sign_index(default_sign));
        const json& entries = j.at("entries");
        if (!entries.is_array()) invalid("entries of '" + rec.name + "' must be an array");
        // Entry tuples are resolved to ranks by the caller, which knows the
        // universe; here we only read the raw shape.
        for (const auto& entry : entries) {
            if (!entry.is_object() || !entry.contains("tuple") || !entry.contains("sign")) {
                invalid("each entry of '" + rec.name + "' needs 'tuple' and 'sign'");
            }
        }
    }
    return rec;
}

}  // namespace

SystemDocument parse_system_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object()) invalid("document must be a JSON object");
    if (!j.contains("schema_version") || !j.at("schema_version").is_string() ||
        j.at("schema_version").get<std::string>() != "1") {
        invalid("schema_version must be the string \"1\"");
    }
    if (!j.contains("universe")) invalid("document needs a universe");
    SystemDocument doc;
    doc.universe = string_array(j.at("universe"), "universe");
    if (doc.universe.empty()) invalid("EmptyUniverse: universe must be nonempty");

    Universe u(doc.universe);  // checks distinctness

    std::unordered_set<std::string> names;
    if (j.contains("quantities")) {
        const json& qs = j.at("quantities");
        if (!qs.is_array()) invalid("quantities must be an array");
        for (const auto& qj : qs) {
            QuantityRecord rec = parse_quantity(qj, doc.universe.size());
            if (!names.insert(rec.name).second) {
                invalid("duplicate quantity name '" + rec.name + "'");
            }
            // resolve sparse entries now that the universe is known
            if (qj.contains("entries")) {
                for (const auto& entry : qj.at("entries")) {
                    std::vector<std::string> tuple =
                        string_array(entry.at("tuple"), "entry tuple of '" + rec.name + "'");
                    if (tuple.size() != rec.arity) {
                        invalid("entry tuple of '" + rec.name + "' has " +
                                std::to_string(tuple.size()) + " coordinates, expected " +
                                std::to_string(rec.arity));
                    }
                    std::size_t rank = 0;
                    for (const std::string& id : tuple) {
                        auto idx = u.index_of(id);
                        if (!idx) {
                            invalid("entry of '" + rec.name + "' names unknown object '" + id +
                                    "'");
                        }
                        rank = rank * u.size() + *idx;
                    }
                    if (!entry.at("sign").is_string()) {
                        invalid("entry sign of '" + rec.name + "' must be a string");
                    }
                    const std::string sign = entry.at("sign").get<std::string>();
                    auto it = std::find(rec.signs.begin(), rec.signs.end(), sign);
                    if (it == rec.signs.end()) {
                        invalid("sign '" + sign + "' of '" + rec.name + "' is not declared");
                    }
                    rec.table[rank] = static_cast<std::uint32_t>(it - rec.signs.begin());
                }
            }
            doc.quantities.push_back(std::move(rec));
        }
    }
    if (j.contains("systems")) {
        const json& ss = j.at("systems");
        if (!ss.is_array()) invalid("systems must be an array");
        std::unordered_set<std::string> system_names;
        for (const auto& sj : ss) {
            if (!sj.is_object() || !sj.contains("name") || !sj.at("name").is_string()) {
                invalid("system record needs a string name");
            }
            SystemRecord rec;
            rec.name = sj.at("name").get<std::string>();
            if (!system_names.insert(rec.name).second) {
                invalid("duplicate system name '" + rec.name + "'");
            }
            if (!sj.contains("measures")) invalid("system '" + rec.name + "' needs measures");
            rec.measures = string_array(sj.at("measures"), "measures of '" + rec.name + "'");
            for (const std::string& m : rec.measures) {
                if (!names.contains(m)) {
                    invalid("system '" + rec.name + "' references unknown quantity '" + m + "'");
                }
            }
            if (sj.contains("strict")) {
                if (!sj.at("strict").is_boolean()) {
                    invalid("strict flag of '" + rec.name + "' must be a boolean");
                }
                rec.strict = sj.at("strict").get<bool>();
            }
            doc.systems.push_back(std::move(rec));
        }
    }
    return doc;
}

std::string write_system_document(const SystemDocument& doc) {
    json j;
    j["schema_version"] = "1";
    j["universe"] = doc.universe;
    json qs = json::array();
    for (const QuantityRecord& rec : doc.quantities) {
        json qj;
        qj["name"] = rec.name;
        qj["arity"] = rec.arity;
        qj["signs"] = rec.signs;
        qj["table"] = rec.table;
        qs.push_back(std::move(qj));
    }
    j["quantities"] = std::move(qs);
    json ss = json::array();
    for (const SystemRecord& rec : doc.systems) {
        json sj;
        sj["name"] = rec.name;
        sj["measures"] = rec.measures;
        sj["strict"] = rec.strict;
        ss.push_back(std::move(sj));
    }
    j["systems"] = std::move(ss);
    return j.dump(2) + "\n";
}

const Quantity& LoadedDocument::quantity(std::string_view name) const {
    for (const Quantity& q : quantities) {
        if (q.name() == name) return q;
    }
    throw Error(ErrorKind::UnknownObject, "no quantity named '" + std::string(name) + "'");
}

SystemPtr LoadedDocument::system(std::string_view name) const {
    const SystemRecord* rec = nullptr;
    if (name.empty()) {
        if (!systems.empty()) {
            rec = &systems.front();
        }
    } else {
        for (const SystemRecord& r : systems) {
            if (r.name == name) {
                rec = &r;
                break;
            }
        }
        if (!rec) {
            throw Error(ErrorKind::UnknownObject, "no system named '" + std::string(name) + "'");
        }
    }
    std::vector<Quantity> measures;
    if (rec) {
        measures.reserve(rec->measures.size());
        for (const std::string& m : rec->measures) measures.push_back(quantity(m));
        return make_system(universe, std::move(measures), rec->strict);
    }
    return make_system(universe, quantities, false);
}

LoadedDocument load_document(const SystemDocument& doc, std::size_t cap) {
    LoadedDocument loaded;
    loaded.universe = make_universe_ptr(doc.universe);
    loaded.quantities.reserve(doc.quantities.size());
    for (const QuantityRecord& rec : doc.quantities) {
        loaded.quantities.push_back(make_quantity(rec.name, loaded.universe, rec.arity,
                                                  SignSet(rec.signs), rec.table, cap));
    }
    loaded.systems = doc.systems;
    // construct every declared system once so its invariants are checked
    for (const SystemRecord& rec : doc.systems) loaded.system(rec.name);
    return loaded;
}

QuantityRecord to_record(const Quantity& q) {
    QuantityRecord rec;
    rec.name = q.name();
    rec.arity = q.arity();
    rec.signs = q.signs().ids();
    rec.table = q.table();
    return rec;
}

SystemDocument to_document(const Universe& universe, std::span<const Quantity> quantities,
                           std::span<const SystemRecord> systems) {
    SystemDocument doc;
    doc.universe = universe.ids();
    doc.quantities.reserve(quantities.size());
    for (const Quantity& q : quantities) doc.quantities.push_back(to_record(q));
    doc.systems.assign(systems.begin(), systems.end());
    return doc;
}

}  // namespace gsys
