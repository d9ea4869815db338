#include <unordered_map>
#include <unordered_set>

#include "gsys/document.hpp"

namespace gsys {

namespace {

// RFC-4180-style: comma separated, optional quoting, "" escapes a quote,
// CRLF or LF row ends, newlines allowed inside quoted fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t i = 0;
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;  // UTF-8 BOM
    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && !field_started) {
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_row();
        } else {
            field.push_back(c);
            field_started = true;
        }
    }
    if (in_quotes) {
        throw Error(ErrorKind::ParseError, "unterminated quoted field");
    }
    if (field_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

}  // namespace

CsvIngest ingest_csv(std::string_view bytes, const std::optional<std::string>& key_column) {
    auto rows = parse_csv(bytes);
    // blank lines are tolerated and skipped
    std::erase_if(rows, [](const std::vector<std::string>& row) {
        return row.size() == 1 && row.front().empty();
    });
    if (rows.empty()) {
        throw Error(ErrorKind::EmptyUniverse, "CSV has no header row");
    }
    const std::vector<std::string>& header = rows.front();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != header.size()) {
            throw Error(ErrorKind::RaggedRows,
                        "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                            " fields, header has " + std::to_string(header.size()));
        }
    }
    if (rows.size() == 1) {
        throw Error(ErrorKind::EmptyUniverse, "CSV has no data rows");
    }

    std::optional<std::size_t> key_index;
    if (key_column) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == *key_column) {
                key_index = c;
                break;
            }
        }
        if (!key_index) {
            throw Error(ErrorKind::ValidationError, "no column named '" + *key_column + "'");
        }
    }

    CsvIngest result;
    SystemDocument& doc = result.document;
    std::unordered_set<std::string> seen_keys;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        std::string id = key_index ? rows[r][*key_index] : std::to_string(r - 1);
        if (!seen_keys.insert(id).second) {
            throw Error(ErrorKind::DuplicateKey, "duplicate key value '" + id + "'");
        }
        doc.universe.push_back(std::move(id));
    }

    std::unordered_set<std::string> column_names;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (key_index && c == *key_index) continue;
        if (!column_names.insert(header[c]).second) {
            throw Error(ErrorKind::ValidationError, "duplicate column name '" + header[c] + "'");
        }
        QuantityRecord rec;
        rec.name = header[c];
        rec.arity = 1;
        std::unordered_map<std::string, std::uint32_t> sign_index;
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const std::string sign = header[c] + ":" + rows[r][c];
            auto [it, inserted] =
                sign_index.try_emplace(sign, static_cast<std::uint32_t>(rec.signs.size()));
            if (inserted) rec.signs.push_back(sign);
            rec.table.push_back(it->second);
        }
        if (rec.signs.size() == 1) {
            result.warnings.push_back("column '" + header[c] + "' is constant");
        }
        doc.quantities.push_back(std::move(rec));
    }
    return result;
}

}  // namespace gsys
