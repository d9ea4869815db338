#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsys/system.hpp"

namespace gsys {

struct QuantityRecord {
    std::string name;
    std::size_t arity = 0;
    std::vector<std::string> signs;
    std::vector<std::uint32_t> table;  // sign indices in lexicographic rank order

    friend bool operator==(const QuantityRecord&, const QuantityRecord&) = default;
};

struct SystemRecord {
    std::string name;
    std::vector<std::string> measures;  // quantity names, in measure-tuple order
    bool strict = false;

    friend bool operator==(const SystemRecord&, const SystemRecord&) = default;
};

/// On-disk document: one universe, named quantities over it, optional named
/// measure groupings. Parsing normalizes sparse tables to dense form.
struct SystemDocument {
    std::vector<std::string> universe;
    std::vector<QuantityRecord> quantities;
    std::vector<SystemRecord> systems;

    friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

/// Structural parse of the UTF-8 JSON document (schema_version "1").
/// ParseError carries the position; ValidationError names the violated
/// invariant. Semantic invariants are enforced by load_document.
SystemDocument parse_system_document(std::string_view text);

/// Canonical re-serialization: stable field order, dense tables, trailing
/// newline. parse(write(d)) == d for every valid document.
std::string write_system_document(const SystemDocument& doc);

struct LoadedDocument {
    UniversePtr universe;
    std::vector<Quantity> quantities;
    std::vector<SystemRecord> systems;

    const Quantity& quantity(std::string_view name) const;
    /// Named system, or the implicit system over all quantities when the
    /// document declares none and `name` is empty.
    SystemPtr system(std::string_view name = {}) const;
};

/// Materializes and fully validates a parsed document.
LoadedDocument load_document(const SystemDocument& doc, std::size_t cap = kDefaultSizeCap);

QuantityRecord to_record(const Quantity& q);
SystemDocument to_document(const Universe& universe, std::span<const Quantity> quantities,
                           std::span<const SystemRecord> systems = {});

struct CsvIngest {
    SystemDocument document;
    std::vector<std::string> warnings;
};

/// Rows as objects, non-key columns as unary quantities. Cell values are
/// opaque strings; signs are prefixed "column:value" to keep them disjoint
/// from the object ids.
CsvIngest ingest_csv(std::string_view bytes,
                     const std::optional<std::string>& key_column = std::nullopt);

}  // namespace gsys
