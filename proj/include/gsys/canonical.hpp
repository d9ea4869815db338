#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsys/system.hpp"

namespace gsys {

/// Order-independent canonical encoding of a flat system; equal exactly for
/// isomorphic systems under the chosen mode.
struct Certificate {
    std::string bytes;

    friend bool operator==(const Certificate&, const Certificate&) = default;
    std::string hash_hex() const;
    std::string hex() const;
};

Certificate canonical_form(const System& s, IsoMode mode = IsoMode::value_preserving);

struct Isomorphism {
    VertexMap vertex_map;
    /// Per measure position, the realized-sign bijection carrying values of
    /// SA onto SB (identity pairs in value-preserving mode).
    std::vector<std::vector<std::pair<std::string, std::string>>> sign_maps;
};

std::optional<Isomorphism> find_isomorphism(const System& sa, const System& sb,
                                            IsoMode mode = IsoMode::value_preserving);

/// Built-in structural invariants; isomorphic systems yield equal records.
struct StructureAttributes {
    std::size_t vertex_count = 0;
    std::vector<std::size_t> measure_arities;
    std::vector<std::size_t> realized_sign_counts;
    std::vector<std::size_t> induced_block_counts;
    std::vector<std::string> vertex_profiles;  // sorted; one entry per vertex
    std::string certificate_hash;              // value-preserving; empty for nested systems

    friend bool operator==(const StructureAttributes&, const StructureAttributes&) = default;
};

StructureAttributes structure_attributes(const System& s);

}  // namespace gsys
