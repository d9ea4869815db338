#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsys/quantity.hpp"

namespace gsys {

class System;
using SystemPtr = std::shared_ptr<const System>;

/// Vertex set paired with an ordered tuple of quantities over it. A vertex
/// entry may additionally carry a reference to another System value, which
/// makes that system a subsystem of this one.
///
/// Systems are immutable; nested references must exist before the parent is
/// built, so a system can never be its own descendant.
class System {
public:
    System(UniversePtr vertices, std::vector<Quantity> measures, bool strict,
           std::vector<SystemPtr> nested);

    const Universe& vertices() const noexcept { return *vertices_; }
    const UniversePtr& vertices_ptr() const noexcept { return vertices_; }
    const std::vector<Quantity>& measures() const noexcept { return measures_; }
    bool strict() const noexcept { return strict_; }

    /// Nested system bound to vertex i, or null.
    const SystemPtr& nested_at(std::size_t i) const { return nested_.at(i); }
    bool has_nested() const noexcept;

private:
    UniversePtr vertices_;
    std::vector<Quantity> measures_;
    std::vector<SystemPtr> nested_;
    bool strict_;
};

SystemPtr make_system(UniversePtr vertices, std::vector<Quantity> measures, bool strict = false,
                      const std::vector<std::pair<std::string, SystemPtr>>& nested = {});
SystemPtr make_system(Universe vertices, std::vector<Quantity> measures, bool strict = false,
                      const std::vector<std::pair<std::string, SystemPtr>>& nested = {});

/// SA appears, by reference identity, among SB's vertex entries.
bool is_subsystem(const System& sa, const System& sb);

struct PartRelation {
    bool is_part;
    bool proper;  // vertex set strictly smaller
};

/// SA is part of SB: V_SA is a subset of V_SB and SA's measure tuple equals,
/// position by position, the restriction of SB's measures to V_SA.
PartRelation part_relation(const System& sa, const System& sb);
bool is_part(const System& sa, const System& sb);

/// SB is a concretion of SA (SA an abstraction of SB): equal vertex sets and
/// SA's measure tuple is a subsequence of SB's, inclusively.
bool is_concretion(const System& sb, const System& sa);

/// SA (a part of SB) is uniform about SB's measure at `measure_index`: the
/// restriction to V_SA is constant.
bool is_uniform(const System& sa, const System& sb, std::size_t measure_index);

/// Total mapping between vertex sets, given as explicit id pairs.
class VertexMap {
public:
    explicit VertexMap(std::vector<std::pair<std::string, std::string>> pairs);

    const std::vector<std::pair<std::string, std::string>>& pairs() const noexcept {
        return pairs_;
    }
    std::optional<std::string_view> apply(std::string_view id) const;
    bool total_on(const Universe& u) const;
    bool bijective_between(const Universe& from, const Universe& to) const;

private:
    std::vector<std::pair<std::string, std::string>> pairs_;
    std::unordered_map<std::string, std::string> map_;
};

/// The two readings of the isomorphism equation: values carried exactly, or
/// carried up to one sign bijection per measure position.
enum class IsoMode { value_preserving, sign_relabelling };

/// Throws ShapeMismatch unless the measure tuples have equal length and
/// position-wise equal arities; value-preserving mode additionally requires
/// position-wise equal sign sets.
void check_shape_compatible(const System& sa, const System& sb, IsoMode mode);

/// F preserves every measure value (up to a functional sign map in
/// sign_relabelling mode); bijectivity is not required.
bool is_homomorphism(const VertexMap& f, const System& sa, const System& sb,
                     IsoMode mode = IsoMode::value_preserving);

}  // namespace gsys
