#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsys/quantity.hpp"

namespace gsys {

/// Value-level relation between one fiber of each quantity: nonempty
/// intersection (Z-Z), containment (Z->Z), mutual containment (Z<->Z).
struct ValueCorrespondence {
    bool zz;
    bool forward;
    bool backward;
    bool bidirectional;
};

/// Which sign pairs quantify in independence checks. `realized` skips
/// declared-but-unused signs (an unused sign has an empty fiber and would make
/// independence vacuously false); `declared` follows the literal definition.
enum class SignScope { realized, declared };

struct QuantityRelation {
    bool left_constant;
    bool right_constant;
    bool independent;
    bool left_determines_right;
    bool right_determines_left;
    bool equivalent;
};

struct CompleteSetReport {
    std::vector<std::string> members;
    bool is_complete;
    std::vector<std::string> failures;  // not-a-tag-meet | constant-member(i) | dependent-pair(i,j)
};

ValueCorrespondence value_correspondence(const Quantity& left, const Quantity& right,
                                         std::string_view left_sign, std::string_view right_sign);

bool is_constant(const Quantity& q);

/// Every pair of signs in scope has intersecting fibers.
bool is_independent(const Quantity& left, const Quantity& right,
                    SignScope scope = SignScope::realized);

/// left determines right: every nonempty left fiber lies inside a right
/// fiber; equivalently the left partition refines the right one.
bool is_dependent(const Quantity& left, const Quantity& right);

/// Same induced partition.
bool are_equivalent(const Quantity& left, const Quantity& right);

/// Greatest lower bound under the dependence order. Signs are pair labels
/// "<L,S>" for the realized co-occurring sign pairs, numbered by first
/// occurrence in rank order.
Quantity quantity_meet(const Quantity& left, const Quantity& right,
                       std::size_t cap = kDefaultSizeCap);

/// Least upper bound under the dependence order; fresh block-label signs
/// "J0", "J1", ...
Quantity quantity_join(const Quantity& left, const Quantity& right);

/// Complete set: the iterated meet is a tag of the tuple space, no member is
/// constant, and members are pairwise independent (vacuous for singletons).
CompleteSetReport is_complete_set(std::span<const Quantity> qs, std::size_t arity);

/// All inclusion-minimal complete subsets of size <= max_size, as index sets
/// in lexicographic order.
std::vector<std::vector<std::size_t>> find_complete_sets(std::span<const Quantity> qs,
                                                         std::size_t arity,
                                                         std::size_t max_size = 4);

QuantityRelation relate(const Quantity& left, const Quantity& right,
                        SignScope scope = SignScope::realized);

}  // namespace gsys
