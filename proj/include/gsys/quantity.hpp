#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsys/partition.hpp"
#include "gsys/tuples.hpp"
#include "gsys/universe.hpp"

namespace gsys {

/// Ordered set of distinct value identifiers. Signs are opaque labels; any
/// structure they appear to have (numerals, words) is not interpreted.
class SignSet {
public:
    explicit SignSet(std::vector<std::string> signs);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    std::optional<std::size_t> index_of(std::string_view sign) const;
    bool contains(std::string_view sign) const { return index_of(sign).has_value(); }

    friend bool operator==(const SignSet& a, const SignSet& b) { return a.ids_ == b.ids_; }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Named total mapping from k-tuples of a universe into a sign set, stored as
/// a dense table in lexicographic tuple-rank order.
///
/// Immutable after construction; construction enforces totality, sign
/// membership, and the object/sign disjointness rule.
class Quantity {
public:
    Quantity(std::string name, UniversePtr universe, std::size_t arity, SignSet signs,
             std::vector<std::uint32_t> table, std::size_t cap = kDefaultSizeCap);

    const std::string& name() const noexcept { return name_; }
    const Universe& universe() const noexcept { return *universe_; }
    const UniversePtr& universe_ptr() const noexcept { return universe_; }
    std::size_t arity() const noexcept { return arity_; }
    const SignSet& signs() const noexcept { return signs_; }
    const std::vector<std::uint32_t>& table() const noexcept { return table_; }
    std::size_t tuple_count() const noexcept { return table_.size(); }

    std::uint32_t sign_index_at(std::size_t rank) const { return table_.at(rank); }
    const std::string& sign_at(std::size_t rank) const { return signs_.id(table_.at(rank)); }

    /// Rank of a tuple given by object ids; ArityMismatch / UnknownObject.
    std::size_t rank_of_tuple(std::span<const std::string> tuple) const;
    const std::string& evaluate(std::span<const std::string> tuple) const;

    std::size_t realized_sign_count() const;

    /// Structural equality including the name.
    friend bool operator==(const Quantity& a, const Quantity& b);

private:
    std::string name_;
    UniversePtr universe_;
    std::size_t arity_;
    SignSet signs_;
    std::vector<std::uint32_t> table_;
};

/// Equality as functions: universe, arity, declared sign sequence and table;
/// names are ignored.
bool same_function(const Quantity& a, const Quantity& b);

bool same_universe(const Quantity& a, const Quantity& b);

struct Classification {
    enum class Kind { scalar, attribute, relation };

    Kind kind;
    bool degenerate;        // not injective
    bool is_tag;            // bijective onto the declared sign set
    bool tag_on_realized;   // injective, i.e. bijective onto the realized signs
    bool is_constant;       // exactly one realized sign
    std::size_t element_count;    // realized signs
    std::size_t declared_count;   // |sign set|
};

std::string_view to_string(Classification::Kind kind);

using TupleAssignment = std::pair<std::vector<std::string>, std::string>;
using TupleRule = std::function<std::string(std::span<const std::string>)>;

Quantity make_quantity(std::string name, UniversePtr universe, std::size_t arity, SignSet signs,
                       std::vector<std::uint32_t> table, std::size_t cap = kDefaultSizeCap);
Quantity make_quantity(std::string name, Universe universe, std::size_t arity, SignSet signs,
                       std::vector<std::uint32_t> table, std::size_t cap = kDefaultSizeCap);

/// Total assignment form: every tuple of A^k exactly once.
Quantity make_quantity(std::string name, UniversePtr universe, std::size_t arity, SignSet signs,
                       std::span<const TupleAssignment> assignments,
                       std::size_t cap = kDefaultSizeCap);

/// Rule-backed form; the rule is evaluated over the whole tuple space once and
/// the result memoized into the dense table before the value is published.
Quantity make_quantity_from_rule(std::string name, UniversePtr universe, std::size_t arity,
                                 SignSet signs, const TupleRule& rule,
                                 std::size_t cap = kDefaultSizeCap);

std::vector<std::size_t> preimage_ranks(const Quantity& q, std::string_view sign);
std::vector<std::vector<std::string>> preimage(const Quantity& q, std::string_view sign);

/// Fibers of the quantity as a partition of the tuple-rank space.
Partition induced_partition(const Quantity& q);

Classification classify(const Quantity& q);

/// Restriction to a sub-universe: same arity and sign set, agreeing with q on
/// every tuple of sub^k.
Quantity restrict(const Quantity& q, const Universe& sub);

/// Arity lifting: the m-ary quantity evaluating q on the projection onto
/// `coords`. Default coords are the first arity() positions.
Quantity lift(const Quantity& q, std::size_t m, std::span<const std::size_t> coords,
              std::size_t cap = kDefaultSizeCap);
Quantity lift(const Quantity& q, std::size_t m, std::size_t cap = kDefaultSizeCap);

/// Composition through the inner sign set reinterpreted as objects:
/// C(x1..xm) = outer(inner(x1), ..., inner(xm)) with each xj an inner-arity
/// tuple; result arity is inner.arity() * outer.arity().
Quantity compose(const Quantity& inner, const Quantity& outer,
                 std::size_t cap = kDefaultSizeCap);

}  // namespace gsys
