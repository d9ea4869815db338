#include "gsys/quantity.hpp"

#include <algorithm>
#include <unordered_set>

namespace gsys {

SignSet::SignSet(std::vector<std::string> signs) : ids_(std::move(signs)) {
    if (ids_.empty()) {
        throw Error(ErrorKind::EmptySignSet, "a sign set must contain at least one sign");
    }
    index_.reserve(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        auto [it, inserted] = index_.emplace(ids_[i], i);
        if (!inserted) {
            throw Error(ErrorKind::DuplicateSign, "duplicate sign '" + ids_[i] + "'");
        }
    }
}

std::optional<std::size_t> SignSet::index_of(std::string_view sign) const {
    auto it = index_.find(std::string(sign));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Quantity::Quantity(std::string name, UniversePtr universe, std::size_t arity, SignSet signs,
                   std::vector<std::uint32_t> table, std::size_t cap)
    : name_(std::move(name)),
      universe_(std::move(universe)),
      arity_(arity),
      signs_(std::move(signs)),
      table_(std::move(table)) {
    if (name_.empty()) {
        throw Error(ErrorKind::ValidationError, "quantity name must be nonempty");
    }
    if (!universe_) {
        throw Error(ErrorKind::EmptyUniverse, "quantity requires a universe");
    }
    for (const std::string& sign : signs_.ids()) {
        if (universe_->contains(sign)) {
            throw Error(ErrorKind::SignObjectClash,
                        "sign '" + sign + "' is also an object of the universe");
        }
    }
    const std::size_t count = checked_tuple_count(universe_->size(), arity_, cap);
    if (table_.size() != count) {
        throw Error(ErrorKind::IncompleteMap,
                    "table covers " + std::to_string(table_.size()) + " tuples, expected " +
                        std::to_string(count));
    }
    for (std::uint32_t entry : table_) {
        if (entry >= signs_.size()) {
            throw Error(ErrorKind::UnknownSign,
                        "table entry " + std::to_string(entry) + " is not a sign index");
        }
    }
}

std::size_t Quantity::rank_of_tuple(std::span<const std::string> tuple) const {
    if (tuple.size() != arity_) {
        throw Error(ErrorKind::ArityMismatch, "expected a " + std::to_string(arity_) +
                                                  "-tuple, got " + std::to_string(tuple.size()));
    }
    std::size_t rank = 0;
    for (const std::string& id : tuple) {
        auto idx = universe_->index_of(id);
        if (!idx) {
            throw Error(ErrorKind::UnknownObject, "'" + id + "' is not an object of the universe");
        }
        rank = rank * universe_->size() + *idx;
    }
    return rank;
}

const std::string& Quantity::evaluate(std::span<const std::string> tuple) const {
    return signs_.id(table_[rank_of_tuple(tuple)]);
}

std::size_t Quantity::realized_sign_count() const {
    std::vector<bool> seen(signs_.size(), false);
    std::size_t count = 0;
    for (std::uint32_t entry : table_) {
        if (!seen[entry]) {
            seen[entry] = true;
            ++count;
        }
    }
    return count;
}

bool operator==(const Quantity& a, const Quantity& b) {
    return a.name_ == b.name_ && same_function(a, b);
}

bool same_function(const Quantity& a, const Quantity& b) {
    return a.arity() == b.arity() && same_universe(a, b) && a.signs() == b.signs() &&
           a.table() == b.table();
}

bool same_universe(const Quantity& a, const Quantity& b) {
    return a.universe_ptr() == b.universe_ptr() || a.universe() == b.universe();
}

std::string_view to_string(Classification::Kind kind) {
    switch (kind) {
    case Classification::Kind::scalar: return "scalar";
    case Classification::Kind::attribute: return "attribute";
    case Classification::Kind::relation: return "relation-quantity";
    }
    return "unknown";
}

Quantity make_quantity(std::string name, UniversePtr universe, std::size_t arity, SignSet signs,
                       std::vector<std::uint32_t> table, std::size_t cap) {
    return Quantity(std::move(name), std::move(universe), arity, std::move(signs),
                    std::move(table), cap);
}

Quantity make_quantity(std::string name, Universe universe, std::size_t arity, SignSet signs,
                       std::vector<std::uint32_t> table, std::size_t cap) {
    return Quantity(std::move(name), std::make_shared<const Universe>(std::move(universe)), arity,
                    std::move(signs), std::move(table), cap);
}

Quantity make_quantity(std::string name, UniversePtr universe, std::size_t arity, SignSet signs,
                       std::span<const TupleAssignment> assignments, std::size_t cap) {
    if (!universe) {
        throw Error(ErrorKind::EmptyUniverse, "quantity requires a universe");
    }
    const std::size_t count = checked_tuple_count(universe->size(), arity, cap);
    constexpr std::uint32_t unassigned = 0xFFFFFFFFu;
    std::vector<std::uint32_t> table(count, unassigned);
    for (const auto& [tuple, sign] : assignments) {
        if (tuple.size() != arity) {
            throw Error(ErrorKind::ArityMismatch,
                        "assignment tuple has " + std::to_string(tuple.size()) +
                            " coordinates, expected " + std::to_string(arity));
        }
        std::size_t rank = 0;
        for (const std::string& id : tuple) {
            auto idx = universe->index_of(id);
            if (!idx) {
                throw Error(ErrorKind::UnknownObject,
                            "'" + id + "' is not an object of the universe");
            }
            rank = rank * universe->size() + *idx;
        }
        auto sign_idx = signs.index_of(sign);
        if (!sign_idx) {
            throw Error(ErrorKind::UnknownSign, "'" + sign + "' is not in the sign set");
        }
        if (table[rank] != unassigned) {
            throw Error(ErrorKind::DuplicateAssignment,
                        "tuple assigned more than once (rank " + std::to_string(rank) + ")");
        }
        table[rank] = static_cast<std::uint32_t>(*sign_idx);
    }
    for (std::size_t rank = 0; rank < count; ++rank) {
        if (table[rank] == unassigned) {
            throw Error(ErrorKind::IncompleteMap,
                        "tuple at rank " + std::to_string(rank) + " is unassigned");
        }
    }
    return Quantity(std::move(name), std::move(universe), arity, std::move(signs),
                    std::move(table), cap);
}

Quantity make_quantity_from_rule(std::string name, UniversePtr universe, std::size_t arity,
                                 SignSet signs, const TupleRule& rule, std::size_t cap) {
    if (!universe) {
        throw Error(ErrorKind::EmptyUniverse, "quantity requires a universe");
    }
    const std::size_t count = checked_tuple_count(universe->size(), arity, cap);
    std::vector<std::uint32_t> table;
    table.reserve(count);
    std::vector<std::size_t> idx(arity);
    std::vector<std::string> tuple(arity);
    for (std::size_t rank = 0; rank < count; ++rank) {
        tuple_unrank(rank, universe->size(), idx);
        for (std::size_t i = 0; i < arity; ++i) tuple[i] = universe->id(idx[i]);
        const std::string sign = rule(tuple);
        auto sign_idx = signs.index_of(sign);
        if (!sign_idx) {
            throw Error(ErrorKind::UnknownSign,
                        "rule produced '" + sign + "', which is not in the sign set");
        }
        table.push_back(static_cast<std::uint32_t>(*sign_idx));
    }
    return Quantity(std::move(name), std::move(universe), arity, std::move(signs),
                    std::move(table), cap);
}

std::vector<std::size_t> preimage_ranks(const Quantity& q, std::string_view sign) {
    auto sign_idx = q.signs().index_of(sign);
    if (!sign_idx) {
        throw Error(ErrorKind::UnknownSign,
                    "'" + std::string(sign) + "' is not in the sign set of " + q.name());
    }
    std::vector<std::size_t> ranks;
    for (std::size_t rank = 0; rank < q.tuple_count(); ++rank) {
        if (q.sign_index_at(rank) == *sign_idx) ranks.push_back(rank);
    }
    return ranks;
}

std::vector<std::vector<std::string>> preimage(const Quantity& q, std::string_view sign) {
    std::vector<std::vector<std::string>> tuples;
    std::vector<std::size_t> idx(q.arity());
    for (std::size_t rank : preimage_ranks(q, sign)) {
        tuple_unrank(rank, q.universe().size(), idx);
        std::vector<std::string> tuple;
        tuple.reserve(q.arity());
        for (std::size_t i : idx) tuple.push_back(q.universe().id(i));
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

Partition induced_partition(const Quantity& q) { return Partition::from_labels(q.table()); }

Classification classify(const Quantity& q) {
    Classification c{};
    c.kind = q.arity() == 0   ? Classification::Kind::scalar
             : q.arity() == 1 ? Classification::Kind::attribute
                              : Classification::Kind::relation;
    c.element_count = q.realized_sign_count();
    c.declared_count = q.signs().size();
    const bool injective = c.element_count == q.tuple_count();
    c.degenerate = !injective;
    c.tag_on_realized = injective;
    c.is_tag = injective && c.element_count == c.declared_count;
    c.is_constant = c.element_count == 1;
    return c;
}

Quantity restrict(const Quantity& q, const Universe& sub) {
    std::vector<std::size_t> parent_index(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) {
        auto idx = q.universe().index_of(sub.id(i));
        if (!idx) {
            throw Error(ErrorKind::NotASubset,
                        "'" + sub.id(i) + "' is not an object of the parent universe");
        }
        parent_index[i] = *idx;
    }
    const std::size_t count = checked_tuple_count(sub.size(), q.arity(), q.tuple_count());
    std::vector<std::uint32_t> table;
    table.reserve(count);
    std::vector<std::size_t> idx(q.arity());
    std::vector<std::size_t> parent_idx(q.arity());
    for (std::size_t rank = 0; rank < count; ++rank) {
        tuple_unrank(rank, sub.size(), idx);
        for (std::size_t i = 0; i < q.arity(); ++i) parent_idx[i] = parent_index[idx[i]];
        table.push_back(q.sign_index_at(tuple_rank(parent_idx, q.universe().size())));
    }
    return Quantity(q.name(), std::make_shared<const Universe>(sub), q.arity(),
                    q.signs(), std::move(table));
}

Quantity lift(const Quantity& q, std::size_t m, std::span<const std::size_t> coords,
              std::size_t cap) {
    if (m <= q.arity()) {
        throw Error(ErrorKind::ArityNotLarger, "lift target arity " + std::to_string(m) +
                                                   " must exceed " + std::to_string(q.arity()));
    }
    if (coords.size() != q.arity()) {
        throw Error(ErrorKind::BadCoordinates,
                    "expected " + std::to_string(q.arity()) + " coordinate positions");
    }
    std::unordered_set<std::size_t> seen;
    for (std::size_t c : coords) {
        if (c >= m || !seen.insert(c).second) {
            throw Error(ErrorKind::BadCoordinates,
                        "coordinate positions must be distinct and below " + std::to_string(m));
        }
    }
    const std::size_t n = q.universe().size();
    const std::size_t count = checked_tuple_count(n, m, cap);
    std::vector<std::uint32_t> table;
    table.reserve(count);
    std::vector<std::size_t> idx(m);
    std::vector<std::size_t> projected(q.arity());
    for (std::size_t rank = 0; rank < count; ++rank) {
        tuple_unrank(rank, n, idx);
        for (std::size_t i = 0; i < q.arity(); ++i) projected[i] = idx[coords[i]];
        table.push_back(q.sign_index_at(tuple_rank(projected, n)));
    }
    return Quantity(q.name(), q.universe_ptr(), m, q.signs(), std::move(table), cap);
}

Quantity lift(const Quantity& q, std::size_t m, std::size_t cap) {
    std::vector<std::size_t> coords(q.arity());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i;
    return lift(q, m, coords, cap);
}

Quantity compose(const Quantity& inner, const Quantity& outer, std::size_t cap) {
    // The inner sign set acts as the outer universe; require the same objects.
    if (outer.universe().size() != inner.signs().size()) {
        throw Error(ErrorKind::UniverseSignMismatch,
                    "outer universe has " + std::to_string(outer.universe().size()) +
                        " objects, inner sign set has " + std::to_string(inner.signs().size()));
    }
    std::vector<std::size_t> sign_to_outer(inner.signs().size());
    for (std::size_t i = 0; i < inner.signs().size(); ++i) {
        auto idx = outer.universe().index_of(inner.signs().id(i));
        if (!idx) {
            throw Error(ErrorKind::UniverseSignMismatch,
                        "inner sign '" + inner.signs().id(i) +
                            "' is not an object of the outer universe");
        }
        sign_to_outer[i] = *idx;
    }
    const std::size_t n = inner.arity();
    const std::size_t m = outer.arity();
    const std::size_t base = inner.universe().size();
    const std::size_t count = checked_tuple_count(base, n * m, cap);
    std::vector<std::uint32_t> table;
    table.reserve(count);
    std::vector<std::size_t> idx(n * m);
    std::vector<std::size_t> outer_idx(m);
    for (std::size_t rank = 0; rank < count; ++rank) {
        tuple_unrank(rank, base, idx);
        for (std::size_t j = 0; j < m; ++j) {
            std::span<const std::size_t> chunk(idx.data() + j * n, n);
            outer_idx[j] = sign_to_outer[inner.sign_index_at(tuple_rank(chunk, base))];
        }
        table.push_back(outer.sign_index_at(tuple_rank(outer_idx, outer.universe().size())));
    }
    return Quantity(outer.name() + "(" + inner.name() + ")", inner.universe_ptr(), n * m,
                    outer.signs(), std::move(table), cap);
}

}  // namespace gsys
