#include "gsys/system.hpp"

#include <algorithm>

#include "gsys/correspondence.hpp"

namespace gsys {

System::System(UniversePtr vertices, std::vector<Quantity> measures, bool strict,
               std::vector<SystemPtr> nested)
    : vertices_(std::move(vertices)),
      measures_(std::move(measures)),
      nested_(std::move(nested)),
      strict_(strict) {
    if (!vertices_) {
        throw Error(ErrorKind::EmptyUniverse, "a system requires a vertex set");
    }
    nested_.resize(vertices_->size());
    for (const Quantity& q : measures_) {
        if (q.universe_ptr() != vertices_ && !(q.universe() == *vertices_)) {
            throw Error(ErrorKind::UniverseMismatch,
                        "measure '" + q.name() + "' is not defined on the vertex set");
        }
    }
    if (strict_) {
        const bool has_relation = std::any_of(measures_.begin(), measures_.end(),
                                              [](const Quantity& q) { return q.arity() > 1; });
        if (!has_relation) {
            throw Error(ErrorKind::NoRelationQuantity,
                        "a strict system needs at least one quantity of arity > 1");
        }
    }
}

bool System::has_nested() const noexcept {
    return std::any_of(nested_.begin(), nested_.end(), [](const SystemPtr& p) { return p != nullptr; });
}

namespace {

// A system is its own descendant only if construction was circumvented; the
// walk keeps the invariant checkable.
bool is_descendant(const System* needle, const System& root) {
    for (std::size_t i = 0; i < root.vertices().size(); ++i) {
        const SystemPtr& child = root.nested_at(i);
        if (!child) continue;
        if (child.get() == needle || is_descendant(needle, *child)) return true;
    }
    return false;
}

}  // namespace

SystemPtr make_system(UniversePtr vertices, std::vector<Quantity> measures, bool strict,
                      const std::vector<std::pair<std::string, SystemPtr>>& nested) {
    if (!vertices) {
        throw Error(ErrorKind::EmptyUniverse, "a system requires a vertex set");
    }
    std::vector<SystemPtr> slots(vertices->size());
    for (const auto& [id, child] : nested) {
        auto idx = vertices->index_of(id);
        if (!idx) {
            throw Error(ErrorKind::UnknownObject, "'" + id + "' is not a vertex");
        }
        slots[*idx] = child;
    }
    auto system = std::make_shared<const System>(std::move(vertices), std::move(measures), strict,
                                                 std::move(slots));
    if (is_descendant(system.get(), *system)) {
        throw Error(ErrorKind::CyclicNesting, "a system cannot be its own descendant");
    }
    return system;
}

SystemPtr make_system(Universe vertices, std::vector<Quantity> measures, bool strict,
                      const std::vector<std::pair<std::string, SystemPtr>>& nested) {
    return make_system(std::make_shared<const Universe>(std::move(vertices)), std::move(measures),
                       strict, nested);
}

bool is_subsystem(const System& sa, const System& sb) {
    for (std::size_t i = 0; i < sb.vertices().size(); ++i) {
        if (sb.nested_at(i).get() == &sa) return true;
    }
    return false;
}

PartRelation part_relation(const System& sa, const System& sb) {
    PartRelation rel{false, false};
    for (const std::string& id : sa.vertices().ids()) {
        if (!sb.vertices().contains(id)) return rel;
    }
    if (sa.measures().size() != sb.measures().size()) return rel;
    for (std::size_t i = 0; i < sa.measures().size(); ++i) {
        const Quantity restricted = restrict(sb.measures()[i], sa.vertices());
        if (!same_function(sa.measures()[i], restricted)) return rel;
    }
    rel.is_part = true;
    rel.proper = sa.vertices().size() < sb.vertices().size();
    return rel;
}

bool is_part(const System& sa, const System& sb) { return part_relation(sa, sb).is_part; }

bool is_concretion(const System& sb, const System& sa) {
    if (!(sa.vertices() == sb.vertices())) return false;
    // order-preserving subsequence match of measure tuples
    std::size_t pos = 0;
    for (const Quantity& q : sa.measures()) {
        while (pos < sb.measures().size() && !same_function(sb.measures()[pos], q)) ++pos;
        if (pos == sb.measures().size()) return false;
        ++pos;
    }
    return true;
}

bool is_uniform(const System& sa, const System& sb, std::size_t measure_index) {
    if (!is_part(sa, sb)) {
        throw Error(ErrorKind::NotAPart, "the first system is not a part of the second");
    }
    if (measure_index >= sb.measures().size()) {
        throw Error(ErrorKind::BadIndex,
                    "measure index " + std::to_string(measure_index) + " out of range");
    }
    return is_constant(restrict(sb.measures()[measure_index], sa.vertices()));
}

VertexMap::VertexMap(std::vector<std::pair<std::string, std::string>> pairs)
    : pairs_(std::move(pairs)) {
    for (const auto& [from, to] : pairs_) {
        auto [it, inserted] = map_.emplace(from, to);
        if (!inserted) {
            throw Error(ErrorKind::DuplicateId, "vertex '" + from + "' mapped twice");
        }
    }
}

std::optional<std::string_view> VertexMap::apply(std::string_view id) const {
    auto it = map_.find(std::string(id));
    if (it == map_.end()) return std::nullopt;
    return std::string_view(it->second);
}

bool VertexMap::total_on(const Universe& u) const {
    return std::all_of(u.ids().begin(), u.ids().end(),
                       [&](const std::string& id) { return map_.contains(id); });
}

bool VertexMap::bijective_between(const Universe& from, const Universe& to) const {
    if (!total_on(from) || from.size() != to.size()) return false;
    std::vector<bool> hit(to.size(), false);
    for (const std::string& id : from.ids()) {
        auto image = apply(id);
        auto idx = image ? to.index_of(*image) : std::nullopt;
        if (!idx || hit[*idx]) return false;
        hit[*idx] = true;
    }
    return true;
}

void check_shape_compatible(const System& sa, const System& sb, IsoMode mode) {
    if (sa.measures().size() != sb.measures().size()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "measure tuples have lengths " + std::to_string(sa.measures().size()) +
                        " and " + std::to_string(sb.measures().size()));
    }
    for (std::size_t i = 0; i < sa.measures().size(); ++i) {
        const Quantity& qa = sa.measures()[i];
        const Quantity& qb = sb.measures()[i];
        if (qa.arity() != qb.arity()) {
            throw Error(ErrorKind::ShapeMismatch,
                        "measure " + std::to_string(i) + " has arities " +
                            std::to_string(qa.arity()) + " and " + std::to_string(qb.arity()));
        }
        if (mode == IsoMode::value_preserving) {
            auto sorted = [](const SignSet& s) {
                std::vector<std::string> v = s.ids();
                std::sort(v.begin(), v.end());
                return v;
            };
            if (sorted(qa.signs()) != sorted(qb.signs())) {
                throw Error(ErrorKind::ShapeMismatch,
                            "measure " + std::to_string(i) +
                                " has different sign sets (value-preserving mode)");
            }
        }
    }
}

bool is_homomorphism(const VertexMap& f, const System& sa, const System& sb, IsoMode mode) {
    check_shape_compatible(sa, sb, mode);
    const Universe& va = sa.vertices();
    const Universe& vb = sb.vertices();
    std::vector<std::size_t> image(va.size());
    for (std::size_t i = 0; i < va.size(); ++i) {
        auto mapped = f.apply(va.id(i));
        if (!mapped) {
            throw Error(ErrorKind::MapNotTotal, "vertex '" + va.id(i) + "' is unmapped");
        }
        auto idx = vb.index_of(*mapped);
        if (!idx) {
            throw Error(ErrorKind::MapNotTotal,
                        "image '" + std::string(*mapped) + "' is not a vertex of the codomain");
        }
        image[i] = *idx;
    }
    for (std::size_t m = 0; m < sa.measures().size(); ++m) {
        const Quantity& qa = sa.measures()[m];
        const Quantity& qb = sb.measures()[m];
        const std::size_t k = qa.arity();
        const std::size_t count = qa.tuple_count();
        std::vector<std::size_t> idx(k);
        std::vector<std::size_t> mapped_idx(k);
        std::unordered_map<std::string, std::string> sign_map;
        for (std::size_t rank = 0; rank < count; ++rank) {
            tuple_unrank(rank, va.size(), idx);
            for (std::size_t i = 0; i < k; ++i) mapped_idx[i] = image[idx[i]];
            const std::string& value_a = qa.sign_at(rank);
            const std::string& value_b = qb.sign_at(tuple_rank(mapped_idx, vb.size()));
            if (mode == IsoMode::value_preserving) {
                if (value_a != value_b) return false;
            } else {
                auto [it, inserted] = sign_map.emplace(value_a, value_b);
                if (!inserted && it->second != value_b) return false;
            }
        }
    }
    return true;
}

}  // namespace gsys
