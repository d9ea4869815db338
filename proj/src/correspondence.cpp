#include "gsys/correspondence.hpp"

#include <algorithm>
#include <unordered_map>

namespace gsys {

namespace {

void require_comparable(const Quantity& left, const Quantity& right) {
    if (!same_universe(left, right)) {
        throw Error(ErrorKind::UniverseMismatch,
                    left.name() + " and " + right.name() + " live on different universes");
    }
    if (left.arity() != right.arity()) {
        throw Error(ErrorKind::ArityMismatch,
                    left.name() + " has arity " + std::to_string(left.arity()) + ", " +
                        right.name() + " has arity " + std::to_string(right.arity()));
    }
}

std::vector<bool> realized_mask(const Quantity& q) {
    std::vector<bool> mask(q.signs().size(), false);
    for (std::uint32_t entry : q.table()) mask[entry] = true;
    return mask;
}

}  // namespace

ValueCorrespondence value_correspondence(const Quantity& left, const Quantity& right,
                                         std::string_view left_sign,
                                         std::string_view right_sign) {
    require_comparable(left, right);
    auto li = left.signs().index_of(left_sign);
    if (!li) {
        throw Error(ErrorKind::UnknownSign,
                    "'" + std::string(left_sign) + "' is not a sign of " + left.name());
    }
    auto ri = right.signs().index_of(right_sign);
    if (!ri) {
        throw Error(ErrorKind::UnknownSign,
                    "'" + std::string(right_sign) + "' is not a sign of " + right.name());
    }
    bool left_nonempty = false;
    bool right_nonempty = false;
    bool intersects = false;
    bool left_in_right = true;
    bool right_in_left = true;
    for (std::size_t rank = 0; rank < left.tuple_count(); ++rank) {
        const bool in_left = left.sign_index_at(rank) == *li;
        const bool in_right = right.sign_index_at(rank) == *ri;
        left_nonempty |= in_left;
        right_nonempty |= in_right;
        intersects |= in_left && in_right;
        left_in_right &= !in_left || in_right;
        right_in_left &= !in_right || in_left;
    }
    ValueCorrespondence vc{};
    vc.zz = intersects;
    vc.forward = left_nonempty && left_in_right;
    vc.backward = right_nonempty && right_in_left;
    vc.bidirectional = vc.forward && vc.backward;
    return vc;
}

bool is_constant(const Quantity& q) { return q.realized_sign_count() == 1; }

bool is_independent(const Quantity& left, const Quantity& right, SignScope scope) {
    require_comparable(left, right);
    const std::size_t rs = right.signs().size();
    std::vector<bool> cooccur(left.signs().size() * rs, false);
    for (std::size_t rank = 0; rank < left.tuple_count(); ++rank) {
        cooccur[left.sign_index_at(rank) * rs + right.sign_index_at(rank)] = true;
    }
    const std::vector<bool> left_scope =
        scope == SignScope::realized ? realized_mask(left)
                                     : std::vector<bool>(left.signs().size(), true);
    const std::vector<bool> right_scope = scope == SignScope::realized
                                              ? realized_mask(right)
                                              : std::vector<bool>(rs, true);
    for (std::size_t li = 0; li < left_scope.size(); ++li) {
        if (!left_scope[li]) continue;
        for (std::size_t ri = 0; ri < rs; ++ri) {
            if (!right_scope[ri]) continue;
            if (!cooccur[li * rs + ri]) return false;
        }
    }
    return true;
}

bool is_dependent(const Quantity& left, const Quantity& right) {
    require_comparable(left, right);
    constexpr std::uint32_t unset = 0xFFFFFFFFu;
    std::vector<std::uint32_t> image(left.signs().size(), unset);
    for (std::size_t rank = 0; rank < left.tuple_count(); ++rank) {
        std::uint32_t& target = image[left.sign_index_at(rank)];
        const std::uint32_t value = right.sign_index_at(rank);
        if (target == unset) {
            target = value;
        } else if (target != value) {
            return false;
        }
    }
    return true;
}

bool are_equivalent(const Quantity& left, const Quantity& right) {
    require_comparable(left, right);
    return induced_partition(left) == induced_partition(right);
}

Quantity quantity_meet(const Quantity& left, const Quantity& right, std::size_t cap) {
    require_comparable(left, right);
    std::unordered_map<std::uint64_t, std::uint32_t> pair_index;
    std::vector<std::string> pair_signs;
    std::vector<std::uint32_t> table;
    table.reserve(left.tuple_count());
    for (std::size_t rank = 0; rank < left.tuple_count(); ++rank) {
        const std::uint64_t key =
            static_cast<std::uint64_t>(left.sign_index_at(rank)) << 32 | right.sign_index_at(rank);
        auto [it, inserted] = pair_index.try_emplace(key, pair_signs.size());
        if (inserted) {
            pair_signs.push_back("<" + left.sign_at(rank) + "," + right.sign_at(rank) + ">");
        }
        table.push_back(it->second);
    }
    return Quantity("meet(" + left.name() + "," + right.name() + ")", left.universe_ptr(),
                    left.arity(), SignSet(std::move(pair_signs)), std::move(table), cap);
}

Quantity quantity_join(const Quantity& left, const Quantity& right) {
    require_comparable(left, right);
    const Partition joined = partition_join(induced_partition(left), induced_partition(right));
    std::vector<std::string> signs;
    signs.reserve(joined.block_count());
    for (std::size_t b = 0; b < joined.block_count(); ++b) {
        signs.push_back("J" + std::to_string(b));
    }
    std::vector<std::uint32_t> table;
    table.reserve(joined.domain_size());
    for (std::size_t label : joined.labels()) table.push_back(static_cast<std::uint32_t>(label));
    return Quantity("join(" + left.name() + "," + right.name() + ")", left.universe_ptr(),
                    left.arity(), SignSet(std::move(signs)), std::move(table));
}

namespace {

void require_pool(std::span<const Quantity> qs, std::size_t arity) {
    if (qs.empty()) {
        throw Error(ErrorKind::EmptySet, "a complete-set check needs at least one quantity");
    }
    for (const Quantity& q : qs) {
        if (q.arity() != arity) {
            throw Error(ErrorKind::ArityMismatch, q.name() + " has arity " +
                                                      std::to_string(q.arity()) + ", expected " +
                                                      std::to_string(arity));
        }
        if (!same_universe(q, qs.front())) {
            throw Error(ErrorKind::UniverseMismatch,
                        q.name() + " lives on a different universe than " + qs.front().name());
        }
    }
}

Partition fold_meet(std::span<const Quantity> qs, std::span<const std::size_t> members) {
    Partition acc = induced_partition(qs[members.front()]);
    for (std::size_t i = 1; i < members.size(); ++i) {
        acc = partition_meet(acc, induced_partition(qs[members[i]]));
    }
    return acc;
}

}  // namespace

CompleteSetReport is_complete_set(std::span<const Quantity> qs, std::size_t arity) {
    require_pool(qs, arity);
    CompleteSetReport report;
    report.members.reserve(qs.size());
    for (const Quantity& q : qs) report.members.push_back(q.name());

    std::vector<std::size_t> all(qs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!fold_meet(qs, all).is_discrete()) {
        report.failures.push_back("not-a-tag-meet");
    }
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (is_constant(qs[i])) {
            report.failures.push_back("constant-member(" + std::to_string(i) + ")");
        }
    }
    for (std::size_t i = 0; i < qs.size(); ++i) {
        for (std::size_t j = i + 1; j < qs.size(); ++j) {
            if (!is_independent(qs[i], qs[j])) {
                report.failures.push_back("dependent-pair(" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
            }
        }
    }
    report.is_complete = report.failures.empty();
    return report;
}

std::vector<std::vector<std::size_t>> find_complete_sets(std::span<const Quantity> qs,
                                                         std::size_t arity,
                                                         std::size_t max_size) {
    require_pool(qs, arity);
    if (max_size == 0) {
        throw Error(ErrorKind::ValidationError, "max_size must be at least 1");
    }
    const std::size_t n = qs.size();
    std::vector<bool> constant(n);
    std::vector<Partition> parts;
    parts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        constant[i] = is_constant(qs[i]);
        parts.push_back(induced_partition(qs[i]));
    }
    std::vector<bool> independent(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            independent[i * n + j] = is_independent(qs[i], qs[j]);
        }
    }

    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> current;

    // Proper nonempty subsets of a candidate keep (b) and (c), so minimality
    // reduces to: no proper subset has a discrete meet.
    auto proper_subset_discrete = [&](const std::vector<std::size_t>& members) {
        const std::size_t k = members.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t b = 0; b < k; ++b) {
                if (mask & (std::size_t{1} << b)) sub.push_back(members[b]);
            }
            if (fold_meet(qs, sub).is_discrete()) return true;
        }
        return false;
    };

    auto dfs = [&](auto&& self, std::size_t next, const Partition* meet_so_far) -> void {
        if (!current.empty() && meet_so_far->is_discrete()) {
            if (!proper_subset_discrete(current)) found.push_back(current);
            return;  // any superset would not be minimal
        }
        if (current.size() == max_size) return;
        for (std::size_t i = next; i < n; ++i) {
            if (constant[i]) continue;
            bool compatible = true;
            for (std::size_t j : current) {
                if (!independent[std::min(i, j) * n + std::max(i, j)]) {
                    compatible = false;
                    break;
                }
            }
            if (!compatible) continue;
            Partition merged =
                current.empty() ? parts[i] : partition_meet(*meet_so_far, parts[i]);
            current.push_back(i);
            self(self, i + 1, &merged);
            current.pop_back();
        }
    };
    dfs(dfs, 0, nullptr);
    return found;
}

QuantityRelation relate(const Quantity& left, const Quantity& right, SignScope scope) {
    require_comparable(left, right);
    QuantityRelation r{};
    r.left_constant = is_constant(left);
    r.right_constant = is_constant(right);
    r.independent = is_independent(left, right, scope);
    r.left_determines_right = is_dependent(left, right);
    r.right_determines_left = is_dependent(right, left);
    r.equivalent = r.left_determines_right && r.right_determines_left;
    return r;
}

}  // namespace gsys
