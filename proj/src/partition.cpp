#include "gsys/partition.hpp"

#include <numeric>
#include <unordered_map>

namespace gsys {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

void require_same_domain(const Partition& p, const Partition& q) {
    if (p.domain_size() != q.domain_size()) {
        throw Error(ErrorKind::DomainMismatch,
                    "partitions cover domains of size " + std::to_string(p.domain_size()) +
                        " and " + std::to_string(q.domain_size()));
    }
}

}  // namespace

Partition::Partition(std::vector<std::size_t> labels) : block_of_(std::move(labels)) {
    if (block_of_.empty()) {
        throw Error(ErrorKind::EmptyDomain, "cannot partition an empty index space");
    }
    std::unordered_map<std::size_t, std::size_t> remap;
    remap.reserve(block_of_.size());
    for (std::size_t& label : block_of_) {
        auto [it, inserted] = remap.try_emplace(label, remap.size());
        (void)inserted;
        label = it->second;
    }
    block_count_ = remap.size();
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return Partition(std::move(labels));
}

Partition Partition::single_block(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(i);
    return out;
}

Partition partition_from_labeling(std::span<const std::string> labels) {
    std::vector<std::size_t> ids;
    ids.reserve(labels.size());
    std::unordered_map<std::string_view, std::size_t> seen;
    for (const std::string& value : labels) {
        auto [it, inserted] = seen.try_emplace(value, seen.size());
        (void)inserted;
        ids.push_back(it->second);
    }
    return Partition(std::move(ids));
}

bool is_refinement(const Partition& p, const Partition& q) {
    require_same_domain(p, q);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> image(p.block_count(), unset);
    for (std::size_t i = 0; i < p.domain_size(); ++i) {
        std::size_t& target = image[p.block_of(i)];
        if (target == unset) {
            target = q.block_of(i);
        } else if (target != q.block_of(i)) {
            return false;
        }
    }
    return true;
}

Partition partition_meet(const Partition& p, const Partition& q) {
    require_same_domain(p, q);
    std::vector<std::size_t> labels(p.domain_size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = p.block_of(i) * q.block_count() + q.block_of(i);
    }
    return Partition(std::move(labels));
}

Partition partition_join(const Partition& p, const Partition& q) {
    require_same_domain(p, q);
    UnionFind uf(p.domain_size());
    for (const Partition* part : {&p, &q}) {
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> first(part->block_count(), unset);
        for (std::size_t i = 0; i < part->domain_size(); ++i) {
            std::size_t& anchor = first[part->block_of(i)];
            if (anchor == unset) {
                anchor = i;
            } else {
                uf.unite(i, anchor);
            }
        }
    }
    std::vector<std::size_t> labels(p.domain_size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = uf.find(i);
    return Partition(std::move(labels));
}

std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> out;
    if (n == 0) return out;
    std::vector<std::size_t> rgs(n, 0);
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i)) + 1.
    auto emit = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
        if (i == n) {
            out.emplace_back(rgs);
            return;
        }
        for (std::size_t label = 0; label <= max_used + 1; ++label) {
            rgs[i] = label;
            self(self, i + 1, std::max(max_used, label));
        }
    };
    rgs[0] = 0;
    emit(emit, 1, 0);
    return out;
}

}  // namespace gsys
