#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gsys/error.hpp"

namespace gsys {

/// Partition of the index space [0, N) into disjoint covering blocks.
///
/// Block ids are normalized to first-occurrence order over the index order,
/// so two Partition values compare equal exactly when the underlying set
/// partitions are equal.
class Partition {
public:
    /// Builds the partition whose blocks are the fibers of `labels`;
    /// arbitrary label values are renumbered canonically.
    explicit Partition(std::vector<std::size_t> labels);

    template <typename Range>
    static Partition from_labels(const Range& labels) {
        std::vector<std::size_t> ids;
        std::map<typename Range::value_type, std::size_t> seen;
        for (const auto& value : labels) {
            auto [it, inserted] = seen.try_emplace(value, seen.size());
            (void)inserted;
            ids.push_back(it->second);
        }
        return Partition(std::move(ids));
    }

    static Partition discrete(std::size_t n);
    static Partition single_block(std::size_t n);

    std::size_t domain_size() const noexcept { return block_of_.size(); }
    std::size_t block_count() const noexcept { return block_count_; }
    std::size_t block_of(std::size_t index) const { return block_of_.at(index); }
    const std::vector<std::size_t>& labels() const noexcept { return block_of_; }
    std::vector<std::vector<std::size_t>> blocks() const;
    bool is_discrete() const noexcept { return block_count_ == block_of_.size(); }
    bool is_single_block() const noexcept { return block_count_ == 1; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.block_of_ == b.block_of_;
    }

private:
    std::vector<std::size_t> block_of_;
    std::size_t block_count_ = 0;
};

Partition partition_from_labeling(std::span<const std::string> labels);

/// p <= q: every block of p is contained in some block of q.
bool is_refinement(const Partition& p, const Partition& q);

/// Greatest lower bound under refinement: nonempty pairwise intersections.
Partition partition_meet(const Partition& p, const Partition& q);

/// Least upper bound under refinement: connected components of the union of
/// the two co-membership relations.
Partition partition_join(const Partition& p, const Partition& q);

/// All partitions of [0, n), in lexicographic order of their canonical label
/// vectors (restricted growth strings). Bell(n) entries; desk scale only.
std::vector<Partition> all_partitions(std::size_t n);

}  // namespace gsys
