#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gsys/error.hpp"

namespace gsys {

/// Ordered finite set of distinct object identifiers. The order is fixed at
/// construction and defines tuple enumeration order everywhere else; equality
/// compares the identifier sequences.
class Universe {
public:
    explicit Universe(std::vector<std::string> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    std::optional<std::size_t> index_of(std::string_view id) const;
    bool contains(std::string_view id) const { return index_of(id).has_value(); }

    friend bool operator==(const Universe& a, const Universe& b) { return a.ids_ == b.ids_; }

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

Universe make_universe(std::vector<std::string> ids);
UniversePtr make_universe_ptr(std::vector<std::string> ids);

}  // namespace gsys
