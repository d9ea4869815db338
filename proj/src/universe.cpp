#include "gsys/universe.hpp"

namespace gsys {

Universe::Universe(std::vector<std::string> ids) : ids_(std::move(ids)) {
    if (ids_.empty()) {
        throw Error(ErrorKind::EmptyUniverse, "a universe must contain at least one object");
    }
    index_.reserve(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        auto [it, inserted] = index_.emplace(ids_[i], i);
        if (!inserted) {
            throw Error(ErrorKind::DuplicateId, "duplicate object id '" + ids_[i] + "'");
        }
    }
}

std::optional<std::size_t> Universe::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Universe make_universe(std::vector<std::string> ids) { return Universe(std::move(ids)); }

UniversePtr make_universe_ptr(std::vector<std::string> ids) {
    return std::make_shared<const Universe>(std::move(ids));
}

}  // namespace gsys
