#include "gsys/tuples.hpp"

namespace gsys {

std::size_t checked_tuple_count(std::size_t universe_size, std::size_t arity, std::size_t cap) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        if (universe_size == 0 || count > cap / universe_size) {
            throw Error(ErrorKind::SizeCapExceeded,
                        "tuple space " + std::to_string(universe_size) + "^" +
                            std::to_string(arity) + " exceeds cap " + std::to_string(cap));
        }
        count *= universe_size;
    }
    if (count > cap) {
        throw Error(ErrorKind::SizeCapExceeded, "tuple space exceeds cap " + std::to_string(cap));
    }
    return count;
}

std::size_t tuple_rank(std::span<const std::size_t> indices, std::size_t base) {
    std::size_t rank = 0;
    for (std::size_t idx : indices) rank = rank * base + idx;
    return rank;
}

void tuple_unrank(std::size_t rank, std::size_t base, std::span<std::size_t> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = rank % base;
        rank /= base;
    }
}

std::vector<std::vector<std::string>> enumerate_tuples(const Universe& u, std::size_t arity,
                                                       std::size_t cap) {
    const std::size_t count = checked_tuple_count(u.size(), arity, cap);
    std::vector<std::vector<std::string>> tuples;
    tuples.reserve(count);
    std::vector<std::size_t> idx(arity);
    for (std::size_t rank = 0; rank < count; ++rank) {
        tuple_unrank(rank, u.size(), idx);
        std::vector<std::string> tuple;
        tuple.reserve(arity);
        for (std::size_t i : idx) tuple.push_back(u.id(i));
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

}  // namespace gsys
