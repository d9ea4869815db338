#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"

using namespace gsys;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    throw std::logic_error("expected gsys::Error");
}

/// parity on {"1", ..., "n"}
Quantity parity_on(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    return make_quantity_from_rule(
        "parity", make_universe_ptr(ids), 1, SignSet({"even", "odd"}),
        [](std::span<const std::string> t) {
            return std::atoi(t[0].c_str()) % 2 == 0 ? "even" : "odd";
        });
}

Quantity mod3_on(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    return make_quantity_from_rule(
        "mod3", make_universe_ptr(ids), 1, SignSet({"r0", "r1", "r2"}),
        [](std::span<const std::string> t) {
            return "r" + std::to_string(std::atoi(t[0].c_str()) % 3);
        });
}

/// |x - y| on positions of {"a","b","c"}, signs "0","1","2"
Quantity distance_abc() {
    auto u = make_universe_ptr({"a", "b", "c"});
    return make_quantity_from_rule(
        "dist", u, 2, SignSet({"0", "1", "2"}), [u](std::span<const std::string> t) {
            const int x = static_cast<int>(*u->index_of(t[0]));
            const int y = static_cast<int>(*u->index_of(t[1]));
            return std::to_string(std::abs(x - y));
        });
}

std::vector<std::string> tup(std::initializer_list<const char*> ids) {
    return std::vector<std::string>(ids.begin(), ids.end());
}

}  // namespace

TEST_CASE("make_quantity from assignments") {
    auto u = make_universe_ptr({"1", "2", "3", "4"});
    std::vector<TupleAssignment> assign = {
        {{"1"}, "odd"}, {{"2"}, "even"}, {{"3"}, "odd"}, {{"4"}, "even"}};
    const Quantity parity = make_quantity("parity", u, 1, SignSet({"even", "odd"}), assign);
    CHECK(parity.evaluate(tup({"1"})) == "odd");
    CHECK(parity.evaluate(tup({"4"})) == "even");

    std::vector<TupleAssignment> missing(assign.begin(), assign.begin() + 3);
    CHECK(kind_of([&] { make_quantity("p", u, 1, SignSet({"even", "odd"}), missing); }) ==
          ErrorKind::IncompleteMap);

    std::vector<TupleAssignment> doubled = assign;
    doubled.push_back({{"1"}, "even"});
    CHECK(kind_of([&] { make_quantity("p", u, 1, SignSet({"even", "odd"}), doubled); }) ==
          ErrorKind::DuplicateAssignment);

    std::vector<TupleAssignment> bad_sign = assign;
    bad_sign[0].second = "prime";
    CHECK(kind_of([&] { make_quantity("p", u, 1, SignSet({"even", "odd"}), bad_sign); }) ==
          ErrorKind::UnknownSign);

    auto ab = make_universe_ptr({"a", "b"});
    CHECK(kind_of([&] {
              make_quantity("q", ab, 1, SignSet({"a", "x"}), std::vector<std::uint32_t>{0, 1});
          }) == ErrorKind::SignObjectClash);
}

TEST_CASE("evaluate") {
    const Quantity parity = parity_on(6);
    CHECK(parity.evaluate(tup({"3"})) == "odd");
    const Quantity d = distance_abc();
    CHECK(d.evaluate(tup({"a", "c"})) == "2");
    CHECK(d.evaluate(tup({"b", "a"})) == "1");

    const Quantity scalar = make_quantity("c", make_universe_ptr({"x", "y"}), 0,
                                          SignSet({"c0"}), std::vector<std::uint32_t>{0});
    CHECK(scalar.evaluate({}) == "c0");

    CHECK(kind_of([&] { (void)parity.evaluate(tup({"1", "2"})); }) == ErrorKind::ArityMismatch);
    CHECK(kind_of([&] { (void)parity.evaluate(tup({"9"})); }) == ErrorKind::UnknownObject);
}

TEST_CASE("preimage") {
    const Quantity parity = parity_on(6);
    auto odd = preimage(parity, "odd");
    REQUIRE(odd.size() == 3);
    CHECK(odd[0] == tup({"1"}));
    CHECK(odd[1] == tup({"3"}));
    CHECK(odd[2] == tup({"5"}));

    const Quantity narrow = make_quantity("n", make_universe_ptr({"x"}), 1,
                                          SignSet({"used", "unused"}),
                                          std::vector<std::uint32_t>{0});
    CHECK(preimage(narrow, "unused").empty());
    CHECK(kind_of([&] { preimage(narrow, "nosuch"); }) == ErrorKind::UnknownSign);

    const Quantity d = distance_abc();
    const auto ones = preimage(d, "1");
    REQUIRE(ones.size() == 4);
    CHECK(ones[0] == tup({"a", "b"}));
    CHECK(ones[1] == tup({"b", "a"}));
    CHECK(ones[2] == tup({"b", "c"}));
    CHECK(ones[3] == tup({"c", "b"}));
}

TEST_CASE("induced_partition") {
    const Quantity parity = parity_on(6);
    const Partition p = induced_partition(parity);
    CHECK(p.block_count() == 2);
    CHECK(oracle::to_blocks(p) == oracle::Blocks{{0, 2, 4}, {1, 3, 5}});

    auto u = make_universe_ptr({"1", "2", "3"});
    const Quantity tag = make_quantity("tag", u, 1, SignSet({"t1", "t2", "t3"}),
                                       std::vector<std::uint32_t>{0, 1, 2});
    CHECK(induced_partition(tag).is_discrete());

    const Quantity constant =
        make_quantity("k", u, 1, SignSet({"c"}), std::vector<std::uint32_t>{0, 0, 0});
    CHECK(induced_partition(constant).is_single_block());
}

TEST_CASE("classify") {
    const Classification parity = classify(parity_on(6));
    CHECK(parity.kind == Classification::Kind::attribute);
    CHECK(parity.degenerate);
    CHECK(parity.element_count == 2);
    CHECK_FALSE(parity.is_tag);
    CHECK_FALSE(parity.is_constant);

    auto u = make_universe_ptr({"1", "2", "3"});
    const Classification tag = classify(make_quantity(
        "tag", u, 1, SignSet({"t1", "t2", "t3"}), std::vector<std::uint32_t>{0, 1, 2}));
    CHECK(tag.kind == Classification::Kind::attribute);
    CHECK_FALSE(tag.degenerate);
    CHECK(tag.is_tag);
    CHECK(tag.tag_on_realized);

    const Classification d = classify(distance_abc());
    CHECK(d.kind == Classification::Kind::relation);
    CHECK(d.degenerate);  // 9 tuples, 3 realized signs
    CHECK(d.element_count == 3);

    // injective but not onto the declared signs: tag_on_realized only
    const Classification partial = classify(make_quantity(
        "p", u, 1, SignSet({"t1", "t2", "t3", "extra"}), std::vector<std::uint32_t>{0, 1, 2}));
    CHECK(partial.tag_on_realized);
    CHECK_FALSE(partial.is_tag);
    CHECK(partial.declared_count == 4);
    CHECK(partial.element_count == 3);
}

TEST_CASE("restrict") {
    const Quantity parity = parity_on(6);
    const Quantity even_only = restrict(parity, make_universe({"2", "4"}));
    CHECK(is_constant(even_only));
    CHECK(even_only.evaluate(tup({"4"})) == "even");

    const Quantity d = distance_abc();
    const Quantity d2 = restrict(d, make_universe({"a", "b"}));
    CHECK(d2.table() == std::vector<std::uint32_t>{0, 1, 1, 0});
    CHECK(d2.signs() == d.signs());

    const Quantity full = restrict(parity, parity.universe());
    CHECK(full.table() == parity.table());

    CHECK(kind_of([&] { restrict(parity, make_universe({"7"})); }) == ErrorKind::NotASubset);
}

TEST_CASE("restriction commutes with partitioning") {
    oracle::Rng rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        auto u = oracle::random_universe(rng, 2, 5);
        const std::size_t arity = rng.between(0, 2);
        const Quantity q = oracle::random_quantity(rng, u, arity, 4, "q");
        // random nonempty subset, in universe order
        std::vector<std::string> sub_ids;
        for (const std::string& id : u->ids()) {
            if (rng.flip()) sub_ids.push_back(id);
        }
        if (sub_ids.empty()) sub_ids.push_back(u->id(rng.below(u->size())));
        const Universe sub = make_universe(sub_ids);
        const Quantity r = restrict(q, sub);

        // agreement on every tuple of sub^k
        for (const auto& tuple : enumerate_tuples(sub, arity)) {
            CHECK(r.evaluate(tuple) == q.evaluate(tuple));
        }
        // partition commutation: restricted labels, re-canonicalized
        const Partition parent = induced_partition(q);
        std::vector<std::size_t> labels;
        for (const auto& tuple : enumerate_tuples(sub, arity)) {
            labels.push_back(parent.block_of(q.rank_of_tuple(tuple)));
        }
        CHECK(induced_partition(r) == Partition(labels));
    }
}

TEST_CASE("lift") {
    const Quantity parity = parity_on(6);
    const std::vector<std::size_t> first = {0};
    const Quantity on_first = lift(parity, 2, first);
    CHECK(on_first.evaluate(tup({"3", "2"})) == "odd");

    const std::vector<std::size_t> second = {1};
    const Quantity on_second = lift(parity, 2, second);
    CHECK(on_second.evaluate(tup({"3", "2"})) == "even");

    CHECK(kind_of([&] { lift(parity, 1); }) == ErrorKind::ArityNotLarger);
    const std::vector<std::size_t> bad = {2};
    CHECK(kind_of([&] { lift(parity, 2, bad); }) == ErrorKind::BadCoordinates);
    const std::vector<std::size_t> dup = {0, 0};
    CHECK(kind_of([&] { lift(distance_abc(), 3, dup); }) == ErrorKind::BadCoordinates);

    // default coords are the first k positions
    const Quantity d3 = lift(distance_abc(), 3);
    CHECK(d3.evaluate(tup({"a", "c", "b"})) == "2");
}

TEST_CASE("lifting law on random evaluations") {
    oracle::Rng rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        auto u = oracle::random_universe(rng, 2, 5);
        const std::size_t n = rng.between(0, 2);
        const std::size_t m = rng.between(n + 1, n + 2);
        const Quantity q = oracle::random_quantity(rng, u, n, 3, "q");
        std::vector<std::size_t> coords(m);
        std::iota(coords.begin(), coords.end(), 0);
        std::shuffle(coords.begin(), coords.end(), rng.eng);
        coords.resize(n);
        const Quantity lifted = lift(q, m, coords);
        for (int probe = 0; probe < 5; ++probe) {
            std::vector<std::string> y;
            for (std::size_t i = 0; i < m; ++i) y.push_back(u->id(rng.below(u->size())));
            std::vector<std::string> projected;
            for (std::size_t c : coords) projected.push_back(y[c]);
            CHECK(lifted.evaluate(y) == q.evaluate(projected));
        }
    }
}

TEST_CASE("compose") {
    const Quantity parity = parity_on(6);
    auto eo = make_universe_ptr({"even", "odd"});
    const Quantity eq = make_quantity_from_rule(
        "eq", eo, 2, SignSet({"same", "diff"}), [](std::span<const std::string> t) {
            return t[0] == t[1] ? "same" : "diff";
        });
    const Quantity c = compose(parity, eq);
    CHECK(c.arity() == 2);
    CHECK(c.evaluate(tup({"1", "3"})) == "same");
    CHECK(c.evaluate(tup({"1", "2"})) == "diff");

    auto wrong = make_universe_ptr({"even", "odd", "extra"});
    const Quantity bad = make_quantity("b", wrong, 1, SignSet({"s"}),
                                       std::vector<std::uint32_t>{0, 0, 0});
    CHECK(kind_of([&] { compose(parity, bad); }) == ErrorKind::UniverseSignMismatch);
}

TEST_CASE("composition law by full enumeration") {
    oracle::Rng rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        auto u = oracle::random_universe(rng, 2, 4);
        const std::size_t n = rng.between(1, 2);
        const std::size_t m = rng.between(1, 2);
        const Quantity inner = oracle::random_quantity(rng, u, n, 3, "inner");
        auto link = make_universe_ptr(inner.signs().ids());
        const Quantity outer = oracle::random_quantity(rng, link, m, 3, "outer", "w");
        const Quantity c = compose(inner, outer);
        CHECK(c.arity() == n * m);
        for (const auto& tuple : enumerate_tuples(*u, n * m)) {
            std::vector<std::string> outer_args;
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<std::string> chunk(tuple.begin() + j * n,
                                               tuple.begin() + (j + 1) * n);
                outer_args.push_back(inner.evaluate(chunk));
            }
            CHECK(c.evaluate(tuple) == outer.evaluate(outer_args));
        }
    }
}

TEST_CASE("totality and fiber law on random quantities") {
    oracle::Rng rng(505);
    for (int trial = 0; trial < 100; ++trial) {
        auto u = oracle::random_universe(rng, 1, 6);
        const std::size_t arity = rng.between(0, 2);
        const Quantity q = oracle::random_quantity(rng, u, arity, 4, "q");
        const auto tuples = enumerate_tuples(*u, arity);
        CHECK(tuples.size() == q.tuple_count());
        for (const auto& t : tuples) {
            CHECK_NOTHROW((void)q.evaluate(t));
        }
        // fibers are disjoint, cover, and match the induced partition
        CHECK(oracle::fibers(q) == oracle::to_blocks(induced_partition(q)));

        const Classification cls = classify(q);
        if (cls.is_tag) CHECK_FALSE(cls.degenerate);
        CHECK(cls.is_constant == induced_partition(q).is_single_block());
        CHECK(!cls.degenerate == induced_partition(q).is_discrete());
    }
}

TEST_CASE("quantity name and table validation") {
    auto u = make_universe_ptr({"x"});
    CHECK_THROWS_AS(make_quantity("", u, 1, SignSet({"s"}), std::vector<std::uint32_t>{0}),
                    Error);
    CHECK(kind_of([&] {
              make_quantity("q", u, 1, SignSet({"s"}), std::vector<std::uint32_t>{0, 0});
          }) == ErrorKind::IncompleteMap);
    CHECK(kind_of([&] {
              make_quantity("q", u, 1, SignSet({"s"}), std::vector<std::uint32_t>{7});
          }) == ErrorKind::UnknownSign);
    CHECK_THROWS_AS(SignSet({}), Error);
    CHECK_THROWS_AS(SignSet({"s", "s"}), Error);
}
