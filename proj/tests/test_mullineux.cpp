#include <doctest.h>

#include <thread>

#include "modrep/mullineux.hpp"

using namespace modrep;

TEST_CASE("mullineux golden values") {
    CHECK(mullineux(Partition{7}, Prime(5)).image == Partition{2, 2, 2, 1});
    CHECK(mullineux(Partition{10, 2}, Prime(5)).image == Partition{3, 3, 2, 2, 1, 1});
    for (int q : {3, 5, 7})
        CHECK(mullineux(Partition{1}, Prime(q)).image == Partition{1});
    CHECK(mullineux(Partition{3, 2}, Prime(7)).image == Partition{2, 2, 1});
    CHECK(mullineux(Partition{}, Prime(5)).image.empty());
}

TEST_CASE("mullineux trace records the peeled residues") {
    const auto r = mullineux(Partition{7}, Prime(5));
    const auto &trace = std::get<ResidueTrace>(r.trace);
    // (7) -> (6) -> ... -> (1): removed nodes have residues 6,5,...,0 mod 5.
    CHECK(trace.residues == std::vector<int>{1, 0, 4, 3, 2, 1, 0});
}

TEST_CASE("mullineux rejects p-singular input") {
    CHECK_THROWS_AS(mullineux(Partition{1, 1, 1, 1, 1}, Prime(5)), Error);
    CHECK_THROWS_AS(mullineux_symbol(Partition{2, 2, 2}, Prime(3)), Error);
    CHECK_THROWS_AS(mullineux_via_symbol(Partition{2, 2, 2}, Prime(3)), Error);
    CHECK_THROWS_AS(mullineux_symbol(Partition{}, Prime(3)), Error);
}

TEST_CASE("mullineux_symbol") {
    using Cols = std::vector<SymbolColumn>;
    CHECK(mullineux_symbol(Partition{1}, Prime(5)).columns == Cols{{1, 1}});
    CHECK(mullineux_symbol(Partition{7}, Prime(5)).columns == Cols{{5, 1}, {2, 1}});
    CHECK(mullineux_symbol(Partition{10, 2}, Prime(5)).total() == 12);
    // (2,2,2,1): the whole rim is a single 5-segment.
    CHECK(mullineux_symbol(Partition{2, 2, 2, 1}, Prime(5)).columns == Cols{{5, 4}, {2, 2}});
}

TEST_CASE("remove_p_rim") {
    auto r = remove_p_rim(Partition{7}, Prime(5));
    CHECK(r.rest == Partition{2});
    CHECK(r.removed == 5);
    // First segment (1,6),(1,5),(2,5) ends in row 2, so the second one
    // starts at (3,1) and the rest of row 2 stays.
    r = remove_p_rim(Partition{6, 5, 1}, Prime(3));
    CHECK(r.removed == 4);
    CHECK(r.rows_met == 3);
    CHECK(r.rest == Partition{4, 4});
}

TEST_CASE("symbols are complete invariants: rebuild every partition n <= 14") {
    for (int q : {3, 5, 7})
        for (int n = 1; n <= 14; ++n)
            for (const auto &lambda : enumerate_partitions(n, Prime(q), true)) {
                const auto symbol = mullineux_symbol(lambda, Prime(q));
                REQUIRE(symbol.total() == n);
                for (const auto &c : symbol.columns)
                    REQUIRE(c.rim_size >= c.rows);
                REQUIRE(partition_from_symbol(symbol, Prime(q)) == lambda);
            }
}

TEST_CASE("mullineux_via_symbol agrees with the recursion") {
    CHECK(mullineux_via_symbol(Partition{7}, Prime(5)) == Partition{2, 2, 2, 1});
    CHECK(mullineux_via_symbol(Partition{1}, Prime(5)) == Partition{1});
    for (int n = 1; n <= 6; ++n)
        for (const auto &lambda : enumerate_partitions(n, Prime(7), true))
            REQUIRE(mullineux_via_symbol(lambda, Prime(7)) == conjugate(lambda));
    for (int q : {3, 5})
        for (int n = 1; n <= 14; ++n)
            for (const auto &lambda : enumerate_partitions(n, Prime(q), true))
                REQUIRE(mullineux_via_symbol(lambda, Prime(q)) ==
                        mullineux(lambda, Prime(q)).image);
}

TEST_CASE("the residue choice in the recursion does not change the image") {
    for (int q : {3, 5, 7})
        for (int n = 1; n <= 14; ++n)
            for (const auto &lambda : enumerate_partitions(n, Prime(q), true))
                REQUIRE(mullineux(lambda, Prime(q), kCalibratedOrientation,
                                  ResidueChoice::Largest)
                            .image == mullineux(lambda, Prime(q)).image);
}

TEST_CASE("fixed points and canonical labels") {
    CHECK(is_mullineux_fixed(Partition{4, 1, 1}, Prime(3)));
    CHECK_FALSE(is_mullineux_fixed(Partition{7}, Prime(5)));
    CHECK_THROWS_AS(is_mullineux_fixed(Partition{3, 2}, Prime(2)), Error);
    CHECK(canonical_label(Partition{2, 2, 2, 1}, Prime(5)) == Partition{7});
    CHECK(canonical_label(Partition{7}, Prime(5)) == Partition{7});
    CHECK(canonical_label(Partition{4, 1, 1}, Prime(3)) == Partition{4, 1, 1});

    for (const auto &lambda : enumerate_partitions(10, Prime(5), true)) {
        const Partition c = canonical_label(lambda, Prime(5));
        REQUIRE(canonical_label(c, Prime(5)) == c);
        REQUIRE(c >= lambda);
    }
}

TEST_CASE("the wrong orientation breaks the recursion on (7)") {
    CHECK_THROWS_AS(mullineux(Partition{5}, Prime(5), Orientation::TopDown), Error);
}

TEST_CASE("MullineuxCache is bit-identical to the uncached recursion") {
    MullineuxCache cache;
    for (int q : {3, 5})
        for (int n = 0; n <= 12; ++n)
            for (const auto &lambda : enumerate_partitions(n, Prime(q), true))
                REQUIRE(cache.image(lambda, Prime(q)) == mullineux(lambda, Prime(q)).image);
    CHECK(cache.size() > 0);
}

TEST_CASE("MullineuxCache under concurrent readers and writers") {
    MullineuxCache cache;
    const auto all = enumerate_partitions(13, Prime(5), true);
    std::vector<std::vector<Partition>> results(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            for (const auto &lambda : all)
                results[t].push_back(cache.image(lambda, Prime(5)));
        });
    for (auto &w : workers)
        w.join();
    for (std::size_t k = 0; k < all.size(); ++k)
        for (int t = 0; t < 4; ++t)
            REQUIRE(results[t][k] == mullineux(all[k], Prime(5)).image);
}
