#include <doctest.h>

#include <set>

#include "modrep/partition.hpp"
#include "oracles.hpp"

using namespace modrep;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InternalInconsistency;
}

} // namespace

TEST_CASE("parse_partition reads plain and exponent forms") {
    CHECK(parse_partition("8,2") == Partition{8, 2});
    CHECK(parse_partition("4^3,1^2") == Partition{4, 4, 4, 1, 1});
    CHECK(parse_partition(" 3, 2 ,1 ") == Partition{3, 2, 1});
    CHECK(parse_partition("(5,3)") == Partition{5, 3});
    CHECK(parse_partition("[]").empty());
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("2^0,1") == Partition{1});
}

TEST_CASE("parse_partition rejects bad input") {
    CHECK(code_of([] { parse_partition("2,3"); }) == ErrorCode::NotWeaklyDecreasing);
    CHECK(code_of([] { parse_partition("3,0"); }) == ErrorCode::NonPositivePart);
    CHECK(code_of([] { parse_partition("3,-1"); }) == ErrorCode::NonPositivePart);
    CHECK(code_of([] { parse_partition("3,,1"); }) == ErrorCode::MalformedPartition);
    CHECK(code_of([] { parse_partition("a,1"); }) == ErrorCode::MalformedPartition);
    CHECK(code_of([] { parse_partition("3^x"); }) == ErrorCode::MalformedPartition);
    CHECK(code_of([] { parse_partition("3^-1"); }) == ErrorCode::NegativeExponent);
}

TEST_CASE("Prime accepts odd primes only") {
    CHECK(Prime(3).value() == 3);
    CHECK(Prime(101).value() == 101);
    for (int bad : {-3, 0, 1, 2, 4, 9, 15})
        CHECK(code_of([bad] { Prime{bad}; }) == ErrorCode::OddPrimeRequired);
}

TEST_CASE("is_p_regular") {
    const Prime p(5);
    CHECK_FALSE(is_p_regular(Partition{1, 1, 1, 1, 1}, p));
    CHECK(is_p_regular(Partition{2, 2, 2, 2, 1}, p));
    CHECK(is_p_regular(Partition{}, p));
    CHECK_FALSE(is_p_regular(Partition{3, 3, 3}, Prime(3)));
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{3, 2}) == Partition{2, 2, 1});
    CHECK(conjugate(Partition{4}) == Partition{1, 1, 1, 1});
    CHECK(conjugate(conjugate(Partition{5, 3, 3, 1})) == Partition{5, 3, 3, 1});
    CHECK(conjugate(Partition{}).empty());
}

TEST_CASE("conjugate is an involution and matches the cell transpose for n <= 20") {
    for (int n = 0; n <= 20; ++n)
        for (const auto &lambda : enumerate_partitions(n)) {
            const Partition c = conjugate(lambda);
            REQUIRE(c.vec() == oracle::transpose(lambda.vec()));
            REQUIRE(conjugate(c) == lambda);
        }
}

TEST_CASE("residue_of uses (col - row) mod p") {
    const Prime p(5);
    CHECK(residue_of({1, 2}, p) == 1);
    CHECK(residue_of({2, 1}, p) == 4);
    CHECK(residue_of({3, 1}, p) == 3);
    CHECK(residue_of({1, 1}, p) == 0);
}

TEST_CASE("residue_content") {
    const Prime p(5);
    CHECK(residue_content(Partition{2, 2}, p).counts == std::vector<int>{2, 1, 0, 0, 1});
    CHECK(residue_content(Partition{}, p).counts == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(residue_content(Partition{6}, p).counts == std::vector<int>{2, 1, 1, 1, 1});
    for (int q : {3, 5, 7})
        for (int n = 0; n <= 14; ++n)
            for (const auto &lambda : enumerate_partitions(n))
                REQUIRE(residue_content(lambda, Prime(q)).total() == n);
}

TEST_CASE("enumeration counts match the pentagonal recurrence") {
    const auto counts = oracle::partition_counts(20);
    for (int n = 0; n <= 20; ++n)
        CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(counts[n]));
    CHECK(enumerate_partitions(4, Prime(5), false).size() == 5);
}

TEST_CASE("enumeration is descending lexicographic and matches a recursive listing") {
    for (int n = 0; n <= 12; ++n) {
        const auto got = enumerate_partitions(n);
        const auto want = oracle::partitions(n);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            REQUIRE(got[k].vec() == want[k]);
            if (k > 0)
                REQUIRE(got[k - 1] > got[k]);
        }
    }
}

TEST_CASE("regular enumeration") {
    const auto five = enumerate_partitions(5, Prime(5), true);
    CHECK(five.size() == 6);
    CHECK(std::find(five.begin(), five.end(), Partition{1, 1, 1, 1, 1}) == five.end());

    const auto zero = enumerate_partitions(0, Prime(5), true);
    REQUIRE(zero.size() == 1);
    CHECK(zero.front().empty());

    for (int q : {3, 5, 7}) {
        const auto counts = oracle::regular_counts(20, q);
        for (int n = 0; n <= 20; ++n)
            REQUIRE(enumerate_partitions(n, Prime(q), true).size() ==
                    static_cast<std::size_t>(counts[n]));
    }
}

TEST_CASE("PartitionStream yields nothing for negative n and stays exhausted") {
    PartitionStream negative(-1);
    CHECK_FALSE(negative.next());
    PartitionStream one(1);
    CHECK(one.next() == Partition{1});
    CHECK_FALSE(one.next());
    CHECK_FALSE(one.next());
}

TEST_CASE("format and parse round-trip on enumerated partitions") {
    for (int n = 0; n <= 12; ++n)
        for (const auto &lambda : enumerate_partitions(n)) {
            REQUIRE(parse_partition(format_partition(lambda)) == lambda);
            REQUIRE(parse_partition(format_partition_exponent(lambda)) == lambda);
        }
    CHECK(format_partition(Partition{}) == "[]");
    CHECK(format_partition_exponent(Partition{4, 4, 4, 1, 1}) == "4^3,1^2");
}

TEST_CASE("specht_dimension") {
    CHECK(specht_dimension(Partition{6}) == 1);
    CHECK(specht_dimension(Partition{2, 1}) == 2);
    CHECK(specht_dimension(Partition{2, 2}) == 2);
    CHECK(code_of([] { specht_dimension(Partition{}); }) == ErrorCode::EmptyPartition);

    std::map<oracle::Parts, std::int64_t> memo;
    for (int n = 1; n <= 12; ++n)
        for (const auto &lambda : enumerate_partitions(n))
            REQUIRE(specht_dimension(lambda) ==
                    static_cast<std::uint64_t>(oracle::count_tableaux(lambda.vec(), memo)));
}
