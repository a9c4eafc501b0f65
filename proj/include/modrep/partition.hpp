#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modrep/error.hpp"

namespace modrep {

/// An odd prime characteristic. p = 2 is rejected.
class Prime {
public:
    explicit Prime(int p);

    int value() const noexcept { return p_; }
    operator int() const noexcept { return p_; }

    // (-i) mod p, the residue paired with i by the Mullineux map.
    int negate(int residue) const noexcept { return (p_ - residue % p_) % p_; }

    friend bool operator==(Prime, Prime) = default;

private:
    int p_;
};

/// A box of a Young diagram, 1-based (row, col).
struct Node {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Node &, const Node &) = default;
};

std::ostream &operator<<(std::ostream &os, const Node &node);

int residue_of(Node node, Prime p);

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the parts, so `std::greater` gives the
/// enumeration order used throughout (descending lexicographic).
class Partition {
public:
    Partition() = default;
    /// Validates: every part positive, weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int> &vec() const noexcept { return parts_; }

    int size() const noexcept { return n_; }
    int height() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based row length; 0 past the last row.
    int row(int r) const noexcept {
        return r >= 1 && r <= height() ? parts_[r - 1] : 0;
    }

    bool contains(Node node) const noexcept {
        return node.col >= 1 && node.col <= row(node.row);
    }

    friend bool operator==(const Partition &a, const Partition &b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition &a,
                                            const Partition &b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Parses "8,2", "4^3,1^2", or "[]" / "" for the empty partition.
Partition parse_partition(std::string_view text);

/// Plain comma form, "[]" for the empty partition.
std::string format_partition(const Partition &lambda);

/// Exponent form "4^3,1^2"; multiplicity 1 is written bare.
std::string format_partition_exponent(const Partition &lambda);

std::ostream &operator<<(std::ostream &os, const Partition &lambda);

bool is_p_regular(const Partition &lambda, Prime p);

Partition conjugate(const Partition &lambda);

/// Number of cells of each residue, indexed 0..p-1.
struct ResidueContent {
    std::vector<int> counts;

    int total() const;
    friend bool operator==(const ResidueContent &,
                           const ResidueContent &) = default;
};

ResidueContent residue_content(const Partition &lambda, Prime p);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
/// Throws EmptyPartition for the empty shape.
std::uint64_t specht_dimension(const Partition &lambda);

/// Single-consumer stream of the partitions of n in descending lexicographic
/// order, optionally restricted to p-regular ones.
class PartitionStream {
public:
    explicit PartitionStream(int n);
    PartitionStream(int n, Prime p, bool regular_only);

    std::optional<Partition> next();

private:
    bool advance();

    std::vector<int> current_;
    int n_;
    std::optional<Prime> filter_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_partitions(int n, Prime p, bool regular_only);

} // namespace modrep
