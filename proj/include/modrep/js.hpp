#pragma once

#include <vector>

#include "modrep/partition.hpp"

namespace modrep {

/// (a_1^{b_1}, ..., a_h^{b_h}) with a_1 > ... > a_h >= 1.
struct ExponentForm {
    struct Block {
        int value;
        int multiplicity;
        friend bool operator==(const Block &, const Block &) = default;
    };
    std::vector<Block> blocks;

    Partition to_partition() const;
    /// Blocks k..end as a partition.
    Partition suffix(std::size_t k) const;
};

ExponentForm exponent_form(const Partition &lambda);

/// JS test by the congruence a_k - a_{k+1} + b_k + b_{k+1} = 0 mod p on
/// consecutive blocks. Throws EmptyPartition / PSingular.
bool is_js_arith(const Partition &lambda, Prime p);

/// p-regular JS partitions of n, optionally only the Mullineux-fixed ones,
/// in descending lexicographic order.
std::vector<Partition> enumerate_js(int n, Prime p, bool mullineux_fixed_only);

} // namespace modrep
