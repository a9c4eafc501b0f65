#pragma once

#include <map>
#include <shared_mutex>
#include <tuple>
#include <variant>
#include <vector>

#include "modrep/branching.hpp"
#include "modrep/partition.hpp"

namespace modrep {

/// One column of a Mullineux symbol: nodes in the p-rim and rows it meets.
struct SymbolColumn {
    int rim_size = 0;
    int rows = 0;

    friend bool operator==(const SymbolColumn &, const SymbolColumn &) = default;
};

struct MullineuxSymbol {
    std::vector<SymbolColumn> columns;

    int total() const;
    friend bool operator==(const MullineuxSymbol &,
                           const MullineuxSymbol &) = default;
};

/// Residues of the good nodes removed on the way from lambda down to the
/// empty partition, in removal order.
struct ResidueTrace {
    std::vector<int> residues;
};

struct MullineuxResult {
    Partition image;
    std::variant<ResidueTrace, MullineuxSymbol> trace;
};

/// Which residue the recursion peels when several have normal nodes.
enum class ResidueChoice { Smallest, Largest };

/// lambda minus its p-rim.
struct RimRemoval {
    Partition rest;
    int removed = 0;
    int rows_met = 0;
};

RimRemoval remove_p_rim(const Partition &lambda, Prime p);

/// lambda^M via tilde_e / tilde_f: M(lambda) = f_{-i}(M(e_i(lambda))).
/// Throws PSingular for p-singular input and InternalInconsistency when the
/// recursion breaks down (which only happens off the calibrated orientation).
MullineuxResult mullineux(const Partition &lambda, Prime p,
                          Orientation o = kCalibratedOrientation,
                          ResidueChoice choice = ResidueChoice::Smallest);

MullineuxSymbol mullineux_symbol(const Partition &lambda, Prime p);

/// The p-regular partition whose symbol has columns (a_i, a_i - r_i + [p∤a_i]).
Partition mullineux_via_symbol(const Partition &lambda, Prime p);

/// Rebuilds the partition with the given symbol, innermost column first.
Partition partition_from_symbol(const MullineuxSymbol &symbol, Prime p);

bool is_mullineux_fixed(const Partition &lambda, Prime p,
                        Orientation o = kCalibratedOrientation);

/// Lexicographically larger of lambda and lambda^M.
Partition canonical_label(const Partition &lambda, Prime p,
                          Orientation o = kCalibratedOrientation);

/// Memoised Mullineux images. Concurrent readers, exclusive writers; cached
/// values are bit-identical to uncached ones.
class MullineuxCache {
public:
    Partition image(const Partition &lambda, Prime p,
                    Orientation o = kCalibratedOrientation);
    std::size_t size() const;

private:
    using Key = std::tuple<int, int, std::vector<int>>;

    std::map<Key, Partition> memo_;
    mutable std::shared_mutex mutex_;
};

} // namespace modrep
