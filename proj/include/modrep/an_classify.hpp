#pragma once

#include <optional>
#include <string>

#include "modrep/partition.hpp"

namespace modrep {

enum class Sign { Plus, Minus };

char to_char(Sign s);

/// Label of an irreducible representation of the alternating group A_n in
/// characteristic p.
///
/// NonSplit labels E^lambda = E^{lambda^M} store the lexicographically larger
/// member of the pair {lambda, lambda^M}; Split labels E^lambda_+/- need
/// lambda = lambda^M and carry a sign.
class AnLabel {
public:
    enum class Kind { NonSplit, Split };

    Kind kind() const noexcept { return kind_; }
    bool split() const noexcept { return kind_ == Kind::Split; }
    const Partition &partition() const noexcept { return partition_; }
    /// lambda^M; equals partition() for split labels.
    const Partition &partner() const noexcept { return partner_; }
    std::optional<Sign> sign() const noexcept { return sign_; }
    int n() const noexcept { return partition_.size(); }
    Prime p() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const AnLabel &, const AnLabel &) = default;

private:
    friend AnLabel make_label(const Partition &, std::optional<Sign>, Prime);
    AnLabel(Kind kind, Partition partition, Partition partner,
            std::optional<Sign> sign, Prime p)
        : kind_(kind), partition_(std::move(partition)),
          partner_(std::move(partner)), sign_(sign), p_(p) {}

    Kind kind_;
    Partition partition_;
    Partition partner_;
    std::optional<Sign> sign_;
    Prime p_;
};

/// Throws SignOnNonFixed / SignMissing when the sign does not match the
/// fixed-point status of lambda, PSingular / EmptyPartition otherwise.
AnLabel make_label(const Partition &lambda, std::optional<Sign> sign, Prime p);

bool is_dimension_one(const AnLabel &label);

/// Removes the top removable node (1, lambda_1) and adds the bottom addable
/// node (h+1, 1). Throws InternalInconsistency if the result would not be
/// weakly decreasing, EmptyPartition for the empty partition.
Partition nu_of(const Partition &lambda);

enum class ReasonCode {
    BothNonSplit,
    DoubleSplit,
    NDivisibleByP,
    SplitNotJS,
    PartnerNotNaturalLabel,
};

const char *to_string(ReasonCode code);

struct ClassificationOutcome {
    bool irreducible = false;
    /// Set when irreducible: the tensor product is E^nu.
    std::optional<Partition> nu;
    /// Set when not irreducible.
    std::optional<ReasonCode> reason;
};

/// Decides irreducibility of E_1 (x) E_2 for A_n at p = 5.
///
/// Errors: MismatchedLabels (different n or p), UnsupportedCharacteristic
/// (p != 5), DimensionOneFactor (either factor is one-dimensional).
ClassificationOutcome classify_tensor(const AnLabel &d1, const AnLabel &d2);

/// Every label for A_n at p: non-split pairs once, split ones with both signs.
std::vector<AnLabel> all_labels(int n, Prime p);

} // namespace modrep
