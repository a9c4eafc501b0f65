#include "modrep/an_classify.hpp"

#include "modrep/branching.hpp"
#include "modrep/mullineux.hpp"

namespace modrep {

char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

std::string AnLabel::to_string() const {
    if (split())
        return "E^(" + format_partition(partition_) + ")_" + to_char(*sign_);
    return "E^(" + format_partition(partition_) + ")";
}

AnLabel make_label(const Partition &lambda, std::optional<Sign> sign, Prime p) {
    if (lambda.empty())
        throw Error(ErrorCode::EmptyPartition, "labels need n >= 1");
    if (!is_p_regular(lambda, p))
        throw Error(ErrorCode::PSingular,
                    format_partition(lambda) + " is not " +
                        std::to_string(p.value()) + "-regular");
    Partition dual = mullineux(lambda, p).image;
    if (dual == lambda) {
        if (!sign)
            throw Error(ErrorCode::SignMissing,
                        format_partition(lambda) +
                            " is Mullineux-fixed; choose E_+ or E_-");
        return AnLabel(AnLabel::Kind::Split, lambda, dual, sign, p);
    }
    if (sign)
        throw Error(ErrorCode::SignOnNonFixed,
                    format_partition(lambda) + " is not Mullineux-fixed (dual " +
                        format_partition(dual) + ")");
    if (lambda < dual)
        return AnLabel(AnLabel::Kind::NonSplit, dual, lambda, std::nullopt, p);
    return AnLabel(AnLabel::Kind::NonSplit, lambda, dual, std::nullopt, p);
}

bool is_dimension_one(const AnLabel &label) {
    if (label.split())
        return label.n() <= 4;
    return label.partition() == canonical_label(Partition{label.n()}, label.p());
}

Partition nu_of(const Partition &lambda) {
    if (lambda.empty())
        throw Error(ErrorCode::EmptyPartition, "nu_of needs a nonempty partition");
    std::vector<int> parts = lambda.vec();
    --parts.front();
    if (parts.size() > 1 ? parts[0] < parts[1] : parts[0] == 0)
        throw Error(ErrorCode::InternalInconsistency,
                    "removing (1," + std::to_string(lambda.row(1)) + ") from " +
                        format_partition(lambda) +
                        " does not leave a partition");
    parts.push_back(1);
    return Partition(std::move(parts));
}

const char *to_string(ReasonCode code) {
    switch (code) {
    case ReasonCode::BothNonSplit: return "BothNonSplit";
    case ReasonCode::DoubleSplit: return "DoubleSplit";
    case ReasonCode::NDivisibleByP: return "NDivisibleByP";
    case ReasonCode::SplitNotJS: return "SplitNotJS";
    case ReasonCode::PartnerNotNaturalLabel: return "PartnerNotNaturalLabel";
    }
    return "Unknown";
}

ClassificationOutcome classify_tensor(const AnLabel &d1, const AnLabel &d2) {
    if (d1.n() != d2.n() || d1.p() != d2.p())
        throw Error(ErrorCode::MismatchedLabels,
                    d1.to_string() + " and " + d2.to_string() +
                        " belong to different groups or characteristics");
    if (d1.p().value() != 5)
        throw Error(ErrorCode::UnsupportedCharacteristic,
                    "tensor classification is implemented for p = 5 only");
    for (const AnLabel *d : {&d1, &d2})
        if (is_dimension_one(*d))
            throw Error(ErrorCode::DimensionOneFactor,
                        d->to_string() + " is one-dimensional");

    auto no = [](ReasonCode r) {
        return ClassificationOutcome{false, std::nullopt, r};
    };
    if (!d1.split() && !d2.split())
        return no(ReasonCode::BothNonSplit);
    if (d1.split() && d2.split())
        return no(ReasonCode::DoubleSplit);

    const AnLabel &split = d1.split() ? d1 : d2;
    const AnLabel &other = d1.split() ? d2 : d1;
    const int n = split.n();
    const Prime p = split.p();
    if (n % p.value() == 0)
        return no(ReasonCode::NDivisibleByP);
    if (!is_js(split.partition(), p))
        return no(ReasonCode::SplitNotJS);
    if (other.partition() != canonical_label(Partition{n - 1, 1}, p))
        return no(ReasonCode::PartnerNotNaturalLabel);

    Partition nu = nu_of(split.partition());
    if (!is_p_regular(nu, p) || mullineux(nu, p).image == nu)
        throw Error(ErrorCode::InternalInconsistency,
                    "nu = " + format_partition(nu) +
                        " is not a non-split label");
    return {true, std::move(nu), std::nullopt};
}

std::vector<AnLabel> all_labels(int n, Prime p) {
    std::vector<AnLabel> out;
    if (n < 1)
        return out;
    for (const auto &lambda : enumerate_partitions(n, p, true)) {
        Partition dual = mullineux(lambda, p).image;
        if (dual == lambda) {
            out.push_back(make_label(lambda, Sign::Plus, p));
            out.push_back(make_label(lambda, Sign::Minus, p));
        } else if (dual < lambda) {
            out.push_back(make_label(lambda, std::nullopt, p));
        }
    }
    return out;
}

} // namespace modrep
