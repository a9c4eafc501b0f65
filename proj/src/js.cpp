#include "modrep/js.hpp"

#include "modrep/mullineux.hpp"

namespace modrep {

Partition ExponentForm::to_partition() const { return suffix(0); }

Partition ExponentForm::suffix(std::size_t k) const {
    std::vector<int> parts;
    for (std::size_t j = k; j < blocks.size(); ++j)
        parts.insert(parts.end(), blocks[j].multiplicity, blocks[j].value);
    return Partition(std::move(parts));
}

ExponentForm exponent_form(const Partition &lambda) {
    ExponentForm form;
    for (int part : lambda.parts()) {
        if (!form.blocks.empty() && form.blocks.back().value == part)
            ++form.blocks.back().multiplicity;
        else
            form.blocks.push_back({part, 1});
    }
    return form;
}

bool is_js_arith(const Partition &lambda, Prime p) {
    if (lambda.empty())
        throw Error(ErrorCode::EmptyPartition,
                    "is_js_arith needs a nonempty partition");
    if (!is_p_regular(lambda, p))
        throw Error(ErrorCode::PSingular,
                    "is_js_arith needs a " + std::to_string(p.value()) +
                        "-regular partition, got " + format_partition(lambda));
    const auto form = exponent_form(lambda);
    for (std::size_t k = 0; k + 1 < form.blocks.size(); ++k) {
        const auto &cur = form.blocks[k];
        const auto &next = form.blocks[k + 1];
        const int sum = cur.value - next.value + cur.multiplicity +
                        next.multiplicity;
        if (sum % p.value() != 0)
            return false;
    }
    return true;
}

std::vector<Partition> enumerate_js(int n, Prime p, bool mullineux_fixed_only) {
    std::vector<Partition> out;
    if (n < 1)
        return out;
    PartitionStream stream(n, p, true);
    while (auto lambda = stream.next()) {
        if (!is_js_arith(*lambda, p))
            continue;
        if (mullineux_fixed_only && !is_mullineux_fixed(*lambda, p))
            continue;
        out.push_back(std::move(*lambda));
    }
    return out;
}

} // namespace modrep
