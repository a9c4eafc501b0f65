#include "modrep/mullineux.hpp"

#include <algorithm>
#include <mutex>

namespace modrep {

namespace {

void require_regular(const Partition &lambda, Prime p, const char *op) {
    if (!is_p_regular(lambda, p))
        throw Error(ErrorCode::PSingular,
                    std::string(op) + " needs a " + std::to_string(p.value()) +
                        "-regular partition, got " + format_partition(lambda));
}

int pick_residue(const std::vector<int> &eps, ResidueChoice choice) {
    const int p = static_cast<int>(eps.size());
    if (choice == ResidueChoice::Smallest) {
        for (int i = 0; i < p; ++i)
            if (eps[i] > 0)
                return i;
    } else {
        for (int i = p - 1; i >= 0; --i)
            if (eps[i] > 0)
                return i;
    }
    return -1;
}

[[noreturn]] void broken(const Partition &lambda, const std::string &why) {
    throw Error(ErrorCode::InternalInconsistency,
                "Mullineux recursion failed at " + format_partition(lambda) +
                    ": " + why);
}

// Every partition nu with `rows` rows and |nu| = |mu| + added such that
// nu/mu lies inside the rim of nu. Candidates for an inverse p-rim step.
void rim_extensions(const Partition &mu, int rows, int added,
                    std::vector<int> &current, std::vector<Partition> &out) {
    const int r = static_cast<int>(current.size()) + 1;
    if (r > rows) {
        if (added == 0)
            out.emplace_back(current);
        return;
    }
    const int lower = std::max(mu.row(r), 1);
    int upper = r == 1 ? mu.row(1) + added : mu.row(r - 1) + 1;
    if (r > 1)
        upper = std::min(upper, current.back());
    for (int len = upper; len >= lower; --len) {
        const int extra = len - mu.row(r);
        if (extra > added)
            continue;
        current.push_back(len);
        rim_extensions(mu, rows, added - extra, current, out);
        current.pop_back();
    }
}

} // namespace

int MullineuxSymbol::total() const {
    int sum = 0;
    for (const auto &c : columns)
        sum += c.rim_size;
    return sum;
}

RimRemoval remove_p_rim(const Partition &lambda, Prime p) {
    const int h = lambda.height();
    if (h == 0)
        return {};

    // Rim nodes from the top-right end to the bottom-left end.
    std::vector<Node> rim;
    for (int r = 1; r <= h; ++r)
        for (int c = lambda.row(r); c >= std::max(lambda.row(r + 1), 1); --c)
            rim.push_back({r, c});

    std::vector<int> taken(h + 1, 0);
    std::size_t pos = 0;
    int rows_met = 0;
    int last_row_met = 0;
    while (pos < rim.size()) {
        std::size_t end = std::min(pos + static_cast<std::size_t>(p.value()),
                                   rim.size());
        for (std::size_t k = pos; k < end; ++k) {
            ++taken[rim[k].row];
            if (rim[k].row != last_row_met) {
                ++rows_met;
                last_row_met = rim[k].row;
            }
        }
        const int next_row = rim[end - 1].row + 1;
        if (next_row > h)
            break;
        // The next segment starts at the rightmost rim node of next_row.
        pos = end;
        while (pos < rim.size() && rim[pos].row < next_row)
            ++pos;
    }

    std::vector<int> rest;
    int removed = 0;
    for (int r = 1; r <= h; ++r) {
        removed += taken[r];
        if (int len = lambda.row(r) - taken[r]; len > 0)
            rest.push_back(len);
    }
    return {Partition(std::move(rest)), removed, rows_met};
}

MullineuxResult mullineux(const Partition &lambda, Prime p, Orientation o,
                          ResidueChoice choice) {
    require_regular(lambda, p, "mullineux");

    ResidueTrace trace;
    Partition current = lambda;
    while (!current.empty()) {
        const auto eps = classify_nodes(current, p, o).epsilons();
        const int i = pick_residue(eps, choice);
        if (i < 0)
            broken(current, "no normal node");
        auto child = tilde_e(current, i, p, o);
        if (!child || !is_p_regular(*child, p))
            broken(current, "tilde_e left the p-regular partitions");
        trace.residues.push_back(i);
        current = std::move(*child);
    }

    Partition image;
    for (auto it = trace.residues.rbegin(); it != trace.residues.rend(); ++it) {
        auto next = tilde_f(image, p.negate(*it), p, o);
        if (!next || !is_p_regular(*next, p))
            broken(image, "no conormal node of the dual residue");
        image = std::move(*next);
    }
    return {std::move(image), std::move(trace)};
}

MullineuxSymbol mullineux_symbol(const Partition &lambda, Prime p) {
    if (lambda.empty())
        throw Error(ErrorCode::EmptyPartition,
                    "mullineux_symbol needs a nonempty partition");
    require_regular(lambda, p, "mullineux_symbol");

    MullineuxSymbol symbol;
    Partition current = lambda;
    while (!current.empty()) {
        auto step = remove_p_rim(current, p);
        symbol.columns.push_back({step.removed, step.rows_met});
        current = std::move(step.rest);
    }
    return symbol;
}

Partition partition_from_symbol(const MullineuxSymbol &symbol, Prime p) {
    Partition mu;
    for (auto it = symbol.columns.rbegin(); it != symbol.columns.rend(); ++it) {
        if (it->rows < mu.height() || it->rows < 1 || it->rim_size < 1)
            throw Error(ErrorCode::ReconstructionFailure,
                        "symbol column cannot wrap " + format_partition(mu));
        std::vector<Partition> candidates;
        std::vector<int> scratch;
        rim_extensions(mu, it->rows, it->rim_size, scratch, candidates);

        std::vector<Partition> matches;
        for (auto &nu : candidates) {
            if (!is_p_regular(nu, p))
                continue;
            auto step = remove_p_rim(nu, p);
            if (step.rest == mu && step.removed == it->rim_size &&
                step.rows_met == it->rows)
                matches.push_back(std::move(nu));
        }
        if (matches.size() != 1)
            throw Error(ErrorCode::ReconstructionFailure,
                        std::to_string(matches.size()) +
                            " partitions wrap " + format_partition(mu) +
                            " with a p-rim of " +
                            std::to_string(it->rim_size) + " nodes in " +
                            std::to_string(it->rows) + " rows");
        mu = std::move(matches.front());
    }
    return mu;
}

Partition mullineux_via_symbol(const Partition &lambda, Prime p) {
    require_regular(lambda, p, "mullineux_via_symbol");
    if (lambda.empty())
        return lambda;
    MullineuxSymbol dual = mullineux_symbol(lambda, p);
    for (auto &column : dual.columns) {
        const int divisible = column.rim_size % p.value() == 0 ? 0 : 1;
        column.rows = column.rim_size - column.rows + divisible;
    }
    return partition_from_symbol(dual, p);
}

bool is_mullineux_fixed(const Partition &lambda, Prime p, Orientation o) {
    return mullineux(lambda, p, o).image == lambda;
}

Partition canonical_label(const Partition &lambda, Prime p, Orientation o) {
    Partition dual = mullineux(lambda, p, o).image;
    return std::max(lambda, dual);
}

Partition MullineuxCache::image(const Partition &lambda, Prime p,
                                Orientation o) {
    Key key{p.value(), static_cast<int>(o), lambda.vec()};
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    require_regular(lambda, p, "mullineux");

    Partition result;
    if (!lambda.empty()) {
        const auto eps = classify_nodes(lambda, p, o).epsilons();
        const int i = pick_residue(eps, ResidueChoice::Smallest);
        if (i < 0)
            broken(lambda, "no normal node");
        auto child = tilde_e(lambda, i, p, o);
        if (!child || !is_p_regular(*child, p))
            broken(lambda, "tilde_e left the p-regular partitions");
        Partition below = image(*child, p, o);
        auto up = tilde_f(below, p.negate(i), p, o);
        if (!up)
            broken(below, "no conormal node of the dual residue");
        result = std::move(*up);
    }

    std::unique_lock lock(mutex_);
    return memo_.try_emplace(std::move(key), std::move(result)).first->second;
}

std::size_t MullineuxCache::size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

} // namespace modrep
