#include "modrep/branching.hpp"

#include <algorithm>
#include <numeric>

namespace modrep {

namespace {

enum class Kind { Addable, Removable };

struct SignatureEntry {
    Node node;
    Kind kind;
};

void require_regular(const Partition &lambda, Prime p, const char *op) {
    if (!is_p_regular(lambda, p))
        throw Error(ErrorCode::PSingular,
                    std::string(op) + " needs a " + std::to_string(p.value()) +
                        "-regular partition, got " + format_partition(lambda));
}

void require_residue(int i, Prime p) {
    if (i < 0 || i >= p.value())
        throw Error(ErrorCode::MalformedPartition,
                    "residue " + std::to_string(i) + " outside [0," +
                        std::to_string(p.value()) + ")");
}

} // namespace

const char *to_string(Orientation o) {
    return o == Orientation::BottomUp ? "bottom-up" : "top-down";
}

std::vector<int> NodeClassification::epsilons() const {
    std::vector<int> out;
    for (int i = 0; i < p.value(); ++i)
        out.push_back(epsilon(i));
    return out;
}

std::vector<int> NodeClassification::phis() const {
    std::vector<int> out;
    for (int i = 0; i < p.value(); ++i)
        out.push_back(phi(i));
    return out;
}

int NodeClassification::total_epsilon() const {
    auto e = epsilons();
    return std::accumulate(e.begin(), e.end(), 0);
}

int NodeClassification::total_phi() const {
    auto f = phis();
    return std::accumulate(f.begin(), f.end(), 0);
}

std::vector<Node> removable_nodes(const Partition &lambda) {
    std::vector<Node> out;
    for (int r = 1; r <= lambda.height(); ++r)
        if (lambda.row(r) > lambda.row(r + 1))
            out.push_back({r, lambda.row(r)});
    return out;
}

std::vector<Node> addable_nodes(const Partition &lambda) {
    std::vector<Node> out;
    for (int r = 1; r <= lambda.height() + 1; ++r)
        if (r == 1 || lambda.row(r - 1) > lambda.row(r))
            out.push_back({r, lambda.row(r) + 1});
    return out;
}

Partition remove_node(const Partition &lambda, Node node) {
    std::vector<int> parts = lambda.vec();
    if (node.row < 1 || node.row > lambda.height() ||
        lambda.row(node.row) != node.col)
        throw Error(ErrorCode::InternalInconsistency,
                    "node is not at the end of its row");
    if (--parts[node.row - 1] == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

Partition add_node(const Partition &lambda, Node node) {
    std::vector<int> parts = lambda.vec();
    if (node.row == lambda.height() + 1)
        parts.push_back(0);
    if (node.row < 1 || node.row > static_cast<int>(parts.size()) ||
        parts[node.row - 1] + 1 != node.col)
        throw Error(ErrorCode::InternalInconsistency,
                    "node is not addable at the end of its row");
    ++parts[node.row - 1];
    return Partition(std::move(parts));
}

NodeClassification classify_nodes(const Partition &lambda, Prime p,
                                  Orientation o) {
    NodeClassification out{p, std::vector<ResidueNodes>(p.value())};

    std::vector<std::vector<SignatureEntry>> words(p.value());
    for (Node a : addable_nodes(lambda)) {
        out.residues[residue_of(a, p)].addable.push_back(a);
        words[residue_of(a, p)].push_back({a, Kind::Addable});
    }
    for (Node r : removable_nodes(lambda)) {
        out.residues[residue_of(r, p)].removable.push_back(r);
        words[residue_of(r, p)].push_back({r, Kind::Removable});
    }

    for (int i = 0; i < p.value(); ++i) {
        auto &word = words[i];
        // An addable and a removable node in the same row differ in residue
        // by one, so rows alone order the word.
        std::sort(word.begin(), word.end(),
                  [o](const SignatureEntry &a, const SignatureEntry &b) {
                      return o == Orientation::BottomUp
                                 ? a.node.row > b.node.row
                                 : a.node.row < b.node.row;
                  });
        std::vector<SignatureEntry> reduced;
        for (const auto &entry : word) {
            if (entry.kind == Kind::Addable && !reduced.empty() &&
                reduced.back().kind == Kind::Removable)
                reduced.pop_back();
            else
                reduced.push_back(entry);
        }
        auto &res = out.residues[i];
        for (const auto &entry : reduced)
            (entry.kind == Kind::Removable ? res.normal : res.conormal)
                .push_back(entry.node);
        std::sort(res.normal.begin(), res.normal.end());
        std::sort(res.conormal.begin(), res.conormal.end());
    }
    return out;
}

std::optional<Partition> tilde_e(const Partition &lambda, int i, Prime p,
                                 Orientation o) {
    require_regular(lambda, p, "tilde_e");
    require_residue(i, p);
    const auto nodes = classify_nodes(lambda, p, o);
    const auto &normal = nodes.residues[i].normal;
    if (normal.empty())
        return std::nullopt;
    return remove_node(lambda, normal.back());
}

std::optional<Partition> tilde_f(const Partition &lambda, int i, Prime p,
                                 Orientation o) {
    require_regular(lambda, p, "tilde_f");
    require_residue(i, p);
    const auto nodes = classify_nodes(lambda, p, o);
    const auto &conormal = nodes.residues[i].conormal;
    if (conormal.empty())
        return std::nullopt;
    return add_node(lambda, conormal.front());
}

std::optional<Partition> tilde_e_pow(const Partition &lambda, int i, int r,
                                     Prime p, Orientation o) {
    if (r < 0)
        throw Error(ErrorCode::NegativeExponent,
                    "tilde_e power " + std::to_string(r));
    std::optional<Partition> cur = lambda;
    for (int k = 0; k < r && cur; ++k)
        cur = tilde_e(*cur, i, p, o);
    return cur;
}

std::optional<Partition> tilde_f_pow(const Partition &lambda, int i, int r,
                                     Prime p, Orientation o) {
    if (r < 0)
        throw Error(ErrorCode::NegativeExponent,
                    "tilde_f power " + std::to_string(r));
    std::optional<Partition> cur = lambda;
    for (int k = 0; k < r && cur; ++k) {
        // A p-singular intermediate only happens off the calibrated
        // convention; report it as absent rather than as a caller error.
        if (!is_p_regular(*cur, p))
            return std::nullopt;
        cur = tilde_f(*cur, i, p, o);
    }
    return cur;
}

int restriction_end_dim(const Partition &lambda, Prime p, Orientation o) {
    require_regular(lambda, p, "restriction_end_dim");
    return classify_nodes(lambda, p, o).total_epsilon();
}

int induction_end_dim(const Partition &lambda, Prime p, Orientation o) {
    require_regular(lambda, p, "induction_end_dim");
    return classify_nodes(lambda, p, o).total_phi();
}

int l13_lower_bound(const Partition &lambda, Prime p, Orientation o) {
    require_regular(lambda, p, "l13_lower_bound");
    const auto eps = classify_nodes(lambda, p, o).epsilons();
    int bound = 0;
    for (int e : eps)
        bound += e * (e - 1);
    for (int j = 0; j < p.value(); ++j) {
        if (eps[j] == 0)
            continue;
        const auto child = tilde_e(lambda, j, p, o);
        if (!child || !is_p_regular(*child, p))
            continue;
        const auto child_eps = classify_nodes(*child, p, o).epsilons();
        for (int i = 0; i < p.value(); ++i)
            if (i != j)
                bound += child_eps[i];
    }
    return bound;
}

bool is_js(const Partition &lambda, Prime p, Orientation o) {
    if (lambda.empty())
        throw Error(ErrorCode::EmptyPartition, "is_js needs a nonempty partition");
    require_regular(lambda, p, "is_js");
    return classify_nodes(lambda, p, o).total_epsilon() == 1;
}

} // namespace modrep
