#pragma once

#include <optional>
#include <vector>

#include "modrep/partition.hpp"

namespace modrep {

/// Order in which the i-signature word is read before adjacent
/// (removable, addable) pairs are cancelled.
///
/// BottomUp reads from the bottom row towards the first row, so an addable
/// node cancels a removable node of the same residue lying below it. That is
/// the calibrated convention; TopDown is the mirror image and survives only
/// for the calibration experiment.
enum class Orientation { TopDown, BottomUp };

inline constexpr Orientation kCalibratedOrientation = Orientation::BottomUp;

const char *to_string(Orientation o);

/// Addable/removable nodes of a single residue, each listed top to bottom.
struct ResidueNodes {
    std::vector<Node> addable;
    std::vector<Node> removable;
    std::vector<Node> normal;
    std::vector<Node> conormal;
};

struct NodeClassification {
    Prime p{3};
    std::vector<ResidueNodes> residues;

    int epsilon(int i) const {
        return static_cast<int>(residues.at(i).normal.size());
    }
    int phi(int i) const {
        return static_cast<int>(residues.at(i).conormal.size());
    }
    std::vector<int> epsilons() const;
    std::vector<int> phis() const;
    int total_epsilon() const;
    int total_phi() const;
};

/// Every removable node of lambda, top to bottom.
std::vector<Node> removable_nodes(const Partition &lambda);
/// Every addable node of lambda, top to bottom.
std::vector<Node> addable_nodes(const Partition &lambda);

Partition remove_node(const Partition &lambda, Node node);
Partition add_node(const Partition &lambda, Node node);

/// Accepts p-singular partitions as well.
NodeClassification classify_nodes(const Partition &lambda, Prime p,
                                  Orientation o = kCalibratedOrientation);

/// Removes the bottom normal i-node. nullopt when epsilon_i = 0.
/// Throws PSingular for p-singular input.
std::optional<Partition> tilde_e(const Partition &lambda, int i, Prime p,
                                 Orientation o = kCalibratedOrientation);

/// Adds the top conormal i-node. nullopt when phi_i = 0.
std::optional<Partition> tilde_f(const Partition &lambda, int i, Prime p,
                                 Orientation o = kCalibratedOrientation);

std::optional<Partition> tilde_e_pow(const Partition &lambda, int i, int r,
                                     Prime p,
                                     Orientation o = kCalibratedOrientation);
std::optional<Partition> tilde_f_pow(const Partition &lambda, int i, int r,
                                     Prime p,
                                     Orientation o = kCalibratedOrientation);

// dim End of the restriction to (resp. induction from) the neighbouring
// symmetric group: sum of epsilons (resp. phis).
int restriction_end_dim(const Partition &lambda, Prime p,
                        Orientation o = kCalibratedOrientation);
int induction_end_dim(const Partition &lambda, Prime p,
                      Orientation o = kCalibratedOrientation);

/// sum_i e_i(e_i - 1) + sum_{j: e_j > 0} sum_{i != j} e_i(tilde_e_j(lambda)),
/// a lower bound for dim End over the Young subgroup S_{n-2} x S_2.
int l13_lower_bound(const Partition &lambda, Prime p,
                    Orientation o = kCalibratedOrientation);

/// Exactly one normal node. Throws EmptyPartition / PSingular.
bool is_js(const Partition &lambda, Prime p,
           Orientation o = kCalibratedOrientation);

} // namespace modrep
