#ifndef VOGAN_EQUIV_HPP
#define VOGAN_EQUIV_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "vogan/classify.hpp"
#include "vogan/diagram.hpp"

namespace vogan {

/// Painted nodes of weight 0, in ascending order: exactly the nodes where
/// the repainting move applies.
std::vector<int> applicable_nodes(const WeightedVoganDiagram& d);

/// Bitmask of the nodes whose paint a move at the given node toggles:
/// the theta-fixed neighbours that are not strictly longer than it.
/// Skipping the longer neighbour reproduces the short-node behaviour at
/// the double bonds of B, C and F; the same rule is applied to G2.
/// Skipping 2-orbit neighbours keeps the painted set theta-fixed.
std::uint64_t paint_toggle_mask(const DynkinDiagram& diagram, const Involution& theta, int node);

/// Move (A): repaints the neighbours of a painted weight-0 node the way
/// the simple reflection there re-chooses the positive system. The node
/// itself stays painted; D, theta and the weights are unchanged. The move
/// is involutive. Throws std::invalid_argument if the node is not
/// applicable.
WeightedVoganDiagram reflect_painting(const WeightedVoganDiagram& d, int node);

/// The closure of a diagram under moves at all applicable nodes.
/// Members share D, theta and weights and differ only in the painted set;
/// they are listed ascending in sorted-J lexicographic order, so
/// members.front() is the canonical representative.
struct EquivalenceClass {
    std::vector<WeightedVoganDiagram> members;
    bool noticed = false;

    const WeightedVoganDiagram& canonical() const { return members.front(); }
};

EquivalenceClass equivalence_class(const WeightedVoganDiagram& d);

/// Whether the diagrams share (D, theta, w) and are connected by moves.
bool equivalent(const WeightedVoganDiagram& a, const WeightedVoganDiagram& b);

/// A shortest move sequence (as 0-based node indices) turning a into b,
/// ties broken towards smaller node indices; nullopt if not equivalent.
std::optional<std::vector<int>> move_witness(const WeightedVoganDiagram& a,
                                             const WeightedVoganDiagram& b);

/// Equivalence up to relabelling by a diagram automorphism (applied to
/// theta, J and w alike). Never implied by equivalent(); callers opt in.
bool equivalent_up_to_iso(const WeightedVoganDiagram& a, const WeightedVoganDiagram& b);

/// Property (P): every connected component of the subdiagram induced on
/// the weight-0 nodes carries at most one painted node.
bool has_property_p(const WeightedVoganDiagram& d);

/// The canonical class member with property (P). Every class contains
/// one; if none is found the class data is inconsistent and a
/// std::logic_error is raised rather than papering over it.
WeightedVoganDiagram normalize_p(const WeightedVoganDiagram& d);

/// {"canonical":..., "members":[...], "noticed":..., "property_p_members":[...]}
nlohmann::json class_to_json(const EquivalenceClass& cls);

}  // namespace vogan

#endif
