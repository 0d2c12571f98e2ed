#ifndef VOGAN_CLASSIFY_HPP
#define VOGAN_CLASSIFY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vogan/diagram.hpp"

namespace vogan {

/// Applies theta to a root by permuting its coefficients. The image is
/// again a positive root of the same system. Throws on rank mismatch.
Root theta_on_root(const Involution& theta, const Root& root);

/// Weight of a root: sum of n_i * w_i.
int root_weight(const WeightedVoganDiagram& d, const Root& root);

/// Painted length of a root: sum of n_i over painted nodes i.
int painted_length(const WeightedVoganDiagram& d, const Root& root);

/// The least gamma in root order with gamma + theta(gamma) == root, if one
/// exists. Such decompositions occur only in type A with a fixed-point-free
/// theta; everywhere else this returns nullopt for every root.
std::optional<Root> theta_sum_witness(const WeightedVoganDiagram& d, const Root& root);

/// Full per-root classification data.
struct RootClass {
    Root root;
    int weight;
    int painted_length;
    bool fixed;                     // theta(root) == root
    std::optional<Root> theta_sum;  // least gamma with gamma + theta(gamma) == root
};

RootClass classify_root(const WeightedVoganDiagram& d, const Root& root);

/// The partition of the weight-j positive roots: theta-fixed roots split
/// into compact (even painted length, not a theta-sum) and noncompact
/// (odd painted length, or any gamma + theta(gamma) root); complex roots
/// grouped into unordered pairs {alpha, theta(alpha)}.
struct WeightPartition {
    int weight = 0;
    std::vector<Root> compact;
    std::vector<Root> noncompact;
    std::vector<std::pair<Root, Root>> complex_pairs;  // first < second in root order

    std::size_t fixed_count() const { return compact.size() + noncompact.size(); }
};

WeightPartition weight_partition(const WeightedVoganDiagram& d, int weight);

/// The noticed count identity
///   #fixed nodes + #2-orbits + 2|compact(0)| + 2|pairs(0)|
///     = |noncompact(2)| + |pairs(2)|
/// together with the witness partitions at weights 0 and 2.
struct NoticedReport {
    long long lhs = 0;
    long long rhs = 0;
    bool noticed = false;
    WeightPartition weight0;
    WeightPartition weight2;
};

NoticedReport noticed_report(const WeightedVoganDiagram& d);

/// {"lhs":..,"rhs":..,"noticed":..} plus the four witness sets in
/// canonical root order (pairs as [alpha, theta(alpha)]).
nlohmann::json report_to_json(const NoticedReport& r);

/// The least weight-2 root through the given node that is noncompact in
/// the above sense (complex, or fixed with odd painted length, or a
/// theta-sum); nullopt if the node has none.
std::optional<Root> node_support(const WeightedVoganDiagram& d, int node);

/// Whether every node carries a weight-2 noncompact root, i.e. no proper
/// theta-stable Levi subdiagram already supports all of them.
bool minimality_check(const WeightedVoganDiagram& d);

/// Two conditions every noticed diagram satisfies (necessary, not
/// sufficient): the weight-1 compact and noncompact sets have equal size,
/// and the minimality check passes.
struct NecessaryConditions {
    bool weight1_balanced = false;
    bool minimal = false;
};

NecessaryConditions necessary_conditions(const WeightedVoganDiagram& d);

}  // namespace vogan

#endif
