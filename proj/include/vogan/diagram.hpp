#ifndef VOGAN_DIAGRAM_HPP
#define VOGAN_DIAGRAM_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vogan/rootsys.hpp"

namespace vogan {

/// A weighted Vogan diagram (D, theta, J, w): a Dynkin diagram, an
/// order-<=2 diagram automorphism, a set of painted theta-fixed nodes and
/// theta-symmetric node weights in {0,1,2}.
struct WeightedVoganDiagram {
    DynkinDiagram diagram;
    Involution theta;
    std::vector<int> painted;  // sorted 0-based node indices
    std::vector<int> weights;

    int rank() const { return diagram.rank(); }
    bool is_painted(int node) const;

    friend bool operator==(const WeightedVoganDiagram&, const WeightedVoganDiagram&) = default;
};

/// Checks every structural invariant and returns the full list of
/// violations; an empty list means the diagram is valid. Checked:
/// theta is a Cartan-preserving permutation of order <= 2, painted nodes
/// are theta-fixed, weights lie in {0,1,2} and are theta-symmetric.
std::vector<std::string> validate(const WeightedVoganDiagram& d);

/// Builds and validates; throws std::invalid_argument listing all
/// violations if any. Painted indices may be given in any order.
WeightedVoganDiagram make_diagram(SimpleType type, Involution theta,
                                  std::vector<int> painted, std::vector<int> weights);

/// Syntax error in the one-line diagram grammar; column is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Parses the one-line form
///   <TYPE> theta=<id|i1,...,in> J=<comma-list-or-empty> w=<comma-list>
/// with 1-based node indices. Throws ParseError for syntax errors (with
/// the offending column) and std::invalid_argument for semantic ones.
WeightedVoganDiagram parse_diagram(std::string_view text);

/// Canonical one-line form; parse_diagram(render_text(d)) == d.
std::string render_text(const WeightedVoganDiagram& d);

/// Multi-line listing: one line per node with paint, weight, bonds and
/// theta orbit.
std::string render_ascii(const WeightedVoganDiagram& d);

/// Graphviz rendering with the usual drawing conventions: painted
/// nodes filled, weights as external labels, 2-orbits as dashed
/// double-headed edges, multiple bonds labelled and arrowed towards the
/// short node.
std::string render_dot(const WeightedVoganDiagram& d);

/// {"type": "...", "theta": [1-based images], "painted": [...], "weights": [...]}
nlohmann::json diagram_to_json(const WeightedVoganDiagram& d);
WeightedVoganDiagram diagram_from_json(const nlohmann::json& j);

/// The underlying weighted Dynkin diagram: forgets theta and the painted set.
std::pair<DynkinDiagram, std::vector<int>> underlying_weighted_dynkin(const WeightedVoganDiagram& d);

struct VoganDiagram {
    DynkinDiagram diagram;
    Involution theta;
    std::vector<int> painted;

    friend bool operator==(const VoganDiagram&, const VoganDiagram&) = default;
};

/// The underlying Vogan diagram: forgets the weights.
VoganDiagram underlying_vogan(const WeightedVoganDiagram& d);

}  // namespace vogan

#endif
