#ifndef VOGAN_ROOTSYS_HPP
#define VOGAN_ROOTSYS_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vogan {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple finite type, e.g. B5 or E7.
struct SimpleType {
    Family family;
    int rank;

    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

std::string to_string(SimpleType type);

/// Parses "B5", "E7", ... Throws std::invalid_argument on malformed input
/// or a rank outside the bounds of the family.
SimpleType parse_type(std::string_view text);

/// Throws std::invalid_argument naming the violated bound if the rank is
/// not admissible for the family (A: >=1, B: >=2, C: >=3, D: >=4,
/// E: 6..8, F: 4, G: 2).
void check_rank(SimpleType type);

/// A positive root, stored as its vector of simple-root coefficients.
struct Root {
    std::vector<int> coeffs;

    /// Sum of the coefficients.
    int length() const;

    friend bool operator==(const Root&, const Root&) = default;
};

/// Canonical root order: graded by length, then lexicographic on the
/// coefficient vector. All set-valued outputs of the library list roots
/// in this order.
bool root_less(const Root& a, const Root& b);

/// "a2+2a3" style rendering with 1-based node numbers.
std::string to_string(const Root& r);

/// A simple Dynkin diagram with its Cartan matrix under the fixed node
/// numbering. cartan[i][j] is the pairing of the j-th simple root against
/// the i-th coroot, so a row of a short node carries the -2/-3 entry.
struct DynkinDiagram {
    SimpleType type;
    std::vector<std::vector<int>> cartan;
    std::vector<int> norm2;  // relative squared root lengths per node

    int rank() const { return static_cast<int>(cartan.size()); }
    bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
    const std::vector<int>& neighbors(int i) const { return adj[i]; }
    /// Bond multiplicity (1, 2 or 3); 0 if the nodes are not adjacent.
    int bond(int i, int j) const { return cartan[i][j] * cartan[j][i]; }
    /// Whether node i is strictly longer than node j.
    bool longer(int i, int j) const { return norm2[i] > norm2[j]; }

    std::vector<std::vector<int>> adj;  // filled by cartan_matrix

    friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;
};

/// Builds the Cartan matrix of the given type under the fixed numbering:
/// Bourbaki for A, D, E, G; B_n with node n short; C_n with node n long;
/// F_4 as 1-2=>3-4 with nodes 1,2 short. Throws on invalid rank.
DynkinDiagram cartan_matrix(SimpleType type);

/// All positive roots, each exactly once, in canonical root order.
/// Generated by upward closure from the simple roots using Cartan-integer
/// root strings; exact integer arithmetic throughout.
std::vector<Root> positive_roots(const DynkinDiagram& diagram);

/// Number of positive roots without generating them.
std::size_t positive_root_count(SimpleType type);

inline int root_length(const Root& r) { return r.length(); }

/// An order-<=2 diagram automorphism as a node permutation (0-based
/// internally; textual interfaces are 1-based).
struct Involution {
    std::vector<int> image;

    int operator()(int i) const { return image[i]; }
    int rank() const { return static_cast<int>(image.size()); }
    bool is_identity() const;

    friend bool operator==(const Involution&, const Involution&) = default;
};

Involution identity_involution(int rank);

/// All node permutations of order <= 2 preserving the Cartan matrix,
/// identity first, then in lexicographic order of the image vector.
/// Found by brute force over all permutations (rank <= 8 keeps this cheap).
std::vector<Involution> diagram_involutions(const DynkinDiagram& diagram);

/// All Cartan-preserving node permutations of any order (S3 for D4,
/// otherwise the same set as diagram_involutions).
std::vector<std::vector<int>> diagram_automorphisms(const DynkinDiagram& diagram);

}  // namespace vogan

#endif
