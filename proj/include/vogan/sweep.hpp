#ifndef VOGAN_SWEEP_HPP
#define VOGAN_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vogan/equiv.hpp"

namespace vogan {

struct SweepOptions {
    int max_rank = 8;           // refuse larger sweeps; VOGAN_MAX_RANK overrides in the CLI
    bool full_members = false;  // retain all members per class, not just the canonical one
    bool verify_members = false;  // recompute the noticed verdict on every member
    bool up_to_iso = false;     // deduplicate classes under diagram automorphisms
    int threads = 0;            // 0 = one worker per hardware thread
};

/// One equivalence class of a sweep, stored compactly: the diagram and
/// theta live once in the Catalog; a class keeps its weight slice, its
/// canonical painted set and the noticed counts. Full diagrams come from
/// Catalog::diagram_of.
struct CatalogClass {
    std::vector<int> weights;
    std::vector<int> painted;  // canonical member, sorted-J lexicographic minimum
    std::uint64_t size = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool noticed = false;
    std::vector<std::vector<int>> members;  // painted sets, only with full_members
};

struct CatalogStats {
    std::uint64_t diagrams = 0;
    std::uint64_t classes = 0;
    std::uint64_t noticed_classes = 0;
};

struct Catalog {
    SimpleType type;
    Involution theta;
    CatalogStats stats;
    std::vector<CatalogClass> classes;
    std::uint64_t verify_failures = 0;  // members whose verdict disagreed (verify_members)

    WeightedVoganDiagram diagram_of(const CatalogClass& cls, std::vector<int> painted) const;
    WeightedVoganDiagram canonical_of(const CatalogClass& cls) const;
};

/// Number of weighted Vogan diagrams for (type, theta):
/// 2^(#fixed nodes) * 3^(#theta-orbits).
std::uint64_t diagram_count(const DynkinDiagram& diagram, const Involution& theta);

/// Visits every valid (J, w) combination exactly once, in a fixed order:
/// the theta-symmetric weight vectors are enumerated as a base-3 counter
/// over orbits (last orbit fastest), and within each weight slice the
/// painted subsets of the fixed nodes in increasing bitmask order.
void for_each_diagram(const DynkinDiagram& diagram, const Involution& theta,
                      const std::function<void(const WeightedVoganDiagram&)>& visit);

std::vector<WeightedVoganDiagram> enumerate_diagrams(SimpleType type, const Involution& theta);

/// Partitions the full enumeration into move-equivalence classes and
/// attaches the noticed counts of the canonical member to each.
/// Weight slices are independent and processed in parallel; the catalog
/// order is by weight slice, then canonical painted set, and is identical
/// for any thread count.
Catalog classify_all(SimpleType type, const Involution& theta, const SweepOptions& options = {});

enum class ExportFormat { json, text };

/// Deterministic catalog document. Text: one line per class,
///   <canonical> | size=<k> | noticed=<bool> | lhs=<a> rhs=<b>
/// JSON: {"type":..., "theta":..., "stats":..., "classes":[...]}.
std::string export_catalog(const Catalog& catalog, ExportFormat format);

nlohmann::json catalog_to_json(const Catalog& catalog);

}  // namespace vogan

#endif
