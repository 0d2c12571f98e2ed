#include "vogan/sweep.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace vogan {

namespace {

struct OrbitLayout {
    std::vector<int> fixed;                      // theta-fixed nodes, ascending
    std::vector<std::pair<int, int>> orbits;     // (node, theta(node)), node <= theta(node)
};

OrbitLayout orbit_layout(const Involution& theta) {
    OrbitLayout layout;
    for (int i = 0; i < theta.rank(); ++i) {
        const int t = theta.image[i];
        if (t == i) {
            layout.fixed.push_back(i);
            layout.orbits.emplace_back(i, i);
        } else if (i < t) {
            layout.orbits.emplace_back(i, t);
        }
    }
    return layout;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    while (exp--) out *= base;
    return out;
}

std::vector<int> weights_for_slice(const OrbitLayout& layout, int rank, std::uint64_t slice) {
    std::vector<int> w(rank, 0);
    for (auto it = layout.orbits.rbegin(); it != layout.orbits.rend(); ++it) {
        const int value = static_cast<int>(slice % 3);
        slice /= 3;
        w[it->first] = value;
        w[it->second] = value;
    }
    return w;
}

std::vector<int> expand_mask(const std::vector<int>& fixed, std::uint32_t compressed) {
    std::vector<int> nodes;
    for (std::size_t b = 0; b < fixed.size(); ++b)
        if (compressed >> b & 1) nodes.push_back(fixed[b]);
    return nodes;
}

void require_involution_of(const DynkinDiagram& diagram, const Involution& theta) {
    const auto involutions = diagram_involutions(diagram);
    if (std::find(involutions.begin(), involutions.end(), theta) == involutions.end())
        throw std::invalid_argument("theta is not an involution of " + to_string(diagram.type));
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

WeightedVoganDiagram Catalog::diagram_of(const CatalogClass& cls,
                                         std::vector<int> painted) const {
    return WeightedVoganDiagram{cartan_matrix(type), theta, std::move(painted), cls.weights};
}

WeightedVoganDiagram Catalog::canonical_of(const CatalogClass& cls) const {
    return diagram_of(cls, cls.painted);
}

std::uint64_t diagram_count(const DynkinDiagram& diagram, const Involution& theta) {
    if (theta.rank() != diagram.rank())
        throw std::invalid_argument("rank mismatch between theta and diagram");
    const auto layout = orbit_layout(theta);
    return pow_u64(2, layout.fixed.size()) * pow_u64(3, layout.orbits.size());
}

void for_each_diagram(const DynkinDiagram& diagram, const Involution& theta,
                      const std::function<void(const WeightedVoganDiagram&)>& visit) {
    require_involution_of(diagram, theta);
    const auto layout = orbit_layout(theta);
    const std::uint64_t slices = pow_u64(3, layout.orbits.size());
    const std::uint32_t subsets = std::uint32_t{1} << layout.fixed.size();

    WeightedVoganDiagram d{diagram, theta, {}, {}};
    for (std::uint64_t slice = 0; slice < slices; ++slice) {
        d.weights = weights_for_slice(layout, diagram.rank(), slice);
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            d.painted = expand_mask(layout.fixed, mask);
            visit(d);
        }
    }
}

std::vector<WeightedVoganDiagram> enumerate_diagrams(SimpleType type, const Involution& theta) {
    std::vector<WeightedVoganDiagram> out;
    for_each_diagram(cartan_matrix(type), theta,
                     [&](const WeightedVoganDiagram& d) { out.push_back(d); });
    return out;
}

namespace {

// Classes of one weight slice, via union-find over the painted subsets of
// the fixed nodes (moves never change the weights).
std::vector<CatalogClass> classify_slice(const DynkinDiagram& diagram, const Involution& theta,
                                         const OrbitLayout& layout,
                                         const std::vector<std::uint32_t>& compressed_toggles,
                                         std::uint64_t slice, const SweepOptions& options,
                                         std::uint64_t* verify_failures) {
    const int rank = diagram.rank();
    const int f = static_cast<int>(layout.fixed.size());
    const std::uint32_t subsets = std::uint32_t{1} << f;
    const std::vector<int> weights = weights_for_slice(layout, rank, slice);

    UnionFind uf(subsets);
    for (std::uint32_t mask = 0; mask < subsets; ++mask)
        for (int b = 0; b < f; ++b)
            if ((mask >> b & 1) && weights[layout.fixed[b]] == 0)
                uf.unite(mask, mask ^ compressed_toggles[b]);

    std::map<int, std::vector<std::uint32_t>> components;
    for (std::uint32_t mask = 0; mask < subsets; ++mask)
        components[uf.find(mask)].push_back(mask);

    WeightedVoganDiagram scratch{diagram, theta, {}, weights};
    std::vector<CatalogClass> classes;
    classes.reserve(components.size());
    for (auto& [component_root, masks] : components) {
        std::vector<std::vector<int>> painted_sets;
        painted_sets.reserve(masks.size());
        for (std::uint32_t mask : masks) painted_sets.push_back(expand_mask(layout.fixed, mask));
        std::sort(painted_sets.begin(), painted_sets.end());

        CatalogClass cls;
        cls.weights = weights;
        cls.painted = painted_sets.front();
        cls.size = painted_sets.size();
        scratch.painted = cls.painted;
        const auto report = noticed_report(scratch);
        cls.lhs = report.lhs;
        cls.rhs = report.rhs;
        cls.noticed = report.noticed;

        if (options.verify_members)
            for (const auto& painted : painted_sets) {
                scratch.painted = painted;
                if (noticed_report(scratch).noticed != cls.noticed) ++*verify_failures;
            }
        if (options.full_members) cls.members = std::move(painted_sets);
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const CatalogClass& a, const CatalogClass& b) { return a.painted < b.painted; });
    return classes;
}

void dedupe_up_to_iso(Catalog& catalog, const DynkinDiagram& diagram) {
    // Map (weights, canonical painted set) -> class position, then keep one
    // class per automorphism orbit: the first one in catalog order.
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> position;
    for (std::size_t k = 0; k < catalog.classes.size(); ++k)
        position.emplace(std::make_pair(catalog.classes[k].weights, catalog.classes[k].painted),
                         k);

    const int n = diagram.rank();
    std::vector<std::vector<int>> commuting;
    for (const auto& p : diagram_automorphisms(diagram)) {
        bool commutes = true;
        for (int i = 0; i < n && commutes; ++i)
            commutes = p[catalog.theta.image[i]] == catalog.theta.image[p[i]];
        if (commutes) commuting.push_back(p);
    }

    std::vector<bool> keep(catalog.classes.size(), true);
    for (std::size_t k = 0; k < catalog.classes.size(); ++k) {
        for (const auto& p : commuting) {
            const auto& cls = catalog.classes[k];
            std::vector<int> weights(n);
            std::vector<int> painted;
            for (int i = 0; i < n; ++i) weights[p[i]] = cls.weights[i];
            for (int node : cls.painted) painted.push_back(p[node]);
            std::sort(painted.begin(), painted.end());
            // the image need not be a canonical painted set; walk its class
            WeightedVoganDiagram image{diagram, catalog.theta, std::move(painted),
                                       std::move(weights)};
            const auto image_canonical = equivalence_class(image).canonical();
            const auto it = position.find({image_canonical.weights, image_canonical.painted});
            if (it != position.end() && it->second < k) {
                keep[k] = false;
                break;
            }
        }
    }
    std::vector<CatalogClass> kept;
    for (std::size_t k = 0; k < catalog.classes.size(); ++k)
        if (keep[k]) kept.push_back(std::move(catalog.classes[k]));
    catalog.classes = std::move(kept);
}

}  // namespace

Catalog classify_all(SimpleType type, const Involution& theta, const SweepOptions& options) {
    if (type.rank > options.max_rank)
        throw std::invalid_argument("sweep of " + to_string(type) +
                                    " exceeds the rank cap of " +
                                    std::to_string(options.max_rank) +
                                    " (set VOGAN_MAX_RANK to raise it)");
    const DynkinDiagram diagram = cartan_matrix(type);
    require_involution_of(diagram, theta);
    const OrbitLayout layout = orbit_layout(theta);
    const std::uint64_t slices = pow_u64(3, layout.orbits.size());

    // toggle masks compressed onto the fixed-node bits
    const int f = static_cast<int>(layout.fixed.size());
    if (f > 31) throw std::invalid_argument("sweeps support at most 31 theta-fixed nodes");
    std::vector<std::uint32_t> compressed_toggles(f, 0);
    for (int b = 0; b < f; ++b) {
        const std::uint64_t full = paint_toggle_mask(diagram, theta, layout.fixed[b]);
        for (int b2 = 0; b2 < f; ++b2)
            if (full >> layout.fixed[b2] & 1) compressed_toggles[b] |= std::uint32_t{1} << b2;
    }

    // prime the shared root cache before the workers fan out
    noticed_report(WeightedVoganDiagram{diagram, theta, {}, std::vector<int>(diagram.rank(), 0)});

    unsigned workers = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, slices));

    struct SliceResult {
        std::vector<CatalogClass> classes;
        std::uint64_t verify_failures = 0;
    };
    const auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        SliceResult result;
        for (std::uint64_t slice = begin; slice < end; ++slice) {
            auto classes = classify_slice(diagram, theta, layout, compressed_toggles, slice,
                                          options, &result.verify_failures);
            std::move(classes.begin(), classes.end(), std::back_inserter(result.classes));
        }
        return result;
    };

    std::vector<SliceResult> results;
    if (workers <= 1) {
        results.push_back(run_range(0, slices));
    } else {
        std::vector<std::future<SliceResult>> futures;
        const std::uint64_t chunk = (slices + workers - 1) / workers;
        for (std::uint64_t begin = 0; begin < slices; begin += chunk)
            futures.push_back(std::async(std::launch::async, run_range, begin,
                                         std::min(begin + chunk, slices)));
        for (auto& fut : futures) results.push_back(fut.get());
    }

    Catalog catalog{type, theta, {}, {}, 0};
    for (auto& result : results) {
        std::move(result.classes.begin(), result.classes.end(),
                  std::back_inserter(catalog.classes));
        catalog.verify_failures += result.verify_failures;
    }

    if (options.up_to_iso) dedupe_up_to_iso(catalog, diagram);

    catalog.stats.diagrams = diagram_count(diagram, theta);
    catalog.stats.classes = catalog.classes.size();
    for (const auto& cls : catalog.classes)
        if (cls.noticed) ++catalog.stats.noticed_classes;
    return catalog;
}

namespace {

nlohmann::json diagram_json_of(const Catalog& catalog, const CatalogClass& cls,
                               const std::vector<int>& painted) {
    nlohmann::json j;
    j["type"] = to_string(catalog.type);
    nlohmann::json theta = nlohmann::json::array();
    for (int v : catalog.theta.image) theta.push_back(v + 1);
    j["theta"] = std::move(theta);
    nlohmann::json painted_json = nlohmann::json::array();
    for (int v : painted) painted_json.push_back(v + 1);
    j["painted"] = std::move(painted_json);
    j["weights"] = cls.weights;
    return j;
}

std::string render_class_line(const Catalog& catalog, const CatalogClass& cls) {
    std::ostringstream out;
    out << to_string(catalog.type) << " theta=";
    if (catalog.theta.is_identity()) {
        out << "id";
    } else {
        for (std::size_t i = 0; i < catalog.theta.image.size(); ++i) {
            if (i) out << ',';
            out << catalog.theta.image[i] + 1;
        }
    }
    out << " J=";
    for (std::size_t i = 0; i < cls.painted.size(); ++i) {
        if (i) out << ',';
        out << cls.painted[i] + 1;
    }
    out << " w=";
    for (std::size_t i = 0; i < cls.weights.size(); ++i) {
        if (i) out << ',';
        out << cls.weights[i];
    }
    return out.str();
}

}  // namespace

nlohmann::json catalog_to_json(const Catalog& catalog) {
    nlohmann::json j;
    j["type"] = to_string(catalog.type);
    nlohmann::json theta = nlohmann::json::array();
    for (int v : catalog.theta.image) theta.push_back(v + 1);
    j["theta"] = std::move(theta);
    j["stats"] = {{"diagrams", catalog.stats.diagrams},
                  {"classes", catalog.stats.classes},
                  {"noticed", catalog.stats.noticed_classes}};
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : catalog.classes) {
        nlohmann::json jc;
        jc["canonical"] = diagram_json_of(catalog, cls, cls.painted);
        jc["size"] = cls.size;
        jc["noticed"] = cls.noticed;
        jc["lhs"] = cls.lhs;
        jc["rhs"] = cls.rhs;
        if (!cls.members.empty()) {
            nlohmann::json members = nlohmann::json::array();
            for (const auto& painted : cls.members)
                members.push_back(diagram_json_of(catalog, cls, painted));
            jc["members"] = std::move(members);
        }
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);
    return j;
}

std::string export_catalog(const Catalog& catalog, ExportFormat format) {
    if (format == ExportFormat::json) return catalog_to_json(catalog).dump() + "\n";

    std::ostringstream out;
    out << "catalog " << to_string(catalog.type) << " theta=";
    if (catalog.theta.is_identity()) {
        out << "id";
    } else {
        for (std::size_t i = 0; i < catalog.theta.image.size(); ++i) {
            if (i) out << ',';
            out << catalog.theta.image[i] + 1;
        }
    }
    out << " diagrams=" << catalog.stats.diagrams << " classes=" << catalog.stats.classes
        << " noticed=" << catalog.stats.noticed_classes << '\n';
    for (const auto& cls : catalog.classes) {
        out << render_class_line(catalog, cls) << " | size=" << cls.size << " | noticed="
            << (cls.noticed ? "true" : "false") << " | lhs=" << cls.lhs << " rhs=" << cls.rhs
            << '\n';
    }
    return out.str();
}

}  // namespace vogan
