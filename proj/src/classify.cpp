#include "vogan/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace vogan {

namespace {

// Everything about (type, theta) that does not depend on paint or weights:
// the root list, each root's theta image and its least theta-sum witness.
// Shared across the many diagrams of a sweep.
struct RootContext {
    std::vector<Root> roots;
    std::map<std::vector<int>, int> index;
    std::vector<int> theta_image;  // root index -> root index
    std::vector<int> theta_sum;    // root index -> least gamma index, or -1
};

RootContext build_context(const DynkinDiagram& diagram, const Involution& theta) {
    RootContext ctx;
    ctx.roots = positive_roots(diagram);
    const int count = static_cast<int>(ctx.roots.size());
    for (int k = 0; k < count; ++k) ctx.index.emplace(ctx.roots[k].coeffs, k);

    ctx.theta_image.resize(count);
    for (int k = 0; k < count; ++k) {
        const Root image = theta_on_root(theta, ctx.roots[k]);
        const auto it = ctx.index.find(image.coeffs);
        if (it == ctx.index.end())
            throw std::logic_error("theta image of a positive root left the root system");
        ctx.theta_image[k] = it->second;
    }

    ctx.theta_sum.assign(count, -1);
    const int n = diagram.rank();
    for (int g = 0; g < count; ++g) {
        std::vector<int> sum(n);
        const auto& a = ctx.roots[g].coeffs;
        const auto& b = ctx.roots[ctx.theta_image[g]].coeffs;
        for (int i = 0; i < n; ++i) sum[i] = a[i] + b[i];
        const auto it = ctx.index.find(sum);
        // g ascends in root order, so the first hit is the least witness
        if (it != ctx.index.end() && ctx.theta_sum[it->second] < 0)
            ctx.theta_sum[it->second] = g;
    }
    return ctx;
}

const RootContext& root_context(const DynkinDiagram& diagram, const Involution& theta) {
    using Key = std::tuple<char, int, std::vector<int>>;
    static std::mutex mutex;
    static std::map<Key, RootContext> cache;
    Key key{static_cast<char>(diagram.type.family), diagram.type.rank, theta.image};
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(std::move(key), build_context(diagram, theta)).first->second;
}

int context_index(const RootContext& ctx, const Root& root) {
    const auto it = ctx.index.find(root.coeffs);
    if (it == ctx.index.end())
        throw std::invalid_argument(to_string(root) + " is not a positive root of the system");
    return it->second;
}

int dot(const std::vector<int>& coeffs, const std::vector<int>& weights) {
    int sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * weights[i];
    return sum;
}

}  // namespace

Root theta_on_root(const Involution& theta, const Root& root) {
    if (theta.image.size() != root.coeffs.size())
        throw std::invalid_argument("rank mismatch between theta and root");
    std::vector<int> out(root.coeffs.size());
    for (std::size_t i = 0; i < root.coeffs.size(); ++i)
        out[theta.image[i]] = root.coeffs[i];
    return Root{std::move(out)};
}

int root_weight(const WeightedVoganDiagram& d, const Root& root) {
    return dot(root.coeffs, d.weights);
}

int painted_length(const WeightedVoganDiagram& d, const Root& root) {
    int sum = 0;
    for (int node : d.painted) sum += root.coeffs[node];
    return sum;
}

std::optional<Root> theta_sum_witness(const WeightedVoganDiagram& d, const Root& root) {
    const auto& ctx = root_context(d.diagram, d.theta);
    const int g = ctx.theta_sum[context_index(ctx, root)];
    if (g < 0) return std::nullopt;
    return ctx.roots[g];
}

RootClass classify_root(const WeightedVoganDiagram& d, const Root& root) {
    const auto& ctx = root_context(d.diagram, d.theta);
    const int k = context_index(ctx, root);
    RootClass rc;
    rc.root = root;
    rc.weight = root_weight(d, root);
    rc.painted_length = painted_length(d, root);
    rc.fixed = ctx.theta_image[k] == k;
    if (ctx.theta_sum[k] >= 0) rc.theta_sum = ctx.roots[ctx.theta_sum[k]];
    return rc;
}

WeightPartition weight_partition(const WeightedVoganDiagram& d, int weight) {
    if (weight < 0) throw std::invalid_argument("weight must be non-negative");
    const auto& ctx = root_context(d.diagram, d.theta);
    WeightPartition part;
    part.weight = weight;
    const int count = static_cast<int>(ctx.roots.size());
    for (int k = 0; k < count; ++k) {
        const Root& root = ctx.roots[k];
        if (dot(root.coeffs, d.weights) != weight) continue;
        const int image = ctx.theta_image[k];
        if (image == k) {
            if (ctx.theta_sum[k] >= 0 || painted_length(d, root) % 2 != 0)
                part.noncompact.push_back(root);
            else
                part.compact.push_back(root);
        } else if (k < image) {
            part.complex_pairs.emplace_back(root, ctx.roots[image]);
        }
    }
    return part;
}

NoticedReport noticed_report(const WeightedVoganDiagram& d) {
    NoticedReport report;
    report.weight0 = weight_partition(d, 0);
    report.weight2 = weight_partition(d, 2);
    const int n = d.rank();
    int fixed_nodes = 0;
    for (int i = 0; i < n; ++i)
        if (d.theta.image[i] == i) ++fixed_nodes;
    const int orbit_pairs = (n - fixed_nodes) / 2;
    report.lhs = fixed_nodes + orbit_pairs + 2 * static_cast<long long>(report.weight0.compact.size()) +
                 2 * static_cast<long long>(report.weight0.complex_pairs.size());
    report.rhs = static_cast<long long>(report.weight2.noncompact.size()) +
                 static_cast<long long>(report.weight2.complex_pairs.size());
    report.noticed = report.lhs == report.rhs;
    return report;
}

namespace {

nlohmann::json roots_to_json(const std::vector<Root>& roots) {
    nlohmann::json out = nlohmann::json::array();
    for (const Root& r : roots) out.push_back(r.coeffs);
    return out;
}

nlohmann::json pairs_to_json(const std::vector<std::pair<Root, Root>>& pairs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [a, b] : pairs) out.push_back({a.coeffs, b.coeffs});
    return out;
}

}  // namespace

nlohmann::json report_to_json(const NoticedReport& r) {
    nlohmann::json j;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["noticed"] = r.noticed;
    j["compact_weight0"] = roots_to_json(r.weight0.compact);
    j["complex_pairs_weight0"] = pairs_to_json(r.weight0.complex_pairs);
    j["noncompact_weight2"] = roots_to_json(r.weight2.noncompact);
    j["complex_pairs_weight2"] = pairs_to_json(r.weight2.complex_pairs);
    return j;
}

std::optional<Root> node_support(const WeightedVoganDiagram& d, int node) {
    if (node < 0 || node >= d.rank()) throw std::invalid_argument("node index out of range");
    const auto& ctx = root_context(d.diagram, d.theta);
    const int count = static_cast<int>(ctx.roots.size());
    for (int k = 0; k < count; ++k) {
        const Root& root = ctx.roots[k];
        if (root.coeffs[node] == 0) continue;
        if (dot(root.coeffs, d.weights) != 2) continue;
        if (ctx.theta_image[k] != k || ctx.theta_sum[k] >= 0 ||
            painted_length(d, root) % 2 != 0)
            return root;
    }
    return std::nullopt;
}

bool minimality_check(const WeightedVoganDiagram& d) {
    for (int node = 0; node < d.rank(); ++node)
        if (!node_support(d, node)) return false;
    return true;
}

NecessaryConditions necessary_conditions(const WeightedVoganDiagram& d) {
    const WeightPartition weight1 = weight_partition(d, 1);
    return {weight1.compact.size() == weight1.noncompact.size(), minimality_check(d)};
}

}  // namespace vogan
