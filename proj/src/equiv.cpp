#include "vogan/equiv.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>

namespace vogan {

namespace {

std::uint64_t painted_mask(const std::vector<int>& painted) {
    std::uint64_t mask = 0;
    for (int node : painted) mask |= std::uint64_t{1} << node;
    return mask;
}

std::vector<int> mask_to_nodes(std::uint64_t mask) {
    std::vector<int> nodes;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) nodes.push_back(i);
    return nodes;
}

// Sorted-J lexicographic order on painted sets given as bitmasks.
bool mask_j_less(std::uint64_t a, std::uint64_t b) {
    const auto va = mask_to_nodes(a), vb = mask_to_nodes(b);
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

WeightedVoganDiagram with_painted(const WeightedVoganDiagram& base, std::uint64_t mask) {
    WeightedVoganDiagram d = base;
    d.painted = mask_to_nodes(mask);
    return d;
}

// BFS closure of the painted set under moves. Returns the visited masks
// and, via `parents`, shortest-path back-pointers (mask -> {prev, node}).
std::vector<std::uint64_t> move_closure(const WeightedVoganDiagram& d,
                                        std::map<std::uint64_t, std::pair<std::uint64_t, int>>* parents) {
    const int n = d.rank();
    if (n > 63) throw std::invalid_argument("class computations support rank <= 63");
    std::vector<std::uint64_t> toggles(n);
    for (int j = 0; j < n; ++j) toggles[j] = paint_toggle_mask(d.diagram, d.theta, j);

    const std::uint64_t start = painted_mask(d.painted);
    std::vector<std::uint64_t> visited{start};
    std::map<std::uint64_t, std::pair<std::uint64_t, int>> seen{{start, {start, -1}}};
    std::deque<std::uint64_t> queue{start};
    while (!queue.empty()) {
        const std::uint64_t current = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            if (!(current >> j & 1) || d.weights[j] != 0) continue;
            const std::uint64_t next = current ^ toggles[j];
            if (seen.emplace(next, std::make_pair(current, j)).second) {
                visited.push_back(next);
                queue.push_back(next);
            }
        }
    }
    if (parents) *parents = std::move(seen);
    return visited;
}

bool same_setting(const WeightedVoganDiagram& a, const WeightedVoganDiagram& b) {
    return a.diagram.type == b.diagram.type && a.theta == b.theta && a.weights == b.weights;
}

}  // namespace

std::vector<int> applicable_nodes(const WeightedVoganDiagram& d) {
    std::vector<int> nodes;
    for (int node : d.painted)
        if (d.weights[node] == 0) nodes.push_back(node);
    return nodes;
}

std::uint64_t paint_toggle_mask(const DynkinDiagram& diagram, const Involution& theta, int node) {
    if (diagram.rank() > 63) throw std::invalid_argument("toggle masks support rank <= 63");
    std::uint64_t mask = 0;
    for (int i : diagram.neighbors(node))
        if (theta.image[i] == i && !diagram.longer(i, node)) mask |= std::uint64_t{1} << i;
    return mask;
}

WeightedVoganDiagram reflect_painting(const WeightedVoganDiagram& d, int node) {
    if (node < 0 || node >= d.rank()) throw std::invalid_argument("node index out of range");
    if (!d.is_painted(node))
        throw std::invalid_argument("move requires a painted node, node " +
                                    std::to_string(node + 1) + " is not painted");
    if (d.weights[node] != 0)
        throw std::invalid_argument("move requires weight 0, node " + std::to_string(node + 1) +
                                    " has weight " + std::to_string(d.weights[node]));
    const std::uint64_t mask =
        painted_mask(d.painted) ^ paint_toggle_mask(d.diagram, d.theta, node);
    WeightedVoganDiagram out = with_painted(d, mask);
    assert(validate(out).empty());
    return out;
}

EquivalenceClass equivalence_class(const WeightedVoganDiagram& d) {
    auto masks = move_closure(d, nullptr);
    std::sort(masks.begin(), masks.end(), mask_j_less);
    EquivalenceClass cls;
    cls.members.reserve(masks.size());
    for (std::uint64_t mask : masks) cls.members.push_back(with_painted(d, mask));
    cls.noticed = noticed_report(cls.members.front()).noticed;
    return cls;
}

bool equivalent(const WeightedVoganDiagram& a, const WeightedVoganDiagram& b) {
    if (!same_setting(a, b)) return false;
    const std::uint64_t target = painted_mask(b.painted);
    for (std::uint64_t mask : move_closure(a, nullptr))
        if (mask == target) return true;
    return false;
}

std::optional<std::vector<int>> move_witness(const WeightedVoganDiagram& a,
                                             const WeightedVoganDiagram& b) {
    if (!same_setting(a, b)) return std::nullopt;
    std::map<std::uint64_t, std::pair<std::uint64_t, int>> parents;
    move_closure(a, &parents);
    const std::uint64_t start = painted_mask(a.painted);
    std::uint64_t cursor = painted_mask(b.painted);
    const auto hit = parents.find(cursor);
    if (hit == parents.end()) return std::nullopt;
    std::vector<int> moves;
    while (cursor != start) {
        const auto& [prev, node] = parents.at(cursor);
        moves.push_back(node);
        cursor = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
}

bool equivalent_up_to_iso(const WeightedVoganDiagram& a, const WeightedVoganDiagram& b) {
    if (a.diagram.type != b.diagram.type) return false;
    const int n = a.rank();
    for (const auto& p : diagram_automorphisms(a.diagram)) {
        WeightedVoganDiagram image = a;
        for (int i = 0; i < n; ++i) {
            image.theta.image[p[i]] = p[a.theta.image[i]];
            image.weights[p[i]] = a.weights[i];
        }
        image.painted.clear();
        for (int node : a.painted) image.painted.push_back(p[node]);
        std::sort(image.painted.begin(), image.painted.end());
        if (equivalent(image, b)) return true;
    }
    return false;
}

bool has_property_p(const WeightedVoganDiagram& d) {
    const int n = d.rank();
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start] || d.weights[start] != 0) continue;
        // flood the weight-0 component of `start`
        int painted_count = 0;
        std::deque<int> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            if (d.is_painted(i)) ++painted_count;
            for (int j : d.diagram.neighbors(i))
                if (!seen[j] && d.weights[j] == 0) {
                    seen[j] = true;
                    queue.push_back(j);
                }
        }
        if (painted_count > 1) return false;
    }
    return true;
}

WeightedVoganDiagram normalize_p(const WeightedVoganDiagram& d) {
    for (const auto& member : equivalence_class(d).members)
        if (has_property_p(member)) return member;
    throw std::logic_error(
        "equivalence class of " + render_text(d) +
        " has no member with at most one painted node per weight-0 segment");
}

nlohmann::json class_to_json(const EquivalenceClass& cls) {
    nlohmann::json j;
    j["canonical"] = diagram_to_json(cls.canonical());
    nlohmann::json members = nlohmann::json::array();
    nlohmann::json property_p = nlohmann::json::array();
    for (const auto& member : cls.members) {
        members.push_back(diagram_to_json(member));
        if (has_property_p(member)) property_p.push_back(diagram_to_json(member));
    }
    j["members"] = std::move(members);
    j["noticed"] = cls.noticed;
    j["property_p_members"] = std::move(property_p);
    return j;
}

}  // namespace vogan
