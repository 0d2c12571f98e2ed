#include "vogan/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vogan {

bool WeightedVoganDiagram::is_painted(int node) const {
    return std::binary_search(painted.begin(), painted.end(), node);
}

std::vector<std::string> validate(const WeightedVoganDiagram& d) {
    std::vector<std::string> errors;
    const int n = d.rank();

    bool theta_usable = true;
    if (static_cast<int>(d.theta.image.size()) != n) {
        errors.push_back("theta image has " + std::to_string(d.theta.image.size()) +
                         " entries, expected " + std::to_string(n));
        theta_usable = false;
    } else {
        std::vector<bool> hit(n, false);
        for (int i = 0; i < n; ++i) {
            const int t = d.theta.image[i];
            if (t < 0 || t >= n || hit[t]) {
                errors.push_back("theta is not a permutation of the nodes");
                theta_usable = false;
                break;
            }
            hit[t] = true;
        }
    }
    if (theta_usable) {
        for (int i = 0; i < n; ++i)
            if (d.theta.image[d.theta.image[i]] != i) {
                errors.push_back("theta has order greater than 2");
                break;
            }
        bool preserves = true;
        for (int i = 0; i < n && preserves; ++i)
            for (int j = 0; j < n && preserves; ++j)
                preserves = d.diagram.cartan[d.theta.image[i]][d.theta.image[j]] ==
                            d.diagram.cartan[i][j];
        if (!preserves) errors.push_back("theta is not an automorphism of the diagram");
    }

    if (!std::is_sorted(d.painted.begin(), d.painted.end()) ||
        std::adjacent_find(d.painted.begin(), d.painted.end()) != d.painted.end())
        errors.push_back("painted set must be sorted and duplicate-free");
    for (int node : d.painted) {
        if (node < 0 || node >= n) {
            errors.push_back("painted node " + std::to_string(node + 1) + " out of range");
        } else if (theta_usable && d.theta.image[node] != node) {
            errors.push_back("painted node " + std::to_string(node + 1) +
                             " is not fixed by theta");
        }
    }

    if (static_cast<int>(d.weights.size()) != n) {
        errors.push_back("weight vector has " + std::to_string(d.weights.size()) +
                         " entries, expected " + std::to_string(n));
    } else {
        for (int i = 0; i < n; ++i)
            if (d.weights[i] < 0 || d.weights[i] > 2)
                errors.push_back("weight " + std::to_string(d.weights[i]) + " of node " +
                                 std::to_string(i + 1) + " outside {0,1,2}");
        if (theta_usable)
            for (int i = 0; i < n; ++i) {
                const int t = d.theta.image[i];
                if (i < t && d.weights[i] != d.weights[t]) {
                    errors.push_back("weights not theta-symmetric: node " +
                                     std::to_string(i + 1) + " has " +
                                     std::to_string(d.weights[i]) + ", node " +
                                     std::to_string(t + 1) + " has " +
                                     std::to_string(d.weights[t]));
                }
            }
    }

    return errors;
}

WeightedVoganDiagram make_diagram(SimpleType type, Involution theta,
                                  std::vector<int> painted, std::vector<int> weights) {
    std::sort(painted.begin(), painted.end());
    painted.erase(std::unique(painted.begin(), painted.end()), painted.end());
    WeightedVoganDiagram d{cartan_matrix(type), std::move(theta), std::move(painted),
                           std::move(weights)};
    const auto errors = validate(d);
    if (!errors.empty()) {
        std::string joined = "invalid diagram:";
        for (const auto& e : errors) joined += "\n  " + e;
        throw std::invalid_argument(joined);
    }
    return d;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message + " at column " + std::to_string(pos + 1), pos + 1);
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_spaces() {
        while (!done() && text[pos] == ' ') ++pos;
    }
    void expect_keyword(std::string_view kw) {
        if (text.substr(pos, kw.size()) != kw) fail("expected '" + std::string(kw) + "'");
        pos += kw.size();
    }
    int read_int(const std::string& what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected " + what);
        long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) fail(what + " out of range");
            ++pos;
        }
        return static_cast<int>(value);
    }
    std::vector<int> read_int_list(const std::string& what) {
        std::vector<int> values{read_int(what)};
        while (peek() == ',') {
            ++pos;
            values.push_back(read_int(what));
        }
        return values;
    }
};

}  // namespace

WeightedVoganDiagram parse_diagram(std::string_view text) {
    Cursor c{text};
    c.skip_spaces();

    const std::size_t type_pos = c.pos;
    if (c.done() || c.peek() < 'A' || c.peek() > 'G') c.fail("expected a type like B5");
    std::string type_text(1, c.text[c.pos++]);
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        type_text += c.text[c.pos++];
    SimpleType type;
    try {
        type = parse_type(type_text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " at column " + std::to_string(type_pos + 1),
                         type_pos + 1);
    }
    const int n = type.rank;

    c.skip_spaces();
    c.expect_keyword("theta=");
    Involution theta;
    if (c.text.substr(c.pos, 2) == "id") {
        c.pos += 2;
        theta = identity_involution(n);
    } else {
        const std::size_t theta_pos = c.pos;
        auto images = c.read_int_list("a node index");
        if (static_cast<int>(images.size()) != n) {
            c.pos = theta_pos;
            c.fail("theta needs " + std::to_string(n) + " entries, got " +
                   std::to_string(images.size()));
        }
        for (int& v : images) {
            if (v < 1 || v > n) {
                c.pos = theta_pos;
                c.fail("theta entry " + std::to_string(v) + " out of range 1.." +
                       std::to_string(n));
            }
            --v;
        }
        theta.image = std::move(images);
    }

    c.skip_spaces();
    c.expect_keyword("J=");
    std::vector<int> painted;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        const std::size_t j_pos = c.pos;
        painted = c.read_int_list("a node index");
        for (int& v : painted) {
            if (v < 1 || v > n) {
                c.pos = j_pos;
                c.fail("painted node " + std::to_string(v) + " out of range 1.." +
                       std::to_string(n));
            }
            --v;
        }
    }

    c.skip_spaces();
    c.expect_keyword("w=");
    const std::size_t w_pos = c.pos;
    auto weights = c.read_int_list("a weight");
    if (static_cast<int>(weights.size()) != n) {
        c.pos = w_pos;
        c.fail("w needs " + std::to_string(n) + " entries, got " +
               std::to_string(weights.size()));
    }

    c.skip_spaces();
    if (!c.done()) c.fail("unexpected trailing input");

    return make_diagram(type, std::move(theta), std::move(painted), std::move(weights));
}

namespace {

void append_int_list(std::ostringstream& out, const std::vector<int>& values, int offset) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i] + offset;
    }
}

}  // namespace

std::string render_text(const WeightedVoganDiagram& d) {
    std::ostringstream out;
    out << to_string(d.diagram.type) << " theta=";
    if (d.theta.is_identity())
        out << "id";
    else
        append_int_list(out, d.theta.image, 1);
    out << " J=";
    append_int_list(out, d.painted, 1);
    out << " w=";
    append_int_list(out, d.weights, 0);
    return out.str();
}

std::string render_ascii(const WeightedVoganDiagram& d) {
    std::ostringstream out;
    out << render_text(d) << '\n';
    const int n = d.rank();
    for (int i = 0; i < n; ++i) {
        out << "  " << (i + 1) << ' ' << (d.is_painted(i) ? '#' : 'o') << " w=" << d.weights[i];
        bool first = true;
        for (int j : d.diagram.neighbors(i)) {
            out << (first ? "  " : ", ");
            first = false;
            const int m = d.diagram.bond(i, j);
            if (m == 1)
                out << "-- " << (j + 1);
            else if (d.diagram.longer(i, j))
                out << '=' << m << "> " << (j + 1);
            else
                out << '<' << m << "= " << (j + 1);
        }
        if (d.theta.image[i] != i) out << "  ~" << (d.theta.image[i] + 1);
        out << '\n';
    }
    return out.str();
}

std::string render_dot(const WeightedVoganDiagram& d) {
    std::ostringstream out;
    out << "digraph vogan {\n  rankdir=LR;\n"
        << "  node [shape=circle, fixedsize=true, width=0.25, label=\"\"];\n";
    const int n = d.rank();
    for (int i = 0; i < n; ++i) {
        out << "  n" << (i + 1) << " [xlabel=\"" << d.weights[i] << '"';
        if (d.is_painted(i)) out << ", style=filled, fillcolor=black";
        out << "];\n";
    }
    for (int i = 0; i < n; ++i)
        for (int j : d.diagram.neighbors(i)) {
            if (j < i) continue;
            const int m = d.diagram.bond(i, j);
            // arrow points towards the short node
            const bool towards_j = d.diagram.longer(i, j);
            out << "  n" << (i + 1) << " -> n" << (j + 1);
            if (m == 1)
                out << " [dir=none]";
            else if (towards_j)
                out << " [dir=forward, label=\"" << m << "\"]";
            else
                out << " [dir=back, label=\"" << m << "\"]";
            out << ";\n";
        }
    for (int i = 0; i < n; ++i) {
        const int t = d.theta.image[i];
        if (t > i)
            out << "  n" << (i + 1) << " -> n" << (t + 1)
                << " [dir=both, style=dashed, constraint=false];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json diagram_to_json(const WeightedVoganDiagram& d) {
    nlohmann::json j;
    j["type"] = to_string(d.diagram.type);
    nlohmann::json theta = nlohmann::json::array();
    for (int v : d.theta.image) theta.push_back(v + 1);
    j["theta"] = std::move(theta);
    nlohmann::json painted = nlohmann::json::array();
    for (int v : d.painted) painted.push_back(v + 1);
    j["painted"] = std::move(painted);
    j["weights"] = d.weights;
    return j;
}

WeightedVoganDiagram diagram_from_json(const nlohmann::json& j) {
    const SimpleType type = parse_type(j.at("type").get<std::string>());
    Involution theta;
    for (int v : j.at("theta")) theta.image.push_back(v - 1);
    std::vector<int> painted;
    for (int v : j.at("painted")) painted.push_back(v - 1);
    std::vector<int> weights = j.at("weights").get<std::vector<int>>();
    return make_diagram(type, std::move(theta), std::move(painted), std::move(weights));
}

std::pair<DynkinDiagram, std::vector<int>> underlying_weighted_dynkin(
    const WeightedVoganDiagram& d) {
    return {d.diagram, d.weights};
}

VoganDiagram underlying_vogan(const WeightedVoganDiagram& d) {
    return {d.diagram, d.theta, d.painted};
}

}  // namespace vogan
