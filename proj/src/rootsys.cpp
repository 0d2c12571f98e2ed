#include "vogan/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vogan {

std::string to_string(SimpleType type) {
    return std::string(1, static_cast<char>(type.family)) + std::to_string(type.rank);
}

SimpleType parse_type(std::string_view text) {
    if (text.empty() || text[0] < 'A' || text[0] > 'G')
        throw std::invalid_argument("invalid type '" + std::string(text) +
                                    "': expected a family letter A-G followed by the rank");
    const auto family = static_cast<Family>(text[0]);
    const std::string digits(text.substr(1));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("invalid type '" + std::string(text) +
                                    "': rank must be a positive integer");
    long rank = 0;
    try {
        rank = std::stol(digits);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("invalid type '" + std::string(text) + "': rank out of range");
    }
    const SimpleType type{family, static_cast<int>(rank)};
    check_rank(type);
    return type;
}

void check_rank(SimpleType type) {
    const int n = type.rank;
    const auto reject = [&](const std::string& bound) {
        throw std::invalid_argument("invalid type " + to_string(type) + ": " + bound);
    };
    switch (type.family) {
        case Family::A:
            if (n < 1) reject("A requires rank >= 1");
            break;
        case Family::B:
            if (n < 2) reject("B requires rank >= 2");
            break;
        case Family::C:
            if (n < 3) reject("C requires rank >= 3");
            break;
        case Family::D:
            if (n < 4) reject("D requires rank >= 4");
            break;
        case Family::E:
            if (n < 6 || n > 8) reject("E requires rank in {6,7,8}");
            break;
        case Family::F:
            if (n != 4) reject("F requires rank 4");
            break;
        case Family::G:
            if (n != 2) reject("G requires rank 2");
            break;
    }
}

int Root::length() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

bool root_less(const Root& a, const Root& b) {
    const int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.coeffs < b.coeffs;
}

std::string to_string(const Root& r) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (r.coeffs[i] == 0) continue;
        if (!first) out << '+';
        if (r.coeffs[i] != 1) out << r.coeffs[i];
        out << 'a' << (i + 1);
        first = false;
    }
    if (first) out << '0';
    return out.str();
}

DynkinDiagram cartan_matrix(SimpleType type) {
    check_rank(type);
    const int n = type.rank;
    DynkinDiagram d;
    d.type = type;
    d.cartan.assign(n, std::vector<int>(n, 0));
    d.norm2.assign(n, 2);
    for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;

    const auto link = [&](int i, int j) { d.cartan[i][j] = d.cartan[j][i] = -1; };
    const auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) link(i, i + 1);
    };

    switch (type.family) {
        case Family::A:
            chain(n);
            break;
        case Family::B:
            // nodes 1..n-1 long, node n short
            chain(n);
            d.cartan[n - 1][n - 2] = -2;
            d.norm2[n - 1] = 1;
            break;
        case Family::C:
            // nodes 1..n-1 short, node n long
            chain(n);
            d.cartan[n - 2][n - 1] = -2;
            std::fill(d.norm2.begin(), d.norm2.end() - 1, 1);
            break;
        case Family::D:
            chain(n - 1);
            link(n - 3, n - 1);
            break;
        case Family::E:
            // 1-3-4-5-6[-7[-8]] with node 2 hanging off node 4
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case Family::F:
            // 1-2=>3-4, nodes 1,2 short
            chain(4);
            d.cartan[1][2] = -2;
            d.norm2[0] = d.norm2[1] = 1;
            break;
        case Family::G:
            // node 1 short, node 2 long
            d.cartan[0][1] = -3;
            d.cartan[1][0] = -1;
            d.norm2 = {1, 3};
            break;
    }

    d.adj.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d.adjacent(i, j)) d.adj[i].push_back(j);
    return d;
}

std::vector<Root> positive_roots(const DynkinDiagram& diagram) {
    const int n = diagram.rank();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> level;
    level.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        level.push_back(std::move(e));
    }

    std::vector<Root> out;
    while (!level.empty()) {
        std::sort(level.begin(), level.end());
        for (auto& v : level) out.push_back(Root{v});

        std::vector<std::vector<int>> next;
        for (const auto& a : level) {
            for (int i = 0; i < n; ++i) {
                int pairing = 0;
                for (int j = 0; j < n; ++j)
                    if (a[j] != 0) pairing += diagram.cartan[i][j] * a[j];
                // depth of the alpha_i-string below a
                int down = 0;
                std::vector<int> b = a;
                while (b[i] > 0) {
                    --b[i];
                    if (!seen.count(b)) break;
                    ++down;
                }
                if (down - pairing > 0) {
                    std::vector<int> c = a;
                    ++c[i];
                    if (seen.insert(c).second) next.push_back(std::move(c));
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

std::size_t positive_root_count(SimpleType type) {
    const std::size_t n = static_cast<std::size_t>(type.rank);
    switch (type.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

bool Involution::is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != static_cast<int>(i)) return false;
    return true;
}

Involution identity_involution(int rank) {
    Involution t;
    t.image.resize(rank);
    std::iota(t.image.begin(), t.image.end(), 0);
    return t;
}

namespace {

bool preserves_cartan(const DynkinDiagram& d, const std::vector<int>& p) {
    const int n = d.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d.cartan[p[i]][p[j]] != d.cartan[i][j]) return false;
    return true;
}

}  // namespace

namespace {

std::vector<int> transposition(int n, int i, int j) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[j]);
    return p;
}

// Candidate nontrivial symmetries per family; everything returned is checked
// against the Cartan matrix before use, so a wrong candidate cannot leak out.
std::vector<std::vector<int>> symmetry_candidates(const DynkinDiagram& d, bool all_orders) {
    const int n = d.rank();
    std::vector<std::vector<int>> out;
    switch (d.type.family) {
        case Family::A: {
            if (n >= 2) {
                std::vector<int> flip(n);
                for (int i = 0; i < n; ++i) flip[i] = n - 1 - i;
                out.push_back(std::move(flip));
            }
            break;
        }
        case Family::D: {
            if (n == 4) {
                // S3 on the outer nodes {1,3,4}
                out.push_back(transposition(4, 2, 3));
                out.push_back(transposition(4, 0, 2));
                out.push_back(transposition(4, 0, 3));
                if (all_orders) {
                    out.push_back({2, 1, 3, 0});
                    out.push_back({3, 1, 0, 2});
                }
            } else {
                out.push_back(transposition(n, n - 2, n - 1));
            }
            break;
        }
        case Family::E: {
            if (n == 6) out.push_back({5, 1, 4, 3, 2, 0});
            break;
        }
        default:
            break;
    }
    return out;
}

}  // namespace

std::vector<Involution> diagram_involutions(const DynkinDiagram& diagram) {
    std::vector<Involution> out{identity_involution(diagram.rank())};
    for (auto& p : symmetry_candidates(diagram, false)) {
        bool order2 = true;
        for (int i = 0; i < diagram.rank() && order2; ++i) order2 = p[p[i]] == i;
        if (order2 && preserves_cartan(diagram, p)) out.push_back(Involution{std::move(p)});
    }
    std::sort(out.begin(), out.end(),
              [](const Involution& a, const Involution& b) { return a.image < b.image; });
    return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const DynkinDiagram& diagram) {
    std::vector<std::vector<int>> out{identity_involution(diagram.rank()).image};
    for (auto& p : symmetry_candidates(diagram, true))
        if (preserves_cartan(diagram, p)) out.push_back(std::move(p));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vogan
