#include "vogan/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "vogan/sweep.hpp"

namespace vogan::cli {

namespace {

constexpr const char* usage_text =
    "usage: vogan <verb> [arguments] [flags]\n"
    "\n"
    "verbs:\n"
    "  roots <TYPE>              list the positive roots of a simple type\n"
    "  check <DIAGRAM>           noticed report and necessary conditions\n"
    "  equiv <DIAGRAM> <DIAGRAM> decide move-equivalence, print a move witness\n"
    "  class <DIAGRAM>           the full equivalence class of a diagram\n"
    "  normalize <DIAGRAM>       a class member with at most one painted node\n"
    "                            per weight-0 segment\n"
    "  sweep <TYPE>              catalog all diagrams of a type\n"
    "  render <DIAGRAM>          ascii or graphviz rendering\n"
    "\n"
    "flags:\n"
    "  --format <text|json>      output format (render: ascii|dot)\n"
    "  --theta <id|i1,...,in>    involution for sweep (default id)\n"
    "  --all-theta               sweep every involution of the type\n"
    "  --full                    retain all class members in sweep output\n"
    "  --up-to-iso               quotient by diagram automorphisms\n"
    "\n"
    "diagrams are written as: <TYPE> theta=<id|i1,...,in> J=<list> w=<list>\n"
    "e.g. vogan check \"B5 theta=id J=2,4,5 w=2,0,0,2,0\"\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedArgs {
    std::string verb;
    std::vector<std::string> positional;
    std::string format;
    std::optional<std::string> theta;
    bool all_theta = false;
    bool full = false;
    bool up_to_iso = false;
};

ParsedArgs parse_args(const std::vector<std::string>& args) {
    ParsedArgs parsed;
    parsed.verb = args.front();
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& arg = args[i];
        const auto flag_value = [&](const char* name) -> std::string {
            if (++i >= args.size()) throw UsageError(std::string(name) + " needs a value");
            return args[i];
        };
        if (arg == "--format")
            parsed.format = flag_value("--format");
        else if (arg == "--theta")
            parsed.theta = flag_value("--theta");
        else if (arg == "--all-theta")
            parsed.all_theta = true;
        else if (arg == "--full")
            parsed.full = true;
        else if (arg == "--up-to-iso")
            parsed.up_to_iso = true;
        else if (arg.rfind("--", 0) == 0)
            throw UsageError("unknown flag " + arg);
        else
            parsed.positional.push_back(arg);
    }
    return parsed;
}

void require_arity(const ParsedArgs& parsed, std::size_t count) {
    if (parsed.positional.size() != count)
        throw UsageError(parsed.verb + " takes " + std::to_string(count) + " argument" +
                         (count == 1 ? "" : "s") + ", got " +
                         std::to_string(parsed.positional.size()));
}

bool json_format(const ParsedArgs& parsed) {
    if (parsed.format.empty() || parsed.format == "text") return false;
    if (parsed.format == "json") return true;
    throw UsageError("unsupported format '" + parsed.format + "' (expected text or json)");
}

Involution parse_theta_flag(const std::string& text, const DynkinDiagram& diagram) {
    if (text == "id") return identity_involution(diagram.rank());
    Involution theta;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        try {
            theta.image.push_back(std::stoi(text.substr(pos, next - pos)) - 1);
        } catch (const std::exception&) {
            throw std::invalid_argument("--theta expects 'id' or a comma-separated image list, got '" +
                                        text + "'");
        }
        pos = next + 1;
    }
    for (const auto& candidate : diagram_involutions(diagram))
        if (candidate == theta) return theta;
    throw std::invalid_argument("--theta value is not an involution of " +
                                to_string(diagram.type));
}

int sweep_rank_cap() {
    const char* env = std::getenv("VOGAN_MAX_RANK");
    if (!env || !*env) return 8;
    try {
        const int cap = std::stoi(env);
        if (cap < 1) throw std::invalid_argument("");
        return cap;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("invalid VOGAN_MAX_RANK value '") + env + "'");
    }
}

void print_roots(const ParsedArgs& parsed, std::ostream& out) {
    const SimpleType type = parse_type(parsed.positional[0]);
    const auto roots = positive_roots(cartan_matrix(type));
    if (json_format(parsed)) {
        nlohmann::json j;
        j["type"] = to_string(type);
        j["count"] = roots.size();
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : roots) list.push_back(r.coeffs);
        j["roots"] = std::move(list);
        out << j.dump() << '\n';
        return;
    }
    out << to_string(type) << ": " << roots.size() << " positive roots\n";
    for (const auto& r : roots) {
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) out << (i ? "," : "") << r.coeffs[i];
        out << "  " << to_string(r) << '\n';
    }
}

void print_root_list(std::ostream& out, const char* label, const std::vector<Root>& roots) {
    out << label << ": {";
    for (std::size_t i = 0; i < roots.size(); ++i) out << (i ? ", " : "") << to_string(roots[i]);
    out << "}\n";
}

void print_pair_list(std::ostream& out, const char* label,
                     const std::vector<std::pair<Root, Root>>& pairs) {
    out << label << ": {";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out << (i ? ", " : "") << '{' << to_string(pairs[i].first) << ", "
            << to_string(pairs[i].second) << '}';
    out << "}\n";
}

void print_check(const ParsedArgs& parsed, std::ostream& out) {
    const auto d = parse_diagram(parsed.positional[0]);
    const auto report = noticed_report(d);
    const auto conditions = necessary_conditions(d);
    if (json_format(parsed)) {
        nlohmann::json j;
        j["diagram"] = diagram_to_json(d);
        j["report"] = report_to_json(report);
        j["necessary_conditions"] = {{"weight1_balanced", conditions.weight1_balanced},
                                     {"minimal", conditions.minimal}};
        out << j.dump() << '\n';
        return;
    }
    out << render_text(d) << '\n';
    out << "noticed=" << (report.noticed ? "true" : "false") << " lhs=" << report.lhs
        << " rhs=" << report.rhs << '\n';
    print_root_list(out, "compact weight-0 roots", report.weight0.compact);
    print_pair_list(out, "complex weight-0 pairs", report.weight0.complex_pairs);
    print_root_list(out, "noncompact weight-2 roots", report.weight2.noncompact);
    print_pair_list(out, "complex weight-2 pairs", report.weight2.complex_pairs);
    out << "weight-1 balance: " << (conditions.weight1_balanced ? "true" : "false") << '\n';
    out << "minimal: " << (conditions.minimal ? "true" : "false") << '\n';
}

void print_equiv(const ParsedArgs& parsed, std::ostream& out) {
    const auto a = parse_diagram(parsed.positional[0]);
    const auto b = parse_diagram(parsed.positional[1]);
    const auto moves = move_witness(a, b);
    const bool same = moves.has_value() || (parsed.up_to_iso && equivalent_up_to_iso(a, b));
    if (json_format(parsed)) {
        nlohmann::json j;
        j["equivalent"] = same;
        if (moves) {
            nlohmann::json list = nlohmann::json::array();
            for (int node : *moves) list.push_back(node + 1);
            j["moves"] = std::move(list);
        }
        out << j.dump() << '\n';
        return;
    }
    out << "equivalent=" << (same ? "true" : "false");
    if (moves) {
        out << " moves=[";
        for (std::size_t i = 0; i < moves->size(); ++i)
            out << (i ? "," : "") << "A@" << (*moves)[i] + 1;
        out << ']';
    }
    out << '\n';
}

void print_class(const ParsedArgs& parsed, std::ostream& out) {
    const auto cls = equivalence_class(parse_diagram(parsed.positional[0]));
    if (json_format(parsed)) {
        out << class_to_json(cls).dump() << '\n';
        return;
    }
    out << "class of " << render_text(cls.canonical()) << ": " << cls.members.size()
        << " member" << (cls.members.size() == 1 ? "" : "s") << ", noticed="
        << (cls.noticed ? "true" : "false") << '\n';
    for (const auto& member : cls.members)
        out << "  " << render_text(member)
            << (has_property_p(member) ? "  [P]" : "") << '\n';
}

void print_normalize(const ParsedArgs& parsed, std::ostream& out) {
    const auto member = normalize_p(parse_diagram(parsed.positional[0]));
    if (json_format(parsed))
        out << diagram_to_json(member).dump() << '\n';
    else
        out << render_text(member) << '\n';
}

void print_sweep(const ParsedArgs& parsed, std::ostream& out) {
    const SimpleType type = parse_type(parsed.positional[0]);
    const DynkinDiagram diagram = cartan_matrix(type);
    SweepOptions options;
    options.max_rank = sweep_rank_cap();
    options.full_members = parsed.full;
    options.up_to_iso = parsed.up_to_iso;

    std::vector<Involution> thetas;
    if (parsed.all_theta)
        thetas = diagram_involutions(diagram);
    else if (parsed.theta)
        thetas.push_back(parse_theta_flag(*parsed.theta, diagram));
    else
        thetas.push_back(identity_involution(diagram.rank()));

    const ExportFormat format = json_format(parsed) ? ExportFormat::json : ExportFormat::text;
    if (format == ExportFormat::json && thetas.size() > 1) {
        nlohmann::json j;
        nlohmann::json catalogs = nlohmann::json::array();
        for (const auto& theta : thetas)
            catalogs.push_back(catalog_to_json(classify_all(type, theta, options)));
        j["catalogs"] = std::move(catalogs);
        out << j.dump() << '\n';
        return;
    }
    for (const auto& theta : thetas) out << export_catalog(classify_all(type, theta, options), format);
}

void print_render(const ParsedArgs& parsed, std::ostream& out) {
    const auto d = parse_diagram(parsed.positional[0]);
    if (parsed.format.empty() || parsed.format == "ascii")
        out << render_ascii(d);
    else if (parsed.format == "dot")
        out << render_dot(d);
    else
        throw UsageError("unsupported format '" + parsed.format + "' (expected ascii or dot)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << usage_text;
        return 2;
    }
    if (args.front() == "help" || args.front() == "--help" || args.front() == "-h") {
        out << usage_text;
        return 0;
    }
    try {
        const ParsedArgs parsed = parse_args(args);
        if (parsed.verb == "roots") {
            require_arity(parsed, 1);
            print_roots(parsed, out);
        } else if (parsed.verb == "check") {
            require_arity(parsed, 1);
            print_check(parsed, out);
        } else if (parsed.verb == "equiv") {
            require_arity(parsed, 2);
            print_equiv(parsed, out);
        } else if (parsed.verb == "class") {
            require_arity(parsed, 1);
            print_class(parsed, out);
        } else if (parsed.verb == "normalize") {
            require_arity(parsed, 1);
            print_normalize(parsed, out);
        } else if (parsed.verb == "sweep") {
            require_arity(parsed, 1);
            print_sweep(parsed, out);
        } else if (parsed.verb == "render") {
            require_arity(parsed, 1);
            print_render(parsed, out);
        } else {
            throw UsageError("unknown verb '" + parsed.verb + "'");
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << usage_text;
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace vogan::cli
