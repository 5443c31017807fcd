// Command-line front end: load a configuration, then compute with or
// verify the algebras it describes.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vahlen/all.hpp"

using namespace vahlen;

namespace {

// Exit codes: 0 success/member/passed, 1 negative result, 2 usage error.
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Session {
    Configuration cfg;
    bool json = false;
};

void print_parse_error(const ParseError& e, const std::string& source) {
    std::cerr << "error: " << e.what() << "\n";
    if (!source.empty() && e.position() <= source.size()) {
        std::cerr << "  " << source << "\n";
        std::cerr << "  " << std::string(e.position(), ' ') << "^\n";
    }
}

CliffordElement parse_element_arg(const SpacePtr& S, const std::string& text) {
    try {
        return parse_element(S, text);
    } catch (const ParseError& e) {
        print_parse_error(e, text);
        std::exit(kExitUsage);
    }
}

CliffordMatrix2 parse_matrix_arg(const SpacePtr& S, const std::string& text) {
    try {
        return parse_matrix(S, text);
    } catch (const ParseError& e) {
        print_parse_error(e, text);
        std::exit(kExitUsage);
    }
}

bool looks_like_matrix(const std::string& text) {
    return text.find(';') != std::string::npos;
}

void emit_value(const Session& s, const std::string& kind, const std::string& literal) {
    if (s.json) {
        nlohmann::ordered_json j;
        j["kind"] = kind;
        j["value"] = literal;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << literal << "\n";
    }
}

int run_mul(const Session& s, const std::string& a, const std::string& b) {
    if (looks_like_matrix(a) || looks_like_matrix(b)) {
        CliffordMatrix2 ga = parse_matrix_arg(s.cfg.inner, a);
        CliffordMatrix2 gb = parse_matrix_arg(s.cfg.inner, b);
        emit_value(s, "matrix", (ga * gb).to_string());
    } else {
        CliffordElement xa = parse_element_arg(s.cfg.ambient, a);
        CliffordElement xb = parse_element_arg(s.cfg.ambient, b);
        emit_value(s, "element", (xa * xb).to_string());
    }
    return 0;
}

int run_invert(const Session& s, const std::string& text) {
    if (looks_like_matrix(text)) {
        std::optional<CliffordMatrix2> inv = mat_inverse(parse_matrix_arg(s.cfg.inner, text));
        if (!inv) {
            std::cerr << "not invertible\n";
            return kExitFalse;
        }
        emit_value(s, "matrix", inv->to_string());
    } else {
        std::optional<CliffordElement> inv =
            parse_element_arg(s.cfg.ambient, text).try_invert();
        if (!inv) {
            std::cerr << "not invertible\n";
            return kExitFalse;
        }
        emit_value(s, "element", inv->to_string());
    }
    return 0;
}

int run_pseudo_det(const Session& s, const std::string& text) {
    emit_value(s, "element", pseudo_det(parse_matrix_arg(s.cfg.inner, text)).to_string());
    return 0;
}

int run_check(const Session& s, int definition, const std::string& kind,
              const std::string& text) {
    CliffordMatrix2 g = parse_matrix_arg(s.cfg.inner, text);
    ConditionReport rep = kind == "paravector" ? check_pv_definition(g, definition)
                                               : check_definition(g, definition);
    if (s.json) {
        nlohmann::ordered_json j;
        j["definition"] = rep.definition;
        j["kind"] = kind;
        j["member"] = rep.member;
        j["clauses"] = nlohmann::ordered_json::array();
        for (const auto& c : rep.clauses)
            j["clauses"].push_back({{"name", c.name},
                                    {"description", c.description},
                                    {"pass", c.pass},
                                    {"witness", c.witness}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : rep.clauses) {
            std::cout << "  " << c.name << " " << c.description << ": "
                      << (c.pass ? "pass" : "FAIL") << "\n";
            if (!c.pass)
                std::cout << "      " << c.witness << "\n";
        }
        std::cout << (rep.member ? "member" : "not a member") << "\n";
    }
    return rep.member ? 0 : kExitFalse;
}

int run_map(const Session& s, const std::string& which, const std::string& text) {
    if (which == "phi" || which == "phi-inv") {
        if (s.cfg.split != SplitKind::Ordinary)
            throw MismatchError("map --which " + which + " needs an ordinary splitting");
        SplitIso iso(s.cfg.ambient);
        if (which == "phi")
            emit_value(s, "matrix", iso.phi(parse_element_arg(iso.ambient(), text)).to_string());
        else
            emit_value(s, "element",
                       iso.phi_inverse(parse_matrix_arg(iso.sub(), text)).to_string());
        return 0;
    }
    if (s.cfg.split != SplitKind::Paravector)
        throw MismatchError("map --which " + which + " needs a paravector splitting");
    ParavectorIso iso(s.cfg.inner);
    if (which == "theta")
        emit_value(s, "matrix", iso.theta(parse_element_arg(iso.ambient(), text)).to_string());
    else if (which == "theta-inv")
        emit_value(s, "element",
                   iso.theta_inverse(parse_matrix_arg(iso.inner(), text)).to_string());
    else // psi
        emit_value(s, "element", iso.psi(parse_element_arg(iso.zspace(), text)).to_string());
    return 0;
}

int run_enumerate(const Session& s, const std::string& group, std::uint64_t limit) {
    std::uint64_t count = 0;
    std::vector<std::string> shown;
    auto record = [&](const std::string& literal) {
        ++count;
        if (shown.size() < limit)
            shown.push_back(literal);
    };

    if (group == "nc" || group == "pin" || group == "spin") {
        GroupKind kind = group == "nc"    ? GroupKind::NC
                         : group == "pin" ? GroupKind::Pin
                                          : GroupKind::Spin;
        CliffordEnumeration elems(s.cfg.ambient);
        for (std::uint64_t i = 0; i < elems.size(); ++i) {
            CliffordElement u = elems.at(i);
            if (is_member(u, kind))
                record(u.to_string());
        }
    } else {
        bool para = group == "gpv" || group == "spv";
        bool special = group == "sv" || group == "spv";
        const SpacePtr& S = s.cfg.inner;
        CliffordElement one = CliffordElement::one(S);
        MatrixEnumeration mats(S);
        for (std::uint64_t i = 0; i < mats.size(); ++i) {
            CliffordMatrix2 g = mats.at(i);
            ConditionReport rep =
                para ? check_pv_definition(g, 3) : check_definition(g, 3);
            if (rep.member && (!special || pseudo_det(g) == one))
                record(g.to_string());
        }
    }

    if (s.json) {
        nlohmann::ordered_json j;
        j["group"] = group;
        j["count"] = count;
        if (limit > 0)
            j["elements"] = shown;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group: " << group << "\ncount: " << count << "\n";
        for (const auto& lit : shown)
            std::cout << "  " << lit << "\n";
    }
    return 0;
}

int run_verify(const Session& s, const std::string& theorem) {
    VerificationReport rep;
    if (theorem == "vahlen-iso")
        rep = verify_vahlen_iso(s.cfg);
    else if (theorem == "vahlen-equiv")
        rep = verify_vahlen_equiv(s.cfg);
    else if (theorem == "para-iso")
        rep = verify_paravector_iso(s.cfg);
    else if (theorem == "para-equiv")
        rep = verify_paravector_equiv(s.cfg);
    else // laurent-smoke
        rep = smoke_laurent(s.cfg);

    if (s.json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        std::cout << report_to_text(rep);
    if (rep.refused)
        return kExitUsage;
    return rep.passed ? 0 : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford algebras, Vahlen groups and their isomorphisms"};
    app.require_subcommand(1);

    std::string config_path;
    bool json = false;
    app.add_option("--config", config_path, "configuration JSON file")->required();
    app.add_flag("--json", json, "emit machine-readable JSON");

    std::string mul_a, mul_b;
    CLI::App* mul = app.add_subcommand("mul", "multiply two elements or matrices");
    mul->add_option("a", mul_a, "left factor")->required();
    mul->add_option("b", mul_b, "right factor")->required();

    std::string invert_x;
    CLI::App* invert = app.add_subcommand("invert", "invert an element or matrix");
    invert->add_option("x", invert_x, "element or matrix literal")->required();

    std::string pd_g;
    CLI::App* pd = app.add_subcommand("pseudo-det", "pseudo-determinant of a matrix");
    pd->add_option("g", pd_g, "matrix literal")->required();

    int check_def = 3;
    std::string check_kind = "ordinary", check_g;
    CLI::App* check = app.add_subcommand("check", "test matrix group membership clause by clause");
    check->add_option("--definition", check_def, "definition to apply")
        ->check(CLI::IsMember({1, 2, 3}));
    check->add_option("--kind", check_kind, "ordinary or paravector conditions")
        ->check(CLI::IsMember({"ordinary", "paravector"}));
    check->add_option("g", check_g, "matrix literal")->required();

    std::string map_which, map_x;
    CLI::App* map = app.add_subcommand("map", "apply one of the isomorphisms");
    map->add_option("--which", map_which, "phi, phi-inv, theta, theta-inv or psi")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "theta", "theta-inv", "psi"}));
    map->add_option("x", map_x, "element or matrix literal")->required();

    std::string enum_group;
    std::uint64_t enum_limit = 0;
    CLI::App* enumerate = app.add_subcommand("enumerate", "count a group's members");
    enumerate->add_option("--group", enum_group, "which group to enumerate")
        ->required()
        ->check(CLI::IsMember({"nc", "pin", "spin", "gv", "sv", "gpv", "spv"}));
    enumerate->add_option("--limit", enum_limit, "also print up to this many members");

    std::string verify_theorem;
    CLI::App* verify = app.add_subcommand("verify", "machine-check a theorem");
    verify->add_option("--theorem", verify_theorem, "which statement to verify")
        ->required()
        ->check(CLI::IsMember(
            {"vahlen-iso", "vahlen-equiv", "para-iso", "para-equiv", "laurent-smoke"}));

    // let global flags (--json, --config) appear after the subcommand too
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        Session s{load_configuration(config_path), json};
        if (*mul)
            return run_mul(s, mul_a, mul_b);
        if (*invert)
            return run_invert(s, invert_x);
        if (*pd)
            return run_pseudo_det(s, pd_g);
        if (*check)
            return run_check(s, check_def, check_kind, check_g);
        if (*map)
            return run_map(s, map_which, map_x);
        if (*enumerate)
            return run_enumerate(s, enum_group, enum_limit);
        if (*verify)
            return run_verify(s, verify_theorem);
    } catch (const ParseError& e) {
        print_parse_error(e, "");
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
