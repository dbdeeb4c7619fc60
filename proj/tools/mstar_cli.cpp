// Command-line front end for the exact monopole star-product engine.
//
//   mstar verify --field-b1 <expr> --field-b2 <expr> --field-b3 <expr>
//                [--order 3] [--b3 zero|random:<seed>|pair:<seed>]
//                [--checks all|id,id,...] [--format text|json] [--out <path>]
//                [--config <path>] [--function name=<expr> ...]
//   mstar eval   --op <name> --arg <expr> [--arg <expr> ...]
//                --field-b1 <expr> --field-b2 <expr> --field-b3 <expr>
//                [--order 3] [--b3 ...]
//   mstar list-checks
//
// Exit status of `verify`: 0 iff every check reproduced its expected status
// (identity checks pass, expected-nonzero witnesses are nonzero).

#include "mstar/mstar.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

struct FieldFlags {
    std::string b1, b2, b3;
};

mstar::RunConfig assemble_config(const std::string& config_path,
                                 const FieldFlags& field, int order,
                                 const std::string& b3_mode,
                                 const std::string& checks,
                                 const std::vector<std::string>& functions,
                                 const std::string& format) {
    mstar::RunConfig cfg;
    if (!config_path.empty()) cfg = mstar::parse_config_file(config_path);
    if (!field.b1.empty()) cfg.field_exprs[0] = field.b1;
    if (!field.b2.empty()) cfg.field_exprs[1] = field.b2;
    if (!field.b3.empty()) cfg.field_exprs[2] = field.b3;
    if (order >= 0) cfg.order = order;
    if (!b3_mode.empty()) cfg.b3 = mstar::parse_b3_mode(b3_mode);
    if (!checks.empty()) {
        cfg.checks.clear();
        std::stringstream ss(checks);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.checks.push_back(item);
    }
    for (const auto& entry : functions) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("--function expects name=<expr>; got '" +
                                     entry + "'");
        cfg.functions[entry.substr(0, eq)] = entry.substr(eq + 1);
    }
    if (!format.empty()) {
        if (format == "text")
            cfg.format = mstar::RunConfig::Format::text;
        else if (format == "json")
            cfg.format = mstar::RunConfig::Format::json;
        else
            throw std::runtime_error("--format must be text or json");
    }
    return cfg;
}

int run_verify(const mstar::RunConfig& cfg, const std::string& out_path) {
    mstar::Report report = mstar::run(cfg);
    std::string rendered = cfg.format == mstar::RunConfig::Format::json
                               ? mstar::to_json(report).dump(2) + "\n"
                               : mstar::to_text(report);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write to " + out_path);
        out << rendered;
    }
    return report.all_reproduced ? 0 : 1;
}

int run_eval(const mstar::RunConfig& cfg, const std::string& op,
             const std::vector<std::string>& args) {
    using namespace mstar;
    FieldConfig field = FieldConfig::make(parse_expr(cfg.field_exprs[0]),
                                          parse_expr(cfg.field_exprs[1]),
                                          parse_expr(cfg.field_exprs[2]));
    Bivector pi(field);
    BiDiffOp b3 = cfg.b3.kind == B3Mode::Kind::zero ? BiDiffOp::zero()
                                                    : random_b3(cfg.b3.seed);
    StarProduct sp = StarProduct::weyl(pi, b3, cfg.order);

    std::map<std::string, std::string> named;
    for (const auto& [name, text] : cfg.functions) named[name] = text;
    std::vector<Expr> a;
    for (const auto& text : args) {
        auto it = named.find(text);
        a.push_back(parse_expr(it == named.end() ? text : it->second));
    }

    auto need = [&](std::size_t n) {
        if (a.size() != n)
            throw std::runtime_error("op '" + op + "' expects " +
                                     std::to_string(n) + " argument(s), got " +
                                     std::to_string(a.size()));
    };

    if (op == "A2") {
        need(3);
        std::cout << A2_formula(sp, a[0], a[1], a[2]).str() << "\n";
    } else if (op == "A2_antisym") {
        need(3);
        std::cout << A2_antisym(sp, a[0], a[1], a[2]).str() << "\n";
    } else if (op == "A3_direct") {
        need(3);
        std::cout << A3_direct(sp, a[0], a[1], a[2]).str() << "\n";
    } else if (op == "A3_antisym") {
        need(3);
        std::cout << A3_antisym(sp, a[0], a[1], a[2]).str() << "\n";
    } else if (op == "O") {
        need(4);
        std::cout << obstruction_O(sp, a[0], a[1], a[2], a[3]).str() << "\n";
    } else if (op == "dA3") {
        need(4);
        auto routes = dA3_two_ways(sp, a[0], a[1], a[2], a[3]);
        if (routes.coboundary != routes.pentagon ||
            routes.pentagon != routes.direct_expansion)
            throw std::runtime_error("internal: dA3 routes disagree");
        std::cout << routes.coboundary.str() << "\n";
    } else if (op == "A3_cadabra") {
        need(1);
        std::cout << A3_cadabra(pi, a[0]).str() << "\n";
    } else if (op == "A3_closed_form") {
        need(1);
        std::cout << A3_closed_form(pi, a[0]).str() << "\n";
    } else if (op == "bracket") {
        need(2);
        std::cout << bracket(pi, a[0], a[1]).str() << "\n";
    } else if (op == "jacobiator") {
        need(3);
        std::cout << jacobiator(pi, a[0], a[1], a[2]).str() << "\n";
    } else if (op == "commutator") {
        need(2);
        std::cout << star_commutator(sp, a[0], a[1]).str() << "\n";
    } else {
        throw std::runtime_error(
            "unknown op '" + op +
            "'; known ops: A2, A2_antisym, A3_direct, A3_antisym, O, dA3, "
            "A3_cadabra, A3_closed_form, bracket, jacobiator, commutator");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for monopole (twisted-Poisson) "
                 "star products on T*R^3"};
    app.require_subcommand(1);

    FieldFlags field;
    std::string config_path, b3_mode, checks, format, out_path, op;
    std::vector<std::string> functions, args;
    int order = -1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field-b1", field.b1, "B^1 component (q-only expression)");
        cmd->add_option("--field-b2", field.b2, "B^2 component (q-only expression)");
        cmd->add_option("--field-b3", field.b3, "B^3 component (q-only expression)");
        cmd->add_option("--order", order, "truncation order (0..3, default 3)");
        cmd->add_option("--b3", b3_mode,
                        "third star coefficient: zero | random:<seed> | "
                        "pair:<seed>");
        cmd->add_option("--config", config_path,
                        "key-value config file (flags override it)");
        cmd->add_option("--function", functions,
                        "named function name=<expr>, usable as eval argument");
    };

    CLI::App* verify = app.add_subcommand("verify", "run named checks on a field");
    add_common(verify);
    verify->add_option("--checks", checks, "all or comma-separated check ids");
    verify->add_option("--format", format, "text | json");
    verify->add_option("--out", out_path, "write the report to a file");

    CLI::App* eval = app.add_subcommand("eval", "evaluate one operation");
    add_common(eval);
    eval->add_option("--op", op, "operation name")->required();
    eval->add_option("--arg", args, "expression argument (repeatable)");

    CLI::App* list = app.add_subcommand("list-checks", "list known check ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& def : mstar::check_registry())
                std::cout << def.id << "\n    " << def.description << "\n";
            return 0;
        }
        mstar::RunConfig cfg = assemble_config(config_path, field, order,
                                               b3_mode, checks, functions,
                                               format);
        if (verify->parsed()) return run_verify(cfg, out_path);
        if (eval->parsed()) return run_eval(cfg, op, args);
    } catch (const mstar::ParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
