#pragma once

// Batch front end: run configuration, the check runner, and report
// rendering (text and JSON). Reports are deterministic: identical
// configuration and seeds produce byte-identical output.

#include "mstar/checks.hpp"
#include "mstar/expr.hpp"
#include "mstar/field.hpp"
#include "mstar/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstar {

inline constexpr const char* version_string = "0.1.0";

struct RunConfig {
    std::array<std::string, 3> field_exprs{"0", "0", "0"};
    int order = 3;
    B3Mode b3;
    std::vector<std::string> checks; // empty or {"all"} means everything
    std::map<std::string, std::string> functions;
    enum class Format { text, json } format = Format::text;
};

inline B3Mode parse_b3_mode(const std::string& text) {
    B3Mode mode;
    if (text == "zero") {
        mode.kind = B3Mode::Kind::zero;
        return mode;
    }
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    if (colon == std::string::npos || (head != "random" && head != "pair"))
        throw std::runtime_error(
            "b3 mode must be zero, random:<seed> or pair:<seed>; got '" + text +
            "'");
    mode.kind = head == "random" ? B3Mode::Kind::random : B3Mode::Kind::pair;
    std::string seed = text.substr(colon + 1);
    if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error("b3 seed must be a non-negative integer; got '" +
                                 seed + "'");
    mode.seed = std::stoull(seed);
    return mode;
}

// Flat key-value configuration file: `key = value` lines, '#' comments.
// Recognized keys: field.b1, field.b2, field.b3, order, b3_mode, checks,
// output, functions.<name>.
inline RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key == "field.b1")
            cfg.field_exprs[0] = value;
        else if (key == "field.b2")
            cfg.field_exprs[1] = value;
        else if (key == "field.b3")
            cfg.field_exprs[2] = value;
        else if (key == "order") {
            if (value.empty() ||
                value.find_first_not_of("0123456789") != std::string::npos)
                throw std::runtime_error("config line " + std::to_string(lineno) +
                                         ": order must be an integer in 0..3");
            cfg.order = std::stoi(value);
        }
        else if (key == "b3_mode")
            cfg.b3 = parse_b3_mode(value);
        else if (key == "checks") {
            cfg.checks.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (!item.empty()) cfg.checks.push_back(item);
            }
        } else if (key == "output") {
            if (value == "text")
                cfg.format = RunConfig::Format::text;
            else if (value == "json")
                cfg.format = RunConfig::Format::json;
            else
                throw std::runtime_error("config line " + std::to_string(lineno) +
                                         ": output must be text or json");
        } else if (key.rfind("functions.", 0) == 0) {
            cfg.functions[key.substr(10)] = value;
        } else {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

struct ReportEntry {
    std::string id;
    std::string status;   // "pass" | "fail" (raw identity outcome)
    std::string expected; // "pass" | "nonzero"
    std::string lhs, rhs;
    std::string witness; // empty when none
    bool reproduced() const {
        return expected == "pass" ? status == "pass" : status == "fail";
    }
};

struct Report {
    std::map<std::string, std::string> conventions;
    std::array<std::string, 3> field_echo;
    std::string field_div;
    std::vector<ReportEntry> entries;
    int pass_count = 0, fail_count = 0;
    bool all_reproduced = true;
};

inline Report run(const RunConfig& config) {
    if (config.order < 0 || config.order > 3)
        throw std::invalid_argument("order must be between 0 and 3");

    FieldConfig field = FieldConfig::make(parse_expr(config.field_exprs[0]),
                                          parse_expr(config.field_exprs[1]),
                                          parse_expr(config.field_exprs[2]));

    std::vector<Expr> extra;
    for (const auto& [name, text] : config.functions) {
        try {
            extra.push_back(parse_expr(text));
        } catch (const ParseError& e) {
            throw std::runtime_error("function '" + name + "': " + e.what());
        }
    }

    std::vector<std::string> ids = config.checks;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
        ids.clear();
        for (const auto& def : check_registry()) ids.push_back(def.id);
    } else {
        for (const auto& id : ids)
            if (!find_check(id)) {
                std::string known;
                for (const auto& def : check_registry())
                    known += (known.empty() ? "" : ", ") + def.id;
                throw std::runtime_error("unknown check id '" + id +
                                         "'; known checks: " + known);
            }
    }

    CheckContext ctx = CheckContext::make(field, config.b3, extra, config.order);

    Report report;
    report.field_echo = config.field_exprs;
    for (int k = 0; k < 3; ++k)
        report.field_echo[k] = ctx.field.component[k].str();
    report.field_div = ctx.field.divergence.str();
    report.conventions = {
        {"bracket", "{f,g} = sum_{I,J} Pi^{IJ} dI f dJ g with Pi^{q_i p_j} = "
                    "delta_ij, Pi^{p_i p_j} = eps_{ijk} B^k; {q_i,p_j} = "
                    "delta_ij"},
        {"b1_normalization", "B1(f,g) = {f,g}"},
        {"lambda_hbar", "lambda = i*hbar/2, so [q_i,p_j] = 2 lambda delta_ij = "
                        "i hbar delta_ij"},
        {"b2", "B2(f,g) = 1/2 Pi^{IJ} Pi^{KL} (dIdK f)(dJdL g) + 1/3 Pi^{IJ} "
               "(dJ Pi^{KL}) ((dIdK f)(dL g) - (dK f)(dIdL g))"},
        {"jordan_product", "f o g = 1/2 (f*g + g*f)"},
        {"jacobiator_momenta", "J(p1,p2,p3) = -div B"},
        {"a2_momenta", "A2(p1,p2,p3) = -2/3 div B"},
        {"a2_alternation_over_jacobiator", "2/3"},
        {"b3_mode", config.b3.describe() + "; independence checks use seeds " +
                        std::to_string(ctx.b3_seed_a) + "/" +
                        std::to_string(ctx.b3_seed_b)},
        {"order", std::to_string(config.order)},
    };

    for (const auto& id : ids) {
        const CheckDef* def = find_check(id);
        if (config.order < def->min_order) {
            ReportEntry entry;
            entry.id = def->id;
            entry.status = "pass";
            entry.expected = "pass";
            entry.lhs = "skipped";
            entry.rhs = "requires order >= " + std::to_string(def->min_order);
            report.pass_count += 1;
            report.entries.push_back(std::move(entry));
            continue;
        }
        for (const auto& outcome : def->run(ctx)) {
            ReportEntry entry;
            entry.id = outcome.verdict.check_id;
            entry.status = outcome.verdict.pass ? "pass" : "fail";
            entry.expected = outcome.expected;
            entry.lhs = outcome.verdict.lhs;
            entry.rhs = outcome.verdict.rhs;
            if (outcome.verdict.witness_difference)
                entry.witness = outcome.verdict.witness_difference->str();
            if (outcome.verdict.witness_inputs) {
                if (!entry.witness.empty()) entry.witness += " at ";
                entry.witness += *outcome.verdict.witness_inputs;
            }
            (outcome.verdict.pass ? report.pass_count : report.fail_count) += 1;
            if (!entry.reproduced()) report.all_reproduced = false;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

inline nlohmann::json to_json(const Report& report) {
    nlohmann::json j;
    j["conventions"] = report.conventions;
    j["field"] = {{"b1", report.field_echo[0]},
                  {"b2", report.field_echo[1]},
                  {"b3", report.field_echo[2]},
                  {"div", report.field_div}};
    j["verdicts"] = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json v;
        v["id"] = e.id;
        v["status"] = e.status;
        v["expected"] = e.expected;
        v["lhs"] = e.lhs;
        v["rhs"] = e.rhs;
        v["witness"] = e.witness.empty() ? nlohmann::json(nullptr)
                                         : nlohmann::json(e.witness);
        j["verdicts"].push_back(v);
    }
    j["summary"] = {{"pass", report.pass_count}, {"fail", report.fail_count}};
    j["engine_version"] = version_string;
    return j;
}

inline std::string to_text(const Report& report) {
    std::ostringstream out;
    out << "star-product verification report (engine " << version_string
        << ")\n";
    out << "conventions:\n";
    for (const auto& [k, v] : report.conventions)
        out << "  " << k << ": " << v << "\n";
    out << "field: B = (" << report.field_echo[0] << ", " << report.field_echo[1]
        << ", " << report.field_echo[2] << "), div B = " << report.field_div
        << "\n";
    if (report.field_div == "0")
        out << "note: divergence-free, associative-compatible field; the "
               "monopole witnesses are expected to vanish\n";
    out << "\n";
    for (const auto& e : report.entries) {
        bool ok = e.reproduced();
        out << (ok ? "[ ok ] " : "[FAIL] ") << e.id << " (status " << e.status
            << ", expected " << e.expected << ")\n";
        if (!ok || e.status == "fail") {
            out << "       lhs: " << e.lhs << "\n";
            out << "       rhs: " << e.rhs << "\n";
            if (!e.witness.empty()) out << "       witness: " << e.witness << "\n";
        }
    }
    out << "\nsummary: " << report.pass_count << " pass, " << report.fail_count
        << " fail; expected structure "
        << (report.all_reproduced ? "reproduced" : "NOT reproduced") << "\n";
    return out.str();
}

} // namespace mstar
