// Command-line front end: exact bounds, constructive traces, replay
// verification, energy reports, and the brute-force oracle.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conway/algebraic.hpp"
#include "conway/board.hpp"
#include "conway/bounds.hpp"
#include "conway/oracle.hpp"
#include "conway/pagoda.hpp"
#include "conway/sequences.hpp"
#include "conway/strategies.hpp"
#include "conway/trace_io.hpp"
#include "conway/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kDecimalDigits = 12;

nlohmann::json field_json(const conway::FieldElement& x) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    bool rational = true;
    for (size_t i = 1; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] != 0) rational = false;
    }
    return {{"coeffs", coeffs},
            {"decimal", conway::decimal_string(x, kDecimalDigits)},
            {"exact", rational}};
}

int cmd_sequence(const std::string& kind, int k, long from, long to, int i) {
    nlohmann::json values = nlohmann::json::array();
    for (long n = from; n <= to; ++n) {
        conway::Int v;
        if (kind == "knacci")
            v = conway::knacci(k, n);
        else if (kind == "lucas")
            v = conway::lucas(n);
        else if (kind == "cumulative-a")
            v = conway::cumulative_a(k, n);
        else if (kind == "S")
            v = conway::S(k, i, n);
        else
            throw CLI::ValidationError("unknown sequence kind: " + kind);
        values.push_back(v.get_str());
    }
    nlohmann::json out{{"kind", kind}, {"from", from}, {"to", to}, {"values", values}};
    if (kind != "lucas") out["k"] = k;
    if (kind == "S") out["i"] = i;
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_constant(int k, int digits) {
    conway::Rat w = conway::Rat(1, 2) / conway::pow_rat(conway::Rat(10), digits + 1);
    conway::RootBracket b = conway::knacci_constant(k, w);
    // Tighten further if the value sits on a digit boundary.
    std::string dec;
    for (;;) {
        try {
            dec = conway::decimal_string(b.interval(), digits);
            break;
        } catch (const std::domain_error&) {
            b.refine_to(b.width() / 1024);
        }
    }
    nlohmann::json out{{"k", k}, {"digits", digits}, {"value", dec}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_bounds(int m, int k, int d) {
    conway::BoundsReport r = conway::bounds_report(conway::GameParams{m, k, d});
    nlohmann::json projected = nlohmann::json::array();
    for (const auto& p : r.projected) projected.push_back(p.get_str());
    nlohmann::json out{{"m", m},
                       {"k", k},
                       {"d", d},
                       {"lower", r.lower},
                       {"upper", r.upper},
                       {"strict_upper", r.strict_upper},
                       {"achieved", r.achieved},
                       {"projected_m", projected},
                       {"projected_m_substitution", r.projected_m_substitution}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_energy(int m, int k, int d, long row) {
    conway::GameParams params{m, k, d};
    conway::Position target(static_cast<size_t>(d), 0);
    target.back() = row;
    conway::WeightSpec spec{target, k};
    conway::FieldElement e = conway::background_energy(params, row, spec);
    nlohmann::json out{{"m", m}, {"k", k}, {"d", d}, {"row", row}, {"energy", field_json(e)}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_scan(int k, int d, long m_from, long m_to, const std::string& out_path) {
    auto entries = conway::scan_gap(k, d, conway::Int(m_from), conway::Int(m_to));
    std::string csv = "m,upper,achieved\n";
    for (const auto& e : entries)
        csv += e.m.get_str() + "," + std::to_string(e.upper) + "," + std::to_string(e.achieved) + "\n";
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw CLI::ValidationError("cannot open output file: " + out_path);
        f << csv;
    }
    return kExitOk;
}

int write_trace_out(const conway::MoveTrace& t, const std::string& out_path) {
    if (out_path.empty()) {
        conway::write_trace(std::cout, t);
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw CLI::ValidationError("cannot open output file: " + out_path);
        conway::write_trace(f, t);
    }
    return kExitOk;
}

int cmd_construct(int m, int k, int d, std::optional<long> n, const std::string& out_path) {
    conway::GameParams params{m, k, d};
    params.validate();
    if (d == 1) {
        long target = n.value_or(conway::max_row_1d(conway::Int(m), k));
        auto res = conway::column_fill_plan(conway::Int(m), k, target);
        if (!res.feasible) {
            std::cout << nlohmann::json{{"status", "infeasible"}, {"n", target}}.dump() << "\n";
            return kExitVerificationFailed;
        }
        return write_trace_out(res.plan.schedule, out_path);
    }
    if (d == 2) {
        auto plan = conway::projection_plan(params);
        if (n && *n != plan.target_row)
            throw CLI::ValidationError("construct: only the achieved row is plannable in 2-D");
        return write_trace_out(conway::flatten_projection(plan), out_path);
    }
    throw CLI::ValidationError("construct: flattened traces exist for d <= 2 only");
}

int cmd_amass(int m, int k, const std::string& out_path) {
    auto plan = conway::row1_amass_plan(conway::Int(m), k);
    return write_trace_out(plan.schedule, out_path);
}

int cmd_verify(const std::string& trace_path, bool energy_check) {
    std::ifstream f(trace_path, std::ios::binary);
    if (!f) throw CLI::ValidationError("cannot open trace file: " + trace_path);
    conway::MoveTrace t;
    try {
        t = conway::read_trace(f);
    } catch (const conway::TraceFormatError& e) {
        std::cout << nlohmann::json{{"status", "invalid_input"}, {"error", e.what()}}.dump() << "\n";
        return kExitInvalidInput;
    }
    conway::VerifyReport rep = conway::verify_trace(t, energy_check);
    nlohmann::json out{{"status", rep.ok ? "ok" : "verification_failed"},
                       {"moves_applied", rep.moves_applied},
                       {"max_row_reached", rep.max_row_reached}};
    if (!rep.ok) out["error"] = rep.failure;
    if (energy_check) out["energy_neutral_moves"] = rep.energy_neutral_moves;
    std::cout << out.dump() << "\n";
    return rep.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_oracle(int m, int k, int d, long depth, long top, long radius, size_t budget,
               const std::string& objective, long at_row, bool no_dominance) {
    conway::SearchConfig cfg;
    cfg.params = conway::GameParams{m, k, d};
    cfg.params.validate();
    cfg.window.lo.assign(static_cast<size_t>(d), -radius);
    cfg.window.hi.assign(static_cast<size_t>(d), radius);
    cfg.window.lo.back() = -depth;
    cfg.window.hi.back() = top;
    cfg.max_states = budget;
    cfg.use_dominance = !no_dominance;
    if (objective == "max-row") {
        cfg.objective = conway::Objective::MaxRow;
    } else if (objective == "max-count") {
        cfg.objective = conway::Objective::MaxCountAt;
        cfg.count_target.assign(static_cast<size_t>(d), 0);
        cfg.count_target.back() = at_row;
    } else {
        throw CLI::ValidationError("oracle: objective must be max-row or max-count");
    }
    conway::SearchResult res = conway::bfs_optimum(cfg);
    nlohmann::json out{{"value", res.value},
                       {"exhausted", res.exhausted},
                       {"states_seen", res.states_seen},
                       {"witness_moves", res.witness.moves.size()}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conway (m,k)-checkers: exact bounds, constructions, and verification"};
    app.require_subcommand(1);

    int m = 1, k = 2, d = 1, digits = 12, seq_i = 0;
    long n_from = 0, n_to = 0, row = 1, depth = 6, top = 4, radius = 0, at_row = 1;
    std::optional<long> target_n;
    size_t budget = 10'000'000;
    std::string kind = "knacci", out_path, trace_path, objective = "max-row";
    bool energy_check = false, no_dominance = false;

    auto* seq = app.add_subcommand("sequence", "Evaluate sequence kernels");
    seq->add_option("--kind", kind, "knacci | lucas | cumulative-a | S");
    seq->add_option("--k", k);
    seq->add_option("--i", seq_i, "partial-sum index for S");
    seq->add_option("--from", n_from);
    seq->add_option("--to", n_to);

    auto* cst = app.add_subcommand("constant", "Certified decimal expansion of phi_k");
    cst->add_option("--k", k);
    cst->add_option("--digits", digits);

    auto* bnd = app.add_subcommand("bounds", "Bounds report for one (m,k,d)");
    bnd->add_option("--m", m);
    bnd->add_option("--k", k);
    bnd->add_option("--d", d);

    auto* enr = app.add_subcommand("energy", "Exact fresh-board energy");
    enr->add_option("--m", m);
    enr->add_option("--k", k);
    enr->add_option("--d", d);
    enr->add_option("--row", row, "target row");

    auto* scn = app.add_subcommand("scan", "CSV of m values missing the upper bound");
    scn->add_option("--k", k);
    scn->add_option("--d", d);
    long m_from = 2, m_to = 50;
    scn->add_option("--m-from", m_from);
    scn->add_option("--m-to", m_to);
    scn->add_option("--out", out_path);

    auto* con = app.add_subcommand("construct", "Emit a reaching-row move trace");
    con->add_option("--m", m);
    con->add_option("--k", k);
    con->add_option("--d", d);
    con->add_option("--n", target_n, "target row (default: achieved row)");
    con->add_option("--out", out_path);

    auto* ams = app.add_subcommand("amass", "Emit a row-1 amassing move trace");
    ams->add_option("--m", m);
    ams->add_option("--k", k);
    ams->add_option("--out", out_path);

    auto* ver = app.add_subcommand("verify", "Replay a trace and check its claim");
    ver->add_option("--trace", trace_path)->required();
    ver->add_flag("--energy-check", energy_check);

    auto* orc = app.add_subcommand("oracle", "Exhaustive search on a truncated board");
    orc->add_option("--m", m);
    orc->add_option("--k", k);
    orc->add_option("--d", d);
    orc->add_option("--depth", depth);
    orc->add_option("--top", top);
    orc->add_option("--radius", radius);
    orc->add_option("--budget", budget);
    orc->add_option("--objective", objective, "max-row | max-count");
    orc->add_option("--at", at_row, "target row for max-count");
    orc->add_flag("--no-dominance", no_dominance);

    try {
        app.parse(argc, argv);
        if (seq->parsed()) return cmd_sequence(kind, k, n_from, n_to, seq_i);
        if (cst->parsed()) return cmd_constant(k, digits);
        if (bnd->parsed()) return cmd_bounds(m, k, d);
        if (enr->parsed()) return cmd_energy(m, k, d, row);
        if (scn->parsed()) return cmd_scan(k, d, m_from, m_to, out_path);
        if (con->parsed()) return cmd_construct(m, k, d, target_n, out_path);
        if (ams->parsed()) return cmd_amass(m, k, out_path);
        if (ver->parsed()) return cmd_verify(trace_path, energy_check);
        if (orc->parsed()) return cmd_oracle(m, k, d, depth, top, radius, budget, objective, at_row, no_dominance);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitInvalidInput;
}
