/**
 * Command implementations behind the `srbetti` executable. Each command
 * writes to a stream and returns the process exit status, so tests can run
 * them in-process.
 *
 * Exit status: 0 success, 1 a verification check failed, 2 bad input.
 */

#ifndef SRBETTI_CLI_HPP
#define SRBETTI_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "betti.hpp"
#include "exactla.hpp"
#include "graphs.hpp"
#include "hilbert.hpp"
#include "simplicial.hpp"
#include "verify.hpp"

namespace srbetti::cli {

enum class Format { text, json };

struct CliConfig
{
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    int n_cap = 20;
    Format format = Format::text;
    std::uint64_t seed = 7;
    unsigned threads = 1;
    bool exhaustive_froberg = false;
    bool field_check = true;

    VerifyOptions verify_options() const
    {
        if (n_cap > kMaxVertices) throw InvalidArgument("n-cap may not exceed 64");
        VerifyOptions o;
        o.betti.vertex_cap = n_cap;
        o.betti.threads = threads;
        o.check_field_dependence = field_check;
        return o;
    }
};

inline bool is_graph_path(const std::string& path)
{
    return path.size() >= 6 && path.compare(path.size() - 6, 6, ".graph") == 0;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ")
{
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
    return s.str();
}

/// Betti diagram: column i is the homological position, row r holds beta_{i, i+r}.
inline std::string betti_diagram(const BettiTable& t)
{
    const int cols = t.pdim() + 1;
    int rows = 1;
    for (const auto& [key, v] : t.entries) rows = std::max(rows, key.second - key.first + 1);
    auto totals = t.totals();
    std::vector<std::vector<std::string>> cells(rows + 2, std::vector<std::string>(cols, "."));
    for (int i = 0; i < cols; ++i) {
        cells[0][i] = std::to_string(i);
        cells[1][i] = std::to_string(totals[i]);
    }
    for (const auto& [key, v] : t.entries) cells[2 + key.second - key.first][key.first] = std::to_string(v);
    std::vector<std::size_t> width(cols, 1);
    for (const auto& row : cells)
        for (int i = 0; i < cols; ++i) width[i] = std::max(width[i], row[i].size());

    std::vector<std::string> heads{"", "total:"};
    for (int r = 0; r < rows; ++r) heads.push_back(std::to_string(r) + ":");
    std::size_t head_width = 0;
    for (const auto& h : heads) head_width = std::max(head_width, h.size());

    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out << std::setw(static_cast<int>(head_width)) << heads[r];
        for (int i = 0; i < cols; ++i) out << ' ' << std::setw(static_cast<int>(width[i])) << cells[r][i];
        out << '\n';
    }
    return out.str();
}

inline std::string describe_shape(const VerificationReport& r)
{
    switch (r.shape.kind) {
    case ResolutionKind::zero_ideal: return "zero ideal (complex is a simplex)";
    case ResolutionKind::general: return "general (not pure)";
    case ResolutionKind::pure:
    case ResolutionKind::linear: {
        std::string s = r.shape.is_linear() ? "linear t=" + std::to_string(r.shape.t) + " " : "pure non-linear ";
        s += "(" + join(r.shape.degrees, ",") + "), formula match: ";
        s += r.formula_matches() ? "yes" : "NO";
        return s;
    }
    }
    return "?";
}

inline void write_report_text(std::ostream& out, const VerificationReport& r)
{
    auto ok = [](bool b) { return b ? "ok" : "FAILED"; };
    out << "complex: " << r.fingerprint << " (n=" << r.n << ", dim=" << r.d - 1 << ")\n";
    out << "field: " << r.field.name() << '\n';
    out << "f-vector: (" << join(r.f.entries) << ")\n";
    out << "h-vector: (" << join(r.h.entries) << ")\n";
    out << "Hilbert series: (" << r.series.numerator.to_string() << ") / (1 - z)^" << r.series.pole_order << '\n';
    out << "Hilbert polynomial (binomial basis): (" << join(r.hilbert_poly.binom_coeffs) << ")\n";
    out << "multiplicity: " << r.multiplicity_check.sum_h << " (f_{d-1} = " << r.multiplicity_check.top_face_count
        << ", " << ok(r.multiplicity_check.equal) << ")\n";
    out << "Betti table:\n" << betti_diagram(r.betti_table);
    out << "resolution: " << describe_shape(r) << '\n';
    if (r.pure) {
        out << "  top index: " << r.pure->top << ", degrees: (" << join(r.pure->degrees) << ")\n";
        out << "  Betti numbers: (" << join(r.pure->betti) << ")\n";
        if (r.formula_betti) out << "  from h-vector: (" << join(*r.formula_betti) << ")\n";
        if (r.formula_error) out << "  formula error: " << *r.formula_error << '\n';
        out << "  series identity residual: " << r.series_residual->to_string() << '\n';
        out << "  lower bound: " << ok(r.bound_holds()) << '\n';
    }
    if (r.relation_residuals) {
        std::vector<std::int64_t> res;
        for (const auto& x : *r.relation_residuals) res.push_back(x.residual);
        out << "  h-vector relations (j > " << r.shape.top + r.shape.t << "): (" << join(res) << ") "
            << ok(r.relations_vanish()) << '\n';
    }
    out << "table identity residual: " << r.table_residual.to_string() << '\n';
    out << "pdim " << r.pdim << " >= codim " << r.codim << ": " << ok(r.pdim >= r.codim) << '\n';
    if (r.field_dependence_checked)
        out << "field dependence: "
            << (r.field_dependent ? "Betti numbers over " + r.field.name() + " DIFFER from Q" : std::string("none (agrees with Q)"))
            << '\n';
}

inline void write_graph_text(std::ostream& out, const GraphVerification& g)
{
    out << "graph: " << g.graph.n() << " vertices, " << g.graph.edges().size()
        << " edges, chordal: " << (g.chordal ? "yes" : "no") << '\n';
    out << "clique complex resolution is 2-linear iff chordal: " << (g.froberg_ok ? "ok" : "FAILED") << '\n';
    if (g.chordal_relations) {
        std::vector<std::int64_t> res;
        for (const auto& x : *g.chordal_relations) res.push_back(x.residual);
        out << "chordal h-vector relations: (" << join(res) << ")\n";
    }
    write_report_text(out, g.report);
}

/// Analyze one .cplx or .graph file.
inline int cmd_analyze(const std::string& path, const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const VerifyOptions opts = config.verify_options();
        if (is_graph_path(path)) {
            GraphVerification g = verify_graph(read_graph_file(path), config.field, opts, path);
            if (config.format == Format::json)
                out << to_json(g).dump(2) << '\n';
            else
                write_graph_text(out, g);
        } else {
            VerificationReport r = verify_complex(read_complex_file(path), config.field, opts);
            if (config.format == Format::json)
                out << to_json(r).dump(2) << '\n';
            else
                write_report_text(out, r);
        }
        return 0;
    } catch (const ParseError& e) {
        err << path << ": parse error at " << e.what() << '\n';
    } catch (const Error& e) {
        err << path << ": " << e.what() << '\n';
    }
    return 2;
}

inline int cmd_gen_chordal(int n, double density, std::uint64_t seed, const std::string& out_path,
                           const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (n > config.n_cap) throw TooManyVertices(n, config.n_cap);
        Graph g = gen_chordal(n, density, seed);
        if (out_path.empty() || out_path == "-") {
            write_graph(out, g);
        } else {
            std::ofstream file(out_path);
            if (!file) throw Error("cannot write " + out_path);
            write_graph(file, g);
            if (!file) throw Error("write failed for " + out_path);
        }
        return 0;
    } catch (const Error& e) {
        err << "gen-chordal: " << e.what() << '\n';
    }
    return 2;
}

struct VerifyRequest
{
    int count = 50;
    int n_max = 9;
    std::vector<std::string> paths;
};

inline void write_checks_text(std::ostream& out, const std::map<std::string, CheckCount>& checks)
{
    out << std::left << std::setw(24) << "check" << std::right << std::setw(9) << "checked" << std::setw(9) << "passed"
        << '\n';
    for (const auto& [name, c] : checks)
        out << std::left << std::setw(24) << name << std::right << std::setw(9) << c.checked << std::setw(9) << c.passed
            << '\n';
}

/// Verify explicit files, or the seeded chordal corpus when no paths are given.
inline int cmd_verify(const VerifyRequest& request, const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const VerifyOptions opts = config.verify_options();
        if (request.paths.empty()) {
            CorpusSummary s = verify_chordal_corpus(request.count, request.n_max, config.seed, config.field, opts,
                                                    config.threads);
            if (config.exhaustive_froberg) s.sweep = froberg_sweep(6, config.field, config.threads);
            if (config.format == Format::json) {
                out << to_json(s).dump(2) << '\n';
            } else {
                out << "corpus: " << s.count << " chordal graphs (n <= " << s.n_max << ", seed " << s.seed
                    << ") + C4, C5, C6 over " << s.field.name() << '\n';
                write_checks_text(out, s.checks);
                if (s.sweep)
                    out << "exhaustive sweep n=" << s.sweep->n << ": " << s.sweep->graphs << " graphs, "
                        << s.sweep->chordal << " chordal, " << s.sweep->linear << " 2-linear, "
                        << s.sweep->exceptions << " exceptions\n";
                out << "result: " << (s.all_passed() ? "PASS" : "FAIL") << " (" << s.passed << " passed, " << s.failed
                    << " failed)\n";
                if (s.first_failure) out << "first failure: " << *s.first_failure << '\n';
            }
            return s.all_passed() ? 0 : 1;
        }

        std::map<std::string, CheckCount> checks;
        nlohmann::ordered_json results = nlohmann::ordered_json::array();
        std::ostringstream text;
        bool all = true;
        for (const auto& path : request.paths) {
            bool passed;
            if (is_graph_path(path)) {
                GraphVerification g = verify_graph(read_graph_file(path), config.field, opts, path);
                tally(checks, g.report);
                auto& fr = checks["froberg"];
                ++fr.checked;
                fr.passed += g.froberg_ok;
                passed = g.passed();
                results.push_back(to_json(g));
                text << path << ": " << describe_shape(g.report) << ", chordal: " << (g.chordal ? "yes" : "no");
                if (g.report.field_dependent) text << ", field dependent";
            } else {
                VerificationReport r = verify_complex(read_complex_file(path), config.field, opts);
                tally(checks, r);
                passed = r.passed();
                nlohmann::ordered_json j = to_json(r);
                j["path"] = path;
                results.push_back(j);
                text << path << ": " << describe_shape(r);
                if (r.field_dependent) text << ", field dependent (Betti numbers over " << r.field.name() << " differ from Q)";
            }
            text << " -> " << (passed ? "PASS" : "FAIL") << '\n';
            all = all && passed;
        }
        if (config.format == Format::json) {
            nlohmann::ordered_json j;
            j["field"] = config.field.name();
            nlohmann::ordered_json cj = nlohmann::ordered_json::object();
            for (const auto& [name, c] : checks) cj[name] = {{"checked", c.checked}, {"passed", c.passed}};
            j["checks"] = cj;
            j["all_passed"] = all;
            j["results"] = results;
            out << j.dump(2) << '\n';
        } else {
            out << text.str();
            write_checks_text(out, checks);
            out << "result: " << (all ? "PASS" : "FAIL") << '\n';
        }
        return all ? 0 : 1;
    } catch (const ParseError& e) {
        err << "verify: parse error at " << e.what() << '\n';
    } catch (const Error& e) {
        err << "verify: " << e.what() << '\n';
    }
    return 2;
}

} // namespace srbetti::cli

#endif // SRBETTI_CLI_HPP
