/**
 * End-to-end cross-checks: compute the Betti table of k[Δ] by Hochster's
 * formula and test every h-vector identity against it. Disagreements are
 * recorded in the report, never thrown.
 */

#ifndef SRBETTI_VERIFY_HPP
#define SRBETTI_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "betti.hpp"
#include "common.hpp"
#include "exactla.hpp"
#include "formulas.hpp"
#include "graphs.hpp"
#include "hilbert.hpp"
#include "simplicial.hpp"

namespace srbetti {

/// FNV-1a over the vertex count byte and each facet as 8 little-endian bytes.
inline std::uint64_t facet_hash(const Complex& c)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    mix(static_cast<std::uint8_t>(c.n()));
    for (VertexSet f : c.facets())
        for (int b = 0; b < 8; ++b) mix(static_cast<std::uint8_t>(f >> (8 * b)));
    return h;
}

inline std::string fingerprint(const Complex& c)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "n%d-%016llx", c.n(), static_cast<unsigned long long>(facet_hash(c)));
    return buf;
}

struct VerifyOptions
{
    BettiOptions betti;
    /// Recompute the table over Q and flag any difference.
    bool check_field_dependence = true;
};

struct MultiplicityCheck
{
    std::int64_t sum_h = 0;
    std::int64_t top_face_count = 0;
    bool equal = false;
};

struct VerificationReport
{
    std::string fingerprint;
    int n = 0;
    int d = 0;
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    FVector f;
    HVector h;
    HilbertSeries series;
    bool series_matches_h = false;
    HilbertPolynomial hilbert_poly;
    BettiTable betti_table;
    ResolutionShape shape;

    // Present for pure shapes.
    std::optional<PureResolution> pure;
    std::optional<std::vector<std::int64_t>> formula_betti;
    std::optional<std::string> formula_error;
    std::vector<bool> match;
    std::optional<bool> linear_specialization;
    std::optional<IntPolynomial> series_residual;
    std::optional<std::vector<bool>> bound_verdicts;

    // Present for linear shapes.
    std::optional<std::vector<Relation>> relation_residuals;

    MultiplicityCheck multiplicity_check;
    /// (1-z)^{n-d} h(z) minus the alternating sum of the whole table; zero for every shape.
    IntPolynomial table_residual;
    int pdim = 0;
    int codim = 0;

    bool field_dependence_checked = false;
    bool field_dependent = false;
    std::optional<BettiTable> reference_table;

    bool formula_matches() const
    {
        return formula_betti && std::all_of(match.begin(), match.end(), [](bool b) { return b; });
    }
    bool relations_vanish() const
    {
        return relation_residuals
               && std::all_of(relation_residuals->begin(), relation_residuals->end(),
                              [](const Relation& r) { return r.residual == 0; });
    }
    bool bound_holds() const
    {
        return bound_verdicts && std::all_of(bound_verdicts->begin(), bound_verdicts->end(), [](bool b) { return b; });
    }

    /// Every identity that applies to this shape holds. Field dependence is informational.
    bool passed() const
    {
        bool ok = multiplicity_check.equal && series_matches_h && table_residual.is_zero() && pdim >= codim;
        if (shape.is_pure())
            ok = ok && formula_matches() && series_residual && series_residual->is_zero() && bound_holds();
        if (shape.is_linear()) ok = ok && linear_specialization.value_or(false) && relations_vanish();
        return ok;
    }
};

inline VerificationReport verify_complex(const Complex& c, const FieldSpec& field, const VerifyOptions& options = {})
{
    if (c.n() > options.betti.vertex_cap) throw TooManyVertices(c.n(), options.betti.vertex_cap);
    VerificationReport r;
    r.fingerprint = fingerprint(c);
    r.n = c.n();
    r.field = field;
    r.f = f_vector(c);
    r.d = r.f.d();
    r.h = h_vector(r.f);
    r.series = series_from_f(r.f);
    r.series_matches_h = r.series.pole_order == r.d && r.series.numerator == IntPolynomial(r.h.entries);
    r.hilbert_poly = hilbert_polynomial(r.h, r.d);
    r.multiplicity_check.sum_h = multiplicity(r.h);
    r.multiplicity_check.top_face_count = r.f.entries.back();
    r.multiplicity_check.equal = r.multiplicity_check.sum_h == r.multiplicity_check.top_face_count;

    r.betti_table = graded_betti(c, field, options.betti);
    r.shape = classify(r.betti_table);
    r.pdim = r.betti_table.pdim();
    r.codim = r.n - r.d;
    r.table_residual = IntPolynomial::one_minus_z_pow(r.codim) * IntPolynomial(r.h.entries)
                       - numerator_from_table(r.betti_table);

    if (r.shape.is_pure()) {
        r.pure = pure_resolution(r.betti_table, r.shape);
        try {
            r.formula_betti = betti_from_h(FormulaInput{r.h, r.n, r.d, r.shape});
        } catch (const NonPositiveResult& e) {
            r.formula_error = e.what();
        }
        if (r.formula_betti)
            for (std::size_t i = 0; i < r.pure->betti.size(); ++i)
                r.match.push_back((*r.formula_betti)[i] == r.pure->betti[i]);
        r.series_residual = verify_series_identity(r.h, r.n, r.d, *r.pure);
        r.bound_verdicts = check_lower_bound(r.pure->betti, r.pure->top);
    }
    if (r.shape.is_linear()) {
        try {
            r.linear_specialization = betti_from_h_linear(r.h, r.shape.t, r.shape.top, r.n, r.d) == r.formula_betti;
        } catch (const NonPositiveResult&) {
            r.linear_specialization = false;
        }
        r.relation_residuals = h_relations(r.h, r.n, r.d, r.shape.top, r.shape.t);
    }

    if (options.check_field_dependence && !field.is_rational()) {
        r.field_dependence_checked = true;
        r.reference_table = graded_betti(c, FieldSpec::rationals(), options.betti);
        r.field_dependent = !r.reference_table->same_numbers(r.betti_table);
    }
    return r;
}

namespace detail {

/// Decimal string, for integers that may exceed 53 bits.
inline std::string dec(std::int64_t v) { return std::to_string(v); }

inline nlohmann::ordered_json dec_array(const std::vector<std::int64_t>& v)
{
    auto out = nlohmann::ordered_json::array();
    for (auto x : v) out.push_back(dec(x));
    return out;
}

inline nlohmann::ordered_json table_json(const BettiTable& t)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& [key, v] : t.entries)
        out.push_back(nlohmann::ordered_json{{"i", key.first}, {"j", key.second}, {"value", dec(v)}});
    return out;
}

} // namespace detail

/**
 * JSON form of a report. Structural integers (n, d, degrees, indices) are
 * numbers; counts and polynomial coefficients are decimal strings.
 */
inline nlohmann::ordered_json to_json(const VerificationReport& r)
{
    using nlohmann::ordered_json;
    using detail::dec;
    using detail::dec_array;
    ordered_json j;
    j["identity"] = {{"n", r.n}, {"facet_hash", r.fingerprint.substr(r.fingerprint.find('-') + 1)}, {"fingerprint", r.fingerprint}};
    j["field"] = r.field.name();
    j["d"] = r.d;
    j["f"] = dec_array(r.f.entries);
    j["h"] = dec_array(r.h.entries);
    j["hilbert_series"] = {{"numerator", dec_array(r.series.numerator.coefficients())},
                           {"pole_order", r.series.pole_order},
                           {"matches_h", r.series_matches_h}};
    j["hilbert_polynomial"] = dec_array(r.hilbert_poly.binom_coeffs);
    j["betti_table"] = detail::table_json(r.betti_table);
    ordered_json shape = {{"kind", to_string(r.shape.kind)}};
    if (r.shape.is_pure()) {
        shape["degrees"] = r.shape.degrees;
        shape["top"] = r.shape.top;
    }
    if (r.shape.is_linear()) shape["t"] = r.shape.t;
    j["shape"] = shape;
    if (r.pure) j["pure_resolution"] = {{"top", r.pure->top}, {"degrees", r.pure->degrees}, {"betti", dec_array(r.pure->betti)}};
    if (r.formula_betti) j["formula_betti"] = dec_array(*r.formula_betti);
    if (r.formula_error) j["formula_error"] = *r.formula_error;
    if (r.shape.is_pure()) j["match"] = r.match;
    if (r.linear_specialization) j["linear_specialization"] = *r.linear_specialization;
    j["multiplicity_check"] = {{"sum_h", dec(r.multiplicity_check.sum_h)},
                               {"f_top", dec(r.multiplicity_check.top_face_count)},
                               {"equal", r.multiplicity_check.equal}};
    if (r.series_residual) j["series_residual"] = dec_array(r.series_residual->coefficients());
    j["table_residual"] = dec_array(r.table_residual.coefficients());
    if (r.relation_residuals) {
        auto rel = ordered_json::array();
        for (const auto& x : *r.relation_residuals) rel.push_back({{"j", x.j}, {"residual", dec(x.residual)}});
        j["relation_residuals"] = rel;
    }
    if (r.bound_verdicts) j["bound_verdicts"] = *r.bound_verdicts;
    j["pdim_vs_codim"] = {{"pdim", r.pdim}, {"codim", r.codim}, {"holds", r.pdim >= r.codim}};
    ordered_json fd = {{"checked", r.field_dependence_checked}};
    if (r.field_dependence_checked) {
        fd["reference_field"] = "Q";
        fd["dependent"] = r.field_dependent;
        if (r.field_dependent) fd["reference_table"] = detail::table_json(*r.reference_table);
    }
    j["field_dependence"] = fd;
    j["passed"] = r.passed();
    return j;
}

/// A graph checked through its clique complex.
struct GraphVerification
{
    std::string name;
    Graph graph;
    bool chordal = false;
    VerificationReport report;
    /// Two-sided check: chordal iff the resolution is 2-linear (or the ideal is zero).
    bool froberg_ok = false;
    /// Relations with t = 2 for chordal, non-complete graphs.
    std::optional<std::vector<Relation>> chordal_relations;

    bool passed() const
    {
        bool ok = report.passed() && froberg_ok;
        if (chordal_relations)
            ok = ok && std::all_of(chordal_relations->begin(), chordal_relations->end(),
                                   [](const Relation& r) { return r.residual == 0; });
        return ok;
    }
};

/// Chordal iff the clique complex has a 2-linear resolution; zero ideals count as linear.
inline bool two_linear_or_zero(const ResolutionShape& s)
{
    return s.kind == ResolutionKind::zero_ideal || (s.is_linear() && s.t == 2);
}

inline GraphVerification verify_graph(const Graph& g, const FieldSpec& field, const VerifyOptions& options = {},
                                      std::string name = {})
{
    GraphVerification out;
    out.name = std::move(name);
    out.graph = g;
    out.chordal = is_chordal(g).chordal;
    Complex delta = clique_complex(g);
    out.report = verify_complex(delta, field, options);
    out.froberg_ok = out.chordal == two_linear_or_zero(out.report.shape);
    if (out.chordal && out.report.shape.kind != ResolutionKind::zero_ideal) {
        const auto& r = out.report;
        out.chordal_relations = h_relations(r.h, r.n, r.d, r.shape.top, 2);
    }
    return out;
}

inline nlohmann::ordered_json to_json(const GraphVerification& v)
{
    nlohmann::ordered_json j;
    j["name"] = v.name;
    j["n"] = v.graph.n();
    auto edges = nlohmann::ordered_json::array();
    for (auto [a, b] : v.graph.edges()) edges.push_back({v.graph.labels()[a], v.graph.labels()[b]});
    j["edges"] = edges;
    j["chordal"] = v.chordal;
    j["froberg_ok"] = v.froberg_ok;
    if (v.chordal_relations) {
        auto rel = nlohmann::ordered_json::array();
        for (const auto& x : *v.chordal_relations) rel.push_back({{"j", x.j}, {"residual", detail::dec(x.residual)}});
        j["chordal_relations"] = rel;
    }
    j["passed"] = v.passed();
    j["report"] = to_json(v.report);
    return j;
}

struct CheckCount
{
    int checked = 0;
    int passed = 0;
};

/// Tally of which identity checks applied and held, keyed by check name.
inline void tally(std::map<std::string, CheckCount>& counts, const VerificationReport& r)
{
    auto add = [&](const char* name, bool ok) {
        auto& c = counts[name];
        ++c.checked;
        c.passed += ok ? 1 : 0;
    };
    add("multiplicity", r.multiplicity_check.equal);
    add("hilbert_series", r.series_matches_h);
    add("table_identity", r.table_residual.is_zero());
    add("pdim_codim", r.pdim >= r.codim);
    if (r.shape.is_pure()) {
        add("betti_formula", r.formula_matches());
        add("series_identity", r.series_residual && r.series_residual->is_zero());
        add("lower_bound", r.bound_holds());
    }
    if (r.shape.is_linear()) {
        add("linear_specialization", r.linear_specialization.value_or(false));
        add("h_relations", r.relations_vanish());
    }
}

struct CorpusEntry
{
    int index = 0;
    int n = 0;
    double density = 0;
    std::uint64_t seed = 0;
    GraphVerification result;
};

struct FrobergSweep
{
    int n = 0;
    int graphs = 0;
    int chordal = 0;
    int linear = 0;
    int exceptions = 0;
    /// Edge bitmask (pairs u < v in lexicographic order) of the first exception.
    std::optional<std::uint32_t> first_exception;
};

struct CorpusSummary
{
    int count = 0;
    int n_max = 0;
    std::uint64_t seed = 0;
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    std::vector<CorpusEntry> entries;
    std::vector<GraphVerification> non_chordal;
    std::optional<FrobergSweep> sweep;
    std::map<std::string, CheckCount> checks;
    int passed = 0;
    int failed = 0;
    std::optional<std::string> first_failure;

    bool all_passed() const { return failed == 0 && (!sweep || sweep->exceptions == 0); }
};

namespace detail {

template <class Fn>
void parallel_for(int count, unsigned threads, Fn fn)
{
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max(count, 1)));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers)) fn(i);
        });
}

} // namespace detail

/**
 * Graph edge set from a bitmask over the pairs (0,1), (0,2), ..., (n-2,n-1).
 */
inline Graph graph_from_edge_mask(int n, std::uint64_t mask)
{
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

/**
 * All 2^{n(n-1)/2} labeled graphs on n vertices: clique complex has a
 * 2-linear resolution (or zero ideal) iff the graph is chordal.
 */
inline FrobergSweep froberg_sweep(int n, const FieldSpec& field, unsigned threads = 1)
{
    if (n < 1 || n > 7) throw InvalidArgument("exhaustive sweep supports 1 <= n <= 7");
    const int pairs = n * (n - 1) / 2;
    const int total = 1 << pairs;
    std::vector<char> chordal(total), linear(total);
    detail::parallel_for(total, threads, [&](int mask) {
        Graph g = graph_from_edge_mask(n, static_cast<std::uint64_t>(mask));
        chordal[mask] = is_chordal(g).chordal;
        linear[mask] = two_linear_or_zero(classify(graded_betti(clique_complex(g), field)));
    });
    FrobergSweep s;
    s.n = n;
    s.graphs = total;
    for (int mask = 0; mask < total; ++mask) {
        s.chordal += chordal[mask];
        s.linear += linear[mask];
        if (chordal[mask] != linear[mask]) {
            ++s.exceptions;
            if (!s.first_exception) s.first_exception = static_cast<std::uint32_t>(mask);
        }
    }
    return s;
}

/**
 * Seeded corpus of random chordal graphs plus the non-chordal cycles C4, C5,
 * C6. Graph i gets n = 2 + below(n_max - 1), density = unit() and a graph
 * seed = next(), drawn in that order from Xorshift64Star(seed).
 */
inline CorpusSummary verify_chordal_corpus(int count, int n_max, std::uint64_t seed, const FieldSpec& field,
                                           const VerifyOptions& options = {}, unsigned threads = 1)
{
    if (count < 0 || n_max < 1) throw InvalidArgument("corpus needs count >= 0 and n_max >= 1");
    CorpusSummary s;
    s.count = count;
    s.n_max = n_max;
    s.seed = seed;
    s.field = field;

    Xorshift64Star rng(seed);
    s.entries.resize(count);
    for (int i = 0; i < count; ++i) {
        auto& e = s.entries[i];
        e.index = i;
        e.n = n_max >= 2 ? 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - 1))) : 1;
        e.density = rng.unit();
        e.seed = rng.next();
    }
    VerifyOptions inner = options;
    inner.betti.threads = 1;
    detail::parallel_for(count, threads, [&](int i) {
        auto& e = s.entries[i];
        e.result = verify_graph(gen_chordal(e.n, e.density, e.seed), field, inner, "chordal-" + std::to_string(i));
    });
    for (int len : {4, 5, 6}) s.non_chordal.push_back(verify_graph(cycle_graph(len), field, inner, "C" + std::to_string(len)));

    auto record = [&](const GraphVerification& g) {
        tally(s.checks, g.report);
        auto& fr = s.checks["froberg"];
        ++fr.checked;
        fr.passed += g.froberg_ok ? 1 : 0;
        if (g.chordal_relations) {
            auto& cr = s.checks["chordal_relations"];
            ++cr.checked;
            cr.passed += std::all_of(g.chordal_relations->begin(), g.chordal_relations->end(),
                                     [](const Relation& r) { return r.residual == 0; })
                             ? 1
                             : 0;
        }
        if (g.passed()) {
            ++s.passed;
        } else {
            ++s.failed;
            if (!s.first_failure || g.report.fingerprint < *s.first_failure) s.first_failure = g.report.fingerprint;
        }
    };
    for (const auto& e : s.entries) record(e.result);
    for (const auto& g : s.non_chordal) record(g);
    return s;
}

inline nlohmann::ordered_json to_json(const FrobergSweep& s)
{
    nlohmann::ordered_json j = {{"n", s.n}, {"graphs", s.graphs}, {"chordal", s.chordal}, {"linear", s.linear},
                                {"exceptions", s.exceptions}};
    if (s.first_exception) j["first_exception_edge_mask"] = *s.first_exception;
    return j;
}

inline nlohmann::ordered_json to_json(const CorpusSummary& s)
{
    nlohmann::ordered_json j;
    j["field"] = s.field.name();
    j["count"] = s.count;
    j["n_max"] = s.n_max;
    j["seed"] = std::to_string(s.seed);
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& [name, c] : s.checks) checks[name] = {{"checked", c.checked}, {"passed", c.passed}};
    j["checks"] = checks;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["first_failure"] = s.first_failure ? nlohmann::ordered_json(*s.first_failure) : nlohmann::ordered_json(nullptr);
    if (s.sweep) j["froberg_sweep"] = to_json(*s.sweep);
    j["all_passed"] = s.all_passed();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : s.entries) {
        nlohmann::ordered_json ej = {{"index", e.index}, {"n", e.n}, {"density", e.density},
                                     {"seed", std::to_string(e.seed)}};
        ej["result"] = to_json(e.result);
        entries.push_back(ej);
    }
    j["entries"] = entries;
    auto nc = nlohmann::ordered_json::array();
    for (const auto& g : s.non_chordal) nc.push_back(to_json(g));
    j["non_chordal"] = nc;
    return j;
}

} // namespace srbetti

#endif // SRBETTI_VERIFY_HPP
