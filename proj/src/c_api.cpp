#include "equitab/equitab.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "equitab/cache.hpp"
#include "equitab/engine.hpp"
#include "equitab/equitable.hpp"
#include "equitab/error.hpp"
#include "equitab/order.hpp"
#include "equitab/poset.hpp"
#include "equitab/verify.hpp"

using nlohmann::json;
using namespace equitab;

struct equitab_engine {
    std::unique_ptr<Engine> engine;
    std::vector<std::string> warnings;
};

struct equitab_vector {
    std::vector<std::vector<int>> parts;
    std::vector<long long> coefficients;
    std::string json;
};

struct equitab_comparison {
    Verdict verdict;
    std::string json;
};

struct equitab_poset {
    PosetGraph graph;
    std::string json;
    std::string dot;
};

struct equitab_report {
    Report report;
};

namespace {

thread_local std::string last_error;

equitab_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return EQUITAB_ERR_INVALID;
        case ErrorKind::Parse: return EQUITAB_ERR_PARSE;
        case ErrorKind::Resource: return EQUITAB_ERR_RESOURCE;
        case ErrorKind::Io: return EQUITAB_ERR_IO;
    }
    return EQUITAB_ERR_INTERNAL;
}

template <class F>
equitab_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return EQUITAB_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return EQUITAB_ERR_RESOURCE;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return EQUITAB_ERR_INTERNAL;
    }
}

Composition parse_ribbon(const char* text) {
    if (text == nullptr) fail(ErrorKind::InvalidArgument, "ribbon argument is NULL");
    if (*text == '\0') fail(ErrorKind::Parse, "empty ribbon: expected comma-separated positive integers");
    return parse_composition(text);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Vector>
json terms_json(const Vector& v) {
    json out = json::array();
    for (const auto& [p, c] : v) out.push_back({{"partition", p.vec()}, {"coefficient", c}});
    return out;
}

json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    return {{"partition", w->partition.vec()}, {"coefficient", w->coefficient}};
}

json poset_json(const PosetGraph& g) {
    json elements = json::array(), aliases = json::array(), relations = json::array(), covers = json::array();
    for (const auto& e : g.elements) elements.push_back(to_string(e));
    for (const auto& list : g.aliases) {
        json names = json::array();
        for (const auto& e : list) names.push_back(to_string(e));
        aliases.push_back(names);
    }
    for (const auto& [i, j] : g.relations) relations.push_back({i, j});
    for (const auto& [i, j] : g.covers) covers.push_back({i, j});
    json chain = json::array();
    for (const auto& e : g.chain()) chain.push_back(to_string(e));
    json violations = json::array();
    for (const auto& v : g.filter_violations)
        violations.push_back({{"alpha", to_string(v.alpha)}, {"beta", to_string(v.beta)}, {"filter", v.filter}});
    return {{"a", g.a},
            {"n", g.n},
            {"m", g.m},
            {"elements", elements},
            {"aliases", aliases},
            {"relations", relations},
            {"covers", covers},
            {"maximal", g.maximal},
            {"minimal", g.minimal},
            {"is_chain", g.is_chain},
            {"chain", chain},
            {"expansions_compared", g.expansions_compared},
            {"pairs_pruned", g.pairs_pruned},
            {"filter_violations", violations}};
}

std::string poset_dot(const PosetGraph& g) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=TB;\n  node [shape=box];\n";
    for (const auto& e : g.elements) os << "  \"" << to_string(e) << "\";\n";
    for (const auto& [i, j] : g.covers) os << "  \"" << to_string(g.elements[i]) << "\" -> \"" << to_string(g.elements[j]) << "\";\n";
    os << "}\n";
    return os.str();
}

SuiteOptions suite_options(const equitab_suite_options* in) {
    SuiteOptions o;
    if (in == nullptr) return o;
    require(in->a_count >= 1 && in->a_count <= 8, "suite options need between 1 and 8 values of a");
    o.a_values.assign(in->a_values, in->a_values + in->a_count);
    for (int a : o.a_values) require(a >= 1, "suite option a must be positive");
    o.chain_max = in->chain_max;
    o.ftom_max_n = in->ftom_max_n;
    o.ftom_max_m = in->ftom_max_m;
    o.ftom_max_k = in->ftom_max_k;
    o.max_cells = in->max_cells;
    o.max_cells_small = in->max_cells_small;
    o.product_pairs = in->product_pairs;
    o.seed = in->seed;
    o.jensen_range = in->jensen_range;
    o.jensen_max_v = in->jensen_max_v;
    require(o.max_cells >= 1 && o.max_cells <= 16, "max_cells must lie in 1..16");
    require(o.max_cells_small >= 1 && o.max_cells_small <= o.max_cells, "max_cells_small must lie in 1..max_cells");
    return o;
}

}  // namespace

extern "C" {

const char* equitab_version(void) { return kEngineVersion; }

const char* equitab_last_error(void) { return last_error.c_str(); }

void equitab_string_free(char* s) { std::free(s); }

void equitab_engine_options_init(equitab_engine_options* options) {
    if (options == nullptr) return;
    const EngineConfig defaults;
    options->cell_guard = defaults.cell_guard;
    options->poset_guard = defaults.poset_guard;
    options->threads = defaults.threads;
    options->cache_path = nullptr;
}

equitab_status equitab_engine_create(const equitab_engine_options* options, equitab_engine** out) {
    return guarded([&] {
        require(out != nullptr, "output handle is NULL");
        equitab_engine_options o;
        equitab_engine_options_init(&o);
        if (options != nullptr) o = *options;
        require(o.cell_guard >= 1, "cell guard must be at least 1");
        require(o.poset_guard >= 1, "poset guard must be at least 1");
        EngineConfig config;
        config.cell_guard = o.cell_guard;
        config.poset_guard = o.poset_guard;
        config.threads = o.threads;
        auto handle = std::make_unique<equitab_engine>();
        std::shared_ptr<NdjsonStore> store;
        if (o.cache_path != nullptr && *o.cache_path != '\0') {
            store = std::make_shared<NdjsonStore>(o.cache_path);
            handle->warnings = store->warnings();
        }
        handle->engine = std::make_unique<Engine>(config, store);
        *out = handle.release();
    });
}

void equitab_engine_destroy(equitab_engine* engine) { delete engine; }

size_t equitab_engine_warning_count(const equitab_engine* engine) { return engine ? engine->warnings.size() : 0; }

const char* equitab_engine_warning(const equitab_engine* engine, size_t index) {
    if (engine == nullptr || index >= engine->warnings.size()) return nullptr;
    return engine->warnings[index].c_str();
}

equitab_status equitab_expand(equitab_engine* engine, const char* ribbon, equitab_basis basis, equitab_vector** out) {
    return guarded([&] {
        require(engine != nullptr && out != nullptr, "NULL handle");
        const Composition alpha = parse_ribbon(ribbon);
        auto v = std::make_unique<equitab_vector>();
        const auto fill = [&](const auto& vec) {
            for (const auto& [p, c] : vec) {
                v->parts.push_back(p.vec());
                v->coefficients.push_back(c);
            }
            v->json = json{{"ribbon", to_string(alpha)}, {"basis", basis == EQUITAB_BASIS_H ? "h" : "s"}, {"terms", terms_json(vec)}}.dump();
        };
        if (basis == EQUITAB_BASIS_H) {
            fill(engine->engine->ribbon_h(alpha));
        } else if (basis == EQUITAB_BASIS_S) {
            fill(engine->engine->ribbon_schur(alpha));
        } else {
            fail(ErrorKind::InvalidArgument, "unknown basis");
        }
        *out = v.release();
    });
}

size_t equitab_vector_size(const equitab_vector* v) { return v ? v->parts.size() : 0; }

size_t equitab_vector_term_length(const equitab_vector* v, size_t index) {
    return v && index < v->parts.size() ? v->parts[index].size() : 0;
}

const int* equitab_vector_term_parts(const equitab_vector* v, size_t index) {
    return v && index < v->parts.size() ? v->parts[index].data() : nullptr;
}

long long equitab_vector_term_coefficient(const equitab_vector* v, size_t index) {
    return v && index < v->coefficients.size() ? v->coefficients[index] : 0;
}

const char* equitab_vector_json(const equitab_vector* v) { return v ? v->json.c_str() : nullptr; }

void equitab_vector_destroy(equitab_vector* v) { delete v; }

equitab_status equitab_compare(equitab_engine* engine, const char* alpha, const char* beta, equitab_comparison** out) {
    return guarded([&] {
        require(engine != nullptr && out != nullptr, "NULL handle");
        const Composition x = parse_ribbon(alpha);
        const Composition y = parse_ribbon(beta);
        const ComparisonResult r = compare(*engine->engine, x, y);
        auto c = std::make_unique<equitab_comparison>();
        c->verdict = r.verdict;
        c->json = json{{"alpha", to_string(x)},
                       {"beta", to_string(y)},
                       {"verdict", to_string(r.verdict)},
                       {"witness_positive", witness_json(r.witness_pos)},
                       {"witness_negative", witness_json(r.witness_neg)},
                       {"difference", terms_json(r.difference)}}
                      .dump();
        *out = c.release();
    });
}

equitab_verdict equitab_comparison_verdict(const equitab_comparison* c) {
    switch (c->verdict) {
        case Verdict::Equal: return EQUITAB_EQUAL;
        case Verdict::Greater: return EQUITAB_GREATER;
        case Verdict::Less: return EQUITAB_LESS;
        case Verdict::Incomparable: return EQUITAB_INCOMPARABLE;
    }
    return EQUITAB_INCOMPARABLE;
}

const char* equitab_comparison_json(const equitab_comparison* c) { return c ? c->json.c_str() : nullptr; }

void equitab_comparison_destroy(equitab_comparison* c) { delete c; }

equitab_status equitab_poset_build(equitab_engine* engine, int a, int n, int m, int fast, equitab_poset** out) {
    return guarded([&] {
        require(engine != nullptr && out != nullptr, "NULL handle");
        auto p = std::make_unique<equitab_poset>();
        p->graph = build_poset(*engine->engine, a, n, m, fast ? PosetMode::Fast : PosetMode::Verify);
        p->json = poset_json(p->graph).dump();
        p->dot = poset_dot(p->graph);
        *out = p.release();
    });
}

size_t equitab_poset_element_count(const equitab_poset* p) { return p ? p->graph.elements.size() : 0; }

int equitab_poset_is_chain(const equitab_poset* p) { return p && p->graph.is_chain ? 1 : 0; }

const char* equitab_poset_json(const equitab_poset* p) { return p ? p->json.c_str() : nullptr; }

const char* equitab_poset_dot(const equitab_poset* p) { return p ? p->dot.c_str() : nullptr; }

void equitab_poset_destroy(equitab_poset* p) { delete p; }

equitab_status equitab_box_diagonal(int rows, int cols, char** json_out) {
    return guarded([&] {
        require(json_out != nullptr, "output pointer is NULL");
        const Composition p = box_diagonal(rows, cols);
        const Composition g = box_diagonal_geometric(rows, cols);
        const auto params = is_equitable(p);
        json out{{"rows", rows},
                 {"cols", cols},
                 {"ribbon", to_string(p)},
                 {"cells", p.size()},
                 {"equitable", params.has_value()},
                 {"a", params ? json(params->a) : json(nullptr)},
                 {"b", params ? json(params->b) : json(nullptr)},
                 {"geometric", to_string(g)},
                 {"geometric_agrees", p == g}};
        *json_out = dup_string(out.dump());
    });
}

void equitab_suite_options_init(equitab_suite_options* options) {
    if (options == nullptr) return;
    const SuiteOptions d;
    std::memset(options, 0, sizeof(*options));
    options->a_count = static_cast<int>(d.a_values.size());
    for (std::size_t i = 0; i < d.a_values.size(); ++i) options->a_values[i] = d.a_values[i];
    options->chain_max = d.chain_max;
    options->ftom_max_n = d.ftom_max_n;
    options->ftom_max_m = d.ftom_max_m;
    options->ftom_max_k = d.ftom_max_k;
    options->max_cells = d.max_cells;
    options->max_cells_small = d.max_cells_small;
    options->product_pairs = d.product_pairs;
    options->seed = d.seed;
    options->jensen_range = d.jensen_range;
    options->jensen_max_v = d.jensen_max_v;
}

equitab_status equitab_verify(equitab_engine* engine, const char* suite, const equitab_suite_options* options,
                              equitab_report** out) {
    return guarded([&] {
        require(engine != nullptr && out != nullptr && suite != nullptr, "NULL handle");
        const SuiteOptions o = suite_options(options);
        auto r = std::make_unique<equitab_report>();
        r->report = run_suite(*engine->engine, suite, o);
        *out = r.release();
    });
}

int equitab_report_passed(const equitab_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t equitab_report_check_count(const equitab_report* r) { return r ? r->report.checks.size() : 0; }

const char* equitab_report_check_name(const equitab_report* r, size_t index) {
    return r && index < r->report.checks.size() ? r->report.checks[index].name.c_str() : nullptr;
}

int equitab_report_check_passed(const equitab_report* r, size_t index) {
    return r && index < r->report.checks.size() && r->report.checks[index].passed ? 1 : 0;
}

const char* equitab_report_check_detail(const equitab_report* r, size_t index) {
    return r && index < r->report.checks.size() ? r->report.checks[index].detail.c_str() : nullptr;
}

double equitab_report_check_seconds(const equitab_report* r, size_t index) {
    return r && index < r->report.checks.size() ? r->report.checks[index].seconds : 0.0;
}

char* equitab_report_json(const equitab_report* r, int include_timing) {
    if (r == nullptr) return nullptr;
    try {
        json checks = json::array();
        for (const auto& c : r->report.checks) {
            json entry{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
            if (include_timing) entry["seconds"] = c.seconds;
            checks.push_back(entry);
        }
        json out{{"suite", r->report.suite},
                 {"passed", r->report.passed()},
                 {"failures", r->report.failures()},
                 {"checks", checks}};
        if (include_timing) out["seconds"] = r->report.seconds;
        return dup_string(out.dump());
    } catch (const std::exception& e) {
        last_error = e.what();
        return nullptr;
    }
}

void equitab_report_destroy(equitab_report* r) { delete r; }

}  // extern "C"
