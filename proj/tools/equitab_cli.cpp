// Command-line front end over the C API.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "equitab/equitab.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3, kIo = 4, kInternal = 5 };

int exit_for(equitab_status s) {
    switch (s) {
        case EQUITAB_OK: return kOk;
        case EQUITAB_ERR_INVALID:
        case EQUITAB_ERR_PARSE: return kUsage;
        case EQUITAB_ERR_RESOURCE: return kResource;
        case EQUITAB_ERR_IO: return kIo;
        case EQUITAB_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

struct CliError {
    int code;
    std::string message;
};

void check(equitab_status s) {
    if (s != EQUITAB_OK) throw CliError{exit_for(s), equitab_last_error()};
}

struct Global {
    std::string format = "json";
    std::string cache;
    std::string threads = "auto";
    int cell_guard = 40;
    long long poset_guard = 3003;
    std::string out;
};

struct EngineDeleter {
    void operator()(equitab_engine* e) const { equitab_engine_destroy(e); }
};
using EnginePtr = std::unique_ptr<equitab_engine, EngineDeleter>;

EnginePtr open_engine(const Global& g) {
    equitab_engine_options o;
    equitab_engine_options_init(&o);
    o.cell_guard = g.cell_guard;
    o.poset_guard = g.poset_guard;
    if (g.threads != "auto") {
        try {
            std::size_t used = 0;
            const int t = std::stoi(g.threads, &used);
            if (used != g.threads.size() || t < 1) throw std::invalid_argument("threads");
            o.threads = static_cast<unsigned>(t);
        } catch (const std::exception&) {
            throw CliError{kUsage, "--threads expects a positive integer or 'auto'"};
        }
    }
    std::string cache = g.cache;
    if (const char* env = std::getenv("EQUITAB_CACHE"); env != nullptr && *env != '\0') cache = env;
    o.cache_path = cache.empty() ? nullptr : cache.c_str();
    equitab_engine* e = nullptr;
    check(equitab_engine_create(&o, &e));
    EnginePtr engine(e);
    for (std::size_t i = 0; i < equitab_engine_warning_count(e); ++i)
        std::cerr << "warning: " << equitab_engine_warning(e, i) << "\n";
    return engine;
}

void emit(const Global& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
    if (!f) throw CliError{kIo, "cannot write " + g.out};
    f << text;
    if (!f) throw CliError{kIo, "cannot write " + g.out};
}

std::string parts_text(const json& p) {
    std::string out;
    for (const auto& x : p) out += (out.empty() ? "" : ",") + std::to_string(x.get<int>());
    return out;
}

std::string terms_text(const json& terms, const std::string& basis) {
    if (terms.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& t : terms)
        os << t["coefficient"].get<long long>() << " " << basis << "[" << parts_text(t["partition"]) << "]\n";
    return os.str();
}

void require_format(const Global& g, bool dot_allowed) {
    if (g.format == "json" || g.format == "text") return;
    if (g.format == "dot" && dot_allowed) return;
    throw CliError{kUsage, "format '" + g.format + "' is not available for this command"};
}

int cmd_expand(const Global& g, const std::string& ribbon, const std::string& basis) {
    require_format(g, false);
    auto engine = open_engine(g);
    equitab_vector* v = nullptr;
    check(equitab_expand(engine.get(), ribbon.c_str(), basis == "h" ? EQUITAB_BASIS_H : EQUITAB_BASIS_S, &v));
    std::unique_ptr<equitab_vector, void (*)(equitab_vector*)> hold(v, equitab_vector_destroy);
    const std::string js = equitab_vector_json(v);
    if (g.format == "json") {
        emit(g, js + "\n");
    } else {
        emit(g, terms_text(json::parse(js)["terms"], basis));
    }
    return kOk;
}

int cmd_compare(const Global& g, const std::string& alpha, const std::string& beta) {
    require_format(g, false);
    auto engine = open_engine(g);
    equitab_comparison* c = nullptr;
    check(equitab_compare(engine.get(), alpha.c_str(), beta.c_str(), &c));
    std::unique_ptr<equitab_comparison, void (*)(equitab_comparison*)> hold(c, equitab_comparison_destroy);
    const std::string js = equitab_comparison_json(c);
    if (g.format == "json") {
        emit(g, js + "\n");
        return kOk;
    }
    const json r = json::parse(js);
    std::ostringstream os;
    os << r["alpha"].get<std::string>() << " vs " << r["beta"].get<std::string>() << ": " << r["verdict"].get<std::string>()
       << "\n";
    for (const char* key : {"witness_positive", "witness_negative"}) {
        if (r[key].is_null()) continue;
        os << (std::string(key) == "witness_positive" ? "positive witness: " : "negative witness: ")
           << r[key]["coefficient"].get<long long>() << " s[" << parts_text(r[key]["partition"]) << "]\n";
    }
    emit(g, os.str());
    return kOk;
}

int cmd_poset(const Global& g, int a, int n, int m, bool fast) {
    require_format(g, true);
    auto engine = open_engine(g);
    equitab_poset* p = nullptr;
    check(equitab_poset_build(engine.get(), a, n, m, fast ? 1 : 0, &p));
    std::unique_ptr<equitab_poset, void (*)(equitab_poset*)> hold(p, equitab_poset_destroy);
    if (g.format == "json") {
        emit(g, std::string(equitab_poset_json(p)) + "\n");
        return kOk;
    }
    if (g.format == "dot") {
        emit(g, equitab_poset_dot(p));
        return kOk;
    }
    const json r = json::parse(equitab_poset_json(p));
    const auto& elements = r["elements"];
    std::ostringstream os;
    os << "R(" << a + 1 << "^" << n << " " << a << "^" << m << "): " << elements.size() << " elements";
    os << (r["is_chain"].get<bool>() ? ", chain\n" : "\n");
    if (r["is_chain"].get<bool>()) {
        std::string line;
        for (const auto& e : r["chain"]) line += (line.empty() ? "" : " > ") + e.get<std::string>();
        os << line << "\n";
    } else {
        for (const auto& cover : r["covers"])
            os << elements[cover[0].get<std::size_t>()].get<std::string>() << " > "
               << elements[cover[1].get<std::size_t>()].get<std::string>() << "\n";
    }
    for (const char* key : {"maximal", "minimal"}) {
        os << key << ":";
        for (const auto& i : r[key]) os << " " << elements[i.get<std::size_t>()].get<std::string>();
        os << "\n";
    }
    emit(g, os.str());
    return kOk;
}

int cmd_boxdiag(const Global& g, int rows, int cols) {
    require_format(g, false);
    char* out = nullptr;
    check(equitab_box_diagonal(rows, cols, &out));
    const std::string js = out;
    equitab_string_free(out);
    if (g.format == "json") {
        emit(g, js + "\n");
        return kOk;
    }
    const json r = json::parse(js);
    std::ostringstream os;
    os << r["ribbon"].get<std::string>() << "\n";
    os << "a=" << r["a"] << " b=" << r["b"] << " geometric " << (r["geometric_agrees"].get<bool>() ? "agrees" : "differs")
       << "\n";
    emit(g, os.str());
    return kOk;
}

struct VerifyArgs {
    std::string suite;
    std::vector<int> a_values;
    int chain_max = -1, max_cells = -1, max_cells_small = -1, product_pairs = -1;
    int ftom_max_n = -1, ftom_max_m = -1, ftom_max_k = -1, jensen_range = -1, jensen_max_v = -1;
    long long seed = -1;
    bool no_timing = false;
};

int cmd_verify(const Global& g, const VerifyArgs& args) {
    require_format(g, false);
    equitab_suite_options o;
    equitab_suite_options_init(&o);
    if (!args.a_values.empty()) {
        if (args.a_values.size() > 8) throw CliError{kUsage, "at most 8 values of --a"};
        o.a_count = static_cast<int>(args.a_values.size());
        for (std::size_t i = 0; i < args.a_values.size(); ++i) o.a_values[i] = args.a_values[i];
    }
    const auto set = [](int& field, int value) {
        if (value >= 0) field = value;
    };
    set(o.chain_max, args.chain_max);
    set(o.max_cells, args.max_cells);
    if (args.max_cells >= 0 && args.max_cells_small < 0 && o.max_cells_small > o.max_cells) o.max_cells_small = o.max_cells;
    set(o.max_cells_small, args.max_cells_small);
    set(o.product_pairs, args.product_pairs);
    set(o.ftom_max_n, args.ftom_max_n);
    set(o.ftom_max_m, args.ftom_max_m);
    set(o.ftom_max_k, args.ftom_max_k);
    set(o.jensen_range, args.jensen_range);
    set(o.jensen_max_v, args.jensen_max_v);
    if (args.seed >= 0) o.seed = static_cast<unsigned long long>(args.seed);

    auto engine = open_engine(g);
    equitab_report* r = nullptr;
    check(equitab_verify(engine.get(), args.suite.c_str(), &o, &r));
    std::unique_ptr<equitab_report, void (*)(equitab_report*)> hold(r, equitab_report_destroy);
    const bool timing = !args.no_timing;
    if (g.format == "json") {
        char* js = equitab_report_json(r, timing ? 1 : 0);
        if (js == nullptr) throw CliError{kInternal, equitab_last_error()};
        const std::string text = std::string(js) + "\n";
        equitab_string_free(js);
        emit(g, text);
    } else {
        std::ostringstream os;
        std::size_t failures = 0;
        for (std::size_t i = 0; i < equitab_report_check_count(r); ++i) {
            const bool ok = equitab_report_check_passed(r, i) != 0;
            failures += ok ? 0 : 1;
            os << (ok ? "PASS " : "FAIL ") << equitab_report_check_name(r, i);
            const std::string detail = equitab_report_check_detail(r, i);
            if (!detail.empty()) os << " [" << detail << "]";
            if (timing) os << " (" << std::fixed << std::setprecision(3) << equitab_report_check_seconds(r, i) << "s)";
            os << "\n";
        }
        os << args.suite << ": " << equitab_report_check_count(r) << " checks, " << failures << " failed\n";
        emit(g, os.str());
    }
    return equitab_report_passed(r) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ribbon Schur functions, LR tableaux and the Schur-positivity order on equitable ribbons"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(equitab_version()));

    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--cache", g.cache, "NDJSON expansion cache (EQUITAB_CACHE overrides)");
    app.add_option("--threads", g.threads, "Worker threads, or 'auto'");
    app.add_option("--cell-guard", g.cell_guard, "Largest ribbon expanded, in cells")->check(CLI::PositiveNumber);
    app.add_option("--poset-guard", g.poset_guard, "Largest C(n+m, m) accepted by poset")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Write output to this file instead of stdout");

    std::string ribbon, basis = "s";
    auto* expand = app.add_subcommand("expand", "Expand a ribbon Schur function in the s or h basis");
    expand->add_option("--ribbon,ribbon", ribbon, "Ribbon as comma-separated row lengths, top row first")->required();
    expand->add_option("--basis", basis, "s or h")->check(CLI::IsMember({"s", "h"}));

    std::string alpha, beta;
    auto* cmp = app.add_subcommand("compare", "Sign pattern of r_alpha - r_beta in the Schur basis");
    cmp->add_option("--alpha,alpha", alpha, "First ribbon")->required();
    cmp->add_option("--beta,beta", beta, "Second ribbon")->required();

    int a = 0, n = 0, m = 0;
    bool fast = false;
    auto* poset = app.add_subcommand("poset", "Build the poset of ribbons with n rows a+1 and m rows a");
    poset->add_option("--a", a, "Short row length")->required()->check(CLI::PositiveNumber);
    poset->add_option("--n", n, "Number of long rows")->required()->check(CLI::NonNegativeNumber);
    poset->add_option("--m", m, "Number of short rows")->required()->check(CLI::NonNegativeNumber);
    poset->add_flag("--fast", fast, "Skip expansions for pairs excluded by both necessary conditions");

    int rows = 0, cols = 0;
    auto* box = app.add_subcommand("boxdiag", "Box diagonal ribbon with R rows and S columns");
    box->add_option("--rows,rows", rows, "R")->required();
    box->add_option("--cols,cols", cols, "S")->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", va.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"chains", "ftom", "shortends", "smalls", "minimal", "maximal", "jensen", "oracles"}));
    verify->add_option("--a", va.a_values, "Values of a")->delimiter(',');
    verify->add_option("--chain-max", va.chain_max, "Largest m in chain (1) and n in chain (2)");
    verify->add_option("--max-cells", va.max_cells, "Ribbon size bound for oracle checks");
    verify->add_option("--max-cells-small", va.max_cells_small, "Size bound for transpose checks");
    verify->add_option("--product-pairs", va.product_pairs, "Random pairs for the product identity");
    verify->add_option("--seed", va.seed, "Seed for the random pairs");
    verify->add_option("--ftom-max-n", va.ftom_max_n);
    verify->add_option("--ftom-max-m", va.ftom_max_m);
    verify->add_option("--ftom-max-k", va.ftom_max_k);
    verify->add_option("--jensen-range", va.jensen_range);
    verify->add_option("--jensen-max-v", va.jensen_max_v);
    verify->add_flag("--no-timing", va.no_timing, "Omit timings so output is reproducible");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*expand) return cmd_expand(g, ribbon, basis);
        if (*cmp) return cmd_compare(g, alpha, beta);
        if (*poset) return cmd_poset(g, a, n, m, fast);
        if (*box) return cmd_boxdiag(g, rows, cols);
        if (*verify) return cmd_verify(g, va);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
