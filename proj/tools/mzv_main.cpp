// Command-line front end: identity verification suites, symbolic expansion
// queries, and numeric evaluation with JSON output.

#include "mzv/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>

namespace {

using namespace mzv;

std::vector<SampleSpec> parse_samples_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open samples file: " + path);
    Json j;
    in >> j;
    if (!j.is_array()) throw std::invalid_argument("samples file must hold a JSON array");
    std::vector<SampleSpec> samples;
    for (const Json& entry : j) {
        SampleSpec s;
        for (size_t v = 0; v < 4; ++v) {
            const char* name = var_name(static_cast<Var>(v));
            if (entry.contains(name)) s.values[v] = parse_rational(entry.at(name).get<std::string>());
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

int run_verify(const RunConfig& config) {
    if (!config.cache_path.empty()) load_mzv_cache(config.cache_path);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!config.output_path.empty()) {
        file.open(config.output_path);
        if (!file) throw std::invalid_argument("cannot open output file: " + config.output_path);
        out = &file;
    }
    bool all_hold = run_suites_streaming(config, [&](const CheckLine& line) {
        if (config.format == "json") {
            *out << line.json.dump() << "\n";
        } else {
            std::string name = line.json.contains("check") ? line.json["check"].get<std::string>()
                                                           : line.json.value("identity", std::string("?"));
            std::string suite = line.json.value("suite", std::string("?"));
            *out << (line.holds ? "ok   " : "FAIL ") << suite << "/" << name << "\n";
        }
        out->flush();
    });

    if (!config.cache_path.empty()) save_mzv_cache(config.cache_path);
    return all_hold ? 0 : 1;
}

Json series_to_json(const SeriesIC& f) {
    Json coeffs = Json::array();
    for (int n = 0; n <= f.order(); ++n) coeffs.push_back(to_json(f.coeff(n)));
    return Json{{"order", f.order()}, {"coefficients", coeffs}};
}

void print_series_text(const SeriesIC& f, std::ostream& out) {
    for (int n = 0; n <= f.order(); ++n) out << "W^" << n << ": " << f.coeff(n).str() << "\n";
}

int run_expand(const std::string& what, int order, const std::string& indices, const std::string& index_text,
               const std::string& k_text, const std::string& l_text, int corner, bool star, const std::string& format) {
    std::ostream& out = std::cout;
    bool json = format == "json";

    if (what == "gamma1" || what == "gamma1-inverse") {
        SeriesIC g = gamma1_I(order);
        if (what == "gamma1-inverse") g = g.inverse();
        if (json)
            out << series_to_json(g).dump() << "\n";
        else
            print_series_text(g, out);
        return 0;
    }
    if (what == "F") {
        SeriesIC f = build_F_I(order);
        if (json)
            out << series_to_json(f).dump() << "\n";
        else
            print_series_text(f, out);
        return 0;
    }
    if (what == "harmonic") {
        size_t sep = indices.find(';');
        if (sep == std::string::npos) throw std::invalid_argument("--indices expects \"u;v\"");
        IndexCombination p = harmonic_product(IndexCombination::single(Index::parse(indices.substr(0, sep))),
                                              IndexCombination::single(Index::parse(indices.substr(sep + 1))));
        out << (json ? to_json(p).dump() : p.str()) << "\n";
        return 0;
    }
    if (what == "star") {
        IndexCombination p = star_expand(Index::parse(index_text));
        out << (json ? to_json(p).dump() : p.str()) << "\n";
        return 0;
    }
    if (what == "lift-xy") {
        Index k = Index::parse(index_text);
        IndexCombination p = star ? poly_lift_xy_star(k) : poly_lift_xy(k);
        out << (json ? to_json(p).dump() : p.str()) << "\n";
        return 0;
    }
    if (what == "antihook") {
        AntiHook h(Index::parse(k_text), Index::parse(l_text), corner);
        IndexCombination p = expand_antihook(h);
        out << (json ? to_json(h, p).dump() : p.str()) << "\n";
        return 0;
    }
    if (what == "regularize") {
        const RegularizedZeta& z = regularize(Index::parse(index_text));
        out << (json ? to_json(z).dump() : z.str()) << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown expand target: " + what);
}

Real eval_error_estimate(const IndexCombination& u, const SampleSpec& sample) {
    Real bound = 0.0L;
    for (const auto& [k, poly] : u.terms()) {
        Rational c = poly.evaluate(sample.values);
        for (const auto& [key, q] : regularize(k).terms()) {
            auto cached = MZVCache::instance().lookup(key.second, std::numeric_limits<Real>::infinity());
            Real value_bound = cached ? cached->error_bound : 0.0L;
            bound += std::fabs(to_long_double(c * q)) * value_bound;
        }
    }
    return bound;
}

int run_eval(const std::string& index_text, const std::string& k_text, const std::string& l_text, int corner,
             bool star, const std::string& xy_text, double tol, const std::string& format,
             const std::string& cache_path) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!cache_path.empty()) load_mzv_cache(cache_path);

    bool want_xy = !xy_text.empty();
    SampleSpec sample;
    if (want_xy) {
        size_t sep = xy_text.find(',');
        if (sep == std::string::npos) throw std::invalid_argument("--xy expects \"x,y\"");
        sample = SampleSpec::xyAB(parse_rational(xy_text.substr(0, sep)), parse_rational(xy_text.substr(sep + 1)),
                                  std::nullopt, std::nullopt);
    }

    IndexCombination symbol;
    if (!k_text.empty() || !l_text.empty() || corner > 0) {
        if (star) throw std::invalid_argument("--star does not apply to anti-hooks");
        symbol = expand_antihook(AntiHook(Index::parse(k_text), Index::parse(l_text), corner < 1 ? 2 : corner));
        if (want_xy) symbol = poly_lift_xy(symbol);
    } else {
        Index k = Index::parse(index_text);
        if (want_xy)
            symbol = star ? poly_lift_xy_star(k) : poly_lift_xy(k);
        else
            symbol = star ? star_expand(k) : IndexCombination::single(k);
    }

    NumericPoly value = eval_Z(symbol, sample, static_cast<Real>(tol));
    Real bound = eval_error_estimate(symbol, sample);
    if (!cache_path.empty()) save_mzv_cache(cache_path);

    if (format == "json") {
        Json coeffs = Json::array();
        for (int d = 0; d <= std::max(0, value.degree()); ++d) coeffs.push_back(format_real(value.coeff(d)));
        std::cout << Json{{"value", value.str()}, {"t_coefficients", coeffs}, {"residual_estimate", format_real(bound)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << value.str() << "\n";
        std::cout << "residual estimate <= " << format_real(bound, 3) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf-algebra and generating-function toolkit for multiple zeta indices"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites and emit JSON lines");
    std::vector<std::string> suites = {"all"};
    int max_weight = 8;
    double tol = 1e-8, mzv_tol = 1e-10;
    int jobs = 1;
    std::string samples_path, cache_path, output_path, format = "json";
    verify->add_option("--suite", suites, "suite names (or 'all')");
    verify->add_option("--max-weight", max_weight, "weight budget for enumerations");
    verify->add_option("--tol", tol, "identity tolerance");
    verify->add_option("--mzv-tol", mzv_tol, "tolerance for single value evaluations");
    verify->add_option("--jobs", jobs, "worker pool size");
    verify->add_option("--samples", samples_path, "JSON file with sample tuples");
    verify->add_option("--cache", cache_path, "persistent value cache file");
    verify->add_option("--output", output_path, "write report lines to a file instead of stdout");
    verify->add_option("--format", format, "json or text");

    // expand
    auto* expand = app.add_subcommand("expand", "print exact symbolic expansions");
    std::string what, indices, index_text, k_text, l_text, expand_format = "text";
    int order = 4, corner = 0;
    bool star = false;
    expand->add_option("what", what, "gamma1|gamma1-inverse|F|antihook|harmonic|star|lift-xy|regularize")->required();
    expand->add_option("--order", order, "truncation order for series targets");
    expand->add_option("--indices", indices, "two indices separated by ';'");
    expand->add_option("--index", index_text, "a single index, e.g. \"2,1\"");
    expand->add_option("--k", k_text, "anti-hook vertical row");
    expand->add_option("--l", l_text, "anti-hook horizontal row");
    expand->add_option("--a", corner, "anti-hook corner entry");
    expand->add_flag("--star", star, "use the star variant where applicable");
    expand->add_option("--format", expand_format, "json or text");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate numerically as a polynomial in T");
    std::string e_index, e_k, e_l, e_xy, e_format = "text", e_cache;
    int e_corner = 0;
    bool e_star = false;
    double e_tol = 1e-10;
    eval->add_option("--index", e_index, "index to evaluate");
    eval->add_option("--k", e_k, "anti-hook vertical row");
    eval->add_option("--l", e_l, "anti-hook horizontal row");
    eval->add_option("--a", e_corner, "anti-hook corner entry");
    eval->add_flag("--star", e_star, "star value");
    eval->add_option("--xy", e_xy, "evaluate the polynomial lift at \"x,y\"");
    eval->add_option("--tol", e_tol, "value tolerance");
    eval->add_option("--format", e_format, "json or text");
    eval->add_option("--cache", e_cache, "persistent value cache file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            RunConfig config;
            config.max_weight = max_weight;
            config.tolerance = static_cast<Real>(tol);
            config.mzv_tolerance = static_cast<Real>(mzv_tol);
            config.suites = suites;
            config.jobs = jobs;
            config.cache_path = cache_path;
            config.output_path = output_path;
            config.format = format;
            if (!samples_path.empty()) config.samples = parse_samples_file(samples_path);
            config.validate();
            return run_verify(config);
        }
        if (expand->parsed())
            return run_expand(what, order, indices, index_text, k_text, l_text, corner, star, expand_format);
        if (eval->parsed())
            return run_eval(e_index, e_k, e_l, e_corner, e_star, e_xy, e_tol, e_format, e_cache);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
