#pragma once

#include "mzv/antihook.hpp"
#include "mzv/genfunc.hpp"
#include "mzv/numeric_checks.hpp"
#include "mzv/regularized.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

namespace mzv {

using Json = nlohmann::json;

// Floats in reports are fixed at 12 significant digits and carried as
// strings, so identical configurations serialize byte-identically.
inline std::string format_real(Real v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, v);
    return buf;
}

inline Json to_json(const Index& k) {
    Json a = Json::array();
    for (int p : k.parts()) a.push_back(p);
    return a;
}

inline Json to_json(const PolyScalar& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"monomial", PolyScalar::monomial_key(m)}, {"value", rational_str(c)}});
    return terms;
}

inline Json to_json(const IndexCombination& u) {
    Json terms = Json::array();
    for (const auto& [k, c] : u.terms()) terms.push_back(Json{{"index", to_json(k)}, {"coeff", to_json(c)}});
    return terms;
}

inline Json to_json(const RegularizedZeta& z) {
    Json terms = Json::array();
    for (const auto& [key, c] : z.terms())
        terms.push_back(Json{{"t_degree", key.first}, {"index", to_json(key.second)}, {"value", rational_str(c)}});
    return terms;
}

inline Json to_json(const AntiHook& h, const IndexCombination& expansion) {
    return Json{{"k", to_json(h.k_row)}, {"l", to_json(h.l_row)}, {"a", h.corner}, {"expansion", to_json(expansion)}};
}

inline Json to_json(const SampleSpec& s) {
    Json j = Json::object();
    for (size_t v = 0; v < 4; ++v)
        if (s.values[v]) j[var_name(static_cast<Var>(v))] = rational_str(*s.values[v]);
    return j;
}

inline Json to_json(const ExactReport& r) {
    Json j{{"identity", r.identity}, {"order", r.order}, {"holds", r.holds}, {"elapsed_ms", r.elapsed_ms}};
    if (r.first_failure) {
        const ExactFailure& f = *r.first_failure;
        j["first_failure"] = Json{{"w", f.w},
                                  {"index", to_json(f.index)},
                                  {"monomial", PolyScalar::monomial_key(f.monomial)},
                                  {"lhs", rational_str(f.lhs)},
                                  {"rhs", rational_str(f.rhs)}};
        if (!f.where.empty()) j["first_failure"]["part"] = f.where;
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

inline Json to_json(const NumericReport& r) {
    Json samples = Json::array();
    for (const SampleSpec& s : r.samples) samples.push_back(to_json(s));
    Json j{{"identity", r.identity},
           {"order", r.order},
           {"samples", samples},
           {"tol", format_real(r.tol)},
           {"max_abs_residual", format_real(r.max_abs_residual)},
           {"holds", r.holds},
           {"elapsed_ms", r.elapsed_ms}};
    if (r.max_odd_residual >= 0) j["max_odd_residual"] = format_real(r.max_odd_residual);
    if (r.first_failure) {
        const NumericFailure& f = *r.first_failure;
        j["first_failure"] = Json{{"sample", f.sample},
                                  {"w", f.w},
                                  {"t_degree", f.t_degree},
                                  {"lhs", format_real(f.lhs)},
                                  {"rhs", format_real(f.rhs)}};
    }
    return j;
}

inline Json to_json(const SumFormulaReport& r) {
    Json j{{"w", r.w},
           {"r", r.r},
           {"star", r.star},
           {"lhs", format_real(r.lhs)},
           {"rhs", format_real(r.rhs)},
           {"residual", format_real(r.residual)},
           {"holds", r.holds}};
    if (r.s >= 0) {
        j["s"] = r.s;
        j["t_residual"] = format_real(r.t_residual);
        j.erase("star");
    }
    return j;
}

inline Json to_json(const RemarkWitness& w) {
    return Json{{"w", w.w},   {"r", w.r},         {"s", w.s},
                {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
}

// ---- persistent value cache ---------------------------------------------------

inline void save_mzv_cache(const std::string& path) {
    Json j = Json::object();
    for (const auto& [k, r] : MZVCache::instance().snapshot())
        j[k.str()] = Json{{"value", format_real(r.value, 21)}, {"bound", format_real(r.error_bound, 3)}};
    std::ofstream out(path);
    out << j.dump(1) << "\n";
}

inline void load_mzv_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error&) {
        return;  // unreadable cache files are ignored, not fatal
    }
    for (const auto& [key, entry] : j.items()) {
        MZVResult r;
        r.value = std::strtold(entry.at("value").get<std::string>().c_str(), nullptr);
        r.error_bound = std::strtold(entry.at("bound").get<std::string>().c_str(), nullptr);
        MZVCache::instance().store(Index::parse(key), r);
    }
}

}  // namespace mzv
