#include "prefkernel/capi.h"

#include <cstring>
#include <string>

#include "prefkernel/io.hpp"
#include "prefkernel/oracle.hpp"

using namespace prefkernel;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
pk_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const CliqueCapError& e) {
        g_last_error = e.what();
        return PK_ERR_CLIQUE_CAP;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return PK_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PK_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PK_ERR_INTERNAL;
    }
}

pk_status invalid(const char* message) {
    g_last_error = message;
    return PK_ERR_INVALID_ARGUMENT;
}

/// Accepts a bare scenario name or a full spec object.
ScenarioSpec parse_spec(const char* spec_json) {
    std::string text = spec_json ? spec_json : "";
    if (text.empty()) throw std::invalid_argument("empty scenario spec");
    if (text.front() != '{') {
        ScenarioSpec spec;
        spec.name = text;
        if (!catalog_find(spec.name))
            throw std::out_of_range("unknown scenario: " + spec.name);
        return spec;
    }
    auto j = io::json::parse(text);
    ScenarioSpec spec = io::scenario_spec_from_json(j);
    if (!catalog_find(spec.name))
        throw std::out_of_range("unknown scenario: " + spec.name);
    return spec;
}

}  // namespace

struct pk_space {
    SpacePtr space;
};

struct pk_preference {
    Preference pref;
};

extern "C" {

const char* pk_status_name(pk_status status) {
    switch (status) {
        case PK_OK: return "ok";
        case PK_ERR_INVALID_ARGUMENT: return "invalid argument";
        case PK_ERR_PARSE: return "parse error";
        case PK_ERR_UNKNOWN_SCENARIO: return "unknown scenario";
        case PK_ERR_CLIQUE_CAP: return "clique cap exceeded";
        case PK_ERR_IO: return "io error";
        case PK_ERR_INTERNAL: return "internal error";
    }
    return "?";
}

const char* pk_last_error(void) { return g_last_error.c_str(); }

void pk_string_free(char* s) { delete[] s; }

pk_status pk_space_from_json(const char* json_text, pk_space** out) {
    if (!json_text || !out) return invalid("null argument");
    return guarded([&] {
        auto sp = io::space_from_json(io::json::parse(json_text));
        *out = new pk_space{std::move(sp)};
        return PK_OK;
    });
}

pk_status pk_space_to_json(const pk_space* space, char** out_json) {
    if (!space || !out_json) return invalid("null argument");
    return guarded([&] {
        *out_json = dup_string(io::space_to_json(*space->space).dump());
        return PK_OK;
    });
}

void pk_space_free(pk_space* space) { delete space; }

pk_status pk_space_point_count(const pk_space* space, int32_t* out) {
    if (!space || !out) return invalid("null argument");
    *out = space->space->size();
    return PK_OK;
}

pk_status pk_space_distance(const pk_space* space, int32_t i, int32_t j, double* out) {
    if (!space || !out) return invalid("null argument");
    return guarded([&] {
        *out = space->space->distance(i, j);
        return PK_OK;
    });
}

pk_status pk_hausdorff_distance(const pk_space* space, const int32_t* a, size_t a_len,
                                const int32_t* b, size_t b_len, double* out) {
    if (!space || !a || !b || !out) return invalid("null argument");
    return guarded([&] {
        FeasibleSet fa(space->space, std::vector<std::int32_t>(a, a + a_len));
        FeasibleSet fb(space->space, std::vector<std::int32_t>(b, b + b_len));
        *out = hausdorff_distance(fa, fb);
        return PK_OK;
    });
}

pk_status pk_preference_from_json(const pk_space* space, const char* json_text,
                                  pk_preference** out) {
    if (!space || !json_text || !out) return invalid("null argument");
    return guarded([&] {
        auto pref = io::preference_from_json(io::json::parse(json_text), space->space);
        *out = new pk_preference{std::move(pref)};
        return PK_OK;
    });
}

pk_status pk_preference_from_multi_utility_json(const pk_space* space,
                                                const char* json_text,
                                                pk_preference** out) {
    if (!space || !json_text || !out) return invalid("null argument");
    return guarded([&] {
        auto mu = io::multi_utility_from_json(io::json::parse(json_text), space->space);
        *out = new pk_preference{from_multi_utility(mu)};
        return PK_OK;
    });
}

pk_status pk_preference_to_json(const pk_preference* pref, char** out_json) {
    if (!pref || !out_json) return invalid("null argument");
    return guarded([&] {
        *out_json = dup_string(io::preference_to_json(pref->pref).dump());
        return PK_OK;
    });
}

void pk_preference_free(pk_preference* pref) { delete pref; }

pk_status pk_preference_holds(const pk_preference* pref, int32_t i, int32_t j, int* out) {
    if (!pref || !out) return invalid("null argument");
    return guarded([&] {
        const auto& sp = *pref->pref.space();
        if (i < 0 || i >= sp.size() || j < 0 || j >= sp.size())
            throw std::invalid_argument("point index out of range");
        *out = pref->pref.holds(i, j) ? 1 : 0;
        return PK_OK;
    });
}

pk_status pk_preference_validate(const pk_preference* pref, char** out_json) {
    if (!pref || !out_json) return invalid("null argument");
    return guarded([&] {
        io::json arr = io::json::array();
        for (const auto& v : validate(pref->pref)) arr.push_back(v.describe());
        *out_json = dup_string(arr.dump());
        return PK_OK;
    });
}

namespace {

pk_status extremal_elements(const pk_preference* pref, const int32_t* members,
                            size_t members_len, int32_t* out_buf, size_t buf_len,
                            size_t* out_len, bool maximal) {
    if (!pref || !members || !out_len) return invalid("null argument");
    return guarded([&] {
        FeasibleSet f(pref->pref.space(),
                      std::vector<std::int32_t>(members, members + members_len));
        FeasibleSet result =
            maximal ? max_elements(pref->pref, f) : min_elements(pref->pref, f);
        *out_len = result.members().size();
        if (!out_buf || buf_len < result.members().size())
            throw std::invalid_argument("output buffer too small");
        std::memcpy(out_buf, result.members().data(),
                    result.members().size() * sizeof(int32_t));
        return PK_OK;
    });
}

}  // namespace

pk_status pk_max_elements(const pk_preference* pref, const int32_t* members,
                          size_t members_len, int32_t* out_buf, size_t buf_len,
                          size_t* out_len) {
    return extremal_elements(pref, members, members_len, out_buf, buf_len, out_len, true);
}

pk_status pk_min_elements(const pk_preference* pref, const int32_t* members,
                          size_t members_len, int32_t* out_buf, size_t buf_len,
                          size_t* out_len) {
    return extremal_elements(pref, members, members_len, out_buf, buf_len, out_len, false);
}

pk_status pk_maximal_domains(const pk_preference* pref, const int32_t* members,
                             size_t members_len, size_t clique_cap, char** out_json) {
    if (!pref || !members || !out_json) return invalid("null argument");
    return guarded([&] {
        FeasibleSet f(pref->pref.space(),
                      std::vector<std::int32_t>(members, members + members_len));
        auto coll = maximal_domains(pref->pref, f,
                                    clique_cap == 0 ? kDefaultCliqueCap : clique_cap);
        *out_json = dup_string(io::domain_collection_to_json(coll).dump());
        return PK_OK;
    });
}

pk_status pk_relation_hausdorff(const pk_preference* p, const pk_preference* q,
                                double* out) {
    if (!p || !q || !out) return invalid("null argument");
    return guarded([&] {
        *out = relation_hausdorff_distance(p->pref, q->pref);
        return PK_OK;
    });
}

pk_status pk_scenario_names(char** out_json) {
    if (!out_json) return invalid("null argument");
    return guarded([&] {
        io::json arr = io::json::array();
        for (const auto& e : catalog())
            arr.push_back({{"name", e.name},
                           {"verifier", e.verifier},
                           {"expected_verdict", e.expected_verdict}});
        *out_json = dup_string(arr.dump());
        return PK_OK;
    });
}

pk_status pk_run_scenario(const char* spec_json, const char* verifier,
                          size_t clique_cap, char** out_report_json) {
    if (!spec_json || !verifier || !out_report_json) return invalid("null argument");
    try {
        g_last_error.clear();
        ScenarioSpec spec = parse_spec(spec_json);
        auto result = io::run_scenario(
            spec, verifier, clique_cap == 0 ? kDefaultCliqueCap : clique_cap);
        *out_report_json = dup_string(result.report.dump(2));
        return PK_OK;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return PK_ERR_UNKNOWN_SCENARIO;
    } catch (const CliqueCapError& e) {
        g_last_error = e.what();
        return PK_ERR_CLIQUE_CAP;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return PK_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PK_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PK_ERR_INTERNAL;
    }
}

pk_status pk_run_suite(size_t clique_cap, int horizon_override,
                       char** out_summary_json) {
    if (!out_summary_json) return invalid("null argument");
    return guarded([&] {
        auto result = io::run_suite(clique_cap == 0 ? kDefaultCliqueCap : clique_cap,
                                    horizon_override);
        io::json j = result.summary;
        j["table"] = result.table;
        *out_summary_json = dup_string(j.dump(2));
        return PK_OK;
    });
}

pk_status pk_scenario_csv(const char* spec_json, size_t clique_cap, char** out_csv) {
    if (!spec_json || !out_csv) return invalid("null argument");
    try {
        g_last_error.clear();
        ScenarioSpec spec = parse_spec(spec_json);
        ScenarioBundle bundle = build_scenario(spec);
        const CatalogEntry* entry = catalog_find(bundle.name);
        std::size_t cap = clique_cap != 0 ? clique_cap
                                          : (entry ? entry->clique_cap : kDefaultCliqueCap);
        auto stats = per_term_stats(bundle.seq, std::min<std::size_t>(cap, 20000));
        *out_csv = dup_string(io::term_stats_to_csv(stats));
        return PK_OK;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return PK_ERR_UNKNOWN_SCENARIO;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return PK_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PK_ERR_INTERNAL;
    }
}

}  // extern "C"
