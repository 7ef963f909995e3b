// pmscheme: command-line front end. Results go to stdout as JSON (enumerate
// prints matchings one per line), a short summary goes to stderr.
// Exit codes: 0 pass, 1 an exact check failed, 2 usage, 3 capacity or
// inconclusive.

#include "pmscheme/acceptance.hpp"
#include "pmscheme/cache.hpp"
#include "pmscheme/ekr.hpp"
#include "pmscheme/errors.hpp"
#include "pmscheme/geometry.hpp"
#include "pmscheme/json_io.hpp"
#include "pmscheme/matching.hpp"
#include "pmscheme/quotient.hpp"
#include "pmscheme/scheme.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace pmscheme;
using json_io::json;
using json_io::to_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

struct Outcome {
    json result;
    Exit code = kPass;
    std::string summary;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

const char* outcome_name(Exit e)
{
    switch (e) {
    case kPass: return "pass";
    case kFail: return "fail";
    case kInconclusive: return "inconclusive";
    default: return "usage";
    }
}

Outcome cmd_scheme(ResultCache& cache, int k, bool degrees, const std::string& shape, std::optional<std::uint64_t> vertex,
                   bool bose_mesner)
{
    Outcome o;
    if (bose_mesner) {
        const auto r = bose_mesner_checks(k);
        o.result = to_json(r);
        o.code = r.passed ? kPass : kFail;
        o.summary = std::to_string(r.checks.size()) + " Bose-Mesner checks, " + std::to_string(r.failures.size()) +
                    " failures";
        return o;
    }
    if (!shape.empty()) {
        if (!vertex) throw domain_error("--class needs --vertex");
        const auto cls = parse_partition(shape);
        require_class_shape(k, cls);
        if (k > 16) throw capacity_error("vertex indices are supported for k <= 16");
        if (*vertex >= matching_count(k)) throw domain_error("vertex index out of range");
        const auto p = matching_unrank(k, *vertex);
        json list = json::array();
        std::size_t count = 0;
        constexpr std::size_t kListCap = 1'000'000;
        for_each_neighbor(p, cls, [&](const PerfectMatching& q) {
            list.push_back(q.to_string());
            return ++count < kListCap;
        });
        if (count >= kListCap) throw capacity_error("more than 10^6 neighbours; use --degrees");
        o.result = {{"shape", to_json(cls)}, {"vertex", p.to_string()}, {"index", *vertex},
                    {"degree", count}, {"neighbors", std::move(list)}};
        o.summary = std::to_string(count) + " neighbours of " + p.to_string() + " in class " + cls.to_string();
        return o;
    }
    (void)degrees;
    json list = json::array();
    for (const auto& c : scheme_classes(k)) {
        const json entry = cache.get_or_compute("degree", k, {{"shape", to_json(c.shape)}}, [&] {
            return json{{"shape", to_json(c.shape)}, {"degree", to_json(c.degree)}};
        });
        list.push_back(entry);
    }
    o.result = std::move(list);
    o.summary = std::to_string(o.result.size()) + " classes at k=" + std::to_string(k);
    return o;
}

Outcome cmd_quotient(ResultCache& cache, int k, const std::string& cls_text, const std::string& sub_text, bool serial)
{
    const auto cls = parse_partition(cls_text);
    const auto sub = parse_partition(sub_text);
    require_class_shape(k, cls);
    require_class_shape(k, sub);
    if (k > kQuotientCap) throw capacity_error("quotients are built for k <= " + std::to_string(kQuotientCap));
    Outcome o;
    o.result = cache.get_or_compute("quotient", k, {{"class", to_json(cls)}, {"subgroup", to_json(sub)}}, [&] {
        const OrbitPartition orbits(k, sub);
        return to_json(quotient_matrix(orbits, cls, !serial), orbits);
    });
    o.summary = std::to_string(o.result["orbits"].size()) + " orbits of Sym" + sub.to_string();
    return o;
}

Outcome cmd_char_table(ResultCache& cache, int k, bool partial)
{
    Outcome o;
    if (partial) {
        if (k < 6) throw domain_error("--partial needs k >= 6; use the full table for k <= 5");
        if (k > kQuotientCap) throw capacity_error("partial tables need quotients, k <= " + std::to_string(kQuotientCap));
        o.result = cache.get_or_compute("char-table", k, {{"partial", true}},
                                        [&] { return to_json(partial_char_table(k)); });
        int bad = 0;
        for (const auto& c : o.result["cells"]) bad += c["matches"] == false;
        o.code = o.result["all_match"].get<bool>() ? kPass : kFail;
        o.summary = std::to_string(o.result["cells"].size()) + " cells, " + std::to_string(bad) +
                    " differ from the closed forms";
        return o;
    }
    if (k > kDenseCap) throw capacity_error("full tables are computed for k <= " + std::to_string(kDenseCap));
    const auto t = cached_full_table(cache, k);
    o.result = to_json(t);
    o.summary = std::to_string(t.modules().size()) + "x" + std::to_string(t.classes().size()) + " table at k=" +
                std::to_string(k);
    return o;
}

Outcome cmd_singer(std::uint32_t n, std::uint32_t d)
{
    const auto ds = singer_difference_set(n, d);
    Outcome o;
    o.result = to_json(ds);
    o.summary = "(" + std::to_string(ds.v) + "," + std::to_string(ds.elements.size()) + "," +
                std::to_string(ds.lambda) + ") difference set";
    return o;
}

Outcome cmd_singer_clique(std::uint32_t a, bool verify)
{
    const auto c = build_clique(a);
    Outcome o;
    o.result = to_json(c);
    if (verify) {
        const auto plane = develop_plane(c.ds);
        const auto lemma = lemma_lines_with_zero(plane, c.ds);
        const auto oval = verify_oval(plane, c.oval);
        bool pairwise = true;
        for (std::size_t i = 0; i < c.matchings.size() && pairwise; ++i)
            for (std::size_t j = i + 1; j < c.matchings.size(); ++j)
                if (intersection_size(c.matchings[i], c.matchings[j]) > 1) {
                    pairwise = false;
                    break;
                }
        const auto coclique = double_factorial(2 * c.k - 5);
        const Integer product = coclique * static_cast<unsigned long>(c.matchings.size());
        const bool tight = product == matching_count(c.k);
        const bool ok = lemma.passed() && oval.is_oval && pairwise && tight;
        o.result["verification"] = {{"lines_with_zero", to_json(lemma)},
                                    {"oval", oval.is_oval},
                                    {"pairwise_at_most_one_common_edge", pairwise},
                                    {"canonical_coclique_size", to_json(coclique)},
                                    {"clique_times_coclique", to_json(product)},
                                    {"vertex_count", to_json(matching_count(c.k))},
                                    {"bound_attained", tight},
                                    {"passed", ok}};
        o.code = ok ? kPass : kFail;
    }
    o.summary = std::to_string(c.matchings.size()) + " matchings on K_" + std::to_string(2 * c.k) +
                (verify ? (o.code == kPass ? ", verification passed" : ", verification FAILED") : "");
    return o;
}

Outcome cmd_weighted(int k, bool explicit_small, bool verify)
{
    Outcome o;
    if (verify) {
        const auto r = verify_weighted_matrix(k);
        o.result = to_json(r);
        o.code = r.certificate.valid ? kPass : kFail;
        o.summary = "row sum " + to_string(r.certificate.d) + ", tau " + to_string(r.certificate.tau) +
                    (r.certificate.valid ? "" : ", certificate invalid");
        return o;
    }
    const auto m = explicit_small ? explicit_small_matrix(k) : generic_weighted_matrix(k);
    o.result = to_json(m);
    o.summary = std::to_string(m.coefficients.size()) + " coefficients, row sum " + to_string(m.row_sum());
    return o;
}

Outcome cmd_verify_ekr(int k)
{
    const auto cert = verify_main_theorem(k);
    Outcome o;
    o.result = to_json(cert);
    const bool tight = cert.achieved && Rational(*cert.achieved) == cert.bound;
    if (!cert.valid) o.code = kFail;
    else if (cert.externally_certified_remainder || !tight) o.code = kInconclusive;
    o.summary = "bound " + to_string(cert.bound) +
                (cert.achieved ? ", canonical coclique " + to_string(*cert.achieved) : std::string()) +
                (o.code == kInconclusive ? "; remaining modules not checked here" : "");
    return o;
}

Outcome cmd_conjecture(ResultCache& cache, int k)
{
    if (k > kDenseCap) throw capacity_error("the probe needs a full table, k <= " + std::to_string(kDenseCap));
    const auto rep = conjecture_check(cached_full_table(cache, k));
    Outcome o;
    o.result = to_json(rep);
    for (const auto& r : rep.rows) o.summary += (o.summary.empty() ? "" : "\n") + r.observation;
    return o;
}

Outcome cmd_import(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw domain_error(std::string("not JSON: ") + e.what());
    }
    // Accept the output of `char-table --partial` as well as a bare table.
    if (j.is_object() && j.contains("table") && !j.contains("entries")) j = j["table"];
    const auto t = json_io::table_from_json(j);
    Outcome o;
    std::vector<std::string> failures;
    std::string level = "structure only";
    if (t.complete()) {
        failures = table_consistency_failures(t);
        level = "trace identities";
        if (failures.empty() && t.k() <= kDenseCap) {
            failures = verify_table_dense(t);
            level = "dense";
        }
    }
    const bool round_trip = json_io::table_from_json(to_json(t)) == t;
    if (!round_trip) failures.push_back("table does not survive a JSON round trip");
    o.result = {{"k", t.k()},   {"complete", t.complete()}, {"verification", level},
                {"failures", failures}, {"round_trip", round_trip}, {"table", to_json(t)}};
    o.code = failures.empty() ? kPass : kFail;
    o.summary = "imported " + std::to_string(t.modules().size()) + "x" + std::to_string(t.classes().size()) +
                " table at k=" + std::to_string(t.k()) + ", " + level + " check: " +
                (failures.empty() ? "ok" : std::to_string(failures.size()) + " failures");
    return o;
}

Outcome cmd_selftest(ResultCache& cache, const std::vector<int>& only)
{
    AcceptanceOptions opts;
    opts.only = only;
    opts.cache = &cache;
    opts.on_result = [](const CriterionResult& r) { std::cerr << format_result(r) << std::endl; };
    const auto results = run_acceptance(opts);
    Outcome o;
    json list = json::array();
    int failed = 0;
    for (const auto& r : results) {
        list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                        {"seconds", r.seconds}});
        failed += !r.passed;
    }
    o.result = {{"criteria", std::move(list)}};
    o.code = failed ? kFail : kPass;
    o.summary = std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " criteria passed";
    return o;
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact computations on the perfect matching association scheme"};
    app.require_subcommand(1);
    bool no_cache = false;
    app.add_flag("--no-cache", no_cache, "Ignore and do not write the result cache");

    int k = 0;
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", k, "Half the number of vertices")->required()->check(CLI::Range(1, 64)); };

    auto* enumerate = app.add_subcommand("enumerate", "List the perfect matchings of K_2k, one per line");
    add_k(enumerate);
    bool count_only = false;
    enumerate->add_flag("--count-only", count_only, "Print only (2k-1)!!");

    auto* scheme = app.add_subcommand("scheme", "Class degrees or neighbour lists");
    add_k(scheme);
    bool degrees = false, bose_mesner = false;
    std::string shape;
    std::optional<std::uint64_t> vertex;
    auto* deg_flag = scheme->add_flag("--degrees", degrees, "Degree of every class (default)");
    auto* cls_opt = scheme->add_option("--class", shape, "Class shape, e.g. 6,2");
    scheme->add_option("--vertex", vertex, "Index of the source matching in enumeration order")->needs(cls_opt);
    deg_flag->excludes(cls_opt);
    scheme->add_flag("--bose-mesner", bose_mesner, "Run the Bose-Mesner algebra checks (k <= 4)")->excludes(cls_opt);

    auto* quotient = app.add_subcommand("quotient", "Quotient matrix of a class by a Young subgroup");
    add_k(quotient);
    std::string subgroup;
    bool serial = false;
    quotient->add_option("--class", shape, "Class shape")->required();
    quotient->add_option("--subgroup", subgroup, "Young subgroup shape")->required();
    quotient->add_flag("--serial", serial, "Use the serial counting kernel");

    auto* char_table = app.add_subcommand("char-table", "Eigenvalue table (full for k <= 5)");
    add_k(char_table);
    bool partial = false;
    char_table->add_flag("--partial", partial, "Quotient-extracted partial table, k >= 6");

    auto* singer = app.add_subcommand("singer", "Singer difference set");
    std::uint32_t n = 0, d = 0;
    singer->add_option("--n", n, "Prime power order")->required();
    singer->add_option("--d", d, "Dimension")->required();

    auto* singer_clique = app.add_subcommand("singer-clique", "Clique of M_2(2k) for 2k = 2^a + 2");
    std::uint32_t a = 0;
    bool verify = false;
    singer_clique->add_option("--a", a, "Exponent")->required();
    singer_clique->add_flag("--verify", verify, "Recheck the plane lemma, the clique property and the bound");

    auto* weighted = app.add_subcommand("weighted-matrix", "Weighted adjacency matrix coefficients");
    add_k(weighted);
    bool explicit_small = false;
    weighted->add_flag("--paper-small", explicit_small, "Use the explicit small-k matrix");
    weighted->add_flag("--verify", verify, "Report the eigenvalue checks and bound certificate");

    auto* ekr = app.add_subcommand("verify-ekr", "Bound certificate for 2-intersecting families");
    add_k(ekr);

    auto* conj = app.add_subcommand("conjecture", "Row maxima of two-row modules");
    add_k(conj);

    auto* import = app.add_subcommand("import-chartable", "Read and verify a JSON eigenvalue table");
    std::string file;
    import->add_option("file", file, "Table JSON")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    std::vector<int> only;
    selftest->add_option("--only", only, "Criterion ids to run")->check(CLI::Range(1, kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    ResultCache cache(ResultCache::default_directory(), &std::cerr, !no_cache);
    const auto start = std::chrono::steady_clock::now();
    const std::string command = app.get_subcommands().front()->get_name();
    Outcome o;
    try {
        if (*enumerate) {
            if (count_only) {
                std::cout << to_string(matching_count(k)) << '\n';
                std::cerr << "(2k-1)!! at k=" << k << '\n';
                return kPass;
            }
            if (k > kEnumerationCap) throw capacity_error("enumeration is capped at k <= " + std::to_string(kEnumerationCap));
            std::uint64_t count = 0;
            for_each_matching(k, [&](const PerfectMatching& p) {
                std::cout << p.to_string() << '\n';
                ++count;
                return true;
            });
            std::cerr << count << " matchings\n";
            return kPass;
        }
        if (*scheme) o = cmd_scheme(cache, k, degrees, shape, vertex, bose_mesner);
        else if (*quotient) o = cmd_quotient(cache, k, shape, subgroup, serial);
        else if (*char_table) o = cmd_char_table(cache, k, partial);
        else if (*singer) o = cmd_singer(n, d);
        else if (*singer_clique) o = cmd_singer_clique(a, verify);
        else if (*weighted) o = cmd_weighted(k, explicit_small, verify);
        else if (*ekr) o = cmd_verify_ekr(k);
        else if (*conj) o = cmd_conjecture(cache, k);
        else if (*import) o = cmd_import(file);
        else if (*selftest) o = cmd_selftest(cache, only);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return kFail;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (*selftest) {
        emit({{"command", command},
              {"parameters", {{"only", only}}},
              {"outcome", outcome_name(o.code)},
              {"artifacts", json::array({cache.directory().string()})},
              {"wall_time_s", seconds},
              {"cache", {{"hits", cache.hits()}, {"misses", cache.misses()}, {"discarded", cache.discarded()}}},
              {"result", o.result}});
    } else {
        emit(o.result);
    }
    std::cerr << command << ": " << o.summary << " [" << outcome_name(o.code) << ", " << seconds << " s]\n";
    return o.code;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
