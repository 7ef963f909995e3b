#include "pmscheme/json_io.hpp"

#include "pmscheme/errors.hpp"

namespace pmscheme::json_io {

namespace {

template <class T, class F>
json array_of(const std::vector<T>& items, F&& f)
{
    json out = json::array();
    for (const auto& x : items) out.push_back(f(x));
    return out;
}

json partitions(const std::vector<IntegerPartition>& ps)
{
    return array_of(ps, [](const IntegerPartition& p) { return to_json(p); });
}

template <class K, class V>
json keyed(const std::map<K, V>& m, const char* key_name, const char* value_name)
{
    json out = json::array();
    for (const auto& [k, v] : m) out.push_back({{key_name, to_json(k)}, {value_name, to_json(v)}});
    return out;
}

json optional_rational(const std::optional<Rational>& q) { return q ? to_json(*q) : json(nullptr); }

[[noreturn]] void bad(const std::string& what) { throw domain_error("chartable JSON: " + what); }

} // namespace

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& z) { return to_string(z); }

json to_json(const IntegerPartition& p) { return p.parts(); }

json to_json(const RationalMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const CharacterTable& t)
{
    json entries = json::array();
    for (const auto& mu : t.modules()) {
        json row = json::array();
        for (const auto& c : t.classes()) {
            const auto v = t.get(mu, c);
            row.push_back(v ? to_json(*v) : json(nullptr));
        }
        entries.push_back(std::move(row));
    }
    json mult = json::array();
    for (const auto& mu : t.modules()) {
        const auto it = t.multiplicities().find(mu);
        mult.push_back(it == t.multiplicities().end() ? json(nullptr) : to_json(it->second));
    }
    return {{"schema", kSchemaVersion},
            {"k", t.k()},
            {"modules", partitions(t.modules())},
            {"classes", partitions(t.classes())},
            {"multiplicities", std::move(mult)},
            {"entries", std::move(entries)}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw domain_error("expected a rational, got " + j.dump());
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        if (!is_integer(q)) throw domain_error("expected an integer, got " + j.dump());
        return q.get_num();
    }
    throw domain_error("expected an integer, got " + j.dump());
}

IntegerPartition partition_from_json(const json& j)
{
    if (!j.is_array()) throw domain_error("expected a partition array, got " + j.dump());
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw domain_error("partition parts must be integers: " + j.dump());
        parts.push_back(x.get<int>());
    }
    return IntegerPartition(std::move(parts));
}

RationalMatrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw domain_error("expected an array of rows");
    RationalMatrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) throw domain_error("ragged matrix row " + std::to_string(i));
        for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

CharacterTable table_from_json(const json& j)
{
    if (!j.is_object()) bad("top level must be an object");
    for (const char* field : {"k", "modules", "classes", "entries"})
        if (!j.contains(field)) bad(std::string("missing field '") + field + "'");
    if (j.contains("schema") && j["schema"] != kSchemaVersion) bad("unsupported schema " + j["schema"].dump());
    if (!j["k"].is_number_integer()) bad("'k' must be an integer");
    const int k = j["k"].get<int>();
    std::vector<IntegerPartition> modules, classes;
    for (const auto& p : j["modules"]) modules.push_back(partition_from_json(p));
    for (const auto& p : j["classes"]) classes.push_back(partition_from_json(p));
    for (const auto& p : modules)
        if (p.size() != 2 * k || !p.is_even()) bad("module " + p.to_string() + " is not an even partition of 2k");
    for (const auto& p : classes) require_class_shape(k, p);
    CharacterTable t(k, modules, classes);
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != modules.size()) bad("'entries' needs one row per module");
    for (std::size_t i = 0; i < modules.size(); ++i) {
        if (!entries[i].is_array() || entries[i].size() != classes.size())
            bad("row " + std::to_string(i) + " needs one entry per class");
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (!entries[i][c].is_null()) t.set(modules[i], classes[c], rational_from_json(entries[i][c]));
    }
    if (j.contains("multiplicities")) {
        const auto& mult = j["multiplicities"];
        if (!mult.is_array() || mult.size() != modules.size()) bad("'multiplicities' needs one value per module");
        for (std::size_t i = 0; i < modules.size(); ++i)
            if (!mult[i].is_null()) t.set_multiplicity(modules[i], integer_from_json(mult[i]));
    }
    return t;
}

json to_json(const QuotientMatrix& q, const OrbitPartition& orbits)
{
    json orbit_list = json::array();
    for (std::size_t i = 0; i < orbits.orbit_count(); ++i)
        orbit_list.push_back({{"key", orbits.key(i)},
                              {"representative", orbits.representative(i).to_string()},
                              {"size", to_json(orbits.orbit_size(i))}});
    return {{"k", orbits.k()},
            {"class", to_json(q.class_shape)},
            {"subgroup", to_json(q.subgroup)},
            {"orbits", std::move(orbit_list)},
            {"matrix", to_json(q.entries)}};
}

json to_json(const PartialTableResult& r)
{
    json cells = json::array();
    for (const auto& c : r.cells)
        cells.push_back({{"module", to_json(c.module)},
                         {"class", to_json(c.cls)},
                         {"computed", to_json(c.computed)},
                         {"closed_form", optional_rational(c.closed_form)},
                         {"matches", c.closed_form ? json(c.matches) : json(nullptr)}});
    return {{"table", to_json(r.table)}, {"cells", std::move(cells)}, {"all_match", r.all_match}};
}

json to_json(const ConjectureReport& r)
{
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"module", to_json(row.module)},
                        {"row", array_of(row.row, [](const Rational& q) { return to_json(q); })},
                        {"argmax_class", to_json(row.argmax_class)},
                        {"max_value", to_json(row.max_value)},
                        {"max_at_own_class", row.max_at_own_class},
                        {"dominating_negative", row.dominating_negative},
                        {"dominating_classes", partitions(row.dominating_classes)},
                        {"observation", row.observation}});
    return {{"k", r.k}, {"rows", std::move(rows)}};
}

json to_json(const SpanningSetReport& r)
{
    return {{"k", r.k},
            {"rows", r.rows},
            {"columns", r.columns},
            {"rank", r.rank},
            {"expected_rank", to_json(r.expected_rank)},
            {"gram_diagonal", to_json(r.diagonal)},
            {"gram_meet_two", to_json(r.meet_two)},
            {"gram_disjoint", to_json(r.disjoint)},
            {"odd_meets_vanish", r.odd_meets_vanish},
            {"constant_by_meet", r.constant_by_meet},
            {"printed_diagonal", to_json(r.printed_diagonal)},
            {"direct_diagonal", to_json(r.direct_diagonal)},
            {"printed_nullity", to_json(r.printed_nullity)},
            {"observed_nullity", to_json(r.observed_nullity)},
            {"passed", r.passed}};
}

json to_json(const DifferenceSet& ds)
{
    return {{"n", ds.n}, {"d", ds.d}, {"v", ds.v}, {"lambda", ds.lambda}, {"elements", ds.elements}};
}

json to_json(const LinesWithZeroReport& r)
{
    return {{"clause_a", r.clause_a},
            {"clause_b", r.clause_b},
            {"clause_c", r.clause_c},
            {"lines_through_zero", r.lines_through_zero},
            {"clause_b_points", r.clause_b_points},
            {"counterexamples", r.counterexamples}};
}

json to_json(const CliqueConstruction& c)
{
    return {{"a", c.a},
            {"k", c.k},
            {"difference_set", to_json(c.ds)},
            {"oval", c.oval},
            {"labels", "oval residues in ascending order are vertices 1..2k-1; residue 0 is vertex 2k"},
            {"sources", c.sources},
            {"matchings", array_of(c.matchings, [](const PerfectMatching& p) { return p.to_string(); })},
            {"size", c.matchings.size()},
            {"size_excluding_zero", c.size_excluding_zero},
            {"size_including_zero", c.size_including_zero},
            {"index_set_note", c.index_set_note}};
}

json to_json(const WeightedSchemeMatrix& m)
{
    return {{"k", m.k},
            {"coefficients", keyed(m.coefficients, "class", "coefficient")},
            {"row_sum", to_json(m.row_sum())},
            {"supported_on_m2", m.supported_on_m2()}};
}

json to_json(const BoundCertificate& c)
{
    return {{"v", to_json(c.v)},
            {"d", to_json(c.d)},
            {"tau", to_json(c.tau)},
            {"bound", to_json(c.bound)},
            {"achieved", c.achieved ? to_json(*c.achieved) : json(nullptr)},
            {"modules_at_tau", partitions(c.modules_at_tau)},
            {"valid", c.valid},
            {"externally_certified_remainder", c.externally_certified_remainder},
            {"notes", c.notes}};
}

json to_json(const WeightedMatrixReport& r)
{
    return {{"k", r.k},
            {"matrix", to_json(r.matrix)},
            {"certificate", to_json(r.certificate)},
            {"module_eigenvalues", keyed(r.module_eigenvalues, "module", "eigenvalue")},
            {"module_2k6_6_eigenvalue", optional_rational(r.module_2k6_6_eigenvalue)},
            {"module_2k6_6_closed_form", optional_rational(r.module_2k6_6_closed_form)},
            {"dense_verified", r.dense_verified}};
}

json to_json(const CliqueProjection& p)
{
    return {{"m_hat", to_json(p.m_hat)},
            {"m", to_json(p.m)},
            {"row_sum", to_json(p.row_sum)},
            {"m_hat_eigenvalues", keyed(p.m_hat_eigenvalues, "module", "eigenvalue")},
            {"m_eigenvalues", keyed(p.m_eigenvalues, "module", "eigenvalue")},
            {"least_eigenvalue", optional_rational(p.least_eigenvalue)},
            {"bound", optional_rational(p.bound)},
            {"psd", p.psd}};
}

json to_json(const TraceBoundReport& r)
{
    json rows = json::array();
    for (const auto& x : r.rows)
        rows.push_back({{"k", x.k},
                        {"diag_m2", to_json(x.diag_m2)},
                        {"diag_m2_closed", to_json(x.diag_m2_closed)},
                        {"rhs", to_json(x.rhs)},
                        {"rhs_printed_poly", to_json(x.rhs_printed_poly)},
                        {"rhs_direct_poly", to_json(x.rhs_direct_poly)},
                        {"m1", to_json(x.m1)},
                        {"m2", to_json(x.m2)},
                        {"m3", to_json(x.m3)},
                        {"m_formulas_match_hooks", x.m_formulas_match_hooks},
                        {"m_2k6_4_2", to_json(x.m_2k6_4_2)},
                        {"m_2k6_2_2_2", to_json(x.m_2k6_2_2_2)},
                        {"m_2k8_8", to_json(x.m_2k8_8)},
                        {"holds_2k6_4_2", x.holds_2k6_4_2},
                        {"holds_2k6_2_2_2", x.holds_2k6_2_2_2},
                        {"holds_2k8_8", x.holds_2k8_8},
                        {"holds_primary_bound", x.holds_primary_bound}});
    auto opt = [](const std::optional<int>& t) { return t ? json(*t) : json(nullptr); };
    return {{"rows", std::move(rows)},
            {"threshold_2k6_4_2", opt(r.threshold_2k6_4_2)},
            {"threshold_2k6_2_2_2", opt(r.threshold_2k6_2_2_2)},
            {"threshold_2k8_8", opt(r.threshold_2k8_8)},
            {"threshold_primary", opt(r.threshold_primary)}};
}

json to_json(const SpanDimensionReport& r)
{
    return {{"k", r.k},
            {"vectors", r.vectors},
            {"rank", r.rank},
            {"expected", to_json(r.expected)},
            {"asserted", r.asserted},
            {"passed", r.passed}};
}

json to_json(const MaxCocliqueResult& r)
{
    return {{"k", r.k},
            {"alpha", r.alpha},
            {"maximum_cocliques", r.maximum_cocliques},
            {"all_canonical", r.all_canonical},
            {"inconclusive", r.inconclusive},
            {"nodes", r.nodes}};
}

json to_json(const BoseMesnerReport& r)
{
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"identity", f.identity}, {"first", f.first}, {"second", f.second}});
    return {{"k", r.k}, {"passed", r.passed}, {"checks", r.checks}, {"failures", std::move(failures)}};
}

} // namespace pmscheme::json_io
