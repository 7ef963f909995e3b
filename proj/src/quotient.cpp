#include "pmscheme/quotient.hpp"

#include "pmscheme/closed_forms.hpp"
#include "pmscheme/errors.hpp"
#include "pmscheme/kernels.hpp"
#include "pmscheme/scheme.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>

namespace pmscheme {

// ---------------------------------------------------------------- orbits

namespace {

std::vector<int> sort_tuple(const OrbitKey& c, std::size_t r)
{
    std::vector<int> t;
    for (std::size_t i = 1; i < r; ++i) t.push_back(c[i * r + i]);
    for (std::size_t i = 1; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) t.push_back(c[i * r + j]);
    for (std::size_t j = 0; j < r; ++j) t.push_back(c[j]);
    return t;
}

// Row by row: the internal count of block i first, then its counts to the
// later blocks; each row must use up its block exactly.
void enumerate_keys(std::vector<int>& rem, OrbitKey& c, std::size_t r, std::size_t i, std::size_t j,
                    std::vector<OrbitKey>& out)
{
    if (i == r) {
        out.push_back(c);
        return;
    }
    if (j == i) {
        for (int d = rem[i] / 2; d >= 0; --d) {
            c[i * r + i] = d;
            rem[i] -= 2 * d;
            enumerate_keys(rem, c, r, i, i + 1, out);
            rem[i] += 2 * d;
        }
        c[i * r + i] = 0;
        return;
    }
    if (j == r) {
        if (rem[i] == 0) enumerate_keys(rem, c, r, i + 1, i + 1, out);
        return;
    }
    for (int x = std::min(rem[i], rem[j]); x >= 0; --x) {
        c[i * r + j] = c[j * r + i] = x;
        rem[i] -= x;
        rem[j] -= x;
        enumerate_keys(rem, c, r, i, j + 1, out);
        rem[i] += x;
        rem[j] += x;
    }
    c[i * r + j] = c[j * r + i] = 0;
}

} // namespace

OrbitPartition::OrbitPartition(int k, IntegerPartition lambda) : k_(k), lambda_(std::move(lambda))
{
    if (k < 1 || 2 * k > kMaxVertices) throw domain_error("k out of range");
    if (lambda_.size() != 2 * k)
        throw domain_error("subgroup " + lambda_.to_string() + " is not a partition of " + std::to_string(2 * k));
    const std::size_t r = lambda_.length();
    std::vector<int> starts;
    for (std::size_t b = 0; b < r; ++b) {
        starts.push_back(static_cast<int>(block_of_.size()));
        for (int i = 0; i < lambda_[b]; ++i) block_of_.push_back(static_cast<int>(b));
    }

    std::vector<int> rem = lambda_.parts();
    OrbitKey c(r * r, 0);
    std::vector<OrbitKey> keys;
    enumerate_keys(rem, c, r, 0, 0, keys);
    std::sort(keys.begin(), keys.end(),
              [r](const OrbitKey& a, const OrbitKey& b) { return sort_tuple(a, r) > sort_tuple(b, r); });
    keys_ = std::move(keys);

    for (std::size_t o = 0; o < keys_.size(); ++o) {
        const OrbitKey& key = keys_[o];
        index_[key] = static_cast<int>(o);
        std::vector<int> next = starts;
        std::vector<PerfectMatching::Edge> edges;
        Integer denom = 1;
        for (std::size_t i = 0; i < r; ++i) {
            for (int e = 0; e < key[i * r + i]; ++e) {
                edges.emplace_back(next[i], next[i] + 1);
                next[i] += 2;
            }
            denom *= power(2, static_cast<unsigned long>(key[i * r + i])) * factorial(key[i * r + i]);
            for (std::size_t j = i + 1; j < r; ++j) {
                for (int e = 0; e < key[i * r + j]; ++e) edges.emplace_back(next[i]++, next[j]++);
                denom *= factorial(key[i * r + j]);
            }
        }
        representatives_.emplace_back(k, edges);
        Integer num = 1;
        for (int part : lambda_.parts()) num *= factorial(part);
        sizes_.push_back(num / denom);

        std::optional<PerfectMatching> second;
        if (sizes_.back() > 1) {
            std::mt19937_64 rng(0x5eed + o);
            std::vector<int> perm(static_cast<std::size_t>(2 * k));
            for (int attempt = 0; attempt < 64 && !second; ++attempt) {
                for (std::size_t b = 0; b < r; ++b) {
                    std::vector<int> block(static_cast<std::size_t>(lambda_[b]));
                    std::iota(block.begin(), block.end(), starts[b]);
                    auto shuffled = block;
                    std::shuffle(shuffled.begin(), shuffled.end(), rng);
                    for (std::size_t i = 0; i < block.size(); ++i)
                        perm[static_cast<std::size_t>(block[i])] = shuffled[i];
                }
                PerfectMatching q = permute(representatives_.back(), perm);
                if (!(q == representatives_.back())) second = q;
            }
            if (!second) throw verification_error("no second representative found for orbit " + std::to_string(o));
        }
        seconds_.push_back(second);
    }
}

OrbitKey OrbitPartition::key_of(const PerfectMatching& p) const
{
    if (p.k() != k_) throw domain_error("matching size does not match the orbit partition");
    const std::size_t r = lambda_.length();
    OrbitKey c(r * r, 0);
    for (int v = 0; v < 2 * k_; ++v) {
        const int w = p.partner(v);
        if (w < v) continue;
        const auto a = static_cast<std::size_t>(block_of_[static_cast<std::size_t>(v)]);
        const auto b = static_cast<std::size_t>(block_of_[static_cast<std::size_t>(w)]);
        ++c[a * r + b];
        if (a != b) ++c[b * r + a];
    }
    return c;
}

int OrbitPartition::orbit_of(const PerfectMatching& p) const
{
    auto it = index_.find(key_of(p));
    if (it == index_.end()) throw verification_error("matching " + p.to_string() + " has no orbit key");
    return it->second;
}

OrbitPartition orbit_partition(int k, const IntegerPartition& lambda) { return OrbitPartition(k, lambda); }

// -------------------------------------------------------------- quotients

QuotientMatrix quotient_matrix(const OrbitPartition& orbits, const IntegerPartition& class_shape, bool use_parallel)
{
    const int k = orbits.k();
    if (k > kQuotientCap) throw capacity_error("quotients are capped at k = " + std::to_string(kQuotientCap));
    require_class_shape(k, class_shape);
    const std::size_t n = orbits.orbit_count();
    std::vector<kernels::OrbitCountTask> tasks;
    std::vector<std::size_t> second_of;
    for (std::size_t o = 0; o < n; ++o) tasks.push_back({orbits.representative(o), class_shape});
    for (std::size_t o = 0; o < n; ++o)
        if (orbits.second_representative(o)) {
            tasks.push_back({*orbits.second_representative(o), class_shape});
            second_of.push_back(o);
        }
    const kernels::OrbitOf orbit_of = [&orbits](const PerfectMatching& q) { return orbits.orbit_of(q); };
    const auto counts = use_parallel ? kernels::parallel::orbit_counts(tasks, orbit_of, n)
                                     : kernels::serial::orbit_counts(tasks, orbit_of, n);

    for (std::size_t s = 0; s < second_of.size(); ++s)
        if (counts[n + s] != counts[second_of[s]])
            throw verification_error("quotient of A" + class_shape.to_string() + " by Sym" +
                                     orbits.subgroup().to_string() + " is not equitable at orbit " +
                                     std::to_string(second_of[s]));

    const Integer degree = class_degree_formula(k, class_shape);
    QuotientMatrix q{class_shape, orbits.subgroup(), RationalMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        Integer sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            q.entries(i, j) = Rational(Integer(static_cast<unsigned long>(counts[i][j])));
            sum += static_cast<unsigned long>(counts[i][j]);
        }
        if (sum != degree)
            throw verification_error("quotient row " + std::to_string(i) + " of A" + class_shape.to_string() +
                                     " sums to " + to_string(sum) + ", expected " + to_string(degree));
    }
    return q;
}

QuotientMatrix quotient_matrix(int k, const IntegerPartition& class_shape, const IntegerPartition& lambda,
                               bool use_parallel)
{
    return quotient_matrix(OrbitPartition(k, lambda), class_shape, use_parallel);
}

RationalMatrix combined_quotient(const OrbitPartition& orbits,
                                 const std::vector<std::pair<IntegerPartition, Rational>>& weighted_classes)
{
    const std::size_t n = orbits.orbit_count();
    RationalMatrix sum(n, n);
    for (const auto& [shape, w] : weighted_classes) {
        if (w == 0) continue;
        const auto q = quotient_matrix(orbits, shape);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sum(i, j) += w * q.entries(i, j);
    }
    return sum;
}

// ------------------------------------------------------------- extraction

std::vector<IntegerPartition> admissible_modules(const IntegerPartition& lambda)
{
    if (lambda.size() % 2) return {};
    std::vector<IntegerPartition> out;
    for (auto& mu : even_partitions(lambda.size()))
        if (dominance_ge(mu, lambda)) out.push_back(mu);
    return out;
}

std::vector<IntegerPartition> standard_chain(int k)
{
    std::vector<IntegerPartition> chain;
    for (int j = 0; 2 * k - 2 * j >= 2 * j && j <= 3; ++j) chain.push_back(two_row(2 * k - 2 * j, 2 * j));
    if (k >= 3) chain.push_back(IntegerPartition{2 * k - 4, 2, 2});
    return chain;
}

std::map<IntegerPartition, Rational> extract_eigenvalues(int k, const IntegerPartition& class_shape,
                                                        const std::vector<IntegerPartition>& chain)
{
    std::map<IntegerPartition, Rational> known;
    for (const auto& lambda : chain) {
        const auto q = quotient_matrix(k, class_shape, lambda);
        const auto roots = rational_roots(characteristic_polynomial(q.entries));
        if (roots.residual_degree != 0)
            throw extraction_error("quotient of A" + class_shape.to_string() + " by Sym" + lambda.to_string() +
                                   " has " + std::to_string(roots.residual_degree) + " irrational eigenvalue(s)");
        std::set<Rational> removed;
        for (const auto& mu : admissible_modules(lambda))
            if (mu != lambda && known.count(mu)) removed.insert(known.at(mu));
        std::vector<Rational> rest;
        for (const auto& root : roots.roots)
            if (!removed.count(root.value)) rest.push_back(root.value);
        if (rest.size() != 1) {
            std::string msg = "module " + lambda.to_string() + " for A" + class_shape.to_string() + ": ";
            if (rest.empty()) {
                msg += "no new eigenvalue (it coincides with a dominating module)";
            } else {
                msg += "ambiguous remainder {";
                for (std::size_t i = 0; i < rest.size(); ++i) msg += (i ? ", " : "") + to_string(rest[i]);
                msg += "}";
            }
            throw extraction_error(msg);
        }
        known[lambda] = rest.front();
    }
    return known;
}

// ------------------------------------------------------------------ tables

CharacterTable::CharacterTable(int k, std::vector<IntegerPartition> modules, std::vector<IntegerPartition> classes)
    : k_(k), modules_(std::move(modules)), classes_(std::move(classes))
{
}

void CharacterTable::set(const IntegerPartition& module, const IntegerPartition& cls, Rational value)
{
    if (std::find(modules_.begin(), modules_.end(), module) == modules_.end())
        throw domain_error("unknown module " + module.to_string());
    if (std::find(classes_.begin(), classes_.end(), cls) == classes_.end())
        throw domain_error("unknown class " + cls.to_string());
    entries_[{module, cls}] = std::move(value);
}

std::optional<Rational> CharacterTable::get(const IntegerPartition& module, const IntegerPartition& cls) const
{
    auto it = entries_.find({module, cls});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

const Rational& CharacterTable::at(const IntegerPartition& module, const IntegerPartition& cls) const
{
    auto it = entries_.find({module, cls});
    if (it == entries_.end()) throw domain_error("no entry for " + module.to_string() + " x " + cls.to_string());
    return it->second;
}

void CharacterTable::set_multiplicity(const IntegerPartition& module, Integer m)
{
    if (std::find(modules_.begin(), modules_.end(), module) == modules_.end())
        throw domain_error("unknown module " + module.to_string());
    multiplicities_[module] = std::move(m);
}

const Integer& CharacterTable::multiplicity(const IntegerPartition& module) const
{
    auto it = multiplicities_.find(module);
    if (it == multiplicities_.end()) throw domain_error("no multiplicity for " + module.to_string());
    return it->second;
}

bool CharacterTable::complete() const
{
    if (multiplicities_.size() != modules_.size()) return false;
    return entries_.size() == modules_.size() * classes_.size();
}

std::vector<std::string> table_consistency_failures(const CharacterTable& table)
{
    std::vector<std::string> failures;
    if (!table.complete()) return {"table is incomplete"};
    const int k = table.k();
    const Integer v = double_factorial(2 * k - 1);
    const IntegerPartition trivial = two_row(2 * k, 0);
    const IntegerPartition id = identity_shape(k);
    for (const auto& cls : table.classes()) {
        const Integer degree = class_degree_formula(k, cls);
        if (auto t = table.get(trivial, cls); !t || *t != Rational(degree))
            failures.push_back("row " + trivial.to_string() + " at " + cls.to_string() + " is not the degree " +
                               to_string(degree));
        Rational s1 = 0, s2 = 0;
        for (const auto& mu : table.modules()) {
            const Rational& th = table.at(mu, cls);
            s1 += Rational(table.multiplicity(mu)) * th;
            s2 += Rational(table.multiplicity(mu)) * th * th;
        }
        const Rational tr = cls == id ? Rational(v) : Rational(0);
        if (s1 != tr)
            failures.push_back("sum m*theta for " + cls.to_string() + " is " + to_string(s1) + ", trace is " +
                               to_string(tr));
        if (s2 != Rational(v * degree))
            failures.push_back("sum m*theta^2 for " + cls.to_string() + " is " + to_string(s2) + ", expected " +
                               to_string(Integer(v * degree)));
    }
    return failures;
}

PartialTableResult partial_char_table(int k)
{
    if (k < 6) throw domain_error("the partial table is defined for k >= 6");
    if (k > kQuotientCap) throw capacity_error("quotients are capped at k = " + std::to_string(kQuotientCap));
    const IntegerPartition m0 = two_row(2 * k, 0), m1 = two_row(2 * k - 2, 2), m2 = two_row(2 * k - 4, 4),
                           m3{2 * k - 4, 2, 2}, m4 = two_row(2 * k - 6, 6);
    const std::vector<IntegerPartition> modules{m0, m1, m2, m3, m4};
    const std::vector<IntegerPartition> classes{m0, m1, m2, m3, m4};
    const std::vector<IntegerPartition> chain{m0, m1, m2, m4, m3};

    PartialTableResult res;
    res.table = CharacterTable(k, modules, classes);
    for (const auto& mu : modules) res.table.set_multiplicity(mu, hook_dimension(mu));
    for (const auto& cls : classes) {
        const auto values = extract_eigenvalues(k, cls, chain);
        for (const auto& mu : modules) {
            const Rational& value = values.at(mu);
            res.table.set(mu, cls, value);
            PartialTableCell cell{mu, cls, value, closed_forms::table_entry(k, mu, cls), false};
            cell.matches = cell.closed_form && *cell.closed_form == value;
            if (cell.closed_form && !cell.matches) res.all_match = false;
            res.cells.push_back(std::move(cell));
        }
    }
    return res;
}

// ------------------------------------------------------ full small tables

namespace {

Rational approximate_rational(double x, long max_den)
{
    // continued fraction convergents
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int step = 0; step < 64; ++step) {
        const double a = std::floor(r);
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) < 1e-7 * std::max(1.0, std::abs(x)))
            break;
        const double frac = r - a;
        if (frac < 1e-12) break;
        r = 1.0 / frac;
    }
    return make_rational(h1, k1);
}

// Exact determinant of an integer matrix (fraction-free elimination).
Integer bareiss_determinant(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[c][c] - a[i][c] * a[c][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    return sign * a[n - 1][n - 1];
}

struct IntersectionNumbers {
    std::size_t r = 0;
    std::vector<std::int64_t> p;  // p[(i*r + j)*r + l]
    std::int64_t at(std::size_t i, std::size_t j, std::size_t l) const { return p[(i * r + j) * r + l]; }
};

IntersectionNumbers intersection_numbers(const DenseScheme& s)
{
    IntersectionNumbers in;
    in.r = s.classes().size();
    in.p.assign(in.r * in.r * in.r, 0);
    const std::size_t n = s.vertex_count();
    for (std::size_t l = 0; l < in.r; ++l) {
        std::size_t y = 0;
        while (s(0, y) != l) ++y;
        for (std::size_t z = 0; z < n; ++z) ++in.p[(s(0, z) * in.r + s(z, y)) * in.r + l];
    }
    return in;
}

std::vector<std::string> verify_rows(const DenseScheme& s, const CharacterTable& table)
{
    std::vector<std::string> failures;
    const auto& cls = s.classes();
    const std::size_t r = cls.size();
    const auto in = intersection_numbers(s);
    for (const auto& mu : table.modules()) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) {
                Rational rhs = 0;
                for (std::size_t l = 0; l < r; ++l)
                    rhs += Rational(static_cast<long>(in.at(i, j, l))) * table.at(mu, cls[l].shape);
                if (table.at(mu, cls[i].shape) * table.at(mu, cls[j].shape) != rhs) {
                    failures.push_back("row " + mu.to_string() + " is not multiplicative on A" +
                                       cls[i].shape.to_string() + " A" + cls[j].shape.to_string());
                    i = r;
                    break;
                }
            }
    }
    // distinct rows
    for (std::size_t a = 0; a < table.modules().size(); ++a)
        for (std::size_t b = a + 1; b < table.modules().size(); ++b) {
            bool same = true;
            for (const auto& c : cls) same = same && table.at(table.modules()[a], c.shape) == table.at(table.modules()[b], c.shape);
            if (same)
                failures.push_back("rows " + table.modules()[a].to_string() + " and " +
                                   table.modules()[b].to_string() + " coincide");
        }
    // Annihilation: prod over distinct eigenvalues of (A - theta I) has a zero
    // first row, hence is zero.
    const std::size_t n = s.vertex_count();
    for (std::size_t c = 0; c < r; ++c) {
        std::set<Rational> values;
        for (const auto& mu : table.modules()) values.insert(table.at(mu, cls[c].shape));
        std::vector<std::vector<std::uint32_t>> adj(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (s(i, j) == c) adj[i].push_back(static_cast<std::uint32_t>(j));
        std::vector<Rational> row(n);
        row[0] = 1;
        for (const auto& th : values) {
            std::vector<Rational> next(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (row[i] == 0) continue;
                for (auto j : adj[i]) next[j] += row[i];
                next[i] -= th * row[i];
            }
            row.swap(next);
        }
        if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
            failures.push_back("eigenvalues listed for A" + cls[c].shape.to_string() + " do not annihilate it");
    }
    for (auto& f : table_consistency_failures(table)) failures.push_back(f);
    return failures;
}

} // namespace

CharacterTable full_char_table_small(int k, FullTableDiagnostics* diagnostics)
{
    if (k < 1 || k > kDenseCap) throw capacity_error("full tables are computed for k <= " + std::to_string(kDenseCap));
    const DenseScheme s(k);
    const std::size_t n = s.vertex_count();
    const auto& cls = s.classes();
    const std::size_t r = cls.size();
    const auto modules = even_partitions(2 * k);
    FullTableDiagnostics diag;

    for (unsigned seed = 1; seed <= 8; ++seed) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick(1, 97);
        std::vector<long> w(r);
        for (auto& x : w) x = pick(rng);
        w[s.class_index(identity_shape(k))] = 0;

        Eigen::MatrixXd b(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(w[s(i, j)]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
        const auto& ev = solver.eigenvalues();
        const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
        const double tol = 1e-9 * scale;

        std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // [begin, end)
        Eigen::Index begin = 0;
        diag.max_cluster_spread = 0.0;
        diag.min_cluster_gap = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 1; i <= ev.size(); ++i) {
            if (i == ev.size() || ev(i) - ev(i - 1) > tol) {
                diag.max_cluster_spread = std::max(diag.max_cluster_spread, ev(i - 1) - ev(begin));
                if (i < ev.size()) diag.min_cluster_gap = std::min(diag.min_cluster_gap, ev(i) - ev(i - 1));
                clusters.emplace_back(begin, i);
                begin = i;
            }
        }
        diag.clusters = clusters.size();
        if (clusters.size() != r) {
            diag.assignment_notes.push_back("seed " + std::to_string(seed) + ": " + std::to_string(clusters.size()) +
                                            " eigenvalue clusters for " + std::to_string(r) + " classes; reseeding");
            continue;
        }

        // eigenvalue of each class on each cluster, via Rayleigh quotients
        const long max_den = 2 * factorial(2 * k).get_si();
        std::vector<std::vector<Rational>> theta(clusters.size(), std::vector<Rational>(r));
        std::vector<Rational> beta(clusters.size());
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            const Eigen::VectorXd u = solver.eigenvectors().col(clusters[c].first);
            std::vector<double> num(r, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    num[s(i, j)] += u(static_cast<Eigen::Index>(i)) * u(static_cast<Eigen::Index>(j));
            const double den = u.squaredNorm();
            for (std::size_t a = 0; a < r; ++a) {
                theta[c][a] = approximate_rational(num[a] / den, max_den);
                beta[c] += Rational(w[a]) * theta[c][a];
            }
        }

        // Label clusters with modules: multiplicity must equal the module
        // dimension; ties are broken by quotient containment.
        std::map<IntegerPartition, std::size_t> label;
        std::map<IntegerPartition, RationalMatrix> quotient_cache;
        auto in_quotient = [&](const IntegerPartition& nu, const Rational& value) {
            auto it = quotient_cache.find(nu);
            if (it == quotient_cache.end()) {
                std::vector<std::pair<IntegerPartition, Rational>> weighted;
                for (std::size_t a = 0; a < r; ++a) weighted.emplace_back(cls[a].shape, Rational(w[a]));
                it = quotient_cache.emplace(nu, combined_quotient(OrbitPartition(k, nu), weighted)).first;
            }
            const RationalMatrix& q = it->second;
            if (!is_integer(value)) return false;
            std::vector<std::vector<Integer>> m(q.rows(), std::vector<Integer>(q.cols()));
            for (std::size_t i = 0; i < q.rows(); ++i)
                for (std::size_t j = 0; j < q.cols(); ++j)
                    m[i][j] = q(i, j).get_num() - (i == j ? value.get_num() : Integer(0));
            return bareiss_determinant(std::move(m)) == 0;
        };
        bool ok = true;
        for (std::size_t c = 0; c < clusters.size() && ok; ++c) {
            const auto mult = static_cast<unsigned long>(clusters[c].second - clusters[c].first);
            std::vector<IntegerPartition> candidates;
            for (const auto& mu : modules)
                if (hook_dimension(mu) == Integer(mult)) candidates.push_back(mu);
            if (candidates.size() > 1) {
                std::vector<IntegerPartition> containing;
                for (const auto& mu : candidates)
                    if (in_quotient(mu, beta[c])) containing.push_back(mu);
                // dominance-maximal candidate whose quotient holds the value
                std::vector<IntegerPartition> maximal;
                for (const auto& mu : containing) {
                    bool dominated = false;
                    for (const auto& nu : containing)
                        if (nu != mu && dominance_ge(nu, mu)) dominated = true;
                    if (!dominated) maximal.push_back(mu);
                }
                std::string note = "multiplicity " + std::to_string(mult) + " shared by";
                for (auto& mu : candidates) note += " " + mu.to_string();
                note += "; quotient containment selects";
                for (auto& mu : maximal) note += " " + mu.to_string();
                diag.assignment_notes.push_back(note);
                candidates = maximal;
            }
            if (candidates.size() != 1 || label.count(candidates.front())) {
                ok = false;
                break;
            }
            label[candidates.front()] = c;
        }
        if (!ok) {
            diag.assignment_notes.push_back("seed " + std::to_string(seed) + ": module labelling failed; reseeding");
            continue;
        }

        CharacterTable table(k, modules, [&] {
            std::vector<IntegerPartition> shapes;
            for (const auto& c : cls) shapes.push_back(c.shape);
            return shapes;
        }());
        for (const auto& [mu, c] : label) {
            table.set_multiplicity(mu, Integer(static_cast<unsigned long>(clusters[c].second - clusters[c].first)));
            for (std::size_t a = 0; a < r; ++a) table.set(mu, cls[a].shape, theta[c][a]);
        }
        const auto failures = verify_rows(s, table);
        if (!failures.empty()) throw verification_error("table for k = " + std::to_string(k) + ": " + failures.front());
        if (diagnostics) *diagnostics = diag;
        return table;
    }
    throw verification_error("could not separate the eigenspaces for k = " + std::to_string(k));
}

std::vector<std::string> verify_table_dense(const CharacterTable& table)
{
    if (table.k() < 1 || table.k() > kDenseCap) throw capacity_error("dense verification is capped at k = 5");
    if (!table.complete()) return {"table is incomplete"};
    const DenseScheme s(table.k());
    if (table.classes().size() != s.classes().size() || table.modules().size() != s.classes().size())
        return {"table does not list every class and module"};
    auto failures = verify_rows(s, table);
    for (const auto& mu : table.modules())
        if (table.multiplicity(mu) != hook_dimension(mu))
            failures.push_back("multiplicity of " + mu.to_string() + " is not its dimension");
    return failures;
}

// ----------------------------------------------------------- spanning sets

SpanningSetReport spanning_set_rank_4sets(int k)
{
    if (k < 2 || k > kDenseCap) throw capacity_error("4-set spanning check runs for 2 <= k <= 5");
    const int n = 2 * k;
    const auto matchings = enumerate_matchings(k);
    std::vector<std::uint32_t> sets;  // bitmasks
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == 4) sets.push_back(m);

    kernels::SparseColumns cols;
    cols.rows = matchings.size();
    for (auto s : sets) {
        std::vector<std::uint32_t> col;
        for (std::size_t i = 0; i < matchings.size(); ++i) {
            int inside = 0;
            for (int v = 0; v < n; ++v)
                if ((s >> v & 1u) && (s >> matchings[i].partner(v) & 1u)) ++inside;
            if (inside == 4) col.push_back(static_cast<std::uint32_t>(i));
        }
        cols.columns.push_back(std::move(col));
    }

    SpanningSetReport rep;
    rep.k = k;
    rep.rows = cols.rows;
    rep.columns = cols.columns.size();
    rep.rank = exact_rank(cols).rank;
    rep.expected_rank = 1 + hook_dimension(two_row(n - 2, 2)) + (n >= 8 ? hook_dimension(two_row(n - 4, 4)) : 0);

    const auto g = kernels::parallel::gram(cols);
    const std::size_t c = sets.size();
    std::map<int, std::set<std::int64_t>> by_meet;
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) by_meet[std::popcount(sets[i] & sets[j])].insert(g[i * c + j]);
    for (auto& [meet, values] : by_meet) {
        if (values.size() != 1) rep.constant_by_meet = false;
        if ((meet == 1 || meet == 3) && (values.size() != 1 || *values.begin() != 0)) rep.odd_meets_vanish = false;
    }
    auto value = [&](int meet) { return by_meet.count(meet) ? Integer(static_cast<long>(*by_meet[meet].begin())) : Integer(0); };
    rep.diagonal = value(4);
    rep.meet_two = value(2);
    rep.disjoint = value(0);
    rep.printed_diagonal = double_factorial(n - 5);
    rep.direct_diagonal = 3 * double_factorial(n - 5);
    rep.printed_nullity = Integer(n - 1) + binomial(n, 4) - binomial(n, 3);
    rep.observed_nullity = Integer(static_cast<unsigned long>(c - rep.rank));
    rep.passed = Integer(static_cast<unsigned long>(rep.rank)) == rep.expected_rank && rep.constant_by_meet &&
                 rep.odd_meets_vanish && rep.diagonal == rep.direct_diagonal &&
                 rep.meet_two == double_factorial(n - 7) && rep.disjoint == 9 * double_factorial(n - 9);
    return rep;
}

// -------------------------------------------------------------- conjecture

ConjectureReport conjecture_check(const CharacterTable& table)
{
    ConjectureReport rep;
    rep.k = table.k();
    const int n = 2 * table.k();
    for (int l = 1; 2 * l <= n - 2 * l; ++l) {
        const IntegerPartition mu = two_row(n - 2 * l, 2 * l);
        if (std::find(table.modules().begin(), table.modules().end(), mu) == table.modules().end()) continue;
        ConjectureRow row;
        row.module = mu;
        bool first = true;
        for (const auto& cls : table.classes()) {
            auto v = table.get(mu, cls);
            if (!v) continue;
            row.row.push_back(*v);
            if (first || *v > row.max_value) {
                row.max_value = *v;
                row.argmax_class = cls;
                first = false;
            }
            if (cls != mu && dominance_ge(cls, mu)) {
                row.dominating_classes.push_back(cls);
                if (*v >= 0) row.dominating_negative = false;
            }
        }
        const auto own = table.get(mu, mu);
        row.max_at_own_class = own && *own == row.max_value;
        row.observation = "row " + mu.to_string() + ": maximum " + to_string(row.max_value) + " at class " +
                          row.argmax_class.to_string() +
                          (row.max_at_own_class ? ", which is the module's own class"
                                                : ", not at class " + mu.to_string() +
                                                      (own ? " (entry " + to_string(*own) + ")" : "")) +
                          "; entries at strictly dominating classes are " +
                          (row.dominating_negative ? "all negative" : "not all negative");
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace pmscheme
