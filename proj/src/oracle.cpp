#include "delsarte/oracle.hpp"

#include "delsarte/grid.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <sstream>

#include <omp.h>

namespace delsarte {

std::optional<std::pair<long, long>> prime_power(long q)
{
    if (q < 2) return std::nullopt;
    long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    long k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, k);
}

namespace {

using Poly = std::vector<long>;  // low degree first

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long inverse_mod(long a, long p)
{
    for (long x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw MathError("no inverse mod p");
}

Poly poly_mod(Poly a, const Poly& b, long p)
{
    trim(a);
    const long lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const long f = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - f * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly decode(long x, long p, long k)
{
    Poly r(k);
    for (long i = 0; i < k; ++i) {
        r[i] = x % p;
        x /= p;
    }
    return r;
}

long encode(const Poly& a, long p)
{
    long x = 0;
    for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
    return x;
}

bool irreducible(const Poly& f, long p)
{
    const long deg = static_cast<long>(f.size()) - 1;
    for (long dd = 1; 2 * dd <= deg; ++dd) {
        long count = 1;
        for (long i = 0; i < dd; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly g = decode(code, p, dd);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(long order) : order_(order)
{
    const auto pk = prime_power(order);
    if (!pk) throw std::invalid_argument("field order must be a prime power");
    if (order > 256) throw std::invalid_argument("field order above 256 is not supported");
    p_ = pk->first;
    k_ = pk->second;

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else {
        for (long code = 0;; ++code) {
            Poly f = decode(code, p_, k_);
            f.push_back(1);
            if (irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
    }

    const std::size_t sz = static_cast<std::size_t>(order_ * order_);
    add_.assign(sz, 0);
    sub_.assign(sz, 0);
    mul_.assign(sz, 0);
    for (long a = 0; a < order_; ++a) {
        const Poly pa = decode(a, p_, k_);
        for (long b = 0; b < order_; ++b) {
            const Poly pb = decode(b, p_, k_);
            Poly s(k_), d(k_);
            for (long i = 0; i < k_; ++i) {
                s[i] = (pa[i] + pb[i]) % p_;
                d[i] = (pa[i] - pb[i] + p_) % p_;
            }
            Poly prod(2 * k_ - 1, 0);
            for (long i = 0; i < k_; ++i)
                for (long j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            Poly r = poly_mod(prod, modulus_, p_);
            r.resize(k_, 0);
            add_[a * order_ + b] = static_cast<int>(encode(s, p_));
            sub_[a * order_ + b] = static_cast<int>(encode(d, p_));
            mul_[a * order_ + b] = static_cast<int>(encode(r, p_));
        }
    }
}

int FiniteField::pow(int a, long e) const
{
    int r = 1;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

long matrix_rank(const FiniteField& field, std::vector<std::vector<int>> rows)
{
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const int pv = rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const int f = rows[r][col];
            if (f == 0) continue;
            // row_r <- pv * row_r - f * row_rank
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = field.sub(field.mul(pv, rows[r][c]), field.mul(f, rows[rank][c]));
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

std::size_t MatrixSchemeInstance::difference(std::size_t x, std::size_t y) const
{
    const auto& dx = digits[x];
    const auto& dy = digits[y];
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dx.size(); ++k) {
        const auto& values = kind_values[coord_kind[k]];
        const std::size_t radix = values.size();
        idx += static_cast<std::size_t>(kind_sub[coord_kind[k]][dx[k] * radix + dy[k]]) *
               static_cast<std::size_t>(weight[k]);
    }
    return idx;
}

MatrixSchemeInstance build_instance(Family family, long q, long n, long m, long cap)
{
    if (family != Family::Bilinear && family != Family::Alternating && family != Family::HermitianForms)
        throw std::invalid_argument("the oracle builds bilinear, alternating and hermitian instances only");
    if (!prime_power(q)) throw std::invalid_argument("q must be a prime power");

    MatrixSchemeInstance inst;
    inst.family = family;
    inst.q = q;
    long log_count = 0;  // exponent of q in the vertex count
    switch (family) {
    case Family::Bilinear:
        if (n < 1 || m < n) throw std::invalid_argument("bilinear needs 1 <= n <= m");
        inst.n = n;
        inst.m = m;
        inst.rows = n;
        inst.cols = m;
        log_count = n * m;
        break;
    case Family::Alternating:
        if (m < 2) throw std::invalid_argument("alternating needs m >= 2");
        inst.m = m;
        inst.n = m / 2;
        inst.rows = inst.cols = m;
        log_count = m * (m - 1) / 2;
        break;
    default:
        if (n < 1) throw std::invalid_argument("hermitian needs n >= 1");
        inst.n = n;
        inst.m = n;
        inst.rows = inst.cols = n;
        log_count = n * n;
        break;
    }
    const Rational count = power(q, log_count);
    if (count > cap)
        throw CapExceeded("instance has " + count.get_str() + " vertices, cap is " + std::to_string(cap));

    const bool herm = family == Family::HermitianForms;
    inst.field = FiniteField(herm ? q * q : q);
    const FiniteField& F = inst.field;
    const long Q = F.order();

    inst.kind_values.push_back({});
    for (int a = 0; a < Q; ++a) inst.kind_values[0].push_back(a);
    if (herm) {
        inst.kind_values.push_back({});
        for (int a = 0; a < Q; ++a)
            if (F.pow(a, q) == a) inst.kind_values[1].push_back(a);
    }
    for (const auto& values : inst.kind_values) {
        const std::size_t r = values.size();
        std::vector<int> pos(Q, -1);
        for (std::size_t i = 0; i < r; ++i) pos[values[i]] = static_cast<int>(i);
        std::vector<int> table(r * r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) table[a * r + b] = pos[F.sub(values[a], values[b])];
        inst.kind_sub.push_back(std::move(table));
    }

    // coordinate layout: (row, col) of each free entry
    std::vector<std::pair<long, long>> place;
    if (family == Family::Bilinear) {
        for (long r = 0; r < n; ++r)
            for (long c = 0; c < m; ++c) place.emplace_back(r, c);
        inst.coord_kind.assign(place.size(), 0);
    } else if (family == Family::Alternating) {
        for (long r = 0; r < m; ++r)
            for (long c = r + 1; c < m; ++c) place.emplace_back(r, c);
        inst.coord_kind.assign(place.size(), 0);
    } else {
        for (long r = 0; r < n; ++r) {
            place.emplace_back(r, r);
            inst.coord_kind.push_back(1);
        }
        for (long r = 0; r < n; ++r)
            for (long c = r + 1; c < n; ++c) {
                place.emplace_back(r, c);
                inst.coord_kind.push_back(0);
            }
    }
    long w = 1;
    for (std::size_t k = 0; k < place.size(); ++k) {
        inst.weight.push_back(w);
        w *= static_cast<long>(inst.kind_values[inst.coord_kind[k]].size());
    }
    const std::size_t total = static_cast<std::size_t>(w);

    inst.vertices.resize(total);
    inst.digits.resize(total);
    inst.vertex_class.resize(total);
    for (std::size_t v = 0; v < total; ++v) {
        std::vector<int> dig(place.size());
        std::vector<std::vector<int>> mat(inst.rows, std::vector<int>(inst.cols, 0));
        std::size_t rest = v;
        for (std::size_t k = 0; k < place.size(); ++k) {
            const auto& values = inst.kind_values[inst.coord_kind[k]];
            dig[k] = static_cast<int>(rest % values.size());
            rest /= values.size();
            const int a = values[dig[k]];
            const auto [r, c] = place[k];
            mat[r][c] = a;
            if (family == Family::Alternating) mat[c][r] = F.neg(a);
            if (herm && r != c) mat[c][r] = F.pow(a, q);
        }
        const long rk = matrix_rank(F, mat);
        inst.vertex_class[v] = static_cast<int>(family == Family::Alternating ? rk / 2 : rk);
        std::vector<int> flat;
        for (const auto& row : mat) flat.insert(flat.end(), row.begin(), row.end());
        inst.vertices[v] = std::move(flat);
        inst.digits[v] = std::move(dig);
    }
    return inst;
}

MatrixSchemeInstance build_instance(const SchemeSpec& spec, long cap)
{
    return build_instance(spec.family, spec.q, spec.n, spec.m.value_or(spec.n), cap);
}

namespace {

std::vector<std::size_t> probe_points(std::size_t size)
{
    std::vector<std::size_t> pts{0, size / 2, size - 1};
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

std::vector<Rational> empirical_valencies(const MatrixSchemeInstance& inst)
{
    std::vector<Rational> first;
    for (const std::size_t base : probe_points(inst.size())) {
        std::vector<long> counts(inst.n + 1, 0);
        for (std::size_t x = 0; x < inst.size(); ++x) ++counts[inst.distance(x, base)];
        std::vector<Rational> row(counts.begin(), counts.end());
        if (first.empty())
            first = row;
        else if (row != first)
            throw MathError("valencies depend on the base point");
    }
    return first;
}

EigenCheck empirical_eigenvalues(const MatrixSchemeInstance& inst, const SchemeSpec& spec, long i, long cap)
{
    if (static_cast<long>(inst.size()) > cap)
        throw CapExceeded("eigenvalue check needs at most " + std::to_string(cap) + " vertices");
    if (i < 0 || i > inst.n) throw std::invalid_argument("class index out of range");
    const long n = inst.n;
    const std::size_t N = inst.size();
    const auto& tab = spec.tables();

    EigenCheck out;
    for (long k = 0; k <= n; ++k) out.eigenvalues.push_back(tab.pnum[i][k]);

    // Rows of D_i E_k are translates of each other; check the probe rows entrywise.
    // N (D_i E_k)[x][y] = sum_j Q_k(j) #{z : class(z-x) = i, class(y-z) = j}
    for (const std::size_t x : probe_points(N)) {
        std::vector<std::size_t> ring;
        for (std::size_t z = 0; z < N; ++z)
            if (inst.distance(z, x) == i) ring.push_back(z);
        for (std::size_t y = 0; y < N; ++y) {
            std::vector<long> cnt(n + 1, 0);
            for (const std::size_t z : ring) ++cnt[inst.distance(y, z)];
            const int cls = inst.distance(y, x);
            for (long k = 0; k <= n; ++k) {
                Rational lhs = 0;
                for (long j = 0; j <= n; ++j) lhs += tab.qnum[k][j] * cnt[j];
                const Rational rhs = tab.pnum[i][k] * tab.qnum[k][cls];
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "D_" << i << " E_" << k << " differs at (" << x << "," << y << ")";
                    out.failure = os.str();
                    return out;
                }
            }
        }
    }
    out.all_hold = true;
    return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitGraph {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<Bits> adj;

    explicit BitGraph(std::size_t size) : n(size), words((size + 63) / 64), adj(size, Bits(words, 0)) {}
    void connect(std::size_t a, std::size_t b)
    {
        adj[a][b / 64] |= std::uint64_t{1} << (b % 64);
        adj[b][a / 64] |= std::uint64_t{1} << (a % 64);
    }
};

bool test(const Bits& b, std::size_t v) { return (b[v / 64] >> (v % 64)) & 1; }
void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
std::size_t popcount(const Bits& b)
{
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}
bool empty(const Bits& b)
{
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

struct Shared {
    std::atomic<long> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    std::uint64_t budget = 0;
};

struct Branch {
    const BitGraph& g;
    Shared& shared;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    long threshold() const
    {
        return std::max(shared.best.load(std::memory_order_relaxed), static_cast<long>(best.size()) + 1);
    }

    void record()
    {
        best = current;
        long seen = shared.best.load(std::memory_order_relaxed);
        const long sz = static_cast<long>(best.size());
        while (seen < sz && !shared.best.compare_exchange_weak(seen, sz)) {
        }
    }

    void expand(Bits cand)
    {
        if (shared.nodes.fetch_add(1, std::memory_order_relaxed) >= shared.budget) {
            shared.aborted = true;
            return;
        }
        // greedy colouring in vertex order
        std::vector<std::size_t> order;
        std::vector<long> color;
        Bits uncolored = cand;
        long k = 0;
        while (!empty(uncolored)) {
            ++k;
            Bits avail = uncolored;
            for (std::size_t w = 0; w < avail.size(); ++w) {
                while (avail[w]) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(avail[w]));
                    reset(avail, v);
                    reset(uncolored, v);
                    order.push_back(v);
                    color.push_back(k);
                    for (std::size_t u = 0; u < avail.size(); ++u) avail[u] &= ~g.adj[v][u];
                }
            }
        }
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (shared.aborted) return;
            if (static_cast<long>(current.size()) + color[idx] < threshold()) return;
            const std::size_t v = order[idx];
            current.push_back(v);
            Bits next(cand.size());
            for (std::size_t u = 0; u < next.size(); ++u) next[u] = cand[u] & g.adj[v][u];
            if (empty(next)) {
                if (current.size() > best.size()) record();
            } else {
                expand(std::move(next));
            }
            current.pop_back();
            reset(cand, v);
        }
    }
};

CliqueResult search(const BitGraph& g, bool parallel, const CliqueOptions& opts)
{
    CliqueResult res;
    if (g.n == 0) return res;

    // degree ordering, ties by index; relabel so root branches follow it
    std::vector<std::size_t> degree(g.n);
    for (std::size_t v = 0; v < g.n; ++v) degree[v] = popcount(g.adj[v]);
    std::vector<std::size_t> order(g.n);
    for (std::size_t v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    BitGraph h(g.n);
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = a + 1; b < g.n; ++b)
            if (test(g.adj[order[a]], order[b])) h.connect(a, b);

    Shared shared;
    shared.budget = opts.node_budget;
    const long roots = static_cast<long>(g.n);
    std::vector<std::vector<std::size_t>> found(g.n);

    auto run_root = [&](long r) {
        Branch br{h, shared, {}, {}};
        const std::size_t root = static_cast<std::size_t>(r);
        Bits cand = h.adj[root];
        for (std::size_t v = 0; v <= root; ++v) reset(cand, v);
        if (1 + static_cast<long>(popcount(cand)) < br.threshold()) return;
        br.current.push_back(root);
        if (empty(cand))
            br.record();
        else
            br.expand(std::move(cand));
        found[root] = std::move(br.best);
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
        for (long r = 0; r < roots; ++r) run_root(r);
    } else {
        for (long r = 0; r < roots; ++r) run_root(r);
    }

    res.complete = !shared.aborted;
    res.nodes = shared.nodes.load();
    // lowest root reaching the maximum; its witness is the first maximum clique in DFS order
    for (const auto& f : found) {
        if (static_cast<long>(f.size()) > res.size) {
            res.size = static_cast<long>(f.size());
            res.witness.clear();
            for (const std::size_t v : f) res.witness.push_back(order[v]);
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

CliqueResult code_search(const MatrixSchemeInstance& inst, long d, bool parallel, const CliqueOptions& opts)
{
    if (d < 1 || d > inst.n) throw std::invalid_argument("d must satisfy 1 <= d <= n");
    // vertex-transitive: some maximum code contains the zero matrix
    std::vector<std::size_t> nbr;
    for (std::size_t v = 1; v < inst.size(); ++v)
        if (inst.vertex_class[v] >= d) nbr.push_back(v);
    BitGraph g(nbr.size());
    for (std::size_t a = 0; a < nbr.size(); ++a)
        for (std::size_t b = a + 1; b < nbr.size(); ++b)
            if (inst.distance(nbr[a], nbr[b]) >= d) g.connect(a, b);
    CliqueResult sub = search(g, parallel, opts);
    CliqueResult res;
    res.size = sub.size + 1;
    res.complete = sub.complete;
    res.nodes = sub.nodes;
    res.witness.push_back(0);
    for (const std::size_t v : sub.witness) res.witness.push_back(nbr[v]);
    return res;
}

}  // namespace

CliqueResult max_code_bruteforce(const MatrixSchemeInstance& inst, long d, CliqueOptions opts)
{
    return code_search(inst, d, true, opts);
}

CliqueResult max_code_bruteforce_serial(const MatrixSchemeInstance& inst, long d, CliqueOptions opts)
{
    return code_search(inst, d, false, opts);
}

CliqueResult max_clique(const std::vector<std::vector<bool>>& adjacency, bool parallel, CliqueOptions opts)
{
    BitGraph g(adjacency.size());
    for (std::size_t a = 0; a < adjacency.size(); ++a)
        for (std::size_t b = a + 1; b < adjacency.size(); ++b)
            if (adjacency[a][b]) g.connect(a, b);
    return search(g, parallel, opts);
}

std::vector<Rational> inner_distribution_of(const MatrixSchemeInstance& inst, const std::vector<std::size_t>& subset)
{
    if (subset.empty()) throw std::invalid_argument("empty subset");
    std::vector<long> counts(inst.n + 1, 0);
    for (const std::size_t x : subset)
        for (const std::size_t y : subset) ++counts[inst.distance(x, y)];
    std::vector<Rational> a;
    for (const long c : counts) a.push_back(Rational(c) / static_cast<long>(subset.size()));
    return a;
}

SubsetReport random_subset_dual_check(const MatrixSchemeInstance& inst, const SchemeSpec& spec, long trials,
                                      std::uint64_t seed)
{
    const auto& tab = spec.tables();
    std::mt19937_64 rng(seed);
    const std::size_t N = inst.size();
    const std::size_t max_size = std::min<std::size_t>(N, 64);
    std::vector<std::size_t> pool(N);
    SubsetReport rep;
    for (long t = 0; t < trials; ++t) {
        for (std::size_t i = 0; i < N; ++i) pool[i] = i;
        const std::size_t size = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
        for (std::size_t i = 0; i < size; ++i) {
            const std::size_t j = std::uniform_int_distribution<std::size_t>(i, N - 1)(rng);
            std::swap(pool[i], pool[j]);
        }
        std::vector<std::size_t> subset(pool.begin(), pool.begin() + static_cast<long>(size));
        const auto a = inner_distribution_of(inst, subset);
        ++rep.trials;
        for (long k = 0; k <= inst.n; ++k) {
            Rational dual = 0;
            for (long i = 0; i <= inst.n; ++i) dual += tab.qnum[k][i] * a[i];
            if (dual < 0) {
                if (rep.failures == 0)
                    rep.first_failure = "trial " + std::to_string(t) + ": A'_" + std::to_string(k) + " = " +
                                        to_string(dual);
                ++rep.failures;
                break;
            }
        }
    }
    return rep;
}

nlohmann::json witness_json(const MatrixSchemeInstance& inst, const std::vector<std::size_t>& witness)
{
    nlohmann::json code = nlohmann::json::array();
    for (const std::size_t v : witness) code.push_back(inst.vertices[v]);
    return {{"field_order", inst.field.order()},
            {"modulus", inst.field.modulus()},
            {"rows", inst.rows},
            {"cols", inst.cols},
            {"code", code}};
}

}  // namespace delsarte
