#include "ramsey/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ramsey/density.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Aliases between equivalent pattern descriptors, e.g. C4 = K_{2,2}; table
// lookups and rule dispatch consider every view of the query pattern.
std::pair<std::string, std::vector<int>> canonical_key(std::string kind, std::vector<int> params) {
    if (kind == "biclique") {
        if (params.size() == 2 && params[0] > params[1]) std::swap(params[0], params[1]);
        if (params == std::vector<int>{2, 2}) return {"cycle", {4}};
        if (params == std::vector<int>{1, 1}) return {"path", {1}};
        if (params == std::vector<int>{1, 2}) return {"path", {2}};
    }
    if (kind == "cycle" && params == std::vector<int>{3}) return {"clique", {3}};
    return {std::move(kind), std::move(params)};
}

} // namespace

void RamseyTable::add(const RamseyTableEntry& e) {
    if (e.lower < 2) throw ParseError("table: Ramsey numbers are at least 2");
    if (e.upper && *e.upper < e.lower)
        throw ParseError("table: contradiction, lower " + std::to_string(e.lower) + " > upper " +
                         std::to_string(*e.upper));
    if (e.r < 1) throw ParseError("table: r must be >= 1");
    auto key = canonical_key(e.kind, e.params);
    auto& by_r = index_[key];
    auto it = by_r.find(e.r);
    if (it != by_r.end()) {
        const auto& prev = entries_[it->second];
        if (prev.lower != e.lower || prev.upper != e.upper)
            throw ParseError("table: duplicate entries disagree for " + e.kind);
        return;
    }
    by_r[e.r] = entries_.size();
    RamseyTableEntry stored = e;
    stored.kind = key.first;
    stored.params = key.second;
    entries_.push_back(std::move(stored));
}

std::optional<long long> RamseyTable::known_lower(const std::string& kind,
                                                  const std::vector<int>& params, int r) const {
    auto key = canonical_key(kind, params);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    auto jt = it->second.find(r);
    if (jt == it->second.end()) return std::nullopt;
    return entries_[jt->second].lower;
}

std::optional<long long> RamseyTable::known_upper(const std::string& kind,
                                                  const std::vector<int>& params, int r) const {
    auto key = canonical_key(kind, params);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    auto jt = it->second.find(r);
    if (jt == it->second.end()) return std::nullopt;
    return entries_[jt->second].upper;
}

RamseyTable load_table(std::istream& in) {
    RamseyTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto fail = [&](const std::string& msg) {
            throw ParseError("table line " + std::to_string(lineno) + ": " + msg);
        };
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t bar = line.find('|', pos);
            fields.push_back(line.substr(pos, bar == std::string::npos ? bar : bar - pos));
            if (bar == std::string::npos) break;
            pos = bar + 1;
        }
        if (fields.size() != 4) fail("expected 4 '|'-separated fields");
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            std::size_t b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        RamseyTableEntry e;
        {
            std::istringstream ss(trim(fields[0]));
            ss >> e.kind;
            int x;
            while (ss >> x) e.params.push_back(x);
            if (e.kind.empty()) fail("missing pattern kind");
        }
        {
            std::string rf = trim(fields[1]);
            if (rf.rfind("r=", 0) != 0) fail("expected r=N");
            try {
                e.r = std::stoi(rf.substr(2));
            } catch (const std::exception&) {
                fail("bad r value");
            }
        }
        {
            std::istringstream ss(trim(fields[2]));
            std::string lo, up;
            if (!(ss >> lo >> up)) fail("expected lower and upper");
            try {
                e.lower = std::stoll(lo);
                if (up != "?") e.upper = std::stoll(up);
            } catch (const std::exception&) {
                fail("bad bound value");
            }
        }
        e.source = trim(fields[3]);
        if (!e.source.empty() && e.source.front() == '"' && e.source.back() == '"' &&
            e.source.size() >= 2)
            e.source = e.source.substr(1, e.source.size() - 2);
        try {
            table.add(e);
        } catch (const ParseError& ex) {
            fail(ex.what());
        }
    }
    return table;
}

RamseyTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table '" + path + "'");
    return load_table(in);
}

namespace {

struct View {
    std::string kind;
    int a = 0, b = 0;
};

// All equivalent descriptors of f (e.g. cycle 4 is also biclique 2 2).
std::vector<View> views_of(const PatternSpec& f) {
    std::vector<View> out;
    switch (f.kind) {
        case PatternSpec::Kind::Path: out.push_back({"path", f.a, 0}); break;
        case PatternSpec::Kind::Cycle: out.push_back({"cycle", f.a, 0}); break;
        case PatternSpec::Kind::Clique: out.push_back({"clique", f.a, 0}); break;
        case PatternSpec::Kind::Biclique:
            out.push_back({"biclique", std::min(f.a, f.b), std::max(f.a, f.b)});
            break;
        case PatternSpec::Kind::Explicit: out.push_back({"explicit", 0, 0}); break;
    }
    View v = out[0];
    if (v.kind == "cycle" && v.a == 4) out.push_back({"biclique", 2, 2});
    if (v.kind == "cycle" && v.a == 3) out.push_back({"clique", 3, 0});
    if (v.kind == "biclique" && v.a == 2 && v.b == 2) out.push_back({"cycle", 4, 0});
    if (v.kind == "biclique" && v.a == 1 && v.b == 1) out.push_back({"path", 1, 0});
    if (v.kind == "biclique" && v.a == 1 && v.b == 2) out.push_back({"path", 2, 0});
    if (v.kind == "path" && v.a == 1) out.push_back({"biclique", 1, 1});
    if (v.kind == "path" && v.a == 2) out.push_back({"biclique", 1, 2});
    if (v.kind == "clique" && v.a == 3) out.push_back({"cycle", 3, 0});
    return out;
}

std::vector<int> table_params(const View& v) {
    if (v.kind == "biclique") return {v.a, v.b};
    return {v.a};
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Structural parameters of f, analytic for the named kinds so that huge
// named patterns never get materialized.
struct FParams {
    int chi = 0, omega = 0, degeneracy = 0;
    std::optional<Rational> m2; // unset when v(F) < 3
};

FParams f_params(const PatternSpec& f) {
    FParams p;
    switch (f.kind) {
        case PatternSpec::Kind::Path:
            p.chi = 2;
            p.omega = 2;
            p.degeneracy = 1;
            if (f.a >= 2) p.m2 = Rational(1);
            break;
        case PatternSpec::Kind::Cycle:
            p.chi = f.a % 2 == 0 ? 2 : 3;
            p.omega = f.a == 3 ? 3 : 2;
            p.degeneracy = 2;
            p.m2 = Rational(f.a - 1, f.a - 2);
            break;
        case PatternSpec::Kind::Clique:
            p.chi = f.a;
            p.omega = f.a;
            p.degeneracy = f.a - 1;
            if (f.a >= 3) p.m2 = Rational(f.a * (f.a - 1) / 2 - 1, f.a - 2);
            break;
        case PatternSpec::Kind::Biclique:
            p.chi = 2;
            p.omega = 2;
            p.degeneracy = std::min(f.a, f.b);
            if (f.a + f.b >= 3)
                p.m2 = Rational(std::int64_t{f.a} * f.b - 1, f.a + f.b - 2);
            break;
        case PatternSpec::Kind::Explicit: {
            const Graph& g = f.graph;
            p.chi = chromatic_number(g);
            p.omega = clique_number(g);
            p.degeneracy = degeneracy_order(g).degeneracy;
            if (g.n() >= 3) p.m2 = m2_density(g).value;
            break;
        }
    }
    return p;
}

// min over the bipartition sides of the maximum degree, or nullopt when f is
// not bipartite.
std::optional<int> bipartite_d(const PatternSpec& f) {
    switch (f.kind) {
        case PatternSpec::Kind::Path: return f.a >= 3 ? 2 : 1;
        case PatternSpec::Kind::Cycle:
            if (f.a % 2 != 0) return std::nullopt;
            return 2;
        case PatternSpec::Kind::Clique:
            if (f.a > 2) return std::nullopt;
            return 1;
        case PatternSpec::Kind::Biclique: return std::min(f.a, f.b);
        case PatternSpec::Kind::Explicit: {
            std::vector<int> sa, sb;
            if (!find_bipartition(f.graph, sa, sb)) return std::nullopt;
            return d_bipartite(f.graph, sa, sb);
        }
    }
    return std::nullopt;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Lower bound on R(K_{a,b}, r): floor of the 2(a+b)-th root of
// (2*pi)^2 * ab * ((a+b)/e^2)^(2(a+b)) * r^(2(ab-1)), with pi rounded down
// and e^2 rounded up so the result stays a valid lower bound.
std::optional<long long> biclique_r_fallback(int a, int b, int r) {
    const Rational pi_low(314159, 100000), e2_up(739, 100);
    int d = 2 * (a + b);
    Rational w = 4 * pi_low * pi_low * a * b;
    Rational f = Rational(a + b) / e2_up;
    for (int i = 0; i < d; ++i) w *= f;
    for (int i = 0; i < 2 * (a * b - 1); ++i) w *= r;
    long long t = 1;
    while (Rational(ipow(Int(t + 1), static_cast<unsigned>(d))) <= w) ++t;
    if (t < 3) return std::nullopt;
    return t;
}

Rational star_value(int rays, int r) {
    std::int64_t base = std::int64_t{r} * (rays - 1);
    return Rational(base + 1, base + 2);
}

// epsilon = (x-1)/max{R_low, 2x+1}, asserting the paper-guaranteed bound.
Rational epsilon_of(const Rational& x_minus_1, std::optional<long long> r_low, long long floor2x1) {
    long long denom = floor2x1;
    if (r_low) denom = std::max(denom, *r_low);
    Rational eps = x_minus_1 / denom;
    if (eps >= Rational(1, 2)) throw std::logic_error("bounds: epsilon >= 1/2");
    return eps;
}

std::optional<long long> best_table_lower(const std::vector<View>& views, const RamseyTable& t,
                                          int r) {
    std::optional<long long> best;
    for (const auto& v : views) {
        if (v.kind == "explicit") continue;
        if (auto x = t.known_lower(v.kind, table_params(v), r))
            if (!best || *x > *best) best = x;
    }
    return best;
}

std::optional<long long> best_table_upper(const std::vector<View>& views, const RamseyTable& t,
                                          int r) {
    std::optional<long long> best;
    for (const auto& v : views) {
        if (v.kind == "explicit") continue;
        if (auto x = t.known_upper(v.kind, table_params(v), r))
            if (!best || *x < *best) best = x;
    }
    return best;
}

} // namespace

std::vector<BoundItem> lower_bounds(const PatternSpec& f, int r, const RamseyTable& table) {
    if (r < 2) throw std::invalid_argument("lower_bounds: r must be >= 2");
    std::vector<BoundItem> out;
    auto views = views_of(f);
    auto p = f_params(f);
    out.push_back({Rational(ipow(Int(p.chi - 1), static_cast<unsigned>(r)), 2), false, "chromatic"});
    if (p.m2 && (*p.m2 >= 3 || (r == 2 && *p.m2 > 1)))
        out.push_back({Rational(r) / 2 * *p.m2, false, "two-density"});
    out.push_back(
        {Rational(std::int64_t{r} * (p.degeneracy - 1) + 1, 2), false, "degenerate-coloring"});
    if (p.omega >= 3)
        if (auto rl = table.known_lower("clique", {p.omega}, r))
            out.push_back({Rational(*rl - 1, 2), false, "clique-number"});
    for (const auto& v : views) {
        if (v.kind == "biclique" && v.a >= 2) {
            long long x = std::int64_t{r} * (v.a - 1);
            auto rl = best_table_lower(views, table, r);
            if (auto fb = biclique_r_fallback(v.a, v.b, r))
                if (!rl || *fb > *rl) rl = fb;
            Rational eps = epsilon_of(Rational(x - 1), rl, 2 * x + 1);
            out.push_back({Rational(x) - eps, false, "biclique-family"});
        }
        if (v.kind == "biclique" && v.a == 1)
            out.push_back({star_value(v.b, r), false, "star-exact"});
        if (v.kind == "cycle" && v.a % 2 == 0) {
            auto rl = best_table_lower(views, table, r);
            long long fb = std::int64_t{r - 1} * (v.a - 2) + 2;
            if (!rl || fb > *rl) rl = fb;
            Rational eps = epsilon_of(Rational(r - 1), rl, 2 * std::int64_t{r} + 1);
            out.push_back({Rational(r) - eps, false, "even-cycle-family"});
        }
        if (v.kind == "cycle" && v.a % 2 == 1)
            out.push_back({Rational(ipow(Int(2), static_cast<unsigned>(r - 1))), false, "odd-cycle-family"});
        if (v.kind == "path" && v.a >= 3) {
            long long x = (r + 1) / 2;
            int third = v.a / 3;
            auto rl = table.known_lower("path", {third}, r);
            Rational eps = epsilon_of(Rational(x - 1), rl, 2 * x + 1);
            out.push_back({Rational(x) - eps, false, "path-family"});
        }
    }
    return out;
}

std::vector<BoundItem> upper_bounds(const PatternSpec& f, int r, const RamseyTable& table) {
    if (r < 2) throw std::invalid_argument("upper_bounds: r must be >= 2");
    std::vector<BoundItem> out;
    auto views = views_of(f);
    if (auto d = bipartite_d(f))
        out.push_back({Rational(std::int64_t{r} * (*d - 1) + 1), true, "bipartite-degree"});
    auto ru = best_table_upper(views, table, r);
    if (!ru && f.kind == PatternSpec::Kind::Cycle && factorial(r + 2) < (1LL << 50))
        ru = factorial(r + 2) * f.a; // factorial cycle fallback
    if (ru) out.push_back({Rational(*ru - 1, 2), false, "complete-graph"});
    for (const auto& v : views) {
        if (v.kind == "biclique" && v.a >= 2) {
            long long pp = std::int64_t{r} * (v.a - 1) + 1;
            long long qq = std::int64_t{r} * (v.b - 1) * binom(pp, v.a) + 1;
            out.push_back({Rational(pp * qq, pp + qq), false, "biclique-witness"});
        }
        if (v.kind == "biclique" && v.a == 1)
            out.push_back({star_value(v.b, r), false, "star-exact"});
        if (v.kind == "path" && v.a >= 3) {
            int half = (v.a + 1) / 2;
            long long num = std::int64_t{half - 1} * r + 1;
            out.push_back({Rational((num + half - 1) / half), true, "path-family"});
        }
    }
    return out;
}

BoundInterval best_interval(const PatternSpec& f, int r, const RamseyTable& table) {
    auto lows = lower_bounds(f, r, table);
    auto ups = upper_bounds(f, r, table);
    BoundInterval out;
    out.lower = Rational(0);
    out.lower_source = "trivial";
    for (const auto& b : lows)
        if (b.value > out.lower) {
            out.lower = b.value;
            out.lower_strict = b.strict;
            out.lower_source = b.source;
        }
    for (const auto& b : ups)
        if (!out.upper || b.value < *out.upper ||
            (b.value == *out.upper && b.strict && !out.upper_strict)) {
            out.upper = b.value;
            out.upper_strict = b.strict;
            out.upper_source = b.source;
        }
    if (out.upper &&
        (out.lower > *out.upper ||
         (out.lower == *out.upper && (out.lower_strict || out.upper_strict))))
        throw std::logic_error("best_interval: bounds crossed, table or rule bug");
    return out;
}

} // namespace ramsey
