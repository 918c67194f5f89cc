#include "stretchlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace stretchlab {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("STRETCHLAB_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 10'000'000;
}

std::optional<std::uint64_t> search_space_size(unsigned n, unsigned max_entry) {
    const std::uint64_t base = std::uint64_t{max_entry} + 1;
    std::uint64_t size = 1;
    for (unsigned i = 0; i < n * n; ++i) {
        if (size > UINT64_MAX / base) return std::nullopt;
        size *= base;
    }
    return size;
}

IntMatrix matrix_at(std::uint64_t index, unsigned n, unsigned max_entry) {
    const std::uint64_t base = std::uint64_t{max_entry} + 1;
    IntMatrix m(n);
    for (std::size_t k = std::size_t{n} * n; k-- > 0;) {
        m(k / n, k % n) = static_cast<unsigned long>(index % base);
        index /= base;
    }
    return m;
}

namespace {

bool better(const Candidate& a, const Candidate& b) {
    const auto c = compare_roots(a.root, b.root);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a.index < b.index;
}

struct Partial {
    std::uint64_t scanned = 0;
    std::uint64_t qualifying = 0;
    std::optional<Candidate> minimum;
    std::vector<Candidate> below;
};

std::optional<Candidate> qualify(const SearchConfig& cfg, std::uint64_t index) {
    IntMatrix a = matrix_at(index, cfg.n, cfg.max_entry);
    if (cfg.require_unimodular && !in_GLnZ(a)) return std::nullopt;
    if (cfg.require_primitive && !is_primitive(a).primitive) return std::nullopt;
    IntPolynomial chi = char_poly(a);
    if (cfg.require_skew_up_to_cyclotomic && !is_skew_reciprocal_up_to_cyclotomic(chi)) return std::nullopt;
    Candidate c;
    try {
        c.root = spectral_radius(a, cfg.tol);
    } catch (const PerronError&) {
        return std::nullopt;
    }
    c.index = index;
    c.normalized = power(c.root, cfg.n);
    c.matrix = std::move(a);
    c.char_poly = std::move(chi);
    return c;
}

void scan_range(const SearchConfig& cfg, std::uint64_t begin, std::uint64_t end, Partial& out) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        ++out.scanned;
        std::optional<Candidate> c = qualify(cfg, idx);
        if (!c) continue;
        ++out.qualifying;
        if (compare_power_to_silver_square(c->root, cfg.n) == std::strong_ordering::less) out.below.push_back(*c);
        if (!out.minimum || better(*c, *out.minimum)) out.minimum = std::move(c);
    }
}

}  // namespace

SearchResult run_search(const SearchConfig& cfg) {
    if (cfg.n == 0) throw std::invalid_argument("run_search: n must be positive");
    if (cfg.max_entry == 0) throw std::invalid_argument("run_search: max_entry must be at least 1");
    const auto size = search_space_size(cfg.n, cfg.max_entry);
    if (!size || *size > cfg.budget)
        throw BudgetError("run_search: search space exceeds the budget of " + std::to_string(cfg.budget));

    const std::uint64_t chunk = std::max<std::uint64_t>(cfg.chunk, 1);
    const std::uint64_t chunks = (*size + chunk - 1) / chunk;
    std::vector<Partial> partials(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t id = next.fetch_add(1);
            if (id >= chunks) return;
            scan_range(cfg, id * chunk, std::min(*size, (id + 1) * chunk), partials[id]);
        }
    };
    const unsigned threads = std::max(1u, cfg.threads);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SearchResult res;
    res.n = cfg.n;
    res.max_entry = cfg.max_entry;
    res.theorem_applies = cfg.n >= 4;
    for (Partial& p : partials) {
        res.scanned += p.scanned;
        res.qualifying += p.qualifying;
        if (p.minimum && (!res.minimum || better(*p.minimum, *res.minimum))) res.minimum = std::move(p.minimum);
        for (Candidate& c : p.below) res.below_bound.push_back(std::move(c));
    }
    return res;
}

WitnessReport witness_check(const IntMatrix& a, const mpq_class& tol) {
    WitnessReport r;
    r.matrix = a;
    r.char_poly = char_poly(a);
    r.primitivity = is_primitive(a);
    r.det = determinant(a);
    r.unimodular = r.det == 1 || r.det == -1;
    r.spectral = classify(r.char_poly);
    try {
        RootEnclosure root = spectral_radius(a, tol);
        r.normalized = power(root, static_cast<unsigned>(a.size()));
        r.versus_bound = compare_power_to_silver_square(root, static_cast<unsigned>(a.size()));
        r.root = std::move(root);
    } catch (const PerronError& e) {
        r.perron_error = e.what();
    }
    r.qualifies = r.primitivity.primitive && r.unimodular && r.spectral.skew_up_to_cyclotomic && r.root.has_value();
    return r;
}

}  // namespace stretchlab
