#include <berge/campaign.hpp>

#include <berge/canonical.hpp>
#include <berge/constructions.hpp>
#include <berge/solver.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>

namespace berge {

namespace {

constexpr std::size_t stored_violations = 16;
constexpr std::uint64_t samples_per_unit = 64;

std::string hex(const std::string & bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

Rational reduced(std::int64_t numerator, std::int64_t denominator)
{
    const auto g = std::gcd(numerator, denominator);
    if (g == 0)
        return {0, 1};
    return {numerator / g, denominator / g};
}

LinearHypergraph materialise(HypergraphView h)
{
    return LinearHypergraph::validate(h.vertex_count(), std::vector<Hyperedge>(h.edges().begin(), h.edges().end()));
}

/// Per-work-unit accumulator. Units are merged in unit order, which makes the
/// final report independent of scheduling.
struct Tally {
    std::uint64_t instances = 0;
    std::uint64_t bp_free = 0;
    std::uint64_t with_path = 0;
    int max_value = -1;
    int max_shadow = -1;
    int max_hyperedges = -1;
    std::uint64_t extremal_count = 0;
    std::vector<LinearHypergraph> witnesses;
    std::vector<ExtremalClass> classes;
    std::set<std::string> class_keys;

    std::uint64_t cyclic = 0;
    std::uint64_t acyclic = 0;
    std::uint64_t cycles_checked = 0;
    std::uint64_t checked_vertices = 0;
    std::uint64_t checked_triples = 0;
    std::uint64_t checked_triple_pairs = 0;

    std::uint64_t violation_count = 0;
    std::vector<CampaignViolation> violations;

    void add_violation(CampaignViolation v)
    {
        ++violation_count;
        if (violations.size() < stored_violations)
            violations.push_back(std::move(v));
    }

    void offer(int value, HypergraphView h, const CampaignParams & params)
    {
        if (value > max_value) {
            max_value = value;
            extremal_count = 0;
            witnesses.clear();
            classes.clear();
            class_keys.clear();
        }
        if (value != max_value)
            return;
        ++extremal_count;
        if (params.dedup) {
            auto g = materialise(h);
            auto key = hex(canonical_form(g));
            if (class_keys.insert(key).second)
                classes.push_back(ExtremalClass{std::move(key), std::move(g)});
        }
        if (witnesses.size() < params.max_witnesses)
            witnesses.push_back(materialise(h));
    }

    void merge(Tally && o, const CampaignParams & params)
    {
        instances += o.instances;
        bp_free += o.bp_free;
        with_path += o.with_path;
        max_shadow = std::max(max_shadow, o.max_shadow);
        max_hyperedges = std::max(max_hyperedges, o.max_hyperedges);
        if (o.max_value > max_value) {
            max_value = o.max_value;
            extremal_count = o.extremal_count;
            witnesses = std::move(o.witnesses);
            classes = std::move(o.classes);
            class_keys = std::move(o.class_keys);
        }
        else if (o.max_value == max_value && max_value >= 0) {
            extremal_count += o.extremal_count;
            for (auto & w : o.witnesses)
                if (witnesses.size() < params.max_witnesses)
                    witnesses.push_back(std::move(w));
            for (auto & c : o.classes)
                if (class_keys.insert(c.canonical_hex).second)
                    classes.push_back(std::move(c));
        }
        cyclic += o.cyclic;
        acyclic += o.acyclic;
        cycles_checked += o.cycles_checked;
        checked_vertices += o.checked_vertices;
        checked_triples += o.checked_triples;
        checked_triple_pairs += o.checked_triple_pairs;
        violation_count += o.violation_count;
        for (auto & v : o.violations)
            if (violations.size() < stored_violations)
                violations.push_back(std::move(v));
    }
};

void require_in_cap(const CampaignParams & p)
{
    if (p.n < 0)
        throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
    if (p.exhaustive() && p.n > p.cap())
        throw Error(ErrorCode::CapExceeded,
            "exhaustive " + std::string(to_string(p.uniformity)) + "-uniform enumeration is capped at n <= " + std::to_string(p.cap()) + ", got "
                + std::to_string(p.n) + " (raise with --cap or HX_CAP_N)");
}

/// Runs `make_visitor(tally)` over every work unit, on up to params.jobs threads.
template <class MakeVisitor>
Tally run(const CampaignParams & params, MakeVisitor make_visitor)
{
    std::size_t units = 0;
    if (params.exhaustive())
        units = Enumerator(params.n, params.uniformity).unit_count();
    else
        units = static_cast<std::size_t>((params.samples + samples_per_unit - 1) / samples_per_unit);

    std::vector<Tally> tallies(units);
    std::size_t first = 0;
    if (params.exhaustive()) {
        Enumerator e(params.n, params.uniformity);
        auto visitor = make_visitor(tallies[0]);
        e.walk_unit(0, visitor);
        if (e.root_verdict() == Visit::skip_subtree)
            units = 1;
        first = 1;
    }

    std::atomic<std::size_t> next{first};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        try {
            std::optional<Enumerator> e;
            if (params.exhaustive())
                e.emplace(params.n, params.uniformity);
            for (std::size_t u; (u = next++) < units;) {
                auto visitor = make_visitor(tallies[u]);
                if (e) {
                    e->walk_unit(u, visitor);
                    continue;
                }
                const auto end = std::min(params.samples, (u + 1) * samples_per_unit);
                for (auto i = u * samples_per_unit; i < end; ++i) {
                    const auto h = random_linear_hypergraph(params.n, params.uniformity, params.seed, i);
                    const detail::ShadowIndex index(h.view());
                    int triples = 0;
                    for (const auto & edge : h.edges())
                        triples += edge.size() == 3 ? 1 : 0;
                    visitor(EnumerationNode{h.view(), index, {}, static_cast<int>(shadow_edge_count(h)), triples});
                }
            }
        }
        catch (...) {
            std::lock_guard lock(failure_lock);
            if (!failure)
                failure = std::current_exception();
            next = units;
        }
    };

    const auto threads = std::max(1U, std::min(params.jobs, static_cast<unsigned>(units)));
    if (threads == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    Tally total;
    for (auto & t : tallies)
        total.merge(std::move(t), params);
    return total;
}

VerificationReport to_report(std::string campaign, const CampaignParams & params, Tally && t)
{
    VerificationReport r;
    r.campaign = std::move(campaign);
    r.params = params;
    r.instances_checked = t.instances;
    r.bp_free_count = t.bp_free;
    r.pruned_subtrees = t.with_path;
    r.max_hyperedges = t.max_hyperedges;
    r.max_shadow_edges = t.max_shadow;
    r.extremal_count = t.extremal_count;
    r.extremal_witnesses = std::move(t.witnesses);
    r.extremal_classes = std::move(t.classes);
    r.cyclic_instances = t.cyclic;
    r.acyclic_skipped = t.acyclic;
    r.cycles_checked = t.cycles_checked;
    r.checked_vertices = t.checked_vertices;
    r.checked_triples = t.checked_triples;
    r.checked_triple_pairs = t.checked_triple_pairs;
    r.violation_count = t.violation_count;
    r.violations = std::move(t.violations);
    return r;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Bound campaign over Berge-path-free instances. `metric` picks the maximised
/// quantity; `exceeds` is the exact integer test of the bound.
template <class Metric, class Exceeds>
Tally bound_campaign(const CampaignParams & params, Metric metric, Exceeds exceeds)
{
    return run(params, [&](Tally & tally) {
        return [&params, &tally, metric, exceeds](const EnumerationNode & node) {
            ++tally.instances;
            if (detail::has_berge_path(node.hypergraph, node.index, params.k)) {
                ++tally.with_path;
                return Visit::skip_subtree;
            }
            ++tally.bp_free;
            tally.max_shadow = std::max(tally.max_shadow, node.shadow_edges);
            tally.max_hyperedges = std::max(tally.max_hyperedges, static_cast<int>(node.hypergraph.edges().size()));
            const int value = metric(node);
            if (exceeds(node)) {
                tally.add_violation(CampaignViolation{"bound_exceeded",
                    "value " + std::to_string(value) + " exceeds the bound for n=" + std::to_string(params.n) + ", k=" + std::to_string(params.k),
                    materialise(node.hypergraph), std::nullopt, std::nullopt});
            }
            tally.offer(value, node.hypergraph, params);
            return Visit::descend;
        };
    });
}

} // namespace

CampaignParams with_environment_caps(CampaignParams params)
{
    if (const char * raw = std::getenv("HX_CAP_N"); raw && *raw) {
        char * end = nullptr;
        const long value = std::strtol(raw, &end, 10);
        if (*end != '\0' || value < 0 || value > Enumerator::max_vertices)
            throw Error(ErrorCode::UsageError, "HX_CAP_N must be an integer in [0," + std::to_string(Enumerator::max_vertices) + "]");
        params.cap_mixed = params.cap_triples = static_cast<int>(value);
    }
    return params;
}

std::uint64_t enumerate(const CampaignParams & params, const std::function<Visit(const EnumerationNode &)> & visitor)
{
    require_in_cap(params);
    if (params.exhaustive()) {
        Enumerator e(params.n, params.uniformity);
        auto v = [&visitor](const EnumerationNode & node) { return visitor(node); };
        return e.walk(v);
    }
    for (std::uint64_t i = 0; i < params.samples; ++i) {
        const auto h = random_linear_hypergraph(params.n, params.uniformity, params.seed, i);
        const detail::ShadowIndex index(h.view());
        int triples = 0;
        for (const auto & edge : h.edges())
            triples += edge.size() == 3 ? 1 : 0;
        visitor(EnumerationNode{h.view(), index, {}, static_cast<int>(shadow_edge_count(h)), triples});
    }
    return params.samples;
}

VerificationReport verify_theorem_uniform(CampaignParams params)
{
    const auto start = Clock::now();
    params.uniformity = Uniformity::triples_only;
    if (params.k < 4)
        throw Error(ErrorCode::InvalidArgument, "theorem-uniform needs k >= 4");
    require_in_cap(params);
    const std::int64_t n = params.n, k = params.k;
    auto tally = bound_campaign(
        params, [](const EnumerationNode & node) { return node.triples; },
        [n, k](const EnumerationNode & node) { return 6 * static_cast<std::int64_t>(node.triples) > (k - 1) * n; });
    auto report = to_report("theorem-uniform", params, std::move(tally));
    report.bound = reduced((k - 1) * n, 6);
    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_theorem_shadow(CampaignParams params)
{
    const auto start = Clock::now();
    params.uniformity = Uniformity::mixed;
    if (params.k < 4)
        throw Error(ErrorCode::InvalidArgument, "theorem-shadow needs k >= 4");
    require_in_cap(params);
    const std::int64_t n = params.n, k = params.k;
    auto tally = bound_campaign(
        params, [](const EnumerationNode & node) { return node.shadow_edges; },
        [n, k](const EnumerationNode & node) { return 2 * static_cast<std::int64_t>(node.shadow_edges) > (k - 1) * n; });
    auto report = to_report("theorem-shadow", params, std::move(tally));
    report.bound = reduced((k - 1) * n, 2);
    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_remark(CampaignParams params)
{
    const auto start = Clock::now();
    params.uniformity = Uniformity::mixed;
    params.dedup = true;
    if (params.k < 1 || params.k > 3)
        throw Error(ErrorCode::InvalidArgument, "remark covers k in {1,2,3}");
    if (params.n < 1)
        throw Error(ErrorCode::InvalidArgument, "remark needs n >= 1");
    require_in_cap(params);
    const std::int64_t n = params.n, k = params.k;

    // Bound as numerator/denominator of the maximum shadow size.
    const Rational bound = k == 1 ? Rational{0, 1} : k == 2 ? Rational{n, 1} : reduced(3 * (n - 1), 2);
    auto tally = bound_campaign(
        params, [](const EnumerationNode & node) { return node.shadow_edges; },
        [bound](const EnumerationNode & node) { return node.shadow_edges * bound.denominator > bound.numerator; });

    auto report = to_report("remark", params, std::move(tally));
    report.bound = bound;

    auto fail = [&](std::string kind, std::string detail) {
        ++report.violation_count;
        if (report.violations.size() < stored_violations)
            report.violations.push_back(CampaignViolation{std::move(kind), std::move(detail), std::nullopt, std::nullopt, std::nullopt});
    };
    auto expect_class = [&](const LinearHypergraph & family, const std::string & name) {
        const auto expected = hex(canonical_form(family));
        const bool ok = report.extremal_classes.size() == 1 && report.extremal_classes.front().canonical_hex == expected;
        if (!ok)
            fail("equality_class", "extremal class is not exactly " + name + " (" + std::to_string(report.extremal_classes.size()) + " classes found)");
    };

    if (!params.exhaustive()) {
        report.notes.push_back("sampled run: equality characterisation not asserted");
    }
    else if (k == 2) {
        if (n % 3 == 0) {
            if (report.max_shadow_edges != n)
                fail("equality_value", "max shadow " + std::to_string(report.max_shadow_edges) + " != n");
            expect_class(matching_k2(params.n), "matching_k2(" + std::to_string(n) + ")");
        }
        else if (report.max_shadow_edges >= n) {
            fail("equality_value", "max shadow reaches n although 3 does not divide n");
        }
    }
    else if (k == 3) {
        if (n % 2 == 1) {
            if (2 * static_cast<std::int64_t>(report.max_shadow_edges) != 3 * (n - 1))
                fail("equality_value", "max shadow " + std::to_string(report.max_shadow_edges) + " != 3(n-1)/2");
            if (n >= 3)
                expect_class(star_k3(params.n), "star_k3(" + std::to_string(n) + ")");
        }
        else {
            report.notes.push_back("even n: only the bound is asserted, no equality family");
        }
    }
    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_claims(CampaignParams params)
{
    const auto start = Clock::now();
    require_in_cap(params);
    auto tally = run(params, [&params](Tally & tally) {
        return [&params, &tally](const EnumerationNode & node) {
            ++tally.instances;
            const auto longest = detail::longest_berge_cycle(node.hypergraph, node.index);
            if (!longest) {
                ++tally.acyclic;
                return Visit::descend;
            }
            ++tally.cyclic;
            std::vector<BergeCycle> cycles;
            if (params.exhaustive() && params.n <= params.all_cycles_up_to)
                cycles = detail::all_longest_berge_cycles(node.hypergraph, node.index);
            else
                cycles.push_back(*longest);

            for (const auto & cycle : cycles) {
                ++tally.cycles_checked;
                ClaimAudit audit;
                detail::audit_claims(node.hypergraph, cycle, audit);
                tally.checked_vertices += audit.checked_vertices;
                tally.checked_triples += audit.checked_triples;
                tally.checked_triple_pairs += audit.checked_triple_pairs;
                for (auto & v : audit.violations)
                    tally.add_violation(CampaignViolation{"claim", v.check + ": " + v.clause, materialise(node.hypergraph), cycle, std::move(v)});
            }
            return Visit::descend;
        };
    });
    auto report = to_report("claims", params, std::move(tally));
    report.runtime_seconds = seconds_since(start);
    return report;
}

} // namespace berge
