// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "oracles.hpp"

#include <berge/campaign.hpp>
#include <berge/cli.hpp>
#include <berge/constructions.hpp>
#include <berge/enumerator.hpp>
#include <berge/report.hpp>
#include <berge/solver.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace berge;

namespace {

unsigned workers()
{
    return std::max(1U, std::thread::hardware_concurrency());
}

CampaignParams params(int n, int k)
{
    CampaignParams p;
    p.n = n;
    p.k = k;
    p.jobs = workers();
    return p;
}

// Collects failure reasons; a criterion passes when none were recorded.
class Verdict {
public:
    void require(bool ok, const std::string & what)
    {
        if (!ok && _failures.size() < 8)
            _failures.push_back(what);
        _failed |= !ok;
    }
    bool passed() const { return !_failed; }
    std::string reasons() const
    {
        std::string out;
        for (const auto & f : _failures)
            out += (out.empty() ? "" : "; ") + f;
        return out;
    }

private:
    bool _failed = false;
    std::vector<std::string> _failures;
};

std::string nk(int n, int k)
{
    return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// Per-n list of (edges, longest path) computed entirely by the test oracles.
struct BruteTable {
    std::vector<std::pair<oracle::Edges, int>> rows;

    BruteTable(int n, bool mixed)
    {
        for (auto & edges : oracle::all_linear(n, mixed)) {
            const int len = oracle::longest_path(n, edges);
            rows.emplace_back(std::move(edges), len);
        }
    }

    int maximum(int k, const std::function<int(const oracle::Edges &)> & measure) const
    {
        int best = -1;
        for (const auto & [edges, len] : rows)
            if (len < k)
                best = std::max(best, measure(edges));
        return best;
    }
};

int shadow_size(const oracle::Edges & edges)
{
    int s = 0;
    for (const auto & e : edges)
        s += e.size() == 2 ? 1 : 3;
    return s;
}

int edge_total(const oracle::Edges & edges)
{
    return static_cast<int>(edges.size());
}

std::string uniform_bound(Verdict & v)
{
    std::uint64_t instances = 0;
    for (int n = 3; n <= 8; ++n) {
        std::optional<BruteTable> brute;
        if (n <= 6)
            brute.emplace(n, false);
        for (int k = 4; k <= 7; ++k) {
            const auto r = verify_theorem_uniform(params(n, k));
            instances += r.instances_checked;
            v.require(r.verified() && r.violation_count == 0, nk(n, k) + " reported violations");
            v.require(6 * static_cast<std::int64_t>(r.max_hyperedges) <= static_cast<std::int64_t>(k - 1) * n, nk(n, k) + " maximum exceeds bound");
            v.require(r.bound.numerator * 6 == static_cast<std::int64_t>(k - 1) * n * r.bound.denominator, nk(n, k) + " wrong bound value");
            if (brute)
                v.require(r.max_hyperedges == brute->maximum(k, edge_total), nk(n, k) + " maximum differs from brute force");
            if (n == 7 && k == 7)
                v.require(r.max_hyperedges == 7, "n=7 k=7 maximum is not attained by a Steiner triple system");
        }
    }
    return std::to_string(instances) + " instances, maxima cross-checked by brute force for n<=6";
}

std::string shadow_bound(Verdict & v)
{
    std::uint64_t instances = 0;
    for (int n = 3; n <= 7; ++n) {
        std::optional<BruteTable> brute;
        if (n <= 5)
            brute.emplace(n, true);
        for (int k = 4; k <= 7; ++k) {
            const auto r = verify_theorem_shadow(params(n, k));
            instances += r.instances_checked;
            v.require(r.verified(), nk(n, k) + " reported violations");
            v.require(2 * static_cast<std::int64_t>(r.max_shadow_edges) <= static_cast<std::int64_t>(k - 1) * n, nk(n, k) + " maximum exceeds bound");
            if (brute)
                v.require(r.max_shadow_edges == brute->maximum(k, shadow_size), nk(n, k) + " maximum differs from brute force");
        }
    }
    const auto r44 = verify_theorem_shadow(params(4, 4));
    v.require(r44.max_shadow_edges == 6, "n=4 k=4 maximum is not 6");
    return std::to_string(instances) + " instances, maxima cross-checked by brute force for n<=5";
}

std::string sharpness(Verdict & v)
{
    constexpr int k = 7;
    for (int copies : {1, 2}) {
        const auto h = extremal_disjoint_sts(k, copies);
        const int n = h.vertex_count();
        v.require(n == k * copies, "wrong vertex count");
        v.require(6 * static_cast<int>(h.edge_count()) == (k - 1) * n, "e(H) != (k-1)n/6 for copies=" + std::to_string(copies));
        v.require(oracle::is_linear(n, oracle::edges_of(h)), "not linear");
        v.require(!has_berge_path(h, k), "solver finds a Berge path of length 7, copies=" + std::to_string(copies));
        v.require(oracle::longest_path(n, oracle::edges_of(h)) == k - 1, "brute-force longest path is not 6, copies=" + std::to_string(copies));
    }
    const auto clique = two_edge_clique(4);
    const auto edges = oracle::edges_of(clique);
    v.require(shadow_size(edges) == 6 && 2 * 6 == (4 - 1) * 4, "two_edge_clique(4) shadow is not 6");
    v.require(static_cast<int>(shadow_edge_count(clique)) == 6, "library shadow count is not 6");
    v.require(!has_berge_path(clique, 4), "two_edge_clique(4) has a Berge path of length 4");
    v.require(oracle::longest_path(4, edges) == 3, "brute-force longest path of two_edge_clique(4) is not 3");
    return "e(H)=7 and 14 at n=7,14 with longest path 6; K4 shadow 6 with longest path 3";
}

std::string remark(Verdict & v)
{
    std::ostringstream summary;
    for (int n = 1; n <= 7; ++n) {
        std::optional<BruteTable> brute;
        if (n <= 5)
            brute.emplace(n, true);
        for (int k = 1; k <= 3; ++k) {
            const auto r = verify_remark(params(n, k));
            const int max = r.max_shadow_edges;
            v.require(r.verified(), nk(n, k) + " reported violations");
            if (brute)
                v.require(max == brute->maximum(k, shadow_size), nk(n, k) + " maximum differs from brute force");
            auto single_class_like = [&](const LinearHypergraph & family, const std::string & name) {
                v.require(r.extremal_classes.size() == 1, nk(n, k) + " has " + std::to_string(r.extremal_classes.size()) + " extremal classes");
                for (const auto & c : r.extremal_classes) {
                    std::string edges;
                    for (const auto & e : oracle::edges_of(c.representative)) {
                        edges += edges.empty() ? "{" : ",{";
                        for (std::size_t i = 0; i < e.size(); ++i)
                            edges += (i ? "," : "") + std::to_string(e[i]);
                        edges += "}";
                    }
                    v.require(oracle::isomorphic(n, oracle::edges_of(c.representative), oracle::edges_of(family)),
                        nk(n, k) + " extremal class " + edges + " is not " + name);
                }
            };
            if (k == 1) {
                v.require(max == 0, nk(n, k) + " maximum is not 0");
            }
            else if (k == 2) {
                if (n % 3 == 0) {
                    v.require(max == n, nk(n, k) + " maximum is not n");
                    single_class_like(matching_k2(n), "matching_k2");
                }
                else {
                    v.require(max < n, nk(n, k) + " maximum reaches n");
                }
            }
            else {
                v.require(2 * max <= 3 * (n - 1), nk(n, k) + " maximum exceeds 3(n-1)/2");
                if (n % 2 == 1 && n >= 3) {
                    v.require(2 * max == 3 * (n - 1), nk(n, k) + " maximum is not 3(n-1)/2");
                    single_class_like(star_k3(n), "star_k3");
                }
            }
            summary << (n == 1 && k == 1 ? "" : " ") << n << "/" << k << ":" << max;
        }
    }
    return "maxima n/k:value" + summary.str();
}

std::string oracle_equivalence(Verdict & v)
{
    std::uint64_t exhaustive = 0;
    for (int n = 0; n <= 6; ++n) {
        Enumerator e(n, Uniformity::mixed);
        auto visit = [&](const EnumerationNode & node) {
            oracle::Edges edges;
            for (const auto & h : node.hypergraph.edges())
                edges.emplace_back(h.begin(), h.end());
            const auto h = LinearHypergraph::validate(n, edges);
            const int fast = static_cast<int>(longest_berge_path(h).length());
            v.require(fast == oracle_longest_path(h), "disagreement at n=" + std::to_string(n) + ": " + std::to_string(fast));
            if (n <= 5)
                v.require(fast == oracle::longest_path(n, edges), "brute-force disagreement at n=" + std::to_string(n));
            ++exhaustive;
            return Visit::descend;
        };
        e.walk(visit);
    }
    constexpr std::uint64_t samples = 2100;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const int n = 1 + static_cast<int>(i % 7);
        const auto h = random_linear_hypergraph(n, i % 3 == 0 ? Uniformity::triples_only : Uniformity::mixed, default_seed, i);
        const auto p = longest_berge_path(h);
        v.require(is_valid_berge_path(h, p), "invalid witness on random instance " + std::to_string(i));
        v.require(static_cast<int>(p.length()) == oracle_longest_path(h), "disagreement on random instance " + std::to_string(i));
    }
    return std::to_string(exhaustive) + " exhaustive instances (n<=6), " + std::to_string(samples) + " random (n<=7), 0 disagreements";
}

std::string claims(Verdict & v)
{
    std::uint64_t instances = 0;
    std::uint64_t vertices = 0;
    std::uint64_t triples = 0;
    std::uint64_t pairs = 0;
    auto absorb = [&](const VerificationReport & r, const std::string & label) {
        v.require(r.verified() && r.violations.empty(), label + ": " + std::to_string(r.violation_count) + " violations");
        v.require(r.cyclic_instances + r.acyclic_skipped == r.instances_checked, label + ": instance counts do not add up");
        instances += r.instances_checked;
        vertices += r.checked_vertices;
        triples += r.checked_triples;
        pairs += r.checked_triple_pairs;
    };
    for (int n = 1; n <= 7; ++n)
        absorb(verify_claims(params(n, 0)), "exhaustive n=" + std::to_string(n));
    auto triples_only = params(8, 0);
    triples_only.uniformity = Uniformity::triples_only;
    absorb(verify_claims(triples_only), "exhaustive 3-uniform n=8");
    for (int n = 8; n <= 12; ++n)
        for (auto u : {Uniformity::mixed, Uniformity::triples_only}) {
            auto p = params(n, 0);
            p.samples = 10000;
            p.uniformity = u;
            absorb(verify_claims(p), "random n=" + std::to_string(n) + " uniformity " + std::string(to_string(u)));
        }
    return std::to_string(instances) + " instances; " + std::to_string(vertices) + " off-cycle vertices, " + std::to_string(triples) + " triples, "
        + std::to_string(pairs) + " triple pairs checked; 0 violations";
}

std::string steiner(Verdict & v)
{
    auto check = [&](const LinearHypergraph & h, int n, const std::string & name) {
        const auto edges = oracle::edges_of(h);
        v.require(h.vertex_count() == n, name + " wrong vertex count");
        v.require(static_cast<int>(edges.size()) * 6 == n * (n - 1), name + " wrong triple count");
        for (const auto & e : edges)
            v.require(e.size() == 3, name + " has a non-triple");
        v.require(oracle::every_pair_once(n, edges), name + " does not cover every pair exactly once");
    };
    for (int n : {3, 9, 15, 21})
        check(sts_bose(n), n, "sts_bose(" + std::to_string(n) + ")");
    for (int n : {7, 13, 19})
        check(sts_skolem(n), n, "sts_skolem(" + std::to_string(n) + ")");
    return "Bose n=3,9,15,21 and Skolem n=7,13,19";
}

std::string determinism(Verdict & v)
{
    const std::vector<std::vector<std::string>> runs{
        {"verify", "theorem-uniform", "--n", "7", "--k", "5"},
        {"verify", "theorem-shadow", "--n", "6", "--k", "5", "--dedup"},
        {"verify", "remark", "--n", "7", "--k", "3"},
        {"verify", "claims", "--n", "6"},
        {"verify", "claims", "--n", "12", "--samples", "3000", "--seed", "99"},
        {"verify", "theorem-uniform", "--n", "10", "--k", "6", "--samples", "3000"},
    };
    auto invoke = [&](std::vector<std::string> args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::main(args, out, err);
        v.require(code == 0, "exit code " + std::to_string(code) + " for " + args[1]);
        const auto report = json::parse(out.str());
        validate_envelope(report);
        return report;
    };
    for (auto args : runs) {
        args.insert(args.end(), {"--jobs", std::to_string(workers())});
        const auto first = invoke(args);
        const auto second = invoke(args);
        v.require(without_timing(first) == without_timing(second), "repeat differs for " + args[1]);
        auto single = args;
        single.back() = "1";
        v.require(invoke(single)["result"] == first["result"], "result depends on worker count for " + args[1]);
    }
    return std::to_string(runs.size()) + " verify commands repeated and rerun with one worker";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<std::string(Verdict &)>>> criteria{
        {"uniform bound 6e(H) <= (k-1)n for 4<=k<=7, 3<=n<=8", uniform_bound},
        {"shadow bound 2e(shadow) <= (k-1)n for 4<=k<=7, 3<=n<=7", shadow_bound},
        {"sharpness of disjoint STS(7) and the 2-edge K4", sharpness},
        {"small-k maxima and equality classes for n<=7", remark},
        {"solver agrees with the matching oracle", oracle_equivalence},
        {"cycle claims hold on exhaustive and random instances", claims},
        {"Steiner triple system generators", steiner},
        {"verify reports are deterministic modulo timing", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict verdict;
        std::string detail;
        try {
            detail = criteria[i].second(verdict);
        }
        catch (const std::exception & e) {
            verdict.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.precision(3);
        line << (verdict.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " | "
             << (verdict.passed() ? detail : verdict.reasons()) << " | " << std::fixed << seconds << "s";
        std::cout << line.str() << std::endl;
        failures += !verdict.passed();
    }
    return failures == 0 ? 0 : 1;
}
