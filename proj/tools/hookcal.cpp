// hookcal: exact verification of the hook length formula for binary trees
// and the labeled/rooted tree identities connected to it. Every check
// computes both sides by independent methods in exact arithmetic and exits
// nonzero on any mismatch, so the binary slots directly into CI.
//
//   hookcal verify      run identity checks for n = 1..nmax
//   hookcal table       print {n, Catalan_n, T_n, R_n, F_n, (n+1)^(n-1)}
//   hookcal bijection   exhaustively roundtrip the edge-cut bijection
//   hookcal split-check check the splitting relation for all (n, k)
//
// Exit status: 0 all checks verified, 1 any mismatch, 2 usage or capacity
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <hookcal/hookcal.hpp>

namespace {

using namespace hookcal;

enum class Method { closed_form, enumeration, recurrence };

struct VerifyJob {
    IdentityId id;
    Method method;
    int n;
};

struct CliConfig {
    int nmax = 0;
    std::string mode = "all";
    std::string output = "text";
    int parallelism = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::vector<std::string> identities;
    int sample = 0;  // bijection only
};

const std::vector<std::pair<IdentityId, std::vector<Method>>> kIdentityMethods =
    {
        {IdentityId::eq1, {Method::enumeration}},
        {IdentityId::eq2, {Method::enumeration}},
        {IdentityId::eq3_vs_closed_form, {Method::recurrence}},
        {IdentityId::split_relation, {Method::closed_form}},
        {IdentityId::eq4, {Method::closed_form, Method::enumeration}},
        {IdentityId::eq5, {Method::closed_form}},
        {IdentityId::f_equals_rooted_count, {Method::recurrence}},
};

bool mode_admits(const std::string& mode, Method m) {
    if (mode == "all") return true;
    if (mode == "enumerate") return m == Method::enumeration;
    if (mode == "recurrence") return m == Method::recurrence;
    if (mode == "closed-form") return m == Method::closed_form;
    return false;
}

std::vector<VerifyJob> plan_verify_jobs(const CliConfig& cfg) {
    std::vector<IdentityId> selected;
    if (cfg.identities.empty()) {
        for (const auto& [id, methods] : kIdentityMethods) {
            selected.push_back(id);
        }
    } else {
        const std::map<std::string, IdentityId> by_name = {
            {"eq1", IdentityId::eq1},
            {"eq2", IdentityId::eq2},
            {"eq3", IdentityId::eq3_vs_closed_form},
            {"split", IdentityId::split_relation},
            {"eq4", IdentityId::eq4},
            {"eq5", IdentityId::eq5},
            {"link", IdentityId::f_equals_rooted_count},
        };
        for (const auto& name : cfg.identities) {
            selected.push_back(by_name.at(name));
        }
    }

    // Jobs are generated in output order: identity, then n, then method.
    std::vector<VerifyJob> jobs;
    for (const auto& [id, methods] : kIdentityMethods) {
        if (std::find(selected.begin(), selected.end(), id) == selected.end()) {
            continue;
        }
        for (int n = 1; n <= cfg.nmax; ++n) {
            for (const Method m : methods) {
                if (mode_admits(cfg.mode, m)) {
                    jobs.push_back({id, m, n});
                }
            }
        }
    }
    return jobs;
}

// All-or-nothing: refuse the whole run before any job starts.
void check_capacity(const std::vector<VerifyJob>& jobs, std::uint64_t cap) {
    std::vector<BigInt> catalan_table;
    for (const auto& job : jobs) {
        if (job.method != Method::enumeration) {
            continue;
        }
        if (job.id == IdentityId::eq1 || job.id == IdentityId::eq2) {
            if (catalan_table.empty()) {
                int max_n = 0;
                for (const auto& j : jobs) max_n = std::max(max_n, j.n);
                catalan_table = catalan_numbers(max_n);
            }
            require_capacity(catalan_table[static_cast<std::size_t>(job.n)],
                             cap, "Catalan(" + std::to_string(job.n) + ")");
        } else if (job.id == IdentityId::eq4) {
            require_capacity(BigInt(2 * job.n) * labeled_tree_count(job.n + 1),
                             cap,
                             "2n * T_(n+1) with n = " + std::to_string(job.n));
        }
    }
}

VerificationReport run_job(const VerifyJob& job, const CliConfig& cfg,
                           const std::vector<Rational>& f_table) {
    const VerifyOptions opts{cfg.cap, 1};
    switch (job.id) {
        case IdentityId::eq1:
            return verify_eq1(job.n, opts);
        case IdentityId::eq2:
            return verify_eq2(job.n, opts);
        case IdentityId::eq3_vs_closed_form:
            return verify_eq3(job.n, f_table);
        case IdentityId::split_relation:
            return verify_split_all(job.n);
        case IdentityId::eq4:
            return job.method == Method::closed_form
                       ? verify_eq4_closed(job.n)
                       : verify_eq4_exhaustive(job.n, cfg.cap);
        case IdentityId::eq5:
            return verify_eq5(job.n);
        case IdentityId::f_equals_rooted_count:
            return verify_link(job.n, f_table);
    }
    throw std::logic_error("run_job: unknown identity");
}

void emit_reports(const std::vector<VerificationReport>& reports,
                  const std::string& output) {
    if (output == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (output == "csv") {
        std::cout << report_csv_header() << "\n";
        for (const auto& r : reports) {
            std::cout << to_csv_row(r) << "\n";
        }
    } else {
        for (const auto& r : reports) {
            std::cout << to_text_line(r) << "\n";
        }
        std::size_t ok = 0;
        for (const auto& r : reports) {
            ok += r.verified ? 1 : 0;
        }
        std::cout << ok << "/" << reports.size() << " checks verified\n";
    }
}

int exit_status(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (!r.verified) return 1;
    }
    return 0;
}

int cmd_verify(const CliConfig& cfg) {
    const auto jobs = plan_verify_jobs(cfg);
    if (jobs.empty()) {
        std::cerr << "error: no checks selected (identity/mode combination is "
                     "empty)\n";
        return 2;
    }
    check_capacity(jobs, cfg.cap);

    std::vector<Rational> f_table;
    for (const auto& job : jobs) {
        if (job.id == IdentityId::eq3_vs_closed_form ||
            job.id == IdentityId::f_equals_rooted_count) {
            f_table = compute_F(cfg.nmax);
            break;
        }
    }

    std::vector<VerificationReport> reports(jobs.size());
    auto run_one = [&](std::size_t i) {
        try {
            reports[i] = run_job(jobs[i], cfg, f_table);
        } catch (const std::exception& e) {
            // Capacity was pre-checked, so this is an internal failure;
            // surface it as an unverified report instead of tearing down
            // the worker.
            reports[i] = VerificationReport::make(
                jobs[i].id, jobs[i].n, Rational(0), Rational(1),
                "internal error", e.what(), 0, 0);
        }
    };
    const int workers =
        std::max(1, std::min<int>(cfg.parallelism,
                                  static_cast<int>(jobs.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            run_one(i);
        }
    } else {
        // Independent (identity, n) jobs across a fixed-size pool; reports
        // land in job order regardless of completion order.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < jobs.size();
                     i = next.fetch_add(1)) {
                    run_one(i);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    std::stable_sort(reports.begin(), reports.end(), report_order_less);
    emit_reports(reports, cfg.output);
    return exit_status(reports);
}

std::string cell(const std::optional<BigInt>& v) {
    return v ? v->str() : "-";
}

int cmd_table(const CliConfig& cfg) {
    const auto table = build_sequence_table(cfg.nmax);

    struct Row {
        int n;
        std::string catalan, labeled, rooted, f, eq1_lhs;
    };
    std::vector<Row> rows;
    for (int n = 0; n <= cfg.nmax; ++n) {
        const auto i = static_cast<std::size_t>(n);
        rows.push_back({n, table.catalan[i].str(), cell(table.labeled[i]),
                        cell(table.rooted[i]), to_fraction_string(table.f[i]),
                        n >= 1 ? hook_identity_closed_form(n).str() : "-"});
    }

    if (cfg.output == "json") {
        auto cell_json = [](const std::string& v) {
            return v == "-" ? nlohmann::ordered_json()
                            : nlohmann::ordered_json(v);
        };
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row{{"n", r.n}, {"catalan", r.catalan}};
            row["labeled_trees"] = cell_json(r.labeled);
            row["rooted_trees"] = cell_json(r.rooted);
            row["f"] = r.f;
            row["eq1_closed_form"] = cell_json(r.eq1_lhs);
            arr.push_back(row);
        }
        std::cout << arr.dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << "n,catalan,T,R,F,(n+1)^(n-1)\n";
        for (const auto& r : rows) {
            std::cout << r.n << ',' << r.catalan << ','
                      << (r.labeled == "-" ? "" : r.labeled) << ','
                      << (r.rooted == "-" ? "" : r.rooted) << ',' << r.f << ','
                      << (r.eq1_lhs == "-" ? "" : r.eq1_lhs) << "\n";
        }
    } else {
        const std::vector<std::string> headers = {"n",  "catalan",     "T",
                                                  "R",  "F",           "(n+1)^(n-1)"};
        std::vector<std::size_t> width(headers.size());
        for (std::size_t c = 0; c < headers.size(); ++c) {
            width[c] = headers[c].size();
        }
        auto cells = [](const Row& r) {
            return std::vector<std::string>{std::to_string(r.n), r.catalan,
                                            r.labeled, r.rooted, r.f,
                                            r.eq1_lhs};
        };
        for (const auto& r : rows) {
            const auto cs = cells(r);
            for (std::size_t c = 0; c < cs.size(); ++c) {
                width[c] = std::max(width[c], cs[c].size());
            }
        }
        auto print_row = [&](const std::vector<std::string>& cs) {
            for (std::size_t c = 0; c < cs.size(); ++c) {
                std::cout << (c ? "  " : "")
                          << std::string(width[c] - cs[c].size(), ' ') << cs[c];
            }
            std::cout << "\n";
        };
        print_row(headers);
        for (const auto& r : rows) {
            print_row(cells(r));
        }
    }
    return 0;
}

int cmd_bijection(const CliConfig& cfg) {
    const int m = cfg.nmax + 1;
    const auto report = run_moon_roundtrip(m, cfg.cap);

    if (cfg.sample > 0) {
        // Demonstrate the bijection on the first few marked trees, in the
        // interchange format.
        int emitted = 0;
        enumerate_labeled_trees(
            m,
            [&](const LabeledTree& tree) {
                for (const auto& [u, w] : tree.edges) {
                    for (const auto& mark : {std::pair{u, w}, std::pair{w, u}}) {
                        if (emitted >= cfg.sample) return;
                        const EdgeMarkedTree marked{tree, mark};
                        const auto [tail, head] = moon_decompose(marked);
                        std::cout << to_string(marked) << "  ->  "
                                  << to_string(tail) << "  +  "
                                  << to_string(head) << "\n";
                        ++emitted;
                    }
                }
            },
            cfg.cap);
    }

    if (cfg.output == "json") {
        const nlohmann::ordered_json j{
            {"m", report.m},
            {"marked_objects", report.marked_count},
            {"ordered_pairs", report.pair_count},
            {"expected", report.expected_count.str()},
            {"decompose_compose_failures", report.decompose_compose_failures},
            {"compose_decompose_failures", report.compose_decompose_failures},
            {"verified", report.verified},
            {"elapsed_ms", report.elapsed_ms},
        };
        std::cout << j.dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << "m,marked_objects,ordered_pairs,expected,"
                     "decompose_compose_failures,compose_decompose_failures,"
                     "verified,elapsed_ms\n"
                  << report.m << ',' << report.marked_count << ','
                  << report.pair_count << ',' << report.expected_count.str()
                  << ',' << report.decompose_compose_failures << ','
                  << report.compose_decompose_failures << ','
                  << (report.verified ? "true" : "false") << ','
                  << report.elapsed_ms << "\n";
    } else {
        std::cout << (report.verified ? "[ ok ]" : "[FAIL]")
                  << " moon bijection on {1.." << report.m
                  << "}: " << report.marked_count << " marked objects, "
                  << report.pair_count << " pairs, expected "
                  << report.expected_count.str() << ", "
                  << report.decompose_compose_failures +
                         report.compose_decompose_failures
                  << " roundtrip failures ("
                  << report.decompose_compose_failures << " cut-then-glue, "
                  << report.compose_decompose_failures << " glue-then-cut)  ["
                  << report.elapsed_ms << " ms]\n";
    }
    return report.verified ? 0 : 1;
}

int cmd_split_check(const CliConfig& cfg) {
    std::vector<VerificationReport> reports;
    reports.reserve(static_cast<std::size_t>(cfg.nmax));
    for (int n = 1; n <= cfg.nmax; ++n) {
        reports.push_back(verify_split_all(n));
    }
    emit_reports(reports, cfg.output);
    return exit_status(reports);
}

void add_common_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--nmax", cfg.nmax, "largest n to check")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--parallelism", cfg.parallelism, "worker pool size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", cfg.cap,
                    "max objects an exhaustive enumeration may visit "
                    "(HOOKCAL_CAP overrides)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact checker for the hook length formula on binary trees and its "
        "labeled-tree identities"};
    app.require_subcommand(1);

    CliConfig cfg;

    auto* verify = app.add_subcommand(
        "verify",
        "check identities for n = 1..nmax, each side by an independent "
        "method");
    add_common_options(verify, cfg);
    verify->add_option("--mode", cfg.mode,
                       "which methods to run: enumerate (eq1, eq2, exhaustive "
                       "eq4), recurrence (eq3, link), closed-form (split, "
                       "eq4, eq5), or all")
        ->check(CLI::IsMember({"enumerate", "recurrence", "closed-form", "all"}))
        ->capture_default_str();
    verify
        ->add_option("--identity", cfg.identities,
                     "restrict to specific identities")
        ->check(CLI::IsMember(
            {"eq1", "eq2", "eq3", "eq4", "eq5", "split", "link"}));

    auto* table = app.add_subcommand(
        "table", "print n, Catalan_n, T_n, R_n, F_n, (n+1)^(n-1) for n = "
                 "0..nmax");
    add_common_options(table, cfg);

    auto* bijection = app.add_subcommand(
        "bijection",
        "roundtrip the edge-cut bijection over every edge-marked tree on "
        "{1..nmax+1}");
    add_common_options(bijection, cfg);
    bijection->add_option("--sample", cfg.sample,
                          "print the first K decompositions in the "
                          "interchange format");

    auto* split = app.add_subcommand(
        "split-check",
        "check the splitting relation for every (n, k) with n <= nmax");
    add_common_options(split, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // The environment variable, when set, overrides the flag.
    if (const char* env_cap = std::getenv("HOOKCAL_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env_cap, &end, 10);
        if (end == env_cap || *end != '\0' || v == 0) {
            std::cerr << "error: HOOKCAL_CAP must be a positive integer, got '"
                      << env_cap << "'\n";
            return 2;
        }
        cfg.cap = v;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg);
        if (table->parsed()) return cmd_table(cfg);
        if (bijection->parsed()) return cmd_bijection(cfg);
        if (split->parsed()) return cmd_split_check(cfg);
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
