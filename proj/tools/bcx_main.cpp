// Batch front end: ingest matroid files, compute invariants, run predicate
// checks, lemma verifications, and family sweeps.
#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "bcx/constructions.hpp"
#include "bcx/flawless.hpp"
#include "bcx/invariants.hpp"
#include "bcx/io.hpp"
#include "bcx/matroid.hpp"

namespace {

using bcx::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<int> parse_order_labels(const std::string& csv) {
    std::vector<int> out;
    for (const auto& tok : split_list(csv)) {
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw bcx::Error(bcx::ErrorCode::BadParameters, "bad order entry '" + tok + "'");
        }
    }
    return out;
}

struct FamilyOptions {
    std::string family;
    int max_edges = 0;
    int max_n = 0;
};

std::vector<std::pair<std::string, bcx::Matroid>> build_family(const FamilyOptions& opt) {
    std::vector<std::pair<std::string, bcx::Matroid>> out;
    if (opt.family == "graphic") {
        if (opt.max_edges < 1) {
            throw bcx::Error(bcx::ErrorCode::BadParameters, "graphic family needs --max-edges >= 1");
        }
        for (const bcx::Graph& g : bcx::family_graphs(opt.max_edges)) {
            std::ostringstream id;
            id << "graphic:";
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                id << (i ? "," : "") << g.edges[i].u << "-" << g.edges[i].v;
            }
            out.push_back({id.str(), bcx::graphic(g)});
        }
        return out;
    }
    if (opt.family == "uniform") {
        if (opt.max_n < 1) throw bcx::Error(bcx::ErrorCode::BadParameters, "uniform family needs --max-n >= 1");
        for (int n = 1; n <= opt.max_n; ++n) {
            for (int r = 0; r <= n; ++r) {
                out.push_back({"uniform(" + std::to_string(r) + "," + std::to_string(n) + ")",
                               bcx::uniform(r, n)});
            }
        }
        return out;
    }
    if (opt.family == "wheel") {
        if (opt.max_n < 3) throw bcx::Error(bcx::ErrorCode::BadParameters, "wheel family needs --max-n >= 3");
        for (int n = 3; n <= opt.max_n && 2 * n <= static_cast<int>(bcx::Matroid::kDefaultMaxElements); ++n) {
            out.push_back({"wheel(" + std::to_string(n) + ")", bcx::graphic(bcx::wheel(n))});
        }
        return out;
    }
    if (opt.family == "complete") {
        if (opt.max_n < 1) throw bcx::Error(bcx::ErrorCode::BadParameters, "complete family needs --max-n >= 1");
        for (int n = 1; n <= opt.max_n; ++n) {
            if (n * (n - 1) / 2 > static_cast<int>(bcx::Matroid::kDefaultMaxElements)) break;
            out.push_back({"K(" + std::to_string(n) + ")", bcx::graphic(bcx::complete(n))});
        }
        return out;
    }
    if (opt.family == "complete-bipartite") {
        if (opt.max_n < 1) {
            throw bcx::Error(bcx::ErrorCode::BadParameters, "complete-bipartite family needs --max-n >= 1");
        }
        for (int a = 1; a <= opt.max_n; ++a) {
            for (int b = a; b <= opt.max_n; ++b) {
                if (a * b > static_cast<int>(bcx::Matroid::kDefaultMaxElements)) break;
                out.push_back({"K(" + std::to_string(a) + "," + std::to_string(b) + ")",
                               bcx::graphic(bcx::complete_bipartite(a, b))});
            }
        }
        return out;
    }
    throw bcx::Error(bcx::ErrorCode::BadParameters,
                     "unknown family '" + opt.family +
                         "' (graphic|uniform|wheel|complete|complete-bipartite)");
}

void write_output(const Json& report, const std::string& out_path) {
    std::string rendered = bcx::render_report(report);
    if (out_path.empty()) {
        std::cout << rendered;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw bcx::Error(bcx::ErrorCode::BadParameters, "cannot write '" + out_path + "'");
    out << rendered;
}

class Stopwatch {
  public:
    double elapsed_ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_invariants(const std::string& path, const std::string& format, const std::string& order_csv,
                   const std::string& out_path, const std::string& emit_circuits_path) {
    Stopwatch watch;
    std::optional<bcx::InputFormat> override;
    if (!format.empty()) override = bcx::parse_format_name(format);
    bcx::ParsedInput input = bcx::load_matroid_file(path, override);
    const bcx::Matroid& m = input.matroid;

    bcx::LinearOrder order = order_csv.empty()
                                 ? bcx::LinearOrder::default_for(m.ground())
                                 : bcx::LinearOrder::from_labels(m.ground(), parse_order_labels(order_csv));

    Json report = bcx::report_header("invariants");
    report["input"] = {{"path", path},
                       {"format", bcx::input_format_name(input.format)},
                       {"digest", input.digest}};
    report["order"] = order.to_labels(m.ground());
    report["matroid"] = bcx::matroid_section(m);
    report["invariants"] = bcx::invariants_section(m, order);
    report["warnings"] = input.warnings;
    report["timing"] = {{"total_ms", watch.elapsed_ms()}};
    write_output(report, out_path);

    if (!emit_circuits_path.empty()) {
        std::ofstream out(emit_circuits_path, std::ios::binary);
        if (!out) {
            throw bcx::Error(bcx::ErrorCode::BadParameters, "cannot write '" + emit_circuits_path + "'");
        }
        out << bcx::circuits_document(m).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& format, const std::string& predicates_csv,
              const std::string& out_path) {
    Stopwatch watch;
    std::optional<bcx::InputFormat> override;
    if (!format.empty()) override = bcx::parse_format_name(format);
    bcx::ParsedInput input = bcx::load_matroid_file(path, override);
    const bcx::Matroid& m = input.matroid;
    std::vector<std::string> predicates = split_list(predicates_csv);
    if (predicates.empty()) {
        // Default to the shape predicates; symmetric and the rescaled
        // log-concavity variant are opt-in.
        predicates = {"flawless", "strongly-flawless", "unimodal", "log-concave", "o-sequence"};
    }

    Json report = bcx::report_header("check");
    report["input"] = {{"path", path},
                       {"format", bcx::input_format_name(input.format)},
                       {"digest", input.digest}};
    report["matroid"] = bcx::matroid_section(m);
    if (m.is_loopless()) {
        report["h_vector"] = bcx::h_vector(m).trimmed();
    } else {
        report["h_vector"] = Json::array();
    }
    report["complementary_h"] = bcx::complementary_h(m).entries;
    report["predicates"] = bcx::predicate_section(m, predicates);
    report["warnings"] = input.warnings;
    report["timing"] = {{"total_ms", watch.elapsed_ms()}};
    write_output(report, out_path);

    for (const auto& name : predicates) {
        if (!bcx::evaluate_predicate(name, m).ok) return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_verify(const FamilyOptions& family_opt, const std::string& lemmas_csv, int jobs,
               const std::string& out_path) {
    Stopwatch watch;
    std::vector<std::string> lemmas = split_list(lemmas_csv);
    if (lemmas.empty()) lemmas = bcx::known_lemma_names();

    Json report = bcx::report_header("verify");
    report["family"] = {{"name", family_opt.family},
                        {"max_edges", family_opt.max_edges},
                        {"max_n", family_opt.max_n}};
    report["lemmas"] = Json::object();

    bool all_ok = true;
    std::vector<std::string> per_matroid_lemmas;
    for (const auto& name : lemmas) {
        if (name == "product-grid") {
            // Family-independent finite grid over strongly flawless
            // coefficient sequences.
            bcx::PredicateReport grid = bcx::strongly_flawless_product_grid(4, 3);
            Json entry;
            entry["ok"] = grid.ok;
            entry["instances"] = 1;
            entry["detail"] = grid.detail;
            entry["first_failure"] = grid.ok ? "" : grid.kind + " " + grid.detail;
            report["lemmas"][name] = std::move(entry);
            all_ok = all_ok && grid.ok;
        } else {
            if (std::find(bcx::known_lemma_names().begin(), bcx::known_lemma_names().end(), name) ==
                bcx::known_lemma_names().end()) {
                throw bcx::Error(bcx::ErrorCode::UnknownPredicate, "unknown lemma check '" + name + "'");
            }
            per_matroid_lemmas.push_back(name);
        }
    }

    if (!per_matroid_lemmas.empty()) {
        auto family = build_family(family_opt);
        struct Tally {
            bool ok = true;
            long long instances = 0;
            int items = 0;
            std::string first_failure;
        };
        // Per-item outcomes are computed (possibly in parallel) and folded
        // in family order so the report stays deterministic.
        std::vector<std::vector<bcx::LemmaOutcome>> outcomes(family.size());
        auto run_item = [&](std::size_t i) {
            outcomes[i].reserve(per_matroid_lemmas.size());
            for (const auto& name : per_matroid_lemmas) {
                outcomes[i].push_back(bcx::run_lemma_check(name, family[i].second));
            }
        };
        if (jobs <= 1 || family.size() < 2) {
            for (std::size_t i = 0; i < family.size(); ++i) run_item(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> workers;
            for (int w = 0; w < jobs; ++w) {
                workers.emplace_back([&] {
                    while (true) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= family.size()) break;
                        run_item(i);
                    }
                });
            }
            for (auto& t : workers) t.join();
        }
        std::map<std::string, Tally> tallies;
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t li = 0; li < per_matroid_lemmas.size(); ++li) {
                const bcx::LemmaOutcome& outcome = outcomes[i][li];
                Tally& tally = tallies[per_matroid_lemmas[li]];
                tally.instances += outcome.instances;
                if (outcome.instances > 0) ++tally.items;
                if (!outcome.ok && tally.ok) {
                    tally.ok = false;
                    tally.first_failure = family[i].first + ": " + outcome.first_failure;
                }
            }
        }
        for (const auto& name : per_matroid_lemmas) {
            const Tally& tally = tallies[name];
            Json entry;
            entry["ok"] = tally.ok;
            entry["instances"] = tally.instances;
            entry["items_with_instances"] = tally.items;
            entry["first_failure"] = tally.first_failure;
            report["lemmas"][name] = std::move(entry);
            all_ok = all_ok && tally.ok;
        }
        report["family"]["size"] = family.size();
    }

    report["summary"] = {{"all_ok", all_ok}};
    report["timing"] = {{"total_ms", watch.elapsed_ms()}};
    write_output(report, out_path);
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const FamilyOptions& family_opt, const std::string& predicates_csv, int jobs,
              const std::string& out_path) {
    Stopwatch watch;
    std::vector<std::string> predicates = split_list(predicates_csv);
    if (predicates.empty()) predicates = {"strongly-flawless"};

    auto family = build_family(family_opt);
    bcx::SweepReport sweep_report = bcx::sweep(family, predicates, jobs);

    Json report = bcx::report_header("sweep");
    report["family"] = {{"name", family_opt.family},
                        {"max_edges", family_opt.max_edges},
                        {"max_n", family_opt.max_n},
                        {"size", family.size()}};
    report["predicates"] = predicates;
    report["sweep"] = bcx::sweep_report_json(sweep_report);
    bool all_ok = !sweep_report.first_counterexample.has_value();
    report["summary"] = {{"all_ok", all_ok}};
    report["timing"] = {{"total_ms", watch.elapsed_ms()}};
    write_output(report, out_path);
    return all_ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matroid invariants, h-vector shape predicates, and identity verification"};
    app.require_subcommand(1);

    std::string file, format, order_csv, out_path, emit_circuits_path;
    std::string predicates_csv, lemmas_csv;
    FamilyOptions family_opt;
    int jobs = 1;

    CLI::App* invariants = app.add_subcommand("invariants", "compute invariants of a matroid file");
    invariants->add_option("file", file)->required();
    invariants->add_option("--format", format, "circuits|graph|matrix");
    invariants->add_option("--order", order_csv, "comma-separated label permutation");
    invariants->add_option("--out", out_path, "write the report to a file");
    invariants->add_option("--emit-circuits", emit_circuits_path, "write a circuits document");

    CLI::App* check = app.add_subcommand("check", "evaluate h-vector predicates on a matroid file");
    check->add_option("file", file)->required();
    check->add_option("--format", format, "circuits|graph|matrix");
    check->add_option("--predicates", predicates_csv, "comma-separated predicate names");
    check->add_option("--out", out_path, "write the report to a file");

    CLI::App* verify = app.add_subcommand("verify", "run identity checkers over a family");
    verify->add_option("--family", family_opt.family)->required();
    verify->add_option("--max-edges", family_opt.max_edges);
    verify->add_option("--max-n", family_opt.max_n);
    verify->add_option("--lemmas", lemmas_csv, "comma-separated identity names");
    verify->add_option("--jobs", jobs);
    verify->add_option("--out", out_path);

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate predicates over a family");
    sweep->add_option("--family", family_opt.family)->required();
    sweep->add_option("--max-edges", family_opt.max_edges);
    sweep->add_option("--max-n", family_opt.max_n);
    sweep->add_option("--predicates", predicates_csv);
    sweep->add_option("--jobs", jobs);
    sweep->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (invariants->parsed()) {
            return cmd_invariants(file, format, order_csv, out_path, emit_circuits_path);
        }
        if (check->parsed()) return cmd_check(file, format, predicates_csv, out_path);
        if (verify->parsed()) return cmd_verify(family_opt, lemmas_csv, jobs, out_path);
        if (sweep->parsed()) return cmd_sweep(family_opt, predicates_csv, jobs, out_path);
    } catch (const bcx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case bcx::ErrorCode::ParseError:
            case bcx::ErrorCode::BadParameters:
            case bcx::ErrorCode::UnknownPredicate:
                return kExitUsage;
            default:
                return kExitCheckFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
