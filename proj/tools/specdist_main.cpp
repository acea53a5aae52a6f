// specdist: spectral distances between weighted graphs.
//
// Subcommands expose the pipeline (spectrum, dist, batch), the closed-form
// oracles (family), interlacing bounds (bound), rooted/exhaustion measures
// (rooted, exhaust) and the evolution simulation (evolve). Scalar results go
// to stdout as JSON, sequences as CSV; diagnostics go to stderr.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "specdist/closed_forms.hpp"
#include "specdist/evolve.hpp"
#include "specdist/graph.hpp"
#include "specdist/interlace.hpp"
#include "specdist/measure.hpp"
#include "specdist/spectral.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitBadInput = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw specdist::ParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

specdist::WeightedGraph load_graph(const std::string& path) {
    return specdist::from_edge_list(read_file(path));
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const std::string& file) {
    const auto g = load_graph(file);
    std::fputs(specdist::spectrum_to_csv(specdist::spectrum(g)).c_str(), stdout);
    return 0;
}

// -------------------------------------------------------------------- dist

int cmd_dist(double p, const std::string& file_a, const std::string& file_b) {
    const auto a = load_graph(file_a);
    const auto b = load_graph(file_b);
    const double d = specdist::spectral_distance(p, a, b);
    std::printf("{\"p\": %s, \"d\": %s}\n", fmt(p).c_str(), fmt(d).c_str());
    return 0;
}

// ------------------------------------------------------------------ family

struct FamilyRow {
    std::string family;
    std::size_t a, b;
    double oracle, pipeline;
};

FamilyRow family_row(const std::string& family, std::size_t a, std::size_t b) {
    namespace cf = specdist::closed_forms;
    using specdist::spectral_distance;
    FamilyRow row{family, a, b, 0.0, 0.0};
    if (family == "complete") {
        row.oracle = cf::d1_complete_pair(a, b);
        row.pipeline = spectral_distance(1.0, specdist::complete(a), specdist::complete(b));
    } else if (family == "bipartite") {
        row.oracle = cf::d1_bipartite_pair(a, b);
        const auto split = [](std::size_t n) {
            return specdist::complete_bipartite((n + 1) / 2, n / 2);
        };
        row.pipeline = spectral_distance(1.0, split(a), split(b));
    } else if (family == "cube") {
        row.oracle = cf::d1_cube_pair(a);
        row.pipeline = spectral_distance(1.0, specdist::hypercube(a), specdist::hypercube(b));
    } else if (family == "path") {
        row.oracle = cf::d1_path_pair(a);
        row.pipeline = spectral_distance(1.0, specdist::path_graph(a), specdist::path_graph(b));
    } else if (family == "cycle") {
        row.oracle = cf::d1_cycle_pair(a);
        row.pipeline = spectral_distance(1.0, specdist::cycle_graph(a), specdist::cycle_graph(b));
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    return row;
}

int cmd_family(const std::string& family, const std::vector<std::size_t>& sizes,
               const std::string& format) {
    std::vector<FamilyRow> rows;
    if (family == "complete" || family == "bipartite") {
        if (sizes.size() != 2) throw std::invalid_argument(family + " needs two sizes");
        rows.push_back(family_row(family, std::min(sizes[0], sizes[1]),
                                  std::max(sizes[0], sizes[1])));
    } else {
        if (sizes.empty()) throw std::invalid_argument(family + " needs at least one size");
        for (std::size_t s : sizes) rows.push_back(family_row(family, s, s + 1));
    }
    if (format == "json") {
        std::printf("[");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            std::printf(
                "%s{\"family\": \"%s\", \"a\": %zu, \"b\": %zu, \"oracle\": %s, "
                "\"pipeline\": %s, \"abs_diff\": %s}",
                i ? ", " : "", r.family.c_str(), r.a, r.b, fmt(r.oracle).c_str(),
                fmt(r.pipeline).c_str(), fmt(std::abs(r.oracle - r.pipeline)).c_str());
        }
        std::printf("]\n");
    } else {
        std::printf("family,a,b,oracle,pipeline,abs_diff\n");
        for (const auto& r : rows)
            std::printf("%s,%zu,%zu,%s,%s,%s\n", r.family.c_str(), r.a, r.b,
                        fmt(r.oracle).c_str(), fmt(r.pipeline).c_str(),
                        fmt(std::abs(r.oracle - r.pipeline)).c_str());
    }
    return 0;
}

// ------------------------------------------------------------------- bound

int cmd_bound(const std::string& op, const std::string& file, std::size_t u, std::size_t v) {
    const auto g = load_graph(file);
    std::pair<specdist::WeightedGraph, specdist::InterlaceParams> edited = [&] {
        if (op == "delete-edge") return specdist::delete_edge(g, u, v);
        if (op == "contract-vertices") return specdist::contract_vertices(g, u, v);
        if (op == "contract-edge") return specdist::contract_edge(g, u, v);
        throw std::invalid_argument("unknown operation: " + op);
    }();
    const auto& [h, params] = edited;
    const double bound = specdist::d1_bound(params, g.num_vertices());
    const double d1 = specdist::spectral_distance(1.0, g, h);
    const auto report =
        specdist::check_interlacing(specdist::spectrum(g), specdist::spectrum(h), params);
    for (const auto& viol : report.violations)
        std::fprintf(stderr, "interlacing violation at i=%zu: %s <= %s <= %s fails\n",
                     viol.index, fmt(viol.lower).c_str(), fmt(viol.value).c_str(),
                     fmt(viol.upper).c_str());
    std::printf(
        "{\"op\": \"%s\", \"k1\": %zu, \"k2\": %zu, \"j\": %d, \"n\": %zu, "
        "\"bound\": %s, \"d1\": %s, \"interlacing\": \"%s\"}\n",
        op.c_str(), params.k1, params.k2, params.j, g.num_vertices(), fmt(bound).c_str(),
        fmt(d1).c_str(), report.ok ? "pass" : "fail");
    return report.ok && d1 <= bound + 1e-9 ? 0 : kExitError;
}

// ------------------------------------------------------------------ rooted

int cmd_rooted(const std::string& file, std::optional<std::size_t> root, bool uniform) {
    const auto g = load_graph(file);
    specdist::SpectralMeasure m = [&] {
        if (uniform) {
            std::vector<double> dist(g.num_vertices(), 0.0);
            std::size_t active = 0;
            for (specdist::Vertex x = 0; x < g.num_vertices(); ++x)
                if (!g.is_isolated(x)) ++active;
            if (active == 0) throw std::invalid_argument("graph has no non-isolated vertex");
            for (specdist::Vertex x = 0; x < g.num_vertices(); ++x)
                if (!g.is_isolated(x)) dist[x] = 1.0 / static_cast<double>(active);
            return specdist::expected_spectral_measure(g, dist);
        }
        return specdist::rooted_spectral_measure(g, *root);
    }();
    std::fputs(m.to_csv().c_str(), stdout);
    return 0;
}

// ----------------------------------------------------------------- exhaust

int cmd_exhaust(const std::string& family, const std::vector<std::size_t>& sizes,
                const std::string& out_dir) {
    const specdist::InfiniteFamily fam = [&] {
        if (family == "Z") return specdist::InfiniteFamily::integer_line;
        if (family == "N") return specdist::InfiniteFamily::half_line;
        throw std::invalid_argument("family must be Z or N");
    }();
    const auto measures = specdist::exhaustion_measures(fam, sizes);
    for (std::size_t i = 0; i < measures.size(); ++i) {
        const auto path = std::filesystem::path(out_dir) /
                          ("exhaust_" + family + "_" + std::to_string(sizes[i]) + ".csv");
        write_file(path, measures[i].to_csv());
    }
    std::printf("n_a,n_b,d1\n");
    for (std::size_t i = 0; i + 1 < measures.size(); ++i)
        std::printf("%zu,%zu,%s\n", sizes[i], sizes[i + 1],
                    fmt(specdist::wasserstein(1.0, measures[i], measures[i + 1])).c_str());
    return 0;
}

// ------------------------------------------------------------------ evolve

int cmd_evolve(const std::string& op_name, std::size_t n, std::size_t steps,
               std::size_t sample_every, const std::vector<std::uint64_t>& seeds, double p_keep,
               std::size_t ba_m, std::size_t ba_seed_size, const std::string& graph_file,
               const std::string& out_dir, const std::string& prefix) {
    const specdist::EvolveOp op = [&] {
        if (op_name == "rewire") return specdist::EvolveOp::rewire;
        if (op_name == "dupdiv") return specdist::EvolveOp::dupdiv;
        throw std::invalid_argument("op must be rewire or dupdiv");
    }();

    std::vector<specdist::Trajectory> trajectories;
    for (std::uint64_t seed : seeds) {
        // start graph seeded from stream 0, trajectory from stream 1
        const auto g0 = graph_file.empty()
                            ? specdist::barabasi_albert(n, ba_m, ba_seed_size,
                                                        specdist::derive_seed(seed, 0))
                            : load_graph(graph_file);
        trajectories.push_back(specdist::evolve_trajectory(
            g0, op, steps, sample_every, specdist::derive_seed(seed, 1), p_keep));
        const auto path = std::filesystem::path(out_dir) /
                          (prefix + "_" + op_name + "_seed" + std::to_string(seed) + ".csv");
        write_file(path, specdist::trajectory_to_csv(trajectories.back()));
    }

    // gnuplot companion: one row per sampled step, one column per seed + mean
    std::string dat = "# step";
    for (std::uint64_t seed : seeds) dat += " d1_seed" + std::to_string(seed);
    dat += " mean\n";
    const std::size_t rows = trajectories.front().records.size();
    char buf[64];
    for (std::size_t r = 0; r < rows; ++r) {
        std::snprintf(buf, sizeof(buf), "%zu", trajectories.front().records[r].step);
        dat += buf;
        double mean = 0.0;
        for (const auto& t : trajectories) {
            dat += " " + fmt(t.records[r].d1_to_origin);
            mean += t.records[r].d1_to_origin;
        }
        dat += " " + fmt(mean / static_cast<double>(trajectories.size())) + "\n";
    }
    write_file(std::filesystem::path(out_dir) / (prefix + "_" + op_name + ".dat"), dat);

    std::printf("[");
    for (std::size_t i = 0; i < trajectories.size(); ++i) {
        const auto& t = trajectories[i];
        const auto rho = specdist::spearman_rho(t);
        double max_d1 = 0.0;
        for (const auto& r : t.records) max_d1 = std::max(max_d1, r.d1_to_origin);
        std::printf("%s{\"op\": \"%s\", \"seed\": %llu, \"rho\": %s, \"max_d1\": %s}",
                    i ? ", " : "", op_name.c_str(), static_cast<unsigned long long>(seeds[i]),
                    fmt(rho.rho).c_str(), fmt(max_d1).c_str());
    }
    std::printf("]\n");
    return 0;
}

// ------------------------------------------------------------------- batch

int cmd_batch(double p, const std::string& directory, std::size_t parallel,
              const std::string& format) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(directory))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    // spectra are cached by file-content hash and computed once, sequentially
    std::map<std::uint64_t, specdist::SpectralMeasure> cache;
    std::vector<const specdist::SpectralMeasure*> measures;
    std::vector<std::size_t> atom_counts;
    for (const auto& path : files) {
        const std::string bytes = read_file(path.string());
        const std::uint64_t key = fnv1a(bytes);
        auto it = cache.find(key);
        if (it == cache.end()) {
            const auto g = specdist::from_edge_list(bytes);
            it = cache.emplace(key, specdist::SpectralMeasure::from_spectrum(specdist::spectrum(g)))
                     .first;
        }
        measures.push_back(&it->second);
    }

    const std::size_t n = files.size();
    std::vector<double> matrix(n * n, 0.0);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    const auto work = [&](std::size_t from, std::size_t to) {
        for (std::size_t k = from; k < to; ++k) {
            const auto [i, j] = pairs[k];
            const double d = specdist::wasserstein(p, *measures[i], *measures[j]);
            matrix[i * n + j] = d;
            matrix[j * n + i] = d;
        }
    };
    if (parallel <= 1 || pairs.size() < 2) {
        work(0, pairs.size());
    } else {
        const std::size_t workers = std::min(parallel, pairs.size());
        std::vector<std::thread> threads;
        std::atomic<std::size_t> next{0};
        for (std::size_t t = 0; t < workers; ++t)
            threads.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < pairs.size(); k = next.fetch_add(1))
                    work(k, k + 1);
            });
        for (auto& t : threads) t.join();
    }

    if (format == "json") {
        std::printf("[");
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto [i, j] = pairs[k];
            std::printf(
                "%s{\"p\": %s, \"d\": %s, \"n_mu\": %zu, \"n_nu\": %zu, \"a\": \"%s\", "
                "\"b\": \"%s\"}",
                k ? ", " : "", fmt(p).c_str(), fmt(matrix[i * n + j]).c_str(),
                measures[i]->num_atoms(), measures[j]->num_atoms(),
                files[i].filename().string().c_str(), files[j].filename().string().c_str());
        }
        std::printf("]\n");
        return 0;
    }
    std::printf("file");
    for (const auto& f : files) std::printf(",%s", f.filename().string().c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < n; ++i) {
        std::printf("%s", files[i].filename().string().c_str());
        for (std::size_t j = 0; j < n; ++j) std::printf(",%s", fmt(matrix[i * n + j]).c_str());
        std::printf("\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral distances between weighted graphs"};
    app.require_subcommand(1);

    std::string file, file_a, file_b, family, op, directory, format = "csv";
    std::string out_dir = ".", prefix = "evolve", graph_file;
    double p = 1.0, p_keep = 0.5;
    std::vector<std::size_t> sizes;
    std::size_t u = 0, v = 0, n = 300, steps = 200, sample_every = 10, parallel = 1;
    std::size_t ba_m = 2, ba_seed_size = 10;
    std::optional<std::size_t> root;
    bool uniform = false;
    std::vector<std::uint64_t> seeds;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of a graph, one per line");
    spectrum_cmd->add_option("graph", file, "edge-list file")->required();

    auto* dist_cmd = app.add_subcommand("dist", "spectral distance d_p between two graphs");
    dist_cmd->add_option("a", file_a, "edge-list file")->required();
    dist_cmd->add_option("b", file_b, "edge-list file")->required();
    dist_cmd->add_option("--p", p, "Wasserstein order, >= 1")->check(CLI::Range(1.0, 1e9));

    auto* family_cmd =
        app.add_subcommand("family", "closed-form d_1 oracle vs pipeline for a graph family");
    family_cmd->add_option("family", family, "complete|bipartite|cube|path|cycle")->required();
    family_cmd->add_option("sizes", sizes, "two sizes (complete/bipartite) or n for (n, n+1)")
        ->required();
    family_cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* bound_cmd =
        app.add_subcommand("bound", "apply an edit, report interlacing params and d_1 bound");
    bound_cmd->add_option("op", op, "delete-edge|contract-vertices|contract-edge")->required();
    bound_cmd->add_option("graph", file, "edge-list file")->required();
    bound_cmd->add_option("u", u, "first vertex")->required();
    bound_cmd->add_option("v", v, "second vertex")->required();

    auto* rooted_cmd = app.add_subcommand("rooted", "rooted spectral measure as CSV");
    rooted_cmd->add_option("graph", file, "edge-list file")->required();
    auto* root_opt = rooted_cmd->add_option("--root", root, "root vertex");
    rooted_cmd->add_flag("--uniform", uniform, "uniform expected measure over non-isolated roots")
        ->excludes(root_opt);

    auto* exhaust_cmd =
        app.add_subcommand("exhaust", "exhaustion measures of an infinite family");
    exhaust_cmd->add_option("family", family, "Z (integer line) or N (half line)")->required();
    exhaust_cmd->add_option("sizes", sizes, "strictly increasing segment sizes")->required();
    exhaust_cmd->add_option("--out-dir", out_dir, "directory for per-size measure files");

    auto* evolve_cmd = app.add_subcommand("evolve", "evolution trajectories from a BA start");
    evolve_cmd->add_option("--op", op, "rewire|dupdiv")->required();
    evolve_cmd->add_option("--n", n, "size of the BA start graph (default 300)");
    evolve_cmd->add_option("--steps", steps, "number of edit steps");
    evolve_cmd->add_option("--sample-every", sample_every, "distance sampling interval");
    evolve_cmd->add_option("--seed", seeds, "trajectory seeds (repeatable)")->required();
    evolve_cmd->add_option("--p-keep", p_keep, "dup-div activation probability");
    evolve_cmd->add_option("--ba-m", ba_m, "BA edges per growth step");
    evolve_cmd->add_option("--ba-seed-size", ba_seed_size, "BA complete seed size");
    evolve_cmd->add_option("--graph", graph_file, "start from this edge-list instead of BA");
    evolve_cmd->add_option("--out-dir", out_dir, "directory for trajectory files");
    evolve_cmd->add_option("--prefix", prefix, "output file prefix");

    auto* batch_cmd = app.add_subcommand("batch", "pairwise distance matrix over a directory");
    batch_cmd->add_option("dir", directory, "directory of edge-list files")->required();
    batch_cmd->add_option("--p", p, "Wasserstein order, >= 1")->check(CLI::Range(1.0, 1e9));
    batch_cmd->add_option("--parallel", parallel, "worker threads for independent pairs");
    batch_cmd->add_option("--format", format, "csv matrix or json pair list")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum_cmd->parsed()) return cmd_spectrum(file);
        if (dist_cmd->parsed()) return cmd_dist(p, file_a, file_b);
        if (family_cmd->parsed()) return cmd_family(family, sizes, format);
        if (bound_cmd->parsed()) return cmd_bound(op, file, u, v);
        if (rooted_cmd->parsed()) {
            if (!uniform && !root) throw std::invalid_argument("need --root or --uniform");
            return cmd_rooted(file, root, uniform);
        }
        if (exhaust_cmd->parsed()) return cmd_exhaust(family, sizes, out_dir);
        if (evolve_cmd->parsed())
            return cmd_evolve(op, n, steps, sample_every, seeds, p_keep, ba_m, ba_seed_size,
                              graph_file, out_dir, prefix);
        if (batch_cmd->parsed()) return cmd_batch(p, directory, parallel, format);
    } catch (const specdist::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return 0;
}
