// Command-line front end: witness production, instance generation, and the
// tiny exact Ramsey oracle.
//
// Exit codes: 0 success, 1 input/parse errors, 2 theorem violation (with a
// reproducer bundle), 3 search budget exhausted, 64 hypothesis violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/graph6.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/witness_tree.hpp"
#include "ramsey/witness_unicyclic.hpp"

namespace {

int log_level() {
    const char* env = std::getenv("RAMSEY_LOG");
    return env ? std::atoi(env) : 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[ramsey] " << msg << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << data;
}

/// Minimal POSIX ustar writer for reproducer bundles.
void write_tar(const std::string& path, const std::vector<std::pair<std::string, std::string>>& files) {
    std::ofstream out(path, std::ios::binary);
    auto octal = [](std::size_t value, int width) {
        std::ostringstream ss;
        ss << std::oct << value;
        std::string s = ss.str();
        if (int(s.size()) < width - 1) s = std::string(width - 1 - s.size(), '0') + s;
        s.push_back('\0');
        return s;
    };
    for (const auto& [name, data] : files) {
        std::string header(512, '\0');
        name.copy(&header[0], std::min<std::size_t>(name.size(), 99));
        octal(0644, 8).copy(&header[100], 8);
        octal(0, 8).copy(&header[108], 8);
        octal(0, 8).copy(&header[116], 8);
        octal(data.size(), 12).copy(&header[124], 12);
        octal(0, 12).copy(&header[136], 12);
        header[156] = '0';
        std::string("ustar").copy(&header[257], 5);
        header[263] = '0';
        header[264] = '0';
        for (int i = 148; i < 156; ++i) header[i] = ' ';
        unsigned sum = 0;
        for (unsigned char c : header) sum += c;
        octal(sum, 7).copy(&header[148], 7);
        out << header << data;
        if (data.size() % 512) out << std::string(512 - data.size() % 512, '\0');
    }
    out << std::string(1024, '\0');
}

struct PatternFile {
    bool unicyclic = false;
    std::optional<ramsey::Tree> tree;
    std::optional<ramsey::UnicyclicGraph> uc;
    int order = 0;
};

PatternFile load_pattern(const std::string& path) {
    auto j = ramsey::ordered_json::parse(read_file(path));
    int n = j.at("n").get<int>();
    std::size_t edges = j.at("edges").size();
    PatternFile p;
    p.order = n;
    if (edges == std::size_t(n)) {
        p.unicyclic = true;
        p.uc = ramsey::unicyclic_from_json(j);
    } else if (edges + 1 == std::size_t(n)) {
        p.tree = ramsey::tree_from_json(j);
    } else {
        throw std::runtime_error("pattern is neither a tree (n-1 edges) nor unicyclic (n edges)");
    }
    return p;
}

int cmd_witness(const std::string& host_path, const std::string& pattern_path, int m,
                long long budget, int trials, const std::string& out_path) {
    PatternFile pattern = load_pattern(pattern_path);
    const int n = pattern.order;
    const int min_m = pattern.unicyclic ? 18 : 9;
    if (m < min_m) {
        std::cerr << "hypothesis violation: m >= " << min_m
                  << (pattern.unicyclic ? " required for unicyclic patterns" : " required for trees")
                  << " (got m = " << m << ")\n";
        return 64;
    }
    if (n < m * m - m + 1) {
        std::cerr << "hypothesis violation: n >= m^2 - m + 1 = " << (m * m - m + 1)
                  << " (got n = " << n << ")\n";
        return 64;
    }
    std::vector<ramsey::Graph> hosts = ramsey::read_graph6_file(host_path);
    if (hosts.empty()) {
        std::cerr << "host file holds no graphs\n";
        return 1;
    }
    if (trials > 0 && int(hosts.size()) > trials) hosts.resize(trials);

    std::ostringstream out;
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        const ramsey::Graph& host = hosts[i];
        if (host.order() != 2 * n - 1) {
            std::cerr << "hypothesis violation: host order must be 2n - 1 = " << (2 * n - 1)
                      << " (got " << host.order() << " on line " << (i + 1) << ")\n";
            return 64;
        }
        try {
            ramsey::Witness w = pattern.unicyclic
                                    ? ramsey::find_witness_unicyclic(host, *pattern.uc, m, budget)
                                    : ramsey::find_witness_tree(host, *pattern.tree, m);
            out << ramsey::witness_to_json(w).dump() << "\n";
            log_info("instance " + std::to_string(i + 1) + ": witness found");
        } catch (const ramsey::TheoremViolation& tv) {
            std::cerr << tv.what() << "\n";
            std::string bundle = (out_path.empty() ? std::string("witness") : out_path) + ".repro.tar";
            ramsey::ordered_json config;
            config["claim"] = tv.claim_id;
            config["m"] = m;
            config["n"] = n;
            config["budget"] = budget;
            config["host_line"] = int(i + 1);
            write_tar(bundle, {{"host.g6", ramsey::write_graph6(host) + "\n"},
                               {"pattern.json", read_file(pattern_path)},
                               {"config.json", config.dump(2) + "\n"},
                               {"claim.txt", tv.claim_id + "\n"}});
            std::cerr << "reproducer bundle written to " << bundle << "\n";
            return 2;
        } catch (const ramsey::SearchBudgetExhausted& sb) {
            std::cerr << sb.what() << "\n";
            return 3;
        }
    }
    if (out_path.empty()) std::cout << out.str();
    else write_file(out_path, out.str());
    return 0;
}

int cmd_generate(const std::string& kind, int n, double p, std::uint64_t seed, int count,
                 const std::string& out_path) {
    std::ostringstream out;
    for (int i = 0; i < count; ++i) {
        std::uint64_t s = seed + std::uint64_t(i);
        if (kind == "extremal") {
            out << ramsey::write_graph6(ramsey::extremal_graph(n)) << "\n";
        } else if (kind == "gnp") {
            out << ramsey::write_graph6(ramsey::random_graph(n, p, s)) << "\n";
        } else if (kind == "tree") {
            out << ramsey::tree_to_json(ramsey::random_tree(n, s)).dump() << "\n";
        } else if (kind == "unicyclic") {
            out << ramsey::unicyclic_to_json(ramsey::random_unicyclic(n, s)).dump() << "\n";
        } else {
            std::cerr << "unknown kind: " << kind << "\n";
            return 1;
        }
    }
    if (out_path.empty()) std::cout << out.str();
    else write_file(out_path, out.str());
    log_info("generated " + std::to_string(count) + " " + kind + " instance(s)");
    return 0;
}

bool is_perfect_matching(const ramsey::Graph& g) {
    if (g.order() == 0 || g.order() % 2) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 1) return false;
    return true;
}

bool is_tree(const ramsey::Graph& g) {
    return g.edge_count() == g.order() - 1 && g.components().size() == 1;
}

int cmd_brute(const std::string& h_path, const std::string& k_path, int n_max) {
    ramsey::Graph h = ramsey::read_graph6_file(h_path).at(0);
    ramsey::Graph k = ramsey::read_graph6_file(k_path).at(0);
    auto r = ramsey::brute_ramsey(h, k, n_max);
    if (!r) {
        std::cout << "R(H, K) exceeds n_max = " << n_max << "\n";
        return 3;
    }
    std::cout << "R(H, K) = " << *r;
    if (is_tree(h) && is_perfect_matching(k)) {
        int formula = h.order() + int(k.order() / 2) - 1;
        std::cout << " (formula: " << formula << ", " << (*r == formula ? "MATCH" : "MISMATCH")
                  << ")";
    }
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructive Ramsey witnesses for trees and unicyclic graphs versus fans"};
    app.require_subcommand(1);

    std::string host_path, pattern_path, out_path, kind;
    int m = 0, n = 0, trials = 0, count = 1, n_max = 7;
    double p = 0.5;
    std::uint64_t seed = 0;
    long long budget = ramsey::kDefaultSearchBudget;

    auto* witness = app.add_subcommand("witness", "find a verified witness per host graph");
    witness->add_option("--host", host_path, "graph6 host file (one graph per line)")->required();
    witness->add_option("--pattern", pattern_path, "tree or unicyclic pattern JSON")->required();
    witness->add_option("--m", m, "fan parameter")->required();
    witness->add_option("--budget", budget, "search budget for the cycle branch");
    witness->add_option("--trials", trials, "cap on the number of host lines processed");
    witness->add_option("--out", out_path, "output file for witness JSON lines");

    auto* generate = app.add_subcommand("generate", "emit hosts and patterns");
    generate->add_option("--kind", kind, "extremal | gnp | tree | unicyclic")->required();
    generate->add_option("--n", n, "order parameter")->required();
    generate->add_option("--p", p, "edge probability for gnp");
    generate->add_option("--seed", seed, "deterministic seed");
    generate->add_option("--count", count, "number of instances (seed advances per line)");
    generate->add_option("--out", out_path, "output file");

    auto* brute = app.add_subcommand("brute", "exact tiny-scale Ramsey number R(H, K)");
    std::string hp, kp;
    brute->add_option("--host", hp, "graph6 file for H")->required();
    brute->add_option("--pattern", kp, "graph6 file for K")->required();
    brute->add_option("--nmax", n_max, "enumeration cap (<= 8)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (witness->parsed()) return cmd_witness(host_path, pattern_path, m, budget, trials, out_path);
        if (generate->parsed()) return cmd_generate(kind, n, p, seed, count, out_path);
        if (brute->parsed()) return cmd_brute(hp, kp, n_max);
    } catch (const ramsey::PreconditionError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
