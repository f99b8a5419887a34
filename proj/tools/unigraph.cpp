// Command-line front end: build universal hosts, generate guests, embed,
// verify, and evaluate the counting lower bound.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "unigraph/bounds.hpp"
#include "unigraph/embed.hpp"
#include "unigraph/generators.hpp"
#include "unigraph/graph.hpp"
#include "unigraph/parallel.hpp"
#include "unigraph/universal.hpp"

namespace {

using namespace unigraph;

struct DensityArg {
    int a = 1;
    int b = 1;
};

DensityArg parse_density(const std::string& s) {
    DensityArg d;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        d.a = std::stoi(s);
        d.b = 1;
    } else {
        d.a = std::stoi(s.substr(0, slash));
        d.b = std::stoi(s.substr(slash + 1));
    }
    if (d.a < 1 || d.b < 1) throw CLI::ValidationError("--d must be a positive integer or fraction A/B");
    return d;
}

int cmd_build(const std::string& family, std::int64_t n, const std::string& dstr, int degree,
              std::uint64_t seed, bool materialize_flag, const std::string& out) {
    DensityArg d = parse_density(dstr);
    ConstructionParams params;
    params.seed = seed;
    UniversalHost host;
    if (family == "unbounded") {
        int di = static_cast<int>((d.a + d.b - 1) / d.b);  // ceil(a/b)
        host = build_unbounded(n, di);
    } else if (family == "integer") {
        if (d.a % d.b != 0)
            throw CLI::ValidationError("integer family requires an integer --d");
        host = build_integer(n, d.a / d.b, degree, params);
    } else if (family == "rational") {
        host = build_rational(n, d.a, d.b, degree, params);
    } else {
        throw CLI::ValidationError("unknown family: " + family);
    }
    write_host_file(out, host);
    std::cout << "host " << family_name(host.family) << " n=" << host.n << " m=" << host.m
              << " dim=" << host.dim << " blowup=" << host.blowup_size << " apex=" << host.apex_size
              << " vertices=" << host.vertex_count() << " edges=" << edge_count(host).get_str()
              << "\n";
    if (materialize_flag) {
        Graph g = materialize(host);
        write_graph_file(out + ".graph", g);
        std::cout << "materialized " << out << ".graph\n";
    }
    return 0;
}

int cmd_embed(const std::string& host_path, const std::string& input, std::uint64_t seed,
              int retries, const std::string& out) {
    UniversalHost host = read_host_file(host_path);
    Graph h = read_graph_file(input);
    EmbedOptions opts;
    opts.seed = seed;
    opts.retry_cap = retries;
    opts.attempts = std::max(1, std::min(retries, 16));
    Embedding emb = embed(h, host, opts);
    write_embedding_file(out, emb, file_content_hash(host_path));
    std::cout << "embedded " << h.n << " vertices into " << host_path << "\n";
    return 0;
}

int cmd_verify(const std::string& host_path, const std::string& input, const std::string& emb_path) {
    UniversalHost host = read_host_file(host_path);
    Graph h = read_graph_file(input);
    EmbeddingFile ef = read_embedding_file(emb_path);
    if (ef.host_hash != file_content_hash(host_path)) {
        std::cerr << "verify: embedding was produced against a different host descriptor\n";
        return 1;
    }
    bool ok = verify_embedding(h, host, ef.embedding);
    std::cout << (ok ? "verified" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_gen(const std::string& kind, int n, const std::string& dstr, int degree,
            const std::string& base_path, std::uint64_t seed, const std::string& out) {
    Graph g;
    DensityArg d = parse_density(dstr);
    if (kind != "lift" && d.b != 1)
        throw CLI::ValidationError("gen --kind " + kind + " takes an integer --d");
    if (kind == "unicyclic-union") {
        g = gen_union_unicyclic(n, d.a, seed);
    } else if (kind == "lift") {
        if (base_path.empty()) throw CLI::ValidationError("gen --kind lift requires --base");
        g = gen_lift(read_graph_file(base_path), n, seed);
    } else if (kind == "bounded-degree") {
        g = gen_bounded_degree(n, d.a, degree, seed);
    } else {
        throw CLI::ValidationError("unknown kind: " + kind);
    }
    write_graph_file(out, g);
    std::cout << "generated " << out << " n=" << g.n << " e=" << g.e() << "\n";
    return 0;
}

int cmd_bound(const std::string& base_path, std::int64_t n, std::int64_t m_edges) {
    Graph f = read_graph_file(base_path);
    if (m_edges < 0) {
        BoundReport rep = lower_bound(f, n);
        std::cout << "m_F " << rep.m_f.str() << "\nbound " << std::setprecision(17) << rep.bound
                  << (rep.bound_exact ? " (closed form, exact root)" : " (floating point)") << "\n";
    } else {
        BoundReport rep = check_counting_inequality(f, n, m_edges);
        std::cout << "m_F " << rep.m_f.str() << "\nbound " << std::setprecision(17) << rep.bound
                  << "\ncounting_lhs_log " << rep.counting_lhs_log << "\ncounting_rhs_log "
                  << rep.counting_rhs_log << "\nM "
                  << (rep.counting_sufficient ? "satisfies" : "violates")
                  << " the counting necessity condition\n";
    }
    return 0;
}

int cmd_bench(const std::string& family, const std::string& dstr, const std::string& n_list,
              int samples, std::uint64_t seed) {
    DensityArg d = parse_density(dstr);
    std::vector<std::int64_t> ns;
    {
        std::string tok;
        std::istringstream is(n_list);
        while (std::getline(is, tok, ',')) ns.push_back(std::stoll(tok));
    }
    std::cout << "n\te_host\tfit_exponent\tsuccess_rate\tmean_time_s\n";
    std::vector<double> log_n, log_e;
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        std::int64_t n = ns[ni];
        ConstructionParams params;
        params.seed = child_seed(seed, ni);
        UniversalHost host;
        Graph base;
        if (family == "unbounded") {
            host = build_unbounded(n, (d.a + d.b - 1) / d.b);
        } else if (family == "integer") {
            host = build_integer(n, d.a / d.b, 2 * (d.a / d.b), params);
        } else if (family == "rational") {
            base = find_balanced(d.a, d.b, 8);
            host = build_rational(n, d.a, d.b, base.max_degree(), params);
        } else {
            throw CLI::ValidationError("unknown family: " + family);
        }
        BigInt ec = edge_count(host);
        log_n.push_back(std::log(static_cast<double>(n)));
        log_e.push_back(std::log(ec.get_d()));
        std::vector<int> ok(samples, 0);
        std::vector<double> secs(samples, 0.0);
        parallel_for(samples, [&](int s) {
            std::uint64_t gs = child_seed(seed, (ni << 16) + s + 1);
            Graph guest;
            if (family == "unbounded")
                guest = gen_union_unicyclic(static_cast<int>(n), (d.a + d.b - 1) / d.b, gs);
            else if (family == "integer")
                guest = gen_bounded_degree(static_cast<int>(n), d.a / d.b, 2 * (d.a / d.b), gs);
            else
                guest = gen_lift(base, static_cast<int>(n) / base.n * base.n, gs);
            EmbedOptions opts;
            opts.seed = gs;
            auto t0 = std::chrono::steady_clock::now();
            try {
                Embedding emb = embed(guest, host, opts);
                ok[s] = verify_embedding(guest, host, emb) ? 1 : 0;
            } catch (const std::exception&) {
                ok[s] = 0;
            }
            secs[s] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        });
        double rate = 0, mean_t = 0;
        for (int s = 0; s < samples; ++s) rate += ok[s], mean_t += secs[s];
        rate /= std::max(1, samples);
        mean_t /= std::max(1, samples);
        // least-squares slope over the rows so far
        std::string fit = "-";
        if (log_n.size() >= 2) {
            double xm = 0, ym = 0;
            for (std::size_t i = 0; i < log_n.size(); ++i) xm += log_n[i], ym += log_e[i];
            xm /= log_n.size();
            ym /= log_e.size();
            double num = 0, den = 0;
            for (std::size_t i = 0; i < log_n.size(); ++i) {
                num += (log_n[i] - xm) * (log_e[i] - ym);
                den += (log_n[i] - xm) * (log_n[i] - xm);
            }
            std::ostringstream os;
            os << std::setprecision(4) << num / den;
            fit = os.str();
        }
        std::cout << n << "\t" << ec.get_str() << "\t" << fit << "\t" << std::setprecision(3) << rate
                  << "\t" << std::setprecision(4) << mean_t << "\n";
    }
    if (log_n.size() >= 2) {
        double xm = 0, ym = 0;
        for (std::size_t i = 0; i < log_n.size(); ++i) xm += log_n[i], ym += log_e[i];
        xm /= log_n.size();
        ym /= log_e.size();
        double num = 0, den = 0;
        for (std::size_t i = 0; i < log_n.size(); ++i) {
            num += (log_n[i] - xm) * (log_e[i] - ym);
            den += (log_n[i] - xm) * (log_n[i] - xm);
        }
        std::cout << "fit_exponent " << std::setprecision(6) << num / den << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal graph construction and embedding toolkit"};
    app.require_subcommand(1);

    // build
    std::string family, dstr = "2", out, host_path, input, emb_path, base_path, kind, n_list;
    std::int64_t n = 0, m_edges = -1;
    int degree = 4, retries = 50, samples = 5;
    std::uint64_t seed = 1;
    bool materialize_flag = false;

    auto* build = app.add_subcommand("build", "construct a universal host");
    build->add_option("--family", family, "unbounded|integer|rational")->required();
    build->add_option("--n", n, "guest family size")->required();
    build->add_option("--d", dstr, "density bound, integer or A/B")->required();
    build->add_option("--D", degree, "guest maximum degree (integer/rational families)");
    build->add_option("--seed", seed);
    build->add_flag("--materialize", materialize_flag, "also write an explicit .graph file");
    build->add_option("--out", out)->required();

    auto* embed_cmd = app.add_subcommand("embed", "embed a guest graph into a host");
    embed_cmd->add_option("--host", host_path)->required();
    embed_cmd->add_option("--input", input)->required();
    embed_cmd->add_option("--seed", seed);
    embed_cmd->add_option("--retries", retries);
    embed_cmd->add_option("--out", out)->required();

    auto* verify_cmd = app.add_subcommand("verify", "verify an embedding (exit 0/1)");
    verify_cmd->add_option("--host", host_path)->required();
    verify_cmd->add_option("--input", input)->required();
    verify_cmd->add_option("--embedding", emb_path)->required();

    auto* gen = app.add_subcommand("gen", "generate a guest graph");
    gen->add_option("--kind", kind, "unicyclic-union|lift|bounded-degree")->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--d", dstr);
    gen->add_option("--D", degree);
    gen->add_option("--base", base_path);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out)->required();

    auto* bound = app.add_subcommand("bound", "counting lower bound for lifts of a balanced base");
    bound->add_option("--base", base_path)->required();
    bound->add_option("--n", n)->required();
    bound->add_option("--M", m_edges);

    auto* bench = app.add_subcommand("bench", "host size and embedding success sweep");
    bench->add_option("--family", family)->required();
    bench->add_option("--d", dstr)->required();
    bench->add_option("--n-list", n_list)->required();
    bench->add_option("--samples", samples);
    bench->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return cmd_build(family, n, dstr, degree, seed, materialize_flag, out);
        if (embed_cmd->parsed()) return cmd_embed(host_path, input, seed, retries, out);
        if (verify_cmd->parsed()) return cmd_verify(host_path, input, emb_path);
        if (gen->parsed()) return cmd_gen(kind, static_cast<int>(n), dstr, degree, base_path, seed, out);
        if (bound->parsed()) return cmd_bound(base_path, n, m_edges);
        if (bench->parsed()) return cmd_bench(family, dstr, n_list, samples, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
