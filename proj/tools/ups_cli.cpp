// Command-line driver: point-set generation and checking, instance
// generation and validation, the embedding pipeline, verification, SVG
// rendering and size/timing reports.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include "ups/gen.hpp"
#include "ups/json_io.hpp"
#include "ups/pipeline.hpp"
#include "ups/render.hpp"
#include "ups/verify.hpp"

#include <chrono>
#include <iostream>

using namespace ups;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_gen_points(long n, const std::string& mode, bool petals, const std::string& out) {
    auto ps = build_point_set(n, pointset_mode_from_string(mode), petals);
    write_file(out, pointset_to_json(ps));
    std::cout << "point set: n=" << n << " mode=" << mode << " N=" << ps.N
              << " total points=" << ps.total_point_count() << "\n";
    return 0;
}

int cmd_check_points(const std::string& file, bool exhaustive) {
    auto ps = pointset_from_json(read_file(file));
    ps.validate();
    auto rep = check_visibility(ps, exhaustive, 100000, 1);
    std::cout << "visibility: " << (rep.ok ? "ok" : "VIOLATION: " + rep.violation) << " ("
              << rep.checked << " assertions)\n";
    bool conv = true;
    if (exhaustive) {
        for (long lo = 2; lo <= ps.N - 2 && conv; ++lo)
            for (long hi = lo + 1; hi <= ps.N - 1 && conv; ++hi)
                conv = check_convexity(ps, lo, hi);
    } else {
        conv = check_convexity(ps, 2, ps.N - 1);
    }
    std::cout << "convexity: " << (conv ? "ok" : "VIOLATION") << "\n";
    return rep.ok && conv ? 0 : 1;
}

int cmd_gen_graph(long n, std::uint64_t seed, const std::string& klass, const std::string& out) {
    auto g = gen_graph(n, seed, instance_class_from_string(klass));
    write_file(out, graph_to_json(g));
    std::cout << "instance: |V|=" << g.vertex_count() << " |E|=" << g.edge_count() << "\n";
    return 0;
}

int cmd_validate(const std::string& gfile) {
    auto g = graph_from_json(read_file(gfile));
    auto inst = make_instance(g);
    std::cout << "valid: outer=" << inst.outer_vertices.size()
              << " faces=" << inst.faces.size() << " inner components=" << inst.cycle_trees.size()
              << "\n";
    for (auto& ct : inst.cycle_trees)
        std::cout << "  face of size " << ct.face.size() << " hosts " << ct.inner.size()
                  << (ct.inner_is_tree ? " (tree)" : " (general)") << "\n";
    return 0;
}

int cmd_label(const std::string& gfile, bool dump) {
    auto inst = make_instance(graph_from_json(read_file(gfile)));
    auto ps = build_point_set(std::max<long>(3, inst.g.vertex_count()), PointSetMode::sqrt_mode,
                              true);
    auto res = run_pipeline(inst, ps);
    if (dump) {
        std::cout << "{\n  \"labels\": {";
        bool first = true;
        for (auto& [v, l] : res.label) {
            std::cout << (first ? "" : ", ") << "\"" << v << "\": " << l;
            first = false;
        }
        std::cout << "},\n  \"categories\": {";
        first = true;
        for (auto& [v, c] : res.category) {
            std::cout << (first ? "" : ", ") << "\"" << v << "\": \"" << to_string(c) << "\"";
            first = false;
        }
        std::cout << "}\n}\n";
    } else {
        std::cout << "labeled " << res.label.size() << " vertices\n";
    }
    return 0;
}

int cmd_triangulate(const std::string& gfile, const std::string& dump_editlog) {
    auto inst = make_instance(graph_from_json(read_file(gfile)));
    auto ps = build_point_set(std::max<long>(3, inst.g.vertex_count()), PointSetMode::sqrt_mode,
                              true);
    auto res = run_pipeline(inst, ps);
    std::cout << "edit log: " << res.log.ops.size() << " ops, E_P=" << res.log.petal_edges.size()
              << " E_B=" << res.log.bigface_edges.size()
              << " triangulation=" << res.log.triangulation_edges.size()
              << " components=" << res.components.size() << "\n";
    if (!dump_editlog.empty()) {
        std::string s = "{\n  \"petal_edges\": [";
        auto edges = [&](const std::vector<std::pair<int, int>>& es) {
            std::string r;
            for (size_t i = 0; i < es.size(); ++i)
                r += (i ? ", " : "") + std::string("[") + std::to_string(es[i].first) + "," +
                     std::to_string(es[i].second) + "]";
            return r;
        };
        s += edges(res.log.petal_edges) + "],\n  \"bigface_edges\": [" +
             edges(res.log.bigface_edges) + "],\n  \"triangulation_edges\": [" +
             edges(res.log.triangulation_edges) + "]\n}\n";
        write_file(dump_editlog, s);
    }
    return 0;
}

int cmd_embed(const std::string& gfile, const std::string& pfile, const std::string& out,
              bool trace_blocks) {
    auto inst = make_instance(graph_from_json(read_file(gfile)));
    auto ps = pointset_from_json(read_file(pfile));
    auto res = run_pipeline(inst, ps);
    res.drawing.points_file = pfile;
    write_file(out, drawing_to_json(res.drawing));
    std::cout << "drawing: " << res.drawing.assignment.size() << " vertices placed\n";
    if (trace_blocks) {
        for (auto& blk : res.blocks) {
            std::cout << "block b=" << blk.b_vertex << " |N_B|=" << blk.nb.size()
                      << " opener=" << blk.opener << " closer=" << blk.closer
                      << (blk.promoted ? " promoted" : "")
                      << (blk.root_block ? " root-block" : "") << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& gfile, const std::string& dfile, const std::string& pfile,
               bool as_json) {
    auto g = graph_from_json(read_file(gfile));
    auto d = drawing_from_json(read_file(dfile));
    auto ps = pointset_from_json(read_file(pfile));
    auto cert = verify_drawing(g, d, ps);
    if (as_json) {
        std::cout << "{\"pass\": " << (cert.pass() ? "true" : "false") << ", \"crossings\": [";
        for (size_t i = 0; i < cert.crossings.size(); ++i) {
            auto& c = cert.crossings[i];
            std::cout << (i ? ", " : "") << "[" << c.a1 << "," << c.b1 << "," << c.a2 << ","
                      << c.b2 << ",\"" << to_string(c.rel) << "\"]";
        }
        std::cout << "]}\n";
    } else {
        std::cout << cert.summary() << "\n";
    }
    return cert.pass() ? 0 : 1;
}

int cmd_render(const std::string& gfile, const std::string& dfile, const std::string& pfile,
               const std::string& out, bool petals, bool labels) {
    auto g = graph_from_json(read_file(gfile));
    auto d = drawing_from_json(read_file(dfile));
    auto ps = pointset_from_json(read_file(pfile));
    RenderOptions opt;
    opt.show_petals = petals;
    opt.show_labels = labels;
    write_file(out, render_svg(g, d, ps, opt));
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_bench(const std::string& ns, const std::string& modes, const std::string& seeds,
              const std::string& out) {
    auto split_longs = [](const std::string& s) {
        std::vector<long> v;
        std::string cur;
        for (char c : s + ",") {
            if (c == ',') {
                if (!cur.empty()) v.push_back(std::stol(cur));
                cur.clear();
            } else
                cur += c;
        }
        return v;
    };
    std::vector<std::string> mode_list;
    {
        std::string cur;
        for (char c : modes + ",") {
            if (c == ',') {
                if (!cur.empty()) mode_list.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
    }
    std::string csv = "n,mode,seed,instance_size,pointset_size,build_ms,pipeline_ms,verify_ms,"
                      "crossings\n";
    for (long n : split_longs(ns)) {
        for (auto& mode : mode_list) {
            auto t0 = std::chrono::steady_clock::now();
            auto ps = build_point_set(n, pointset_mode_from_string(mode), true);
            double build = ms_since(t0);
            for (long seed : split_longs(seeds)) {
                auto g = gen_graph(n, (std::uint64_t)seed, InstanceClass::general);
                auto inst = make_instance(g);
                t0 = std::chrono::steady_clock::now();
                auto res = run_pipeline(inst, ps);
                double pipe = ms_since(t0);
                t0 = std::chrono::steady_clock::now();
                auto cert = verify_drawing(inst.g, res.drawing, ps);
                double ver = ms_since(t0);
                csv += std::to_string(n) + "," + mode + "," + std::to_string(seed) + "," +
                       std::to_string(inst.g.vertex_count()) + "," +
                       std::to_string(ps.total_point_count()) + "," + std::to_string(build) +
                       "," + std::to_string(pipe) + "," + std::to_string(ver) + "," +
                       std::to_string(cert.crossings.size()) + "\n";
            }
        }
    }
    if (out.empty()) std::cout << csv;
    else
        write_file(out, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal point sets for 2-outerplanar graphs"};
    app.require_subcommand(1);

    long n = 16;
    std::uint64_t seed = 1;
    std::string mode = "sqrt", klass = "forest-inner";
    std::string gfile, pfile, dfile, out, dump_editlog, ns = "16,64", modes = "sqrt",
                                                        seeds = "1,2,3";
    bool petals = true, exhaustive = false, dump = false, trace_blocks = false, as_json = false,
         labels = false;

    auto* gp = app.add_subcommand("gen-points", "construct a universal point set");
    gp->add_option("--n", n)->required();
    gp->add_option("--mode", mode)->check(CLI::IsMember({"sqrt", "xi"}));
    gp->add_flag("--petals,!--no-petals", petals);
    gp->add_option("--out", out)->required();

    auto* cp = app.add_subcommand("check-points", "verify visibility and convexity properties");
    cp->add_option("file", pfile)->required();
    cp->add_flag("--exhaustive", exhaustive);

    auto* gg = app.add_subcommand("gen-graph", "generate a 2-outerplanar instance");
    gg->add_option("--n", n)->required();
    gg->add_option("--seed", seed);
    gg->add_option("--class", klass)
        ->check(CLI::IsMember({"cycle-tree-triangulated", "forest-inner", "general"}));
    gg->add_option("--out", out)->required();

    auto* va = app.add_subcommand("validate", "validate an instance file");
    va->add_option("-g", gfile)->required();

    auto* lb = app.add_subcommand("label", "run the labeling and dump it");
    lb->add_option("-g", gfile)->required();
    lb->add_flag("--dump", dump);

    auto* tr = app.add_subcommand("triangulate", "run the surgery and report the edit log");
    tr->add_option("-g", gfile)->required();
    tr->add_option("--dump-editlog", dump_editlog);

    auto* em = app.add_subcommand("embed", "embed an instance on a point set");
    em->add_option("-g", gfile)->required();
    em->add_option("-p", pfile)->required();
    em->add_option("-o", out)->required();
    em->add_flag("--trace-blocks", trace_blocks);

    auto* ve = app.add_subcommand("verify", "verify a drawing (exact arithmetic)");
    ve->add_option("-g", gfile)->required();
    ve->add_option("-d", dfile)->required();
    ve->add_option("-p", pfile)->required();
    ve->add_flag("--json", as_json);

    auto* re = app.add_subcommand("render", "render a drawing to SVG");
    re->add_option("-g", gfile)->required();
    re->add_option("-d", dfile)->required();
    re->add_option("-p", pfile)->required();
    re->add_option("-o", out)->required();
    re->add_flag("--petals", petals);
    re->add_flag("--labels", labels);

    auto* be = app.add_subcommand("bench", "size and timing report");
    be->add_option("--ns", ns);
    be->add_option("--modes", modes);
    be->add_option("--seeds", seeds);
    be->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gp->parsed()) return cmd_gen_points(n, mode, petals, out);
        if (cp->parsed()) return cmd_check_points(pfile, exhaustive);
        if (gg->parsed()) return cmd_gen_graph(n, seed, klass, out);
        if (va->parsed()) return cmd_validate(gfile);
        if (lb->parsed()) return cmd_label(gfile, dump);
        if (tr->parsed()) return cmd_triangulate(gfile, dump_editlog);
        if (em->parsed()) return cmd_embed(gfile, pfile, out, trace_blocks);
        if (ve->parsed()) return cmd_verify(gfile, dfile, pfile, as_json);
        if (re->parsed()) return cmd_render(gfile, dfile, pfile, out, petals, labels);
        if (be->parsed()) return cmd_bench(ns, modes, seeds, out);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
