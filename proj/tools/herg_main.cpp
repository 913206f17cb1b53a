#include <CLI11.hpp>

#include <iostream>

#include "herg/duality.hpp"
#include "herg/gen.hpp"
#include "herg/invariants.hpp"
#include "herg/io.hpp"
#include "herg/isomorphism.hpp"
#include "herg/topology.hpp"
#include "herg/verify.hpp"

namespace {

int cmd_info(const std::string& file) {
    herg::Herg g = herg::parse_file(file);
    herg::FaceReport f = herg::trace_boundary(g);
    herg::EmbeddingSignature sig = herg::embedding_signature(g);
    herg::Classification cls = herg::classify(g);
    int k = herg::components(g).k;
    std::cout << "v = " << g.v() << "\n"
              << "e = " << g.e() << "\n"
              << "h = " << g.h() << "\n"
              << "k = " << k << "\n"
              << "f_int = " << f.f_int << "\n"
              << "f_ext = " << f.f_ext << "\n"
              << "C_ext = " << f.c_ext << "\n"
              << "V_int = " << cls.v_int() << "\n"
              << "V_ext = " << cls.v_ext() << "\n"
              << "chi = " << sig.chi << "\n"
              << "gamma = " << sig.genus << "\n"
              << "orientable = " << (sig.orientable ? "true" : "false") << "\n"
              << "punctures_proper = " << sig.punctures_proper << "\n"
              << "punctures_hproper = " << sig.punctures_hproper << "\n";
    return 0;
}

int cmd_dual(const std::string& file, const std::string& out) {
    herg::Herg g = herg::parse_file(file);
    herg::Herg gd = herg::dual(g).first;
    std::string text = herg::serialize(gd);
    if (out.empty())
        std::cout << text;
    else
        herg::write_file(out, text);
    return 0;
}

int cmd_poly(const std::string& file, const std::string& kind_name, const std::string& subst) {
    herg::Herg g = herg::parse_file(file);
    herg::InvariantKind kind;
    if (kind_name == "RCut") kind = herg::InvariantKind::RCut;
    else if (kind_name == "RSpan") kind = herg::InvariantKind::RSpan;
    else if (kind_name == "PSpan") kind = herg::InvariantKind::PSpan;
    else if (kind_name == "PCut") kind = herg::InvariantKind::PCut;
    else if (kind_name == "M") kind = herg::InvariantKind::M;
    else throw CLI::ValidationError("--kind", "expected RCut|RSpan|PSpan|PCut|M");

    herg::Poly p = herg::invariant(g, kind);
    if (!subst.empty()) {
        if (subst != "duality") throw CLI::ValidationError("--subst", "only \"duality\" is supported");
        if (kind != herg::InvariantKind::RCut && kind != herg::InvariantKind::RSpan)
            throw CLI::ValidationError("--subst", "duality substitution applies to RCut/RSpan");
        std::cout << herg::duality_subst(p).str() << "\n";
        return 0;
    }
    if (kind == herg::InvariantKind::PCut)
        std::cout << herg::QuotientPoly(p).str() << "\n";
    else
        std::cout << p.str() << "\n";
    return 0;
}

int cmd_iso(const std::string& f1, const std::string& f2, bool reflect) {
    herg::Herg a = herg::parse_file(f1);
    herg::Herg b = herg::parse_file(f2);
    auto bij = herg::isomorphic(a, b, reflect);
    if (!bij) {
        std::cout << "not isomorphic\n";
        return 1;
    }
    std::cout << "isomorphic\n";
    for (const auto& [d1, d2] : *bij) std::cout << d1 << " -> " << d2 << "\n";
    return 0;
}

int cmd_gen(int v, int e, int h, std::uint64_t seed, bool twists, const std::string& out) {
    herg::Herg g = herg::gen(v, e, h, seed, twists);
    std::string text = herg::serialize(g);
    if (out.empty())
        std::cout << text;
    else
        herg::write_file(out, text);
    return 0;
}

int cmd_verify(const std::string& file, bool use_corpus, int max_edges, std::uint64_t seed,
               const std::string& suite_name) {
    auto suite = herg::suite_from_name(suite_name);
    if (!suite) throw CLI::ValidationError("--suite", "unknown suite " + suite_name);

    std::vector<herg::NamedHerg> graphs;
    if (use_corpus) {
        graphs = herg::corpus(seed, max_edges);
        std::cout << "corpus: " << graphs.size() << " graphs (seed " << seed << ", max edges "
                  << max_edges << ")\n";
    } else {
        graphs.push_back({file, herg::parse_file(file)});
    }

    herg::SuiteReport rep = herg::run_suite(*suite, graphs);
    for (const auto& line : rep.lines) {
        if (line.failures.empty()) {
            std::cout << "PASS " << line.identity << " (checked " << line.checked << ")\n";
        } else {
            std::cout << "FAIL " << line.identity << " (" << line.failures.size() << " of "
                      << line.checked << " failed)\n";
            std::size_t shown = 0;
            for (const auto& f : line.failures) {
                std::cout << "     " << f << "\n";
                if (++shown == 5) {
                    if (line.failures.size() > shown)
                        std::cout << "     ... " << (line.failures.size() - shown) << " more\n";
                    break;
                }
            }
        }
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"half-edge ribbon graph toolkit"};
    app.require_subcommand(1);

    std::string file, file2, out, kind, subst, suite = "all";
    bool reflect = false, twists = false, use_corpus = false;
    int gv = 0, ge = 0, gh = 0, max_edges = 6;
    std::uint64_t seed = 1;

    CLI::App* info = app.add_subcommand("info", "print topological statistics");
    info->add_option("file", file)->required();

    CLI::App* dualc = app.add_subcommand("dual", "write the geometric dual");
    dualc->add_option("file", file)->required();
    dualc->add_option("-o,--out", out);

    CLI::App* poly = app.add_subcommand("poly", "evaluate a polynomial invariant");
    poly->add_option("file", file)->required();
    poly->add_option("--kind", kind, "RCut|RSpan|PSpan|PCut|M")->required();
    poly->add_option("--subst", subst, "duality");

    CLI::App* iso = app.add_subcommand("iso", "test isomorphism of two graphs");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();
    iso->add_flag("--reflect", reflect);

    CLI::App* genc = app.add_subcommand("gen", "generate a seeded random graph");
    genc->add_option("--vertices", gv)->required();
    genc->add_option("--edges", ge)->required();
    genc->add_option("--halves", gh)->required();
    genc->add_option("--seed", seed)->required();
    genc->add_flag("--twists", twists);
    genc->add_option("-o,--out", out);

    CLI::App* verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("file", file);
    verify->add_flag("--corpus", use_corpus);
    verify->add_option("--max-edges", max_edges);
    verify->add_option("--seed", seed);
    verify->add_option("--suite", suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return cmd_info(file);
        if (dualc->parsed()) return cmd_dual(file, out);
        if (poly->parsed()) return cmd_poly(file, kind, subst);
        if (iso->parsed()) return cmd_iso(file, file2, reflect);
        if (genc->parsed()) return cmd_gen(gv, ge, gh, seed, twists, out);
        if (verify->parsed()) {
            if (!use_corpus && file.empty())
                throw herg::HergError("verify: give a FILE or --corpus");
            return cmd_verify(file, use_corpus, max_edges, seed, suite);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const herg::HergError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
