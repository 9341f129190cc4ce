// Command-line front end: classification queries, realizable-pair sets,
// degree-system solving, Maslov indices and the summary tables.
//
// Exit codes: 0 success, 2 argument validation failure, 1 internal error.

#include "totreal/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace totreal;

Surface parse_surface(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--surface", "expected or:<genus> or nonor:<genus>");
    std::string kind = text.substr(0, colon);
    int genus = 0;
    try {
        genus = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--surface", "genus must be an integer");
    }
    bool orientable;
    if (kind == "or") orientable = true;
    else if (kind == "nonor") orientable = false;
    else throw CLI::ValidationError("--surface", "expected or:<genus> or nonor:<genus>");
    try {
        return make_surface(orientable, genus);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--surface", e.what());
    }
}

Target parse_target(const std::string& text) {
    if (text == "C2") return make_target(TargetKind::C2);
    if (text == "CP2") return make_target(TargetKind::CP2);
    if (text == "CP1xCP1") return make_target(TargetKind::CP1xCP1);
    if (text.rfind("CP2#", 0) == 0) {
        int m = 0;
        try {
            m = std::stoi(text.substr(4));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--target", "blow-up count must be an integer");
        }
        try {
            return make_target(TargetKind::CP2Blowup, m);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("--target", e.what());
        }
    }
    throw CLI::ValidationError("--target", "expected C2 | CP2 | CP1xCP1 | CP2#<m>");
}

std::string surface_name(const Surface& s) {
    if (s.orientable) {
        if (s.genus == 0) return "S^2";
        if (s.genus == 1) return "T^2";
        return "orientable genus " + std::to_string(s.genus);
    }
    if (s.genus == 1) return "RP^2";
    if (s.genus == 2) return "K^2";
    return "nonorientable genus " + std::to_string(s.genus);
}

std::string target_name(const Target& t) {
    switch (t.kind) {
        case TargetKind::C2: return "C^2";
        case TargetKind::CP2: return "CP^2";
        case TargetKind::CP1xCP1: return "CP^1 x CP^1";
        case TargetKind::CP2Blowup: return "CP^2 # " + std::to_string(t.m);
    }
    return "?";
}

int run_classify(const Surface& s, const Target& t, bool as_json) {
    if (as_json) {
        std::cout << classify_report(s, t).dump() << "\n";
        return 0;
    }
    Existence im = immersion_exists(s, t);
    Existence em = embedding_exists(s, t);
    std::cout << surface_name(s) << " -> " << target_name(t) << "\n";
    std::cout << "  immersion: " << decision_name(im.value) << " (" << im.reason << ")\n";
    std::cout << "  embedding: " << decision_name(em.value) << " (" << em.reason << ")\n";
    return 0;
}

int run_zset(const Surface& s, const Target& t, bool as_json) {
    ZSet z = z_set(s, t);
    if (as_json) {
        std::cout << to_json(z).dump() << "\n";
        return 0;
    }
    std::cout << "realizable pairs for " << surface_name(s) << " -> " << target_name(t) << "\n";
    if (!z.finite) {
        std::cout << "  infinite set; descriptor:\n  " << to_json(z).dump() << "\n";
        return 0;
    }
    for (const IndexDegreePair& p : z.pairs) {
        std::cout << "  index (";
        for (std::size_t i = 0; i < p.index.coords.size(); ++i)
            std::cout << (i ? "," : "") << p.index.coords[i].value_ll();
        std::cout << ")  degree (";
        for (std::size_t i = 0; i < p.degree.c.size(); ++i)
            std::cout << (i ? "," : "") << p.degree.c[i];
        std::cout << ")\n";
    }
    std::cout << "  total " << z.pairs.size() << " pairs\n";
    return 0;
}

int run_dioph(int m, long long chi, long long dmin, long long dmax, bool families,
              bool as_json) {
    DiophInstance inst = make_instance(m, chi);
    auto sols = solve_all(inst, dmin, dmax);
    if (as_json) {
        for (const DiophSolution& s : sols) std::cout << to_json(s).dump() << "\n";
    } else {
        for (const DiophSolution& s : sols) {
            std::cout << "d=" << s.d << "  q=(";
            for (std::size_t i = 0; i < s.q.size(); ++i) std::cout << (i ? "," : "") << s.q[i];
            std::cout << ")  s=" << s.s << " r=" << s.r << " ell=" << s.ell << "\n";
        }
        std::cout << sols.size() << " solution(s)\n";
    }
    if (families) {
        // Closed-form families matching this (m, chi), evaluated per solution.
        if (m == 9 && chi == 2) {
            for (long long d = dmin; d <= dmax; ++d) {
                json j = to_json(ppsss_formula(d));
                j["family"] = "nine_point_sphere";
                std::cout << j.dump() << "\n";
            }
        }
        if (chi == 0) {
            json j = to_json(xmpls_family(SolutionFamily::ZeroTuple, m).sol);
            j["family"] = "zero_tuple";
            std::cout << j.dump() << "\n";
        }
        if (m % 3 == 0 && chi == (3 - m / 3) * (m / 3) && m >= 3) {
            json j = to_json(xmpls_family(SolutionFamily::AllOnes, m / 3).sol);
            j["family"] = "all_ones";
            std::cout << j.dump() << "\n";
        }
        if (chi == 2 && m % 2 == 0 && m >= 2) {
            json j = to_json(xmpls_family(SolutionFamily::SphereChain, (m - 2) / 2).sol);
            j["family"] = "sphere_chain";
            std::cout << j.dump() << "\n";
        }
    }
    return 0;
}

int run_maslov(int k, int l, double a, const std::string& mode, int grid, bool as_json) {
    FamilySpec fam = make_family(k, l, a);
    SurfaceMode sm;
    if (mode == "torus") sm = SurfaceMode::Torus;
    else if (mode == "klein") sm = SurfaceMode::Klein;
    else throw CLI::ValidationError("--mode", "expected torus or klein");
    MaslovResult res = maslov_index(ImmersionSpec{fam}, sm, grid);
    if (as_json) {
        std::cout << to_json(res).dump() << "\n";
        return 0;
    }
    std::cout << "Maslov index (" << res.index.coords[0].value_ll() << ", "
              << res.index.coords[1].value_ll() << ")  residual " << res.residual_max
              << "  min|J| " << res.min_abs_j << "\n";
    return 0;
}

int run_table(int which, bool as_json) {
    if (which == 1) {
        Table1 t = table1();
        if (as_json) {
            std::cout << to_json(t).dump() << "\n";
            return 0;
        }
        const char* columns[] = {"CP2", "CP2#m", "CP1xCP1", "C2"};
        std::cout << "embeddable orientable surfaces:\n";
        for (int c = 0; c < 4; ++c)
            std::cout << "  " << columns[c] << ": " << t.orientable_embeddable[static_cast<std::size_t>(c)] << "\n";
        std::cout << "embeddability condition, nonorientable surfaces:\n";
        for (int c = 0; c < 4; ++c)
            std::cout << "  " << columns[c] << ": " << t.nonorientable_embeddable[static_cast<std::size_t>(c)] << "\n";
        std::cout << "immersion existence:\n";
        for (int c = 0; c < 4; ++c)
            std::cout << "  " << columns[c] << ": " << t.immersion[static_cast<std::size_t>(c)] << "\n";
        return 0;
    }
    if (which == 2) {
        Table2 t = table2();
        if (as_json) {
            std::cout << to_json(t).dump() << "\n";
            return 0;
        }
        const char* columns[] = {"S^2", "RP^2", "K^2", "K^2#RP^2", "K^2#K^2"};
        for (const auto& row : t.cells) {
            for (int c = 0; c < Table2::kCols; ++c) {
                const Table2Cell& cell = row[static_cast<std::size_t>(c)];
                std::ostringstream os;
                if (cell.present) os << "(" << cell.value.d << "," << cell.value.s << ")";
                else os << "-";
                std::cout << columns[c] << "=" << os.str() << (c + 1 < Table2::kCols ? "  " : "\n");
            }
        }
        return 0;
    }
    throw CLI::ValidationError("--which", "expected 1 or 2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of totally real immersions of closed surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    long long seed = 0;
    app.add_option("--seed", seed, "reserved; no randomized behavior");

    std::string surface_text, target_text;
    auto* classify = app.add_subcommand("classify", "immersion/embedding existence");
    classify->add_option("--surface", surface_text, "or:<genus> | nonor:<genus>")->required();
    classify->add_option("--target", target_text, "C2 | CP2 | CP1xCP1 | CP2#<m>")->required();

    auto* zset = app.add_subcommand("zset", "realizable index-degree pairs");
    zset->add_option("--surface", surface_text, "or:<genus> | nonor:<genus>")->required();
    zset->add_option("--target", target_text, "C2 | CP2 | CP1xCP1 | CP2#<m>")->required();

    int m = 1;
    long long chi = 0, dmin = 0, dmax = 0;
    bool families = false;
    auto* dioph = app.add_subcommand("dioph", "solve the degree system");
    dioph->add_option("--m", m, "number of exceptional components")->required();
    dioph->add_option("--chi", chi, "Euler characteristic")->required();
    dioph->add_option("--dmin", dmin, "lower degree bound")->required();
    dioph->add_option("--dmax", dmax, "upper degree bound")->required();
    dioph->add_flag("--families", families, "also print matching closed-form families");

    int k = 0, l = 1, grid = 256;
    double a = 10.0;
    std::string mode = "torus";
    auto* maslov = app.add_subcommand("maslov", "Maslov index of the built-in family");
    maslov->add_option("--k", k, "rotation count of x")->required();
    maslov->add_option("--l", l, "rotation count of y and h")->required();
    maslov->add_option("--a", a, "amplitude");
    maslov->add_option("--mode", mode, "torus | klein");
    maslov->add_option("--grid", grid, "grid resolution");

    int which = 1;
    auto* table = app.add_subcommand("table", "summary tables");
    table->add_option("--which", which, "1 (existence) or 2 (total mod-2 degrees)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool as_json = format == "json";
    try {
        if (classify->parsed())
            return run_classify(parse_surface(surface_text), parse_target(target_text), as_json);
        if (zset->parsed())
            return run_zset(parse_surface(surface_text), parse_target(target_text), as_json);
        if (dioph->parsed()) return run_dioph(m, chi, dmin, dmax, families, as_json);
        if (maslov->parsed()) return run_maslov(k, l, a, mode, grid, as_json);
        if (table->parsed()) return run_table(which, as_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
