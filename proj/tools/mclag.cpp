// mclag: exact integer homology and coinvariant computations for the
// symplectic/Lagrangian module family, with per-lemma verification jobs.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mclag/json_io.hpp"
#include "mclag/mclag.hpp"

namespace {

using namespace mclag;

int run_verify(const std::string& job, int genus, const std::string& format,
               const std::string& expect_file, int max_genus) {
    VerifyOptions opt;
    opt.max_genus = max_genus;
    opt.expected = ExpectedTable::standard(max_genus);
    if (!expect_file.empty()) {
        std::ifstream in(expect_file);
        if (!in) {
            std::cerr << "cannot open expect file: " << expect_file << "\n";
            return 2;
        }
        json j;
        in >> j;
        opt.expected = expected_table_from_json(j);
    }

    std::vector<std::string> jobs;
    if (job == "all") {
        for (const std::string& id : job_ids())
            if (id != "torelli-coinv-sp" || genus == 3) jobs.push_back(id);
    } else {
        jobs.push_back(job);
    }

    bool all_pass = true;
    json out = json::array();
    for (const std::string& id : jobs) {
        VerificationReport rep = verify(id, genus, opt);
        all_pass = all_pass && rep.pass;
        if (format == "json") out.push_back(report_to_json(rep));
        else std::cout << render_markdown(rep) << "\n";
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int run_homology(const std::string& group, int genus, const std::string& coeff, int degree,
                 const std::string& format) {
    if (group != "sl") {
        std::cerr << "only --group sl is available\n";
        return 2;
    }
    GroupPresentation pres = sl_presentation(genus);
    IntRepresentation rep =
        coeff == "s2l" ? s2l_representation(genus) : trivial_representation(pres);
    FgAbelianGroup h = degree == 0 ? homology_h0(pres, rep) : homology_h1(pres, rep);
    if (format == "md")
        std::cout << "H" << degree << "(SL(" << genus << ",Z); " << coeff << ") = " << h << "\n";
    else
        std::cout << group_to_json(h).dump() << "\n";
    return 0;
}

int run_coinv(const std::string& module, int genus, const std::string& acting,
              const std::string& from_json, const std::string& format) {
    FgAbelianGroup result;
    std::string description;

    if (!from_json.empty()) {
        std::ifstream in(from_json);
        if (!in) {
            std::cerr << "cannot open action module file: " << from_json << "\n";
            return 2;
        }
        json j;
        in >> j;
        result = coinvariants(action_module_from_json(j));
        description = "coinvariants of " + from_json;
    } else if (module == "wedge2-s2l") {
        std::vector<IntMatrix> elements;
        if (acting == "sl") elements = sl_generator_matrices(genus);
        else if (acting == "gl" || acting == "ursp") {
            // urSp acts on S^2 L through its upper-left block, so the acting
            // set reduces to the GL generators.
            elements = gl_generator_matrices(genus);
        } else if (acting == "s2l") {
            // S^2 L sits in the kernel of that action: nothing to quotient by.
        } else {
            std::cerr << "acting set '" << acting << "' does not act on wedge2-s2l\n";
            return 2;
        }
        result = coinvariants(mclag::detail::wedge2_s2l_action_module(genus, elements));
        description = "(wedge^2 S^2L)_" + acting;
    } else if (module == "torelli-h1") {
        std::vector<SpMatrix> elements;
        if (acting == "s2l") elements = s2l_transvection_generators(genus);
        else if (acting == "ursp") elements = ursp_generators(genus);
        else if (acting == "ursp-plus-remark") {
            if (genus != 3) {
                std::cerr << "ursp-plus-remark is a genus-3 acting set\n";
                return 2;
            }
            elements = ursp_generators(genus);
            elements.push_back(sp6_extra_transvection());
        } else if (acting == "gl") {
            for (const IntMatrix& a : gl_generator_matrices(genus)) elements.push_back(embed_gl(a));
        } else if (acting == "sl") {
            for (const IntMatrix& a : sl_generator_matrices(genus)) elements.push_back(embed_gl(a));
        } else {
            std::cerr << "unknown acting set: " << acting << "\n";
            return 2;
        }
        result = coinvariants(torelli_action_module(genus, elements));
        description = "H1(Torelli)_" + acting;
    } else {
        std::cerr << "unknown module: " << module << "\n";
        return 2;
    }

    if (format == "md") std::cout << description << " = " << result << "\n";
    else std::cout << group_to_json(result).dump() << "\n";
    return 0;
}

int run_dump_complex(int genus, const std::string& out_dir) {
    IntRepresentation rep = s2l_representation(genus);
    LocalChainComplex cc = chain_boundaries(rep.presentation, rep);
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    const std::string stem = "sl" + std::to_string(genus) + "_s2l";
    std::ofstream(dir / (stem + "_d1.txt")) << cc.d1.to_text();
    std::ofstream(dir / (stem + "_d2.txt")) << cc.d2.to_text();
    std::cout << "wrote " << (dir / (stem + "_d1.txt")).string() << " ("
              << cc.d1.rows() << "x" << cc.d1.cols() << ") and "
              << (dir / (stem + "_d2.txt")).string() << " (" << cc.d2.rows() << "x"
              << cc.d2.cols() << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer homology of Lagrangian mapping class group quotients"};
    app.require_subcommand(1);

    std::string job, format = "md", expect_file;
    int genus = 3, max_genus = 6;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification job");
    verify_cmd->add_option("--job", job, "job id or 'all'")->required();
    verify_cmd->add_option("--genus", genus, "genus (3..max-genus)")->required();
    verify_cmd->add_option("--format", format, "md or json")
        ->check(CLI::IsMember({"md", "json"}));
    verify_cmd->add_option("--expect-file", expect_file, "JSON expected-values override");
    verify_cmd->add_option("--max-genus", max_genus, "genus cap (default 6)");

    std::string group = "sl", coeff = "s2l";
    int degree = 1;
    auto* hom_cmd = app.add_subcommand("homology", "presentation homology with local coefficients");
    hom_cmd->add_option("--group", group, "sl")->check(CLI::IsMember({"sl"}));
    hom_cmd->add_option("--genus", genus, "genus >= 3")->required();
    hom_cmd->add_option("--coeff", coeff, "trivial or s2l")
        ->check(CLI::IsMember({"trivial", "s2l"}));
    hom_cmd->add_option("--degree", degree, "0 or 1")->check(CLI::IsMember({"0", "1"}));
    hom_cmd->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

    std::string module = "torelli-h1", acting = "s2l", from_json;
    auto* coinv_cmd = app.add_subcommand("coinv", "coinvariants of a module under an acting set");
    coinv_cmd->add_option("--module", module, "wedge2-s2l or torelli-h1")
        ->check(CLI::IsMember({"wedge2-s2l", "torelli-h1"}));
    coinv_cmd->add_option("--genus", genus, "genus >= 3");
    coinv_cmd->add_option("--acting", acting, "s2l, gl, sl, ursp or ursp-plus-remark");
    coinv_cmd->add_option("--from-json", from_json, "ActionModule JSON file (overrides --module)");
    coinv_cmd->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

    std::string out_dir = ".";
    auto* dump_cmd = app.add_subcommand("dump-complex", "write d1/d2 in the matrix text format");
    dump_cmd->add_option("--genus", genus, "genus >= 3")->required();
    dump_cmd->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify_cmd->parsed()) return run_verify(job, genus, format, expect_file, max_genus);
        if (hom_cmd->parsed()) return run_homology(group, genus, coeff, degree, format);
        if (coinv_cmd->parsed()) return run_coinv(module, genus, acting, from_json, format);
        if (dump_cmd->parsed()) return run_dump_complex(genus, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
