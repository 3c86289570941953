// lieobs: Lie algebra coupling obstruction calculator.
//
// Exit codes: 0 success, 1 invalid input (validation failure), 2 internal
// mathematical invariant violation, 3 I/O or parse error.

#include "lieobs/json_io.hpp"
#include "lieobs/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace lieobs;

struct OutputOptions {
    std::string path;   // empty = stdout
    bool text = false;
};

void emit(const OutputOptions& opts, const json& payload, const std::string& text_form) {
    std::string body = opts.text ? text_form : payload.dump(2) + "\n";
    if (opts.path.empty())
        std::cout << body;
    else
        write_text_file(opts.path, body);
}

std::string class_text(const Vec& coords) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << to_string(coords[i]);
    os << ")";
    return os.str();
}

int cmd_analyze(const std::string& file, const OutputOptions& opts) {
    const LieAlgebra g = parse_algebra(load_json_file(file));
    const auto report = g.validate();
    if (!report.ok())
        throw ValidationError("invalid algebra:\n" + report.describe());
    const DerivationSpaces spaces = derivation_spaces(g);
    const std::size_t center_dim = g.center().dim();

    json j;
    j["dim"] = g.dim();
    j["valid"] = true;
    j["center_dim"] = center_dim;
    j["der_dim"] = spaces.der.dim();
    j["inn_dim"] = spaces.inn.dim();
    j["out_dim"] = spaces.out_dim;
    j["out_brackets"] = algebra_to_json(spaces.out_algebra)["brackets"];

    std::ostringstream text;
    text << "algebra of dim " << g.dim() << ": valid\n"
         << "center " << center_dim << ", der " << spaces.der.dim() << ", inn "
         << spaces.inn.dim() << ", out " << spaces.out_dim << "\n";
    emit(opts, j, text.str());
    return 0;
}

int cmd_coupling_check(const std::string& file, const OutputOptions& opts) {
    const Coupling c = parse_coupling(load_json_file(file));
    json j;
    j["valid"] = true;
    j["base_dim"] = c.base.dim();
    j["fiber_dim"] = c.fiber.dim();
    j["center_dim"] = c.fiber.center().dim();
    j["out_dim"] = c.spaces.out_dim;

    std::ostringstream text;
    text << "coupling valid: base dim " << c.base.dim() << ", fiber dim " << c.fiber.dim()
         << ", center dim " << c.fiber.center().dim() << "\n";
    emit(opts, j, text.str());
    return 0;
}

json obstruction_report(const ObstructionResult& obs) {
    json j;
    j["center_dim"] = obs.zmodule.module_dim;
    j["betti3"] = betti_number(obs.zmodule, 3);
    j["cocycle"] = cochain_to_json(obs.cocycle);
    j["class"] = vec_to_json(obs.cls.coordinates);
    j["trivial"] = obs.trivial;
    return j;
}

int cmd_obstruction(const std::string& file, const OutputOptions& opts, bool inject_fault) {
    const Coupling c = parse_coupling(load_json_file(file));
    const ObstructionResult obs = obstruction_class(c);
    if (inject_fault)
        throw InternalCheckError("fault injection requested via --debug-fail-internal");

    std::ostringstream text;
    text << "obstruction class " << class_text(obs.cls.coordinates) << " in H^3, "
         << (obs.trivial ? "trivial" : "nontrivial") << "\n";
    emit(opts, obstruction_report(obs), text.str());
    return 0;
}

int cmd_extend(const std::string& file, const std::string& out_path) {
    const Coupling c = parse_coupling(load_json_file(file));
    const auto extension = construct_extension(c);
    json status;
    if (!extension) {
        const ObstructionResult obs = obstruction_class(c);
        status["extended"] = false;
        status["class"] = vec_to_json(obs.cls.coordinates);
        std::cout << status.dump(2) << "\n";
        return 0;
    }
    json j;
    j["algebra"] = algebra_to_json(extension->total);
    j["anchor"] = matrix_to_json(extension->anchor.matrix);
    write_text_file(out_path, j.dump(2) + "\n");
    status["extended"] = true;
    std::cout << status.dump(2) << "\n";
    return 0;
}

int cmd_combine(const std::string& file1, const std::string& file2, const std::string& alpha,
                const std::string& beta, const OutputOptions& opts) {
    const CoupElement c1 = parse_coup_element(load_json_file(file1));
    const CoupElement c2 = parse_coup_element(load_json_file(file2));
    const Rational a = parse_rational(alpha);
    const Rational b = parse_rational(beta);
    const CombineResult result = combine(c1, c2, a, b);

    json j;
    j["alpha"] = to_string(a);
    j["beta"] = to_string(b);
    j["class1"] = vec_to_json(result.audit.class1.coordinates);
    j["class2"] = vec_to_json(result.audit.class2.coordinates);
    j["class3"] = vec_to_json(result.audit.class3.coordinates);
    j["linearity"] = "pass";

    std::ostringstream text;
    text << "combine with alpha=" << to_string(a) << ", beta=" << to_string(b) << ":\n"
         << "  uobs(c1) = " << class_text(result.audit.class1.coordinates) << "\n"
         << "  uobs(c2) = " << class_text(result.audit.class2.coordinates) << "\n"
         << "  uobs(c3) = " << class_text(result.audit.class3.coordinates) << "\n"
         << "  linearity: pass\n";
    emit(opts, j, text.str());
    return 0;
}

int cmd_cohomology(const std::string& file, std::size_t degree, const OutputOptions& opts) {
    const TModule module = parse_tmodule(load_json_file(file));
    const std::size_t betti = betti_number(module, degree);
    json j;
    j["degree"] = degree;
    j["betti"] = betti;
    std::ostringstream text;
    text << "betti(" << degree << ") = " << betti << "\n";
    emit(opts, j, text.str());
    return 0;
}

int cmd_independence(const std::string& file, std::size_t trials, std::uint64_t seed,
                     const OutputOptions& opts) {
    const Coupling c = parse_coupling(load_json_file(file));
    const IndependenceReport report = verify_independence(c, trials, seed);

    json j;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["all_equal"] = report.all_equal;
    json classes = json::array();
    for (const auto& cls : report.classes) classes.push_back(vec_to_json(cls.coordinates));
    j["classes"] = classes;

    std::ostringstream text;
    text << "independence over " << report.trials << " trials (seed " << report.seed
         << "): " << (report.all_equal ? "all classes equal" : "VIOLATION") << "\n";
    emit(opts, j, text.str());
    if (!report.all_equal)
        throw InternalCheckError("IndependenceViolation: " + report.witness);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mackenzie obstruction calculator for Lie algebra couplings"};
    app.require_subcommand(1);

    std::string file1, file2, out_path, alpha = "1", beta = "1";
    std::size_t degree = 3, trials = 25;
    std::uint64_t seed = 0;
    bool text = false, json_flag = false, inject_fault = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_flag("--text", text, "human readable summary");
        cmd->add_flag("--json", json_flag, "machine readable output (default)");
        cmd->add_option("-o,--output", out_path, "write the report to a file");
    };

    auto* analyze = app.add_subcommand("analyze", "validate an algebra and report Der/Inn/Out");
    analyze->add_option("file", file1, "algebra JSON file")->required();
    add_format(analyze);

    auto* check = app.add_subcommand("coupling-check", "validate a coupling file");
    check->add_option("file", file1, "coupling JSON file")->required();
    add_format(check);

    auto* obstruction = app.add_subcommand("obstruction", "compute the obstruction class");
    obstruction->add_option("file", file1, "coupling JSON file")->required();
    add_format(obstruction);
    obstruction->add_flag("--debug-fail-internal", inject_fault,
                          "testing aid: fail an internal check to exercise exit code 2")
        ->group("");

    auto* extend = app.add_subcommand("extend", "construct the extension when trivial");
    extend->add_option("file", file1, "coupling JSON file")->required();
    extend->add_option("-o,--output", out_path, "extension output file")->required();

    auto* combine_cmd = app.add_subcommand("combine", "combine two elements per theta");
    combine_cmd->add_option("file1", file1, "first element JSON file")->required();
    combine_cmd->add_option("file2", file2, "second element JSON file")->required();
    combine_cmd->add_option("--alpha", alpha, "rational scalar")->required();
    combine_cmd->add_option("--beta", beta, "rational scalar")->required();
    add_format(combine_cmd);

    auto* cohomology_cmd = app.add_subcommand("cohomology", "betti number of a flat module");
    cohomology_cmd->add_option("file", file1, "module JSON file")->required();
    cohomology_cmd->add_option("--degree", degree, "cohomology degree")->required();
    add_format(cohomology_cmd);

    auto* independence = app.add_subcommand("independence", "re-choice invariance check");
    independence->add_option("file", file1, "coupling JSON file")->required();
    independence->add_option("--trials", trials, "number of seeded trials");
    independence->add_option("--seed", seed, "seed for the shift generator");
    add_format(independence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    OutputOptions opts{out_path, text && !json_flag};
    try {
        if (analyze->parsed()) return cmd_analyze(file1, opts);
        if (check->parsed()) return cmd_coupling_check(file1, opts);
        if (obstruction->parsed()) return cmd_obstruction(file1, opts, inject_fault);
        if (extend->parsed()) return cmd_extend(file1, out_path);
        if (combine_cmd->parsed()) return cmd_combine(file1, file2, alpha, beta, opts);
        if (cohomology_cmd->parsed()) return cmd_cohomology(file1, degree, opts);
        if (independence->parsed()) return cmd_independence(file1, trials, seed, opts);
    } catch (const lieobs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const lieobs::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const lieobs::InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
