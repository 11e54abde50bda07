// Command-line front end: load a bundle file, run one named law check or
// builder over it, or certify a builtin example pipeline. All output is the
// library's canonical JSON. Exit codes: 0 valid / derived, 1 a law failed
// (including a builder hypothesis), 2 malformed input or usage.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlk/mlk.hpp"

namespace {

std::map<std::string, mlk::Q> parse_overrides(const std::vector<std::string>& args) {
    std::map<std::string, mlk::Q> out;
    for (const std::string& arg : args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0)
            throw mlk::ParseError("--param expects name=value, got '" + arg + "'");
        out[arg.substr(0, eq)] = mlk::parse_rational(arg.substr(eq + 1));
    }
    return out;
}

int do_check(const std::string& path, const std::string& law,
             const std::map<std::string, mlk::Q>& overrides) {
    const mlk::Bundle b = mlk::load_bundle(path, overrides);
    const mlk::CheckReport rep = mlk::run_law(b, law);
    std::cout << mlk::report_to_json(rep, b.params).dump(2) << "\n";
    return rep.pass ? 0 : 1;
}

int do_derive(const std::string& builder, const std::string& path, const std::string& out_path,
              const std::map<std::string, mlk::Q>& overrides) {
    const mlk::Bundle b = mlk::load_bundle(path, overrides);
    const mlk::Bundle out = mlk::run_builder(builder, b);
    std::cout << mlk::bundle_to_json(out).dump(2) << "\n";
    if (!out_path.empty()) mlk::save_bundle(out, out_path);
    return 0;
}

int do_example(const std::string& name, const std::map<std::string, mlk::Q>& overrides,
               bool certify_family) {
    for (const auto& [key, value] : overrides) {
        (void)value;
        if (key != "lambda" && key != "gamma") {
            std::cerr << "error: examples accept only the parameters lambda and gamma\n";
            return 2;
        }
    }
    if (certify_family && !overrides.empty()) {
        std::cerr << "error: --certify-family sweeps the builtin grid; --param is not allowed\n";
        return 2;
    }

    std::vector<mlk::StageReport> stages;
    mlk::Json params = mlk::Json::object();
    if (certify_family) {
        for (const mlk::Q& l : mlk::builtin::lambda_grid())
            for (const mlk::Q& g : mlk::builtin::gamma_grid()) {
                const std::vector<mlk::StageReport> point = mlk::run_example(name, l, g);
                stages.insert(stages.end(), point.begin(), point.end());
            }
    } else {
        const mlk::Q l = overrides.count("lambda") != 0 ? overrides.at("lambda") : mlk::Q(1);
        const mlk::Q g = overrides.count("gamma") != 0 ? overrides.at("gamma") : mlk::Q(0);
        stages = mlk::run_example(name, l, g);
        params["lambda"] = mlk::to_string(l);
        params["gamma"] = mlk::to_string(g);
    }

    bool pass = !stages.empty();
    mlk::Json staged = mlk::Json::array();
    for (const mlk::StageReport& st : stages) {
        pass = pass && st.report.pass;
        staged.push_back(mlk::report_to_json(st.report, st.params));
    }
    mlk::Json doc = mlk::Json::object();
    doc["law"] = "example/" + name;
    doc["pass"] = pass;
    doc["witnesses"] = mlk::Json::array();
    doc["params"] = std::move(params);
    doc["stages"] = std::move(staged);
    std::cout << doc.dump(2) << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verification kit for structure-constant bundles"};
    app.require_subcommand(1);

    std::string bundle_path, law, builder, out_path, example_name;
    std::vector<std::string> param_args;
    bool certify_family = false;

    CLI::App* check = app.add_subcommand("check", "Run one named law over a bundle");
    check->add_option("bundle", bundle_path, "bundle JSON file")->required();
    check->add_option("--law", law, "law name")->required();
    check->add_option("--param", param_args, "parameter override name=value");

    CLI::App* derive = app.add_subcommand("derive", "Run a builder and emit the derived bundle");
    derive->add_option("builder", builder, "builder name")->required();
    derive->add_option("bundle", bundle_path, "bundle JSON file")->required();
    derive->add_option("-o,--output", out_path, "also write the derived bundle here");
    derive->add_option("--param", param_args, "parameter override name=value");

    CLI::App* example = app.add_subcommand("example", "Certify a builtin example pipeline");
    example->add_option("name", example_name, "example name")->required();
    example->add_option("--param", param_args, "parameter value name=value");
    example->add_flag("--certify-family", certify_family,
                      "sweep the builtin parameter grid instead of one point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const std::map<std::string, mlk::Q> overrides = parse_overrides(param_args);
        if (check->parsed()) return do_check(bundle_path, law, overrides);
        if (derive->parsed()) return do_derive(builder, bundle_path, out_path, overrides);
        return do_example(example_name, overrides, certify_family);
    } catch (const mlk::HypothesisError& e) {
        std::cout << mlk::report_to_json(e.report).dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
