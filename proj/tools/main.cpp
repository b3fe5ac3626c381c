#include <CLI11.hpp>

#include <iostream>

#include "affsat/cli_core.hpp"

using namespace affsat;

int main(int argc, char** argv) {
    CLI::App app{"Exact Satake-image computations for untwisted simply-laced affine root systems"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string configPath;
    std::string vwindow;

    auto addCommon = [&](CLI::App* sub) {
        sub->add_option("--type", cfg.cartanType, "Cartan type: A1, A2, ..., D4, ..., E8");
        sub->add_option("--depth", cfg.depth, "truncation depth (height below the anchor)");
        sub->add_option("--vwindow", vwindow, "certified v-degree window, as min:max");
        sub->add_option("--q", cfg.q, "q value: 'sym' or a positive rational");
        sub->add_option("--shells", cfg.shellBudget, "shell budget for stabilization");
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_option("--out", cfg.outputPath, "also write the JSON document here");
        sub->add_option("--config", configPath, "flat key=value config file");
    };

    std::string lambdaJson, wordSpec, suite = "all", what, xJson, muJson, corpusDir;
    long long bound = 4, samples = 5;

    CLI::App* satake = app.add_subcommand("satake", "compute S(h_lambda) by both routes and diff them");
    addCommon(satake);
    satake->add_option("--lambda", lambdaJson, "dominant coweight as JSON {\"c\":..,\"finite\":[..],\"d\":..}")
        ->required();

    CLI::App* jfun = app.add_subcommand("jfun", "compute J_w(lambda) by recursion and DL operators");
    addCommon(jfun);
    jfun->add_option("--lambda", lambdaJson, "dominant coweight as JSON")->required();
    jfun->add_option("--w", wordSpec, "Weyl word as JSON array, e.g. [1,2,1]")->required();

    CLI::App* identities = app.add_subcommand("identities", "run identity suites");
    addCommon(identities);
    identities->add_option("--suite", suite,
                           "cb|hecke|assoc|hplus|theta|braid|dl|prop|h0|poincare|all");

    CLI::App* enumerate = app.add_subcommand("enumerate", "deterministic listings");
    addCommon(enumerate);
    enumerate->add_option("--what", what, "weyl|roots|affroots")->required();
    enumerate->add_option("--bound", bound, "length / delta-level bound");
    enumerate->add_option("--x", xJson, "extended element JSON for inversion sets");

    CLI::App* theta = app.add_subcommand("theta", "run the theta construction with both policies");
    addCommon(theta);
    theta->add_option("--mu", muJson, "Tits-cone coweight as JSON (default: sampled)");
    theta->add_option("--samples", samples, "number of sampled coweights when --mu is absent");

    CLI::App* corpus = app.add_subcommand("corpus-check", "recompute and byte-compare golden files");
    corpus->add_option("--dir", corpusDir, "directory of golden documents")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (sub == corpus) return cmdCorpusCheck(corpusDir, std::cout);

        std::vector<std::string> cliSet;
        auto track = [&](const char* flag, const char* key) {
            if (sub->count(flag)) cliSet.push_back(key);
        };
        track("--type", "type");
        track("--depth", "depth");
        track("--q", "q");
        track("--shells", "shells");
        track("--seed", "seed");
        track("--out", "out");
        if (sub->count("--vwindow")) {
            auto colon = vwindow.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("--vwindow must be min:max");
            cfg.vmin = std::stoi(vwindow.substr(0, colon));
            cfg.vmax = std::stoi(vwindow.substr(colon + 1));
            cliSet.push_back("vmin");
            cliSet.push_back("vmax");
        }
        cfg = mergeConfigSources(cfg, configPath, cliSet);

        if (sub == satake) return cmdSatake(cfg, lambdaJson, std::cout);
        if (sub == jfun) return cmdJfun(cfg, lambdaJson, wordSpec, std::cout);
        if (sub == identities) return cmdIdentities(cfg, suite, std::cout);
        if (sub == enumerate) return cmdEnumerate(cfg, what, bound, xJson, std::cout);
        if (sub == theta) return cmdTheta(cfg, muJson, samples, std::cout);
        return kInputError;
    } catch (const StabilizationError& ex) {
        std::cerr << "budget: " << ex.what() << "\n";
        return kBudget;
    } catch (const VFinitenessError& ex) {
        std::cerr << "mismatch: " << ex.what() << "\n";
        return kMismatch;
    } catch (const Json::parse_error& ex) {
        std::cerr << "input: " << ex.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "input: " << ex.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& ex) {
        std::cerr << "mismatch: " << ex.what() << "\n";
        return kMismatch;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInputError;
    }
}
