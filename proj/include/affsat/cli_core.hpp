#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "affsat/json_io.hpp"

namespace affsat {

// exit codes: 0 success, 1 input error, 2 mathematical mismatch, 3 budget exceeded
enum ExitCode : int { kOk = 0, kInputError = 1, kMismatch = 2, kBudget = 3 };

struct RunConfig {
    std::string cartanType = "A1";
    long long depth = 4;
    int vmin = 0;
    int vmax = 8;
    long long shellBudget = 30;
    std::string q = "sym"; // "sym" or a rational like "3" or "1/3"
    unsigned long long seed = 12345;
    std::string outputPath;

    void validate() const; // throws std::invalid_argument
    std::optional<BigRat> parseQ() const;
    SatakeOptions satakeOptions() const;
};

// precedence: explicit CLI values > config file > environment > defaults
RunConfig mergeConfigSources(const RunConfig& cliValues, const std::string& configPath,
                             const std::vector<std::string>& cliSetKeys);

int cmdSatake(const RunConfig& cfg, const std::string& lambdaJson, std::ostream& out);
int cmdJfun(const RunConfig& cfg, const std::string& lambdaJson, const std::string& wordSpec,
            std::ostream& out);
int cmdIdentities(const RunConfig& cfg, const std::string& suite, std::ostream& out);
int cmdEnumerate(const RunConfig& cfg, const std::string& what, long long bound,
                 const std::string& xJson, std::ostream& out);
int cmdTheta(const RunConfig& cfg, const std::string& muJson, long long samples, std::ostream& out);
int cmdCorpusCheck(const std::string& directory, std::ostream& out);

// the corpus document for one run: {"config": ..., "result": ...}
Json satakeDocument(const RunConfig& cfg, const Coweight& lam);

} // namespace affsat
