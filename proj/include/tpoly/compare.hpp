#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tpoly/grid_floer.hpp"
#include "tpoly/pretzel.hpp"

namespace tpoly {

struct Check {
    enum class Status { Pass, Fail, Skip, Info };
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

const char* status_name(Check::Status s);

struct CompareOptions {
    bool with_grid = false;
    EngineOptions engine;
};

struct CompareReport {
    PretzelParams params;
    std::vector<Check> checks;
    bool passed() const;
};

/// Cross-checks the closed form against the movie schedules, the Fox-calculus
/// oracle and, optionally, the grid homology pipeline.
CompareReport compare_pipelines(const PretzelParams& p, const CompareOptions& options = {});

nlohmann::json to_json(const CompareReport& r);
std::string to_text(const CompareReport& r);

}  // namespace tpoly
