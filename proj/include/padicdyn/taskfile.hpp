#pragma once

#include <variant>

#include "padicdyn/serialize.hpp"

namespace padicdyn {

struct TaskGreenAt {
    BigRat point;
    BigRat epsilon;
};
struct TaskDiskOrbit {
    UltraDisk disk;
    long budget;
};
struct TaskCertify {
    UltraDisk disk;
    BigRat alpha;
    long budget;
};
struct TaskProbe {
    UltraDisk disk;
    int samples;
    long kmax;
};

using Task = std::variant<TaskGreenAt, TaskDiskOrbit, TaskCertify, TaskProbe>;

struct TaskFile {
    BigInt prime;
    long precision;
    Poly poly;
    std::vector<Task> tasks;
    std::vector<Json> task_echo;  // original task objects, echoed into results
};

// throws ParseError with field context on malformed input
TaskFile parse_task_file(const std::string& text);

struct RunOptions {
    int jobs = 1;
    bool retry_precision = false;  // one-shot retry at 4x precision
};

struct RunOutcome {
    Json document;
    bool any_error = false;
};

// executes all tasks (concurrently when jobs > 1), embedding per-task errors;
// result documents are deterministic except for the elapsed_ms field
RunOutcome run_tasks(const TaskFile& tf, const RunOptions& opts = {});

}  // namespace padicdyn
