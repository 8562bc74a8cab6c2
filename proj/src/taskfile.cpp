#include "padicdyn/taskfile.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

namespace padicdyn {

namespace {

BigRat parse_positive_rational(const Json& j, const char* name, const char* context) {
    BigRat q = parse_rational(require_string(j, name, context));
    if (q <= 0)
        throw ParseError(std::string(context) + ": field \"" + name + "\" must be positive");
    return q;
}

long parse_budget(const Json& j, const char* context) {
    long budget = require_integer(j, "budget", context);
    if (budget < 1) throw ParseError(std::string(context) + ": budget must be >= 1");
    return budget;
}

std::string display_log_multiple(const BigRat& coeff, const BigInt& p) {
    double v = coeff.convert_to<double>() * std::log(p.convert_to<double>());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Json run_green_at(const TaskFile& tf, const TaskGreenAt& t, long precision) {
    GreenValue g = green_value(tf.poly, t.point, t.epsilon, precision);
    Json payload;
    payload["value"] = to_json(g);
    if (g.exact) {
        payload["display_only"] = display_log_multiple(g.lo, tf.prime);
    } else {
        Json d;
        d["lo"] = display_log_multiple(g.lo, tf.prime);
        d["hi"] = display_log_multiple(g.hi, tf.prime);
        payload["display_only"] = std::move(d);
    }
    return payload;
}

Json run_disk_orbit(const TaskFile& tf, const TaskDiskOrbit& t) {
    DiskOrbit orbit = orbit_disks(tf.poly, t.disk, t.budget);
    Json payload;
    payload["orbit"] = to_json(orbit);
    return payload;
}

Json run_certify(const TaskFile& tf, const TaskCertify& t) {
    MontelCertificate cert = certify(tf.poly, t.disk, t.alpha, t.budget);
    Json payload;
    payload["certificate"] = to_json(cert);
    payload["verified"] = verify_certificate(cert, tf.poly);
    return payload;
}

Json run_probe(const TaskFile& tf, const TaskProbe& t, long precision) {
    ProbeReport rep = equicontinuity_probe(tf.poly, t.disk, t.samples, t.kmax, nullptr, precision);
    Json payload;
    payload["max_observed"] = to_json(rep.max_observed);
    payload["violations"] = rep.violations;
    payload["entries_recorded"] = static_cast<long>(rep.samples.size());
    return payload;
}

Json run_task_at(const TaskFile& tf, const Task& task, long precision) {
    if (const auto* g = std::get_if<TaskGreenAt>(&task)) return run_green_at(tf, *g, precision);
    if (const auto* o = std::get_if<TaskDiskOrbit>(&task)) return run_disk_orbit(tf, *o);
    if (const auto* c = std::get_if<TaskCertify>(&task)) return run_certify(tf, *c);
    return run_probe(tf, std::get<TaskProbe>(task), precision);
}

Json run_task(const TaskFile& tf, std::size_t idx, const RunOptions& opts) {
    Json result;
    result["task"] = tf.task_echo[idx];
    try {
        Json payload;
        try {
            payload = run_task_at(tf, tf.tasks[idx], tf.precision);
        } catch (const PrecisionExhausted&) {
            if (!opts.retry_precision) throw;
            payload = run_task_at(tf, tf.tasks[idx], 4 * tf.precision);
            payload["retried_precision"] = 4 * tf.precision;
        }
        result["status"] = "ok";
        for (auto& [key, value] : payload.items()) result[key] = value;
    } catch (const std::exception& e) {
        result["status"] = "error";
        result["error"] = e.what();
    }
    return result;
}

}  // namespace

TaskFile parse_task_file(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("task file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("task file: top level must be an object");

    std::string prime_text = require_string(j, "prime", "task file");
    BigInt prime;
    try {
        prime = BigInt(prime_text);
    } catch (const std::runtime_error&) {
        throw ParseError("task file: prime must be a decimal integer string");
    }
    if (!is_prime(prime)) throw ParseError("task file: prime " + prime.str() + " is not prime");

    long precision = 64;
    if (j.contains("precision")) {
        precision = require_integer(j, "precision", "task file");
        if (precision < 1) throw ParseError("task file: precision must be >= 1");
    }

    const Json& coeffs = require_field(j, "coefficients", "task file");
    if (!coeffs.is_array() || coeffs.empty())
        throw ParseError("task file: coefficients must be a non-empty array of rational strings");
    std::vector<BigRat> cs;
    for (const Json& c : coeffs) {
        if (!c.is_string())
            throw ParseError("task file: coefficients must be rational strings");
        cs.push_back(parse_rational(c.get<std::string>()));
    }

    TaskFile tf{prime, precision, Poly(prime, std::move(cs)), {}, {}};
    tf.poly.require_dynamical("task file");

    const Json& tasks = require_field(j, "tasks", "task file");
    if (!tasks.is_array() || tasks.empty()) throw ParseError("task file: no tasks");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Json& t = tasks[i];
        std::string context = "task " + std::to_string(i);
        std::string type = require_string(t, "type", context.c_str());
        if (type == "green_at") {
            tf.tasks.push_back(TaskGreenAt{
                parse_rational(require_string(t, "point", context.c_str())),
                parse_positive_rational(t, "epsilon", context.c_str())});
        } else if (type == "disk_orbit") {
            tf.tasks.push_back(TaskDiskOrbit{
                disk_from_json(require_field(t, "disk", context.c_str()), prime),
                parse_budget(t, context.c_str())});
        } else if (type == "certify") {
            tf.tasks.push_back(TaskCertify{
                disk_from_json(require_field(t, "disk", context.c_str()), prime),
                parse_rational(require_string(t, "alpha", context.c_str())),
                parse_budget(t, context.c_str())});
        } else if (type == "probe") {
            long samples = require_integer(t, "samples", context.c_str());
            long kmax = require_integer(t, "kmax", context.c_str());
            if (samples < 1 || kmax < 0)
                throw ParseError(context + ": samples must be >= 1 and kmax >= 0");
            tf.tasks.push_back(TaskProbe{
                disk_from_json(require_field(t, "disk", context.c_str()), prime),
                static_cast<int>(samples), kmax});
        } else {
            throw ParseError(context + ": unknown type \"" + type + "\"");
        }
        tf.task_echo.push_back(t);
    }
    return tf;
}

RunOutcome run_tasks(const TaskFile& tf, const RunOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Json> results(tf.tasks.size());

    int jobs = opts.jobs;
    if (jobs < 1) jobs = 1;
    if (static_cast<std::size_t>(jobs) > tf.tasks.size())
        jobs = static_cast<int>(tf.tasks.size());

    if (jobs == 1) {
        for (std::size_t i = 0; i < tf.tasks.size(); ++i) results[i] = run_task(tf, i, opts);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tf.tasks.size()) return;
                    results[i] = run_task(tf, i, opts);
                }
            });
        }
        for (std::thread& w : workers) w.join();
    }

    RunOutcome out;
    out.document["schema"] = 1;
    out.document["prime"] = tf.prime.str();
    out.document["precision"] = tf.precision;
    Json coeffs = Json::array();
    for (const BigRat& c : tf.poly.coeffs()) coeffs.push_back(rational_to_string(c));
    out.document["coefficients"] = std::move(coeffs);
    Json arr = Json::array();
    for (Json& r : results) {
        if (r.at("status") == "error") out.any_error = true;
        arr.push_back(std::move(r));
    }
    out.document["results"] = std::move(arr);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    out.document["elapsed_ms"] = static_cast<long>(elapsed.count());
    return out;
}

}  // namespace padicdyn
