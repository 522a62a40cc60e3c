#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

namespace delsarte {

// Pool size: DELSARTE_WORKERS when set to a positive integer, else the OpenMP default.
inline int worker_count()
{
    if (const char* env = std::getenv("DELSARTE_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w > 0) return w;
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

// Runs every task and returns results in task order. on_ready, if given, sees each
// result exactly once, in task order, as soon as all earlier tasks have finished.
// The first exception (by task index) is rethrown after all tasks ran.
template <class T>
std::vector<T> run_tasks(const std::vector<std::function<T()>>& tasks, bool parallel,
                         const std::function<void(std::size_t, const T&)>& on_ready = {})
{
    const long count = static_cast<long>(tasks.size());
    std::vector<std::optional<T>> slots(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::vector<char> done(tasks.size(), 0);
    std::size_t next = 0;
    std::mutex mu;

    auto finish = [&](long i) {
        std::lock_guard<std::mutex> lock(mu);
        done[i] = 1;
        while (next < tasks.size() && done[next]) {
            if (on_ready && slots[next]) on_ready(next, *slots[next]);
            ++next;
        }
    };
    auto run_one = [&](long i) {
        try {
            slots[i] = tasks[i]();
        } catch (...) {
            errors[i] = std::current_exception();
        }
        finish(i);
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
        for (long i = 0; i < count; ++i) run_one(i);
    } else {
        for (long i = 0; i < count; ++i) run_one(i);
    }

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(tasks.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace delsarte
