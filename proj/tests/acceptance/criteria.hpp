#pragma once
// Acceptance criteria. Tolerances and time limits are fixed here.

#include <functional>
#include <string>
#include <vector>

namespace ellmirror::acceptance {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;  // printed under the pass/fail line
    std::vector<std::string> info;     // informational, never affects pass

    void check(bool ok, std::string what) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(std::string what) { info.push_back(std::move(what)); }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0 means none
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria();

struct Result {
    int id;
    std::string name;
    Outcome outcome;
    double seconds;
    bool within_time;
    bool pass() const { return outcome.pass && within_time; }
};

Result run_criterion(const Criterion& c);

// One summary line, then indented details.
std::string format(const Result& r, bool verbose);

}  // namespace ellmirror::acceptance
