#pragma once

#include "symp/traces.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace symp {

enum class Status { Pass, Fail, Observed, Skipped };
std::string to_string(Status s);

struct CheckReport {
    std::string id;
    std::string anchor;
    int genus = 0;
    Status status = Status::Pass;
    std::string note;
    std::map<std::string, std::string> witness;
    std::map<std::string, std::vector<std::string>> vectors;
    double seconds = 0;
};

struct CheckInfo {
    std::string id;
    std::string anchor;
};

const std::vector<CheckInfo>& check_catalog();
bool known_check(const std::string& id);
// Rough cost at the given genus, used against --max-minutes.
double estimated_minutes(const std::string& id, int genus);

// Runs checks over per-genus contexts built on first use.
class CheckRunner {
public:
    explicit CheckRunner(std::uint64_t seed = 0) : seed_(seed) {}

    CheckReport run(const std::string& id, int genus);
    const D2Space& space(int genus);
    const Traces& traces(int genus);

private:
    struct Context {
        std::unique_ptr<D2Space> d;
        std::unique_ptr<Traces> t;
    };
    Context& at(int genus);

    std::uint64_t seed_;
    std::map<int, Context> cache_;
};

}  // namespace symp
