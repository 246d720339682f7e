#pragma once

#include <string>
#include <utility>

namespace eupade {

// Outcome of one certificate check. `detail` names the first violation.
struct CheckReport {
    bool pass = true;
    std::string detail;

    static CheckReport ok() { return {}; }
    static CheckReport fail(std::string what) { return {false, std::move(what)}; }
};

}  // namespace eupade
