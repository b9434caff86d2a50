#include <cstdio>

#include "bouncer/validation.hpp"

int main() {
    const auto results = bouncer::run_acceptance(bouncer::ValidationOptions{});
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s %-4s %s | measured %.6g, threshold %.6g | %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                    r.title.c_str(), r.measured, r.threshold, r.detail.c_str());
        failures += r.passed ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
