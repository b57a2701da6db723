// Acceptance runner: executes every verification suite at its pinned
// tolerance and prints one pass/fail line per criterion.  Exit code is the
// number of failed criteria.

#include <chrono>
#include <cstdio>

#include "jacspec/verify.hpp"

int main() {
    using namespace jacspec;
    const auto names = verify_suite_names();
    const auto t0 = std::chrono::steady_clock::now();

    int failures = 0;
    int idx = 0;
    for (const auto& name : names) {
        ++idx;
        SuiteResult r;
        try {
            r = run_verify_suite(name);
        } catch (const std::exception& e) {
            std::printf("[FAIL] %2d/%zu %-28s exception: %s\n", idx, names.size(), name.c_str(),
                        e.what());
            ++failures;
            continue;
        }
        std::printf("[%s] %2d/%zu %-28s max_err=%.3e cases=%d (%.0f ms)\n",
                    r.pass ? "PASS" : "FAIL", idx, names.size(), name.c_str(), r.max_err, r.cases,
                    r.wall_ms);
        for (const auto& chk : r.checks)
            if (!chk.pass)
                std::printf("       failing check: %s  err=%.3e tol=%.3e\n", chk.name.c_str(),
                            chk.err, chk.tol);
        if (!r.pass) ++failures;
    }

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/%zu criteria passed in %.1f s\n", int(names.size()) - failures, names.size(),
                total);
    return failures;
}
