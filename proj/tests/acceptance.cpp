#include "symsemi/acceptance.hpp"

#include <cstdio>

int main() {
    using namespace symsemi;
    int failed = 0;
    for (const auto& row : acceptance::run_all(Mode::exact)) {
        std::printf("criterion %2d %s: %s (%.2f s) %s\n", row.id, row.pass ? "PASS" : "FAIL", row.title.c_str(),
                    row.seconds.value_or(0.0), row.detail.c_str());
        failed += !row.pass;
    }
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
