#include "tyb/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace tyb::kernels {

const KernelTable& active_table() {
    static const KernelTable& chosen = []() -> const KernelTable& {
        const char* env = std::getenv("TYB_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0) return scalar_table();
        if (const KernelTable* avx2 = avx2_table()) return *avx2;
        return scalar_table();
    }();
    return chosen;
}

} // namespace tyb::kernels
