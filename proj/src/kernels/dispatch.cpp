#include "necip/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace necip::kernels {

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("NECIP_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar();
    if (const KernelTable* t = avx2()) return *t;
    return scalar();
  }();
  return chosen;
}

}  // namespace necip::kernels
