#include <cstdlib>
#include <string_view>

#include "tables.hpp"

namespace signedfam::kernels {

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
  case Isa::scalar: return &scalar_table();
  case Isa::avx2: return detail::avx2_table();
  case Isa::neon: return detail::neon_table();
  }
  return nullptr;
}

std::vector<const KernelTable*> available() noexcept {
  std::vector<const KernelTable*> out{&scalar_table()};
  for (Isa isa : {Isa::avx2, Isa::neon})
    if (const auto* table = table_for(isa)) out.push_back(table);
  return out;
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    if (const char* env = std::getenv("SIGNEDFAM_KERNELS"); env && std::string_view(env) == "scalar")
      return scalar_table();
    if (const auto* t = table_for(Isa::avx2)) return *t;
    if (const auto* t = table_for(Isa::neon)) return *t;
    return scalar_table();
  }();
  return chosen;
}

} // namespace signedfam::kernels
