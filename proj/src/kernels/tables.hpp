#pragma once

#include "signedfam/kernels.hpp"

namespace signedfam::kernels::detail {

const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

} // namespace signedfam::kernels::detail
