#pragma once

namespace batrel::detail {

// GCC/Clang builtin; __extension__ keeps -Wpedantic quiet.
__extension__ typedef unsigned __int128 uint128;

}  // namespace batrel::detail
