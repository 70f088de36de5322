#pragma once

#include <array>
#include <string_view>

namespace reference {

// The (8,40)-GCS for q = 4, m = 6, t = 3, pi_1 = (1,2), pi_2 = (3,4,5), g = 0,
// members in order n = 0..7.
inline constexpr std::array<std::string_view, 8> kGcs840 = {
    "0002000200022220000200022220000200020002",
    "0200020002002022020002002022020002000200",
    "0002222000020002000222202220222000022220",
    "0200202202000200020020222022202202002022",
    "0002000200022220000200022220000222202220",
    "0200020002002022020002002022020020222022",
    "0002222000020002000222202220222022200002",
    "0200202202000200020020222022202220220200",
};

} // namespace reference
