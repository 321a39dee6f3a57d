#pragma once

namespace pbtsim {

inline constexpr const char* version = "0.1.0";

}  // namespace pbtsim
