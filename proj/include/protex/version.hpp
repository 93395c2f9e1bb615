#pragma once

#ifndef PROTEX_VERSION
#define PROTEX_VERSION "0.0.0"
#endif

namespace protex {

inline constexpr const char* version = PROTEX_VERSION;

} // namespace protex
