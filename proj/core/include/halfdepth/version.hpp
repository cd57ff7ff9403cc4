#pragma once

#define HALFDEPTH_VERSION_MAJOR 1
#define HALFDEPTH_VERSION_MINOR 0
#define HALFDEPTH_VERSION_PATCH 0
#define HALFDEPTH_VERSION_STRING "1.0.0"

namespace halfdepth {
inline const char* version() { return HALFDEPTH_VERSION_STRING; }
}
