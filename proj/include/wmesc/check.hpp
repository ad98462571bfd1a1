#pragma once

#include <cstdio>
#include <cstdlib>

// Internal invariant checks. Unlike assert(), these stay on in optimized
// builds unless WMESC_NO_CHECKS is defined, so the test and acceptance
// suites always run with the branch-site assertions armed.
#ifdef WMESC_NO_CHECKS
#define WMESC_ASSERT(cond) ((void)0)
namespace wmesc {
inline constexpr bool kChecksEnabled = false;
}
#else
#define WMESC_ASSERT(cond)                                                  \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::fprintf(stderr, "WMESC_ASSERT failed: %s at %s:%d\n", #cond,     \
                   __FILE__, __LINE__);                                     \
      std::abort();                                                         \
    }                                                                       \
  } while (0)
namespace wmesc {
inline constexpr bool kChecksEnabled = true;
}
#endif
