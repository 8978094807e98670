// Single doctest entry point; the per-module suites are linked alongside.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
