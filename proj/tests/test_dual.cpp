#include "doctest.h"

TEST_SUITE_BEGIN("dual");
TEST_SUITE_END();
