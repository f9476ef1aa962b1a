#pragma once

#include <doctest.h>

#include "toricschubert/errors.hpp"

#define CHECK_ERROR_CODE(expr, expected)                                    \
  do {                                                                      \
    try {                                                                   \
      (void)(expr);                                                         \
      FAIL_CHECK("expected " << toricschubert::to_string(expected));        \
    } catch (const toricschubert::Error& e) {                               \
      CHECK_MESSAGE(e.code() == (expected), e.what());                      \
    }                                                                       \
  } while (0)
