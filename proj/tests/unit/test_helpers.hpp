#pragma once

#include <gtest/gtest.h>

#include "wordentropy/error.hpp"

// Asserts that `statement` throws wordentropy::Error with the given category.
#define EXPECT_ERRC(statement, expected_code)                                  \
  do {                                                                         \
    try {                                                                      \
      statement;                                                               \
      ADD_FAILURE() << "expected " << ::wordentropy::to_string(expected_code); \
    } catch (const ::wordentropy::Error& e) {                                  \
      EXPECT_EQ(e.code(), expected_code) << e.what();                          \
    }                                                                          \
  } while (false)
