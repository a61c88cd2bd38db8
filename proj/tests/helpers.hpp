#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "netcomp/error.hpp"

// Code of the netcomp::Error thrown by f; records a failure if none is thrown.
inline netcomp::ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const netcomp::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no netcomp::Error thrown";
    return netcomp::ErrorCode::IoError;
}
