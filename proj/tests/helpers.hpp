#pragma once

#include "plesken/error.hpp"

#include <string>

// Code of the plesken::Error thrown by f, or "" if nothing was thrown.
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const plesken::Error& e) {
    return e.code();
  }
  return "";
}

template <class F>
plesken::Json error_witness(F&& f) {
  try {
    f();
  } catch (const plesken::Error& e) {
    return e.witness();
  }
  return nullptr;
}
