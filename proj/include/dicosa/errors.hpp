#pragma once

#include <stdexcept>
#include <string>

namespace dicosa {

// Error categories surfaced by the library and mapped to CLI diagnostics.
enum class ErrorKind {
  shape,     // dimension / shape mismatch
  param,     // invalid parameter value (temperature, rho, ...)
  batch,     // batch too small for batch statistics
  config,    // inconsistent configuration (K does not divide D, ...)
  store,     // corrupt or inconsistent feature store
  version,   // unknown format version
  data,      // ground-truth / pairing problems
  numeric,   // non-finite values where finite ones are required
  io,        // filesystem failures
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  const char* category() const noexcept {
    switch (kind_) {
      case ErrorKind::shape:   return "shape";
      case ErrorKind::param:   return "param";
      case ErrorKind::batch:   return "batch";
      case ErrorKind::config:  return "config";
      case ErrorKind::store:   return "store";
      case ErrorKind::version: return "version";
      case ErrorKind::data:    return "data";
      case ErrorKind::numeric: return "numeric";
      case ErrorKind::io:      return "io";
    }
    return "unknown";
  }

  static Error shape(const std::string& m)   { return {ErrorKind::shape, m}; }
  static Error param(const std::string& m)   { return {ErrorKind::param, m}; }
  static Error batch(const std::string& m)   { return {ErrorKind::batch, m}; }
  static Error config(const std::string& m)  { return {ErrorKind::config, m}; }
  static Error store(const std::string& m)   { return {ErrorKind::store, m}; }
  static Error version(const std::string& m) { return {ErrorKind::version, m}; }
  static Error data(const std::string& m)    { return {ErrorKind::data, m}; }
  static Error numeric(const std::string& m) { return {ErrorKind::numeric, m}; }
  static Error io(const std::string& m)      { return {ErrorKind::io, m}; }

private:
  ErrorKind kind_;
};

}  // namespace dicosa
