#pragma once

#include <stdexcept>
#include <string>

namespace reveal {

/// Base class for all errors raised by the harness.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration: bad backend config, missing API key env var,
/// unwritable output directory.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Backend call failed after exhausting retries. Carries the last HTTP
/// status observed (0 when the failure was not HTTP-level).
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int last_status)
      : Error(what), last_status_(last_status) {}
  int last_status() const { return last_status_; }

 private:
  int last_status_;
};

/// Response cache entry could not be read or verified. Non-fatal; the
/// gateway falls through to a live call.
class CacheError : public Error {
 public:
  using Error::Error;
};

/// Manifest line failed validation. line() is 1-based; 0 means the error
/// is not tied to a specific line.
class ManifestError : public Error {
 public:
  ManifestError(const std::string& what, std::size_t line = 0)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ReportError : public Error {
 public:
  using Error::Error;
};

/// ROC requested over a single-class score set.
class DegenerateRocError : public Error {
 public:
  using Error::Error;
};

/// Image decode/encode failure or unsupported format.
class ImageError : public Error {
 public:
  using Error::Error;
};

}  // namespace reveal
