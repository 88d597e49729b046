#pragma once

#include <stdexcept>
#include <string>

namespace pathoracle {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid construction or generator parameters.
class ParameterError : public OracleError {
 public:
  using OracleError::OracleError;
};

// Malformed graph, pair or spanner files.
class FormatError : public OracleError {
 public:
  using OracleError::OracleError;
};

// The input graph (or a search over it) is not connected where it has to be.
class DisconnectedError : public OracleError {
 public:
  using OracleError::OracleError;
};

// No path between the requested endpoints in the given path system.
class NoPathError : public OracleError {
 public:
  using OracleError::OracleError;
};

// A partial oracle was asked about a pair it does not store.
class NotInPairsError : public OracleError {
 public:
  using OracleError::OracleError;
};

}  // namespace pathoracle
