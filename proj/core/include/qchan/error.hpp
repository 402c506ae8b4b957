// Copyright 2026 The qchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCHAN_ERROR_HPP
#define QCHAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qchan {

enum class ErrorKind {
    Validation,   // malformed or non-physical input
    Budget,       // requested accuracy not reachable
    Io,           // file or parse failure
    Unsupported,  // configuration the algorithm cannot handle
    Convergence,  // numerical procedure failed to certify its result
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {
    }
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string &what) : Error(ErrorKind::Validation, what) {
    }
};
struct BudgetError : Error {
    BudgetError(const std::string &what, double achievable)
        : Error(ErrorKind::Budget, what), achievable_epsilon(achievable) {
    }
    double achievable_epsilon;
};
struct IoError : Error {
    explicit IoError(const std::string &what) : Error(ErrorKind::Io, what) {
    }
};
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string &what) : Error(ErrorKind::Unsupported, what) {
    }
};
struct ConvergenceError : Error {
    ConvergenceError(const std::string &what, double res) : Error(ErrorKind::Convergence, what), residual(res) {
    }
    double residual;
};

/// Process exit code used by the command line tool: 2 validation, 3 budget, 4 I/O, 1 otherwise.
int exit_code_for(ErrorKind kind) noexcept;

}  // namespace qchan

#endif  // QCHAN_ERROR_HPP
