// Copyright 2026 The spinotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Thin C++ conveniences over the C interface; failures become CliError.

#include <memory>
#include <stdexcept>
#include <string>

#include "spinotto/spinotto.h"

namespace cli {

enum ExitCode { kOk = 0, kUsage = 1, kNotEngine = 2, kNumerical = 3 };

class CliError : public std::runtime_error {
 public:
  CliError(const std::string& what, int code) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] int code() const { return code_; }

 private:
  int code_;
};

inline int exit_code_for(spinotto_status s) {
  switch (s) {
    case SPINOTTO_ERR_INVALID_ARGUMENT:
    case SPINOTTO_ERR_DIMENSION:
    case SPINOTTO_ERR_NULL_POINTER:
    case SPINOTTO_ERR_BUFFER_TOO_SMALL:
      return kUsage;
    default:
      return kNumerical;
  }
}

inline void check(spinotto_status s, const std::string& what) {
  if (s == SPINOTTO_OK) return;
  throw CliError(what + ": " + spinotto_status_string(s) + ": " + spinotto_last_error(),
                 exit_code_for(s));
}

class Chain {
 public:
  Chain(int n, double p, double g, double omega0, spinotto_boundary boundary) {
    spinotto_chain* raw = nullptr;
    check(spinotto_chain_create(n, p, g, omega0, boundary, &raw), "chain");
    handle_.reset(raw);
  }

  [[nodiscard]] const spinotto_chain* get() const { return handle_.get(); }

 private:
  struct Deleter {
    void operator()(spinotto_chain* c) const { spinotto_chain_destroy(c); }
  };
  std::unique_ptr<spinotto_chain, Deleter> handle_;
};

}  // namespace cli
