/*
 *   Copyright 2026 The progmon Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Error types and the shared resource limits used across progmon.
 */

#ifndef PROGMON_ERROR_HPP
#define PROGMON_ERROR_HPP

#include <atomic>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace progmon {

  /// Malformed or out-of-domain input (bad index, unknown letter, failed
  /// precondition).
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A configurable size or enumeration cap would be exceeded.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A caller-supplied certificate failed verification.
  class CertificateError : public std::runtime_error {
   public:
    CertificateError(std::string const& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    std::string const& witness() const noexcept {
      return witness_;
    }

   private:
    std::string witness_;
  };

  /// Raised from inside long enumerations when the cancellation token fires.
  class Cancelled : public std::runtime_error {
   public:
    Cancelled() : std::runtime_error("operation cancelled") {}
  };

  /// Cooperative cancellation flag shared between a caller and a long
  /// enumeration.
  class CancelToken {
   public:
    CancelToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}
    void cancel() const noexcept {
      flag_->store(true);
    }
    bool cancelled() const noexcept {
      return flag_->load(std::memory_order_relaxed);
    }
    void check() const {
      if (cancelled()) {
        throw Cancelled();
      }
    }

   private:
    std::shared_ptr<std::atomic<bool>> flag_;
  };

  /// Caps and knobs threaded through the expensive operations.
  struct Limits {
    std::size_t syntactic_monoid_cap = 64;
    std::size_t derived_alphabet_cap = 4096;
    std::size_t product_cap          = 4096;
    std::size_t division_cap         = 12;
    std::size_t enumeration_cap      = 2'000'000;
    CancelToken cancel;
  };

  inline Limits const& default_limits() {
    static Limits const limits;
    return limits;
  }

}  // namespace progmon

#endif  // PROGMON_ERROR_HPP
