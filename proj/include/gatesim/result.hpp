// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace gatesim {

enum class Errc {
  ok = 0,
  // ledger
  invalid_transaction,
  unknown_asset,
  asset_not_active,
  lock_expired,
  lock_not_found,
  issuer_mismatch,
  not_owner,
  escrow_expired,
  escrow_not_found,
  notification_expired,
  notification_not_found,
  // identity
  role_not_permitted,
  unknown_identifier,
  bad_signature,
  // protocol
  unknown_session,
  out_of_order,
  // extensions
  insufficient_funds,
  expiry_in_past,
  wrong_preimage,
  expired,
  not_recipient,
  not_yet_expired,
  not_creator,
  invalid_token,
  data_too_large,
  // netsim / recovery / cli
  handshake_failed,
  corrupt_log,
  config_error,
  non_termination,
};

std::string_view to_string(Errc c);

/// Lightweight value-or-error. Errors carry a code plus a short free-form
/// message for the trace and report files.
template <typename T>
class [[nodiscard]] Result {
public:
  Result(T value) : value_(std::move(value)) {}
  Result(Errc code, std::string message = {}) : code_(code), message_(std::move(message)) {}

  bool ok() const { return code_ == Errc::ok; }
  Errc code() const { return code_; }
  const std::string& message() const { return message_; }

  const T& operator*() const { return *value_; }
  T& operator*() { return *value_; }
  const T* operator->() const { return &*value_; }

private:
  Errc code_ = Errc::ok;
  std::string message_;
  std::optional<T> value_;
};

struct [[nodiscard]] Status {
  Errc code = Errc::ok;
  std::string message;

  bool ok() const { return code == Errc::ok; }
  static Status success() { return {}; }
  static Status failure(Errc c, std::string msg = {}) { return Status{c, std::move(msg)}; }
};

} // namespace gatesim
