// SPDX-License-Identifier: Apache-2.0
#include "gatesim/result.hpp"

namespace gatesim {

std::string_view to_string(Errc c) {
  switch (c) {
    case Errc::ok: return "Ok";
    case Errc::invalid_transaction: return "InvalidTransaction";
    case Errc::unknown_asset: return "UnknownAsset";
    case Errc::asset_not_active: return "AssetNotActive";
    case Errc::lock_expired: return "LockExpired";
    case Errc::lock_not_found: return "LockNotFound";
    case Errc::issuer_mismatch: return "IssuerMismatch";
    case Errc::not_owner: return "NotOwner";
    case Errc::escrow_expired: return "EscrowExpired";
    case Errc::escrow_not_found: return "EscrowNotFound";
    case Errc::notification_expired: return "NotificationExpired";
    case Errc::notification_not_found: return "NotificationNotFound";
    case Errc::role_not_permitted: return "RoleNotPermitted";
    case Errc::unknown_identifier: return "UnknownIdentifier";
    case Errc::bad_signature: return "BadSignature";
    case Errc::unknown_session: return "UnknownSession";
    case Errc::out_of_order: return "OutOfOrder";
    case Errc::insufficient_funds: return "InsufficientFunds";
    case Errc::expiry_in_past: return "ExpiryInPast";
    case Errc::wrong_preimage: return "WrongPreimage";
    case Errc::expired: return "Expired";
    case Errc::not_recipient: return "NotRecipient";
    case Errc::not_yet_expired: return "NotYetExpired";
    case Errc::not_creator: return "NotCreator";
    case Errc::invalid_token: return "InvalidToken";
    case Errc::data_too_large: return "DataTooLarge";
    case Errc::handshake_failed: return "HandshakeFailed";
    case Errc::corrupt_log: return "CorruptLog";
    case Errc::config_error: return "ConfigError";
    case Errc::non_termination: return "NonTermination";
  }
  return "Unknown";
}

} // namespace gatesim
