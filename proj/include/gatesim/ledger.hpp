// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gatesim/bytes.hpp"
#include "gatesim/codec.hpp"
#include "gatesim/identity.hpp"
#include "gatesim/result.hpp"
#include "gatesim/sha256.hpp"

namespace gatesim {

enum class AssetStatus { Active, Locked, Escrowed, Extinguished, Nonexistent };
enum class TxKind { Transfer, Escrow, PassiveLock, Disablement, Notification, Finalization };

std::string_view to_string(AssetStatus s);
std::string_view to_string(TxKind k);

/// Transaction id: the height of the block carrying it (one tx per block).
using TxId = std::uint64_t;

/// Destination recorded when a lock is made permanent: who receives the
/// asset, on which chain, via which remote gateway.
struct FinalRecord {
  Digest beneficiary_key;
  std::string dest_chain_id;
  Digest remote_gateway_key;

  void encode_onto(Encoder& e) const;
  static FinalRecord decode_from(Decoder& d);
};

/// from_key all-zero means issuance: the transfer creates the asset.
struct TransferPayload {
  Digest from_key;
  Digest to_key;
  std::string profile_id;
  std::uint64_t amount = 0;
};

struct EscrowPayload {
  Digest from_key;   // reversion owner
  Digest escrow_key; // temporary owner while escrowed
  Tick t_esc = 0;
};

struct PassiveLockPayload {
  Tick t_block = 0;
};

struct DisablementPayload {
  TxId lock_tx = 0;
  FinalRecord final_record;
};

/// Announces the impending arrival of an asset on the destination ledger.
struct NotificationPayload {
  std::string profile_id;
  Digest beneficiary_key;
  Digest evidence_digest;
  Tick t_block = 0;
};

/// Closes a Notification (regenerates the asset), an Escrow (extinguishes
/// it), or a Disablement (post-commit record of the asset's new location).
struct FinalizationPayload {
  TxId ref_tx = 0;
  Digest assertion_digest;
  Bytes assertion; // full assertion when it fits the block size budget
};

using TxPayload = std::variant<TransferPayload, EscrowPayload, PassiveLockPayload,
                               DisablementPayload, NotificationPayload, FinalizationPayload>;

struct LedgerTransaction {
  TxKind kind = TxKind::Transfer;
  std::string asset_id;
  Bytes issuer_public_key;
  Tick timestamp = 0; // tick at which the issuer built the transaction
  TxPayload payload;
  Bytes issuer_sig;

  Digest issuer_key() const { return sha256(issuer_public_key); }
  Bytes tbs() const;      // canonical bytes covered by issuer_sig
  Bytes encode() const;   // tbs + signature
  Digest digest() const { return sha256(encode()); }
  static Result<LedgerTransaction> decode(ByteView raw);
};

LedgerTransaction make_signed_tx(const KeyPair& issuer, TxKind kind, std::string asset_id,
                                 TxPayload payload, Tick now);

struct Block {
  std::uint64_t height = 0;
  Digest prev_hash;
  Digest header_hash;
  Tick confirm_tick = 0;
  LedgerTransaction tx;

  static Digest compute_header_hash(std::uint64_t height, const Digest& prev,
                                    const Digest& tx_digest);
};

struct ConfirmationReceipt {
  TxId tx_id = 0;
  std::uint64_t height = 0;
  Digest header_hash;
  std::uint32_t tx_index = 0;
  Tick confirm_tick = 0;
};

struct AssetView {
  AssetStatus status = AssetStatus::Nonexistent;
  Digest owner;
  std::string profile_id;
  std::uint64_t amount = 0;
};

/// Append-only single-chain ledger. One transaction per block; a block
/// submitted at tick s is confirmed at s + t_conf. Validation is performed
/// against the state the ledger will hold at the new block's confirmation
/// tick, so expiry races resolve strictly and deterministically.
class Ledger {
public:
  Ledger(std::string id, Tick confirmation_delay);

  const std::string& id() const { return id_; }
  Tick confirmation_delay() const { return t_conf_; }
  Tick now() const { return now_; }
  void advance_to(Tick t);

  void register_node_key(ByteView public_key);
  bool is_registered(const Digest& key_digest) const;

  Result<ConfirmationReceipt> append(LedgerTransaction tx);

  Result<TxId> passive_lock(const KeyPair& locker, const std::string& asset_id, Tick t_block);
  Result<TxId> disable(const KeyPair& issuer, TxId lock_tx, const FinalRecord& record);
  Result<TxId> escrow(const KeyPair& owner, const std::string& asset_id,
                      const Digest& escrow_key, Tick t_esc);
  Result<TxId> escrow_finalize(const KeyPair& escrow_holder, TxId escrow_tx);
  Result<TxId> notify_incoming(const KeyPair& issuer, const std::string& asset_id,
                               const std::string& profile_id, const Digest& beneficiary_key,
                               const Digest& evidence_digest, Tick t_block);
  Result<TxId> finalize_incoming(const KeyPair& issuer, TxId notification_tx,
                                 const Digest& assertion_digest, Bytes assertion = {});

  AssetStatus asset_status(const std::string& asset_id, Tick at) const;
  std::optional<AssetView> asset_view(const std::string& asset_id, Tick at) const;

  std::uint64_t height() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block* block_at(TxId height) const; // 1-based

  std::optional<TxId> find_tx_by_digest(const Digest& tx_digest) const;
  std::optional<TxId> find_tx_referencing(TxKind kind, TxId ref) const;

  /// One structured text line per confirmed transaction, for the run trace.
  static std::string trace_line(const std::string& ledger_id, const Block& b);

private:
  struct AssetState;
  struct LedgerView;

  LedgerView state_at(Tick at) const;
  Errc validate(const LedgerTransaction& tx, Tick effect_tick, std::string& why) const;

  std::string id_;
  Tick t_conf_;
  Tick now_ = 0;
  std::vector<Block> blocks_;
  std::map<Digest, Bytes> node_keys_;
};

} // namespace gatesim
