// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gatesim/bytes.hpp"
#include "gatesim/result.hpp"
#include "gatesim/sha256.hpp"

namespace gatesim {

/// The four key-pair roles a gateway deployment carries. Each role uses a
/// distinct pair; the sign() purpose check enforces the separation.
enum class KeyRole { VaspIdentity, GatewayIdentity, TransactionSigning, DeviceAttestation };

enum class SignPurpose { WireMessage, LedgerTransaction, CertificateIssue, Attestation, AuthorizationToken };

std::string_view to_string(KeyRole r);

struct KeyPair {
  KeyRole role = KeyRole::TransactionSigning;
  Bytes public_key;
  Bytes private_key;

  Digest key_digest() const { return sha256(public_key); }

  /// Deterministic derivation from a seed string; same seed, same pair.
  static KeyPair generate(KeyRole role, std::string_view seed);
};

/// Thrown when code signs with a key whose role does not match the purpose
/// (e.g. a wire message with a transaction-signing key). Always a caller bug.
struct RoleMisuseError : std::logic_error {
  using std::logic_error::logic_error;
};

Bytes sign(const KeyPair& kp, SignPurpose purpose, ByteView message);
bool verify(ByteView public_key, ByteView message, ByteView signature);

// --- certificates -----------------------------------------------------------

enum class CertRole { ConsortiumRoot, VaspIdentity, GatewayIdentity, TransactionSigning };

std::string_view to_string(CertRole r);

/// Extended-validation business fields carried on VASP certificates.
struct EvFields {
  std::string legal_name;
  std::string jurisdiction;
  std::string lei; // 20 alphanumeric characters

  bool well_formed() const;
};

struct Certificate {
  CertRole subject_role = CertRole::GatewayIdentity;
  Bytes subject_public_key;
  Digest issuer_key_digest;
  std::uint64_t serial = 0;
  std::optional<EvFields> ev;
  std::optional<Digest> binding; // gateway certs: digest of the owning VASP certificate
  Bytes signature;

  Digest subject_key_digest() const { return sha256(subject_public_key); }
  Bytes tbs() const;
  Bytes encode() const;
  Digest cert_digest() const { return sha256(encode()); }
  static Result<Certificate> decode(ByteView raw);
};

Result<Certificate> issue_certificate(const KeyPair& issuer, const Certificate* issuer_cert,
                                      ByteView subject_public_key, CertRole subject_role,
                                      std::optional<EvFields> ev, std::optional<Digest> binding,
                                      std::uint64_t serial);

/// Self-signed consortium root.
Certificate make_root_certificate(const KeyPair& root, std::uint64_t serial);

enum class ChainFailure { None, BadSignature, BrokenBinding, UntrustedRoot, RoleViolation };

std::string_view to_string(ChainFailure f);

struct ValidationReport {
  bool ok = false;
  ChainFailure failure_reason = ChainFailure::None;
  std::string detail;
  std::optional<Certificate> vasp_cert;
};

/// Chain is ordered leaf, VASP intermediate, root. Checks run in a fixed
/// order: trust anchor, role topology, signatures (root downward), binding.
ValidationReport validate_chain(std::span<const Certificate> chain,
                                const Digest& trust_root_key_digest);

// --- device attestation ------------------------------------------------------

/// Opaque signed claim over a platform measurement; only the signature is
/// checked, the measurement itself is not interpreted.
struct AttestationClaim {
  Digest measurement;
  Bytes nonce;
  Bytes device_public_key;
  Bytes signature;

  static AttestationClaim make(const KeyPair& device_key, const Digest& measurement, Bytes nonce);
  bool verify_signature() const;
};

// --- gateway discoverability --------------------------------------------------

/// Persistent identifier for a gateway device; survives crashes, restarts
/// and key rotation. The endpoint it maps to may change over time.
struct GatewayIdentifier {
  std::string id;
};

using EndpointId = std::string;

class ResolverRegistry {
public:
  void register_gateway(const GatewayIdentifier& gid, EndpointId endpoint);
  Result<EndpointId> resolve(const GatewayIdentifier& gid) const;
  Result<EndpointId> resolve(const std::string& id) const;

private:
  std::map<std::string, EndpointId> entries_;
};

} // namespace gatesim
