#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twistlat/twisted_lattice.hpp"

namespace twistlat {

// v1, v2 with v1^T G v2 = 1 and v2^T G v2 = 0: the numerical shadow of
// (structure sheaf, skyscraper at a point) on a smooth projective surface.
struct PointPair {
  Vector3 v1{};
  Vector3 v2{};
  friend bool operator==(const PointPair&, const PointPair&) = default;
};

// Every u in (Z/modulus)^3 with u^T G u = 0 (mod modulus) has G u = 0 (mod divisor).
// Reducing an integral isotropic v2 shows G v2 is divisible by the divisor, so no
// v1 can reach pairing 1.
struct ModularCertificate {
  long modulus = 0;
  long divisor = 0;
  friend bool operator==(const ModularCertificate&, const ModularCertificate&) = default;
};

enum class VerdictKind { admits, obstructed, unknown };

struct ObstructionVerdict {
  VerdictKind kind = VerdictKind::unknown;
  std::optional<PointPair> pair;
  std::optional<ModularCertificate> certificate;
  long search_bound = 0;
  long max_modulus = 0;
  std::vector<long> moduli_tried;

  friend bool operator==(const ObstructionVerdict&, const ObstructionVerdict&) = default;
};

const char* to_string(VerdictKind kind);

// u^T G v
std::int64_t pairing(const Matrix3& gram, const Vector3& u, const Vector3& v);
Vector3 matrix_vector_product(const Matrix3& gram, const Vector3& v);

bool is_point_pair(const Matrix3& gram, const PointPair& pair);

// Candidates v2 in [-bound, bound]^3 are visited shell by shell in |x|+|y|+|z|,
// and within a shell in decreasing lexicographic order of (x, y, z). The first v2
// with v2^T G v2 = 0 and gcd(G v2) = 1 is returned together with a Bezout vector v1.
// With workers > 1 shells are distributed over threads; the result is the same.
// Requires 1 <= bound <= 10^6 and |G_ij| <= 10^12 (std::invalid_argument otherwise).
std::optional<PointPair> point_pair_search(const Matrix3& gram, long bound, unsigned workers = 1);

// Prime powers up to max_modulus, grouped by prime: 2, 4, 8, ..., 3, 9, ..., 5, 25, ...
std::vector<long> certificate_moduli(long max_modulus);

// First valid certificate along certificate_moduli, smallest divisor first.
// Requires 2 <= max_modulus <= 256.
std::optional<ModularCertificate> certificate_search(const Matrix3& gram, long max_modulus,
                                                     std::vector<long>* moduli_tried = nullptr);

// Exhaustive re-check of a certificate. Throws std::invalid_argument unless
// 2 <= divisor, divisor | modulus and modulus <= 256.
bool verify_certificate(const Matrix3& gram, const ModularCertificate& certificate);

ObstructionVerdict decide(const Matrix3& gram, long search_bound = 30, long max_modulus = 64,
                          unsigned workers = 1);

// Euler pairing on sqrt(td) * {1, h, pt} for the untwisted double plane of
// half branch degree d.
GramMatrix control_lattice(long d);

}  // namespace twistlat
